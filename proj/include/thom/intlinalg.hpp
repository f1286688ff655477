#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "thom/errors.hpp"

namespace thom {

// Exact integers of unbounded magnitude. Intermediate Smith normal form
// entries can exceed any machine word even on small inputs.
using Int = boost::multiprecision::cpp_int;

/**
 * Dense matrix of exact integers, row-major. Zero-row / zero-column shapes
 * are legal everywhere.
 */
class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
        int r = static_cast<int>(rows.size());
        int c = r ? static_cast<int>(rows.begin()->size()) : 0;
        IntMatrix m(r, c);
        int i = 0;
        for (const auto& row : rows) {
            int j = 0;
            for (long v : row) m.at(i, j++) = v;
            ++i;
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Int& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    bool is_zero() const {
        for (const Int& v : a_)
            if (v != 0) return false;
        return true;
    }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    // Zero entries are skipped, so products of sparse boundary matrices stay
    // cheap despite the dense layout.
    IntMatrix operator*(const IntMatrix& b) const {
        if (cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        IntMatrix out(rows_, b.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Int& aik = at(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < b.cols_; ++j) {
                    const Int& bkj = b.at(k, j);
                    if (bkj != 0) out.at(i, j) += aik * bkj;
                }
            }
        return out;
    }

    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
    }
    void swap_cols(int i, int j) {
        if (i == j) return;
        for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
    }
    // row[dst] += q * row[src]
    void add_row_multiple(int dst, int src, const Int& q) {
        if (q == 0) return;
        for (int c = 0; c < cols_; ++c) at(dst, c) += q * at(src, c);
    }
    // col[dst] += q * col[src]
    void add_col_multiple(int dst, int src, const Int& q) {
        if (q == 0) return;
        for (int r = 0; r < rows_; ++r) at(r, dst) += q * at(r, src);
    }
    void negate_row(int r) {
        for (int c = 0; c < cols_; ++c) at(r, c) = -at(r, c);
    }

  private:
    int rows_, cols_;
    std::vector<Int> a_;
};

struct SmithForm {
    std::vector<Int> invariant_factors;  // d_1 | d_2 | ... | d_r, each >= 1
    bool has_transforms = false;
    IntMatrix u, v;  // u * A * v = diag(invariant_factors), both unimodular
};

namespace detail {

// Quotient q minimizing |a - q*b|; ties keep the truncated quotient.
inline Int round_quotient(const Int& a, const Int& b) {
    Int q = a / b;
    Int r = a - q * b;
    if (abs(r) * 2 > abs(b)) q += ((r < 0) == (b < 0)) ? 1 : -1;
    return q;
}

}  // namespace detail

/**
 * Smith normal form by unimodular row/column operations. Pivot rule: the
 * nonzero entry of minimal absolute value in the remaining submatrix, ties
 * broken row-major, so the computation is deterministic.
 */
inline SmithForm smith(const IntMatrix& a, bool want_transforms = false) {
    IntMatrix s = a;
    const int rows = s.rows(), cols = s.cols();
    SmithForm out;
    out.has_transforms = want_transforms;
    IntMatrix u, v;
    if (want_transforms) {
        u = IntMatrix::identity(rows);
        v = IntMatrix::identity(cols);
    }

    int t = 0;
    while (t < rows && t < cols) {
        // select pivot
        int pi = -1, pj = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j) {
                const Int& e = s.at(i, j);
                if (e == 0) continue;
                if (pi < 0 || abs(e) < abs(s.at(pi, pj))) {
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0) break;  // remaining submatrix is zero
        s.swap_rows(t, pi);
        s.swap_cols(t, pj);
        if (want_transforms) {
            u.swap_rows(t, pi);
            v.swap_cols(t, pj);
        }

        for (;;) {
            // Clear column t, swapping any nonzero remainder into the pivot
            // slot; |pivot| strictly shrinks on every swap, so this ends.
            bool stable = true;
            for (int i = t + 1; i < rows; ++i) {
                if (s.at(i, t) == 0) continue;
                Int q = detail::round_quotient(s.at(i, t), s.at(t, t));
                s.add_row_multiple(i, t, -q);
                if (want_transforms) u.add_row_multiple(i, t, -q);
                if (s.at(i, t) != 0) {
                    s.swap_rows(t, i);
                    if (want_transforms) u.swap_rows(t, i);
                    stable = false;
                }
            }
            if (!stable) continue;
            for (int j = t + 1; j < cols; ++j) {
                if (s.at(t, j) == 0) continue;
                Int q = detail::round_quotient(s.at(t, j), s.at(t, t));
                s.add_col_multiple(j, t, -q);
                if (want_transforms) v.add_col_multiple(j, t, -q);
                if (s.at(t, j) != 0) {
                    s.swap_cols(t, j);
                    if (want_transforms) v.swap_cols(t, j);
                    stable = false;
                }
            }
            if (!stable) continue;  // column swaps may repopulate column t

            // Pivot must divide the rest of the submatrix or the chain breaks.
            int bad = -1;
            for (int i = t + 1; i < rows && bad < 0; ++i)
                for (int j = t + 1; j < cols; ++j)
                    if (s.at(i, j) % s.at(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            s.add_row_multiple(t, bad, 1);
            if (want_transforms) u.add_row_multiple(t, bad, 1);
        }

        if (s.at(t, t) < 0) {
            s.negate_row(t);
            if (want_transforms) u.negate_row(t);
        }
        ++t;
    }

    for (int i = 0; i < t; ++i) out.invariant_factors.push_back(s.at(i, i));
    if (want_transforms) {
        out.u = std::move(u);
        out.v = std::move(v);
    }
    return out;
}

/**
 * Rank over the rationals via fraction-free (Bareiss) elimination; exact and
 * independent of the Smith normal form route.
 */
inline int rank_rational(const IntMatrix& a) {
    IntMatrix m = a;
    const int rows = m.rows(), cols = m.cols();
    Int prev = 1;
    int pr = 0;
    for (int pc = 0; pc < cols && pr < rows; ++pc) {
        int pivot = -1;
        for (int i = pr; i < rows; ++i)
            if (m.at(i, pc) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        m.swap_rows(pr, pivot);
        for (int i = pr + 1; i < rows; ++i) {
            for (int j = pc + 1; j < cols; ++j)
                m.at(i, j) = (m.at(pr, pc) * m.at(i, j) - m.at(i, pc) * m.at(pr, j)) / prev;
            m.at(i, pc) = 0;
        }
        prev = m.at(pr, pc);
        ++pr;
    }
    return pr;
}

/// Exact determinant of a square matrix (Bareiss).
inline Int determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) fail(errc::degree_out_of_range, "determinant needs a square matrix");
    const int n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return 0;
            m.swap_rows(k, pivot);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j)) / prev;
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

inline bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// Rank of the matrix over the field with p elements.
inline int rank_mod_p(const IntMatrix& a, long p) {
    if (!is_prime(p)) fail(errc::not_prime, "rank_mod_p needs a prime modulus, got " + std::to_string(p));
    const int rows = a.rows(), cols = a.cols();
    std::vector<std::vector<long>> m(rows, std::vector<long>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            Int r = a.at(i, j) % p;
            if (r < 0) r += p;
            m[i][j] = static_cast<long>(r);
        }
    int rank = 0;
    for (int pc = 0; pc < cols && rank < rows; ++pc) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (m[i][pc] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        for (int i = rank + 1; i < rows; ++i) {
            if (m[i][pc] == 0) continue;
            // eliminate via cross-multiplication; no inverse needed
            long f = m[i][pc], g = m[rank][pc];
            for (int j = pc; j < cols; ++j)
                m[i][j] = ((m[i][j] * g - m[rank][j] * f) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

/**
 * Canonical form of a finitely generated abelian group: free rank plus the
 * invariant-factor chain (each factor >= 2, consecutive factors dividing).
 * Construction rejects non-canonical input, so equality of values is group
 * isomorphism.
 */
class FinAbGroup {
  public:
    FinAbGroup() : rank_(0) {}

    static FinAbGroup make(long rank, std::vector<Int> torsion) {
        if (rank < 0) fail(errc::non_canonical_group, "negative rank");
        for (size_t i = 0; i < torsion.size(); ++i) {
            if (torsion[i] < 2)
                fail(errc::non_canonical_group, "torsion factor below 2");
            if (i + 1 < torsion.size() && torsion[i + 1] % torsion[i] != 0)
                fail(errc::non_canonical_group, "torsion factors not divisibility-chained");
        }
        FinAbGroup g;
        g.rank_ = rank;
        g.torsion_ = std::move(torsion);
        return g;
    }

    static FinAbGroup free(long rank) { return make(rank, {}); }

    // From a Smith chain: factors equal to 1 carry no torsion and are dropped.
    static FinAbGroup from_invariant_factors(long rank, const std::vector<Int>& factors) {
        std::vector<Int> tor;
        for (const Int& d : factors)
            if (d > 1) tor.push_back(d);
        return make(rank, std::move(tor));
    }

    long rank() const { return rank_; }
    const std::vector<Int>& torsion() const { return torsion_; }
    bool is_trivial() const { return rank_ == 0 && torsion_.empty(); }

    bool operator==(const FinAbGroup&) const = default;

  private:
    long rank_;
    std::vector<Int> torsion_;
};

namespace detail {

inline std::map<Int, int> prime_power_decompose(Int d) {
    std::map<Int, int> out;  // prime -> exponent
    for (Int f = 2; f * f <= d; ++f)
        while (d % f == 0) {
            ++out[f];
            d /= f;
        }
    if (d > 1) ++out[d];
    return out;
}

}  // namespace detail

/**
 * Direct sum. Ranks add; the torsion chains merge through the prime-power
 * decomposition and re-chain, so e.g. Z/2 + Z/3 canonicalizes to Z/6.
 */
inline FinAbGroup group_sum(const FinAbGroup& g1, const FinAbGroup& g2) {
    // prime -> exponents, descending
    std::map<Int, std::vector<int>> powers;
    for (const auto* g : {&g1, &g2})
        for (const Int& d : g->torsion())
            for (const auto& [p, e] : detail::prime_power_decompose(d)) powers[p].push_back(e);
    size_t chain_len = 0;
    for (auto& [p, es] : powers) {
        std::sort(es.begin(), es.end(), std::greater<int>());
        chain_len = std::max(chain_len, es.size());
    }
    // slot 0 holds the largest factor
    std::vector<Int> chain(chain_len, 1);
    for (const auto& [p, es] : powers)
        for (size_t i = 0; i < es.size(); ++i)
            for (int e = 0; e < es[i]; ++e) chain[i] *= p;
    std::reverse(chain.begin(), chain.end());
    return FinAbGroup::make(g1.rank() + g2.rank(), std::move(chain));
}

/// Canonical-form equality; by the structure theorem this is isomorphism.
inline bool group_eq(const FinAbGroup& g1, const FinAbGroup& g2) { return g1 == g2; }

/// Torsion subgroup: same chain, rank zero.
inline FinAbGroup torsion(const FinAbGroup& g) { return FinAbGroup::make(0, g.torsion()); }

/// Bit-exact rendering: "0" | "Z^b" | "Z/d" terms joined by " + ", e.g.
/// "Z^3 + Z/2 + Z/4"; "Z" abbreviates "Z^1".
inline std::string render(const FinAbGroup& g) {
    std::vector<std::string> parts;
    if (g.rank() == 1) parts.push_back("Z");
    else if (g.rank() > 1) parts.push_back("Z^" + std::to_string(g.rank()));
    for (const Int& d : g.torsion()) parts.push_back("Z/" + d.str());
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
    return out;
}

}  // namespace thom
