#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "thom/action.hpp"
#include "thom/alphabet.hpp"
#include "thom/intlinalg.hpp"
#include "thom/simplicial.hpp"

namespace thom {

/**
 * Graded free abelian groups with integer boundary matrices and labeled
 * bases. boundary(n) maps degree n to degree n-1, so it has shape
 * dim(n-1) x dim(n), and D_n * D_{n+1} = 0 (checkable via verify_dd_zero).
 */
struct ChainComplex {
    std::vector<std::vector<std::string>> basis_labels;  // degree 0..top
    std::vector<IntMatrix> boundaries;                   // boundaries[n-1] = D_n

    int top_degree() const { return static_cast<int>(basis_labels.size()) - 1; }
    int dim(int n) const {
        return (n >= 0 && n <= top_degree()) ? static_cast<int>(basis_labels[n].size()) : 0;
    }
    const IntMatrix& boundary(int n) const { return boundaries[n - 1]; }
};

enum class Variant { unreduced, reduced };

/**
 * The clique-indexed chain complex of a pointed M(E,I)-set. Degree-n basis:
 * pairs (x, c) with c an n-clique, element-major with the base point last.
 * The unreduced variant runs x over all elements; the reduced variant drops
 * the base point and every boundary term landing on it. Boundary of (x, c)
 * with c = {e_1 < ... < e_n}:
 *
 *   d(x, c) = sum_{i=1..n} (-1)^i [ (x.e_i, c \ e_i) - (x, c \ e_i) ]
 *
 * kmax defaults to the alphabet's maximal clique size; all higher chain
 * groups vanish, so that choice computes complete homology.
 */
inline ChainComplex kset_complex(const PointedAction& action, int kmax = -1,
                                 Variant variant = Variant::unreduced) {
    const IndependenceAlphabet& alpha = action.alphabet;
    if (kmax < 0) kmax = max_clique_size(alpha);

    // element order: declaration order, base last (absent when reduced)
    std::vector<int> xs;
    for (int x = 0; x < action.size(); ++x)
        if (x != action.base) xs.push_back(x);
    if (variant == Variant::unreduced) xs.push_back(action.base);
    std::vector<int> xpos(action.size(), -1);
    for (size_t i = 0; i < xs.size(); ++i) xpos[xs[i]] = static_cast<int>(i);

    ChainComplex cc;
    std::vector<std::vector<Clique>> cl(kmax + 1);
    std::vector<std::map<std::vector<int>, int>> cl_index(kmax + 1);
    for (int n = 0; n <= kmax; ++n) {
        cl[n] = cliques(alpha, n);
        for (size_t i = 0; i < cl[n].size(); ++i) cl_index[n][cl[n][i].members] = static_cast<int>(i);
        std::vector<std::string> labels;
        for (int x : xs)
            for (const Clique& c : cl[n])
                labels.push_back("(" + action.elements[x] + "," + c.label(alpha) + ")");
        cc.basis_labels.push_back(std::move(labels));
    }

    for (int n = 1; n <= kmax; ++n) {
        const int ncl = static_cast<int>(cl[n].size());
        const int ncl_prev = static_cast<int>(cl[n - 1].size());
        IntMatrix d(static_cast<int>(xs.size()) * ncl_prev, static_cast<int>(xs.size()) * ncl);
        auto row_of = [&](int x, int face_idx) { return xpos[x] * ncl_prev + face_idx; };
        for (size_t xi = 0; xi < xs.size(); ++xi) {
            const int x = xs[xi];
            for (int ci = 0; ci < ncl; ++ci) {
                const int col = static_cast<int>(xi) * ncl + ci;
                const std::vector<int>& c = cl[n][ci].members;
                for (int i = 1; i <= n; ++i) {
                    std::vector<int> face = c;
                    face.erase(face.begin() + (i - 1));
                    const int fi = cl_index[n - 1].at(face);
                    const int sign = (i % 2) ? -1 : 1;
                    const int y = action.apply(x, c[i - 1]);
                    if (!(variant == Variant::reduced && y == action.base))
                        d.at(row_of(y, fi), col) += sign;
                    d.at(row_of(x, fi), col) -= sign;
                }
            }
        }
        cc.boundaries.push_back(std::move(d));
    }
    return cc;
}

/**
 * Chain complex of a simplicial complex, boundaries alternating-sign in
 * vertex order. augmented = true uses cardinality grading with the empty
 * face in degree 0 (the usual degree -1 augmentation, re-indexed up by one);
 * augmented = false shifts down so that degree k carries the (k+1)-vertex
 * faces and H_k of the result is simplicial H_k.
 */
inline ChainComplex simplicial_chain_complex(const SimplicialComplex& sc, bool augmented) {
    // cardinality grading first: degree n = n-vertex faces, degree 0 = {}
    const int slots = sc.dimension() + 2;  // dimension() is -1 when empty
    std::vector<std::vector<std::vector<int>>> by_card(static_cast<size_t>(slots));
    for (const auto& f : all_faces(sc)) by_card[f.size()].push_back(f);
    if (!sc.empty()) by_card[0].push_back({});

    ChainComplex aug;
    std::vector<std::map<std::vector<int>, int>> index(by_card.size());
    for (size_t n = 0; n < by_card.size(); ++n) {
        std::vector<std::string> labels;
        for (size_t i = 0; i < by_card[n].size(); ++i) {
            index[n][by_card[n][i]] = static_cast<int>(i);
            labels.push_back(sc.face_label(by_card[n][i]));
        }
        aug.basis_labels.push_back(std::move(labels));
    }
    for (size_t n = 1; n < by_card.size(); ++n) {
        IntMatrix d(static_cast<int>(by_card[n - 1].size()), static_cast<int>(by_card[n].size()));
        for (size_t ci = 0; ci < by_card[n].size(); ++ci) {
            const auto& f = by_card[n][ci];
            for (size_t i = 1; i <= n; ++i) {
                std::vector<int> face = f;
                face.erase(face.begin() + (i - 1));
                d.at(index[n - 1].at(face), static_cast<int>(ci)) += (i % 2) ? 1 : -1;
            }
        }
        aug.boundaries.push_back(std::move(d));
    }
    if (augmented) return aug;

    ChainComplex sh;
    for (size_t n = 1; n < aug.basis_labels.size(); ++n) sh.basis_labels.push_back(aug.basis_labels[n]);
    if (sh.basis_labels.empty()) sh.basis_labels.push_back({});
    for (size_t n = 1; n < aug.boundaries.size(); ++n) sh.boundaries.push_back(aug.boundaries[n]);
    return sh;
}

/// Block-diagonal boundaries, concatenated bases.
inline ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b) {
    ChainComplex out;
    const int top = std::max(a.top_degree(), b.top_degree());
    for (int n = 0; n <= top; ++n) {
        std::vector<std::string> labels;
        if (n <= a.top_degree()) labels.insert(labels.end(), a.basis_labels[n].begin(), a.basis_labels[n].end());
        if (n <= b.top_degree()) labels.insert(labels.end(), b.basis_labels[n].begin(), b.basis_labels[n].end());
        out.basis_labels.push_back(std::move(labels));
    }
    for (int n = 1; n <= top; ++n) {
        const int ra = a.dim(n - 1), rb = b.dim(n - 1);
        const int ca = a.dim(n), cb = b.dim(n);
        IntMatrix d(ra + rb, ca + cb);
        if (n <= a.top_degree())
            for (int i = 0; i < ra; ++i)
                for (int j = 0; j < ca; ++j) d.at(i, j) = a.boundary(n).at(i, j);
        if (n <= b.top_degree())
            for (int i = 0; i < rb; ++i)
                for (int j = 0; j < cb; ++j) d.at(ra + i, ca + j) = b.boundary(n).at(i, j);
        out.boundaries.push_back(std::move(d));
    }
    return out;
}

struct DdReport {
    bool pass = true;
    int degree = -1, row = -1, col = -1;  // first failing entry of D_n * D_{n+1}
};

/// Exact integer check of the differential identity D_n * D_{n+1} = 0.
inline DdReport verify_dd_zero(const ChainComplex& cc) {
    for (int n = 1; n + 1 <= cc.top_degree(); ++n) {
        IntMatrix prod = cc.boundary(n) * cc.boundary(n + 1);
        for (int i = 0; i < prod.rows(); ++i)
            for (int j = 0; j < prod.cols(); ++j)
                if (prod.at(i, j) != 0) return DdReport{false, n, i, j};
    }
    return DdReport{};
}

/// Debug / oracle dump: per degree a dense matrix as whitespace-separated
/// rows preceded by "degree n rows r cols c".
inline void dump_matrices(const ChainComplex& cc, std::ostream& os) {
    for (int n = 1; n <= cc.top_degree(); ++n) {
        const IntMatrix& d = cc.boundary(n);
        os << "degree " << n << " rows " << d.rows() << " cols " << d.cols() << "\n";
        for (int i = 0; i < d.rows(); ++i) {
            for (int j = 0; j < d.cols(); ++j) os << (j ? " " : "") << d.at(i, j);
            os << "\n";
        }
    }
}

}  // namespace thom
