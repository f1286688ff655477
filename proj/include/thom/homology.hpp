#pragma once

#include <string>
#include <vector>

#include "thom/chain_complex.hpp"
#include "thom/intlinalg.hpp"
#include "thom/simplicial.hpp"

namespace thom {

/**
 * H_n of a chain complex: rank = dim C_n - rank D_n - rank D_{n+1}, torsion
 * read off the Smith chain of D_{n+1}. D_0 and D_{top+1} are zero maps.
 */
inline FinAbGroup homology_at(const ChainComplex& cc, int n) {
    if (n < 0 || n > cc.top_degree())
        fail(errc::degree_out_of_range,
             "degree " + std::to_string(n) + " outside 0.." + std::to_string(cc.top_degree()));
    const int rn = (n >= 1) ? rank_rational(cc.boundary(n)) : 0;
    std::vector<Int> out_factors;
    int rn1 = 0;
    if (n + 1 <= cc.top_degree()) {
        out_factors = smith(cc.boundary(n + 1)).invariant_factors;
        rn1 = rank_rational(cc.boundary(n + 1));
    }
    return FinAbGroup::from_invariant_factors(cc.dim(n) - rn - rn1, out_factors);
}

/// All homology groups of a complex at once; each boundary's Smith form is
/// computed exactly once.
inline std::vector<FinAbGroup> homology_all(const ChainComplex& cc) {
    const int top = cc.top_degree();
    std::vector<std::vector<Int>> factors(top + 2);
    for (int n = 1; n <= top; ++n) factors[n] = smith(cc.boundary(n)).invariant_factors;
    std::vector<FinAbGroup> out;
    for (int n = 0; n <= top; ++n) {
        long rank = cc.dim(n) - static_cast<long>(factors[n].size()) -
                    static_cast<long>(factors[n + 1].size());
        out.push_back(FinAbGroup::from_invariant_factors(rank, factors[n + 1]));
    }
    return out;
}

/**
 * Reduced homology H~_0 .. H~_kmax of a simplicial complex, computed from
 * the augmented chain complex. Degrees beyond the dimension pad with the
 * trivial group; the empty complex has trivial reduced homology everywhere.
 */
inline std::vector<FinAbGroup> reduced_homology(const SimplicialComplex& sc, int kmax) {
    if (kmax < 0) fail(errc::degree_out_of_range, "reduced_homology needs kmax >= 0");
    std::vector<FinAbGroup> out(static_cast<size_t>(kmax) + 1);
    if (sc.empty()) return out;
    ChainComplex aug = simplicial_chain_complex(sc, /*augmented=*/true);
    std::vector<FinAbGroup> h = homology_all(aug);  // H~_k sits at degree k+1
    for (int k = 0; k <= kmax; ++k)
        if (k + 1 <= aug.top_degree()) out[k] = h[k + 1];
    return out;
}

/**
 * H_0 .. H_kmax of a pointed M(E,I)-set, zero-padded past the top clique
 * degree. The complex is built only as deep as needed.
 */
inline std::vector<FinAbGroup> action_homology(const PointedAction& action, int kmax,
                                               Variant variant = Variant::unreduced) {
    const int depth = std::min(kmax + 1, max_clique_size(action.alphabet));
    ChainComplex cc = kset_complex(action, depth, variant);
    std::vector<FinAbGroup> h = homology_all(cc);
    std::vector<FinAbGroup> out(static_cast<size_t>(kmax) + 1);
    for (int k = 0; k <= kmax && k <= cc.top_degree(); ++k) out[k] = h[k];
    return out;
}

/// Homology of the chain M(E,I)-set X_m over an alphabet.
inline std::vector<FinAbGroup> chain_homology(const IndependenceAlphabet& alpha, int m, int kmax,
                                              Variant variant = Variant::unreduced) {
    return action_homology(chain_set(alpha, m), kmax, variant);
}

}  // namespace thom
