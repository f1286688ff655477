#pragma once

// Shared instances and independent cross-checks for the test suites.

#include <random>
#include <string>
#include <vector>

#include "thom/thom.hpp"

namespace fixtures {

inline thom::IndependenceAlphabet a1() { return thom::validate_alphabet({"a", "b"}, {{"a", "b"}}); }
inline thom::IndependenceAlphabet a2() { return thom::validate_alphabet({"a", "b"}, {}); }
inline thom::IndependenceAlphabet a3() {
    return thom::validate_alphabet({"a", "b", "c"}, {{"a", "b"}});
}
inline thom::IndependenceAlphabet c4() {
    return thom::validate_alphabet({"a", "b", "c", "d"},
                                   {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
}
inline thom::IndependenceAlphabet k4() {
    return thom::validate_alphabet(
        {"a", "b", "c", "d"},
        {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "d"}});
}

/// The 31-generator alphabet of the subdivided projective plane; its clique
/// complex carries 2-torsion in degree 1.
inline thom::IndependenceAlphabet rp2_alphabet() {
    return thom::to_alphabet(thom::barycentric_subdivision(thom::builtin_complex("rp2_min")));
}

struct Named {
    std::string name;
    thom::IndependenceAlphabet alpha;
};

/// The standard battery the acceptance criteria quantify over.
inline std::vector<Named> battery() {
    return {{"A1", a1()},  {"A2", a2()},  {"A3", a3()},
            {"C4", c4()},  {"K4", k4()},  {"RP2", rp2_alphabet()}};
}

/// dim_p H_k(C (x) F_p) from mod-p ranks alone; independent of the Smith
/// normal form route.
inline long dim_p_homology(const thom::ChainComplex& cc, int k, long p) {
    long d = cc.dim(k);
    if (k >= 1 && k <= cc.top_degree()) d -= thom::rank_mod_p(cc.boundary(k), p);
    if (k + 1 <= cc.top_degree()) d -= thom::rank_mod_p(cc.boundary(k + 1), p);
    return d;
}

/// Universal-coefficient count: dim_p H_k(F_p) must equal
/// rank H_k + #{p | d : d in tor H_k} + #{p | d : d in tor H_{k-1}}.
inline bool uct_consistent(const thom::ChainComplex& cc,
                           const std::vector<thom::FinAbGroup>& hom, long p) {
    auto p_torsion_count = [&](int k) {
        if (k < 0 || k > cc.top_degree()) return 0L;
        long c = 0;
        for (const thom::Int& d : hom[k].torsion())
            if (d % p == 0) ++c;
        return c;
    };
    for (int k = 0; k <= cc.top_degree(); ++k) {
        long expected = hom[k].rank() + p_torsion_count(k) + p_torsion_count(k - 1);
        if (dim_p_homology(cc, k, p) != expected) return false;
    }
    return true;
}

inline long euler_from_dims(const thom::ChainComplex& cc) {
    long chi = 0;
    for (int k = 0; k <= cc.top_degree(); ++k) chi += (k % 2 ? -1 : 1) * cc.dim(k);
    return chi;
}

inline long euler_from_homology(const std::vector<thom::FinAbGroup>& hom) {
    long chi = 0;
    for (size_t k = 0; k < hom.size(); ++k) chi += (k % 2 ? -1 : 1) * hom[k].rank();
    return chi;
}

}  // namespace fixtures
