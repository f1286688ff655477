#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "../support/fixtures.hpp"
#include "thom/thom.hpp"

using namespace thom;

namespace {

// a pointed-set table that deliberately breaks commutation coherence:
// x0.a.b = * but x0.b.a = y (never passes validate_action; built raw)
PointedAction incoherent_action() {
    PointedAction a;
    a.alphabet = fixtures::a1();
    a.elements = {"x0", "x1", "y", "*"};
    a.base = 3;
    //            a  b
    a.act = {{1, 1},    // x0
             {2, 3},    // x1: a -> y, b -> *
             {3, 3},    // y
             {3, 3}};   // *
    return a;
}

}  // namespace

TEST_CASE("kset complex of the A2 chain set", "[chain_complex]") {
    ChainComplex cc = kset_complex(chain_set(fixtures::a2(), 0), 2);
    REQUIRE(cc.top_degree() == 2);
    REQUIRE(cc.dim(0) == 2);
    REQUIRE(cc.dim(1) == 4);
    REQUIRE(cc.dim(2) == 0);
    REQUIRE(cc.basis_labels[0] == std::vector<std::string>{"(x0,{})", "(*,{})"});
    REQUIRE(cc.basis_labels[1] ==
            std::vector<std::string>{"(x0,{a})", "(x0,{b})", "(*,{a})", "(*,{b})"});

    // d1(x0,{e}) = -[(*,{}) - (x0,{})]; base-point columns vanish
    REQUIRE(cc.boundary(1) == IntMatrix::from_rows({{1, 1, 0, 0}, {-1, -1, 0, 0}}));
}

TEST_CASE("kset complex of X_{-1} has zero boundaries", "[chain_complex]") {
    for (const auto& [name, alpha] : fixtures::battery()) {
        if (name == "RP2") continue;  // battery-wide run lives in acceptance
        ChainComplex cc = kset_complex(chain_set(alpha, -1));
        for (int n = 1; n <= cc.top_degree(); ++n) REQUIRE(cc.boundary(n).is_zero());
        // free on cliques
        auto hom = homology_all(cc);
        for (int k = 0; k <= cc.top_degree(); ++k) {
            REQUIRE(hom[k].torsion().empty());
            REQUIRE(hom[k].rank() == static_cast<long>(cliques(alpha, k).size()));
        }
    }
}

TEST_CASE("kset boundary signs on a 2-clique", "[chain_complex]") {
    ChainComplex cc = kset_complex(chain_set(fixtures::a1(), 0));
    REQUIRE(cc.top_degree() == 2);
    REQUIRE(cc.basis_labels[2] == std::vector<std::string>{"(x0,{a,b})", "(*,{a,b})"});
    // d2(x0,{a,b}) = (*,{a}) - (*,{b}) - (x0,{a}) + (x0,{b}); d2(*,{a,b}) = 0
    REQUIRE(cc.boundary(2) == IntMatrix::from_rows({{-1, 0}, {1, 0}, {1, 0}, {-1, 0}}));
}

TEST_CASE("reduced X_0 complex is the augmented clique complex", "[chain_complex]") {
    for (const auto& [name, alpha] : fixtures::battery()) {
        if (name == "RP2") continue;
        ChainComplex red = kset_complex(chain_set(alpha, 0), -1, Variant::reduced);
        ChainComplex aug = simplicial_chain_complex(clique_complex(alpha), true);
        REQUIRE(red.top_degree() == aug.top_degree());
        for (int n = 1; n <= red.top_degree(); ++n) REQUIRE(red.boundary(n) == aug.boundary(n));
    }
}

TEST_CASE("simplicial chain complexes", "[chain_complex]") {
    // hollow triangle: d1 is the incidence matrix of a 3-cycle
    ChainComplex cc = simplicial_chain_complex(builtin_complex("hollow_triangle"), false);
    REQUIRE(cc.dim(0) == 3);
    REQUIRE(cc.dim(1) == 3);
    REQUIRE(rank_rational(cc.boundary(1)) == 2);
    REQUIRE(render(homology_at(cc, 1)) == "Z");
    REQUIRE(render(homology_at(cc, 0)) == "Z");

    // single vertex, augmented: all homology vanishes
    ChainComplex av = simplicial_chain_complex(make_complex({"v"}, {}), true);
    for (int n = 0; n <= av.top_degree(); ++n) REQUIRE(homology_at(av, n).is_trivial());
}

TEST_CASE("differential identity holds exactly and fails loudly", "[chain_complex]") {
    for (const auto& [name, alpha] : fixtures::battery()) {
        if (name == "RP2") continue;
        for (int m : {-1, 0, 1}) {
            REQUIRE(verify_dd_zero(kset_complex(chain_set(alpha, m))).pass);
            REQUIRE(verify_dd_zero(kset_complex(chain_set(alpha, m), -1, Variant::reduced)).pass);
        }
        REQUIRE(verify_dd_zero(simplicial_chain_complex(clique_complex(alpha), true)).pass);
    }

    // corrupting one entry produces a witness
    ChainComplex cc = kset_complex(chain_set(fixtures::a1(), 0));
    cc.boundaries[1].at(0, 0) += 1;
    DdReport rep = verify_dd_zero(cc);
    REQUIRE_FALSE(rep.pass);
    REQUIRE(rep.degree == 1);
    REQUIRE(rep.row >= 0);
    REQUIRE(rep.col == 0);

    // a commutation-violating action must fail: on a 2-clique the composite
    // reduces to (x.e1e2) - (x.e2e1)
    DdReport bad = verify_dd_zero(kset_complex(incoherent_action()));
    REQUIRE_FALSE(bad.pass);
    REQUIRE(bad.degree == 1);
}

TEST_CASE("direct sums", "[chain_complex]") {
    ChainComplex zero;
    zero.basis_labels.push_back({});
    ChainComplex cc = kset_complex(chain_set(fixtures::a1(), 0));
    ChainComplex sum0 = direct_sum(cc, zero);
    REQUIRE(sum0.top_degree() == cc.top_degree());
    for (int n = 0; n <= cc.top_degree(); ++n) REQUIRE(sum0.dim(n) == cc.dim(n));
    for (int n = 1; n <= cc.top_degree(); ++n) REQUIRE(sum0.boundary(n) == cc.boundary(n));

    ChainComplex other = simplicial_chain_complex(builtin_complex("rp2_min"), true);
    ChainComplex sum = direct_sum(cc, other);
    for (int n = 0; n <= sum.top_degree(); ++n)
        REQUIRE(sum.dim(n) == cc.dim(n) + other.dim(n));
    REQUIRE(verify_dd_zero(sum).pass);

    // homology of the sum is the sum of homologies
    auto hl = homology_all(cc), hr = homology_all(other), hs = homology_all(sum);
    for (int n = 0; n <= sum.top_degree(); ++n) {
        FinAbGroup want = group_sum(n <= cc.top_degree() ? hl[n] : FinAbGroup{},
                                    n <= other.top_degree() ? hr[n] : FinAbGroup{});
        REQUIRE(group_eq(hs[n], want));
    }
}

TEST_CASE("unreduced homology splits off the base-point part", "[chain_complex]") {
    for (const auto& [name, alpha] : fixtures::battery()) {
        if (name == "RP2") continue;
        for (int m : {-1, 0, 1}) {
            PointedAction x = chain_set(alpha, m);
            auto unred = homology_all(kset_complex(x));
            auto red = homology_all(kset_complex(x, -1, Variant::reduced));
            for (size_t k = 0; k < unred.size(); ++k) {
                FinAbGroup base_part = FinAbGroup::free(
                    static_cast<long>(cliques(alpha, static_cast<int>(k)).size()));
                REQUIRE(group_eq(unred[k], group_sum(red[k], base_part)));
            }
        }
    }
}

TEST_CASE("homology_at", "[chain_complex]") {
    // 0 -> Z --(x2)--> Z -> 0
    ChainComplex cyc;
    cyc.basis_labels = {{"e0"}, {"e1"}};
    cyc.boundaries.push_back(IntMatrix::from_rows({{2}}));
    REQUIRE(render(homology_at(cyc, 0)) == "Z/2");
    REQUIRE(homology_at(cyc, 1).is_trivial());
    REQUIRE_THROWS_MATCHES(homology_at(cyc, 2), Error,
                           Catch::Matchers::MessageMatches(
                               Catch::Matchers::StartsWith("DegreeOutOfRange")));
    REQUIRE_THROWS_AS(homology_at(cyc, -1), Error);

    ChainComplex free_complex = kset_complex(chain_set(fixtures::a1(), -1));
    REQUIRE(render(homology_at(free_complex, 0)) == "Z");
    REQUIRE(render(homology_at(free_complex, 1)) == "Z^2");
    REQUIRE(render(homology_at(free_complex, 2)) == "Z");

    ChainComplex a2x0 = kset_complex(chain_set(fixtures::a2(), 0));
    REQUIRE(render(homology_at(a2x0, 0)) == "Z");
    REQUIRE(render(homology_at(a2x0, 1)) == "Z^3");

    // homology_at and homology_all agree
    for (const auto& [name, alpha] : fixtures::battery()) {
        if (name == "RP2") continue;
        ChainComplex cc = kset_complex(chain_set(alpha, 1));
        auto all = homology_all(cc);
        for (int n = 0; n <= cc.top_degree(); ++n) REQUIRE(homology_at(cc, n) == all[n]);
    }
}

TEST_CASE("matrix dump format", "[chain_complex]") {
    ChainComplex cc = kset_complex(chain_set(fixtures::a2(), 0), 1);
    std::ostringstream os;
    dump_matrices(cc, os);
    REQUIRE(os.str() ==
            "degree 1 rows 2 cols 4\n"
            "1 1 0 0\n"
            "-1 -1 0 0\n");
}
