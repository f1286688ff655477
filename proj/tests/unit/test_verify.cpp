#include <catch2/catch_amalgamated.hpp>

#include "../support/fixtures.hpp"
#include "thom/thom.hpp"

using namespace thom;

TEST_CASE("theorem 1 on pinned instances", "[verify]") {
    TheoremReport rep = check_thm1(fixtures::a1(), "A1", -1, 1);
    REQUIRE(rep.pass);
    REQUIRE(rep.records.size() == 1);
    REQUIRE(render(rep.records[0].lhs) == "Z^2");
    REQUIRE(render(rep.records[0].rhs) == "Z^2");

    rep = check_thm1(fixtures::a2(), "A2", -1, 1);
    REQUIRE(rep.pass);
    REQUIRE(render(rep.records[0].lhs) == "Z^3");
    REQUIRE(render_machine(rep) == "THM1 alpha=A2 m=-1 k=1 lhs=Z^3 rhs=Z^3 pass=1\n");

    // degrees beyond max clique size + 1: both sides vanish
    rep = check_thm1(fixtures::a1(), "A1", 0, 6);
    REQUIRE(rep.pass);
    for (const auto& r : rep.records)
        if (r.k > 3) {
            REQUIRE(r.lhs.is_trivial());
            REQUIRE(r.rhs.is_trivial());
        }

    REQUIRE_THROWS_AS(check_thm1(fixtures::a1(), "A1", -1, 0), Error);
    REQUIRE_THROWS_AS(check_thm1(fixtures::a1(), "A1", -2, 1), Error);
}

TEST_CASE("theorem 1 across the small battery", "[verify]") {
    for (const auto& [name, alpha] : fixtures::battery()) {
        if (name == "RP2") continue;  // full grid incl. RP2 runs in acceptance
        for (int m : {-1, 0, 1})
            REQUIRE(check_thm1(alpha, name, m, 3).pass);
    }
}

TEST_CASE("corollary on pinned instances", "[verify]") {
    for (int m : {-1, 0, 1, 2}) {
        TheoremReport rep = check_corollary(fixtures::a1(), "A1", m, 3);
        REQUIRE(rep.pass);
        for (const auto& r : rep.records) {
            REQUIRE(r.lhs.is_trivial());  // contractible clique complex: no torsion anywhere
            REQUIRE(r.rhs.is_trivial());
        }
    }
    for (const auto& [name, alpha] : fixtures::battery()) {
        if (name == "RP2") continue;
        TheoremReport rep = check_corollary(alpha, name, 0, 3);
        REQUIRE(rep.pass);
        REQUIRE(rep.records[0].lhs.is_trivial());  // k=1: H_1 is free (theorem 2)
    }
}

TEST_CASE("theorem 2 torsion-freeness of H_1", "[verify]") {
    TheoremReport rep = check_thm2(fixtures::a1(), "A1", 2);
    REQUIRE(rep.pass);
    REQUIRE(rep.records.size() == 4);  // m = -1..2
    REQUIRE(rep.records[0].m == -1);
    REQUIRE(rep.records[3].m == 2);

    // vacuous on the empty alphabet
    REQUIRE(check_thm2(validate_alphabet({}, {}), "empty", 1).pass);
}

TEST_CASE("theorem 3 harness reports the documented mismatch", "[verify]") {
    IndependenceAlphabet ea = validate_alphabet({"a"}, {});
    IndependenceAlphabet eb = validate_alphabet({"b"}, {});
    TheoremReport rep = check_thm3({ea, eb}, {"a", "b"}, 0, 1);
    REQUIRE_FALSE(rep.asserted);
    REQUIRE_FALSE(rep.pass);
    REQUIRE(render(rep.records[0].lhs) == "Z^3");
    REQUIRE(render(rep.records[0].rhs) == "Z^2");
    REQUIRE(render_machine(rep) == "THM3 alphas=a+b n=0 k=1 lhs=Z^3 rhs=Z^2 pass=0\n");

    // single component: lhs and rhs coincide by construction
    TheoremReport single = check_thm3({fixtures::a1()}, {"A1"}, 0, 3);
    REQUIRE(single.pass);

    // degrees beyond every clique dimension agree at 0 = 0
    TheoremReport high = check_thm3({ea, eb}, {"a", "b"}, 0, 4);
    REQUIRE(high.records.back().lhs.is_trivial());
    REQUIRE(high.records.back().rhs.is_trivial());
    REQUIRE(high.records.back().pass);

    REQUIRE_THROWS_MATCHES(check_thm3({ea, ea}, {"a", "a"}, 0, 1), Error,
                           Catch::Matchers::MessageMatches(
                               Catch::Matchers::StartsWith("NameClash")));
}

TEST_CASE("reports are deterministic", "[verify]") {
    std::string once = render_machine(check_thm1(fixtures::c4(), "C4", 0, 3));
    std::string twice = render_machine(check_thm1(fixtures::c4(), "C4", 0, 3));
    REQUIRE(once == twice);
    std::string text = render_text(check_thm1(fixtures::c4(), "C4", 0, 3));
    REQUIRE(text.find("overall: PASS") != std::string::npos);
}

TEST_CASE("battery manifest parsing", "[verify]") {
    auto entries = parse_battery_manifest("# battery\nA1 a1.alpha\nRP2 rp2_subdivision.alpha\n");
    REQUIRE(entries.size() == 2);
    REQUIRE(entries[0].name == "A1");
    REQUIRE(entries[1].path == "rp2_subdivision.alpha");
    REQUIRE_THROWS_AS(parse_battery_manifest("just-one-token\n"), Error);
}

TEST_CASE("iterated theorem 1 pins the torsion growth", "[verify]") {
    // Tor H_k(X_m) = (m+1) copies of Tor H~_{k-1}(E,M). On C4 the clique
    // complex is the hollow cycle (torsion-free), so everything stays
    // trivial; over the subdivided projective plane H~_1 = Z/2 replicates.
    for (int m : {-1, 0, 1, 2}) {
        auto hom = chain_homology(fixtures::c4(), m, 3);
        for (const auto& g : hom) REQUIRE(g.torsion().empty());
    }
    IndependenceAlphabet rp2 = fixtures::rp2_alphabet();
    for (int m : {0, 1, 2}) {
        FinAbGroup tor2 = torsion(chain_homology(rp2, m, 2)[2]);
        REQUIRE(group_eq(tor2, FinAbGroup::make(0, std::vector<Int>(m + 1, 2))));
    }
}
