#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "thom/alphabet.hpp"
#include "thom/homology.hpp"
#include "thom/util.hpp"

namespace thom {

struct TheoremRecord {
    int m;  // chain-set index (the disjoint-union size n for THM3)
    int k;  // homology degree
    FinAbGroup lhs, rhs;
    bool pass;
};

/**
 * Outcome of checking one of the decomposition statements on a concrete
 * instance: both sides per degree, rendered canonically, plus the overall
 * conjunction. Reports are deterministic and bit-identical across runs.
 */
struct TheoremReport {
    std::string theorem;   // "THM1" | "THM2" | "THM3" | "COR"
    std::string instance;  // e.g. "alpha=A2" or "alphas=a+b n=0"
    bool show_m = true;    // whether machine lines carry an m= field
    bool asserted = true;  // THM3 gathers evidence without asserting
    std::vector<TheoremRecord> records;
    bool pass = true;

    void add(TheoremRecord rec) {
        pass = pass && rec.pass;
        records.push_back(std::move(rec));
    }
};

/**
 * H_k(X_{m+1}) vs H_k(X_m) + H~_{k-1} of the clique complex, for
 * k = 1..kmax. Both sides are canonical forms, so equality is isomorphism.
 */
inline TheoremReport check_thm1(const IndependenceAlphabet& alpha, const std::string& name,
                                int m, int kmax) {
    if (m < -1) fail(errc::degree_out_of_range, "check_thm1 needs m >= -1");
    if (kmax < 1) fail(errc::degree_out_of_range, "check_thm1 needs kmax >= 1");
    TheoremReport rep;
    rep.theorem = "THM1";
    rep.instance = "alpha=" + name;
    std::vector<FinAbGroup> lhs, rhs0, clq;
    util::run_parallel({
        [&] { lhs = chain_homology(alpha, m + 1, kmax); },
        [&] { rhs0 = chain_homology(alpha, m, kmax); },
        [&] { clq = reduced_homology(clique_complex(alpha), kmax - 1); },
    });
    for (int k = 1; k <= kmax; ++k) {
        FinAbGroup r = group_sum(rhs0[k], clq[k - 1]);
        rep.add({m, k, lhs[k], r, group_eq(lhs[k], r)});
    }
    return rep;
}

/// Tor H_k(X_{m+1}) vs Tor H_k(X_m) + Tor H_k(X_0), k = 1..kmax.
inline TheoremReport check_corollary(const IndependenceAlphabet& alpha, const std::string& name,
                                     int m, int kmax) {
    if (m < -1) fail(errc::degree_out_of_range, "check_corollary needs m >= -1");
    if (kmax < 1) fail(errc::degree_out_of_range, "check_corollary needs kmax >= 1");
    TheoremReport rep;
    rep.theorem = "COR";
    rep.instance = "alpha=" + name;
    std::vector<FinAbGroup> lhs, rhs0, rhsz;
    util::run_parallel({
        [&] { lhs = chain_homology(alpha, m + 1, kmax); },
        [&] { rhs0 = chain_homology(alpha, m, kmax); },
        [&] { rhsz = chain_homology(alpha, 0, kmax); },
    });
    for (int k = 1; k <= kmax; ++k) {
        FinAbGroup l = torsion(lhs[k]);
        FinAbGroup r = group_sum(torsion(rhs0[k]), torsion(rhsz[k]));
        rep.add({m, k, l, r, group_eq(l, r)});
    }
    return rep;
}

/// H_1(X_m) must be free for every m in -1..mmax.
inline TheoremReport check_thm2(const IndependenceAlphabet& alpha, const std::string& name,
                                int mmax) {
    TheoremReport rep;
    rep.theorem = "THM2";
    rep.instance = "alpha=" + name;
    const FinAbGroup trivial;
    std::vector<std::vector<FinAbGroup>> hom(static_cast<size_t>(mmax + 2));
    std::vector<std::function<void()>> tasks;
    for (int m = -1; m <= mmax; ++m)
        tasks.push_back([&, m] { hom[m + 1] = chain_homology(alpha, m, 1); });
    util::run_parallel(tasks);
    for (int m = -1; m <= mmax; ++m) {
        FinAbGroup tor1 = torsion(hom[m + 1][1]);
        rep.add({m, 1, tor1, trivial, group_eq(tor1, trivial)});
    }
    return rep;
}

/**
 * H_k over the disjoint-union alphabet with the uniform chain action vs the
 * direct sum over the components. Evidence-gathering only: the report's
 * pass flags are informational and nothing is asserted.
 */
inline TheoremReport check_thm3(const std::vector<IndependenceAlphabet>& comps,
                                const std::vector<std::string>& names, int n, int kmax) {
    if (kmax < 1) fail(errc::degree_out_of_range, "check_thm3 needs kmax >= 1");
    std::vector<std::string> all_names;
    std::vector<std::pair<std::string, std::string>> all_pairs;
    std::set<std::string> seen;
    for (const auto& comp : comps)
        for (const auto& g : comp.generators()) {
            if (!seen.insert(g).second)
                fail(errc::name_clash, "generator '" + g + "' appears in two components");
            all_names.push_back(g);
        }
    for (const auto& comp : comps)
        for (const auto& [i, j] : comp.pairs())
            all_pairs.emplace_back(comp.name(i), comp.name(j));
    IndependenceAlphabet whole = validate_alphabet(all_names, all_pairs);

    TheoremReport rep;
    rep.theorem = "THM3";
    rep.instance = "alphas=" + util::join(names.begin(), names.end(), "+") + " n=" + std::to_string(n);
    rep.show_m = false;
    rep.asserted = false;

    PointedAction chain = chain_set(whole, n);
    std::vector<FinAbGroup> lhs;
    std::vector<std::vector<FinAbGroup>> per_comp(comps.size());
    std::vector<std::function<void()>> tasks;
    tasks.push_back([&] {
        const int depth = std::min(kmax + 1, max_clique_size(whole));
        lhs = homology_all(kset_complex(chain, depth));
        lhs.resize(static_cast<size_t>(kmax) + 1);
    });
    for (size_t i = 0; i < comps.size(); ++i)
        tasks.push_back([&, i] {
            PointedAction restricted = restrict_action(chain, comps[i]);
            const int depth = std::min(kmax + 1, max_clique_size(comps[i]));
            per_comp[i] = homology_all(kset_complex(restricted, depth));
            per_comp[i].resize(static_cast<size_t>(kmax) + 1);
        });
    util::run_parallel(tasks);

    for (int k = 1; k <= kmax; ++k) {
        FinAbGroup rhs;
        for (const auto& h : per_comp) rhs = group_sum(rhs, h[k]);
        rep.add({n, k, lhs[k], rhs, group_eq(lhs[k], rhs)});
    }
    return rep;
}

/// One line per record: `THM1 alpha=A2 m=-1 k=1 lhs=Z^3 rhs=Z^3 pass=1`.
inline std::string render_machine(const TheoremReport& rep) {
    std::string out;
    for (const auto& r : rep.records) {
        out += rep.theorem + " " + rep.instance;
        if (rep.show_m) out += " m=" + std::to_string(r.m);
        out += " k=" + std::to_string(r.k) + " lhs=" + render(r.lhs) + " rhs=" + render(r.rhs) +
               " pass=" + (r.pass ? "1" : "0") + "\n";
    }
    return out;
}

inline std::string render_text(const TheoremReport& rep) {
    std::string out = rep.theorem + " " + rep.instance + "\n";
    for (const auto& r : rep.records) {
        out += "  ";
        if (rep.show_m) out += "m=" + std::to_string(r.m) + " ";
        out += "k=" + std::to_string(r.k) + ": lhs = " + render(r.lhs) + ", rhs = " + render(r.rhs) +
               (r.pass ? "  [ok]" : "  [MISMATCH]") + "\n";
    }
    out += rep.asserted ? (rep.pass ? "overall: PASS\n" : "overall: FAIL\n")
                        : (rep.pass ? "overall: agreement (informational)\n"
                                    : "overall: mismatch recorded (informational)\n");
    return out;
}

struct BatteryEntry {
    std::string name;
    std::string path;
};

/// Manifest format: one `<name> <path>` pair per line, '#' comments.
inline std::vector<BatteryEntry> parse_battery_manifest(const std::string& text) {
    std::vector<BatteryEntry> out;
    for (const auto& [lineno, line] : util::logical_lines(text)) {
        auto toks = util::split_ws(line);
        if (toks.size() != 2)
            fail(errc::syntax_error,
                 "line " + std::to_string(lineno) + ": expected '<name> <path>'");
        out.push_back({toks[0], toks[1]});
    }
    return out;
}

}  // namespace thom
