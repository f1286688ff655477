#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "thom/errors.hpp"
#include "thom/util.hpp"

namespace thom {

/**
 * An independence alphabet (E,I): an ordered list of generators plus an
 * irreflexive symmetric commutation relation between them. Declaration
 * order is the fixed total order used for clique sorting and boundary
 * signs everywhere downstream. Immutable after validation.
 */
class IndependenceAlphabet {
  public:
    int size() const { return static_cast<int>(gens_.size()); }
    const std::vector<std::string>& generators() const { return gens_; }
    const std::string& name(int i) const { return gens_[i]; }

    int index(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) fail(errc::unknown_generator, "no generator named '" + name + "'");
        return it->second;
    }
    bool has(const std::string& name) const { return index_.count(name) != 0; }

    bool commutes(int i, int j) const { return adj_[i][j] != 0; }

    // unordered pairs as (i,j) with i<j, lexicographic
    std::vector<std::pair<int, int>> pairs() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 0; i < size(); ++i)
            for (int j = i + 1; j < size(); ++j)
                if (adj_[i][j]) out.emplace_back(i, j);
        return out;
    }

    bool operator==(const IndependenceAlphabet& o) const {
        return gens_ == o.gens_ && adj_ == o.adj_;
    }

    friend IndependenceAlphabet validate_alphabet(const std::vector<std::string>&,
                                                  const std::vector<std::pair<std::string, std::string>>&);

  private:
    std::vector<std::string> gens_;
    std::map<std::string, int> index_;
    std::vector<std::vector<char>> adj_;
};

/**
 * Validates generator names and commuting pairs into an alphabet.
 * Pair order and duplicate pairs normalize away; {e,e} violates
 * irreflexivity.
 */
inline IndependenceAlphabet validate_alphabet(
    const std::vector<std::string>& names,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
    IndependenceAlphabet a;
    for (const auto& n : names) {
        if (a.index_.count(n)) fail(errc::duplicate_generator, "generator '" + n + "' declared twice");
        a.index_[n] = static_cast<int>(a.gens_.size());
        a.gens_.push_back(n);
    }
    a.adj_.assign(names.size(), std::vector<char>(names.size(), 0));
    for (const auto& [x, y] : pairs) {
        int i = a.index(x);
        int j = a.index(y);
        if (i == j) fail(errc::self_pair, "pair {" + x + "," + y + "} violates irreflexivity");
        a.adj_[i][j] = a.adj_[j][i] = 1;
    }
    return a;
}

/**
 * A set of pairwise-commuting generators, kept strictly increasing in
 * alphabet order. The empty clique is the unique 0-clique.
 */
struct Clique {
    std::vector<int> members;  // generator indices, strictly increasing

    bool operator==(const Clique&) const = default;

    std::string label(const IndependenceAlphabet& alpha) const {
        std::string out = "{";
        for (size_t i = 0; i < members.size(); ++i) {
            if (i) out += ",";
            out += alpha.name(members[i]);
        }
        return out + "}";
    }
};

/**
 * All n-element cliques of the commutation graph, in lexicographic order of
 * member indices. n = 0 yields the single empty clique.
 */
inline std::vector<Clique> cliques(const IndependenceAlphabet& alpha, int n) {
    std::vector<Clique> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == n) {
            out.push_back(Clique{cur});
            return;
        }
        for (int g = start; g < alpha.size(); ++g) {
            bool ok = true;
            for (int m : cur)
                if (!alpha.commutes(m, g)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(g);
            self(self, g + 1);
            cur.pop_back();
        }
    };
    if (n >= 0) rec(rec, 0);
    return out;
}

inline int max_clique_size(const IndependenceAlphabet& alpha) {
    int n = 0;
    while (n < alpha.size() && !cliques(alpha, n + 1).empty()) ++n;
    return n;
}

/// Cliques with no commuting extension; the maximal faces of the clique complex.
inline std::vector<Clique> maximal_cliques(const IndependenceAlphabet& alpha) {
    std::vector<Clique> out;
    for (int n = max_clique_size(alpha); n >= 1; --n) {
        for (Clique& c : cliques(alpha, n)) {
            bool maximal = true;
            for (int g = 0; g < alpha.size() && maximal; ++g) {
                if (std::binary_search(c.members.begin(), c.members.end(), g)) continue;
                bool extends = true;
                for (int m : c.members)
                    if (!alpha.commutes(m, g)) {
                        extends = false;
                        break;
                    }
                if (extends) maximal = false;
            }
            if (maximal) out.push_back(std::move(c));
        }
    }
    return out;
}

/**
 * Partition of the generators into connected components of the commutation
 * graph. Components are ordered by their smallest member, members ascending.
 */
inline std::vector<std::vector<int>> components(const IndependenceAlphabet& alpha) {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(alpha.size(), 0);
    for (int s = 0; s < alpha.size(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int g = stack.back();
            stack.pop_back();
            comp.push_back(g);
            for (int h = 0; h < alpha.size(); ++h)
                if (!seen[h] && alpha.commutes(g, h)) {
                    seen[h] = 1;
                    stack.push_back(h);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

/// Induced sub-alphabet on a subset of generators; order inherited.
inline IndependenceAlphabet restrict_alphabet(const IndependenceAlphabet& alpha,
                                              const std::vector<std::string>& subset) {
    std::set<int> keep;
    for (const auto& n : subset) keep.insert(alpha.index(n));
    std::vector<std::string> names;
    for (int i : keep) names.push_back(alpha.name(i));
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int i : keep)
        for (int j : keep)
            if (i < j && alpha.commutes(i, j)) pairs.emplace_back(alpha.name(i), alpha.name(j));
    return validate_alphabet(names, pairs);
}

/**
 * Parses the alphabet text format:
 *   generators: a b c
 *   commute: a b
 * '#' starts a comment; symmetry is implied and repeated pairs are idempotent.
 */
inline IndependenceAlphabet parse_alphabet(const std::string& text) {
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& [lineno, line] : util::logical_lines(text)) {
        const int ln = lineno;  // clang < 16 cannot capture structured bindings
        auto at = [&](const std::string& msg) { return "line " + std::to_string(ln) + ": " + msg; };
        if (line.rfind("generators:", 0) == 0) {
            for (auto& tok : util::split_ws(line.substr(11))) names.push_back(tok);
        } else if (line.rfind("commute:", 0) == 0) {
            auto toks = util::split_ws(line.substr(8));
            if (toks.size() != 2) fail(errc::syntax_error, at("commute: expects exactly two generators"));
            pairs.emplace_back(toks[0], toks[1]);
        } else {
            fail(errc::syntax_error, at("expected 'generators:' or 'commute:' statement"));
        }
    }
    return validate_alphabet(names, pairs);
}

inline std::string serialize_alphabet(const IndependenceAlphabet& alpha) {
    std::string out = "generators:";
    for (const auto& n : alpha.generators()) out += " " + n;
    out += "\n";
    for (const auto& [i, j] : alpha.pairs())
        out += "commute: " + alpha.name(i) + " " + alpha.name(j) + "\n";
    return out;
}

}  // namespace thom
