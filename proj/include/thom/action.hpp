#pragma once

#include <map>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "thom/alphabet.hpp"
#include "thom/errors.hpp"

namespace thom {

/**
 * A finite pointed right M(E,I)-set: elements with a distinguished base
 * point and a per-generator transition table. validate_action checks the
 * monoid-action laws (base fixed, commutation coherence, totality);
 * constructions here only ever hand out validated values, which are
 * immutable by convention and safe to share.
 */
struct PointedAction {
    IndependenceAlphabet alphabet;
    std::vector<std::string> elements;  // distinct; includes the base point
    int base = 0;                       // index into elements
    std::vector<std::vector<int>> act;  // act[element][generator] -> element

    int size() const { return static_cast<int>(elements.size()); }

    int element_index(const std::string& name) const {
        for (int i = 0; i < size(); ++i)
            if (elements[i] == name) return i;
        fail(errc::unknown_element, "no element named '" + name + "'");
    }

    int apply(int x, int gen) const { return act[x][gen]; }

    int apply_word(int x, std::span<const int> word) const {
        for (int gen : word) x = act[x][gen];
        return x;
    }

    bool operator==(const PointedAction&) const = default;
};

/**
 * Builds and validates an action from (element, generator, target) entries.
 * Entry order is irrelevant; transitions on the base point may be omitted
 * and default to fixing it.
 */
inline PointedAction validate_action(
    const IndependenceAlphabet& alpha, const std::vector<std::string>& elements,
    const std::string& base,
    const std::vector<std::tuple<std::string, std::string, std::string>>& entries) {
    PointedAction a;
    a.alphabet = alpha;
    a.elements = elements;
    std::map<std::string, int> index;
    for (int i = 0; i < a.size(); ++i) {
        if (index.count(elements[i]))
            fail(errc::duplicate_element, "element '" + elements[i] + "' declared twice");
        index[elements[i]] = i;
    }
    auto elem = [&](const std::string& n) {
        auto it = index.find(n);
        if (it == index.end()) fail(errc::unknown_element, "no element named '" + n + "'");
        return it->second;
    };
    a.base = elem(base);
    a.act.assign(a.size(), std::vector<int>(alpha.size(), -1));
    for (int g = 0; g < alpha.size(); ++g) a.act[a.base][g] = a.base;

    for (const auto& [x, e, y] : entries) {
        int xi = elem(x), yi = elem(y), g = alpha.index(e);
        if (xi == a.base) {
            if (yi != a.base)
                fail(errc::base_moved, "act(" + x + "," + e + ") = " + y + " moves the base point");
            continue;
        }
        if (a.act[xi][g] != -1 && a.act[xi][g] != yi)
            fail(errc::duplicate_entry, "conflicting entries for act(" + x + "," + e + ")");
        a.act[xi][g] = yi;
    }
    for (int x = 0; x < a.size(); ++x)
        for (int g = 0; g < alpha.size(); ++g)
            if (a.act[x][g] == -1)
                fail(errc::missing_entry,
                     "act(" + elements[x] + "," + alpha.name(g) + ") is undefined");

    // commutation coherence: x.e.f = x.f.e for every commuting pair
    for (const auto& [e, f] : alpha.pairs())
        for (int x = 0; x < a.size(); ++x)
            if (a.act[a.act[x][e]][f] != a.act[a.act[x][f]][e])
                fail(errc::commutation_violation,
                     "witness (" + elements[x] + "," + alpha.name(e) + "," + alpha.name(f) +
                         "): the two orders disagree");
    return a;
}

/**
 * The chain action X_n: elements x_0..x_n plus the base point, every
 * generator stepping x_i to x_{i+1}, x_n to *, and * to *. n = -1 is the
 * one-point set.
 */
inline PointedAction chain_set(const IndependenceAlphabet& alpha, int n) {
    if (n < -1) fail(errc::degree_out_of_range, "chain_set needs n >= -1");
    PointedAction a;
    a.alphabet = alpha;
    for (int i = 0; i <= n; ++i) a.elements.push_back("x" + std::to_string(i));
    a.elements.push_back("*");
    a.base = n + 1;
    a.act.assign(a.size(), std::vector<int>(alpha.size(), a.base));
    for (int i = 0; i < n; ++i)
        for (int g = 0; g < alpha.size(); ++g) a.act[i][g] = i + 1;
    return a;
}

/// Same elements and base point, action restricted to a sub-alphabet.
inline PointedAction restrict_action(const PointedAction& action, const IndependenceAlphabet& sub) {
    std::vector<std::string> names = sub.generators();
    for (const auto& n : names)
        if (!action.alphabet.has(n))
            fail(errc::not_a_subalphabet, "generator '" + n + "' is not in the action's alphabet");
    if (!(restrict_alphabet(action.alphabet, names) == sub))
        fail(errc::not_a_subalphabet, "commutation relation differs from the induced sub-alphabet");
    PointedAction a;
    a.alphabet = sub;
    a.elements = action.elements;
    a.base = action.base;
    a.act.assign(a.size(), std::vector<int>(sub.size(), -1));
    for (int g = 0; g < sub.size(); ++g) {
        int src = action.alphabet.index(sub.name(g));
        for (int x = 0; x < a.size(); ++x) a.act[x][g] = action.act[x][src];
    }
    return a;
}

/**
 * Parses the action text format (the alphabet comes from context):
 *   elements: x0 x1 *
 *   base: *
 *   act x0 a x1
 * Base transitions may be omitted; they default to fixed.
 */
inline PointedAction parse_action(const std::string& text, const IndependenceAlphabet& alpha) {
    std::vector<std::string> elements;
    std::string base;
    bool have_base = false;
    std::vector<std::tuple<std::string, std::string, std::string>> entries;
    for (const auto& [lineno, line] : util::logical_lines(text)) {
        const int ln = lineno;  // clang < 16 cannot capture structured bindings
        auto at = [&](const std::string& msg) { return "line " + std::to_string(ln) + ": " + msg; };
        if (line.rfind("elements:", 0) == 0) {
            for (auto& tok : util::split_ws(line.substr(9))) elements.push_back(tok);
        } else if (line.rfind("base:", 0) == 0) {
            auto toks = util::split_ws(line.substr(5));
            if (toks.size() != 1) fail(errc::syntax_error, at("base: expects exactly one element"));
            base = toks[0];
            have_base = true;
        } else if (line.rfind("act", 0) == 0) {
            auto toks = util::split_ws(line.substr(3));
            if (toks.size() != 3) fail(errc::syntax_error, at("act expects: element generator target"));
            entries.emplace_back(toks[0], toks[1], toks[2]);
        } else {
            fail(errc::syntax_error, at("expected 'elements:', 'base:' or 'act' statement"));
        }
    }
    if (!have_base) fail(errc::syntax_error, "missing 'base:' statement");
    return validate_action(alpha, elements, base, entries);
}

/// Canonical form: elements, base, then act lines for non-base elements in
/// element-then-generator order.
inline std::string serialize_action(const PointedAction& a) {
    std::string out = "elements:";
    for (const auto& n : a.elements) out += " " + n;
    out += "\nbase: " + a.elements[a.base] + "\n";
    for (int x = 0; x < a.size(); ++x) {
        if (x == a.base) continue;
        for (int g = 0; g < a.alphabet.size(); ++g)
            out += "act " + a.elements[x] + " " + a.alphabet.name(g) + " " +
                   a.elements[a.act[x][g]] + "\n";
    }
    return out;
}

}  // namespace thom
