#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "thom/alphabet.hpp"
#include "thom/errors.hpp"
#include "thom/util.hpp"

namespace thom {

/**
 * Finite abstract simplicial complex, stored as named vertices plus the
 * antichain of maximal faces (vertex index lists, strictly increasing).
 * Every declared vertex is a face, so isolated vertices appear as singleton
 * maximal faces. The face set is the downward closure of the maximal faces.
 */
struct SimplicialComplex {
    std::vector<std::string> vertices;
    std::vector<std::vector<int>> maximal_faces;

    bool empty() const { return vertices.empty(); }

    // -1 for the empty complex
    int dimension() const {
        int d = -1;
        for (const auto& f : maximal_faces) d = std::max(d, static_cast<int>(f.size()) - 1);
        return d;
    }

    int vertex_index(const std::string& name) const {
        for (size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i] == name) return static_cast<int>(i);
        fail(errc::unknown_vertex, "no vertex named '" + name + "'");
    }

    std::string face_label(const std::vector<int>& f) const {
        std::string out = "{";
        for (size_t i = 0; i < f.size(); ++i) {
            if (i) out += ",";
            out += vertices[f[i]];
        }
        return out + "}";
    }

    bool operator==(const SimplicialComplex&) const = default;
};

/**
 * Normalizes vertex names and generating faces into a complex: faces sort,
 * non-maximal generators drop out, uncovered vertices become singletons.
 */
inline SimplicialComplex make_complex(const std::vector<std::string>& vertex_names,
                                      const std::vector<std::vector<std::string>>& face_gens) {
    SimplicialComplex sc;
    std::map<std::string, int> index;
    for (const auto& n : vertex_names) {
        if (index.count(n)) fail(errc::duplicate_vertex, "vertex '" + n + "' declared twice");
        index[n] = static_cast<int>(sc.vertices.size());
        sc.vertices.push_back(n);
    }
    std::set<std::vector<int>> gens;
    for (const auto& face : face_gens) {
        std::vector<int> f;
        for (const auto& n : face) {
            auto it = index.find(n);
            if (it == index.end()) fail(errc::unknown_vertex, "face references unknown vertex '" + n + "'");
            f.push_back(it->second);
        }
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            fail(errc::syntax_error, "face repeats a vertex");
        if (!f.empty()) gens.insert(std::move(f));
    }
    std::set<int> covered;
    for (const auto& f : gens) covered.insert(f.begin(), f.end());
    for (int v = 0; v < static_cast<int>(sc.vertices.size()); ++v)
        if (!covered.count(v)) gens.insert({v});
    for (const auto& f : gens) {
        bool maximal = true;
        for (const auto& g : gens)
            if (f != g && std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                maximal = false;
                break;
            }
        if (maximal) sc.maximal_faces.push_back(f);
    }
    return sc;
}

/// Downward closure of the maximal faces, ordered by (cardinality, lex).
inline std::vector<std::vector<int>> all_faces(const SimplicialComplex& sc) {
    std::set<std::vector<int>> out;
    for (const auto& f : sc.maximal_faces) {
        const size_t n = f.size();
        for (size_t mask = 1; mask < (size_t(1) << n); ++mask) {
            std::vector<int> sub;
            for (size_t b = 0; b < n; ++b)
                if (mask & (size_t(1) << b)) sub.push_back(f[b]);
            out.insert(std::move(sub));
        }
    }
    std::vector<std::vector<int>> faces(out.begin(), out.end());
    std::sort(faces.begin(), faces.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return faces;
}

/// The k-vertex faces, lexicographic in vertex order. k = 0 is the empty
/// face (present whenever the complex is nonempty).
inline std::vector<std::vector<int>> faces(const SimplicialComplex& sc, int k) {
    if (k < 0) fail(errc::degree_out_of_range, "faces needs k >= 0");
    if (k == 0) return sc.empty() ? std::vector<std::vector<int>>{} : std::vector<std::vector<int>>{{}};
    std::vector<std::vector<int>> out;
    for (const auto& f : all_faces(sc))
        if (static_cast<int>(f.size()) == k) out.push_back(f);
    return out;
}

/// Face counts by vertex count: counts[k] = #k-vertex faces, k >= 1.
inline std::vector<long> face_counts(const SimplicialComplex& sc) {
    std::vector<long> counts(static_cast<size_t>(sc.dimension() + 2), 0);
    for (const auto& f : all_faces(sc)) ++counts[f.size()];
    return counts;
}

/**
 * The clique (flag) complex of the commutation graph: vertices are the
 * generators, faces the cliques, maximal faces the maximal cliques.
 */
inline SimplicialComplex clique_complex(const IndependenceAlphabet& alpha) {
    SimplicialComplex sc;
    sc.vertices = alpha.generators();
    for (const auto& c : maximal_cliques(alpha)) sc.maximal_faces.push_back(c.members);
    std::sort(sc.maximal_faces.begin(), sc.maximal_faces.end());
    return sc;
}

/**
 * Barycentric subdivision: one vertex per nonempty face (named by joining
 * the member names with '.'), one face per chain of faces under strict
 * inclusion. The result is always a flag complex.
 */
inline SimplicialComplex barycentric_subdivision(const SimplicialComplex& sc) {
    if (sc.empty()) fail(errc::empty_complex, "cannot subdivide the empty complex");
    auto fs = all_faces(sc);
    std::map<std::vector<int>, int> face_id;
    std::vector<std::string> names;
    for (const auto& f : fs) {
        std::vector<std::string> members;
        for (int v : f) members.push_back(sc.vertices[v]);
        face_id[f] = static_cast<int>(names.size());
        names.push_back(util::join(members.begin(), members.end(), "."));
    }
    // maximal chains: complete flags from a singleton up to a maximal face
    std::vector<std::vector<std::string>> chains;
    std::vector<int> chain;
    auto rec = [&](auto&& self, const std::vector<int>& top) -> void {
        chain.push_back(face_id.at(top));
        bool extended = false;
        for (const auto& g : fs) {
            if (g.size() != top.size() + 1) continue;
            if (std::includes(g.begin(), g.end(), top.begin(), top.end())) {
                extended = true;
                self(self, g);
            }
        }
        if (!extended) {
            std::vector<std::string> named;
            for (int id : chain) named.push_back(names[id]);
            chains.push_back(std::move(named));
        }
        chain.pop_back();
    };
    for (const auto& f : fs)
        if (f.size() == 1) rec(rec, f);
    return make_complex(names, chains);
}

/// True iff the complex equals the clique complex of its own 1-skeleton.
inline bool is_flag(const SimplicialComplex& sc) {
    auto fs = all_faces(sc);
    std::set<std::vector<int>> face_set(fs.begin(), fs.end());
    const int n = static_cast<int>(sc.vertices.size());
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (const auto& f : fs)
        if (f.size() == 2) adj[f[0]][f[1]] = adj[f[1]][f[0]] = 1;
    // every clique of the skeleton must be a face; cliques of size <= 2 are
    // faces by construction
    bool ok = true;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (!ok) return;
        if (cur.size() >= 3 && !face_set.count(cur)) {
            ok = false;
            return;
        }
        for (int v = start; v < n && ok; ++v) {
            bool joined = true;
            for (int m : cur)
                if (!adj[m][v]) {
                    joined = false;
                    break;
                }
            if (!joined) continue;
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return ok;
}

/// Inverse of clique_complex on flag complexes: generators are the vertices,
/// commuting pairs the edges.
inline IndependenceAlphabet to_alphabet(const SimplicialComplex& sc) {
    if (!is_flag(sc)) fail(errc::not_flag, "complex is not the clique complex of its 1-skeleton");
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& f : all_faces(sc))
        if (f.size() == 2) pairs.emplace_back(sc.vertices[f[0]], sc.vertices[f[1]]);
    return validate_alphabet(sc.vertices, pairs);
}

/**
 * Named example complexes. rp2_min is the 6-vertex triangulation of the
 * real projective plane (antipodal quotient of the icosahedron).
 */
inline SimplicialComplex builtin_complex(const std::string& name) {
    auto mk = [](int nverts, std::vector<std::vector<std::string>> faces) {
        std::vector<std::string> vs;
        for (int i = 1; i <= nverts; ++i) vs.push_back(std::to_string(i));
        return make_complex(vs, faces);
    };
    if (name == "delta2") return mk(3, {{"1", "2", "3"}});
    if (name == "hollow_triangle") return mk(3, {{"1", "2"}, {"1", "3"}, {"2", "3"}});
    if (name == "cycle4") return mk(4, {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"1", "4"}});
    if (name == "two_points") return mk(2, {});
    if (name == "rp2_min")
        return mk(6, {{"1", "2", "3"}, {"1", "3", "4"}, {"1", "4", "5"}, {"1", "5", "6"},
                      {"1", "2", "6"}, {"2", "3", "5"}, {"3", "5", "6"}, {"3", "4", "6"},
                      {"2", "4", "6"}, {"2", "4", "5"}});
    fail(errc::unknown_name, "no builtin complex named '" + name + "'");
}

/**
 * Parses the complex text format:
 *   vertices: 1 2 3
 *   face: 1 2 3
 * Faces listed are generators; downward closure is implied.
 */
inline SimplicialComplex parse_complex(const std::string& text) {
    std::vector<std::string> vertices;
    std::vector<std::vector<std::string>> faces;
    for (const auto& [lineno, line] : util::logical_lines(text)) {
        const int ln = lineno;  // clang < 16 cannot capture structured bindings
        auto at = [&](const std::string& msg) { return "line " + std::to_string(ln) + ": " + msg; };
        if (line.rfind("vertices:", 0) == 0) {
            for (auto& tok : util::split_ws(line.substr(9))) vertices.push_back(tok);
        } else if (line.rfind("face:", 0) == 0) {
            auto toks = util::split_ws(line.substr(5));
            if (toks.empty()) fail(errc::syntax_error, at("face: expects at least one vertex"));
            faces.push_back(toks);
        } else {
            fail(errc::syntax_error, at("expected 'vertices:' or 'face:' statement"));
        }
    }
    return make_complex(vertices, faces);
}

inline std::string serialize_complex(const SimplicialComplex& sc) {
    std::string out = "vertices:";
    for (const auto& v : sc.vertices) out += " " + v;
    out += "\n";
    for (const auto& f : sc.maximal_faces) {
        out += "face:";
        for (int v : f) out += " " + sc.vertices[v];
        out += "\n";
    }
    return out;
}

}  // namespace thom
