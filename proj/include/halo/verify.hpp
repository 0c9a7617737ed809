#pragma once

#include "halo/moduli.hpp"
#include "halo/polygons.hpp"
#include "halo/polytope.hpp"
#include "halo/tubing_poset.hpp"

#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace halo::verify {

struct CheckRow {
    std::string name;
    bool ok = true;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckRow> rows;

    bool ok() const {
        for (const auto& r : rows)
            if (!r.ok) return false;
        return true;
    }

    void add(std::string name, bool ok, std::string detail = "") {
        rows.push_back({std::move(name), ok, std::move(detail)});
    }
};

namespace detail {

inline long long catalan(int n) {
    std::vector<long long> c{1};
    for (int k = 0; k < n; ++k) {
        long long s = 0;
        for (int i = 0; i <= k; ++i) s += c[i] * c[k - i];
        c.push_back(s);
    }
    return c[n];
}

inline std::vector<Graph> family_matrix(int n) {
    std::vector<Graph> graphs = {Graph::path(n), Graph::star(n), Graph::complete(n)};
    if (n >= 2) graphs.push_back(Graph::cycle(n));
    return graphs;
}

/// All connected labeled graphs on nodes 1..n.
inline std::vector<Graph> all_connected_graphs(int n) {
    std::vector<std::pair<int, int>> all_edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) all_edges.emplace_back(i, j);
    std::vector<Graph> out;
    for (unsigned long mask = 0; mask < (1ul << all_edges.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t e = 0; e < all_edges.size(); ++e)
            if (mask & (1ul << e)) edges.push_back(all_edges[e]);
        try {
            out.emplace_back(n, std::move(edges));
        } catch (const std::invalid_argument&) {
            // disconnected; skip
        }
    }
    return out;
}

inline std::string fvec_str(const std::vector<long long>& f) {
    std::string s;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(f[i]);
    }
    return s;
}

}  // namespace detail

/// Maximal tubings of paths are counted by the Catalan numbers.
inline SuiteResult suite_catalan(int bound = 6) {
    SuiteResult res{"catalan", {}};
    for (int n = 1; n <= bound; ++n) {
        const auto got = maximal_tubings(Graph::path(n), PolytopeKind::Associahedron).size();
        const auto want = static_cast<std::size_t>(detail::catalan(n));
        res.add("catalan path(" + std::to_string(n) + ")", got == want,
                "count " + std::to_string(got) + ", expected " + std::to_string(want));
    }
    return res;
}

/// |CG| = |KG| + 1 + n on paths, cycles, stars, and complete graphs.
inline SuiteResult suite_facet_count(int bound = 6) {
    SuiteResult res{"facet-count", {}};
    for (int n = 1; n <= bound; ++n) {
        for (const auto& g : detail::family_matrix(n)) {
            const auto kg = enumerate_tubes(g).size();
            const auto cg = enumerate_design_tubes(g).size();
            res.add("facet count " + g.name(), cg == kg + 1 + static_cast<std::size_t>(n),
                    "|CG|=" + std::to_string(cg) + " |KG|=" + std::to_string(kg));
        }
    }
    return res;
}

/// Facets of Y_n: one cyclohedron, n associahedra, n^2-n products.
inline SuiteResult suite_facet_decomp(int bound = 5) {
    SuiteResult res{"facet-decomp", {}};
    for (int n = 2; n <= bound; ++n) {
        const Graph g = Graph::cycle(n);
        int cyclo = 0, assoc = 0, prod = 0;
        for (const auto& d : enumerate_design_tubes(g)) {
            switch (cycle_facet_type(g, d).kind) {
                case FacetType::Kind::Cyclohedron: ++cyclo; break;
                case FacetType::Kind::Associahedron: ++assoc; break;
                case FacetType::Kind::Product: ++prod; break;
            }
        }
        std::ostringstream detail;
        detail << cyclo << " + " << assoc << " + " << prod;
        res.add("facet decomposition Y_" + std::to_string(n),
                cyclo == 1 && assoc == n && prod == n * n - n && (1 + n + n * n - n == n * n + 1),
                detail.str());
    }
    return res;
}

/// CG(path n) = K_{n+2} via the explicit tube map.
inline SuiteResult suite_path_bijection(int bound = 5) {
    SuiteResult res{"path-bijection", {}};
    for (int n = 1; n <= bound; ++n) {
        const auto rep = certify_path_design_bijection(n);
        res.add("CG(path " + std::to_string(n) + ") = K_" + std::to_string(n + 2), rep.ok,
                rep.detail);
    }
    return res;
}

/// Geometric truncation builds match their tubing posets.
inline SuiteResult suite_realization(int kg_bound = 4, int cg_bound = 3) {
    SuiteResult res{"realization", {}};
    for (int n = 1; n <= kg_bound; ++n) {
        for (const auto& g : detail::all_connected_graphs(n)) {
            const auto rep = certify_realization(g, PolytopeKind::Associahedron, kg_bound);
            std::string name = "KG " + g.name();
            if (!g.is_path() && !g.is_cycle()) {
                name += " edges=";
                name += std::to_string(g.edges().size());
                std::ostringstream enc;
                for (const auto& [a, b] : g.edges()) enc << a << b;
                name += ":" + enc.str();
            }
            res.add(name, rep.ok, rep.ok ? detail::fvec_str(rep.f_vector) : rep.detail);
        }
    }
    for (int n = 1; n <= cg_bound; ++n) {
        std::vector<Graph> graphs = {Graph::path(n)};
        if (n >= 2) graphs.push_back(Graph::cycle(n));
        if (n >= 3) graphs.push_back(Graph::star(n));
        for (const auto& g : graphs) {
            const auto rep = certify_realization(g, PolytopeKind::Cubeahedron, cg_bound);
            res.add("CG " + g.name(), rep.ok,
                    rep.ok ? detail::fvec_str(rep.f_vector) : rep.detail);
        }
    }
    // The 3-cube truncation sequence lands on 10 facets, 16 vertices, 24 edges.
    const auto y3 = certify_realization(Graph::cycle(3), PolytopeKind::Cubeahedron, 3);
    res.add("Y_3 truncation counts",
            y3.ok && y3.facet_count == 10 && y3.f_vector == std::vector<long long>{16, 24, 10},
            detail::fvec_str(y3.f_vector));
    return res;
}

/// Polygon models against tubing posets: A(n) vs paths, B(n) vs cyclohedra, C(n) vs halohedra.
inline SuiteResult suite_polygon_iso(int a_hi = 7, int bc_hi = 4) {
    SuiteResult res{"polygon-iso", {}};
    for (int n = 4; n <= a_hi; ++n) {
        const auto rep = polygon_tubing_iso(PolygonModel::A, n);
        res.add("A(" + std::to_string(n) + ") = KG(path " + std::to_string(n - 2) + ")", rep.ok,
                rep.detail);
    }
    for (int n = 2; n <= bc_hi; ++n) {
        const auto rep = polygon_tubing_iso(PolygonModel::B, n);
        res.add("B(" + std::to_string(n) + ") = W_" + std::to_string(n), rep.ok, rep.detail);
    }
    for (int n = 2; n <= bc_hi; ++n) {
        const auto rep = polygon_tubing_iso(PolygonModel::C, n);
        res.add("C(" + std::to_string(n) + ") = Y_" + std::to_string(n), rep.ok, rep.detail);
    }
    return res;
}

/// Exhaustive classification scan: the polytopal signatures up to the dimension bound
/// are exactly the seven families, with valid reasons and dimensions elsewhere.
inline SuiteResult suite_classifier(int dim_bound = 4) {
    SuiteResult res{"classifier", {}};
    std::set<std::string> expected;
    expected.insert(SurfaceSignature{0, 0, 3, {}}.str());
    expected.insert(SurfaceSignature{0, 1, 2, {0}}.str());
    expected.insert(SurfaceSignature{0, 2, 1, {0, 0}}.str());
    expected.insert(SurfaceSignature{0, 3, 0, {0, 0, 0}}.str());
    for (int m = 3; m - 3 <= dim_bound; ++m) expected.insert(SurfaceSignature{0, 1, 0, {m}}.str());
    for (int m = 1; m - 1 <= dim_bound; ++m) expected.insert(SurfaceSignature{0, 1, 1, {m}}.str());
    for (int m = 1; m <= dim_bound; ++m) {
        expected.insert(SurfaceSignature{0, 2, 0, {m, 0}}.str());
        expected.insert(SurfaceSignature{0, 2, 0, {0, m}}.str());
    }

    std::set<std::string> polytopal;
    bool dims_ok = true, reasons_ok = true, two_loop_ok = true, rank_ok = true;
    std::string first_bad;
    for (const auto& s : enumerate_signatures(dim_bound)) {
        if (!is_stable(s)) continue;
        if (dimension(s) > dim_bound) continue;
        if (dimension(s) != 6 * s.g + 3 * s.h - 6 + 2 * s.n + s.boundary_marks()) {
            dims_ok = false;
            first_bad = s.str();
        }
        const auto r = classify_polytopality(s);
        if (r.verdict == PolytopalityResult::Verdict::Polytope) {
            polytopal.insert(s.str());
            if (allows_two_loop(s)) { two_loop_ok = false; first_bad = s.str(); }
            if (strata_poset(s).ambient_dim != dimension(s)) { rank_ok = false; first_bad = s.str(); }
        } else {
            if (r.reason_name().empty()) { reasons_ok = false; first_bad = s.str(); }
            if (!allows_two_loop(s)) { two_loop_ok = false; first_bad = s.str(); }
        }
    }
    std::string diff;
    for (const auto& s : polytopal)
        if (!expected.count(s)) diff += " unexpected " + s;
    for (const auto& s : expected)
        if (!polytopal.count(s)) diff += " missing " + s;
    res.add("polytopal set = seven families (dim <= " + std::to_string(dim_bound) + ")",
            polytopal == expected,
            diff.empty() ? std::to_string(polytopal.size()) + " signatures" : diff);
    res.add("dimension matches 6g+3h-6+2n+m", dims_ok, first_bad);
    res.add("every non-polytope has a reason", reasons_ok, first_bad);
    res.add("polytopal iff no 2-loop allowed", two_loop_ok, first_bad);
    res.add("strata poset rank equals dimension", rank_ok, first_bad);
    return res;
}

/// Cross-cutting structural properties plus byte-identical rerun checks.
inline SuiteResult suite_properties(int bound = 6) {
    SuiteResult res{"properties", {}};

    bool symmetric = true;
    std::string sym_bad;
    for (int n = 2; n <= std::min(bound, 4); ++n) {
        for (const auto& g : detail::family_matrix(n)) {
            const auto design = enumerate_design_tubes(g);
            for (std::size_t i = 0; i < design.size() && symmetric; ++i)
                for (std::size_t j = i + 1; j < design.size(); ++j)
                    if (design_compatible(g, design[i], design[j]) !=
                        design_compatible(g, design[j], design[i])) {
                        symmetric = false;
                        sym_bad = g.name();
                        break;
                    }
        }
    }
    res.add("compatibility is symmetric", symmetric, sym_bad);

    bool simple = true;
    std::string simple_bad;
    for (int n = 1; n <= bound && simple; ++n) {
        for (const auto& g : detail::family_matrix(n)) {
            const auto kg = tubing_poset(g, PolytopeKind::Associahedron);
            const auto cg = tubing_poset(g, PolytopeKind::Cubeahedron);
            for (const auto& f : kg.faces)
                if (!kg.face_is_extendable(f) && f.size() != static_cast<std::size_t>(n - 1)) {
                    simple = false;
                    simple_bad = "KG " + g.name();
                }
            for (const auto& f : cg.faces)
                if (!cg.face_is_extendable(f) && f.size() != static_cast<std::size_t>(n)) {
                    simple = false;
                    simple_bad = "CG " + g.name();
                }
            if (!simple) break;
        }
    }
    res.add("maximal tubings are simple (n <= " + std::to_string(bound) + ")", simple, simple_bad);

    bool graded = true, euler = true;
    std::string poset_bad;
    for (int n = 1; n <= std::min(bound, 4); ++n) {
        for (const auto& g : detail::family_matrix(n)) {
            for (const auto kind : {PolytopeKind::Associahedron, PolytopeKind::Cubeahedron}) {
                const auto p = tubing_poset(g, kind);
                if (!check_graded(relation_matrix(p)).ok) {
                    graded = false;
                    poset_bad = p.object;
                }
                if (!euler_relation_holds(p.f_vector(), p.ambient_dim)) {
                    euler = false;
                    poset_bad = p.object;
                }
            }
        }
    }
    for (int n = 3; n <= 6; ++n) {
        const auto p = polygon_poset(PolygonModel::A, n);
        if (!check_graded(relation_matrix(p)).ok) { graded = false; poset_bad = p.object; }
        if (!euler_relation_holds(p.f_vector(), p.ambient_dim)) { euler = false; poset_bad = p.object; }
    }
    for (int n = 1; n <= 4; ++n) {
        for (const auto model : {PolygonModel::B, PolygonModel::C}) {
            const auto p = polygon_poset(model, n);
            if (!check_graded(relation_matrix(p)).ok) { graded = false; poset_bad = p.object; }
            if (!euler_relation_holds(p.f_vector(), p.ambient_dim)) {
                euler = false;
                poset_bad = p.object;
            }
        }
    }
    res.add("face posets are graded", graded, poset_bad);
    res.add("Euler relation holds", euler, poset_bad);

    auto build_outputs = [] {
        std::vector<std::string> out;
        out.push_back(poset_json(tubing_poset(Graph::cycle(3), PolytopeKind::Cubeahedron)).dump(2));
        out.push_back(poset_json(polygon_poset(PolygonModel::C, 3)).dump(2));
        const auto y3 = build_graph_cubeahedron(Graph::cycle(3));
        out.push_back(exact_geometry_json(y3).dump(2));
        out.push_back(off_string(y3));
        const auto k5 = build_graph_associahedron(Graph::path(4));
        out.push_back(exact_geometry_json(k5).dump(2));
        return out;
    };
    res.add("reruns are byte-identical", build_outputs() == build_outputs());
    return res;
}

/// Dispatch by suite name; bound <= 0 selects each suite's default.
inline SuiteResult run_suite(const std::string& name, int bound = 0) {
    if (name == "catalan") return suite_catalan(bound > 0 ? bound : 6);
    if (name == "facet-count") return suite_facet_count(bound > 0 ? bound : 6);
    if (name == "facet-decomp") return suite_facet_decomp(bound > 0 ? bound : 5);
    if (name == "path-bijection") return suite_path_bijection(bound > 0 ? bound : 5);
    if (name == "realization")
        return suite_realization(bound > 0 ? std::min(bound, 4) : 4, bound > 0 ? std::min(bound, 3) : 3);
    if (name == "polygon-iso") return suite_polygon_iso(bound > 0 ? bound + 3 : 7, bound > 0 ? std::min(bound, 4) : 4);
    if (name == "classifier") return suite_classifier(bound > 0 ? bound : 4);
    if (name == "properties") return suite_properties(bound > 0 ? bound : 6);
    throw std::invalid_argument("unknown verification suite '" + name + "'");
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "catalan",     "facet-count", "facet-decomp", "path-bijection",
        "realization", "polygon-iso", "classifier",   "properties"};
    return names;
}

}  // namespace halo::verify
