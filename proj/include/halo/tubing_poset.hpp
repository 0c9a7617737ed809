#pragma once

#include "halo/graph.hpp"
#include "halo/poset.hpp"
#include "halo/tubes.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace halo {

enum class PolytopeKind { Associahedron, Cubeahedron };

inline std::string object_name(const Graph& g, PolytopeKind kind) {
    return (kind == PolytopeKind::Associahedron ? "KG(" : "CG(") + g.name() + ")";
}

/// Face poset of KG (tubings, dimension n-1) or CG (design tubings, dimension n).
inline FacePoset<DesignTube> tubing_poset(const Graph& g, PolytopeKind kind) {
    std::vector<DesignTube> atoms;
    int ambient = 0;
    if (kind == PolytopeKind::Associahedron) {
        for (auto& t : enumerate_tubes(g)) atoms.push_back(DesignTube::round(std::move(t.nodes)));
        ambient = g.node_count() - 1;
    } else {
        atoms = enumerate_design_tubes(g);
        ambient = g.node_count();
    }
    return build_flag_poset<DesignTube>(
        object_name(g, kind), ambient, std::move(atoms),
        [&g](const DesignTube& a, const DesignTube& b) { return design_compatible(g, a, b); });
}

/// All tubings of maximum size: n-1 tubes for KG, n design tubes for CG.
inline std::vector<std::vector<DesignTube>> maximal_tubings(const Graph& g, PolytopeKind kind) {
    const auto poset = tubing_poset(g, kind);
    std::vector<std::vector<DesignTube>> out;
    for (const auto& face : poset.maximum_faces()) {
        std::vector<DesignTube> tubing;
        tubing.reserve(face.size());
        for (int id : face) tubing.push_back(poset.atoms[id]);
        out.push_back(std::move(tubing));
    }
    return out;
}

/// Design tube of path(n) to tube of path(n+1): rounds map identically, the square
/// at node k maps to the tail {k+1, ..., n+1}.
inline DesignTube map_path_design_tube(int n, const DesignTube& d) {
    if (d.is_square()) {
        NodeSet tail;
        for (int v = d.nodes.front() + 1; v <= n + 1; ++v) tail.push_back(v);
        return DesignTube::round(std::move(tail));
    }
    return d;
}

/// Image of one design tubing of path(n) under the bijection with tubings of path(n+1).
inline std::vector<DesignTube> path_design_bijection(const Graph& g,
                                                     const std::vector<DesignTube>& tubing) {
    if (!g.is_path()) throw std::invalid_argument("path_design_bijection: graph must be a path");
    const int n = g.node_count();
    const Graph target = Graph::path(n + 1);
    for (std::size_t i = 0; i < tubing.size(); ++i) {
        validate_design_tube(g, tubing[i]);
        for (std::size_t j = i + 1; j < tubing.size(); ++j)
            if (!design_compatible(g, tubing[i], tubing[j]))
                throw std::invalid_argument("path_design_bijection: input is not a design tubing");
    }
    std::vector<DesignTube> out;
    out.reserve(tubing.size());
    for (const auto& d : tubing) out.push_back(map_path_design_tube(n, d));
    std::sort(out.begin(), out.end());
    for (const auto& t : out) validate_tube(target, Tube{t.nodes});
    return out;
}

struct BijectionReport {
    bool ok = true;
    std::string detail;
};

/// Full certification that the tube map above induces a rank-preserving poset
/// isomorphism CG(path n) = KG(path n+1).
inline BijectionReport certify_path_design_bijection(int n) {
    BijectionReport rep;
    const Graph g = Graph::path(n);
    const auto source = tubing_poset(g, PolytopeKind::Cubeahedron);
    const auto target = tubing_poset(Graph::path(n + 1), PolytopeKind::Associahedron);
    if (source.atoms.size() != target.atoms.size()) {
        rep.ok = false;
        rep.detail = "atom counts differ";
        return rep;
    }
    std::map<DesignTube, int> target_id;
    for (int i = 0; i < static_cast<int>(target.atoms.size()); ++i)
        target_id.emplace(target.atoms[i], i);
    std::vector<int> atom_map(source.atoms.size());
    std::vector<char> hit(target.atoms.size(), 0);
    for (std::size_t i = 0; i < source.atoms.size(); ++i) {
        const DesignTube image = map_path_design_tube(n, source.atoms[i]);
        auto it = target_id.find(image);
        if (it == target_id.end() || hit[it->second]) {
            rep.ok = false;
            rep.detail = "atom map not bijective at " + to_string(source.atoms[i]);
            return rep;
        }
        hit[it->second] = 1;
        atom_map[i] = it->second;
    }
    // Compatibility must transfer exactly; with that, mapped faces are faces.
    for (std::size_t i = 0; i < source.atoms.size(); ++i) {
        for (std::size_t j = i + 1; j < source.atoms.size(); ++j) {
            if (source.compat[i][j] != target.compat[atom_map[i]][atom_map[j]]) {
                rep.ok = false;
                rep.detail = "compatibility mismatch: " + to_string(source.atoms[i]) + " vs " +
                             to_string(source.atoms[j]);
                return rep;
            }
        }
    }
    if (source.faces.size() != target.faces.size()) {
        rep.ok = false;
        rep.detail = "face counts differ";
        return rep;
    }
    std::map<std::vector<int>, int> target_faces;
    for (int i = 0; i < static_cast<int>(target.faces.size()); ++i)
        target_faces.emplace(target.faces[i], i);
    for (std::size_t i = 0; i < source.faces.size(); ++i) {
        std::vector<int> image;
        image.reserve(source.faces[i].size());
        for (int id : source.faces[i]) image.push_back(atom_map[id]);
        std::sort(image.begin(), image.end());
        auto it = target_faces.find(image);
        if (it == target_faces.end()) {
            rep.ok = false;
            rep.detail = "face image missing (face " + std::to_string(i) + ")";
            return rep;
        }
        // Rank preservation: CG(path n) is n-dimensional, KG(path n+1) likewise.
        if (source.rank_of(i) != target.rank_of(it->second)) {
            rep.ok = false;
            rep.detail = "rank mismatch at face " + std::to_string(i);
            return rep;
        }
    }
    return rep;
}

/// Facet types of the graph cubeahedron of a cycle.
struct FacetType {
    enum class Kind { Cyclohedron, Associahedron, Product };
    Kind kind = Kind::Cyclohedron;
    int cyclohedron_index = 0;    // W_n
    int associahedron_index = 0;  // K_k
    int halohedron_index = 0;     // Y_m
};

inline std::string to_string(const FacetType& t) {
    switch (t.kind) {
        case FacetType::Kind::Cyclohedron:
            return "W_" + std::to_string(t.cyclohedron_index);
        case FacetType::Kind::Associahedron:
            return "K_" + std::to_string(t.associahedron_index);
        case FacetType::Kind::Product:
            return "K_" + std::to_string(t.associahedron_index) + " x Y_" +
                   std::to_string(t.halohedron_index);
    }
    return "?";
}

/// Classification of a design tube of cycle(n) as a facet of the halohedron Y_n:
/// the whole-graph round tube is the cyclohedron W_n, squares are associahedra
/// K_{n+1}, and a round tube on k-1 nodes is the product K_k x Y_{n-k+1}.
inline FacetType cycle_facet_type(const Graph& g, const DesignTube& d) {
    if (!g.is_cycle()) throw std::invalid_argument("cycle_facet_type: graph must be a cycle");
    validate_design_tube(g, d);
    const int n = g.node_count();
    FacetType t;
    if (d.is_square()) {
        t.kind = FacetType::Kind::Associahedron;
        t.associahedron_index = n + 1;
    } else if (static_cast<int>(d.nodes.size()) == n) {
        t.kind = FacetType::Kind::Cyclohedron;
        t.cyclohedron_index = n;
    } else {
        const int k = static_cast<int>(d.nodes.size()) + 1;
        t.kind = FacetType::Kind::Product;
        t.associahedron_index = k;
        t.halohedron_index = n - k + 1;
    }
    return t;
}

/// Face poset of the associahedron K_m (a point for m = 2).
inline FacePoset<DesignTube> associahedron_poset(int m) {
    if (m < 2) throw std::invalid_argument("associahedron_poset: index must be >= 2");
    auto p = tubing_poset(Graph::path(m - 1), PolytopeKind::Associahedron);
    p.object = "K_" + std::to_string(m);
    return p;
}

/// Face poset of the cyclohedron W_m (a point for m = 1).
inline FacePoset<DesignTube> cyclohedron_poset(int m) {
    if (m < 1) throw std::invalid_argument("cyclohedron_poset: index must be >= 1");
    auto p = m == 1 ? tubing_poset(Graph::path(1), PolytopeKind::Associahedron)
                    : tubing_poset(Graph::cycle(m), PolytopeKind::Associahedron);
    p.object = "W_" + std::to_string(m);
    return p;
}

/// Face poset of the halohedron Y_m; Y_1 is the interval CG(path(1)).
inline FacePoset<DesignTube> halohedron_poset(int m) {
    if (m < 1) throw std::invalid_argument("halohedron_poset: index must be >= 1");
    auto p = m == 1 ? tubing_poset(Graph::path(1), PolytopeKind::Cubeahedron)
                    : tubing_poset(Graph::cycle(m), PolytopeKind::Cubeahedron);
    p.object = "Y_" + std::to_string(m);
    return p;
}

/// The abstract face poset a cycle facet should be isomorphic to.
inline FacePoset<DesignTube> named_facet_poset(const FacetType& t) {
    switch (t.kind) {
        case FacetType::Kind::Cyclohedron:
            return cyclohedron_poset(t.cyclohedron_index);
        case FacetType::Kind::Associahedron:
            return associahedron_poset(t.associahedron_index);
        case FacetType::Kind::Product:
            return product_poset(associahedron_poset(t.associahedron_index),
                                 halohedron_poset(t.halohedron_index));
    }
    throw std::logic_error("named_facet_poset: unknown kind");
}

inline nlohmann::json poset_json(const FacePoset<DesignTube>& p) {
    nlohmann::json j;
    j["object"] = p.object;
    j["ambient_dim"] = p.ambient_dim;
    auto faces = nlohmann::json::array();
    for (std::size_t i = 0; i < p.faces.size(); ++i) {
        nlohmann::json face;
        auto tubes = nlohmann::json::array();
        for (int id : p.faces[i]) tubes.push_back(to_json(p.atoms[id]));
        face["tubes"] = tubes;
        face["dim"] = p.rank_of(i);
        faces.push_back(std::move(face));
    }
    j["faces"] = faces;
    j["f_vector"] = p.f_vector();
    return j;
}

}  // namespace halo
