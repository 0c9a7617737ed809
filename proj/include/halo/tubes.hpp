#pragma once

#include "halo/graph.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace halo {

/// Nonempty node set inducing a connected proper subgraph.
struct Tube {
    NodeSet nodes;

    friend bool operator==(const Tube&, const Tube&) = default;
};

inline bool operator<(const Tube& a, const Tube& b) { return size_lex_less(a.nodes, b.nodes); }

/// Round tubes are connected node sets (the whole graph allowed); a square tube is one node.
struct DesignTube {
    enum class Kind { Round, Square };
    Kind kind = Kind::Round;
    NodeSet nodes;

    static DesignTube round(NodeSet s) { return DesignTube{Kind::Round, std::move(s)}; }
    static DesignTube square(int v) { return DesignTube{Kind::Square, {v}}; }

    bool is_square() const { return kind == Kind::Square; }

    friend bool operator==(const DesignTube&, const DesignTube&) = default;
};

// Rounds before squares; within a kind, size then lexicographic.
inline bool operator<(const DesignTube& a, const DesignTube& b) {
    if (a.kind != b.kind) return a.kind == DesignTube::Kind::Round;
    return size_lex_less(a.nodes, b.nodes);
}

inline void validate_tube(const Graph& g, const Tube& t) {
    if (t.nodes.empty()) throw std::invalid_argument("tube: node set must be nonempty");
    if (static_cast<int>(t.nodes.size()) >= g.node_count())
        throw std::invalid_argument("tube: must be a proper subgraph");
    if (!g.connected_subset(t.nodes))
        throw std::invalid_argument("tube: induced subgraph must be connected");
}

inline void validate_design_tube(const Graph& g, const DesignTube& d) {
    if (d.kind == DesignTube::Kind::Square) {
        if (d.nodes.size() != 1)
            throw std::invalid_argument("design tube: a square tube has exactly one node");
        g.connected_subset(d.nodes);  // label range check
    } else {
        if (d.nodes.empty()) throw std::invalid_argument("design tube: node set must be nonempty");
        if (!g.connected_subset(d.nodes))
            throw std::invalid_argument("design tube: induced subgraph must be connected");
    }
}

enum class TubeRelation { Nested, Intersecting, Adjacent, Disjoint };

inline std::string to_string(TubeRelation r) {
    switch (r) {
        case TubeRelation::Nested: return "nested";
        case TubeRelation::Intersecting: return "intersecting";
        case TubeRelation::Adjacent: return "adjacent";
        case TubeRelation::Disjoint: return "disjoint";
    }
    return "?";
}

namespace detail {

// Adjacency is decided by connectivity of the disjoint union alone; properness of the
// union does not matter. Two tubes covering the whole graph are adjacent.
inline TubeRelation node_set_relation(const Graph& g, const NodeSet& a, const NodeSet& b) {
    if (is_subset(a, b) || is_subset(b, a)) return TubeRelation::Nested;
    if (sets_intersect(a, b)) return TubeRelation::Intersecting;
    if (g.connected_subset(set_union(a, b))) return TubeRelation::Adjacent;
    return TubeRelation::Disjoint;
}

}  // namespace detail

inline TubeRelation tube_relation(const Graph& g, const Tube& t1, const Tube& t2) {
    validate_tube(g, t1);
    validate_tube(g, t2);
    if (t1.nodes == t2.nodes) throw std::invalid_argument("tube_relation: tubes must be distinct");
    return detail::node_set_relation(g, t1.nodes, t2.nodes);
}

inline bool compatible(const Graph& g, const Tube& t1, const Tube& t2) {
    const TubeRelation r = tube_relation(g, t1, t2);
    return r == TubeRelation::Nested || r == TubeRelation::Disjoint;
}

/// Mixed-kind nesting is membership: a square at v is nested with a round tube t iff v is in t.
inline bool design_compatible(const Graph& g, const DesignTube& d1, const DesignTube& d2) {
    validate_design_tube(g, d1);
    validate_design_tube(g, d2);
    if (d1 == d2) throw std::invalid_argument("design_compatible: tubes must be distinct");
    if (!d1.is_square() && !d2.is_square()) {
        const TubeRelation r = detail::node_set_relation(g, d1.nodes, d2.nodes);
        return r == TubeRelation::Nested || r == TubeRelation::Disjoint;
    }
    if (d1.is_square() && d2.is_square()) return true;
    const DesignTube& square = d1.is_square() ? d1 : d2;
    const DesignTube& round = d1.is_square() ? d2 : d1;
    return !node_set_contains(round.nodes, square.nodes.front());
}

namespace detail {

inline std::vector<NodeSet> connected_subsets(const Graph& g, bool proper_only) {
    const int n = g.node_count();
    if (n > 30) throw std::invalid_argument("connected_subsets: graph too large");
    std::vector<NodeSet> out;
    const unsigned long top = 1ul << n;
    for (unsigned long mask = 1; mask < top; ++mask) {
        if (proper_only && mask == top - 1) continue;
        NodeSet s;
        for (int v = 1; v <= n; ++v)
            if (mask & (1ul << (v - 1))) s.push_back(v);
        if (g.connected_subset(s)) out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), size_lex_less);
    return out;
}

}  // namespace detail

/// All tubes, sorted by size then lexicographically. The count is the facet count of KG.
inline std::vector<Tube> enumerate_tubes(const Graph& g) {
    std::vector<Tube> out;
    for (auto& s : detail::connected_subsets(g, /*proper_only=*/true)) out.push_back(Tube{std::move(s)});
    return out;
}

/// All round tubes (whole graph included, size-lex order) followed by the n square tubes.
inline std::vector<DesignTube> enumerate_design_tubes(const Graph& g) {
    std::vector<DesignTube> out;
    for (auto& s : detail::connected_subsets(g, /*proper_only=*/false))
        out.push_back(DesignTube::round(std::move(s)));
    for (int v = 1; v <= g.node_count(); ++v) out.push_back(DesignTube::square(v));
    return out;
}

inline nlohmann::json to_json(const DesignTube& d) {
    nlohmann::json j;
    j["kind"] = d.is_square() ? "square" : "round";
    j["nodes"] = d.nodes;
    return j;
}

inline std::string to_string(const DesignTube& d) {
    std::string s = d.is_square() ? "square{" : "round{";
    for (std::size_t i = 0; i < d.nodes.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(d.nodes[i]);
    }
    return s + "}";
}

}  // namespace halo
