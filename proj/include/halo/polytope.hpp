#pragma once

#include "halo/graph.hpp"
#include "halo/linalg.hpp"
#include "halo/poset.hpp"
#include "halo/rational.hpp"
#include "halo/tubes.hpp"
#include "halo/tubing_poset.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace halo {

/// Closed halfspace normal . x <= offset. The label names the (design) tube whose
/// facet this is in a graph associahedron / cubeahedron build.
struct HalfSpace {
    RatVec normal;
    Rational offset;
    std::optional<DesignTube> label;
};

struct HPolytope {
    int dim = 0;
    std::vector<HalfSpace> halfspaces;
};

struct VPolytope {
    std::vector<RatVec> vertices;                           // canonical lexicographic order
    std::vector<std::vector<std::uint64_t>> facet_masks;    // per-vertex incident facets
};

/// H- and V-representation kept in sync, all coordinates exact.
struct Polytope {
    HPolytope h;
    VPolytope v;

    int dim() const { return h.dim; }
    std::size_t facet_count() const { return h.halfspaces.size(); }
    std::size_t vertex_count() const { return v.vertices.size(); }
};

/// The (n-1)-simplex whose facets are labeled by the nodes of G.
inline HPolytope labeled_simplex(const Graph& g) {
    const int n = g.node_count();
    if (n < 2) throw std::invalid_argument("labeled_simplex: need at least two nodes");
    HPolytope h;
    h.dim = n - 1;
    for (int i = 1; i <= n - 1; ++i) {
        RatVec normal(n - 1, Rational(0));
        normal[i - 1] = -1;
        h.halfspaces.push_back({std::move(normal), Rational(0), DesignTube::round({i})});
    }
    RatVec ones(n - 1, Rational(1));
    h.halfspaces.push_back({std::move(ones), Rational(1), DesignTube::round({n})});
    return h;
}

/// The n-cube [0,1]^n; x_i = 0 is the round side of node i, x_i = 1 the square side.
inline HPolytope labeled_cube(const Graph& g) {
    const int n = g.node_count();
    HPolytope h;
    h.dim = n;
    for (int i = 1; i <= n; ++i) {
        RatVec normal(n, Rational(0));
        normal[i - 1] = -1;
        h.halfspaces.push_back({std::move(normal), Rational(0), DesignTube::round({i})});
    }
    for (int i = 1; i <= n; ++i) {
        RatVec normal(n, Rational(0));
        normal[i - 1] = 1;
        h.halfspaces.push_back({std::move(normal), Rational(1), DesignTube::square(i)});
    }
    return h;
}

namespace detail {

inline void sort_vertices_canonically(VPolytope& v) {
    std::vector<std::size_t> order(v.vertices.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return v.vertices[a] < v.vertices[b]; });
    VPolytope out;
    out.vertices.reserve(v.vertices.size());
    out.facet_masks.reserve(v.vertices.size());
    for (auto i : order) {
        out.vertices.push_back(std::move(v.vertices[i]));
        out.facet_masks.push_back(std::move(v.facet_masks[i]));
    }
    v = std::move(out);
}

inline std::vector<std::uint64_t> incident_facets_of(const HPolytope& h, const RatVec& x) {
    auto mask = bits::make(std::max<std::size_t>(h.halfspaces.size(), 1));
    for (std::size_t f = 0; f < h.halfspaces.size(); ++f)
        if (dot(h.halfspaces[f].normal, x) == h.halfspaces[f].offset) bits::set(mask, f);
    return mask;
}

inline bool satisfies_all(const HPolytope& h, const RatVec& x) {
    for (const auto& hs : h.halfspaces)
        if (dot(hs.normal, x) > hs.offset) return false;
    return true;
}

/// Bounded iff the recession cone {y : Ay <= 0} is trivial. The cone contains a line
/// iff the normals do not span; otherwise any nonzero element is generated by an
/// extreme ray cut out by dim-1 linearly independent active constraints.
inline bool is_bounded(const HPolytope& h) {
    const int d = h.dim;
    if (d == 0) return true;
    const std::size_t m = h.halfspaces.size();
    RatMat normals;
    for (const auto& hs : h.halfspaces) normals.push_back(hs.normal);
    if (matrix_rank(normals) < d) return false;
    if (d == 1) {
        bool up = false, down = false;
        for (const auto& hs : h.halfspaces) {
            if (hs.normal[0] > 0) up = true;
            if (hs.normal[0] < 0) down = true;
        }
        return up && down;
    }
    // Enumerate (d-1)-subsets of facet normals; each candidate extreme ray of the
    // recession cone is the kernel direction of such a subset.
    std::vector<std::size_t> comb(d - 1);
    std::iota(comb.begin(), comb.end(), 0);
    while (true) {
        RatMat rows;
        for (auto i : comb) rows.push_back(h.halfspaces[i].normal);
        if (matrix_rank(rows) == d - 1) {
            if (auto y = nullspace_direction(rows)) {
                RatVec neg(y->size());
                for (std::size_t i = 0; i < y->size(); ++i) neg[i] = -(*y)[i];
                for (const RatVec* dir : {&*y, &neg}) {
                    bool ray = true;
                    for (const auto& hs : h.halfspaces)
                        if (dot(hs.normal, *dir) > 0) { ray = false; break; }
                    if (ray) return false;
                }
            }
        }
        int pos = d - 2;
        while (pos >= 0 && comb[pos] == m - (d - 1) + pos) --pos;
        if (pos < 0) break;
        ++comb[pos];
        for (int q = pos + 1; q < d - 1; ++q) comb[q] = comb[q - 1] + 1;
    }
    return true;
}

}  // namespace detail

/// Exhaustive exact vertex enumeration: solve every dim-subset of facet hyperplanes,
/// keep feasible solutions, deduplicate, and record vertex-facet incidence.
inline VPolytope vertex_enumeration(const HPolytope& h) {
    const int d = h.dim;
    if (d < 0 || d > 6) throw std::invalid_argument("vertex_enumeration: dimension out of range");
    VPolytope v;
    if (d == 0) {
        for (const auto& hs : h.halfspaces)
            if (hs.offset < 0) throw std::domain_error("vertex_enumeration: empty polytope");
        v.vertices.push_back({});
        v.facet_masks.push_back(bits::make(std::max<std::size_t>(h.halfspaces.size(), 1)));
        return v;
    }
    if (!detail::is_bounded(h)) throw std::domain_error("vertex_enumeration: unbounded polyhedron");
    const std::size_t m = h.halfspaces.size();
    if (m < static_cast<std::size_t>(d)) throw std::domain_error("vertex_enumeration: empty polytope");
    std::set<RatVec> seen;
    std::vector<std::size_t> comb(d);
    std::iota(comb.begin(), comb.end(), 0);
    while (true) {
        RatMat a;
        RatVec b;
        for (auto i : comb) {
            a.push_back(h.halfspaces[i].normal);
            b.push_back(h.halfspaces[i].offset);
        }
        if (auto x = solve_linear(a, b)) {
            if (detail::satisfies_all(h, *x)) seen.insert(*x);
        }
        int pos = d - 1;
        while (pos >= 0 && comb[pos] == m - d + pos) --pos;
        if (pos < 0) break;
        ++comb[pos];
        for (int q = pos + 1; q < d; ++q) comb[q] = comb[q - 1] + 1;
    }
    if (seen.empty()) throw std::domain_error("vertex_enumeration: empty polytope");
    for (const auto& x : seen) {
        v.facet_masks.push_back(detail::incident_facets_of(h, x));
        v.vertices.push_back(x);
    }
    if (affine_dimension(v.vertices) != d)
        throw std::domain_error("vertex_enumeration: polytope is not full-dimensional");
    return v;
}

inline Polytope realize(HPolytope h) {
    Polytope p;
    p.v = vertex_enumeration(h);
    p.h = std::move(h);
    return p;
}

inline Polytope point_polytope() {
    Polytope p;
    p.h.dim = 0;
    p.v.vertices.push_back({});
    p.v.facet_masks.push_back(bits::make(1));
    return p;
}

inline int facet_index_of_label(const Polytope& p, const DesignTube& label) {
    for (std::size_t f = 0; f < p.h.halfspaces.size(); ++f)
        if (p.h.halfspaces[f].label == label) return static_cast<int>(f);
    throw std::invalid_argument("no facet labeled " + to_string(label));
}

/// Vertices lying on every listed facet; the empty list yields the whole polytope.
inline std::vector<int> face_of_facets(const Polytope& p, const std::vector<int>& facets) {
    std::vector<int> out;
    for (std::size_t vi = 0; vi < p.v.vertices.size(); ++vi) {
        bool on_all = true;
        for (int f : facets)
            if (!bits::get(p.v.facet_masks[vi], f)) { on_all = false; break; }
        if (on_all) out.push_back(static_cast<int>(vi));
    }
    return out;
}

/// Simplex addressing: the face cut out by the facets of the given nodes.
inline std::vector<int> face_of_label(const Polytope& p, const NodeSet& nodes) {
    if (!std::is_sorted(nodes.begin(), nodes.end()) ||
        std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end())
        throw std::invalid_argument("face_of_label: node set must be sorted and duplicate-free");
    std::vector<int> facets;
    for (int i : nodes) facets.push_back(facet_index_of_label(p, DesignTube::round({i})));
    return face_of_facets(p, facets);
}

/// Cube addressing: per node a round or square side, at most one side per node.
inline std::vector<int> face_of_label(const Polytope& p,
                                      const std::vector<std::pair<int, DesignTube::Kind>>& sides) {
    std::set<int> seen;
    std::vector<int> facets;
    for (const auto& [node, kind] : sides) {
        if (!seen.insert(node).second)
            throw std::invalid_argument("face_of_label: node listed twice");
        const DesignTube label = kind == DesignTube::Kind::Round ? DesignTube::round({node})
                                                                 : DesignTube::square(node);
        facets.push_back(facet_index_of_label(p, label));
    }
    return face_of_facets(p, facets);
}

struct TruncationError : std::invalid_argument {
    explicit TruncationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Cuts off the given face with one new halfspace. The cut functional is the sum of
/// the outer normals of all facets containing the face; the offset retreats by
/// `depth` from the face, which must stay strictly below the smallest slack of any
/// vertex outside the face. Default depth: one third of that slack.
inline Polytope truncate_face(const Polytope& p, const std::vector<int>& face,
                              const DesignTube& new_label,
                              const std::optional<Rational>& requested_depth = std::nullopt) {
    const int d = p.dim();
    const std::size_t nv = p.vertex_count();
    if (face.empty()) throw TruncationError("truncate_face: face is empty");
    if (face.size() == nv) throw TruncationError("truncate_face: cannot truncate the whole polytope");
    for (std::size_t vi = 0; vi < nv; ++vi)
        if (bits::and_popcount(p.v.facet_masks[vi], p.v.facet_masks[vi]) != d)
            throw std::logic_error("truncate_face: polytope is not simple");

    std::vector<char> in_face(nv, 0);
    for (int vi : face) in_face[vi] = 1;
    auto common = p.v.facet_masks[face.front()];
    for (int vi : face)
        for (std::size_t w = 0; w < common.size(); ++w) common[w] &= p.v.facet_masks[vi][w];

    RatVec cut(d, Rational(0));
    Rational cut_offset = 0;
    int containing = 0;
    for (std::size_t f = 0; f < p.facet_count(); ++f) {
        if (!bits::get(common, f)) continue;
        ++containing;
        for (int j = 0; j < d; ++j) cut[j] += p.h.halfspaces[f].normal[j];
        cut_offset += p.h.halfspaces[f].offset;
    }
    if (containing == 0) throw TruncationError("truncate_face: no facet contains the face");

    // Exactly the face vertices must sit on the cut level; everyone else strictly below.
    std::optional<Rational> min_slack;
    std::size_t argmin = 0;
    for (std::size_t vi = 0; vi < nv; ++vi) {
        const Rational slack = cut_offset - dot(cut, p.v.vertices[vi]);
        if (in_face[vi]) {
            if (slack != 0) throw TruncationError("truncate_face: input is not a face");
        } else {
            if (slack <= 0) throw TruncationError("truncate_face: input is not a face");
            if (!min_slack || slack < *min_slack) {
                min_slack = slack;
                argmin = vi;
            }
        }
    }
    const Rational depth = requested_depth ? *requested_depth : *min_slack / 3;
    if (depth <= 0 || depth >= *min_slack) {
        std::ostringstream msg;
        msg << "truncate_face: depth " << depth << " outside (0, " << *min_slack
            << "); violating vertex " << argmin;
        throw TruncationError(msg.str());
    }

    Polytope out;
    out.h = p.h;
    out.h.halfspaces.push_back({cut, cut_offset - depth, new_label});
    const std::size_t words = (out.facet_count() + 63) / 64;
    const int cut_bit = static_cast<int>(p.facet_count());

    for (std::size_t vi = 0; vi < nv; ++vi) {
        if (in_face[vi]) continue;
        auto mask = p.v.facet_masks[vi];
        mask.resize(words, 0);
        out.v.vertices.push_back(p.v.vertices[vi]);
        out.v.facet_masks.push_back(std::move(mask));
    }
    // New vertices: the cut plane meets each edge from a face vertex to a kept vertex.
    for (int u : face) {
        for (std::size_t w = 0; w < nv; ++w) {
            if (in_face[w]) continue;
            if (bits::and_popcount(p.v.facet_masks[u], p.v.facet_masks[w]) != d - 1) continue;
            const Rational s = cut_offset - dot(cut, p.v.vertices[w]);  // slack of w, > 0
            const Rational t = depth / s;                               // in (0,1)
            RatVec x(d);
            for (int j = 0; j < d; ++j)
                x[j] = p.v.vertices[u][j] + t * (p.v.vertices[w][j] - p.v.vertices[u][j]);
            auto mask = bits::make(out.facet_count());
            for (std::size_t f = 0; f < p.facet_count(); ++f)
                if (bits::get(p.v.facet_masks[u], f) && bits::get(p.v.facet_masks[w], f))
                    bits::set(mask, f);
            bits::set(mask, cut_bit);
            out.v.vertices.push_back(std::move(x));
            out.v.facet_masks.push_back(std::move(mask));
        }
    }
    detail::sort_vertices_canonically(out.v);
    return out;
}

/// Recomputes all incidences from coordinates and checks the realized invariants:
/// exact incidence agreement, simplicity, and at least dim vertices per facet.
inline void validate_realization(const Polytope& p) {
    const int d = p.dim();
    for (std::size_t vi = 1; vi < p.vertex_count(); ++vi)
        if (p.v.vertices[vi - 1] == p.v.vertices[vi])
            throw std::logic_error("validate_realization: duplicate vertex");
    std::vector<int> per_facet(p.facet_count(), 0);
    for (std::size_t vi = 0; vi < p.vertex_count(); ++vi) {
        const auto mask = detail::incident_facets_of(p.h, p.v.vertices[vi]);
        if (mask != p.v.facet_masks[vi])
            throw std::logic_error("validate_realization: stale incidence data");
        if (!detail::satisfies_all(p.h, p.v.vertices[vi]))
            throw std::logic_error("validate_realization: infeasible vertex");
        if (bits::and_popcount(mask, mask) != d)
            throw std::logic_error("validate_realization: polytope is not simple");
        for (std::size_t f = 0; f < p.facet_count(); ++f)
            if (bits::get(mask, f)) ++per_facet[f];
    }
    for (std::size_t f = 0; f < p.facet_count(); ++f)
        if (per_facet[f] < d)
            throw std::logic_error("validate_realization: halfspace " + std::to_string(f) +
                                   " does not support a facet");
}

namespace detail {

inline std::vector<Tube> truncation_schedule(const Graph& g, std::size_t min_size) {
    auto tubes = enumerate_tubes(g);
    std::vector<Tube> schedule;
    for (auto& t : tubes)
        if (t.nodes.size() >= min_size) schedule.push_back(std::move(t));
    // Increasing face dimension means decreasing tube size; lexicographic within a class.
    std::sort(schedule.begin(), schedule.end(), [](const Tube& a, const Tube& b) {
        if (a.nodes.size() != b.nodes.size()) return a.nodes.size() > b.nodes.size();
        return a.nodes < b.nodes;
    });
    return schedule;
}

}  // namespace detail

/// Iterated truncation of the labeled simplex over all tubes, largest first.
inline Polytope build_graph_associahedron(const Graph& g, int max_nodes = 6) {
    const int n = g.node_count();
    if (n > max_nodes)
        throw std::invalid_argument("build_graph_associahedron: size bound exceeded");
    if (n == 1) return point_polytope();
    Polytope p = realize(labeled_simplex(g));
    for (const auto& t : detail::truncation_schedule(g, 2))
        p = truncate_face(p, face_of_label(p, t.nodes), DesignTube::round(t.nodes));
    validate_realization(p);
    return p;
}

/// Iterated truncation of the labeled cube over round tubes, whole graph first.
inline Polytope build_graph_cubeahedron(const Graph& g, int max_nodes = 5) {
    const int n = g.node_count();
    if (n > max_nodes)
        throw std::invalid_argument("build_graph_cubeahedron: size bound exceeded");
    Polytope p = realize(labeled_cube(g));
    std::vector<DesignTube> schedule;
    for (const auto& d : enumerate_design_tubes(g))
        if (!d.is_square() && d.nodes.size() >= 2) schedule.push_back(d);
    std::sort(schedule.begin(), schedule.end(), [](const DesignTube& a, const DesignTube& b) {
        if (a.nodes.size() != b.nodes.size()) return a.nodes.size() > b.nodes.size();
        return a.nodes < b.nodes;
    });
    for (const auto& d : schedule) {
        std::vector<std::pair<int, DesignTube::Kind>> sides;
        for (int i : d.nodes) sides.emplace_back(i, DesignTube::Kind::Round);
        p = truncate_face(p, face_of_label(p, sides), d);
    }
    validate_realization(p);
    return p;
}

/// One face of the geometric lattice: vertex set, affine dimension, containing facets.
struct LatticeFace {
    std::vector<int> vertices;
    std::vector<std::uint64_t> vertex_mask;
    std::vector<int> facets;
    int dim = 0;
};

struct FaceLattice {
    int dim = 0;
    std::vector<LatticeFace> faces;  // canonical order: dim ascending, vertex list lex

    std::vector<long long> f_vector() const {
        std::vector<long long> f(std::max(dim, 0), 0);
        for (const auto& face : faces)
            if (face.dim < dim) ++f[face.dim];
        return f;
    }
};

/// All nonempty faces as intersections of facet vertex sets, graded by affine dimension.
inline FaceLattice face_lattice(const Polytope& p) {
    if (p.vertex_count() == 0) throw std::invalid_argument("face_lattice: no vertices");
    const std::size_t nv = p.vertex_count();
    const std::size_t nf = p.facet_count();
    const std::size_t words = (nv + 63) / 64;
    std::vector<std::vector<std::uint64_t>> facet_sets(nf, bits::make(nv));
    for (std::size_t vi = 0; vi < nv; ++vi)
        for (std::size_t f = 0; f < nf; ++f)
            if (bits::get(p.v.facet_masks[vi], f)) bits::set(facet_sets[f], vi);

    auto top = bits::make(nv);
    for (std::size_t vi = 0; vi < nv; ++vi) bits::set(top, vi);
    std::set<std::vector<std::uint64_t>> seen{top};
    std::vector<std::vector<std::uint64_t>> queue{top};
    while (!queue.empty()) {
        const auto current = queue.back();
        queue.pop_back();
        for (std::size_t f = 0; f < nf; ++f) {
            std::vector<std::uint64_t> meet(words);
            bool empty = true;
            for (std::size_t w = 0; w < words; ++w) {
                meet[w] = current[w] & facet_sets[f][w];
                if (meet[w]) empty = false;
            }
            if (empty || seen.count(meet)) continue;
            seen.insert(meet);
            queue.push_back(std::move(meet));
        }
    }

    FaceLattice lattice;
    lattice.dim = p.dim();
    for (const auto& mask : seen) {
        LatticeFace face;
        face.vertex_mask = mask;
        std::vector<RatVec> coords;
        for (std::size_t vi = 0; vi < nv; ++vi) {
            if (bits::get(mask, vi)) {
                face.vertices.push_back(static_cast<int>(vi));
                coords.push_back(p.v.vertices[vi]);
            }
        }
        for (std::size_t f = 0; f < nf; ++f)
            if (bits::is_subset(mask, facet_sets[f])) face.facets.push_back(static_cast<int>(f));
        face.dim = affine_dimension(coords);
        lattice.faces.push_back(std::move(face));
    }
    std::sort(lattice.faces.begin(), lattice.faces.end(),
              [](const LatticeFace& a, const LatticeFace& b) {
                  if (a.dim != b.dim) return a.dim < b.dim;
                  return a.vertices < b.vertices;
              });
    return lattice;
}

inline RelationMatrix relation_matrix(const FaceLattice& l) {
    RelationMatrix r;
    r.n = static_cast<int>(l.faces.size());
    r.rank.resize(r.n);
    r.up.assign(r.n, bits::make(r.n));
    r.down.assign(r.n, bits::make(r.n));
    for (int i = 0; i < r.n; ++i) r.rank[i] = l.faces[i].dim;
    for (int i = 0; i < r.n; ++i)
        for (int j = 0; j < r.n; ++j)
            if (bits::is_subset(l.faces[i].vertex_mask, l.faces[j].vertex_mask)) {
                bits::set(r.up[i], j);
                bits::set(r.down[j], i);
            }
    return r;
}

struct CertificationReport {
    bool ok = true;
    std::string detail;
    std::vector<long long> f_vector;
    std::size_t facet_count = 0;
    std::size_t vertex_count = 0;
};

/// Builds the polytope geometrically and certifies that the label-induced map between
/// its face lattice and the tubing poset is a rank-preserving order isomorphism.
inline CertificationReport certify_realization(const Graph& g, PolytopeKind kind,
                                               int max_nodes = 6) {
    CertificationReport rep;
    const Polytope p = kind == PolytopeKind::Associahedron
                           ? build_graph_associahedron(g, max_nodes)
                           : build_graph_cubeahedron(g, max_nodes);
    const FaceLattice lattice = face_lattice(p);
    const auto poset = tubing_poset(g, kind);
    rep.f_vector = lattice.f_vector();
    rep.facet_count = p.facet_count();
    rep.vertex_count = p.vertex_count();

    auto fail = [&rep](std::string why) {
        rep.ok = false;
        rep.detail = std::move(why);
        return rep;
    };
    if (rep.f_vector != poset.f_vector()) return fail("f-vectors differ");
    if (p.facet_count() != poset.atoms.size()) return fail("facet and tube counts differ");

    std::map<DesignTube, int> atom_id;
    for (int i = 0; i < static_cast<int>(poset.atoms.size()); ++i)
        atom_id.emplace(poset.atoms[i], i);
    std::vector<int> facet_atom(p.facet_count(), -1);
    for (std::size_t f = 0; f < p.facet_count(); ++f) {
        const auto& label = p.h.halfspaces[f].label;
        if (!label) return fail("facet " + std::to_string(f) + " carries no label");
        const auto it = atom_id.find(*label);
        if (it == atom_id.end()) return fail("facet label " + to_string(*label) + " is not a tube");
        facet_atom[f] = it->second;
    }

    std::map<std::vector<int>, int> poset_face_id;
    for (int i = 0; i < static_cast<int>(poset.faces.size()); ++i)
        poset_face_id.emplace(poset.faces[i], i);
    if (lattice.faces.size() != poset.faces.size()) return fail("face counts differ");

    std::vector<int> face_map(lattice.faces.size(), -1);
    std::vector<char> hit(poset.faces.size(), 0);
    for (std::size_t i = 0; i < lattice.faces.size(); ++i) {
        std::vector<int> labels;
        labels.reserve(lattice.faces[i].facets.size());
        for (int f : lattice.faces[i].facets) labels.push_back(facet_atom[f]);
        std::sort(labels.begin(), labels.end());
        const auto it = poset_face_id.find(labels);
        if (it == poset_face_id.end())
            return fail("geometric face " + std::to_string(i) + " has no matching tubing");
        if (hit[it->second]) return fail("two faces map to one tubing");
        hit[it->second] = 1;
        face_map[i] = it->second;
        if (lattice.faces[i].dim != poset.rank_of(it->second))
            return fail("rank mismatch at face " + std::to_string(i));
    }
    const auto rel_geo = relation_matrix(lattice);
    const auto rel_pos = relation_matrix(poset);
    for (int x = 0; x < rel_geo.n; ++x)
        for (int y = 0; y < rel_geo.n; ++y)
            if (rel_geo.le(x, y) != rel_pos.le(face_map[x], face_map[y]))
                return fail("order mismatch at face pair (" + std::to_string(x) + ", " +
                            std::to_string(y) + ")");
    return rep;
}

/// Exact geometry export: vertices as fraction strings plus facet incidences and labels.
inline nlohmann::json exact_geometry_json(const Polytope& p) {
    nlohmann::json j;
    auto vertices = nlohmann::json::array();
    for (const auto& v : p.v.vertices) {
        auto coords = nlohmann::json::array();
        for (const auto& c : v) coords.push_back(to_fraction_string(c));
        vertices.push_back(std::move(coords));
    }
    j["vertices"] = vertices;
    auto facets = nlohmann::json::array();
    auto labels = nlohmann::json::array();
    for (std::size_t f = 0; f < p.facet_count(); ++f) {
        auto members = nlohmann::json::array();
        for (std::size_t vi = 0; vi < p.vertex_count(); ++vi)
            if (bits::get(p.v.facet_masks[vi], f)) members.push_back(vi);
        facets.push_back(std::move(members));
        labels.push_back(p.h.halfspaces[f].label ? to_json(*p.h.halfspaces[f].label)
                                                 : nlohmann::json());
    }
    j["facets"] = facets;
    j["labels"] = labels;
    j["metadata"] = {{"dimension", p.dim()},
                     {"orientation", "round side of node i is x_i = 0, square side is x_i = 1"}};
    return j;
}

namespace detail {

// Cyclic vertex order around a 3D facet, for OFF output only (display approximation).
inline std::vector<int> facet_cycle_3d(const Polytope& p, const std::vector<int>& members,
                                       std::size_t facet) {
    const auto& n = p.h.halfspaces[facet].normal;
    double nx = static_cast<double>(n[0]), ny = static_cast<double>(n[1]),
           nz = static_cast<double>(n[2]);
    const double len = std::sqrt(nx * nx + ny * ny + nz * nz);
    nx /= len; ny /= len; nz /= len;
    double ax = 1, ay = 0, az = 0;
    if (std::abs(nx) > 0.9) { ax = 0; ay = 1; }
    double ux = ay * nz - az * ny, uy = az * nx - ax * nz, uz = ax * ny - ay * nx;
    const double ulen = std::sqrt(ux * ux + uy * uy + uz * uz);
    ux /= ulen; uy /= ulen; uz /= ulen;
    const double vx = ny * uz - nz * uy, vy = nz * ux - nx * uz, vz = nx * uy - ny * ux;
    double cx = 0, cy = 0, cz = 0;
    for (int vi : members) {
        cx += static_cast<double>(p.v.vertices[vi][0]);
        cy += static_cast<double>(p.v.vertices[vi][1]);
        cz += static_cast<double>(p.v.vertices[vi][2]);
    }
    cx /= members.size(); cy /= members.size(); cz /= members.size();
    std::vector<std::pair<double, int>> angles;
    for (int vi : members) {
        const double dx = static_cast<double>(p.v.vertices[vi][0]) - cx;
        const double dy = static_cast<double>(p.v.vertices[vi][1]) - cy;
        const double dz = static_cast<double>(p.v.vertices[vi][2]) - cz;
        angles.emplace_back(std::atan2(dx * vx + dy * vy + dz * vz, dx * ux + dy * uy + dz * uz),
                            vi);
    }
    std::sort(angles.begin(), angles.end());
    std::vector<int> cycle;
    for (const auto& [angle, vi] : angles) cycle.push_back(vi);
    return cycle;
}

}  // namespace detail

/// OFF text with decimal vertex coordinates (padded to three dimensions when needed).
/// The exact geometry lives in the companion JSON.
inline std::string off_string(const Polytope& p) {
    std::ostringstream out;
    long long edge_count = 0;
    const int d = p.dim();
    for (std::size_t a = 0; a < p.vertex_count(); ++a)
        for (std::size_t b = a + 1; b < p.vertex_count(); ++b)
            if (bits::and_popcount(p.v.facet_masks[a], p.v.facet_masks[b]) >= d - 1) ++edge_count;
    out << "OFF\n" << p.vertex_count() << " " << p.facet_count() << " " << edge_count << "\n";
    for (const auto& v : p.v.vertices) {
        for (int j = 0; j < std::max(d, 3); ++j) {
            if (j) out << " ";
            out << (j < d ? to_decimal_string(v[j]) : "0");
        }
        out << "\n";
    }
    for (std::size_t f = 0; f < p.facet_count(); ++f) {
        std::vector<int> members;
        for (std::size_t vi = 0; vi < p.vertex_count(); ++vi)
            if (bits::get(p.v.facet_masks[vi], f)) members.push_back(static_cast<int>(vi));
        if (d == 3 && members.size() >= 3)
            members = detail::facet_cycle_3d(p, members, f);
        out << members.size();
        for (int vi : members) out << " " << vi;
        out << "\n";
    }
    return out.str();
}

}  // namespace halo
