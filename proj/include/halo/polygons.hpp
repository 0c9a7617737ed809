#pragma once

#include "halo/poset.hpp"
#include "halo/tubing_poset.hpp"

#include <json.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace halo {

/// Diagonalization models: A(n) on a convex n-gon, B(n) on a centrally symmetric
/// 2n-gon, C(n) on a centrally symmetric 2n-gon with a central vertex.
enum class PolygonModel { A, B, C };

inline std::string to_string(PolygonModel m) {
    switch (m) {
        case PolygonModel::A: return "A";
        case PolygonModel::B: return "B";
        case PolygonModel::C: return "C";
    }
    return "?";
}

/// One poset-rank unit of a diagonalization.
///  - Chord (A): a single diagonal {a, b} of the n-gon, a < b.
///  - Pair (B, C): the centrally symmetric pair {a, a+span} and {a+n, a+span+n} on the
///    2n-gon, canonical a in [0, n). In C the span may reach n: a pair of diameters,
///    which avoids the central vertex and is distinct from a single diameter.
///  - Diameter (B, C): the chord {a, a+n}, a in [0, n).
///  - Circle (C): a closed curve around the central vertex.
struct PolygonElement {
    enum class Kind { Chord, Pair, Diameter, Circle };
    PolygonModel model = PolygonModel::A;
    int n = 0;  // model size parameter, not the vertex count of the polygon
    Kind kind = Kind::Chord;
    int a = 0;
    int span = 0;  // Chord: b - a; Pair: chord span; unused otherwise

    friend bool operator==(const PolygonElement&, const PolygonElement&) = default;
    friend auto operator<=>(const PolygonElement&, const PolygonElement&) = default;
};

inline std::string to_string(const PolygonElement& e) {
    using K = PolygonElement::Kind;
    switch (e.kind) {
        case K::Chord:
            return "chord(" + std::to_string(e.a) + "," + std::to_string(e.a + e.span) + ")";
        case K::Pair:
            return "pair(a=" + std::to_string(e.a) + ",span=" + std::to_string(e.span) + ")";
        case K::Diameter: return "diameter(" + std::to_string(e.a) + ")";
        case K::Circle: return "circle";
    }
    return "?";
}

namespace detail {

inline bool in_open_arc(int x, int from, int to, int circumference) {
    const int offset = ((x - from) % circumference + circumference) % circumference;
    const int span = ((to - from) % circumference + circumference) % circumference;
    return 0 < offset && offset < span;
}

// Strict transversal crossing; chords sharing a polygon vertex do not cross.
inline bool chords_cross(std::pair<int, int> p, std::pair<int, int> q, int circumference) {
    auto norm = [circumference](int v) { return ((v % circumference) + circumference) % circumference; };
    const int a = norm(p.first), b = norm(p.second);
    const int c = norm(q.first), d = norm(q.second);
    if (a == c || a == d || b == c || b == d) return false;
    return in_open_arc(c, a, b, circumference) != in_open_arc(d, a, b, circumference);
}

inline std::vector<std::pair<int, int>> chords_of(const PolygonElement& e) {
    using K = PolygonElement::Kind;
    const int two_n = 2 * e.n;
    switch (e.kind) {
        case K::Chord: return {{e.a, e.a + e.span}};
        case K::Pair: {
            std::vector<std::pair<int, int>> out{{e.a, e.a + e.span}};
            if (e.span != e.n) out.push_back({e.a + e.n, e.a + e.span + e.n});
            for (auto& [u, v] : out) {
                u = ((u % two_n) + two_n) % two_n;
                v = ((v % two_n) + two_n) % two_n;
            }
            return out;
        }
        case K::Diameter: return {{e.a, e.a + e.n}};
        case K::Circle: return {};
    }
    return {};
}

}  // namespace detail

inline void validate_polygon_element(const PolygonElement& e) {
    using K = PolygonElement::Kind;
    switch (e.model) {
        case PolygonModel::A:
            if (e.kind != K::Chord) throw std::invalid_argument("A(n) admits chords only");
            if (e.n < 3) throw std::invalid_argument("A(n) requires n >= 3");
            if (e.a < 0 || e.span < 2 || e.a + e.span > e.n - 1 ||
                (e.a == 0 && e.a + e.span == e.n - 1))
                throw std::invalid_argument("invalid chord");
            break;
        case PolygonModel::B:
            if (e.kind == K::Pair) {
                if (e.a < 0 || e.a >= e.n || e.span < 2 || e.span > e.n - 1)
                    throw std::invalid_argument("invalid symmetric pair");
            } else if (e.kind == K::Diameter) {
                if (e.n < 2 || e.a < 0 || e.a >= e.n)
                    throw std::invalid_argument("invalid diameter");
            } else {
                throw std::invalid_argument("B(n) admits pairs and diameters only");
            }
            break;
        case PolygonModel::C:
            if (e.kind == K::Chord) throw std::invalid_argument("C(n) has no plain chords");
            if (e.kind == K::Pair && (e.a < 0 || e.a >= e.n || e.span < 2 || e.span > e.n))
                throw std::invalid_argument("invalid symmetric pair");
            if (e.kind == K::Diameter && (e.a < 0 || e.a >= e.n))
                throw std::invalid_argument("invalid diameter");
            break;
    }
}

/// Crossing predicate of the three models. In C, two diameters never cross (they meet
/// only at the central vertex), a circle crosses every diameter, and a circle is
/// compatible with every symmetric pair.
inline bool crosses(const PolygonElement& e1, const PolygonElement& e2) {
    using K = PolygonElement::Kind;
    if (e1.model != e2.model || e1.n != e2.n)
        throw std::invalid_argument("crosses: elements from different models");
    validate_polygon_element(e1);
    validate_polygon_element(e2);
    if (e1 == e2) return false;
    if (e1.model == PolygonModel::C) {
        const bool c1 = e1.kind == K::Circle, c2 = e2.kind == K::Circle;
        const bool d1 = e1.kind == K::Diameter, d2 = e2.kind == K::Diameter;
        if (c1 && c2) return false;
        if (c1 || c2) return d1 || d2;  // circle vs diameter crosses, circle vs pair does not
        if (d1 && d2) return false;
    }
    const int circumference = e1.model == PolygonModel::A ? e1.n : 2 * e1.n;
    for (const auto& p : detail::chords_of(e1))
        for (const auto& q : detail::chords_of(e2))
            if (detail::chords_cross(p, q, circumference)) return true;
    return false;
}

/// All elements of the model in canonical order.
inline std::vector<PolygonElement> polygon_elements(PolygonModel model, int n) {
    using K = PolygonElement::Kind;
    std::vector<PolygonElement> out;
    switch (model) {
        case PolygonModel::A: {
            if (n < 3) throw std::invalid_argument("A(n) requires n >= 3");
            for (int a = 0; a < n; ++a)
                for (int b = a + 2; b < n; ++b) {
                    if (a == 0 && b == n - 1) continue;  // that pair is a side
                    out.push_back({model, n, K::Chord, a, b - a});
                }
            std::sort(out.begin(), out.end());
            break;
        }
        case PolygonModel::B: {
            if (n < 1) throw std::invalid_argument("B(n) requires n >= 1");
            for (int span = 2; span <= n - 1; ++span)
                for (int a = 0; a < n; ++a) out.push_back({model, n, K::Pair, a, span});
            if (n >= 2)
                for (int a = 0; a < n; ++a) out.push_back({model, n, K::Diameter, a, 0});
            break;
        }
        case PolygonModel::C: {
            if (n < 1) throw std::invalid_argument("C(n) requires n >= 1");
            out.push_back({model, n, K::Circle, 0, 0});
            for (int span = 2; span <= n; ++span)
                for (int a = 0; a < n; ++a) out.push_back({model, n, K::Pair, a, span});
            for (int a = 0; a < n; ++a) out.push_back({model, n, K::Diameter, a, 0});
            break;
        }
    }
    return out;
}

inline int polygon_ambient_dim(PolygonModel model, int n) {
    switch (model) {
        case PolygonModel::A: return n - 3;
        case PolygonModel::B: return n - 1;
        case PolygonModel::C: return n;
    }
    return 0;
}

/// Diagonalization poset: sets of pairwise noncrossing elements under reverse containment.
inline FacePoset<PolygonElement> polygon_poset(PolygonModel model, int n) {
    return build_flag_poset<PolygonElement>(
        to_string(model) + "(" + std::to_string(n) + ")", polygon_ambient_dim(model, n),
        polygon_elements(model, n),
        [](const PolygonElement& x, const PolygonElement& y) { return !crosses(x, y); });
}

/// The design tube an element corresponds to under the model's bijection.
///  A(n): the chord {a, b} cuts off the run a+1..b-1 of path(n-2).
///  B(n), C(n): the element with span s starting at a captures the cycle nodes strictly
///  between the chord endpoints; a diameter of C marks the square tube at its base node.
inline DesignTube polygon_element_tube(const PolygonElement& e) {
    using K = PolygonElement::Kind;
    validate_polygon_element(e);
    switch (e.model) {
        case PolygonModel::A: {
            NodeSet run;
            for (int v = e.a + 1; v <= e.a + e.span - 1; ++v) run.push_back(v);
            return DesignTube::round(std::move(run));
        }
        case PolygonModel::B:
        case PolygonModel::C: {
            if (e.kind == K::Circle) {
                NodeSet all;
                for (int v = 1; v <= e.n; ++v) all.push_back(v);
                return DesignTube::round(std::move(all));
            }
            if (e.kind == K::Diameter && e.model == PolygonModel::C)
                return DesignTube::square((e.a % e.n) + 1);
            const int span = e.kind == K::Diameter ? e.n : e.span;
            NodeSet run;
            for (int j = e.a + 1; j <= e.a + span - 1; ++j) run.push_back((j % e.n) + 1);
            return DesignTube::round(make_node_set(std::move(run)));
        }
    }
    throw std::logic_error("polygon_element_tube: unhandled model");
}

struct PolygonIsoReport {
    bool ok = true;
    std::string detail;
    std::vector<int> atom_map;  // polygon atom id -> tubing atom id
};

namespace detail {

inline FacePoset<DesignTube> polygon_iso_target(PolygonModel model, int n) {
    switch (model) {
        case PolygonModel::A: return associahedron_poset(n - 1);  // A(n) is K_{n-1}
        case PolygonModel::B: return cyclohedron_poset(n);
        case PolygonModel::C: return halohedron_poset(n);
    }
    throw std::logic_error("polygon_iso_target: unhandled model");
}

}  // namespace detail

/// Certified isomorphism between the diagonalization poset and its tubing poset:
/// explicit element bijection, compatibility transfer, exact face matching, and a
/// pairwise order-preservation check in both directions.
inline PolygonIsoReport polygon_tubing_iso(PolygonModel model, int n) {
    PolygonIsoReport rep;
    const auto polygon = polygon_poset(model, n);
    const auto tubing = detail::polygon_iso_target(model, n);
    if (polygon.atoms.size() != tubing.atoms.size()) {
        rep.ok = false;
        rep.detail = "element counts differ: " + std::to_string(polygon.atoms.size()) + " vs " +
                     std::to_string(tubing.atoms.size());
        return rep;
    }
    std::map<DesignTube, int> tube_id;
    for (int i = 0; i < static_cast<int>(tubing.atoms.size()); ++i)
        tube_id.emplace(tubing.atoms[i], i);
    rep.atom_map.assign(polygon.atoms.size(), -1);
    std::vector<char> hit(tubing.atoms.size(), 0);
    for (std::size_t i = 0; i < polygon.atoms.size(); ++i) {
        const DesignTube image = polygon_element_tube(polygon.atoms[i]);
        const auto it = tube_id.find(image);
        if (it == tube_id.end() || hit[it->second]) {
            rep.ok = false;
            rep.detail = "element map not bijective at " + to_string(polygon.atoms[i]);
            return rep;
        }
        hit[it->second] = 1;
        rep.atom_map[i] = it->second;
    }
    for (std::size_t i = 0; i < polygon.atoms.size(); ++i) {
        for (std::size_t j = i + 1; j < polygon.atoms.size(); ++j) {
            if (polygon.compat[i][j] != tubing.compat[rep.atom_map[i]][rep.atom_map[j]]) {
                rep.ok = false;
                rep.detail = "compatibility mismatch: " + to_string(polygon.atoms[i]) + " vs " +
                             to_string(polygon.atoms[j]);
                return rep;
            }
        }
    }
    if (polygon.faces.size() != tubing.faces.size()) {
        rep.ok = false;
        rep.detail = "face counts differ";
        return rep;
    }
    std::map<std::vector<int>, int> target_faces;
    for (int i = 0; i < static_cast<int>(tubing.faces.size()); ++i)
        target_faces.emplace(tubing.faces[i], i);
    std::vector<int> face_map(polygon.faces.size(), -1);
    for (std::size_t i = 0; i < polygon.faces.size(); ++i) {
        std::vector<int> image;
        image.reserve(polygon.faces[i].size());
        for (int id : polygon.faces[i]) image.push_back(rep.atom_map[id]);
        std::sort(image.begin(), image.end());
        const auto it = target_faces.find(image);
        if (it == target_faces.end()) {
            rep.ok = false;
            rep.detail = "diagonalization " + std::to_string(i) + " has no matching tubing";
            return rep;
        }
        face_map[i] = it->second;
        if (polygon.rank_of(i) != tubing.rank_of(it->second)) {
            rep.ok = false;
            rep.detail = "rank mismatch at face " + std::to_string(i);
            return rep;
        }
    }
    // Order preservation, both directions, checked pairwise on the full relation.
    const auto rel_p = relation_matrix(polygon);
    const auto rel_t = relation_matrix(tubing);
    for (int x = 0; x < rel_p.n; ++x) {
        for (int y = 0; y < rel_p.n; ++y) {
            if (rel_p.le(x, y) != rel_t.le(face_map[x], face_map[y])) {
                rep.ok = false;
                rep.detail = "order mismatch at face pair (" + std::to_string(x) + ", " +
                             std::to_string(y) + ")";
                return rep;
            }
        }
    }
    return rep;
}

inline nlohmann::json to_json(const PolygonElement& e) {
    using K = PolygonElement::Kind;
    nlohmann::json j;
    std::vector<int> endpoints;
    for (const auto& [u, v] : detail::chords_of(e)) {
        endpoints.push_back(u);
        endpoints.push_back(v);
    }
    std::sort(endpoints.begin(), endpoints.end());
    endpoints.erase(std::unique(endpoints.begin(), endpoints.end()), endpoints.end());
    switch (e.kind) {
        case K::Chord: j["kind"] = "chord"; break;
        case K::Pair: j["kind"] = "pair"; break;
        case K::Diameter: j["kind"] = "diameter"; break;
        case K::Circle: j["kind"] = "circle"; break;
    }
    j["endpoints"] = endpoints;
    return j;
}

inline nlohmann::json poset_json(const FacePoset<PolygonElement>& p) {
    nlohmann::json j;
    j["object"] = p.object;
    j["ambient_dim"] = p.ambient_dim;
    auto faces = nlohmann::json::array();
    for (std::size_t i = 0; i < p.faces.size(); ++i) {
        nlohmann::json face;
        auto elements = nlohmann::json::array();
        for (int id : p.faces[i]) elements.push_back(to_json(p.atoms[id]));
        face["elements"] = elements;
        face["dim"] = p.rank_of(i);
        faces.push_back(std::move(face));
    }
    j["faces"] = faces;
    j["f_vector"] = p.f_vector();
    return j;
}

}  // namespace halo
