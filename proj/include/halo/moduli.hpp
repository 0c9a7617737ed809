#pragma once

#include "halo/poset.hpp"
#include "halo/tubing_poset.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace halo {

/// A marked bordered surface type: genus g, h ordered boundary circles, n interior
/// punctures, and m[i] marked points on boundary circle i.
struct SurfaceSignature {
    int g = 0;
    int h = 0;
    int n = 0;
    std::vector<int> m;

    int boundary_marks() const {
        int total = 0;
        for (int mi : m) total += mi;
        return total;
    }

    std::string str() const {
        std::string s = "(" + std::to_string(g) + "," + std::to_string(h) + ")(" +
                        std::to_string(n) + ",<";
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(m[i]);
        }
        return s + ">)";
    }

    friend bool operator==(const SurfaceSignature&, const SurfaceSignature&) = default;
};

inline void validate_signature(const SurfaceSignature& s) {
    if (s.g < 0 || s.h < 0 || s.n < 0)
        throw std::invalid_argument("signature: g, h, n must be non-negative");
    if (static_cast<int>(s.m.size()) != s.h)
        throw std::invalid_argument("signature: need one mark count per boundary circle");
    for (int mi : s.m)
        if (mi < 0) throw std::invalid_argument("signature: mark counts must be non-negative");
}

/// Finite automorphism group, via hyperbolicity of the complex double: the double of a
/// type-(g,h) surface is closed of genus 2g+h-1, and the 2n+m special points must push
/// its Euler characteristic negative. For h = 0 this is the usual 2g - 2 + n > 0.
inline bool is_stable(const SurfaceSignature& s) {
    validate_signature(s);
    if (s.h == 0) return 2 * s.g - 2 + s.n > 0;
    return 4 * s.g + 2 * s.h - 4 + 2 * s.n + s.boundary_marks() > 0;
}

/// Real dimension of the compactified moduli space: 6g + 3h - 6 + 2n + m.
inline int dimension(const SurfaceSignature& s) {
    if (!is_stable(s)) throw std::invalid_argument("dimension: signature is not stable");
    return 6 * s.g + 3 * s.h - 6 + 2 * s.n + s.boundary_marks();
}

/// Decomposing curve classes and their Fenchel-Nielsen weights.
enum class CurveKind { Arc, OneLoop, TwoLoop };

inline int curve_weight(CurveKind c) { return c == CurveKind::TwoLoop ? 2 : 1; }

/// Rule-level statement of which stable signatures admit a weight-two loop: exactly
/// the non-polytopal cases.
inline bool allows_two_loop(const SurfaceSignature& s) {
    validate_signature(s);
    if (s.g > 0) return true;
    if (s.h + s.n > 3) return true;
    const bool any_marks = s.boundary_marks() > 0;
    if (s.h + s.n == 3 && any_marks) return true;
    if (s.h == 2) {
        if (s.m[0] > 0 && s.m[1] > 0) return true;
    }
    return false;
}

struct PolytopalityResult {
    enum class Verdict { Polytope, NotPolytope, Unstable };
    enum class Family { Associahedron, Cyclohedron, Halohedron };
    enum class Reason {
        PositiveGenus,
        HPlusNGreaterThan3,
        HPlusN3WithBoundaryMarks,
        TwoMarkedBoundaries
    };

    Verdict verdict = Verdict::Unstable;
    std::optional<Family> family;
    int index = 0;  // K_index, W_index, or Y_index
    std::optional<Reason> reason;

    std::string family_name() const {
        if (!family) return "";
        switch (*family) {
            case Family::Associahedron: return "K_" + std::to_string(index);
            case Family::Cyclohedron: return "W_" + std::to_string(index);
            case Family::Halohedron: return "Y_" + std::to_string(index);
        }
        return "";
    }

    std::string reason_name() const {
        if (!reason) return "";
        switch (*reason) {
            case Reason::PositiveGenus: return "positive_genus";
            case Reason::HPlusNGreaterThan3: return "h_plus_n_greater_than_3";
            case Reason::HPlusN3WithBoundaryMarks: return "h_plus_n_3_with_boundary_marks";
            case Reason::TwoMarkedBoundaries: return "two_marked_boundaries";
        }
        return "";
    }
};

/// The complete polytopality classification. Boundary circles are matched up to
/// reordering (sorted mark counts); the raw signature is untouched.
inline PolytopalityResult classify_polytopality(const SurfaceSignature& s) {
    PolytopalityResult out;
    if (!is_stable(s)) {
        out.verdict = PolytopalityResult::Verdict::Unstable;
        return out;
    }
    std::vector<int> marks = s.m;
    std::sort(marks.begin(), marks.end(), std::greater<>());

    using Family = PolytopalityResult::Family;
    auto polytope = [&out](Family family, int index) {
        out.verdict = PolytopalityResult::Verdict::Polytope;
        out.family = family;
        out.index = index;
    };
    if (s.g == 0) {
        if (s.h == 0 && s.n == 3) {
            polytope(Family::Associahedron, 2);
            return out;
        }
        if (s.h == 1 && s.n == 2 && marks == std::vector<int>{0}) {
            polytope(Family::Associahedron, 3);
            return out;
        }
        if (s.h == 2 && s.n == 1 && marks == std::vector<int>{0, 0}) {
            polytope(Family::Associahedron, 4);
            return out;
        }
        if (s.h == 3 && s.n == 0 && marks == std::vector<int>{0, 0, 0}) {
            polytope(Family::Associahedron, 5);
            return out;
        }
        if (s.h == 1 && s.n == 0 && marks[0] >= 3) {
            polytope(Family::Associahedron, marks[0] - 1);
            return out;
        }
        if (s.h == 1 && s.n == 1 && marks[0] >= 1) {
            polytope(Family::Cyclohedron, marks[0]);
            return out;
        }
        if (s.h == 2 && s.n == 0 && marks[0] >= 1 && marks[1] == 0) {
            polytope(Family::Halohedron, marks[0]);
            return out;
        }
    }
    out.verdict = PolytopalityResult::Verdict::NotPolytope;
    using Reason = PolytopalityResult::Reason;
    if (s.g > 0) out.reason = Reason::PositiveGenus;
    else if (s.h + s.n > 3) out.reason = Reason::HPlusNGreaterThan3;
    else if (s.h + s.n == 3 && s.boundary_marks() > 0) out.reason = Reason::HPlusN3WithBoundaryMarks;
    else if (s.h == 2 && s.m[0] > 0 && s.m[1] > 0) out.reason = Reason::TwoMarkedBoundaries;
    else throw std::logic_error("classify_polytopality: unclassified stable signature " + s.str());
    return out;
}

/// Face poset of the stratification of a polytopal moduli space.
inline FacePoset<DesignTube> strata_poset(const SurfaceSignature& s) {
    const auto verdict = classify_polytopality(s);
    if (verdict.verdict == PolytopalityResult::Verdict::Unstable)
        throw std::invalid_argument("strata_poset: signature " + s.str() + " is not stable");
    if (verdict.verdict == PolytopalityResult::Verdict::NotPolytope)
        throw std::invalid_argument("strata_poset: " + s.str() + " is not polytopal (" +
                                    verdict.reason_name() + ")");
    using Family = PolytopalityResult::Family;
    switch (*verdict.family) {
        case Family::Associahedron: return associahedron_poset(verdict.index);
        case Family::Cyclohedron: return cyclohedron_poset(verdict.index);
        case Family::Halohedron: return halohedron_poset(verdict.index);
    }
    throw std::logic_error("strata_poset: unhandled family");
}

inline nlohmann::json verdict_json(const SurfaceSignature& s) {
    const auto result = classify_polytopality(s);
    nlohmann::json j;
    j["signature"] = {{"g", s.g}, {"h", s.h}, {"n", s.n}, {"m", s.m}};
    const bool stable = result.verdict != PolytopalityResult::Verdict::Unstable;
    j["stable"] = stable;
    j["dimension"] = stable ? nlohmann::json(dimension(s)) : nlohmann::json();
    switch (result.verdict) {
        case PolytopalityResult::Verdict::Polytope: j["verdict"] = "polytope"; break;
        case PolytopalityResult::Verdict::NotPolytope: j["verdict"] = "not_polytope"; break;
        case PolytopalityResult::Verdict::Unstable: j["verdict"] = "unstable"; break;
    }
    j["family"] = result.family_name();
    j["reason"] = result.reason_name();
    return j;
}

/// All signatures (including unstable ones) with every parameter small enough that any
/// stable member has dimension at most `dim_bound`. Used by the exhaustive scans.
inline std::vector<SurfaceSignature> enumerate_signatures(int dim_bound) {
    std::vector<SurfaceSignature> out;
    // 6g - 6 + 3h + 2n + m <= dim_bound bounds every parameter individually.
    const int budget = dim_bound + 6;
    for (int g = 0; 6 * g <= budget; ++g) {
        for (int h = 0; 6 * g + 3 * h <= budget; ++h) {
            for (int n = 0; 6 * g + 3 * h + 2 * n <= budget; ++n) {
                const int m_total_max = budget - 6 * g - 3 * h - 2 * n;
                std::vector<int> marks(h, 0);
                // enumerate all h-tuples with sum <= m_total_max
                std::function<void(int, int)> rec = [&](int idx, int remaining) {
                    if (idx == h) {
                        out.push_back({g, h, n, marks});
                        return;
                    }
                    for (int v = 0; v <= remaining; ++v) {
                        marks[idx] = v;
                        rec(idx + 1, remaining - v);
                    }
                    marks[idx] = 0;
                };
                rec(0, m_total_max);
            }
        }
    }
    return out;
}

}  // namespace halo
