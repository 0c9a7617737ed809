#pragma once

#include "halo/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace halo {

namespace bits {

inline std::vector<std::uint64_t> make(std::size_t nbits) {
    return std::vector<std::uint64_t>((nbits + 63) / 64, 0);
}
inline void set(std::vector<std::uint64_t>& w, std::size_t i) { w[i >> 6] |= 1ull << (i & 63); }
inline bool get(const std::vector<std::uint64_t>& w, std::size_t i) {
    return (w[i >> 6] >> (i & 63)) & 1ull;
}
inline int and_popcount(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    int c = 0;
    for (std::size_t k = 0; k < a.size(); ++k) c += __builtin_popcountll(a[k] & b[k]);
    return c;
}
inline bool is_subset(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] & ~b[k]) return false;
    return true;
}

}  // namespace bits

/// Face poset of a flag complex: elements are the pairwise-compatible atom sets,
/// ordered by reverse containment, with the empty set as unique top. The rank of a
/// face is ambient_dim - |face|.
template <class Atom>
struct FacePoset {
    std::string object;
    int ambient_dim = 0;
    std::vector<Atom> atoms;
    std::vector<std::vector<char>> compat;   // symmetric, diagonal unused
    std::vector<std::vector<int>> faces;     // sorted atom ids; canonical order: size asc, lex

    int rank_of(std::size_t face_id) const {
        return ambient_dim - static_cast<int>(faces[face_id].size());
    }

    std::vector<long long> f_vector() const {
        std::vector<long long> f(std::max(ambient_dim, 0), 0);
        for (std::size_t i = 0; i < faces.size(); ++i) {
            const int r = rank_of(i);
            if (r < ambient_dim) {
                if (r < 0) throw std::logic_error("f_vector: face below rank 0");
                ++f[r];
            }
        }
        return f;
    }

    /// Faces of maximum size (rank 0 when the complex is simple).
    std::vector<std::vector<int>> maximum_faces() const {
        std::size_t best = 0;
        for (const auto& f : faces) best = std::max(best, f.size());
        std::vector<std::vector<int>> out;
        for (const auto& f : faces)
            if (f.size() == best) out.push_back(f);
        return out;
    }

    bool face_is_extendable(const std::vector<int>& face) const {
        for (int c = 0; c < static_cast<int>(atoms.size()); ++c) {
            if (std::binary_search(face.begin(), face.end(), c)) continue;
            bool ok = true;
            for (int a : face)
                if (!compat[a][c]) { ok = false; break; }
            if (ok) return true;
        }
        return false;
    }
};

namespace detail {

template <class Atom>
void enumerate_cliques(const FacePoset<Atom>& p, std::vector<int>& current,
                       std::vector<int> candidates, std::vector<std::vector<int>>& out) {
    out.push_back(current);
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        const int c = candidates[i];
        std::vector<int> next;
        next.reserve(candidates.size() - i);
        for (std::size_t j = i + 1; j < candidates.size(); ++j)
            if (p.compat[c][candidates[j]]) next.push_back(candidates[j]);
        current.push_back(c);
        enumerate_cliques(p, current, std::move(next), out);
        current.pop_back();
    }
}

}  // namespace detail

/// Builds the poset from atoms plus a pairwise compatibility predicate.
template <class Atom, class CompatFn>
FacePoset<Atom> build_flag_poset(std::string object, int ambient_dim, std::vector<Atom> atoms,
                                 CompatFn&& compatible) {
    FacePoset<Atom> p;
    p.object = std::move(object);
    p.ambient_dim = ambient_dim;
    p.atoms = std::move(atoms);
    const int m = static_cast<int>(p.atoms.size());
    p.compat.assign(m, std::vector<char>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            p.compat[i][j] = p.compat[j][i] = compatible(p.atoms[i], p.atoms[j]) ? 1 : 0;
    std::vector<int> all(m);
    for (int i = 0; i < m; ++i) all[i] = i;
    std::vector<int> current;
    detail::enumerate_cliques(p, current, std::move(all), p.faces);
    std::stable_sort(p.faces.begin(), p.faces.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return p;
}

/// Product complex: faces are unions of one face from each factor.
template <class Atom>
FacePoset<Atom> product_poset(const FacePoset<Atom>& a, const FacePoset<Atom>& b) {
    FacePoset<Atom> p;
    p.object = a.object + " x " + b.object;
    p.ambient_dim = a.ambient_dim + b.ambient_dim;
    p.atoms = a.atoms;
    p.atoms.insert(p.atoms.end(), b.atoms.begin(), b.atoms.end());
    const int na = static_cast<int>(a.atoms.size());
    const int m = static_cast<int>(p.atoms.size());
    p.compat.assign(m, std::vector<char>(m, 1));
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) p.compat[i][j] = a.compat[i][j];
    for (int i = na; i < m; ++i)
        for (int j = na; j < m; ++j) p.compat[i][j] = b.compat[i - na][j - na];
    for (const auto& fa : a.faces) {
        for (const auto& fb : b.faces) {
            std::vector<int> f = fa;
            for (int id : fb) f.push_back(id + na);
            p.faces.push_back(std::move(f));
        }
    }
    std::stable_sort(p.faces.begin(), p.faces.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });
    return p;
}

/// Interval [{atom}, top] of a flag poset, re-indexed as a poset in its own right:
/// the faces containing the atom, with the atom removed.
template <class Atom>
FacePoset<Atom> facet_interval(const FacePoset<Atom>& p, int atom_id) {
    FacePoset<Atom> out;
    out.object = p.object + " / atom" + std::to_string(atom_id);
    out.ambient_dim = p.ambient_dim - 1;
    std::vector<int> keep;  // atoms compatible with atom_id
    std::vector<int> remap(p.atoms.size(), -1);
    for (int c = 0; c < static_cast<int>(p.atoms.size()); ++c) {
        if (c != atom_id && p.compat[atom_id][c]) {
            remap[c] = static_cast<int>(keep.size());
            keep.push_back(c);
            out.atoms.push_back(p.atoms[c]);
        }
    }
    const int m = static_cast<int>(keep.size());
    out.compat.assign(m, std::vector<char>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) out.compat[i][j] = p.compat[keep[i]][keep[j]];
    for (const auto& f : p.faces) {
        if (!std::binary_search(f.begin(), f.end(), atom_id)) continue;
        std::vector<int> g;
        g.reserve(f.size() - 1);
        for (int id : f)
            if (id != atom_id) g.push_back(remap[id]);
        std::sort(g.begin(), g.end());
        out.faces.push_back(std::move(g));
    }
    std::stable_sort(out.faces.begin(), out.faces.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x < y;
    });
    return out;
}

/// Order relation of a finite graded poset, in bitset form. Used for the structural
/// checks (gradedness, Euler) and for isomorphism testing.
struct RelationMatrix {
    int n = 0;
    std::vector<int> rank;
    std::vector<std::vector<std::uint64_t>> up;    // up[i]: all j with i <= j
    std::vector<std::vector<std::uint64_t>> down;  // down[j]: all i with i <= j

    bool le(int i, int j) const { return bits::get(up[i], j); }

    static RelationMatrix from_leq(int n, const std::vector<int>& rank,
                                   const std::vector<std::pair<int, int>>& leq_pairs) {
        RelationMatrix r;
        r.n = n;
        r.rank = rank;
        r.up.assign(n, bits::make(n));
        r.down.assign(n, bits::make(n));
        for (int i = 0; i < n; ++i) {
            bits::set(r.up[i], i);
            bits::set(r.down[i], i);
        }
        for (auto [i, j] : leq_pairs) {
            bits::set(r.up[i], j);
            bits::set(r.down[j], i);
        }
        return r;
    }
};

template <class Atom>
RelationMatrix relation_matrix(const FacePoset<Atom>& p) {
    const int n = static_cast<int>(p.faces.size());
    std::vector<std::vector<std::uint64_t>> masks;  // atom sets as bitsets
    masks.reserve(n);
    for (const auto& f : p.faces) {
        auto m = bits::make(std::max<std::size_t>(p.atoms.size(), 1));
        for (int id : f) bits::set(m, id);
        masks.push_back(std::move(m));
    }
    RelationMatrix r;
    r.n = n;
    r.rank.resize(n);
    for (int i = 0; i < n; ++i) r.rank[i] = p.rank_of(i);
    r.up.assign(n, bits::make(n));
    r.down.assign(n, bits::make(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            // i <= j in the face order iff atoms(i) contains atoms(j)
            if (bits::is_subset(masks[j], masks[i])) {
                bits::set(r.up[i], j);
                bits::set(r.down[j], i);
            }
        }
    }
    return r;
}

struct GradedCheck {
    bool ok = true;
    std::string detail;
};

/// Certifies the rank function: unique top, every non-top element has an upper
/// cover, and every covering step raises rank by exactly one. Together these force
/// all maximal chains from an element to the top to have length equal to corank.
inline GradedCheck check_graded(const RelationMatrix& r) {
    GradedCheck res;
    if (r.n == 0) {
        res.ok = false;
        res.detail = "empty poset";
        return res;
    }
    int top = -1;
    for (int i = 0; i < r.n; ++i) {
        if (bits::and_popcount(r.up[i], r.up[i]) == 1) {  // only itself above
            if (top != -1) {
                res.ok = false;
                res.detail = "two maximal elements: " + std::to_string(top) + ", " + std::to_string(i);
                return res;
            }
            top = i;
        }
    }
    if (top == -1) {
        res.ok = false;
        res.detail = "no maximal element";
        return res;
    }
    for (int i = 0; i < r.n; ++i) {
        for (int j = 0; j < r.n; ++j) {
            if (i == j || !r.le(i, j)) continue;
            if (bits::and_popcount(r.up[i], r.down[j]) == 2 && r.rank[j] - r.rank[i] != 1) {
                res.ok = false;
                res.detail = "cover with rank gap: " + std::to_string(i) + " < " + std::to_string(j);
                return res;
            }
        }
    }
    return res;
}

inline bool euler_relation_holds(const std::vector<long long>& f_vector, int dim) {
    long long sum = 0;
    for (std::size_t i = 0; i < f_vector.size(); ++i)
        sum += (i % 2 == 0) ? f_vector[i] : -f_vector[i];
    const long long expected = 1 - ((dim % 2 == 0) ? 1 : -1);
    return sum == expected;
}

namespace detail {

// Iterated neighborhood refinement: color by rank, then repeatedly by the multiset of
// colors above and below. The classes prune the backtracking search.
inline std::vector<long long> refine_colors(const RelationMatrix& r) {
    const int n = r.n;
    std::vector<long long> color(n);
    for (int i = 0; i < n; ++i) color[i] = r.rank[i];
    for (int round = 0; round < 4; ++round) {
        std::vector<std::vector<long long>> sig(n);
        for (int i = 0; i < n; ++i) {
            std::vector<long long> ups, downs;
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                if (r.le(i, j)) ups.push_back(color[j]);
                if (r.le(j, i)) downs.push_back(color[j]);
            }
            std::sort(ups.begin(), ups.end());
            std::sort(downs.begin(), downs.end());
            sig[i].push_back(color[i]);
            sig[i].push_back(static_cast<long long>(ups.size()) << 32 |
                             static_cast<long long>(downs.size()));
            sig[i].insert(sig[i].end(), ups.begin(), ups.end());
            sig[i].push_back(-1);
            sig[i].insert(sig[i].end(), downs.begin(), downs.end());
        }
        std::map<std::vector<long long>, long long> classes;
        for (int i = 0; i < n; ++i) classes.emplace(sig[i], 0);
        long long next = 0;
        for (auto& [k, v] : classes) v = next++;
        bool changed = false;
        for (int i = 0; i < n; ++i) {
            const long long c = classes[sig[i]];
            if (c != color[i]) changed = true;
            color[i] = c;
        }
        if (!changed) break;
    }
    return color;
}

inline bool iso_backtrack(const RelationMatrix& a, const RelationMatrix& b,
                          const std::vector<long long>& ca, const std::vector<long long>& cb,
                          const std::vector<int>& order, std::size_t pos, std::vector<int>& map,
                          std::vector<char>& used) {
    if (pos == order.size()) return true;
    const int x = order[pos];
    for (int y = 0; y < b.n; ++y) {
        if (used[y] || cb[y] != ca[x]) continue;
        bool ok = true;
        for (std::size_t q = 0; q < pos && ok; ++q) {
            const int x2 = order[q];
            const int y2 = map[x2];
            if (a.le(x, x2) != b.le(y, y2) || a.le(x2, x) != b.le(y2, y)) ok = false;
        }
        if (!ok) continue;
        map[x] = y;
        used[y] = 1;
        if (iso_backtrack(a, b, ca, cb, order, pos + 1, map, used)) return true;
        used[y] = 0;
        map[x] = -1;
    }
    return false;
}

}  // namespace detail

/// Rank-preserving order isomorphism between two finite posets, or nullopt.
inline std::optional<std::vector<int>> poset_isomorphism(const RelationMatrix& a,
                                                         const RelationMatrix& b) {
    if (a.n != b.n) return std::nullopt;
    if (a.n == 0) return std::vector<int>{};
    auto ca = detail::refine_colors(a);
    auto cb = detail::refine_colors(b);
    {
        auto sa = ca, sb = cb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return std::nullopt;
    }
    // Assign rare color classes first.
    std::vector<long long> freq_key(a.n);
    std::map<long long, int> freq;
    for (auto c : ca) ++freq[c];
    std::vector<int> order(a.n);
    for (int i = 0; i < a.n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        if (freq[ca[i]] != freq[ca[j]]) return freq[ca[i]] < freq[ca[j]];
        if (ca[i] != ca[j]) return ca[i] < ca[j];
        return i < j;
    });
    std::vector<int> map(a.n, -1);
    std::vector<char> used(b.n, 0);
    if (detail::iso_backtrack(a, b, ca, cb, order, 0, map, used)) return map;
    return std::nullopt;
}

}  // namespace halo
