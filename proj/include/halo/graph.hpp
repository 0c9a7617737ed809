#pragma once

#include <json.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace halo {

/// Sorted, duplicate-free node labels (labels run 1..n).
using NodeSet = std::vector<int>;

inline NodeSet make_node_set(std::vector<int> nodes) {
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    return nodes;
}

inline bool node_set_contains(const NodeSet& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

inline bool is_subset(const NodeSet& a, const NodeSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool sets_intersect(const NodeSet& a, const NodeSet& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j) ++i;
        else if (*j < *i) ++j;
        else return true;
    }
    return false;
}

inline NodeSet set_union(const NodeSet& a, const NodeSet& b) {
    NodeSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

/// Canonical comparison used for all set-valued output: size first, then lexicographic.
inline bool size_lex_less(const NodeSet& a, const NodeSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

/// Connected simple graph on nodes 1..n. Immutable after construction.
class Graph {
public:
    Graph(int node_count, std::vector<std::pair<int, int>> edge_list,
          std::string name = std::string())
        : n_(node_count), name_(std::move(name)) {
        if (n_ < 1) throw std::invalid_argument("Graph: node count must be positive");
        adj_.assign(n_ + 1, std::vector<char>(n_ + 1, 0));
        for (auto& [a, b] : edge_list) {
            if (a > b) std::swap(a, b);
            if (a < 1 || b > n_) throw std::invalid_argument("Graph: edge endpoint out of range");
            if (a == b) throw std::invalid_argument("Graph: self-loops are not allowed");
            if (adj_[a][b]) throw std::invalid_argument("Graph: duplicate edge");
            adj_[a][b] = adj_[b][a] = 1;
        }
        std::sort(edge_list.begin(), edge_list.end());
        edges_ = std::move(edge_list);
        neighbors_.assign(n_ + 1, {});
        for (const auto& [a, b] : edges_) {
            neighbors_[a].push_back(b);
            neighbors_[b].push_back(a);
        }
        for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
        NodeSet all(n_);
        for (int v = 1; v <= n_; ++v) all[v - 1] = v;
        if (!connected_subset(all)) throw std::invalid_argument("Graph: graph must be connected");
        if (name_.empty()) name_ = "graph(n=" + std::to_string(n_) + ")";
    }

    static Graph path(int n) {
        if (n < 1) throw std::invalid_argument("path: n must be >= 1");
        std::vector<std::pair<int, int>> e;
        for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
        return Graph(n, std::move(e), "path(" + std::to_string(n) + ")");
    }

    // cycle(2) is the two-node graph with a single edge; multi-edges are never represented.
    static Graph cycle(int n) {
        if (n < 2) throw std::invalid_argument("cycle: n must be >= 2");
        std::vector<std::pair<int, int>> e;
        for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
        if (n > 2) e.emplace_back(1, n);
        return Graph(n, std::move(e), "cycle(" + std::to_string(n) + ")");
    }

    /// Hub is node 1, leaves are 2..n.
    static Graph star(int n) {
        if (n < 1) throw std::invalid_argument("star: n must be >= 1");
        std::vector<std::pair<int, int>> e;
        for (int i = 2; i <= n; ++i) e.emplace_back(1, i);
        return Graph(n, std::move(e), "star(" + std::to_string(n) + ")");
    }

    static Graph complete(int n) {
        if (n < 1) throw std::invalid_argument("complete: n must be >= 1");
        std::vector<std::pair<int, int>> e;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
        return Graph(n, std::move(e), "complete(" + std::to_string(n) + ")");
    }

    int node_count() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::string& name() const { return name_; }

    bool adjacent(int a, int b) const {
        check_label(a);
        check_label(b);
        return adj_[a][b] != 0;
    }

    const std::vector<int>& neighbors(int v) const {
        check_label(v);
        return neighbors_[v];
    }

    NodeSet all_nodes() const {
        NodeSet all(n_);
        for (int v = 1; v <= n_; ++v) all[v - 1] = v;
        return all;
    }

    /// True iff the induced subgraph on `nodes` is nonempty and connected.
    bool connected_subset(const NodeSet& nodes) const {
        for (int v : nodes) check_label(v);
        if (nodes.empty()) return false;
        std::vector<char> in(n_ + 1, 0), seen(n_ + 1, 0);
        for (int v : nodes) in[v] = 1;
        std::vector<int> stack{nodes.front()};
        seen[nodes.front()] = 1;
        std::size_t reached = 0;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            ++reached;
            for (int w : neighbors_[v]) {
                if (in[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        return reached == nodes.size();
    }

    bool is_path() const {
        for (int i = 1; i < n_; ++i)
            if (!adj_[i][i + 1]) return false;
        return static_cast<int>(edges_.size()) == n_ - 1;
    }

    bool is_cycle() const {
        if (n_ == 2) return edges_.size() == 1 && adj_[1][2];
        if (static_cast<int>(edges_.size()) != n_) return false;
        for (int i = 1; i < n_; ++i)
            if (!adj_[i][i + 1]) return false;
        return adj_[1][n_] != 0;
    }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["nodes"] = n_;
        auto edges = nlohmann::json::array();
        for (const auto& [a, b] : edges_) edges.push_back({a, b});
        j["edges"] = edges;
        return j;
    }

    static Graph from_json(const nlohmann::json& j) {
        if (j.contains("family")) {
            const std::string family = j.at("family").get<std::string>();
            const int n = j.at("n").get<int>();
            if (family == "path") return path(n);
            if (family == "cycle") return cycle(n);
            throw std::invalid_argument("Graph::from_json: unknown family '" + family + "'");
        }
        const int n = j.at("nodes").get<int>();
        std::vector<std::pair<int, int>> e;
        for (const auto& pair : j.at("edges")) {
            if (!pair.is_array() || pair.size() != 2)
                throw std::invalid_argument("Graph::from_json: edge must be a pair");
            e.emplace_back(pair[0].get<int>(), pair[1].get<int>());
        }
        return Graph(n, std::move(e));
    }

private:
    void check_label(int v) const {
        if (v < 1 || v > n_) throw std::invalid_argument("Graph: node label out of range");
    }

    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<char>> adj_;
    std::vector<std::vector<int>> neighbors_;
    std::string name_;
};

inline bool is_connected_subset(const Graph& g, const NodeSet& s) {
    return g.connected_subset(s);
}

}  // namespace halo
