#pragma once

#include <numeric>
#include <queue>
#include <vector>

#include "dicrit/digraph.hpp"

namespace dicrit {

struct MatchingResult {
    int size = 0;
    std::vector<std::pair<int, int>> edges; // vertex-disjoint, (min,max) pairs
};

namespace detail {

// Edmonds' blossom algorithm, O(V^3). Returns match[v] (-1 if unmatched).
inline std::vector<int> blossom_match(const UndirectedGraph& g) {
    const int n = g.n();
    std::vector<int> match(n, -1), parent(n, -1), base(n);
    std::vector<bool> used(n, false), in_blossom(n, false);

    auto lowest_common_base = [&](int a, int b) {
        std::vector<bool> seen(n, false);
        while (true) {
            a = base[a];
            seen[a] = true;
            if (match[a] == -1) break;
            a = parent[match[a]];
        }
        while (true) {
            b = base[b];
            if (seen[b]) return b;
            b = parent[match[b]];
        }
    };

    auto mark_path = [&](int v, int b, int child) {
        while (base[v] != b) {
            in_blossom[base[v]] = true;
            in_blossom[base[match[v]]] = true;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    };

    auto find_augmenting_path = [&](int root) -> int {
        std::fill(used.begin(), used.end(), false);
        std::fill(parent.begin(), parent.end(), -1);
        std::iota(base.begin(), base.end(), 0);
        used[root] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : g.neighbours(v)) {
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
                    // Odd cycle: contract the blossom.
                    int b = lowest_common_base(v, to);
                    std::fill(in_blossom.begin(), in_blossom.end(), false);
                    mark_path(v, b, to);
                    mark_path(to, b, v);
                    for (int i = 0; i < n; ++i) {
                        if (in_blossom[base[i]]) {
                            base[i] = b;
                            if (!used[i]) {
                                used[i] = true;
                                q.push(i);
                            }
                        }
                    }
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (match[to] == -1) return to;
                    used[match[to]] = true;
                    q.push(match[to]);
                }
            }
        }
        return -1;
    };

    for (int v = 0; v < n; ++v) {
        if (match[v] != -1) continue;
        int u = find_augmenting_path(v);
        while (u != -1) {
            int pv = parent[u], ppv = match[pv];
            match[u] = pv;
            match[pv] = u;
            u = ppv;
        }
    }
    return match;
}

inline void exhaustive_search(const std::vector<std::pair<int, int>>& edges,
                              std::size_t idx, std::vector<bool>& taken,
                              std::vector<std::size_t>& current,
                              std::vector<std::size_t>& best) {
    // Remaining edges cannot beat the best already found.
    if (current.size() + (edges.size() - idx) <= best.size()) return;
    if (idx == edges.size()) {
        if (current.size() > best.size()) best = current;
        return;
    }
    const auto& [u, v] = edges[idx];
    if (!taken[u] && !taken[v]) {
        taken[u] = taken[v] = true;
        current.push_back(idx);
        exhaustive_search(edges, idx + 1, taken, current, best);
        current.pop_back();
        taken[u] = taken[v] = false;
    }
    exhaustive_search(edges, idx + 1, taken, current, best);
}

} // namespace detail

// Exhaustive maximum matching: enumerates all matchings.
// Intended for graphs with at most ~16 edges.
inline MatchingResult exhaustive_maximum_matching(const UndirectedGraph& g) {
    std::vector<bool> taken(g.n(), false);
    std::vector<std::size_t> current, best;
    detail::exhaustive_search(g.edges(), 0, taken, current, best);
    MatchingResult r;
    r.size = static_cast<int>(best.size());
    for (std::size_t i : best) r.edges.push_back(g.edges()[i]);
    std::sort(r.edges.begin(), r.edges.end());
    return r;
}

// Blossom-based exact maximum matching for arbitrary graphs.
inline MatchingResult blossom_maximum_matching(const UndirectedGraph& g) {
    std::vector<int> match = detail::blossom_match(g);
    MatchingResult r;
    for (int v = 0; v < g.n(); ++v)
        if (match[v] > v) {
            r.edges.emplace_back(v, match[v]);
            ++r.size;
        }
    return r;
}

// Exact maximum matching. Small graphs go through exhaustive enumeration,
// larger ones through the blossom algorithm; both are exact and agree.
inline MatchingResult maximum_matching(const UndirectedGraph& g) {
    if (g.m() <= 16) return exhaustive_maximum_matching(g);
    return blossom_maximum_matching(g);
}

// pi(D[R]) = size of a maximum matching of B(D[R]).
inline int pi(const Digraph& d, const VertexSet& r) {
    return maximum_matching(digon_graph(induced(d, r).digraph)).size;
}

inline int pi(const Digraph& d) { return maximum_matching(digon_graph(d)).size; }

} // namespace dicrit
