#pragma once

#include <queue>
#include <random>

#include "dicrit/digraph.hpp"

namespace dicrit::testing {

// Erdos-Renyi style random digraph: every ordered pair becomes an arc
// independently with probability num/den.
inline Digraph random_digraph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && coin(rng)) arcs.emplace_back(u, v);
    return Digraph::from_arc_list(n, arcs);
}

inline UndirectedGraph random_graph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    UndirectedGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

// Uniform random labelled tree on n vertices via a random Pruefer sequence.
inline UndirectedGraph random_tree(std::mt19937& rng, int n) {
    UndirectedGraph g(n);
    if (n <= 1) return g;
    if (n == 2) {
        g.add_edge(0, 1);
        return g;
    }
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> pruefer(n - 2);
    for (int& x : pruefer) x = pick(rng);
    std::vector<int> deg(n, 1);
    for (int x : pruefer) ++deg[x];
    std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) leaves.push(v);
    for (int x : pruefer) {
        int leaf = leaves.top();
        leaves.pop();
        g.add_edge(leaf, x);
        if (--deg[x] == 1) leaves.push(x);
    }
    int a = leaves.top();
    leaves.pop();
    int b = leaves.top();
    g.add_edge(a, b);
    return g;
}

// Independent matching oracle: tries every subset of the edge set.
// O(2^m * m); use only on graphs with few edges.
inline int brute_force_matching_size(const UndirectedGraph& g) {
    const auto& edges = g.edges();
    const std::size_t m = edges.size();
    int best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<char> used(g.n(), 0);
        bool ok = true;
        int size = 0;
        for (std::size_t e = 0; e < m && ok; ++e) {
            if (!(mask >> e & 1)) continue;
            auto [u, v] = edges[e];
            if (used[u] || used[v]) ok = false;
            used[u] = used[v] = 1;
            ++size;
        }
        if (ok) best = std::max(best, size);
    }
    return best;
}

// Random oriented Gallai forest: components grown by attaching either a
// pendant arc or a directed cycle at an existing vertex.
inline Digraph random_oriented_gallai_forest(std::mt19937& rng) {
    int components = 1 + static_cast<int>(rng() % 3);
    std::vector<Arc> arcs;
    int n = 0;
    for (int c = 0; c < components; ++c) {
        int root = n++;
        int grow = static_cast<int>(rng() % 6);
        std::vector<int> verts{root};
        for (int step = 0; step < grow; ++step) {
            int at = verts[rng() % verts.size()];
            if (rng() % 2) {
                int u = n++;
                if (rng() % 2) arcs.emplace_back(at, u);
                else arcs.emplace_back(u, at);
                verts.push_back(u);
            } else {
                int len = 3 + static_cast<int>(rng() % 3);
                int prev = at;
                for (int i = 1; i < len; ++i) {
                    int u = n++;
                    arcs.emplace_back(prev, u);
                    verts.push_back(u);
                    prev = u;
                }
                arcs.emplace_back(prev, at);
            }
        }
    }
    return Digraph::from_arc_list(n, arcs);
}

// Random digraph with a guaranteed 3-thread implanted between two of its
// vertices; every third draw is a bidirected odd cycle, which carries
// threads and is not 2-dicolourable. Returns the digraph and the thread.
inline std::pair<Digraph, std::vector<int>> implant_3_thread(std::mt19937& rng) {
    auto bicycle = [](int n) {
        std::vector<Arc> arcs;
        for (int i = 0; i < n; ++i) {
            arcs.emplace_back(i, (i + 1) % n);
            arcs.emplace_back((i + 1) % n, i);
        }
        return Digraph::from_arc_list(n, arcs);
    };
    if (rng() % 3 == 0) {
        int n = 5 + 2 * static_cast<int>(rng() % 3);
        return {bicycle(n), {0, 1, 2, 3}};
    }
    int n = 4 + static_cast<int>(rng() % 5);
    Digraph base = random_digraph(rng, n, 0.4);
    int w = static_cast<int>(rng() % n);
    int z = static_cast<int>(rng() % n);
    while (z == w) z = static_cast<int>(rng() % n);
    int a = n, b = n + 1;
    std::vector<Arc> arcs = base.arcs();
    for (Arc e : std::vector<Arc>{{w, a}, {a, w}, {a, b}, {b, a}, {b, z}, {z, b}})
        arcs.push_back(e);
    return {Digraph::from_arc_list(n + 2, arcs), {w, a, b, z}};
}

// Independent dicolourability oracle: enumerates all k^n assignments and
// checks every colour class for acyclicity by brute-force cycle search.
inline bool exhaustive_k_dicolourable(const Digraph& d, int k) {
    const int n = d.n();
    if (n == 0) return true;
    std::vector<int> colour(n, 1);
    auto class_acyclic = [&](int c) {
        // repeatedly strip vertices with no in-neighbour inside the class
        std::vector<char> alive(n, 0);
        int count = 0;
        for (int v = 0; v < n; ++v)
            if (colour[v] == c) {
                alive[v] = 1;
                ++count;
            }
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < n; ++v) {
                if (!alive[v]) continue;
                bool has_in = false;
                for (int u : d.in_neighbours(v))
                    if (alive[u]) has_in = true;
                if (!has_in) {
                    alive[v] = 0;
                    --count;
                    changed = true;
                }
            }
        }
        return count == 0;
    };
    while (true) {
        bool ok = true;
        for (int c = 1; c <= k && ok; ++c) ok = class_acyclic(c);
        if (ok) return true;
        int pos = n - 1;
        while (pos >= 0 && colour[pos] == k) colour[pos--] = 1;
        if (pos < 0) return false;
        ++colour[pos];
    }
}

} // namespace dicrit::testing
