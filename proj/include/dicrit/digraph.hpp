#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "dicrit/errors.hpp"

namespace dicrit {

using Arc = std::pair<int, int>;

// Sorted set of vertex ids. Operations taking a VertexSet accept any order
// and duplicates; they normalize internally.
using VertexSet = std::vector<int>;

inline VertexSet normalized(VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

// Simple undirected graph on vertices 0..n-1, no loops, no multi-edges.
class UndirectedGraph {
public:
    UndirectedGraph() = default;
    explicit UndirectedGraph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {}

    int n() const { return n_; }
    std::size_t m() const { return edges_.size(); }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw LoopArcError(u);
        if (has_edge(u, v)) return;
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        std::sort(adj_[u].begin(), adj_[u].end());
        std::sort(adj_[v].begin(), adj_[v].end());
        edges_.emplace_back(std::min(u, v), std::max(u, v));
        std::sort(edges_.begin(), edges_.end());
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    const std::vector<int>& neighbours(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const { return static_cast<int>(neighbours(v).size()); }

    // Edges as (min,max) pairs in lexicographic order.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool operator==(const UndirectedGraph& o) const {
        return n_ == o.n_ && edges_ == o.edges_;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw VertexOutOfRangeError(v, n_);
    }

    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::pair<int, int>> edges_;
};

// Digraph on dense vertex labels 0..n-1. No loops, no parallel arcs.
// Immutable after construction; all queries are const and safe to call
// concurrently. Arc membership is O(1) via a bit matrix.
class Digraph {
public:
    Digraph() = default;

    // Builds a digraph from an arc list. Duplicate arcs are collapsed;
    // the number of collapsed duplicates is kept (collapsed_duplicates()).
    static Digraph from_arc_list(int n, const std::vector<Arc>& arcs) {
        if (n < 0) throw VertexOutOfRangeError(n, 0);
        Digraph d;
        d.n_ = n;
        d.words_ = (n + 63) / 64;
        d.bits_.assign(static_cast<std::size_t>(n) * d.words_, 0);
        d.out_.assign(n, {});
        d.in_.assign(n, {});
        for (const auto& [u, v] : arcs) {
            if (u < 0 || u >= n) throw VertexOutOfRangeError(u, n);
            if (v < 0 || v >= n) throw VertexOutOfRangeError(v, n);
            if (u == v) throw LoopArcError(u);
            if (d.has_arc(u, v)) {
                ++d.collapsed_;
                continue;
            }
            d.bits_[static_cast<std::size_t>(u) * d.words_ + v / 64] |=
                std::uint64_t{1} << (v % 64);
            d.out_[u].push_back(v);
            d.in_[v].push_back(u);
            ++d.m_;
        }
        for (auto& vs : d.out_) std::sort(vs.begin(), vs.end());
        for (auto& vs : d.in_) std::sort(vs.begin(), vs.end());
        return d;
    }

    int n() const { return n_; }
    std::size_t m() const { return m_; }
    std::size_t collapsed_duplicates() const { return collapsed_; }

    bool has_arc(int u, int v) const {
        return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >>
                (v % 64)) & 1;
    }

    bool has_digon(int u, int v) const { return has_arc(u, v) && has_arc(v, u); }

    const std::vector<int>& out_neighbours(int v) const { return out_[v]; }
    const std::vector<int>& in_neighbours(int v) const { return in_[v]; }

    int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
    int in_degree(int v) const { return static_cast<int>(in_[v].size()); }
    // Number of arcs incident to v (a digon contributes 2).
    int degree(int v) const { return out_degree(v) + in_degree(v); }

    // Arcs in lexicographic order.
    std::vector<Arc> arcs() const {
        std::vector<Arc> a;
        a.reserve(m_);
        for (int u = 0; u < n_; ++u)
            for (int v : out_[u]) a.emplace_back(u, v);
        return a;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw VertexOutOfRangeError(v, n_);
    }

    bool operator==(const Digraph& o) const {
        return n_ == o.n_ && m_ == o.m_ && out_ == o.out_;
    }

private:
    int n_ = 0;
    int words_ = 0;
    std::size_t m_ = 0;
    std::size_t collapsed_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<std::vector<int>> out_, in_;
};

// Per-vertex degree bookkeeping. digon_degree(v) = d(v) - n(v) equals the
// degree of v in the digon graph B(D).
struct DegreeProfile {
    std::vector<int> out_degree;
    std::vector<int> in_degree;
    std::vector<int> degree;          // d(v) = d+(v) + d-(v)
    std::vector<int> neighbour_count; // n(v): distinct adjacent vertices
    std::vector<int> digon_degree;    // d(v) - n(v)

    int min_out_degree() const {
        return out_degree.empty()
                   ? 0
                   : *std::min_element(out_degree.begin(), out_degree.end());
    }
    int min_in_degree() const {
        return in_degree.empty()
                   ? 0
                   : *std::min_element(in_degree.begin(), in_degree.end());
    }
};

inline DegreeProfile degree_profile(const Digraph& d) {
    DegreeProfile p;
    const int n = d.n();
    p.out_degree.resize(n);
    p.in_degree.resize(n);
    p.degree.resize(n);
    p.neighbour_count.resize(n);
    p.digon_degree.resize(n);
    for (int v = 0; v < n; ++v) {
        p.out_degree[v] = d.out_degree(v);
        p.in_degree[v] = d.in_degree(v);
        p.degree[v] = p.out_degree[v] + p.in_degree[v];
        std::vector<int> nb = d.out_neighbours(v);
        nb.insert(nb.end(), d.in_neighbours(v).begin(), d.in_neighbours(v).end());
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        p.neighbour_count[v] = static_cast<int>(nb.size());
        p.digon_degree[v] = p.degree[v] - p.neighbour_count[v];
    }
    return p;
}

inline Digraph converse(const Digraph& d) {
    std::vector<Arc> rev;
    rev.reserve(d.m());
    for (const auto& [u, v] : d.arcs()) rev.emplace_back(v, u);
    return Digraph::from_arc_list(d.n(), rev);
}

// Induced subdigraph with vertices relabelled 0..|R|-1 by ascending
// original id. originals[new_id] = old_id.
struct InducedSubdigraph {
    Digraph digraph;
    std::vector<int> originals;
};

inline InducedSubdigraph induced(const Digraph& d, const VertexSet& r) {
    VertexSet members = normalized(r);
    for (int v : members) d.check_vertex(v);
    std::vector<int> to_new(d.n(), -1);
    for (std::size_t i = 0; i < members.size(); ++i)
        to_new[members[i]] = static_cast<int>(i);
    std::vector<Arc> arcs;
    for (int u : members)
        for (int v : d.out_neighbours(u))
            if (to_new[v] >= 0) arcs.emplace_back(to_new[u], to_new[v]);
    return {Digraph::from_arc_list(static_cast<int>(members.size()), arcs),
            std::move(members)};
}

inline VertexSet full_vertex_set(const Digraph& d) {
    VertexSet r(static_cast<std::size_t>(d.n()));
    for (int v = 0; v < d.n(); ++v) r[v] = v;
    return r;
}

// B(D): edge uv iff [u,v] is a digon of D.
inline UndirectedGraph digon_graph(const Digraph& d) {
    UndirectedGraph g(d.n());
    for (int u = 0; u < d.n(); ++u)
        for (int v : d.out_neighbours(u))
            if (u < v && d.has_arc(v, u)) g.add_edge(u, v);
    return g;
}

// Underlying graph: edge uv iff at least one of (u,v),(v,u) is an arc.
inline UndirectedGraph underlying_graph(const Digraph& d) {
    UndirectedGraph g(d.n());
    for (int u = 0; u < d.n(); ++u)
        for (int v : d.out_neighbours(u))
            if (!g.has_edge(u, v)) g.add_edge(u, v);
    return g;
}

inline bool is_oriented(const Digraph& d) {
    for (int u = 0; u < d.n(); ++u)
        for (int v : d.out_neighbours(u))
            if (d.has_arc(v, u)) return false;
    return true;
}

inline bool is_tournament(const Digraph& d) {
    if (d.m() != static_cast<std::size_t>(d.n()) * (d.n() - 1) / 2) return false;
    for (int u = 0; u < d.n(); ++u)
        for (int v = u + 1; v < d.n(); ++v)
            if (d.has_arc(u, v) == d.has_arc(v, u)) return false;
    return true;
}

// D minus one arc.
inline Digraph delete_arc(const Digraph& d, const Arc& e) {
    std::vector<Arc> arcs;
    arcs.reserve(d.m());
    for (const auto& a : d.arcs())
        if (a != e) arcs.push_back(a);
    return Digraph::from_arc_list(d.n(), arcs);
}

} // namespace dicrit
