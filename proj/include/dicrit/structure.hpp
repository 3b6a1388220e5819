#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dicrit/digraph.hpp"
#include "dicrit/solver.hpp"

namespace dicrit {

// Biconnected-component decomposition of an undirected graph. Every edge
// lies in exactly one block; isolated vertices form singleton blocks.
struct BlockDecomposition {
    std::vector<VertexSet> blocks;
    std::vector<std::vector<std::pair<int, int>>> block_edges;
    VertexSet cut_vertices;
};

inline BlockDecomposition blocks(const UndirectedGraph& g) {
    const int n = g.n();
    BlockDecomposition out;
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<std::pair<int, int>> estack;
    int timer = 0;

    auto emit_block = [&](const std::pair<int, int>& top) {
        std::vector<std::pair<int, int>> edges;
        while (true) {
            auto e = estack.back();
            estack.pop_back();
            edges.emplace_back(std::min(e.first, e.second),
                               std::max(e.first, e.second));
            if (e == top) break;
        }
        VertexSet verts;
        for (auto& [a, b] : edges) {
            verts.push_back(a);
            verts.push_back(b);
        }
        std::sort(edges.begin(), edges.end());
        out.blocks.push_back(normalized(verts));
        out.block_edges.push_back(std::move(edges));
    };

    // Iterative DFS so deep graphs cannot overflow the call stack.
    struct Frame {
        int v, parent;
        std::size_t i;
    };
    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        if (g.degree(root) == 0) {
            disc[root] = timer++;
            out.blocks.push_back({root});
            out.block_edges.push_back({});
            continue;
        }
        std::vector<Frame> stack;
        disc[root] = low[root] = timer++;
        stack.push_back({root, -1, 0});
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& nb = g.neighbours(f.v);
            if (f.i < nb.size()) {
                int w = nb[f.i++];
                if (w == f.parent) continue;
                if (disc[w] == -1) {
                    estack.emplace_back(f.v, w);
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, f.v, 0});
                } else if (disc[w] < disc[f.v]) {
                    estack.emplace_back(f.v, w);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                Frame done = f;
                stack.pop_back();
                if (!stack.empty()) {
                    Frame& up = stack.back();
                    low[up.v] = std::min(low[up.v], low[done.v]);
                    if (low[done.v] >= disc[up.v]) emit_block({up.v, done.v});
                }
            }
        }
    }
    // v is a cut vertex iff it belongs to more than one block.
    std::vector<int> block_count(n, 0);
    for (const auto& b : out.blocks)
        for (int v : b) ++block_count[v];
    for (int v = 0; v < n; ++v)
        if (block_count[v] > 1) out.cut_vertices.push_back(v);
    return out;
}

enum class BlockClass {
    SingleVertex,
    SingleArc,
    DirectedCycle,       // length >= 3, every edge a single arc
    BidirectedOddCycle,
    BidirectedComplete,
    Other,
};

inline std::string to_string(BlockClass c) {
    switch (c) {
    case BlockClass::SingleVertex: return "single-vertex";
    case BlockClass::SingleArc: return "arc";
    case BlockClass::DirectedCycle: return "directed-cycle";
    case BlockClass::BidirectedOddCycle: return "bidirected-odd-cycle";
    case BlockClass::BidirectedComplete: return "bidirected-complete";
    case BlockClass::Other: return "OTHER";
    }
    return "?";
}

// Classifies the digraph spanned by one block of the underlying graph of d.
inline BlockClass classify_block(const Digraph& d, const VertexSet& verts,
                                 const std::vector<std::pair<int, int>>& edges) {
    if (verts.size() == 1) return BlockClass::SingleVertex;
    if (edges.size() == 1) {
        auto [u, v] = edges.front();
        return d.has_digon(u, v) ? BlockClass::BidirectedComplete
                                 : BlockClass::SingleArc;
    }
    bool all_digons = true, no_digons = true;
    for (auto [u, v] : edges) {
        if (d.has_digon(u, v)) no_digons = false;
        else all_digons = false;
    }
    const std::size_t nb = verts.size();
    const bool cycle_shape = edges.size() == nb;
    const bool complete_shape = edges.size() == nb * (nb - 1) / 2;
    if (cycle_shape && no_digons) {
        // Directed cycle iff within the block every vertex has one
        // outgoing and one incoming block arc.
        std::vector<int> outd(d.n(), 0), ind(d.n(), 0);
        for (auto [u, v] : edges) {
            int a = d.has_arc(u, v) ? u : v;
            int b = d.has_arc(u, v) ? v : u;
            ++outd[a];
            ++ind[b];
        }
        for (int v : verts)
            if (outd[v] != 1 || ind[v] != 1) return BlockClass::Other;
        return BlockClass::DirectedCycle;
    }
    if (all_digons && cycle_shape && nb % 2 == 1)
        return BlockClass::BidirectedOddCycle;
    if (all_digons && complete_shape) return BlockClass::BidirectedComplete;
    return BlockClass::Other;
}

struct GallaiBlockReport {
    VertexSet degree_set; // vertices of degree 2(k-1), original labels
    std::vector<VertexSet> blocks;
    std::vector<BlockClass> classes;
    std::vector<std::size_t> violations; // indices of OTHER blocks
    bool ok() const { return violations.empty(); }
};

// Low-degree block audit: in a k-dicritical digraph, the blocks of the
// subdigraph induced by vertices of degree 2(k-1) are each an arc, a
// directed cycle, a bidirected odd cycle or a bidirected complete graph.
inline GallaiBlockReport check_gallai_blocks(const Digraph& d, int k) {
    GallaiBlockReport rep;
    for (int v = 0; v < d.n(); ++v)
        if (d.degree(v) == 2 * (k - 1)) rep.degree_set.push_back(v);
    InducedSubdigraph sub = induced(d, rep.degree_set);
    BlockDecomposition bd = blocks(underlying_graph(sub.digraph));
    for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
        BlockClass c = classify_block(sub.digraph, bd.blocks[i], bd.block_edges[i]);
        VertexSet orig;
        for (int v : bd.blocks[i]) orig.push_back(sub.originals[v]);
        rep.blocks.push_back(std::move(orig));
        rep.classes.push_back(c);
        if (c == BlockClass::Other) rep.violations.push_back(i);
    }
    return rep;
}

// A Gallai forest has only single-arc and directed-cycle blocks (directed
// cycles in the oriented sense, length >= 3; a digon block disqualifies).
inline bool is_gallai_forest(const Digraph& d) {
    BlockDecomposition bd = blocks(underlying_graph(d));
    for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
        BlockClass c = classify_block(d, bd.blocks[i], bd.block_edges[i]);
        if (c != BlockClass::SingleVertex && c != BlockClass::SingleArc &&
            c != BlockClass::DirectedCycle)
            return false;
    }
    return true;
}

// Checks 2 m(D) <= 3 (n(D) - 1) for an oriented Gallai forest.
inline bool oriented_gallai_bound_check(const Digraph& d) {
    if (!is_gallai_forest(d))
        throw NotGallaiForestError("bound check requires an oriented Gallai forest");
    if (d.n() == 0) return true;
    return 2 * static_cast<long long>(d.m()) <= 3 * (static_cast<long long>(d.n()) - 1);
}

inline bool recognize_bidirected_odd_cycle(const Digraph& d) {
    const int n = d.n();
    if (n < 3 || n % 2 == 0) return false;
    if (d.m() != 2 * static_cast<std::size_t>(n)) return false;
    DegreeProfile p = degree_profile(d);
    for (int v = 0; v < n; ++v)
        if (p.degree[v] != 4 || p.neighbour_count[v] != 2 || p.digon_degree[v] != 2)
            return false;
    // 2-regular digon graph with the right counts: one cycle iff connected.
    UndirectedGraph b = digon_graph(d);
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++reached;
        for (int w : b.neighbours(v))
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    return reached == n;
}

struct Odd3WheelWitness {
    int centre = -1;
    std::array<int, 3> rim{};                // (x, y, z) with arcs x->y->z->x
    std::vector<std::vector<int>> spikes;    // centre..rim vertex paths
};

// Structural recognition of odd 3-wheels: a centre joined to the three
// vertices of a directed 3-cycle by odd bidirected paths, disjoint except
// at the centre. No solver calls.
inline std::optional<Odd3WheelWitness> recognize_odd_3_wheel(const Digraph& d) {
    const int n = d.n();
    if (n < 4) return std::nullopt;
    // Exactly three non-digon arcs, themselves forming a directed triangle.
    std::vector<Arc> simple;
    for (const auto& [u, v] : d.arcs())
        if (!d.has_arc(v, u)) simple.push_back({u, v});
    if (simple.size() != 3) return std::nullopt;
    int x = simple[0].first, y = simple[0].second;
    int z = -1;
    for (const auto& [u, v] : simple)
        if (u == y && v != x) z = v;
    if (z < 0) return std::nullopt;
    std::vector<Arc> triangle{{x, y}, {y, z}, {z, x}};
    std::sort(triangle.begin(), triangle.end());
    if (simple != triangle) return std::nullopt;
    if (x == y || y == z || x == z) return std::nullopt;

    UndirectedGraph b = digon_graph(d);
    if (d.m() != 3 + 2 * b.m()) return std::nullopt; // all other arcs are digons
    int centre = -1;
    for (int v = 0; v < n; ++v) {
        if (b.degree(v) == 3) {
            if (centre != -1) return std::nullopt;
            centre = v;
        } else if (b.degree(v) > 3) {
            return std::nullopt;
        }
    }
    if (centre == -1 || centre == x || centre == y || centre == z)
        return std::nullopt;

    Odd3WheelWitness w;
    w.centre = centre;
    w.rim = {x, y, z};
    std::vector<char> used(n, 0);
    used[centre] = 1;
    std::size_t walked_edges = 0;
    for (int first : b.neighbours(centre)) {
        std::vector<int> path{centre};
        int prev = centre, cur = first;
        while (true) {
            if (used[cur]) return std::nullopt; // spikes intersect
            used[cur] = 1;
            path.push_back(cur);
            ++walked_edges;
            if (cur == x || cur == y || cur == z) break;
            if (b.degree(cur) != 2) return std::nullopt;
            int next = b.neighbours(cur)[0] == prev ? b.neighbours(cur)[1]
                                                    : b.neighbours(cur)[0];
            prev = cur;
            cur = next;
        }
        if ((path.size() - 1) % 2 == 0) return std::nullopt; // even spike
        w.spikes.push_back(std::move(path));
    }
    if (w.spikes.size() != 3) return std::nullopt;
    if (walked_edges != b.m()) return std::nullopt; // digons off the spikes
    for (int v = 0; v < n; ++v)
        if (!used[v]) return std::nullopt; // stray vertex
    return w;
}

// All bidirected paths of length k whose internal vertices have degree 4
// in D. Paths are reported once, endpoints ordered (first < last).
inline std::vector<std::vector<int>> find_threads(const Digraph& d, int k) {
    if (k != 2 && k != 3)
        throw NotAThreadError("thread length must be 2 or 3");
    UndirectedGraph b = digon_graph(d);
    std::vector<std::vector<int>> found;
    std::vector<int> path;
    std::vector<char> on_path(d.n(), 0);
    std::function<void(int)> extend = [&](int v) {
        if (static_cast<int>(path.size()) == k + 1) {
            if (path.front() < path.back()) found.push_back(path);
            return;
        }
        // All but the last extension step go through internal vertices,
        // which must have degree exactly 4.
        for (int w : b.neighbours(v)) {
            if (on_path[w]) continue;
            bool internal = static_cast<int>(path.size()) < k;
            if (internal && d.degree(w) != 4) continue;
            on_path[w] = 1;
            path.push_back(w);
            extend(w);
            path.pop_back();
            on_path[w] = 0;
        }
    };
    for (int v = 0; v < d.n(); ++v) {
        path = {v};
        on_path[v] = 1;
        extend(v);
        on_path[v] = 0;
    }
    std::sort(found.begin(), found.end());
    return found;
}

struct ContractionResult {
    Digraph digraph;
    std::vector<int> merged_map; // old vertex -> new vertex
    std::size_t collapsed_arc_count = 0;
};

// Replaces the 3-thread [w,x,y,z] by the digon [w,z].
inline ContractionResult contract_3_thread(const Digraph& d,
                                           const std::vector<int>& thread) {
    if (thread.size() != 4) throw NotAThreadError("a 3-thread has 4 vertices");
    int w = thread[0], x = thread[1], y = thread[2], z = thread[3];
    for (int v : thread) d.check_vertex(v);
    VertexSet distinct = normalized({w, x, y, z});
    if (distinct.size() != 4) throw NotAThreadError("thread vertices repeat");
    if (!d.has_digon(w, x) || !d.has_digon(x, y) || !d.has_digon(y, z))
        throw NotAThreadError("not a bidirected path");
    if (d.degree(x) != 4 || d.degree(y) != 4)
        throw NotAThreadError("internal vertices must have degree 4");

    VertexSet keep;
    for (int v = 0; v < d.n(); ++v)
        if (v != x && v != y) keep.push_back(v);
    InducedSubdigraph sub = induced(d, keep);
    std::vector<int> to_new(d.n(), -1);
    for (std::size_t i = 0; i < sub.originals.size(); ++i)
        to_new[sub.originals[i]] = static_cast<int>(i);
    std::vector<Arc> arcs = sub.digraph.arcs();
    arcs.emplace_back(to_new[w], to_new[z]);
    arcs.emplace_back(to_new[z], to_new[w]);
    Digraph result = Digraph::from_arc_list(sub.digraph.n(), arcs);
    ContractionResult cr;
    cr.collapsed_arc_count = result.collapsed_duplicates();
    cr.digraph = std::move(result);
    cr.merged_map.assign(d.n(), -1);
    for (int v = 0; v < d.n(); ++v)
        if (to_new[v] >= 0) cr.merged_map[v] = to_new[v];
    cr.merged_map[x] = to_new[w];
    cr.merged_map[y] = to_new[z];
    return cr;
}

// D/(R,phi,X): contracts the two colour classes of a 2-dicoloured proper
// subset R into fresh vertices x1, x2 (the two highest new ids), adds the
// digon [x1,x2], and drops loops and parallel arcs.
inline ContractionResult contract_colour_classes(const Digraph& d,
                                                 const VertexSet& r,
                                                 const Colouring& phi) {
    VertexSet members = normalized(r);
    for (int v : members) d.check_vertex(v);
    if (members.empty() || static_cast<int>(members.size()) >= d.n())
        throw RNotProperError("R must be nonempty and avoid at least one vertex");
    if (phi.k != 2 || phi.assignment.size() != members.size())
        throw InvalidColouringError("phi must 2-colour D[R]");
    InducedSubdigraph sub = induced(d, members);
    if (!is_valid_dicolouring(sub.digraph, phi))
        throw InvalidColouringError("phi is not a 2-dicolouring of D[R]");

    const int n_rest = d.n() - static_cast<int>(members.size());
    const int x1 = n_rest, x2 = n_rest + 1;
    std::vector<int> to_new(d.n(), -1);
    {
        std::vector<char> in_r(d.n(), 0);
        for (int v : members) in_r[v] = 1;
        int next = 0;
        for (int v = 0; v < d.n(); ++v)
            if (!in_r[v]) to_new[v] = next++;
        for (std::size_t i = 0; i < members.size(); ++i)
            to_new[members[i]] = phi.assignment[i] == 1 ? x1 : x2;
    }
    std::vector<Arc> arcs;
    std::size_t loops = 0;
    for (const auto& [u, v] : d.arcs()) {
        int mu = to_new[u], mv = to_new[v];
        if (mu == mv) {
            ++loops;
            continue;
        }
        arcs.emplace_back(mu, mv);
    }
    arcs.emplace_back(x1, x2);
    arcs.emplace_back(x2, x1);
    Digraph result = Digraph::from_arc_list(n_rest + 2, arcs);
    ContractionResult cr;
    cr.collapsed_arc_count = result.collapsed_duplicates();
    cr.digraph = std::move(result);
    cr.merged_map = std::move(to_new);
    (void)loops; // loops are removed by definition, not counted as parallels
    return cr;
}

// Vertices v with exactly one neighbour not joined to v by a digon.
// A k-dicritical digraph has none.
inline VertexSet single_plain_neighbour_violations(const Digraph& d) {
    VertexSet bad;
    for (int v = 0; v < d.n(); ++v) {
        std::vector<int> nb = d.out_neighbours(v);
        nb.insert(nb.end(), d.in_neighbours(v).begin(), d.in_neighbours(v).end());
        nb = normalized(nb);
        int simple = 0;
        for (int w : nb)
            if (!d.has_digon(v, w)) ++simple;
        if (simple == 1) bad.push_back(v);
    }
    return bad;
}

} // namespace dicrit
