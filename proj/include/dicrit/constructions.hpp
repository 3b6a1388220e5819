#pragma once

#include <array>
#include <map>
#include <set>
#include <string>

#include "dicrit/digraph.hpp"

namespace dicrit {

// A generated digraph plus named role vertices (base, centre, rim, ...),
// so callers can address the construction's special vertices without
// re-deriving them.
struct LabelledDigraph {
    Digraph digraph;
    std::map<std::string, int> roles;
};

inline Digraph directed_cycle(int n) {
    if (n < 2) throw SizeTooSmallError("directed cycle needs n >= 2");
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n);
    return Digraph::from_arc_list(n, arcs);
}

inline Digraph bidirected_cycle(int n) {
    if (n < 3) throw SizeTooSmallError("bidirected cycle needs n >= 3");
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) {
        arcs.emplace_back(i, (i + 1) % n);
        arcs.emplace_back((i + 1) % n, i);
    }
    return Digraph::from_arc_list(n, arcs);
}

inline Digraph bidirected_path(int n) {
    if (n < 1) throw SizeTooSmallError("bidirected path needs n >= 1");
    std::vector<Arc> arcs;
    for (int i = 0; i + 1 < n; ++i) {
        arcs.emplace_back(i, i + 1);
        arcs.emplace_back(i + 1, i);
    }
    return Digraph::from_arc_list(n, arcs);
}

inline Digraph bidirected_complete(int n) {
    if (n < 1) throw SizeTooSmallError("bidirected complete graph needs n >= 1");
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) arcs.emplace_back(u, v);
    return Digraph::from_arc_list(n, arcs);
}

inline Digraph transitive_tournament(int n) {
    if (n < 1) throw SizeTooSmallError("transitive tournament needs n >= 1");
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) arcs.emplace_back(u, v);
    return Digraph::from_arc_list(n, arcs);
}

// Knob of height h: height 1 is the 5-vertex tournament with base x1x2;
// each further level adds two vertices z1,z2 and the two directed
// 3-cycles (z1,z2,x,z1) through the previous base ends, the new base
// being z1z2. n = 2h+3, m = 5h+5.
inline LabelledDigraph knob(int height) {
    if (height < 1) throw SizeTooSmallError("knob height must be >= 1");
    std::vector<Arc> arcs = {{0, 1}, {2, 3}, {3, 4}, {4, 2}, {2, 0},
                             {3, 0}, {4, 0}, {1, 2}, {1, 3}, {1, 4}};
    int b1 = 0, b2 = 1;
    for (int level = 2; level <= height; ++level) {
        int z1 = 2 * level + 1, z2 = 2 * level + 2;
        arcs.emplace_back(z1, z2);
        arcs.emplace_back(z2, b1);
        arcs.emplace_back(b1, z1);
        arcs.emplace_back(z2, b2);
        arcs.emplace_back(b2, z1);
        b1 = z1;
        b2 = z2;
    }
    LabelledDigraph out;
    out.digraph = Digraph::from_arc_list(2 * height + 3, arcs);
    out.roles = {{"base1", b1}, {"base2", b2}};
    return out;
}

// The even-order knob: a height-1 knob whose inner 3-cycle is replaced by
// a 4-cycle. n = 6, m = 13.
inline LabelledDigraph knob_prime() {
    std::vector<Arc> arcs = {{0, 1}, {2, 3}, {3, 4}, {4, 5}, {5, 2},
                             {2, 0}, {3, 0}, {4, 0}, {5, 0}, {1, 2},
                             {1, 3}, {1, 4}, {1, 5}};
    LabelledDigraph out;
    out.digraph = Digraph::from_arc_list(6, arcs);
    out.roles = {{"base1", 0}, {"base2", 1}};
    return out;
}

// D-knob with base z1z2: arcs A(D) plus z1z2 plus {z2u, uz1} for every
// vertex u of D. n(K(D)) = n(D)+2, m(K(D)) = m(D)+1+2n(D).
inline LabelledDigraph generalized_knob(const Digraph& d) {
    const int z1 = d.n(), z2 = d.n() + 1;
    std::vector<Arc> arcs = d.arcs();
    arcs.emplace_back(z1, z2);
    for (int u = 0; u < d.n(); ++u) {
        arcs.emplace_back(z2, u);
        arcs.emplace_back(u, z1);
    }
    LabelledDigraph out;
    out.digraph = Digraph::from_arc_list(d.n() + 2, arcs);
    out.roles = {{"base1", z1}, {"base2", z2}};
    return out;
}

namespace detail {

// Instantiates a knob on the arc (a,b): the knob's base maps to (a,b),
// interior vertices get fresh ids. The base arc itself is assumed to be
// present already.
inline void glue_knob(std::vector<Arc>& arcs, int& next_id,
                      const LabelledDigraph& k, int a, int b) {
    const int kb1 = k.roles.at("base1"), kb2 = k.roles.at("base2");
    std::vector<int> map(k.digraph.n(), -1);
    map[kb1] = a;
    map[kb2] = b;
    for (int v = 0; v < k.digraph.n(); ++v)
        if (map[v] < 0) map[v] = next_id++;
    for (const auto& [u, v] : k.digraph.arcs())
        if (!(u == kb1 && v == kb2)) arcs.emplace_back(map[u], map[v]);
}

} // namespace detail

// Member of the O3 family: a directed 3-cycle carrying a knob on every
// arc, interiors sized so that n vertices give exactly ceil(5n/2) arcs.
// Even n uses three odd knobs (interiors 3,3,n-9); odd n replaces the
// first by the even-order knob (interiors 4,3,n-10).
inline LabelledDigraph o3(int n) {
    if (n < 12) throw SizeTooSmallError("O3 members need n >= 12");
    std::vector<LabelledDigraph> knobs;
    if (n % 2 == 0) {
        knobs.push_back(knob(1));
        knobs.push_back(knob(1));
        knobs.push_back(knob((n - 10) / 2));
    } else {
        knobs.push_back(knob_prime());
        knobs.push_back(knob(1));
        knobs.push_back(knob((n - 11) / 2));
    }
    std::vector<Arc> arcs = {{0, 1}, {1, 2}, {2, 0}};
    int next_id = 3;
    for (int j = 0; j < 3; ++j)
        detail::glue_knob(arcs, next_id, knobs[j], j, (j + 1) % 3);
    LabelledDigraph out;
    out.digraph = Digraph::from_arc_list(n, arcs);
    out.roles = {{"cycle1", 0}, {"cycle2", 1}, {"cycle3", 2}};
    return out;
}

// Odd 3-wheel: a centre joined to the directed 3-cycle (rim1,rim2,rim3)
// by three bidirected paths of the given odd lengths, disjoint except at
// the centre. m = 2n+1.
inline LabelledDigraph odd_3_wheel(int l1, int l2, int l3) {
    for (int l : {l1, l2, l3})
        if (l < 1 || l % 2 == 0)
            throw ParityError("spike lengths must be odd and >= 1");
    std::vector<Arc> arcs;
    int next_id = 1;
    std::array<int, 3> rim{};
    int i = 0;
    for (int l : {l1, l2, l3}) {
        int prev = 0;
        for (int step = 0; step < l; ++step) {
            int v = next_id++;
            arcs.emplace_back(prev, v);
            arcs.emplace_back(v, prev);
            prev = v;
        }
        rim[i++] = prev;
    }
    arcs.emplace_back(rim[0], rim[1]);
    arcs.emplace_back(rim[1], rim[2]);
    arcs.emplace_back(rim[2], rim[0]);
    LabelledDigraph out;
    out.digraph = Digraph::from_arc_list(next_id, arcs);
    out.roles = {{"centre", 0}, {"rim1", rim[0]}, {"rim2", rim[1]}, {"rim3", rim[2]}};
    return out;
}

// G^i_k family: G^i_2 is the directed cycle of length i+2; for k >= 3,
// start from the transitive tournament on k vertices and glue a
// G^1_{k-1}-knob on every arc except the lexicographically first one,
// which gets a G^i_{k-1}-knob. Sizes follow
//   n^i_k = (C(k,2)-1) n^1_{k-1} + n^i_{k-1} + k
// and the matching m-recurrence.
inline Digraph g_family(int i, int k, long long size_ceiling = 500) {
    if (i < 1) throw SizeTooSmallError("g_family needs i >= 1");
    if (k < 2) throw KTooSmallError("g_family needs k >= 2");
    // Predicted order via the n-recurrence, saturated so the comparison
    // against the ceiling cannot overflow (n^1_k >= 2^(k-1)).
    {
        const long long cap = 4'000'000'000'000'000LL;
        if (size_ceiling >= cap || k > 60)
            throw InstanceTooLargeError("g_family ceiling out of range");
        auto sat = [&](long long x) { return std::min(x, cap); };
        long long n1 = 3, ni = i + 2; // n^1_2, n^i_2
        for (int j = 3; j <= k && ni <= size_ceiling; ++j) {
            long long c = static_cast<long long>(j) * (j - 1) / 2;
            long long n1_next = n1 >= cap / c ? cap : sat(c * n1 + j);
            long long ni_next =
                n1 >= cap / c ? cap : sat((c - 1) * n1 + ni + j);
            n1 = n1_next;
            ni = ni_next;
        }
        if (ni > size_ceiling)
            throw InstanceTooLargeError("g_family predicted order " +
                                        std::to_string(ni) + " exceeds ceiling " +
                                        std::to_string(size_ceiling));
    }
    if (k == 2) return directed_cycle(i + 2);
    Digraph g1 = g_family(1, k - 1, size_ceiling);
    Digraph gi = i == 1 ? g1 : g_family(i, k - 1, size_ceiling);
    std::vector<Arc> arcs;
    std::vector<Arc> tarcs;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) tarcs.emplace_back(u, v);
    arcs = tarcs;
    int next_id = k;
    for (const auto& [a, b] : tarcs) {
        const Digraph& core = (a == 0 && b == 1) ? gi : g1;
        LabelledDigraph kn = generalized_knob(core);
        detail::glue_knob(arcs, next_id, kn, a, b);
    }
    return Digraph::from_arc_list(next_id, arcs);
}

// Triangle join: a new vertex u0 with all arcs u0 -> D1, D1 -> D2,
// D2 -> u0. Takes k-dicritical inputs to a (k+1)-dicritical output.
inline Digraph triangle_join(const Digraph& d1, const Digraph& d2) {
    const int off1 = 1, off2 = 1 + d1.n();
    std::vector<Arc> arcs;
    for (const auto& [u, v] : d1.arcs()) arcs.emplace_back(u + off1, v + off1);
    for (const auto& [u, v] : d2.arcs()) arcs.emplace_back(u + off2, v + off2);
    for (int u = 0; u < d1.n(); ++u) arcs.emplace_back(0, u + off1);
    for (int u = 0; u < d1.n(); ++u)
        for (int v = 0; v < d2.n(); ++v)
            arcs.emplace_back(u + off1, v + off2);
    for (int v = 0; v < d2.n(); ++v) arcs.emplace_back(v + off2, 0);
    return Digraph::from_arc_list(1 + d1.n() + d2.n(), arcs);
}

enum class GadgetKind { Purse, Handcuff, Basket, Bag, Turtle, APlus, BPlus };

inline std::string to_string(GadgetKind k) {
    switch (k) {
    case GadgetKind::Purse: return "purse";
    case GadgetKind::Handcuff: return "handcuff";
    case GadgetKind::Basket: return "basket";
    case GadgetKind::Bag: return "bag";
    case GadgetKind::Turtle: return "turtle";
    case GadgetKind::APlus: return "a-plus";
    case GadgetKind::BPlus: return "b-plus";
    }
    return "?";
}

struct GadgetSpec {
    GadgetKind kind;
    std::vector<int> lengths;
    // Only the disjoint-path realizations are generated; requesting an
    // intersecting-path variant is rejected.
    bool disjoint_paths = true;
};

namespace detail {

inline void add_bidirected_path(std::vector<Arc>& arcs, int& next_id, int a,
                                int b, int length) {
    int prev = a;
    for (int step = 1; step < length; ++step) {
        int v = next_id++;
        arcs.emplace_back(prev, v);
        arcs.emplace_back(v, prev);
        prev = v;
    }
    arcs.emplace_back(prev, b);
    arcs.emplace_back(b, prev);
}

inline void require_lengths(const GadgetSpec& s, std::size_t count) {
    if (s.lengths.size() != count)
        throw ParityError(to_string(s.kind) + " takes " +
                          std::to_string(count) + " path length(s)");
}

inline void require_odd(int l, const char* what) {
    if (l < 1 || l % 2 == 0)
        throw ParityError(std::string(what) + " must be odd and >= 1, got " +
                          std::to_string(l));
}

inline void require_even(int l, const char* what) {
    if (l < 0 || l % 2 == 1)
        throw ParityError(std::string(what) + " must be even and >= 0, got " +
                          std::to_string(l));
}

} // namespace detail

// Generators for the potential-bearing gadgets. Vertex/arc counts follow
// the defining figures exactly; roles expose the named vertices.
inline LabelledDigraph gadget(const GadgetSpec& spec) {
    if (!spec.disjoint_paths)
        throw UnsupportedVariantError(
            "only disjoint-path gadget realizations are generated");
    LabelledDigraph out;
    std::vector<Arc> arcs;
    int next_id = 0;
    switch (spec.kind) {
    case GadgetKind::Purse: {
        detail::require_lengths(spec, 1);
        detail::require_odd(spec.lengths[0], "purse path length");
        // x=0 y=1 z=2 y1=3 y2=4
        arcs = {{0, 1}, {2, 1}, {1, 3}, {1, 4}, {3, 0}, {3, 2}, {4, 0}, {4, 2}};
        next_id = 5;
        detail::add_bidirected_path(arcs, next_id, 3, 4, spec.lengths[0]);
        out.roles = {{"x", 0}, {"y", 1}, {"z", 2}, {"y1", 3}, {"y2", 4}};
        break;
    }
    case GadgetKind::Handcuff: {
        detail::require_lengths(spec, 2);
        detail::require_odd(spec.lengths[0], "handcuff path length");
        detail::require_odd(spec.lengths[1], "handcuff path length");
        // x=0 x'=1 y=2 z=3 z'=4
        arcs = {{0, 2}, {1, 2}, {2, 3}, {2, 4}, {4, 1}, {3, 1}, {4, 0}};
        next_id = 5;
        detail::add_bidirected_path(arcs, next_id, 3, 4, spec.lengths[0]);
        detail::add_bidirected_path(arcs, next_id, 0, 1, spec.lengths[1]);
        out.roles = {{"x", 0}, {"xp", 1}, {"y", 2}, {"z", 3}, {"zp", 4}};
        break;
    }
    case GadgetKind::Basket: {
        detail::require_lengths(spec, 2);
        detail::require_odd(spec.lengths[0], "basket path length");
        detail::require_odd(spec.lengths[1], "basket path length");
        // x1=0 x2=1 y=2 y0=3 y1=4 y2=5
        arcs = {{0, 2}, {1, 2}, {2, 3}, {2, 4}, {2, 5}, {4, 0}, {5, 1}, {3, 0}, {3, 1}};
        next_id = 6;
        detail::add_bidirected_path(arcs, next_id, 3, 4, spec.lengths[0]);
        detail::add_bidirected_path(arcs, next_id, 3, 5, spec.lengths[1]);
        out.roles = {{"x1", 0}, {"x2", 1}, {"y", 2}, {"y0", 3}, {"y1", 4}, {"y2", 5}};
        break;
    }
    case GadgetKind::Bag: {
        detail::require_lengths(spec, 2);
        detail::require_odd(spec.lengths[0], "bag path length");
        detail::require_odd(spec.lengths[1], "bag path length");
        // y=0 x1=1 x2=2 y1=3 y2=4 y3=5 y4=6
        arcs = {{1, 0}, {2, 0}, {0, 3}, {0, 4}, {0, 5}, {0, 6},
                {3, 1}, {4, 1}, {5, 2}, {6, 2}};
        next_id = 7;
        detail::add_bidirected_path(arcs, next_id, 3, 4, spec.lengths[0]);
        detail::add_bidirected_path(arcs, next_id, 5, 6, spec.lengths[1]);
        out.roles = {{"y", 0},  {"x1", 1}, {"x2", 2}, {"y1", 3},
                     {"y2", 4}, {"y3", 5}, {"y4", 6}};
        break;
    }
    case GadgetKind::Turtle: {
        detail::require_lengths(spec, 4);
        detail::require_odd(spec.lengths[0], "turtle path P length");
        for (int j = 1; j < 4; ++j)
            detail::require_even(spec.lengths[j], "turtle path length");
        // y=0 x1=1 x2=2 z1=3 z2=4 z3=5 z4=6
        arcs = {{1, 0}, {2, 0}, {0, 3}, {0, 4}, {0, 5}, {0, 6},
                {4, 2}, {5, 2}, {6, 2}, {3, 1}, {4, 1}};
        next_id = 7;
        detail::add_bidirected_path(arcs, next_id, 3, 4, spec.lengths[0]);
        std::array<int, 3> u{};
        for (int j = 0; j < 3; ++j) {
            int zj = 4 + j;
            if (spec.lengths[j + 1] == 0) {
                u[j] = zj;
            } else {
                u[j] = next_id++;
                detail::add_bidirected_path(arcs, next_id, zj, u[j],
                                            spec.lengths[j + 1]);
            }
        }
        arcs.emplace_back(u[0], u[1]);
        arcs.emplace_back(u[1], u[2]);
        arcs.emplace_back(u[2], u[0]);
        out.roles = {{"y", 0},  {"x1", 1}, {"x2", 2},   {"z1", 3},
                     {"z2", 4}, {"z3", 5}, {"z4", 6},   {"u2", u[0]},
                     {"u3", u[1]}, {"u4", u[2]}};
        break;
    }
    case GadgetKind::APlus: {
        detail::require_lengths(spec, 1);
        detail::require_odd(spec.lengths[0], "a-plus path length");
        // x=0 y=1 z=2 y1=3 y2=4
        arcs = {{0, 1}, {2, 1}, {1, 3}, {1, 4}, {3, 2}, {4, 2}};
        next_id = 5;
        detail::add_bidirected_path(arcs, next_id, 3, 4, spec.lengths[0]);
        out.roles = {{"x", 0}, {"y", 1}, {"z", 2}, {"y1", 3}, {"y2", 4}};
        break;
    }
    case GadgetKind::BPlus: {
        detail::require_lengths(spec, 3);
        for (int l : spec.lengths) detail::require_even(l, "b-plus path length");
        // x=0 y=1 z=2 y1=3 y2=4 y3=5
        arcs = {{0, 1}, {2, 1}, {1, 3}, {1, 4}, {1, 5}, {3, 2}, {4, 2}, {5, 2}};
        next_id = 6;
        std::array<int, 3> c{};
        for (int j = 0; j < 3; ++j) {
            int yj = 3 + j;
            if (spec.lengths[j] == 0) {
                c[j] = yj;
            } else {
                c[j] = next_id++;
                detail::add_bidirected_path(arcs, next_id, yj, c[j],
                                            spec.lengths[j]);
            }
        }
        arcs.emplace_back(c[0], c[1]);
        arcs.emplace_back(c[1], c[2]);
        arcs.emplace_back(c[2], c[0]);
        out.roles = {{"x", 0},  {"y", 1},  {"z", 2},     {"y1", 3},
                     {"y2", 4}, {"y3", 5}, {"c1", c[0]}, {"c2", c[1]},
                     {"c3", c[2]}};
        break;
    }
    }
    out.digraph = Digraph::from_arc_list(next_id, arcs);
    return out;
}

// Rotational tournament: i -> (i+r) mod n for each residue r. Valid iff
// the residues and their negations partition 1..n-1.
inline Digraph circulant_tournament(int n, const std::set<int>& residues) {
    if (n < 1 || n % 2 == 0)
        throw NotATournamentError("circulant tournaments have odd order");
    for (int r = 1; r < n; ++r) {
        bool fwd = residues.count(r) > 0, bwd = residues.count(n - r) > 0;
        if (fwd == bwd)
            throw NotATournamentError(
                "residues must contain exactly one of r, n-r for r=" +
                std::to_string(r));
    }
    for (int r : residues)
        if (r < 1 || r >= n)
            throw NotATournamentError("residue " + std::to_string(r) +
                                      " out of range");
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
        for (int r : residues) arcs.emplace_back(i, (i + r) % n);
    return Digraph::from_arc_list(n, arcs);
}

// The Paley tournament on 11 vertices: ij is an arc iff j-i is in
// {1,3,4,5,9} modulo 11. The unique 4-dichromatic tournament of order 11.
inline Digraph paley_11() { return circulant_tournament(11, {1, 3, 4, 5, 9}); }

// k-dicritical digraph of order k+1: a directed 3-cycle and a bidirected
// complete graph on k-2 vertices, with a digon between every pair across.
inline Digraph order_k_plus_1_example(int k) {
    if (k < 3) throw SizeTooSmallError("order-(k+1) example needs k >= 3");
    std::vector<Arc> arcs = {{0, 1}, {1, 2}, {2, 0}};
    for (int u = 3; u <= k; ++u)
        for (int v = 3; v <= k; ++v)
            if (u != v) arcs.emplace_back(u, v);
    for (int c = 0; c < 3; ++c)
        for (int u = 3; u <= k; ++u) {
            arcs.emplace_back(c, u);
            arcs.emplace_back(u, c);
        }
    return Digraph::from_arc_list(k + 1, arcs);
}

} // namespace dicrit
