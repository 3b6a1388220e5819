#pragma once

#include <cstdint>
#include <string>

#include "dicrit/digraph.hpp"
#include "dicrit/matching.hpp"
#include "dicrit/structure.hpp"

namespace dicrit {

// rho_D(R) = 7|R| - 3 m(D[R]) - 2 pi(D[R]), always exact integer arithmetic.
struct PotentialValue {
    long long rho = 0;
    long long n_term = 0;  // 7|R|
    long long m_term = 0;  // 3 m(D[R])
    long long pi_term = 0; // 2 pi(D[R])
};

inline PotentialValue rho(const Digraph& d, const VertexSet& r) {
    InducedSubdigraph sub = induced(d, r);
    PotentialValue p;
    p.n_term = 7LL * sub.digraph.n();
    p.m_term = 3LL * static_cast<long long>(sub.digraph.m());
    p.pi_term = 2LL * maximum_matching(digon_graph(sub.digraph)).size;
    p.rho = p.n_term - p.m_term - p.pi_term;
    return p;
}

inline PotentialValue rho(const Digraph& d) { return rho(d, full_vertex_set(d)); }

enum class TrichotomyClass { BidirectedOddCycle, Odd3Wheel, Other };

inline std::string to_string(TrichotomyClass c) {
    switch (c) {
    case TrichotomyClass::BidirectedOddCycle: return "bidirected-odd-cycle";
    case TrichotomyClass::Odd3Wheel: return "odd-3-wheel";
    case TrichotomyClass::Other: return "other";
    }
    return "?";
}

// Trichotomy for 3-dicritical digraphs: bidirected odd cycles have
// potential 1, odd 3-wheels -1, everything else at most -2.
struct TrichotomyVerdict {
    TrichotomyClass digraph_class = TrichotomyClass::Other;
    long long rho = 0;
    bool consistent = false;
};

// Classifies structurally and evaluates the trichotomy. The caller is
// responsible for having verified 3-dicriticality; the verdict records
// inconsistency rather than erroring.
inline TrichotomyVerdict classify_trichotomy(const Digraph& d) {
    TrichotomyVerdict v;
    if (recognize_bidirected_odd_cycle(d))
        v.digraph_class = TrichotomyClass::BidirectedOddCycle;
    else if (recognize_odd_3_wheel(d))
        v.digraph_class = TrichotomyClass::Odd3Wheel;
    else
        v.digraph_class = TrichotomyClass::Other;
    v.rho = rho(d).rho;
    switch (v.digraph_class) {
    case TrichotomyClass::BidirectedOddCycle: v.consistent = v.rho == 1; break;
    case TrichotomyClass::Odd3Wheel: v.consistent = v.rho == -1; break;
    case TrichotomyClass::Other: v.consistent = v.rho <= -2; break;
    }
    return v;
}

// Exhaustive sweep over all R with min_size <= |R| <= n-1, minimizing
// rho_D(R); ties broken by smaller |R|, then lexicographically smaller
// sorted member list. Subsets are visited in Gray-code order with m
// maintained incrementally; pi is recomputed per subset.
inline std::pair<VertexSet, PotentialValue>
min_potential_subset(const Digraph& d, int min_size) {
    const int n = d.n();
    if (n > 22)
        throw InstanceTooLargeError("subset sweep limited to n <= 22");
    if (min_size > n - 1 || n == 0)
        throw EmptyRangeError("no subset of size in [" +
                              std::to_string(min_size) + "," +
                              std::to_string(n - 1) + "]");
    const std::vector<std::pair<int, int>> digons = digon_graph(d).edges();

    std::uint32_t mask = 0;
    long long m_cur = 0;
    bool have_best = false;
    VertexSet best_set;
    PotentialValue best{};

    auto consider = [&](std::uint32_t bits, long long m_val) {
        const int size = __builtin_popcount(bits);
        if (size < min_size || size > n - 1) return;
        // pi of the digon subgraph within the subset
        UndirectedGraph b(n);
        for (auto [a, c] : digons)
            if ((bits >> a & 1) && (bits >> c & 1)) b.add_edge(a, c);
        PotentialValue p;
        p.n_term = 7LL * size;
        p.m_term = 3LL * m_val;
        p.pi_term = 2LL * maximum_matching(b).size;
        p.rho = p.n_term - p.m_term - p.pi_term;
        VertexSet members;
        for (int v = 0; v < n; ++v)
            if (bits >> v & 1) members.push_back(v);
        if (!have_best || p.rho < best.rho ||
            (p.rho == best.rho &&
             (members.size() < best_set.size() ||
              (members.size() == best_set.size() && members < best_set)))) {
            have_best = true;
            best = p;
            best_set = std::move(members);
        }
    };

    consider(mask, m_cur);
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t i = 1; i < total; ++i) {
        int v = __builtin_ctzll(i); // bit toggled by the Gray code step
        long long delta = 0;
        for (int w : d.out_neighbours(v))
            if (mask >> w & 1) ++delta;
        for (int w : d.in_neighbours(v))
            if (mask >> w & 1) ++delta;
        if (mask >> v & 1) {
            mask &= ~(std::uint32_t{1} << v);
            m_cur -= delta;
        } else {
            mask |= std::uint32_t{1} << v;
            m_cur += delta;
        }
        consider(mask, m_cur);
    }
    if (!have_best)
        throw EmptyRangeError("no subset of size in [" +
                              std::to_string(min_size) + "," +
                              std::to_string(n - 1) + "]");
    return {best_set, best};
}

} // namespace dicrit
