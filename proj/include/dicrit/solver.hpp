#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

#include "dicrit/digraph.hpp"

namespace dicrit {

// Vertex -> colour assignment with colours in 1..k. A colouring is a valid
// k-dicolouring iff every colour class induces an acyclic subdigraph.
struct Colouring {
    int k = 0;
    std::vector<int> assignment;
};

struct SolverOptions {
    // Hard cap on branch-and-bound nodes per decision call. Exceeding it
    // raises InstanceTooLargeError, never a wrong answer.
    std::uint64_t max_nodes = 100'000'000;
};

// True iff D[S] has no directed cycle. A digon counts as a directed
// 2-cycle. Kahn-style elimination.
inline bool is_acyclic(const Digraph& d, const VertexSet& s) {
    VertexSet members = normalized(s);
    for (int v : members) d.check_vertex(v);
    std::vector<int> idx(d.n(), -1);
    for (std::size_t i = 0; i < members.size(); ++i)
        idx[members[i]] = static_cast<int>(i);
    std::vector<int> indeg(members.size(), 0);
    for (int u : members)
        for (int v : d.out_neighbours(u))
            if (idx[v] >= 0) ++indeg[idx[v]];
    std::vector<int> stack;
    for (std::size_t i = 0; i < members.size(); ++i)
        if (indeg[i] == 0) stack.push_back(static_cast<int>(i));
    std::size_t removed = 0;
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        ++removed;
        for (int v : d.out_neighbours(members[i]))
            if (idx[v] >= 0 && --indeg[idx[v]] == 0) stack.push_back(idx[v]);
    }
    return removed == members.size();
}

inline bool is_acyclic(const Digraph& d) { return is_acyclic(d, full_vertex_set(d)); }

inline bool is_valid_dicolouring(const Digraph& d, const Colouring& c) {
    if (static_cast<int>(c.assignment.size()) != d.n()) return false;
    for (int v = 0; v < d.n(); ++v)
        if (c.assignment[v] < 1 || c.assignment[v] > c.k) return false;
    for (int colour = 1; colour <= c.k; ++colour) {
        VertexSet cls;
        for (int v = 0; v < d.n(); ++v)
            if (c.assignment[v] == colour) cls.push_back(v);
        if (!is_acyclic(d, cls)) return false;
    }
    return true;
}

namespace detail {

// Exact dicolouring search. Branches on vertices in descending-degree order
// (ties by id), trying colours in increasing order; prunes a branch as soon
// as a colour class acquires a directed cycle. Without a precolouring,
// colour symmetry is broken by allowing colour c only after colours < c
// have appeared. The first colouring found is therefore the
// lexicographically least one under the branching order.
class DicolouringSearch {
public:
    DicolouringSearch(const Digraph& d, int k, const SolverOptions& opts)
        : d_(d), k_(k), opts_(opts), colour_(d.n(), 0), visited_(d.n(), 0) {}

    std::optional<Colouring>
    run(const std::vector<std::pair<int, int>>& precoloured) {
        const int n = d_.n();
        std::vector<char> fixed(n, 0);
        for (auto [v, c] : precoloured) {
            d_.check_vertex(v);
            if (c < 1 || c > k_)
                throw InvalidColouringError("precolour out of range");
            fixed[v] = 1;
            forced_.emplace_back(v, c);
        }
        symmetry_ = precoloured.empty();
        order_.clear();
        for (auto [v, c] : precoloured) order_.push_back(v);
        std::vector<int> rest;
        for (int v = 0; v < n; ++v)
            if (!fixed[v]) rest.push_back(v);
        std::stable_sort(rest.begin(), rest.end(), [&](int a, int b) {
            return d_.degree(a) > d_.degree(b) ||
                   (d_.degree(a) == d_.degree(b) && a < b);
        });
        order_.insert(order_.end(), rest.begin(), rest.end());
        nodes_ = 0;
        if (dfs(0, 0)) return Colouring{k_, colour_};
        return std::nullopt;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    bool dfs(std::size_t depth, int max_used) {
        if (depth == order_.size()) return true;
        const int v = order_[depth];
        int lo = 1, hi = symmetry_ ? std::min(k_, max_used + 1) : k_;
        if (depth < forced_.size()) lo = hi = forced_[depth].second;
        for (int c = lo; c <= hi; ++c) {
            if (++nodes_ > opts_.max_nodes)
                throw InstanceTooLargeError("search node budget exceeded");
            if (creates_monochromatic_cycle(v, c)) continue;
            colour_[v] = c;
            if (dfs(depth + 1, std::max(max_used, c))) return true;
            colour_[v] = 0;
        }
        return false;
    }

    // Would assigning colour c to v close a monochromatic directed cycle?
    // Any new cycle must pass through v, so search for a path from v back
    // to v inside colour class c.
    bool creates_monochromatic_cycle(int v, int c) {
        ++stamp_;
        stack_.clear();
        for (int w : d_.out_neighbours(v)) {
            if (colour_[w] == c) {
                stack_.push_back(w);
                visited_[w] = stamp_;
            }
        }
        while (!stack_.empty()) {
            int u = stack_.back();
            stack_.pop_back();
            for (int w : d_.out_neighbours(u)) {
                if (w == v) return true;
                if (colour_[w] == c && visited_[w] != stamp_) {
                    visited_[w] = stamp_;
                    stack_.push_back(w);
                }
            }
        }
        return false;
    }

    const Digraph& d_;
    int k_;
    SolverOptions opts_;
    bool symmetry_ = true;
    std::vector<int> order_;
    std::vector<std::pair<int, int>> forced_;
    std::vector<int> colour_;
    std::vector<std::uint64_t> visited_;
    std::uint64_t stamp_ = 0;
    std::vector<int> stack_;
    std::uint64_t nodes_ = 0;
};

} // namespace detail

// Decides k-dicolourability exactly. Returns a witness colouring iff one
// exists; std::nullopt iff exhaustive search proves none exists.
// Deterministic: same input, same witness.
inline std::optional<Colouring>
is_k_dicolourable(const Digraph& d, int k, const SolverOptions& opts = {}) {
    if (k < 1) throw KTooSmallError("k-dicolourability needs k >= 1");
    detail::DicolouringSearch search(d, k, opts);
    return search.run({});
}

// Decides whether the given precolouring (vertex, colour in 1..k) extends
// to a full k-dicolouring.
inline std::optional<Colouring>
extend_precolouring(const Digraph& d, int k,
                    const std::vector<std::pair<int, int>>& precoloured,
                    const SolverOptions& opts = {}) {
    if (k < 1) throw KTooSmallError("k-dicolourability needs k >= 1");
    detail::DicolouringSearch search(d, k, opts);
    return search.run(precoloured);
}

// Least k such that D is k-dicolourable; 0 for the empty digraph,
// 1 iff D is nonempty and acyclic.
inline int dichromatic_number(const Digraph& d, const SolverOptions& opts = {}) {
    if (d.n() == 0) return 0;
    if (is_acyclic(d)) return 1;
    for (int k = 2; k < d.n(); ++k)
        if (is_k_dicolourable(d, k, opts)) return k;
    return d.n(); // singleton classes are always acyclic
}

struct DicriticalityReport {
    int k = 0;
    int chi = 0;
    bool is_dicritical = false;
    // One (k-1)-dicolouring of D minus e for every arc e, in arc order,
    // when dicriticality holds.
    std::vector<std::pair<Arc, Colouring>> witness_colourings;
    // First arc (lexicographically) whose deletion keeps the dichromatic
    // number at k, when one exists.
    std::optional<Arc> failure_arc;
    // Vertices of degree 0. Deleting such a vertex is the one proper
    // subdigraph not covered by arc deletions; it keeps the dichromatic
    // number, so their presence refutes dicriticality.
    std::vector<int> isolated_vertices;
};

// Exact dicriticality test: chi(D) = k and chi(D minus e) <= k-1 for every
// arc e. The per-arc subproblems run on `threads` threads (0 = hardware
// concurrency); the result is merged in arc order and is independent of
// the thread count.
inline DicriticalityReport
is_k_dicritical(const Digraph& d, int k, const SolverOptions& opts = {},
                unsigned threads = 0) {
    if (k < 2) throw KTooSmallError("dicriticality needs k >= 2");
    DicriticalityReport rep;
    rep.k = k;
    rep.chi = dichromatic_number(d, opts);
    for (int v = 0; v < d.n(); ++v)
        if (d.degree(v) == 0) rep.isolated_vertices.push_back(v);
    if (rep.chi != k) return rep;

    const std::vector<Arc> arcs = d.arcs();
    std::vector<std::optional<Colouring>> results(arcs.size());
    std::vector<std::exception_ptr> errors(arcs.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, std::max<std::size_t>(arcs.size(), 1));

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= arcs.size()) break;
            try {
                results[i] = is_k_dicolourable(delete_arc(d, arcs[i]), k - 1, opts);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (std::size_t i = 0; i < arcs.size(); ++i)
        if (errors[i]) std::rethrow_exception(errors[i]);

    rep.is_dicritical = rep.isolated_vertices.empty();
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        if (results[i]) {
            rep.witness_colourings.emplace_back(arcs[i], *results[i]);
        } else {
            rep.is_dicritical = false;
            if (!rep.failure_arc) rep.failure_arc = arcs[i];
        }
    }
    return rep;
}

struct ExtractedSubdigraph {
    Digraph digraph;
    std::vector<int> originals; // originals[new_id] = vertex id in the input
};

// Greedily deletes arcs in lexicographic order while the dichromatic number
// stays >= k, then drops isolated vertices. The result is k-dicritical.
inline ExtractedSubdigraph
extract_dicritical_subdigraph(const Digraph& d, int k,
                              const SolverOptions& opts = {}) {
    if (k < 2) throw KTooSmallError("dicriticality needs k >= 2");
    int chi = dichromatic_number(d, opts);
    if (chi < k) throw ChiTooSmallError(chi, k);
    Digraph current = d;
    for (const Arc& e : d.arcs()) {
        Digraph candidate = delete_arc(current, e);
        if (!is_k_dicolourable(candidate, k - 1, opts))
            current = std::move(candidate);
    }
    VertexSet keep;
    for (int v = 0; v < current.n(); ++v)
        if (current.degree(v) > 0) keep.push_back(v);
    InducedSubdigraph sub = induced(current, keep);
    return {std::move(sub.digraph), std::move(sub.originals)};
}

struct TournamentSweepSummary {
    std::uint64_t visited = 0;
    std::uint64_t satisfying = 0;
};

// Visits every labelled tournament on n vertices exactly once (2^binom(n,2)
// of them) and counts how many satisfy the predicate. n <= 7.
inline TournamentSweepSummary
enumerate_labelled_tournaments(int n,
                               const std::function<bool(const Digraph&)>& pred) {
    if (n < 0 || n > 7)
        throw InstanceTooLargeError("labelled tournament sweep needs n <= 7");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    TournamentSweepSummary summary;
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    std::vector<Arc> arcs(pairs.size());
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        for (std::size_t b = 0; b < pairs.size(); ++b) {
            auto [i, j] = pairs[b];
            arcs[b] = (mask >> b) & 1 ? Arc{i, j} : Arc{j, i};
        }
        Digraph t = Digraph::from_arc_list(n, arcs);
        ++summary.visited;
        if (pred(t)) ++summary.satisfying;
    }
    return summary;
}

} // namespace dicrit
