// Acceptance suite: runs every headline criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exits nonzero if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "dicrit/bounds.hpp"
#include "dicrit/constructions.hpp"
#include "dicrit/matching.hpp"
#include "dicrit/potential.hpp"
#include "dicrit/solver.hpp"
#include "dicrit/structure.hpp"
#include "helpers.hpp"

using namespace dicrit;

namespace {

struct Expectation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void expect(bool cond, const std::string& what) {
    if (!cond) throw Expectation(what);
}

// Instances the suite has verified as k-dicritical, shared across criteria.
struct Registry {
    std::vector<std::pair<Digraph, int>> verified;

    void verify_dicritical(const Digraph& d, int k, const std::string& name) {
        DicriticalityReport rep = is_k_dicritical(d, k);
        expect(rep.chi == k, name + ": chi is " + std::to_string(rep.chi) +
                                 ", expected " + std::to_string(k));
        expect(rep.is_dicritical, name + ": not dicritical");
        expect(rep.witness_colourings.size() == d.m(),
               name + ": missing per-arc witnesses");
        for (const auto& [arc, col] : rep.witness_colourings)
            expect(is_valid_dicolouring(delete_arc(d, arc), col),
                   name + ": invalid deletion witness");
        verified.emplace_back(d, k);
    }
};

struct CriterionResult {
    int id;
    std::string name;
    bool passed;
    std::string detail;
    long long ms;
};

// ----- criterion bodies -------------------------------------------------

void criterion_o3_witnesses(Registry& reg) {
    for (int n = 12; n <= 16; ++n) {
        LabelledDigraph w = o3(n);
        expect(w.digraph.n() == n, "o3 order mismatch");
        std::size_t want_m = static_cast<std::size_t>((5 * n + 1) / 2);
        expect(w.digraph.m() == want_m, "o3(" + std::to_string(n) +
                                            ") arc count " +
                                            std::to_string(w.digraph.m()));
        expect(is_oriented(w.digraph), "o3 member has a digon");
        reg.verify_dicritical(w.digraph, 3, "o3(" + std::to_string(n) + ")");
    }
}

void criterion_trichotomy(Registry& reg) {
    for (int len : {3, 5, 7, 9}) {
        Digraph c = bidirected_cycle(len);
        expect(rho(c).rho == 1, "bidirected cycle potential != 1");
        reg.verify_dicritical(c, 3, "bidirected C" + std::to_string(len));
    }
    for (auto [a, b, c] : std::vector<std::array<int, 3>>{
             {1, 1, 1}, {1, 1, 3}, {3, 3, 3}, {1, 3, 5}}) {
        Digraph w = odd_3_wheel(a, b, c).digraph;
        expect(rho(w).rho == -1, "odd 3-wheel potential != -1");
        reg.verify_dicritical(w, 3, "odd 3-wheel");
    }
    for (int n = 12; n <= 16; ++n)
        expect(rho(o3(n).digraph).rho <= -2, "o3 potential above -2");
}

void criterion_theorem1(Registry& reg) {
    int oriented_count = 0;
    for (const auto& [d, k] : reg.verified) {
        if (k != 3 || !is_oriented(d)) continue;
        ++oriented_count;
        expect(3 * static_cast<long long>(d.m()) >= 7LL * d.n() + 2,
               "oriented 3-dicritical instance below (7n+2)/3");
    }
    expect(oriented_count >= 8, "too few oriented instances were registered");
}

void criterion_g_family(Registry& reg) {
    int generated = 0;
    for (int k = 2; k <= 5; ++k) {
        for (int i = 1;; ++i) {
            FamilySizes f = family_sizes(i, k);
            if (f.n_ik > 500) break;
            Digraph g = g_family(i, k);
            expect(f.n_ik == g.n(), "family n mismatch");
            expect(f.m_ik == g.m(), "family m mismatch");
            ++generated;
        }
    }
    expect(generated > 1400, "family sweep unexpectedly small");

    reg.verify_dicritical(g_family(1, 3), 3, "G^1_3");

    for (int k = 3; k <= 50; ++k)
        for (int i = 1; i <= 10; ++i) {
            FamilySizes f = family_sizes(i, k);
            expect(Rational(f.m_ik) / Rational(f.n_ik) <
                       Rational(2 * k - 3),
                   "family ratio not below 2k-3");
        }
}

void criterion_paley(Registry&) {
    expect(dichromatic_number(paley_11()) == 4, "chi(P11) != 4");
    expect(!is_k_dicolourable(paley_11(), 3).has_value(),
           "P11 admits a 3-dicolouring");

    TournamentSweepSummary s6 = enumerate_labelled_tournaments(
        6, [](const Digraph& t) { return is_k_dicolourable(t, 2).has_value(); });
    expect(s6.visited == 32768, "wrong 6-vertex tournament count");
    expect(s6.satisfying == 32768, "a 6-vertex tournament needs 3 colours");

    Digraph witness = circulant_tournament(7, {1, 2, 4});
    expect(is_tournament(witness), "witness is not a tournament");
    expect(!is_k_dicolourable(witness, 2).has_value(),
           "the 7-vertex witness is 2-dicolourable");
}

void criterion_triangle_join(Registry& reg) {
    reg.verify_dicritical(triangle_join(directed_cycle(3), directed_cycle(3)), 3,
                          "triangle join C3+C3");
    reg.verify_dicritical(triangle_join(directed_cycle(3), directed_cycle(5)), 3,
                          "triangle join C3+C5");
}

void criterion_gadget_potentials(Registry&) {
    for (int l : {1, 3, 5})
        expect(rho(gadget({GadgetKind::Purse, {l}}).digraph).rho == 3,
               "purse potential != 3");
    for (int l1 : {1, 3})
        for (int l2 : {1, 3})
            expect(rho(gadget({GadgetKind::Handcuff, {l1, l2}}).digraph).rho == -2,
                   "handcuff potential != -2");
    for (int l1 : {1, 3})
        for (int l2 : {1, 3})
            expect(rho(gadget({GadgetKind::Bag, {l1, l2}}).digraph).rho == 3,
                   "bag potential != 3");
    for (int l1 : {0, 2})
        for (int l2 : {0, 2})
            for (int l3 : {0, 2})
                expect(rho(gadget({GadgetKind::BPlus, {l1, l2, l3}}).digraph)
                               .rho == 9,
                       "b-plus potential != 9");
}

void criterion_knobs(Registry&) {
    auto ends_equal_somewhere = [](const Digraph& d, int b1, int b2) {
        for (int c = 1; c <= 2; ++c)
            if (extend_precolouring(d, 2, {{b1, c}, {b2, c}})) return true;
        return false;
    };
    std::vector<LabelledDigraph> knobs = {knob(1), knob(2), knob(3), knob_prime()};
    for (const auto& k : knobs) {
        int b1 = k.roles.at("base1"), b2 = k.roles.at("base2");
        for (int c1 = 1; c1 <= 3; ++c1)
            for (int c2 = 1; c2 <= 3; ++c2)
                expect(extend_precolouring(k.digraph, 3, {{b1, c1}, {b2, c2}})
                           .has_value(),
                       "knob base precolouring fails to extend");
        expect(is_k_dicolourable(k.digraph, 2).has_value(),
               "knob is not 2-dicolourable");
        expect(!ends_equal_somewhere(k.digraph, b1, b2),
               "a 2-dicolouring equalizes the knob base");
        for (const Arc& a : k.digraph.arcs())
            expect(ends_equal_somewhere(delete_arc(k.digraph, a), b1, b2),
                   "arc deletion cannot equalize the knob base");
    }
    // generalized-knob clauses at k = 2 over 2-dicritical cores
    for (int len : {3, 4, 5}) {
        auto gk = generalized_knob(directed_cycle(len));
        int z1 = gk.roles.at("base1"), z2 = gk.roles.at("base2");
        expect(dichromatic_number(gk.digraph) == 2, "chi(K(C)) != 2");
        expect(!ends_equal_somewhere(gk.digraph, z1, z2),
               "a 2-dicolouring equalizes the generalized-knob base");
        for (const Arc& a : gk.digraph.arcs())
            expect(ends_equal_somewhere(delete_arc(gk.digraph, a), z1, z2),
                   "arc deletion cannot equalize the generalized-knob base");
    }
}

void criterion_property_suites(Registry& reg) {
    using namespace dicrit::testing;

    // exact matching vs brute force, 500 random graphs with <= 16 edges
    {
        std::mt19937 rng(42170);
        int done = 0;
        while (done < 500) {
            int n = 2 + static_cast<int>(rng() % 8);
            UndirectedGraph g = random_graph(rng, n, 0.4);
            if (g.m() > 16) continue;
            ++done;
            expect(maximum_matching(g).size == brute_force_matching_size(g),
                   "matching disagrees with brute force");
        }
    }

    // rho subdigraph inequality on 500 random (D, H) pairs
    {
        std::mt19937 rng(9091);
        int done = 0;
        while (done < 500) {
            int n = 2 + static_cast<int>(rng() % 8);
            Digraph d = random_digraph(rng, n, 0.5);
            VertexSet keep;
            for (int v = 0; v < n; ++v)
                if (rng() % 4) keep.push_back(v);
            if (keep.empty()) continue;
            ++done;
            InducedSubdigraph ind = induced(d, keep);
            std::vector<Arc> arcs;
            bool dropped = false;
            for (const Arc& a : ind.digraph.arcs()) {
                if (rng() % 5 == 0) {
                    dropped = true;
                    continue;
                }
                arcs.push_back(a);
            }
            Digraph h = Digraph::from_arc_list(ind.digraph.n(), arcs);
            long long lhs = rho(h).rho, rhs = rho(d, keep).rho;
            expect(lhs >= rhs, "subdigraph potential fell below host");
            if (dropped)
                expect(lhs >= rhs + 3, "non-induced subdigraph gap below 3");
        }
    }

    // 3-thread contraction monotonicity and 2-dicolourability preservation
    {
        std::mt19937 rng(31415);
        for (int trial = 0; trial < 100; ++trial) {
            auto [d, thread] = implant_3_thread(rng);
            ContractionResult cr = contract_3_thread(d, thread);
            expect(rho(cr.digraph).rho >= rho(d).rho,
                   "thread contraction lowered potential");
            if (!is_k_dicolourable(d, 2))
                expect(!is_k_dicolourable(cr.digraph, 2).has_value(),
                       "contraction created a 2-dicolouring");
        }
    }

    // colour-class contraction keeps chi >= 3 on 50 desk-scale cases
    {
        std::mt19937 rng(2621);
        int done = 0;
        while (done < 50) {
            int pick = static_cast<int>(rng() % 3);
            Digraph d = pick == 0 ? bidirected_cycle(5 + 2 * (rng() % 2))
                        : pick == 1
                            ? odd_3_wheel(1, 1, 1 + 2 * (rng() % 2)).digraph
                            : random_digraph(rng, 6 + rng() % 3, 0.6);
            if (dichromatic_number(d) < 3) continue;
            VertexSet r;
            for (int v = 0; v < d.n(); ++v)
                if (rng() % 2) r.push_back(v);
            if (r.empty() || static_cast<int>(r.size()) >= d.n()) continue;
            auto phi = is_k_dicolourable(induced(d, r).digraph, 2);
            if (!phi) continue;
            ++done;
            ContractionResult cr = contract_colour_classes(d, r, *phi);
            expect(dichromatic_number(cr.digraph) >= 3,
                   "colour-class contraction dropped chi below 3");
        }
    }

    // degree-2(k-1) block classification on every verified instance
    {
        expect(reg.verified.size() >= 12, "registry unexpectedly small");
        for (const auto& [d, k] : reg.verified)
            expect(check_gallai_blocks(d, k).ok(),
                   "forbidden block class on a dicritical instance");
    }

    // oriented Gallai forest arc bound on 200 random instances
    {
        std::mt19937 rng(1866);
        for (int trial = 0; trial < 200; ++trial) {
            Digraph f = random_oriented_gallai_forest(rng);
            expect(is_gallai_forest(f), "generator produced a non-Gallai forest");
            expect(oriented_gallai_bound_check(f),
                   "Gallai forest arc bound violated");
        }
    }
}

} // namespace

int main() {
    struct Spec {
        int id;
        std::string name;
        long long budget_ms;
        std::function<void(Registry&)> run;
    };
    Registry reg;
    // criterion 3 consumes instances verified by 1, 2 and 6; criterion 9's
    // block sweep consumes all of them
    std::vector<Spec> specs = {
        {1, "O3 witnesses: oriented, ceil(5n/2) arcs, 3-dicritical (n=12..16)",
         5000, criterion_o3_witnesses},
        {2, "potential trichotomy on bidirected cycles, odd 3-wheels, O3",
         30000, criterion_trichotomy},
        {6, "triangle joins of directed cycles are 3-dicritical", 5000,
         criterion_triangle_join},
        {4, "G-family recurrences, dicriticality of G^1_3, ratio < 2k-3",
         60000, criterion_g_family},
        {3, "every verified oriented 3-dicritical instance has 3m >= 7n+2",
         5000, criterion_theorem1},
        {5, "Paley facts: chi(P11)=4, 6-vertex sweep, 7-vertex witness",
         300000, criterion_paley},
        {7, "gadget potentials: purse 3, handcuff -2, bag 3, B+ 9", 1000,
         criterion_gadget_potentials},
        {8, "knob colouring guarantees for heights 1-3, the even knob, D-knobs",
         10000, criterion_knobs},
        {9, "property suites: matching, potential, contractions, blocks, "
            "Gallai bound",
         120000, criterion_property_suites},
    };

    std::vector<CriterionResult> results;
    for (const auto& spec : specs) {
        auto t0 = std::chrono::steady_clock::now();
        CriterionResult r{spec.id, spec.name, true, "", 0};
        try {
            spec.run(reg);
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = e.what();
        }
        r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
                   .count();
        if (r.passed && r.ms > spec.budget_ms) {
            r.passed = false;
            r.detail = "runtime " + std::to_string(r.ms) + " ms exceeds budget " +
                       std::to_string(spec.budget_ms) + " ms";
        }
        results.push_back(std::move(r));
    }

    std::sort(results.begin(), results.end(),
              [](const CriterionResult& a, const CriterionResult& b) {
                  return a.id < b.id;
              });
    bool all = true;
    for (const auto& r : results) {
        std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id
                  << ": " << r.name << " [" << r.ms << " ms]";
        if (!r.detail.empty()) std::cout << " -- " << r.detail;
        std::cout << "\n";
        all = all && r.passed;
    }
    std::cout << (all ? "ACCEPTANCE: all criteria passed"
                      : "ACCEPTANCE: FAILURES PRESENT")
              << "\n";
    return all ? 0 : 1;
}
