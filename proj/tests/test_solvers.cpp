#include <catch2/catch_amalgamated.hpp>

#include "mapmatch/solve/hauspath.hpp"
#include "mapmatch/solve/nmmc.hpp"
#include "mapmatch/solve/nmms.hpp"
#include "mapmatch/solve/oracles.hpp"
#include "mapmatch/solve/umm.hpp"
#include "support.hpp"

using namespace mapmatch;

namespace {

Instance random_instance(mmtest::Rng& rng, int max_v, std::size_t max_p) {
    const auto g = mmtest::random_planar_graph(rng, max_v);
    const auto p = mmtest::random_curve(rng, max_p, 0.0, 5.0);
    const double eps = mmtest::random_epsilon(rng, g, p);
    return Instance(g, p, eps);
}

} // namespace

TEST_CASE("nmmc trivial cases") {
    const auto g = build_graph({Point(0, 0)}, {});
    SECTION("single vertex matches a one-node curve") {
        const Instance inst(g, PolygonalCurve({Point(0, 0)}), 0.1);
        const auto out = solve_nmmc(inst);
        REQUIRE(out.feasible());
        CHECK(out.result->path == std::vector<int>{0});
        CHECK(verify_match(inst, *out.result));
    }
    SECTION("first curve node out of reach reports the index") {
        const Instance inst(g, PolygonalCurve({Point(9, 9), Point(0, 0)}), 0.1);
        const auto out = solve_nmmc(inst);
        CHECK(out.status == SolveStatus::infeasible);
        CHECK(out.empty_candidate_index == std::optional<std::size_t>(0));
    }
    SECTION("curve-only advances keep |Q| at 1") {
        const Instance inst(g, PolygonalCurve({Point(0.2, 0), Point(0, 0.3), Point(-0.1, 0)}), 0.5);
        const auto out = solve_nmmc(inst);
        REQUIRE(out.feasible());
        CHECK(out.result->path.size() == 1);
    }
}

TEST_CASE("nmmc length two across an edge") {
    const auto g = build_graph({Point(0, 0), Point(2, 0)}, {{0, 1}});
    const Instance inst(g, PolygonalCurve({Point(0, 0.1), Point(2, -0.1)}), 0.5);
    const auto out = solve_nmmc(inst);
    REQUIRE(out.feasible());
    CHECK(out.result->path == std::vector<int>{0, 1});
    CHECK(out.result->used_vertices.size() == 2);
}

TEST_CASE("nmmc optimum equals the explicit product-graph shortest path") {
    mmtest::Rng rng(555);
    int feasible = 0, infeasible = 0;
    for (int it = 0; it < 1000; ++it) {
        const Instance inst = random_instance(rng, 8, 6);
        const auto fast = solve_nmmc(inst);
        const auto slow = oracle_product_dijkstra(inst);
        if (slow) {
            ++feasible;
            REQUIRE(fast.feasible());
            CHECK(static_cast<std::int64_t>(fast.result->path.size()) == *slow);
            CHECK(verify_match(inst, *fast.result));
        } else {
            ++infeasible;
            CHECK(fast.status == SolveStatus::infeasible);
        }
    }
    INFO("feasible=" << feasible << " infeasible=" << infeasible);
    CHECK(feasible > 100);
    CHECK(infeasible > 100);
}

TEST_CASE("nmmc K bound post-filters the optimum") {
    const auto g = build_graph({Point(0, 0), Point(2, 0), Point(4, 0)}, {{0, 1}, {1, 2}});
    const PolygonalCurve p({Point(0, 0), Point(2, 0), Point(4, 0)});
    CHECK(solve_nmmc(Instance(g, p, 0.5, 3)).feasible());
    CHECK(solve_nmmc(Instance(g, p, 0.5, 2)).status == SolveStatus::infeasible);
}

TEST_CASE("compat mode is never feasible where the full semantics is infeasible") {
    mmtest::Rng rng(999);
    SolverConfig compat;
    compat.compat_eq1 = true;
    int compat_worse = 0;
    for (int it = 0; it < 500; ++it) {
        const Instance inst = random_instance(rng, 8, 6);
        const auto full = solve_nmmc(inst);
        const auto lit = solve_nmmc(inst, compat);
        if (lit.feasible()) {
            REQUIRE(full.feasible());
            CHECK(full.result->path.size() <= lit.result->path.size());
            CHECK(verify_match(inst, *lit.result));
            compat_worse += lit.result->path.size() > full.result->path.size();
        }
    }
    INFO("cases where the literal recurrence overshoots: " << compat_worse);
}

TEST_CASE("umm trivial cases") {
    SECTION("three vertices on the curve") {
        const auto g = build_graph({Point(0, 0), Point(1, 0), Point(2, 0)}, {{0, 1}, {1, 2}});
        const Instance inst(g, PolygonalCurve({Point(0, 0), Point(1, 0), Point(2, 0)}), 0.1);
        const auto out = solve_umm(inst);
        REQUIRE(out.feasible());
        CHECK(out.result->path == std::vector<int>{0, 1, 2});
    }
    SECTION("single vertex covers two curve nodes by staying") {
        const auto g = build_graph({Point(0, 0)}, {});
        const Instance inst(g, PolygonalCurve({Point(0.2, 0), Point(-0.2, 0)}), 0.5);
        const auto out = solve_umm(inst);
        REQUIRE(out.feasible());
        CHECK(out.result->path.size() == 1);
    }
}

TEST_CASE("umm agrees with exhaustive unique-path enumeration") {
    mmtest::Rng rng(4242);
    int feas = 0, infeas = 0;
    for (int it = 0; it < 400; ++it) {
        const Instance inst = random_instance(rng, 8, 6);
        const auto fast = solve_umm(inst);
        const auto slow = oracle_umm_enum(inst);
        REQUIRE(fast.status != SolveStatus::budget_exceeded);
        REQUIRE_FALSE(slow.budget_exceeded);
        CHECK(fast.feasible() == slow.feasible);
        if (fast.feasible()) {
            ++feas;
            CHECK(verify_match(inst, *fast.result));
            const auto& path = fast.result->path;
            std::set<int> uniq(path.begin(), path.end());
            CHECK(uniq.size() == path.size());
        } else {
            ++infeas;
        }
    }
    INFO("feasible=" << feas << " infeasible=" << infeas);
    CHECK(feas > 50);
    CHECK(infeas > 50);
}

TEST_CASE("umm minimality on small instances via enumeration") {
    mmtest::Rng rng(31415);
    for (int it = 0; it < 120; ++it) {
        const Instance inst = random_instance(rng, 6, 5);
        const auto fast = solve_umm(inst);
        UmmEnumOptions opt;
        opt.max_paths = 100000;
        const auto slow = oracle_umm_enum(inst, opt);
        if (!fast.feasible()) {
            CHECK_FALSE(slow.feasible);
            continue;
        }
        std::size_t best = SIZE_MAX;
        for (const auto& q : slow.feasible_paths) best = std::min(best, q.size());
        CHECK(fast.result->path.size() == best);
    }
}

TEST_CASE("nmms trivial and bounded cases") {
    SECTION("one vertex can cover the whole curve") {
        const auto g = build_graph({Point(0, 0), Point(5, 0)}, {{0, 1}});
        const Instance inst(g, PolygonalCurve({Point(0.2, 0), Point(-0.2, 0)}), 0.5, 2);
        const auto out = solve_nmms(inst);
        REQUIRE(out.feasible());
        CHECK(out.result->used_vertices.size() == 1);
    }
    SECTION("K equal to |V| is the same as plain reachability") {
        mmtest::Rng rng(808);
        for (int it = 0; it < 150; ++it) {
            Instance inst = random_instance(rng, 6, 5);
            const Instance bounded(inst.graph, inst.curve, inst.epsilon, inst.graph.vertex_count());
            const bool nmmc_feasible = solve_nmmc(inst).feasible();
            CHECK(solve_nmms(bounded).feasible() == nmmc_feasible);
        }
    }
}

TEST_CASE("umm feasibility implies nmms feasibility at K = |Q_umm|") {
    mmtest::Rng rng(60601);
    int checked = 0;
    for (int it = 0; it < 150; ++it) {
        const Instance inst = random_instance(rng, 7, 5);
        const auto umm = solve_umm(inst);
        if (!umm.feasible()) continue;
        ++checked;
        const Instance bounded(inst.graph, inst.curve, inst.epsilon,
                               static_cast<int>(umm.result->path.size()));
        const auto nmms = solve_nmms(bounded);
        REQUIRE(nmms.feasible());
        CHECK(nmms.result->used_vertices.size() <= umm.result->used_vertices.size());
    }
    CHECK(checked > 20);
}

TEST_CASE("solver feasibility is monotone in eps and K") {
    mmtest::Rng rng(7007);
    for (int it = 0; it < 200; ++it) {
        const auto g = mmtest::random_planar_graph(rng, 7);
        const auto p = mmtest::random_curve(rng, 5, 0.0, 5.0);
        const double e1 = mmtest::random_epsilon(rng, g, p);
        const double e2 = e1 * 1.7 + 0.1;
        const Instance small(g, p, e1), big(g, p, e2);
        if (solve_nmmc(small).feasible()) CHECK(solve_nmmc(big).feasible());
        if (solve_umm(small).feasible()) CHECK(solve_umm(big).feasible());
        std::uniform_int_distribution<int> kd(1, g.vertex_count());
        const int k = kd(rng);
        const Instance smallK(g, p, e1, k), bigK(g, p, e1, std::min(k + 2, g.vertex_count()));
        if (solve_nmms(smallK).feasible()) {
            CHECK(solve_nmms(bigK).feasible());
            CHECK(solve_nmms(Instance(g, p, e2, k)).feasible());
        }
        if (solve_path_hausdorff(smallK).feasible()) {
            CHECK(solve_path_hausdorff(bigK).feasible());
            CHECK(solve_path_hausdorff(Instance(g, p, e2, k)).feasible());
        }
    }
}

TEST_CASE("hauspath small cases") {
    SECTION("square cycle has a hamiltonian path") {
        const auto g = build_graph({Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)},
                                   {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
        const PolygonalCurve p({Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)});
        const auto out = solve_path_hausdorff(Instance(g, p, 0.0, 4));
        REQUIRE(out.feasible());
        CHECK(out.result->path.size() <= 4);
        CHECK(out.result->used_vertices.size() == 4);
        CHECK(out.result->achieved == 0.0);
        CHECK(verify_match(Instance(g, p, 0.0, 4), *out.result, /*hausdorff_mode=*/true));
    }
    SECTION("path graph of three vertices") {
        const auto g = build_graph({Point(0, 0), Point(1, 0), Point(2, 0)}, {{0, 1}, {1, 2}});
        const PolygonalCurve p({Point(0, 0), Point(1, 0), Point(2, 0)});
        CHECK(solve_path_hausdorff(Instance(g, p, 0.0, 3)).feasible());
    }
    SECTION("star has no hamiltonian path within |V| nodes") {
        const auto g = build_graph({Point(0, 0), Point(1, 0), Point(-1, 0), Point(0, 1)},
                                   {{0, 1}, {0, 2}, {0, 3}});
        const PolygonalCurve p({Point(0, 0), Point(1, 0), Point(-1, 0), Point(0, 1)});
        CHECK(solve_path_hausdorff(Instance(g, p, 0.0, 4)).status == SolveStatus::infeasible);
        // revisits allowed: five nodes suffice
        CHECK(solve_path_hausdorff(Instance(g, p, 0.0, 5)).feasible());
    }
}

TEST_CASE("every feasible result self-verifies") {
    mmtest::Rng rng(121212);
    for (int it = 0; it < 200; ++it) {
        const Instance inst = random_instance(rng, 7, 5);
        if (const auto a = solve_nmmc(inst); a.feasible()) CHECK(verify_match(inst, *a.result));
        if (const auto b = solve_umm(inst); b.feasible()) CHECK(verify_match(inst, *b.result));
        const Instance k(inst.graph, inst.curve, inst.epsilon, inst.graph.vertex_count());
        if (const auto c = solve_nmms(k); c.feasible()) CHECK(verify_match(k, *c.result));
        if (const auto d = solve_path_hausdorff(k); d.feasible()) {
            CHECK(verify_match(k, *d.result, true));
        }
    }
}

TEST_CASE("budget exceeded is reported distinctly") {
    mmtest::Rng rng(5);
    const auto g = mmtest::random_planar_graph(rng, 8, 3);
    const auto p = mmtest::random_curve(rng, 6, 0.0, 3.0);
    SolverConfig tiny;
    tiny.expansion_budget = 1;
    const Instance inst(g, p, 10.0);
    CHECK(solve_umm(inst, tiny).status == SolveStatus::budget_exceeded);
}
