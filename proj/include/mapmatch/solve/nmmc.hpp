#ifndef MAPMATCH_SOLVE_NMMC_HPP
#define MAPMATCH_SOLVE_NMMC_HPP

#include <chrono>
#include <cstdint>
#include <limits>
#include <queue>
#include <tuple>
#include <vector>

#include "mapmatch/solve/common.hpp"

namespace mapmatch {

namespace detail {

constexpr std::int64_t kUnreachable = std::numeric_limits<std::int64_t>::max() / 4;

struct NmmcParent {
    int pred = -1;       // predecessor vertex, -1 for column-0 seeds
    bool same_column = false; // path-only move (predecessor in the same column)
};

} // namespace detail

/// Minimum-|Q| map matching, vertices reusable (NMMC).
///
/// Column-by-column dynamic program over curve indices. Cross-column
/// transitions are the curve-only (cost 0) and simultaneous (cost 1) moves;
/// path-only moves are folded in per column as a unit-weight shortest-path
/// relaxation over the eps-ball subgraph. With compat_eq1 set, the literal
/// printed recurrence is used instead: no path-only moves, and a reachable
/// stay always wins over a neighbor transition.
inline SolveOutcome solve_nmmc(const Instance& inst, const SolverConfig& cfg = {}) {
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();
    SolveOutcome out;

    const EmbeddedGraph& g = inst.graph;
    const PolygonalCurve& p = inst.curve;
    const int nv = g.vertex_count();
    const std::size_t n = p.size();
    const CandidateSets cands(g, p, inst.epsilon);

    auto done = [&]() -> SolveOutcome& {
        out.stats.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return out;
    };

    if (auto empty = cands.first_empty()) {
        out.status = SolveStatus::infeasible;
        out.empty_candidate_index = *empty;
        return done();
    }

    using detail::kUnreachable;
    std::vector<std::vector<std::int64_t>> cost(n, std::vector<std::int64_t>(nv, kUnreachable));
    std::vector<std::vector<detail::NmmcParent>> parent(n, std::vector<detail::NmmcParent>(nv));

    const double e2 = squared_threshold(inst.epsilon);
    auto admissible = [&](int v, std::size_t j) { return dist_sq(g.vertex(v), p[j]) <= e2; };

    for (std::size_t j = 0; j < n; ++j) {
        auto& cur = cost[j];
        for (int v : cands.at(j)) {
            if (j == 0) {
                cur[v] = 1;
                parent[j][v] = {-1, false};
                continue;
            }
            const auto& prev = cost[j - 1];
            std::int64_t best = kUnreachable;
            int best_pred = -1;
            if (cfg.compat_eq1) {
                // Eq-style guard ordering: a reachable stay is taken outright.
                if (prev[v] < kUnreachable) {
                    best = prev[v];
                    best_pred = v;
                } else {
                    for (int k : g.neighbors(v)) {
                        ++out.stats.expansions;
                        if (prev[k] < kUnreachable && prev[k] + 1 < best) {
                            best = prev[k] + 1;
                            best_pred = k;
                        }
                    }
                }
            } else {
                if (prev[v] < kUnreachable) best = prev[v];
                for (int k : g.neighbors(v)) {
                    ++out.stats.expansions;
                    if (prev[k] < kUnreachable) best = std::min(best, prev[k] + 1);
                }
                if (best < kUnreachable) {
                    // ties go to the smallest predecessor index
                    int bp = (prev[v] == best) ? v : std::numeric_limits<int>::max();
                    for (int k : g.neighbors(v)) {
                        if (prev[k] < kUnreachable && prev[k] + 1 == best && k < bp) bp = k;
                    }
                    best_pred = bp;
                }
            }
            if (best < kUnreachable) {
                cur[v] = best;
                parent[j][v] = {best_pred, false};
            }
        }

        if (!cfg.compat_eq1) {
            // In-column relaxation: consecutive path vertices matched to p_j.
            using Item = std::pair<std::int64_t, int>;
            std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
            for (int v : cands.at(j)) {
                if (cur[v] < kUnreachable) heap.push({cur[v], v});
            }
            while (!heap.empty()) {
                const auto [d, u] = heap.top();
                heap.pop();
                if (d != cur[u]) continue;
                ++out.stats.expansions;
                for (int w : g.neighbors(u)) {
                    if (!admissible(w, j)) continue;
                    if (d + 1 < cur[w]) {
                        cur[w] = d + 1;
                        parent[j][w] = {u, true};
                        heap.push({d + 1, w});
                    }
                }
            }
        }
    }

    std::int64_t best = detail::kUnreachable;
    int end_vertex = -1;
    for (int v = 0; v < nv; ++v) {
        if (cost[n - 1][v] < best) {
            best = cost[n - 1][v];
            end_vertex = v;
        }
    }
    if (end_vertex < 0) {
        out.status = SolveStatus::infeasible;
        return done();
    }
    if (inst.k_bound && best > *inst.k_bound) {
        out.status = SolveStatus::infeasible;
        return done();
    }

    // Backtrack: seeds and moving transitions contribute a path vertex,
    // curve-only stays do not.
    std::vector<int> path;
    int v = end_vertex;
    std::size_t j = n - 1;
    while (true) {
        const detail::NmmcParent pr = parent[j][v];
        if (pr.pred < 0) {
            path.push_back(v);
            break;
        }
        if (pr.same_column) {
            path.push_back(v);
            v = pr.pred;
        } else if (pr.pred == v) {
            --j; // stay
        } else {
            path.push_back(v);
            v = pr.pred;
            --j;
        }
    }
    std::reverse(path.begin(), path.end());

    out.status = SolveStatus::feasible;
    out.result = finish_frechet_result(inst, std::move(path));
    return done();
}

} // namespace mapmatch

#endif
