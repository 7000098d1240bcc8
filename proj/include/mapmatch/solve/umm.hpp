#ifndef MAPMATCH_SOLVE_UMM_HPP
#define MAPMATCH_SOLVE_UMM_HPP

#include <chrono>
#include <cstdint>
#include <vector>

#include "mapmatch/solve/common.hpp"

namespace mapmatch {

/// Unique map matching: minimum-|Q| path with all-distinct vertices and
/// d_F(P,Q) <= eps. Exact depth-first branch and bound over
/// (current vertex, curve index, visited set); pruned by the bound on |Q|
/// and by the future-candidate check (some remaining curve node has all of
/// its eps-ball either visited or unequal to the current vertex).
inline SolveOutcome solve_umm(const Instance& inst, const SolverConfig& cfg = {}) {
    cfg.validate();
    const auto t0 = std::chrono::steady_clock::now();
    SolveOutcome out;
    auto done = [&]() -> SolveOutcome& {
        out.stats.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return out;
    };

    const EmbeddedGraph& g = inst.graph;
    const PolygonalCurve& p = inst.curve;
    const int nv = g.vertex_count();
    const std::size_t n = p.size();
    const CandidateSets cands(g, p, inst.epsilon);
    if (auto empty = cands.first_empty()) {
        out.status = SolveStatus::infeasible;
        out.empty_candidate_index = *empty;
        return done();
    }

    const double e2 = squared_threshold(inst.epsilon);
    auto adm = [&](int v, std::size_t j) { return dist_sq(g.vertex(v), p[j]) <= e2; };

    // columns each vertex is a candidate for, and per-column free counts
    std::vector<std::vector<std::size_t>> cols_of(static_cast<std::size_t>(nv));
    for (std::size_t j = 0; j < n; ++j) {
        for (int v : cands.at(j)) cols_of[static_cast<std::size_t>(v)].push_back(j);
    }
    std::vector<int> avail(n, 0);
    for (std::size_t j = 0; j < n; ++j) avail[j] = static_cast<int>(cands.at(j).size());

    const int bound_cap = inst.k_bound ? std::min(nv, *inst.k_bound) : nv;
    int best_size = bound_cap + 1;
    std::vector<int> best_path;

    std::vector<char> visited(static_cast<std::size_t>(nv), 0);
    std::vector<int> path;
    std::vector<std::size_t> starved; // columns whose eps-ball is fully visited
    bool budget_hit = false;

    auto visit = [&](int v) {
        visited[static_cast<std::size_t>(v)] = 1;
        path.push_back(v);
        for (std::size_t j : cols_of[static_cast<std::size_t>(v)]) {
            if (--avail[j] == 0) starved.push_back(j);
        }
    };
    auto unvisit = [&](int v) {
        visited[static_cast<std::size_t>(v)] = 0;
        path.pop_back();
        for (std::size_t j : cols_of[static_cast<std::size_t>(v)]) {
            if (avail[j]++ == 0) starved.pop_back();
        }
    };

    auto dfs = [&](auto&& self, int v, std::size_t j) -> void {
        if (budget_hit) return;
        if (out.stats.expansions++ >= cfg.expansion_budget) {
            budget_hit = true;
            return;
        }
        if (static_cast<int>(path.size()) >= best_size) return;
        // a starved future column is only coverable by staying on v
        for (std::size_t sj : starved) {
            if (sj > j && !adm(v, sj)) return;
        }
        if (j == n - 1) {
            best_size = static_cast<int>(path.size());
            best_path = path;
            return;
        }
        if (adm(v, j + 1)) self(self, v, j + 1);
        for (int w : g.neighbors(v)) {
            if (visited[static_cast<std::size_t>(w)]) continue;
            if (adm(w, j + 1)) {
                visit(w);
                self(self, w, j + 1);
                unvisit(w);
            }
            if (adm(w, j)) {
                visit(w);
                self(self, w, j);
                unvisit(w);
            }
        }
    };

    for (int s : cands.at(0)) {
        visit(s);
        dfs(dfs, s, 0);
        unvisit(s);
        if (budget_hit) break;
    }

    if (budget_hit && best_path.empty()) {
        out.status = SolveStatus::budget_exceeded;
        return done();
    }
    if (best_path.empty()) {
        out.status = SolveStatus::infeasible;
        return done();
    }
    // A budget hit after a witness was found still proves feasibility, but
    // minimality is then unconfirmed; report the search as truncated and
    // attach the best witness seen.
    out.status = budget_hit ? SolveStatus::budget_exceeded : SolveStatus::feasible;
    out.result = finish_frechet_result(inst, std::move(best_path));
    return done();
}

} // namespace mapmatch

#endif
