#ifndef MAPMATCH_SOLVE_HAUSPATH_HPP
#define MAPMATCH_SOLVE_HAUSPATH_HPP

#include <chrono>
#include <cstdint>
#include <deque>
#include <unordered_map>
#include <vector>

#include "mapmatch/solve/common.hpp"

namespace mapmatch {

/// Covering-path search under the Hausdorff distance: does G contain a path
/// Q with |Q| <= K and d_H(nodes(P), vertices(Q)) <= eps? The predicate is
/// order-free, so the search runs over (vertex, covered-curve-node set)
/// states by breadth-first expansion in path length; vertices farther than
/// eps from every curve node are inadmissible (they would break the
/// Q-to-P direction). Curve length is limited to 64 nodes by the cover mask.
inline SolveOutcome solve_path_hausdorff(const Instance& inst, const SolverConfig& cfg = {}) {
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
    const int kmax = inst.k_bound.value_or(nv);

    if (n > 64) {
        out.status = SolveStatus::budget_exceeded; // cover mask capacity
        return done();
    }
    const double e2 = squared_threshold(inst.epsilon);

    std::vector<std::uint64_t> covers(static_cast<std::size_t>(nv), 0);
    std::vector<char> admissible(static_cast<std::size_t>(nv), 0);
    for (int v = 0; v < nv; ++v) {
        for (std::size_t j = 0; j < n; ++j) {
            if (dist_sq(g.vertex(v), p[j]) <= e2) covers[v] |= (1ull << j);
        }
        admissible[v] = covers[v] != 0;
    }
    const std::uint64_t full = n == 64 ? ~0ull : ((1ull << n) - 1);

    // d_H <= eps also needs every curve node covered by some path vertex;
    // a node nobody covers is an immediate proof of infeasibility.
    {
        std::uint64_t anyone = 0;
        for (int v = 0; v < nv; ++v) anyone |= covers[v];
        if (anyone != full) {
            out.status = SolveStatus::infeasible;
            for (std::size_t j = 0; j < n; ++j) {
                if (!(anyone >> j & 1)) {
                    out.empty_candidate_index = j;
                    break;
                }
            }
            return done();
        }
    }

    struct State {
        int v;
        std::uint64_t mask;
    };
    auto key = [&](int v, std::uint64_t mask) {
        return mask * static_cast<std::uint64_t>(nv) + static_cast<std::uint64_t>(v);
    };
    // key -> (length, parent key); BFS order makes lengths minimal
    std::unordered_map<std::uint64_t, std::pair<int, std::uint64_t>> seen;
    std::deque<State> queue;

    for (int v = 0; v < nv; ++v) {
        if (!admissible[v]) continue;
        const std::uint64_t k = key(v, covers[v]);
        if (!seen.count(k)) {
            seen.emplace(k, std::make_pair(1, ~0ull));
            queue.push_back({v, covers[v]});
        }
    }

    std::uint64_t goal_key = ~0ull;
    while (!queue.empty()) {
        const State s = queue.front();
        queue.pop_front();
        const auto [len, par] = seen.at(key(s.v, s.mask));
        if (s.mask == full) {
            goal_key = key(s.v, s.mask);
            break;
        }
        if (len >= kmax) continue;
        if (out.stats.expansions++ >= cfg.expansion_budget) {
            out.status = SolveStatus::budget_exceeded;
            return done();
        }
        for (int w : g.neighbors(s.v)) {
            if (!admissible[w]) continue;
            const std::uint64_t nm = s.mask | covers[w];
            const std::uint64_t nk = key(w, nm);
            if (!seen.count(nk)) {
                seen.emplace(nk, std::make_pair(len + 1, key(s.v, s.mask)));
                queue.push_back({w, nm});
            }
        }
    }

    if (goal_key == ~0ull) {
        out.status = SolveStatus::infeasible;
        return done();
    }

    std::vector<int> path;
    for (std::uint64_t k = goal_key; k != ~0ull; k = seen.at(k).second) {
        path.push_back(static_cast<int>(k % static_cast<std::uint64_t>(nv)));
    }
    std::reverse(path.begin(), path.end());

    MatchResult r;
    r.path = std::move(path);
    r.used_vertices.insert(r.path.begin(), r.path.end());
    r.achieved = hausdorff(inst.curve.nodes(), path_as_curve(g, r.path).nodes());
    r.witness.reset(); // order-free predicate: no coupling
    out.result = std::move(r);
    out.status = SolveStatus::feasible;
    return done();
}

} // namespace mapmatch

#endif
