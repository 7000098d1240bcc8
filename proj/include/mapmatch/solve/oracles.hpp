#ifndef MAPMATCH_SOLVE_ORACLES_HPP
#define MAPMATCH_SOLVE_ORACLES_HPP

#include <cstdint>
#include <optional>
#include <queue>
#include <vector>

#include "mapmatch/solve/common.hpp"

namespace mapmatch {

/// Independent check for solve_nmmc: materialize the product graph over
/// admissible (vertex, curve index) states with 0/1 move weights and run a
/// plain binary-heap Dijkstra from all admissible (v, 0) states (seed 1).
/// Returns the optimal |Q| or nullopt when no matching path exists.
inline std::optional<std::int64_t> oracle_product_dijkstra(const Instance& inst) {
    const EmbeddedGraph& g = inst.graph;
    const PolygonalCurve& p = inst.curve;
    const int nv = g.vertex_count();
    const std::size_t n = p.size();
    const double e2 = squared_threshold(inst.epsilon);

    std::vector<char> adm(static_cast<std::size_t>(nv) * n, 0);
    auto id = [&](int v, std::size_t j) { return static_cast<std::size_t>(v) * n + j; };
    for (int v = 0; v < nv; ++v) {
        for (std::size_t j = 0; j < n; ++j) {
            adm[id(v, j)] = dist_sq(g.vertex(v), p[j]) <= e2 ? 1 : 0;
        }
    }

    constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
    std::vector<std::int64_t> dist(static_cast<std::size_t>(nv) * n, kInf);
    using Item = std::pair<std::int64_t, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;

    for (int v = 0; v < nv; ++v) {
        if (adm[id(v, 0)]) {
            dist[id(v, 0)] = 1;
            heap.push({1, id(v, 0)});
        }
    }

    while (!heap.empty()) {
        const auto [d, s] = heap.top();
        heap.pop();
        if (d != dist[s]) continue;
        const int v = static_cast<int>(s / n);
        const std::size_t j = s % n;

        auto relax = [&](int w, std::size_t l, std::int64_t nd) {
            if (!adm[id(w, l)]) return;
            if (nd < dist[id(w, l)]) {
                dist[id(w, l)] = nd;
                heap.push({nd, id(w, l)});
            }
        };
        if (j + 1 < n) relax(v, j + 1, d); // curve-only advance
        for (int w : g.neighbors(v)) {
            if (j + 1 < n) relax(w, j + 1, d + 1); // simultaneous advance
            relax(w, j, d + 1);                    // path-only advance
        }
    }

    std::int64_t best = kInf;
    for (int v = 0; v < nv; ++v) best = std::min(best, dist[id(v, n - 1)]);
    if (best >= kInf) return std::nullopt;
    return best;
}

struct UmmEnumOptions {
    int max_vertices = 12;            ///< guard; above this throws TooLargeError
    std::uint64_t budget = 50'000'000; ///< extension steps before giving up
    std::size_t max_paths = 0;        ///< collect at most this many witnesses (0: feasibility only)
};

struct UmmEnumReport {
    bool feasible = false;
    bool budget_exceeded = false;
    std::vector<std::vector<int>> feasible_paths; ///< populated when max_paths > 0
    std::uint64_t expansions = 0;
};

/// Exhaustive unique-path oracle: walks every simple path of G and keeps the
/// set of curve prefixes the path can be coupled onto. A path is feasible
/// when the full curve is coupled. Independent of solve_umm.
inline UmmEnumReport oracle_umm_enum(const Instance& inst, const UmmEnumOptions& opt = {}) {
    const EmbeddedGraph& g = inst.graph;
    const PolygonalCurve& p = inst.curve;
    const int nv = g.vertex_count();
    const std::size_t n = p.size();
    if (nv > opt.max_vertices) {
        throw TooLargeError("oracle_umm_enum: graph exceeds vertex guard");
    }
    const double e2 = squared_threshold(inst.epsilon);
    auto adm = [&](int v, std::size_t j) { return dist_sq(g.vertex(v), p[j]) <= e2; };

    UmmEnumReport rep;
    std::vector<char> visited(static_cast<std::size_t>(nv), 0);
    std::vector<int> path;

    // reach[j] == 1 iff P[0..j] can be coupled onto the current path using
    // every path vertex, ending with the last vertex matched to p_j.
    auto extend_reach = [&](const std::vector<char>& reach, int v) {
        std::vector<char> out(n, 0);
        for (std::size_t j = 0; j < n; ++j) {
            if (!adm(v, j)) continue;
            if (reach[j]) out[j] = 1;                       // path-only move
            if (j > 0 && reach[j - 1]) out[j] = 1;          // simultaneous move
            if (j > 0 && out[j - 1] && adm(v, j)) out[j] = 1; // curve-only within row
        }
        return out;
    };

    auto walk = [&](auto&& self, int v, const std::vector<char>& reach) -> bool {
        if (rep.expansions++ > opt.budget) {
            rep.budget_exceeded = true;
            return true; // unwind
        }
        if (reach[n - 1]) {
            rep.feasible = true;
            if (opt.max_paths == 0) return true;
            rep.feasible_paths.push_back(path);
            if (rep.feasible_paths.size() >= opt.max_paths) return true;
        }
        for (int w : g.neighbors(v)) {
            if (visited[static_cast<std::size_t>(w)]) continue;
            const std::vector<char> next = extend_reach(reach, w);
            if (std::find(next.begin(), next.end(), 1) == next.end()) continue;
            visited[static_cast<std::size_t>(w)] = 1;
            path.push_back(w);
            const bool stop = self(self, w, next);
            path.pop_back();
            visited[static_cast<std::size_t>(w)] = 0;
            if (stop) return true;
        }
        return false;
    };

    for (int s = 0; s < nv; ++s) {
        std::vector<char> reach(n, 0);
        for (std::size_t j = 0; j < n; ++j) {
            if (adm(s, j)) {
                reach[j] = 1;
            } else {
                break; // single-vertex coupling needs an admissible prefix run
            }
        }
        if (std::find(reach.begin(), reach.end(), 1) == reach.end()) continue;
        visited[static_cast<std::size_t>(s)] = 1;
        path.push_back(s);
        const bool stop = walk(walk, s, reach);
        path.pop_back();
        visited[static_cast<std::size_t>(s)] = 0;
        if (stop && (opt.max_paths == 0 || rep.budget_exceeded ||
                     rep.feasible_paths.size() >= opt.max_paths)) {
            break;
        }
    }
    return rep;
}

} // namespace mapmatch

#endif
