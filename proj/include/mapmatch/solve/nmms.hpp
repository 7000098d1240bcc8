#ifndef MAPMATCH_SOLVE_NMMS_HPP
#define MAPMATCH_SOLVE_NMMS_HPP

#include <chrono>
#include <cstdint>
#include <vector>

#include "mapmatch/solve/common.hpp"

namespace mapmatch {

namespace detail {

struct NmmsParentCell {
    int pred = -2; // -2 unset, -1 column-0 seed
    bool same_column = false;
};

/// Product-graph reachability restricted to an allowed vertex set; fills
/// parents for witness recovery. Returns the end vertex or -1.
inline int restricted_reachability(const Instance& inst, const std::vector<char>& allowed,
                                   std::vector<std::vector<NmmsParentCell>>& parent,
                                   std::uint64_t& expansions) {
    const EmbeddedGraph& g = inst.graph;
    const PolygonalCurve& p = inst.curve;
    const int nv = g.vertex_count();
    const std::size_t n = p.size();
    const double e2 = squared_threshold(inst.epsilon);
    auto adm = [&](int v, std::size_t j) {
        return allowed[static_cast<std::size_t>(v)] && dist_sq(g.vertex(v), p[j]) <= e2;
    };

    parent.assign(n, std::vector<NmmsParentCell>(static_cast<std::size_t>(nv)));
    std::vector<char> cur(static_cast<std::size_t>(nv), 0), prev;
    std::vector<int> queue;

    for (std::size_t j = 0; j < n; ++j) {
        prev.swap(cur);
        cur.assign(static_cast<std::size_t>(nv), 0);
        queue.clear();
        for (int v = 0; v < nv; ++v) {
            if (!adm(v, j)) continue;
            ++expansions;
            if (j == 0) {
                cur[v] = 1;
                parent[j][v] = {-1, false};
                queue.push_back(v);
                continue;
            }
            if (prev[v]) {
                cur[v] = 1;
                parent[j][v] = {v, false}; // stay
                queue.push_back(v);
                continue;
            }
            for (int k : g.neighbors(v)) {
                if (prev[k]) {
                    cur[v] = 1;
                    parent[j][v] = {k, false};
                    queue.push_back(v);
                    break;
                }
            }
        }
        // close under path-only moves inside the column
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const int u = queue[qi];
            ++expansions;
            for (int w : g.neighbors(u)) {
                if (cur[w] || !adm(w, j)) continue;
                cur[w] = 1;
                parent[j][w] = {u, true};
                queue.push_back(w);
            }
        }
    }
    for (int v = 0; v < nv; ++v) {
        if (cur[v]) return v;
    }
    return -1;
}

inline std::vector<int> nmms_backtrack(const std::vector<std::vector<NmmsParentCell>>& parent,
                                       int end_vertex, std::size_t n) {
    std::vector<int> path;
    int v = end_vertex;
    std::size_t j = n - 1;
    while (true) {
        const NmmsParentCell c = parent[j][static_cast<std::size_t>(v)];
        if (c.pred == -1) {
            path.push_back(v);
            break;
        }
        if (c.same_column) {
            path.push_back(v);
            v = c.pred;
        } else if (c.pred == v) {
            --j;
        } else {
            path.push_back(v);
            v = c.pred;
            --j;
        }
    }
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace detail

/// Minimum-|V'| map matching (NMMS): revisits allowed, the number of
/// distinct graph vertices used is minimized subject to d_F(P,Q) <= eps and
/// |V'| <= K. Exact: candidate subsets are tried in increasing cardinality
/// (lexicographic within a cardinality); each fixed subset is decided by
/// polynomial product-graph reachability restricted to it.
inline SolveOutcome solve_nmms(const Instance& inst, const SolverConfig& cfg = {}) {
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

    // universe: vertices appearing in some eps-ball
    std::vector<int> universe;
    {
        std::vector<char> seen(static_cast<std::size_t>(nv), 0);
        for (std::size_t j = 0; j < n; ++j) {
            for (int v : cands.at(j)) seen[static_cast<std::size_t>(v)] = 1;
        }
        for (int v = 0; v < nv; ++v) {
            if (seen[v]) universe.push_back(v);
        }
    }
    const int u = static_cast<int>(universe.size());
    const int kmax = std::min(inst.k_bound.value_or(nv), u);

    std::vector<char> allowed(static_cast<std::size_t>(nv), 0);
    std::vector<std::vector<detail::NmmsParentCell>> parent;
    std::vector<int> pick;

    auto covers_all_columns = [&]() {
        for (std::size_t j = 0; j < n; ++j) {
            bool hit = false;
            for (int v : cands.at(j)) {
                if (allowed[static_cast<std::size_t>(v)]) {
                    hit = true;
                    break;
                }
            }
            if (!hit) return false;
        }
        return true;
    };

    for (int c = 1; c <= kmax; ++c) {
        // lexicographic c-combinations of universe
        pick.assign(static_cast<std::size_t>(c), 0);
        for (int i = 0; i < c; ++i) pick[i] = i;
        while (true) {
            for (int v : universe) allowed[static_cast<std::size_t>(v)] = 0;
            for (int i : pick) allowed[static_cast<std::size_t>(universe[i])] = 1;
            if (covers_all_columns()) {
                const int end = detail::restricted_reachability(inst, allowed, parent,
                                                                out.stats.expansions);
                if (end >= 0) {
                    out.status = SolveStatus::feasible;
                    out.result =
                        finish_frechet_result(inst, detail::nmms_backtrack(parent, end, n));
                    return done();
                }
            }
            if (out.stats.expansions >= cfg.expansion_budget) {
                out.status = SolveStatus::budget_exceeded;
                return done();
            }
            // next combination
            int i = c - 1;
            while (i >= 0 && pick[i] == u - c + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int l = i + 1; l < c; ++l) pick[l] = pick[l - 1] + 1;
        }
    }

    out.status = SolveStatus::infeasible;
    return done();
}

} // namespace mapmatch

#endif
