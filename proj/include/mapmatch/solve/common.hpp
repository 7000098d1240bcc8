#ifndef MAPMATCH_SOLVE_COMMON_HPP
#define MAPMATCH_SOLVE_COMMON_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "mapmatch/frechet.hpp"
#include "mapmatch/hausdorff.hpp"
#include "mapmatch/model.hpp"

namespace mapmatch {

struct SolverConfig {
    std::uint64_t expansion_budget = 10'000'000; ///< node expansions before giving up
    bool compat_eq1 = false;                     ///< NMMC: literal printed-recurrence mode
    std::string tie_break = "lowest-index";      ///< only supported policy

    void validate() const {
        if (tie_break != "lowest-index") {
            throw std::invalid_argument("SolverConfig: unknown tie_break policy '" + tie_break + "'");
        }
        if (expansion_budget == 0) {
            throw std::invalid_argument("SolverConfig: expansion budget must be positive");
        }
    }
};

enum class SolveStatus { feasible, infeasible, budget_exceeded };

inline const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::feasible: return "feasible";
        case SolveStatus::infeasible: return "infeasible";
        case SolveStatus::budget_exceeded: return "budget-exceeded";
    }
    return "?";
}

/// A path in G matched against the instance curve.
struct MatchResult {
    std::vector<int> path;          ///< vertex ids, consecutive entries adjacent
    std::set<int> used_vertices;    ///< distinct ids in path
    double achieved = 0.0;          ///< realized distance (Frechet or Hausdorff)
    std::optional<Coupling> witness; ///< coupling of curve vs path (Frechet solvers)
};

struct SolveStats {
    std::uint64_t expansions = 0;
    double seconds = 0.0;
};

struct SolveOutcome {
    SolveStatus status = SolveStatus::infeasible;
    std::optional<MatchResult> result;
    std::optional<std::size_t> empty_candidate_index; ///< cause, when an empty eps-ball proves infeasibility
    SolveStats stats;

    bool feasible() const { return status == SolveStatus::feasible; }
};

inline PolygonalCurve path_as_curve(const EmbeddedGraph& g, const std::vector<int>& path) {
    std::vector<Point> pts;
    pts.reserve(path.size());
    for (int v : path) pts.push_back(g.vertex(v));
    return PolygonalCurve(std::move(pts));
}

/// Re-check everything a MatchResult claims. Used by tests and `check`.
/// `hausdorff_mode` switches the distance predicate for the covering-path solver.
inline bool verify_match(const Instance& inst, const MatchResult& r, bool hausdorff_mode = false) {
    if (r.path.empty()) return false;
    for (std::size_t i = 0; i + 1 < r.path.size(); ++i) {
        if (!inst.graph.adjacent(r.path[i], r.path[i + 1])) return false;
    }
    std::set<int> used(r.path.begin(), r.path.end());
    if (used != r.used_vertices) return false;

    const PolygonalCurve q = path_as_curve(inst.graph, r.path);
    if (hausdorff_mode) {
        const double h = hausdorff(inst.curve.nodes(), q.nodes());
        if (h != r.achieved) return false;
        return h <= inst.epsilon;
    }
    if (!r.witness) return false;
    if (!coupling_is_valid(*r.witness, inst.curve.size(), q.size())) return false;
    const double replay = replay_coupling(inst.curve, q, *r.witness);
    if (replay != r.achieved) return false;
    return replay <= inst.epsilon;
}

/// Fill achieved value and witness coupling for a found path (Frechet case).
inline MatchResult finish_frechet_result(const Instance& inst, std::vector<int> path) {
    MatchResult r;
    r.path = std::move(path);
    r.used_vertices.insert(r.path.begin(), r.path.end());
    const PolygonalCurve q = path_as_curve(inst.graph, r.path);
    DistanceReport rep = discrete_frechet(inst.curve, q);
    r.achieved = rep.value;
    r.witness = std::move(rep.witness);
    return r;
}

} // namespace mapmatch

#endif
