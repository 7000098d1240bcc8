#ifndef MAPMATCH_FRECHET_HPP
#define MAPMATCH_FRECHET_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mapmatch/model.hpp"

namespace mapmatch {

/// Monotone onto pairing of two curves' node indices (0-based): starts at
/// (0,0), ends at (m-1,n-1), each step advances one or both indices by 1.
using Coupling = std::vector<std::pair<std::size_t, std::size_t>>;

inline bool coupling_is_valid(const Coupling& c, std::size_t m, std::size_t n) {
    if (c.empty()) return false;
    if (c.front() != std::make_pair<std::size_t, std::size_t>(0, 0)) return false;
    if (c.back().first != m - 1 || c.back().second != n - 1) return false;
    for (std::size_t s = 1; s < c.size(); ++s) {
        const std::size_t df = c[s].first - c[s - 1].first;
        const std::size_t dg = c[s].second - c[s - 1].second;
        if (df > 1 || dg > 1 || (df == 0 && dg == 0)) return false;
    }
    return true;
}

/// Max paired node distance when replaying a coupling.
inline double replay_coupling(const PolygonalCurve& f, const PolygonalCurve& g, const Coupling& c) {
    double worst = 0.0;
    for (const auto& [i, j] : c) worst = std::max(worst, dist_sq(f[i], g[j]));
    return std::sqrt(worst);
}

struct DistanceReport {
    double value = 0.0;
    Coupling witness;
};

namespace detail {

// DP on squared distances; table[i][j] = min over couplings of prefixes
// (f[0..i], g[0..j]) of the max pairwise squared distance.
inline std::vector<std::vector<double>> frechet_table(const PolygonalCurve& f,
                                                      const PolygonalCurve& g) {
    const std::size_t m = f.size(), n = g.size();
    std::vector<std::vector<double>> t(m, std::vector<double>(n));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double d2 = dist_sq(f[i], g[j]);
            double best;
            if (i == 0 && j == 0) {
                best = 0.0;
            } else if (i == 0) {
                best = t[0][j - 1];
            } else if (j == 0) {
                best = t[i - 1][0];
            } else {
                best = std::min({t[i - 1][j - 1], t[i - 1][j], t[i][j - 1]});
            }
            t[i][j] = std::max(best, d2);
        }
    }
    return t;
}

} // namespace detail

/// O(mn) dynamic program with witness reconstruction. Ties during
/// backtracking prefer (diagonal, g-advance, f-advance), walking backwards,
/// so witnesses are deterministic.
inline DistanceReport discrete_frechet(const PolygonalCurve& f, const PolygonalCurve& g) {
    const auto t = detail::frechet_table(f, g);
    const std::size_t m = f.size(), n = g.size();

    DistanceReport rep;
    rep.value = std::sqrt(t[m - 1][n - 1]);

    Coupling rev;
    std::size_t i = m - 1, j = n - 1;
    rev.emplace_back(i, j);
    const double goal = t[m - 1][n - 1];
    while (i > 0 || j > 0) {
        if (i > 0 && j > 0 && t[i - 1][j - 1] <= goal) {
            --i;
            --j;
        } else if (j > 0 && t[i][j - 1] <= goal) {
            --j;
        } else if (i > 0 && t[i - 1][j] <= goal) {
            --i;
        } else if (i > 0 && j > 0) {
            --i;
            --j;
        } else if (j > 0) {
            --j;
        } else {
            --i;
        }
        rev.emplace_back(i, j);
    }
    rep.witness.assign(rev.rbegin(), rev.rend());
    return rep;
}

/// Decision form: does a coupling exist with every pair within eps?
/// Boolean reachability over the m x n grid, two rolling rows.
inline bool frechet_decision(const PolygonalCurve& f, const PolygonalCurve& g, double eps) {
    if (eps < 0.0) throw std::invalid_argument("frechet_decision: eps must be >= 0");
    const double e2 = squared_threshold(eps);
    const PolygonalCurve& a = f.size() >= g.size() ? f : g; // rows over the longer curve
    const PolygonalCurve& b = f.size() >= g.size() ? g : f;
    const std::size_t m = a.size(), n = b.size();

    std::vector<char> prev(n, 0), cur(n, 0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (dist_sq(a[i], b[j]) > e2) {
                cur[j] = 0;
                continue;
            }
            if (i == 0 && j == 0) {
                cur[j] = 1;
            } else if (i == 0) {
                cur[j] = cur[j - 1];
            } else if (j == 0) {
                cur[j] = prev[0];
            } else {
                cur[j] = prev[j] | prev[j - 1] | cur[j - 1];
            }
        }
        std::swap(prev, cur);
    }
    return prev[n - 1] != 0;
}

struct TooLargeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exhaustive min-max over all monotone couplings, enumerated as lattice
/// paths. Independent oracle for discrete_frechet; guarded by m+n <= 16.
inline double brute_force_frechet(const PolygonalCurve& f, const PolygonalCurve& g) {
    const std::size_t m = f.size(), n = g.size();
    if (m + n > 16) throw TooLargeError("brute_force_frechet: m+n exceeds 16");

    double best = std::numeric_limits<double>::infinity();
    auto walk = [&](auto&& self, std::size_t i, std::size_t j, double worst) -> void {
        worst = std::max(worst, dist_sq(f[i], g[j]));
        if (i == m - 1 && j == n - 1) {
            best = std::min(best, worst);
            return;
        }
        if (i + 1 < m && j + 1 < n) self(self, i + 1, j + 1, worst);
        if (j + 1 < n) self(self, i, j + 1, worst);
        if (i + 1 < m) self(self, i + 1, j, worst);
    };
    walk(walk, 0, 0, 0.0);
    return std::sqrt(best);
}

} // namespace mapmatch

#endif
