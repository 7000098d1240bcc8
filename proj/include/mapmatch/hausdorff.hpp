#ifndef MAPMATCH_HAUSDORFF_HPP
#define MAPMATCH_HAUSDORFF_HPP

#include <algorithm>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "mapmatch/geometry.hpp"

namespace mapmatch {

struct EmptySetError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline double directed_hausdorff_sq(std::span<const Point> from, std::span<const Point> to) {
    double worst = 0.0;
    for (const Point& p : from) {
        double nearest = std::numeric_limits<double>::infinity();
        for (const Point& q : to) nearest = std::min(nearest, dist_sq(p, q));
        worst = std::max(worst, nearest);
    }
    return worst;
}

/// Symmetric Hausdorff distance between two nonempty point sets.
inline double hausdorff(std::span<const Point> xs, std::span<const Point> ys) {
    if (xs.empty() || ys.empty()) throw EmptySetError("hausdorff: empty point set");
    return std::sqrt(std::max(directed_hausdorff_sq(xs, ys), directed_hausdorff_sq(ys, xs)));
}

inline double hausdorff(const std::vector<Point>& xs, const std::vector<Point>& ys) {
    return hausdorff(std::span<const Point>(xs), std::span<const Point>(ys));
}

} // namespace mapmatch

#endif
