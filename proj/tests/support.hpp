#ifndef MAPMATCH_TESTS_SUPPORT_HPP
#define MAPMATCH_TESTS_SUPPORT_HPP

#include <optional>
#include <random>
#include <vector>

#include "mapmatch/frechet.hpp"
#include "mapmatch/model.hpp"

namespace mmtest {

using mapmatch::Edge;
using mapmatch::EmbeddedGraph;
using mapmatch::Point;
using mapmatch::PolygonalCurve;

using Rng = std::mt19937_64;

inline Point random_point(Rng& rng, double lo = -5.0, double hi = 5.0) {
    std::uniform_real_distribution<double> d(lo, hi);
    return Point(d(rng), d(rng));
}

inline PolygonalCurve random_curve(Rng& rng, std::size_t max_nodes, double lo = -5.0,
                                   double hi = 5.0) {
    std::uniform_int_distribution<std::size_t> len(1, max_nodes);
    std::vector<Point> pts;
    const std::size_t n = len(rng);
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) pts.push_back(random_point(rng, lo, hi));
    return PolygonalCurve(std::move(pts));
}

/// Random connected straight-line planar graph on distinct lattice points:
/// shuffled candidate edges are added greedily when they cross nothing.
inline EmbeddedGraph random_planar_graph(Rng& rng, int max_vertices, int span = 5) {
    for (;;) {
        std::uniform_int_distribution<int> nv_d(1, max_vertices);
        const int nv = nv_d(rng);
        std::uniform_int_distribution<int> coord(0, span);
        std::vector<Point> pts;
        while (static_cast<int>(pts.size()) < nv) {
            Point c(coord(rng), coord(rng));
            bool dup = false;
            for (const Point& q : pts) dup = dup || q == c;
            if (!dup) pts.push_back(c);
        }
        std::vector<Edge> all;
        for (int i = 0; i < nv; ++i) {
            for (int j = i + 1; j < nv; ++j) all.push_back({i, j});
        }
        std::shuffle(all.begin(), all.end(), rng);

        std::vector<Edge> chosen;
        auto crosses = [&](const Edge& e) {
            const mapmatch::Segment s(pts[e.first], pts[e.second]);
            for (const Edge& f : chosen) {
                if (mapmatch::segments_properly_intersect(
                        s, mapmatch::Segment(pts[f.first], pts[f.second]))) {
                    return true;
                }
            }
            // keep third vertices off the open segment as well
            for (int v = 0; v < nv; ++v) {
                if (v == e.first || v == e.second) continue;
                if (mapmatch::orientation(pts[e.first], pts[e.second], pts[v]) == 0 &&
                    mapmatch::on_segment_collinear(pts[e.first], pts[e.second], pts[v])) {
                    return true;
                }
            }
            return false;
        };
        std::uniform_int_distribution<std::size_t> extra(0, all.size());
        const std::size_t target = nv == 1 ? 0 : std::max<std::size_t>(nv - 1, extra(rng));
        for (const Edge& e : all) {
            if (chosen.size() >= target) break;
            if (!crosses(e)) chosen.push_back(e);
        }
        try {
            return EmbeddedGraph::build(pts, chosen);
        } catch (const mapmatch::DisconnectedError&) {
            continue; // resample
        }
    }
}

/// Epsilon drawn so instances straddle feasible/infeasible.
inline double random_epsilon(Rng& rng, const EmbeddedGraph& g, const PolygonalCurve& p) {
    std::vector<double> d2;
    for (int v = 0; v < g.vertex_count(); ++v) {
        for (std::size_t j = 0; j < p.size(); ++j) {
            d2.push_back(mapmatch::dist_sq(g.vertex(v), p[j]));
        }
    }
    std::sort(d2.begin(), d2.end());
    std::uniform_int_distribution<std::size_t> pick(0, d2.size() - 1);
    std::uniform_real_distribution<double> jitter(0.9, 1.1);
    return std::sqrt(d2[pick(rng)]) * jitter(rng) + 1e-9;
}

} // namespace mmtest

#endif
