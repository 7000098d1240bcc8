#ifndef MAPMATCH_MODEL_HPP
#define MAPMATCH_MODEL_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mapmatch/geometry.hpp"

namespace mapmatch {

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SelfLoopError : ValidationError {
    using ValidationError::ValidationError;
};
struct DuplicateEdgeError : ValidationError {
    using ValidationError::ValidationError;
};
struct DisconnectedError : ValidationError {
    using ValidationError::ValidationError;
};
struct EmbeddingNotPlanarError : ValidationError {
    int edge_a = -1; ///< offending edge indices into edges()
    int edge_b = -1;
    EmbeddingNotPlanarError(const std::string& msg, int ea, int eb)
        : ValidationError(msg), edge_a(ea), edge_b(eb) {}
};

/// Ordered node sequence p_0 ... p_{n-1}, n >= 1. Consecutive duplicate
/// nodes are allowed (idle steps) but reported by idle_steps().
class PolygonalCurve {
public:
    explicit PolygonalCurve(std::vector<Point> nodes) : nodes_(std::move(nodes)) {
        if (nodes_.empty()) {
            throw std::invalid_argument("PolygonalCurve: needs at least one node");
        }
    }

    std::size_t size() const { return nodes_.size(); }
    const Point& operator[](std::size_t i) const { return nodes_[i]; }
    const std::vector<Point>& nodes() const { return nodes_; }

    /// Indices i with nodes[i] == nodes[i+1].
    std::vector<std::size_t> idle_steps() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i + 1 < nodes_.size(); ++i) {
            if (nodes_[i] == nodes_[i + 1]) out.push_back(i);
        }
        return out;
    }

    friend bool operator==(const PolygonalCurve& a, const PolygonalCurve& b) {
        return a.nodes_ == b.nodes_;
    }

private:
    std::vector<Point> nodes_;
};

using Edge = std::pair<int, int>; // normalized: first < second

/// Straight-line embedded undirected graph. Validation enforces: simple,
/// connected, and (unless built with GraphClass::general) a planar embedding,
/// meaning no two edge segments properly intersect.
class EmbeddedGraph {
public:
    enum class GraphClass { planar_embedded, general };

    static EmbeddedGraph build(std::vector<Point> vertices, std::vector<Edge> edge_pairs,
                               GraphClass cls = GraphClass::planar_embedded) {
        EmbeddedGraph g;
        g.class_ = cls;
        g.vertices_ = std::move(vertices);
        const int n = static_cast<int>(g.vertices_.size());
        if (n == 0) throw std::invalid_argument("EmbeddedGraph: no vertices");

        std::set<Edge> seen;
        for (Edge e : edge_pairs) {
            if (e.first < 0 || e.first >= n || e.second < 0 || e.second >= n) {
                throw std::out_of_range("EmbeddedGraph: edge index out of range");
            }
            if (e.first == e.second) {
                throw SelfLoopError("self-loop at vertex " + std::to_string(e.first));
            }
            if (e.first > e.second) std::swap(e.first, e.second);
            if (!seen.insert(e).second) {
                throw DuplicateEdgeError("duplicate edge (" + std::to_string(e.first) + "," +
                                         std::to_string(e.second) + ")");
            }
            g.edges_.push_back(e);
        }
        std::sort(g.edges_.begin(), g.edges_.end());

        g.adj_.assign(n, {});
        for (const Edge& e : g.edges_) {
            g.adj_[e.first].push_back(e.second);
            g.adj_[e.second].push_back(e.first);
        }
        for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());

        g.check_connected();
        if (cls == GraphClass::planar_embedded) g.check_planar_embedding();
        return g;
    }

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    const Point& vertex(int i) const { return vertices_[static_cast<std::size_t>(i)]; }
    const std::vector<Point>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    bool adjacent(int u, int v) const {
        const auto& nb = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(nb.begin(), nb.end(), v);
    }
    bool is_general() const { return class_ == GraphClass::general; }

private:
    EmbeddedGraph() = default;

    void check_connected() const {
        const int n = vertex_count();
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : adj_[static_cast<std::size_t>(v)]) {
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        if (reached != n) {
            throw DisconnectedError("graph is disconnected (" + std::to_string(reached) + " of " +
                                    std::to_string(n) + " vertices reachable)");
        }
    }

    void check_planar_embedding() const {
        // Zero-length edges cannot form a straight-line embedding at all.
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            const auto& [u, v] = edges_[i];
            if (vertex(u) == vertex(v)) {
                throw EmbeddingNotPlanarError("edge with coincident endpoints", static_cast<int>(i),
                                              static_cast<int>(i));
            }
        }
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            const Segment si(vertex(edges_[i].first), vertex(edges_[i].second));
            for (std::size_t j = i + 1; j < edges_.size(); ++j) {
                const Segment sj(vertex(edges_[j].first), vertex(edges_[j].second));
                if (segments_properly_intersect(si, sj)) {
                    throw EmbeddingNotPlanarError(
                        "edges " + std::to_string(i) + " and " + std::to_string(j) +
                            " cross in the embedding",
                        static_cast<int>(i), static_cast<int>(j));
                }
            }
        }
    }

    GraphClass class_ = GraphClass::planar_embedded;
    std::vector<Point> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

inline EmbeddedGraph build_graph(std::vector<Point> vertices, std::vector<Edge> edges,
                                 EmbeddedGraph::GraphClass cls = EmbeddedGraph::GraphClass::planar_embedded) {
    return EmbeddedGraph::build(std::move(vertices), std::move(edges), cls);
}

/// A matching instance. epsilon >= 0: the Hausdorff-path reduction uses
/// epsilon = 0, so strict positivity is not enforced here.
struct Instance {
    EmbeddedGraph graph;
    PolygonalCurve curve;
    double epsilon = 0.0;
    std::optional<int> k_bound;

    Instance(EmbeddedGraph g, PolygonalCurve c, double eps, std::optional<int> k = std::nullopt)
        : graph(std::move(g)), curve(std::move(c)), epsilon(eps), k_bound(k) {
        if (!(epsilon >= 0.0)) throw std::invalid_argument("Instance: epsilon must be >= 0");
        if (k_bound && *k_bound < 1) throw std::invalid_argument("Instance: K must be >= 1");
    }
};

/// Per curve node: the vertex ids within epsilon, ascending.
class CandidateSets {
public:
    CandidateSets(const EmbeddedGraph& g, const PolygonalCurve& p, double epsilon) {
        const double e2 = squared_threshold(epsilon);
        sets_.resize(p.size());
        for (std::size_t j = 0; j < p.size(); ++j) {
            for (int v = 0; v < g.vertex_count(); ++v) {
                if (dist_sq(g.vertex(v), p[j]) <= e2) sets_[j].push_back(v);
            }
        }
    }

    const std::vector<int>& at(std::size_t j) const { return sets_[j]; }
    std::size_t size() const { return sets_.size(); }

    /// First curve index with no candidate vertex, if any.
    std::optional<std::size_t> first_empty() const {
        for (std::size_t j = 0; j < sets_.size(); ++j) {
            if (sets_[j].empty()) return j;
        }
        return std::nullopt;
    }

private:
    std::vector<std::vector<int>> sets_;
};

inline CandidateSets candidate_sets(const EmbeddedGraph& g, const PolygonalCurve& p, double eps) {
    return CandidateSets(g, p, eps);
}

} // namespace mapmatch

#endif
