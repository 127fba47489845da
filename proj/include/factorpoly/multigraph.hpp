#ifndef FACTORPOLY_MULTIGRAPH_HPP
#define FACTORPOLY_MULTIGRAPH_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "factorpoly/rational.hpp"

namespace fpoly {

struct ParseError : std::runtime_error {
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
    int line;
};

// Finite undirected multigraph. Vertices are 1..n; loops (u == v) and
// parallel edges are allowed. Each edge carries a positive rational weight.
// Immutable after construction.
class Multigraph {
  public:
    struct Edge {
        int u, v;
        Rat lambda;
    };

    Multigraph(int n, std::vector<Edge> edges);

    // Text format: '#' comment lines, header "p <n> <m>", then m lines
    // "e <u> <v> [lambda]" with lambda a decimal or "a/b" (default 1).
    static Multigraph parse(const std::string& text);
    std::string serialize() const;

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int i) const { return edges_[static_cast<size_t>(i)]; }

    // loop at v contributes 2
    int degree(int v) const { return deg_[static_cast<size_t>(v)]; }
    const std::vector<int>& degree_vector() const { return deg_; }  // index 0 unused
    int max_degree() const;
    int min_degree() const;
    // number of incident edges at v (a loop counts once here)
    int incident_edge_count(int v) const { return inc_[static_cast<size_t>(v)]; }
    bool unit_weights() const;

  private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<int> deg_, inc_;
};

// Per-vertex degree bounds f <= g, index 0 unused.
struct DegreeBounds {
    std::vector<int> f, g;

    static DegreeBounds constant(int n, int fc, int gc);
    // constants clipped pointwise: g_v = min(gc, deg v), f_v = min(fc, g_v)
    static DegreeBounds clipped(const Multigraph& G, int fc, int gc);
    void validate(const Multigraph& G) const;
};

}  // namespace fpoly

#endif
