#include "factorpoly/multigraph.hpp"

#include <algorithm>
#include <sstream>

namespace fpoly {

Multigraph::Multigraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("negative vertex count");
    deg_.assign(static_cast<size_t>(n_) + 1, 0);
    inc_.assign(static_cast<size_t>(n_) + 1, 0);
    for (const auto& e : edges_) {
        if (e.u < 1 || e.u > n_ || e.v < 1 || e.v > n_)
            throw std::invalid_argument("edge endpoint out of range");
        if (sgn(e.lambda) <= 0) throw std::invalid_argument("edge weight must be positive");
        deg_[static_cast<size_t>(e.u)] += 1;
        deg_[static_cast<size_t>(e.v)] += 1;  // loop counts twice
        inc_[static_cast<size_t>(e.u)] += 1;
        if (e.v != e.u) inc_[static_cast<size_t>(e.v)] += 1;
    }
}

int Multigraph::max_degree() const {
    int d = 0;
    for (int v = 1; v <= n_; ++v) d = std::max(d, deg_[static_cast<size_t>(v)]);
    return d;
}

int Multigraph::min_degree() const {
    if (n_ == 0) return 0;
    int d = deg_[1];
    for (int v = 2; v <= n_; ++v) d = std::min(d, deg_[static_cast<size_t>(v)]);
    return d;
}

bool Multigraph::unit_weights() const {
    for (const auto& e : edges_)
        if (e.lambda != 1) return false;
    return true;
}

Multigraph Multigraph::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    long n = -1, m = -1;
    std::vector<Edge> edges;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;  // blank line
        if (tag[0] == '#') continue;

        if (tag == "p") {
            if (n >= 0) throw ParseError(lineno, "duplicate header");
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw ParseError(lineno, "malformed header, expected 'p <n> <m>'");
            std::string extra;
            if (ls >> extra) throw ParseError(lineno, "trailing tokens after header");
        } else if (tag == "e") {
            if (n < 0) throw ParseError(lineno, "edge before header");
            long u, v;
            if (!(ls >> u >> v)) throw ParseError(lineno, "malformed edge line");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(lineno, "vertex index out of range");
            Rat lambda(1);
            std::string w;
            if (ls >> w) {
                try {
                    lambda = rat_from_string(w);
                } catch (const std::invalid_argument& ex) {
                    throw ParseError(lineno, ex.what());
                }
                std::string extra;
                if (ls >> extra) throw ParseError(lineno, "trailing tokens after edge");
            }
            if (sgn(lambda) <= 0) throw ParseError(lineno, "edge weight must be positive");
            edges.push_back(Edge{static_cast<int>(u), static_cast<int>(v), lambda});
        } else {
            throw ParseError(lineno, "unknown line tag '" + tag + "'");
        }
    }
    if (n < 0) throw ParseError(lineno, "missing 'p <n> <m>' header");
    if (static_cast<long>(edges.size()) != m)
        throw ParseError(lineno, "header promised " + std::to_string(m) + " edges, got " +
                                     std::to_string(edges.size()));
    return Multigraph(static_cast<int>(n), std::move(edges));
}

std::string Multigraph::serialize() const {
    std::ostringstream out;
    out << "p " << n_ << " " << edges_.size() << "\n";
    for (const auto& e : edges_) {
        out << "e " << e.u << " " << e.v;
        if (e.lambda != 1) out << " " << rat_to_string(e.lambda);
        out << "\n";
    }
    return out.str();
}

DegreeBounds DegreeBounds::constant(int n, int fc, int gc) {
    DegreeBounds b;
    b.f.assign(static_cast<size_t>(n) + 1, fc);
    b.g.assign(static_cast<size_t>(n) + 1, gc);
    if (n >= 0) b.f[0] = b.g[0] = 0;
    return b;
}

DegreeBounds DegreeBounds::clipped(const Multigraph& G, int fc, int gc) {
    DegreeBounds b = constant(G.vertex_count(), 0, 0);
    for (int v = 1; v <= G.vertex_count(); ++v) {
        int gv = std::min(gc, G.degree(v));
        b.g[static_cast<size_t>(v)] = gv;
        b.f[static_cast<size_t>(v)] = std::min(fc, gv);
    }
    return b;
}

void DegreeBounds::validate(const Multigraph& G) const {
    size_t need = static_cast<size_t>(G.vertex_count()) + 1;
    if (f.size() != need || g.size() != need)
        throw std::invalid_argument("degree bounds sized for a different graph");
    for (int v = 1; v <= G.vertex_count(); ++v) {
        size_t i = static_cast<size_t>(v);
        if (f[i] < 0 || g[i] < 0 || f[i] > g[i])
            throw std::invalid_argument("degree bounds need 0 <= f <= g at vertex " +
                                        std::to_string(v));
    }
}

}  // namespace fpoly
