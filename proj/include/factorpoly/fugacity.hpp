#ifndef FACTORPOLY_FUGACITY_HPP
#define FACTORPOLY_FUGACITY_HPP

#include <set>
#include <string>
#include <vector>

#include "factorpoly/multigraph.hpp"
#include "factorpoly/polynomial.hpp"
#include "factorpoly/quadratic.hpp"

namespace fpoly {

// Nonnegative weight sequence attached to one vertex: u[k] is the weight of
// the vertex ending at degree k, defined for 0..D; degrees beyond D weigh 0.
struct VertexFugacity {
    int D = 0;
    std::vector<Quadratic> u;  // size D+1

    const Quadratic& at(int k) const;
    int last_nonzero_index() const;  // -1 if all zero
    void validate() const;           // entries >= 0, size == D+1
};

// Per-vertex assignment (anisotropic); index 0 unused.
struct FugacitySpec {
    std::vector<VertexFugacity> per_vertex;

    const VertexFugacity& of(int v) const { return per_vertex[static_cast<size_t>(v)]; }
    int vertex_count() const { return static_cast<int>(per_vertex.size()) - 1; }
    // D(v) >= deg(G, v) for every v, entries nonnegative
    void validate_against(const Multigraph& G) const;
    bool all_rational() const;
};

// ---- sequence constructors ----

// 0/1 indicator of f <= k <= g
std::vector<Quadratic> interval_fugacities(int f, int g, int D);
// 0/1 indicator of k in S
std::vector<Quadratic> set_fugacities(const std::set<int>& S, int D);
// (1, sqrt(2 - 2/delta), 1): the degree<=2 weighting whose counting
// polynomial stays real rooted on graphs of maximum degree delta
std::vector<Quadratic> ruelle_fugacities(int delta);

enum class QuadKind { Sqrt3, Sqrt2, Two };
Quadratic quad_value(QuadKind q);  // sqrt(3), sqrt(2), or 2
QuadKind quad_kind_from_string(const std::string& s);
std::string quad_kind_name(QuadKind q);

// u_k = [y^k] of  y^f (1+y)^b (1 + s y + y^2)^a  where g - f = 2a + b,
// b in {0,1} and s = quad_value(quad). Requires f <= g <= D.
std::vector<Quadratic> thm26_fugacities(int f, int g, int D, QuadKind quad);

// u_i = 1 / binomial(D, i); generating function 1 + y + ... + y^D
std::vector<Quadratic> binomial_reciprocal_fugacities(int D);

// ---- generating functions and coefficientwise transforms ----

// Gamma(D, u, y) = sum_k binomial(D,k) u_k y^k
QuadPoly gamma_poly(int D, const std::vector<Quadratic>& u);
// Q(u, y) = sum_k u_k y^k / k!
QuadPoly exp_gen_poly(const std::vector<Quadratic>& u);

// coefficientwise products with factorial weights
template <typename T>
Polynomial<T> hadamard_a(const Polynomial<T>& p, const Polynomial<T>& q) {
    int d = std::min(p.degree(), q.degree());
    std::vector<T> c(static_cast<size_t>(std::max(d + 1, 0)), T(0));
    for (int k = 0; k <= d; ++k) c[static_cast<size_t>(k)] = p.coeff(k) * q.coeff(k);
    return Polynomial<T>(std::move(c));
}

template <typename T>
Polynomial<T> hadamard_b(const Polynomial<T>& p, const Polynomial<T>& q) {
    int d = std::min(p.degree(), q.degree());
    std::vector<T> c(static_cast<size_t>(std::max(d + 1, 0)), T(0));
    for (int k = 0; k <= d; ++k)
        c[static_cast<size_t>(k)] = T(Rat(factorial(static_cast<unsigned>(k)))) *
                                    p.coeff(k) * q.coeff(k);
    return Polynomial<T>(std::move(c));
}

template <typename T>
Polynomial<T> hadamard_c(const Polynomial<T>& p, const Polynomial<T>& q, int n) {
    int d = std::min(p.degree(), q.degree());
    if (n < std::max(p.degree(), q.degree()))
        throw std::invalid_argument("hadamard_c needs n >= max degree");
    std::vector<T> c(static_cast<size_t>(std::max(d + 1, 0)), T(0));
    for (int k = 0; k <= d; ++k)
        c[static_cast<size_t>(k)] = T(Rat(factorial(static_cast<unsigned>(k)) *
                                          factorial(static_cast<unsigned>(n - k)))) *
                                    p.coeff(k) * q.coeff(k);
    return Polynomial<T>(std::move(c));
}

// ---- three- and four-term window families with sector thresholds ----

enum class WindowFamily { ThreeTerm, FourTerm, FourTermOdd };  // L21 / L22 / L23
enum class SectorCase { A, B, C };  // sector 3pi/4, 5pi/6, pi

struct WindowParams {
    int D = 0;        // ThreeTerm, FourTerm
    int k = 0;        // ThreeTerm, FourTerm
    int p = 0;        // FourTermOdd (D = 2p+1, k = p)
    Quadratic beta;   // ThreeTerm weight
    Quadratic mu;     // FourTerm / FourTermOdd weight
};

QuadPoly lemma_gamma(WindowFamily kind, const WindowParams& params);
// smallest beta (ThreeTerm) or mu (FourTerm/FourTermOdd) for which the window
// polynomial avoids the case's sector
Quadratic lemma_threshold(WindowFamily kind, SectorCase c, const WindowParams& params);

// ---- per-graph spec builders and config files ----

FugacitySpec uniform_spec(const Multigraph& G, const std::vector<Quadratic>& u, int D);
FugacitySpec interval_spec(const Multigraph& G, const DegreeBounds& b);  // D = deg(G,v)
FugacitySpec ruelle_spec(const Multigraph& G);
FugacitySpec thm26_spec(const Multigraph& G, const DegreeBounds& b, QuadKind quad);
FugacitySpec binomial_reciprocal_spec(const Multigraph& G);

// JSON config: {"default": {...}, "3": {"preset": "interval", "f":0, "g":1},
// ...}; entry forms {"preset": "interval"|"ruelle"|"thm26"|"binrec", ...} or
// {"u": ["1", "1/2", ...]}, optional "D".
FugacitySpec parse_fugacity_config(const std::string& json_text, const Multigraph& G);

}  // namespace fpoly

#endif
