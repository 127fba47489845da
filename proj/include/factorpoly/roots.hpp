#ifndef FACTORPOLY_ROOTS_HPP
#define FACTORPOLY_ROOTS_HPP

#include <complex>
#include <stdexcept>
#include <vector>

#include "factorpoly/polynomial.hpp"

namespace fpoly {

struct RootConfig {
    double residual_tol = 1e-10;  // relative backward error bound per root
    double boundary_tol = 1e-8;   // region membership margin
    int max_sweeps = 1000;
};

// All complex roots of a nonzero polynomial, origin roots reported
// separately by exact multiplicity. residuals[i] = |p(roots[i])| / scale
// with scale = sum_k |c_k| |root|^k on the origin-deflated polynomial.
struct RootSet {
    std::vector<std::complex<double>> roots;  // sorted by (re, im)
    std::vector<double> residuals;
    int origin_multiplicity = 0;
};

struct RootFindingError : std::runtime_error {
    explicit RootFindingError(std::vector<double> best)
        : std::runtime_error("root iteration failed to reach residual tolerance"),
          best_residuals(std::move(best)) {}
    std::vector<double> best_residuals;
};

// Exact pipeline in front of the numeric iteration: origin roots deflated by
// index, coefficients normalized by the largest |coefficient| exactly, then
// Yun square-free decomposition so every numeric root is simple. Deterministic
// for fixed input. Throws RootFindingError if any residual exceeds
// cfg.residual_tol after the sweep cap, std::invalid_argument on p == 0.
RootSet find_roots(const QuadPoly& p, const RootConfig& cfg = {});
RootSet find_roots(const UniPoly& p, const RootConfig& cfg = {});

// Aberth-Ehrlich simultaneous iteration from perturbed-circle start points.
// Coefficients must describe a polynomial with nonzero leading and constant
// terms; intended to be called on square-free input.
std::vector<std::complex<double>> aberth_roots(const std::vector<double>& coeffs,
                                               int max_sweeps = 1000);

}  // namespace fpoly

#endif
