#ifndef FACTORPOLY_INEQUALITIES_HPP
#define FACTORPOLY_INEQUALITIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "factorpoly/enumerate.hpp"
#include "factorpoly/quadratic.hpp"

namespace fpoly {

// Exact coefficient-inequality verdicts. first_violation is present exactly
// when holds is false and records the failing comparison verbatim.
struct IneqViolation {
    int index = 0;  // coefficient index j, or minor order for matrix checks
    std::string description;
    std::string lhs, rhs;  // exact values as strings, violation means lhs < rhs
};

struct IneqReport {
    std::string name;
    bool holds = true;
    std::optional<IneqViolation> first_violation;
    int max_order = 0;         // matrix checks: requested minor order
    int completed_order = 0;   // matrix checks: largest order fully enumerated
    long minors_checked = 0;   // matrix checks only
    bool truncated = false;    // enumeration budget hit before max_order
};

// binomially normalized log-concavity for 1 <= j <= d-1; needs d >= len-1,
// missing entries are exact zeros
IneqReport newton_check(const CoeffSeq& N, int d);

// N(j)^2 >= N(j-1) N(j+1) for all interior j
IneqReport log_concavity_check(const CoeffSeq& N);
// strict > at every interior j with N(j) > 0
IneqReport strict_log_concavity_check(const CoeffSeq& N);

// all square minors of the (d+1)x(d+1) upper-triangular Toeplitz array up to
// the given order are nonnegative (total nonnegativity truncation)
IneqReport toeplitz_minors_check(const CoeffSeq& N, int max_order, long budget = 500'000);

// all minors of the d x d Hurwitz matrix up to the given order
IneqReport hurwitz_minors_check(const CoeffSeq& N, int max_order, long budget = 500'000);

// the two displayed stability consequences: N(j)N(j+1) >= N(j-1)N(j+2) and
// N(j)^2 >= N(j-2)N(j+2)
IneqReport prop15_consequences(const CoeffSeq& N);

// entry (r, c) = N(2c - r + 1) of the stability matrix, zero outside 0..d
Quadratic hurwitz_matrix_entry(const std::vector<Quadratic>& N, int r, int c);

// exact determinant by fraction-free-ish Gaussian elimination over the field
Quadratic exact_determinant(std::vector<std::vector<Quadratic>> a);

}  // namespace fpoly

#endif
