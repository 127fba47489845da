#ifndef FACTORPOLY_ENUMERATE_HPP
#define FACTORPOLY_ENUMERATE_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "factorpoly/fugacity.hpp"
#include "factorpoly/multigraph.hpp"
#include "factorpoly/region.hpp"

namespace fpoly {

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EnumConfig {
    int brute_cap = 30;          // hard limit on |E| for subset enumeration
    long state_cap = 2'000'000;  // frontier DP distinct degree states
    int sample_expand_cap = 20;  // |E| limit for monomial expansion when sampling
    std::optional<std::vector<int>> edge_order;  // explicit DP edge permutation
};

// values[j] = sum over spanning subgraphs H with #H = j of
// lambda_H * prod_v u^(v)_{deg(H,v)}, exact; raw length |E|+1.
struct CoeffSeq {
    std::vector<Quadratic> values;

    std::vector<Quadratic> trimmed() const;
    Quadratic mass() const;  // sum of all entries
    QuadPoly as_poly() const { return QuadPoly(values); }
    bool all_rational() const;
    std::vector<Rat> as_rationals() const;  // throws if any entry is irrational
    bool operator==(const CoeffSeq& o) const { return as_poly() == o.as_poly(); }
};

// 2^|E| reference enumeration; the oracle the DP is tested against.
CoeffSeq brute_counts(const Multigraph& G, const FugacitySpec& u, const EnumConfig& cfg = {});

// Frontier dynamic program over an elimination edge order: exact partial
// sums keyed by (degrees of active vertices, #edges used), vertex fugacities
// folded in when a vertex's last incident edge is processed. Agrees with
// brute_counts exactly.
CoeffSeq dp_counts(const Multigraph& G, const FugacitySpec& u, const EnumConfig& cfg = {});

// counts of (f,g)-factors by size: dp_counts under 0/1 interval fugacities
CoeffSeq factor_counts(const Multigraph& G, const DegreeBounds& b, const EnumConfig& cfg = {});

// greedy min-degree elimination order used by dp_counts when no override is given
std::vector<int> default_edge_order(const Multigraph& G);

struct VertexAssignment {
    std::vector<std::complex<double>> z;  // index 0 unused
};

// prod over edges of (1 + lambda_e z_u z_v); loops contribute 1 + lambda z_v^2
std::complex<double> evaluate_F(const Multigraph& G, const VertexAssignment& z);

// Randomized multivariate nonvanishing check: draws each z_v independently
// from the interior of A (margin 1e-3), evaluates the edge product (or the
// fugacity-weighted subgraph polynomial when u is given), and reports
// Counterexample on |value| < 1e-12 * scale. A Nonvanishing outcome is
// probabilistic evidence only.
RegionVerdict sample_nonvanishing(const Multigraph& G, const std::optional<FugacitySpec>& u,
                                  const Region& A, long samples, std::uint64_t seed,
                                  const EnumConfig& cfg = {});

}  // namespace fpoly

#endif
