#ifndef FACTORPOLY_REGION_HPP
#define FACTORPOLY_REGION_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "factorpoly/roots.hpp"

namespace fpoly {

// Open subsets of the complex plane used for zero location:
//   Sector(theta): {z != 0 : |arg z| < theta}, 0 < theta <= pi
//   Disc(kappa):   {z : |z| < kappa}
//   DiscExterior(kappa): {z : |z| > kappa}
// Sector(pi/2) is the open right half-plane; 0 lies in no sector.
class Region {
  public:
    enum class Kind { Sector, Disc, DiscExterior };

    static Region sector(double theta);
    static Region disc(double kappa);
    static Region disc_exterior(double kappa);
    static Region half_plane() { return sector(M_PI_2); }

    Kind kind() const { return kind_; }
    double param() const { return param_; }

    bool contains(std::complex<double> z) const { return signed_margin(z) > 0; }
    // distance to the region boundary, positive inside, negative outside
    double signed_margin(std::complex<double> z) const;
    std::string describe() const;

  private:
    Region(Kind k, double p) : kind_(k), param_(p) {}
    Kind kind_;
    double param_;
};

enum class Outcome { IdenticallyZero, Nonvanishing, Counterexample };

std::string outcome_name(Outcome o);

// Verdict for "p has no zero inside A". Roots within the boundary tolerance
// never falsify; they set near_boundary instead.
struct RegionVerdict {
    Outcome outcome = Outcome::Nonvanishing;
    std::optional<std::complex<double>> witness;  // a root strictly inside A
    // full variable assignment, set when a multivariate sample hits a zero
    std::optional<std::vector<std::complex<double>>> witness_assignment;
    bool near_boundary = false;
    double worst_margin = -1.0;  // largest signed margin seen over all roots
    long samples = 0;            // set by the sampling path only
};

RegionVerdict nonvanishing_in(const QuadPoly& p, const Region& A, const RootConfig& cfg = {});
RegionVerdict nonvanishing_in(const UniPoly& p, const Region& A, const RootConfig& cfg = {});

// Root-location summary of a real-coefficient polynomial.
struct RootSummary {
    int degree = 0;
    int origin_multiplicity = 0;
    bool real_rooted_nonpositive = false;  // every root real (within tol) and <= 0
    bool strictly_negative_real = false;   // real rooted, all roots < -tol, none at 0
    bool hurwitz_strict = false;           // all real parts < -tol
    bool hurwitz_quasi = false;            // all real parts <= tol
    double max_real_part = 0.0;
    double max_imag_abs = 0.0;
    double min_arg_margin = M_PI;  // min over nonzero roots of pi - |arg|
    double min_modulus = 0.0;
    double max_modulus = 0.0;
};

RootSummary classify(const QuadPoly& p, const RootConfig& cfg = {});
RootSummary classify(const UniPoly& p, const RootConfig& cfg = {});
RootSummary classify(const RootSet& rs, const RootConfig& cfg = {});

}  // namespace fpoly

#endif
