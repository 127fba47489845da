#include "factorpoly/region.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fpoly {

Region Region::sector(double theta) {
    // tolerate pi + rounding from sector-arithmetic like pi - 2*alpha
    if (theta > M_PI && theta < M_PI + 1e-9) theta = M_PI;
    if (!(theta > 0.0) || theta > M_PI)
        throw std::invalid_argument("sector angle must satisfy 0 < theta <= pi");
    return Region(Kind::Sector, theta);
}

Region Region::disc(double kappa) {
    if (!(kappa > 0.0)) throw std::invalid_argument("disc radius must be positive");
    return Region(Kind::Disc, kappa);
}

Region Region::disc_exterior(double kappa) {
    if (!(kappa > 0.0)) throw std::invalid_argument("disc radius must be positive");
    return Region(Kind::DiscExterior, kappa);
}

double Region::signed_margin(std::complex<double> z) const {
    double r = std::abs(z);
    switch (kind_) {
        case Kind::Disc:
            return param_ - r;
        case Kind::DiscExterior:
            return r - param_;
        case Kind::Sector: {
            if (r == 0.0) return 0.0;  // origin sits on the closure boundary
            double gap = param_ - std::abs(std::arg(z));  // >0 strictly inside
            // nearest boundary point is on a bounding ray, or the origin when
            // the angular gap exceeds a right angle
            double capped = std::min(std::abs(gap), M_PI_2);
            double dist = r * std::sin(capped);
            return gap >= 0 ? dist : -dist;
        }
    }
    return 0.0;
}

std::string Region::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::Sector:
            os << "sector(|arg z| < " << param_ << ")";
            break;
        case Kind::Disc:
            os << "disc(|z| < " << param_ << ")";
            break;
        case Kind::DiscExterior:
            os << "disc_exterior(|z| > " << param_ << ")";
            break;
    }
    return os.str();
}

std::string outcome_name(Outcome o) {
    switch (o) {
        case Outcome::IdenticallyZero: return "identically_zero";
        case Outcome::Nonvanishing: return "nonvanishing";
        case Outcome::Counterexample: return "counterexample";
    }
    return "?";
}

namespace {

RegionVerdict verdict_from_roots(const RootSet& rs, const Region& A, const RootConfig& cfg) {
    RegionVerdict v;
    v.outcome = Outcome::Nonvanishing;

    auto consider = [&](std::complex<double> z) {
        double margin = A.signed_margin(z);
        v.worst_margin = std::max(v.worst_margin, margin);
        if (margin > cfg.boundary_tol) {
            if (v.outcome != Outcome::Counterexample) {
                v.outcome = Outcome::Counterexample;
                v.witness = z;
            }
        } else if (std::abs(margin) <= cfg.boundary_tol) {
            v.near_boundary = true;
        }
    };

    if (rs.origin_multiplicity > 0) consider(std::complex<double>(0.0, 0.0));
    for (const auto& z : rs.roots) consider(z);
    return v;
}

template <typename P>
RegionVerdict nonvanishing_impl(const P& p, const Region& A, const RootConfig& cfg) {
    if (p.is_zero_poly()) {
        RegionVerdict v;
        v.outcome = Outcome::IdenticallyZero;
        return v;
    }
    return verdict_from_roots(find_roots(p, cfg), A, cfg);
}

}  // namespace

RegionVerdict nonvanishing_in(const QuadPoly& p, const Region& A, const RootConfig& cfg) {
    return nonvanishing_impl(p, A, cfg);
}
RegionVerdict nonvanishing_in(const UniPoly& p, const Region& A, const RootConfig& cfg) {
    return nonvanishing_impl(p, A, cfg);
}

RootSummary classify(const RootSet& rs, const RootConfig& cfg) {
    RootSummary s;
    s.origin_multiplicity = rs.origin_multiplicity;
    s.degree = rs.origin_multiplicity + static_cast<int>(rs.roots.size());

    bool have_any = rs.origin_multiplicity > 0 || !rs.roots.empty();
    if (!have_any) {
        // constant polynomial: vacuously real rooted, stable, etc.
        s.real_rooted_nonpositive = true;
        s.strictly_negative_real = true;
        s.hurwitz_strict = true;
        s.hurwitz_quasi = true;
        s.max_real_part = -HUGE_VAL;
        s.min_modulus = HUGE_VAL;
        return s;
    }

    double max_mod = 0.0, min_mod = HUGE_VAL, max_re = -HUGE_VAL, max_im = 0.0;
    double min_margin = M_PI;
    for (const auto& z : rs.roots) {
        max_mod = std::max(max_mod, std::abs(z));
        min_mod = std::min(min_mod, std::abs(z));
        max_re = std::max(max_re, z.real());
        max_im = std::max(max_im, std::abs(z.imag()));
        min_margin = std::min(min_margin, M_PI - std::abs(std::arg(z)));
    }
    if (rs.origin_multiplicity > 0) {
        min_mod = 0.0;
        max_re = std::max(max_re, 0.0);
    }
    s.max_modulus = max_mod;
    s.min_modulus = min_mod;
    s.max_real_part = max_re;
    s.max_imag_abs = max_im;
    s.min_arg_margin = min_margin;

    double scale = std::max(1.0, max_mod);
    double tol = cfg.boundary_tol * scale;
    bool all_real = max_im <= tol;
    bool none_positive = true, all_negative = true;
    for (const auto& z : rs.roots) {
        if (z.real() > tol) none_positive = false;
        if (z.real() >= -tol) all_negative = false;
    }
    s.real_rooted_nonpositive = all_real && none_positive;
    s.strictly_negative_real = all_real && all_negative && rs.origin_multiplicity == 0;
    s.hurwitz_strict = max_re < -tol && rs.origin_multiplicity == 0;
    s.hurwitz_quasi = max_re <= tol;
    return s;
}

RootSummary classify(const QuadPoly& p, const RootConfig& cfg) {
    return classify(find_roots(p, cfg), cfg);
}
RootSummary classify(const UniPoly& p, const RootConfig& cfg) {
    return classify(find_roots(p, cfg), cfg);
}

}  // namespace fpoly
