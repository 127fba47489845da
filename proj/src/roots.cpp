#include "factorpoly/roots.hpp"

#include <algorithm>
#include <cmath>

namespace fpoly {

namespace {

using cplx = std::complex<double>;

// p and p' at z by Horner
std::pair<cplx, cplx> eval_with_derivative(const std::vector<double>& c, cplx z) {
    cplx p(0.0, 0.0), dp(0.0, 0.0);
    for (size_t i = c.size(); i-- > 0;) {
        dp = dp * z + p;
        p = p * z + c[i];
    }
    return {p, dp};
}

double eval_scale(const std::vector<double>& c, cplx z) {
    double az = std::abs(z), s = 0.0, zp = 1.0;
    for (double ck : c) {
        s += std::abs(ck) * zp;
        zp *= az;
    }
    return s > 0 ? s : 1.0;
}

// ---- quad-precision Newton polish -------------------------------------
//
// Aberth in double gets clustered simple roots to ~1e-6 relative at degree
// 20; a few Newton steps against the exact factor coefficients in
// __float128 push that to the 1e-8 contract with room to spare. Only +-*/
// are used, so no libquadmath link is needed.

using f128 = __float128;

struct C128 {
    f128 re = 0, im = 0;
};

C128 operator+(C128 a, C128 b) { return {a.re + b.re, a.im + b.im}; }
C128 operator-(C128 a, C128 b) { return {a.re - b.re, a.im - b.im}; }
C128 operator*(C128 a, C128 b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
C128 operator/(C128 a, C128 b) {
    f128 den = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

f128 rat_to_f128(const Rat& q) {
    double hi = q.get_d();
    if (!std::isfinite(hi)) return static_cast<f128>(hi);
    Rat rem = q - Rat(hi);
    return static_cast<f128>(hi) + static_cast<f128>(rem.get_d());
}

f128 sqrt_f128(unsigned long m) {
    if (m == 0) return 0;
    f128 s = std::sqrt(static_cast<double>(m));
    for (int i = 0; i < 3; ++i) s = (s + static_cast<f128>(m) / s) / 2;
    return s;
}

f128 to_f128(const Rat& q) { return rat_to_f128(q); }
f128 to_f128(const Quadratic& q) {
    f128 v = rat_to_f128(q.rational_part());
    if (!q.is_rational()) v = v + rat_to_f128(q.radical_coeff()) * sqrt_f128(q.radicand());
    return v;
}

template <typename T>
std::vector<C128> coeffs_to_f128(const Polynomial<T>& p) {
    std::vector<C128> out(p.coeffs().size());
    for (size_t i = 0; i < out.size(); ++i) out[i] = C128{to_f128(p.coeffs()[i]), 0};
    return out;
}

void newton_polish(const std::vector<C128>& c, std::vector<cplx>& roots) {
    for (auto& root : roots) {
        C128 z{static_cast<f128>(root.real()), static_cast<f128>(root.imag())};
        for (int iter = 0; iter < 6; ++iter) {
            C128 p{0, 0}, dp{0, 0};
            for (size_t i = c.size(); i-- > 0;) {
                dp = dp * z + p;
                p = p * z + c[i];
            }
            if (dp.re == 0 && dp.im == 0) break;
            C128 step = p / dp;
            z = z - step;
            f128 mag = step.re * step.re + step.im * step.im;
            if (static_cast<double>(mag) < 1e-60) break;
        }
        root = cplx(static_cast<double>(z.re), static_cast<double>(z.im));
    }
}

}  // namespace

std::vector<std::complex<double>> aberth_roots(const std::vector<double>& coeffs,
                                               int max_sweeps) {
    int deg = static_cast<int>(coeffs.size()) - 1;
    if (deg < 1) return {};
    if (deg == 1) return {cplx(-coeffs[0] / coeffs[1], 0.0)};

    // start points on a perturbed circle around the centroid of the roots
    cplx center = cplx(-coeffs[deg - 1] / (deg * coeffs[deg]), 0.0);
    double r0 = std::pow(std::abs(coeffs[0] / coeffs[deg]), 1.0 / deg);
    double cauchy = 0.0;
    for (int k = 0; k < deg; ++k) cauchy = std::max(cauchy, std::abs(coeffs[k] / coeffs[deg]));
    double radius = std::max(1e-6, std::min(r0, 1.0 + cauchy));

    std::vector<cplx> z(deg);
    for (int k = 0; k < deg; ++k) {
        double angle = 2.0 * M_PI * k / deg + 0.437;
        double rk = radius * (1.0 + 0.05 * (k + 1) / deg);
        z[k] = center + std::polar(rk, angle);
    }

    std::vector<bool> done(deg, false);
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double worst = 0.0;
        for (int k = 0; k < deg; ++k) {
            if (done[k]) continue;
            auto [p, dp] = eval_with_derivative(coeffs, z[k]);
            if (std::abs(p) <= 1e-16 * eval_scale(coeffs, z[k])) {
                done[k] = true;
                continue;
            }
            cplx w = (dp == cplx(0.0, 0.0)) ? cplx(1e-12, 1e-12) : p / dp;
            cplx s(0.0, 0.0);
            for (int j = 0; j < deg; ++j) {
                if (j == k) continue;
                cplx d = z[k] - z[j];
                if (d == cplx(0.0, 0.0)) d = cplx(1e-14, 1e-14);
                s += 1.0 / d;
            }
            cplx denom = 1.0 - w * s;
            cplx corr = (denom == cplx(0.0, 0.0)) ? w : w / denom;
            z[k] -= corr;
            double rel = std::abs(corr) / (1.0 + std::abs(z[k]));
            worst = std::max(worst, rel);
            if (rel < 1e-15) done[k] = true;
        }
        if (worst < 1e-15) break;
    }
    return z;
}

namespace {

template <typename T>
RootSet find_roots_impl(const Polynomial<T>& p, const RootConfig& cfg) {
    if (p.is_zero_poly())
        throw std::invalid_argument("find_roots on the zero polynomial");

    RootSet out;
    out.origin_multiplicity = p.origin_multiplicity();
    Polynomial<T> q = p.deflate_origin();
    if (q.degree() == 0) return out;

    // exact normalization by the largest |coefficient|
    auto abs_val = [](const T& x) { return is_negative(x) ? T(T(0) - x) : x; };
    T biggest = abs_val(q.coeffs()[0]);
    for (const auto& c : q.coeffs()) {
        T a = abs_val(c);
        if (biggest < a) biggest = a;
    }

    std::vector<double> dc;  // deflated, normalized coefficient images
    {
        std::vector<T> cc(q.coeffs());
        for (auto& x : cc) x /= biggest;
        dc = Polynomial<T>(std::move(cc)).coeffs_as_double();
    }

    auto factors = squarefree_decomposition(q);
    for (const auto& [factor, mult] : factors) {
        auto froots = aberth_roots(factor.coeffs_as_double(), cfg.max_sweeps);
        newton_polish(coeffs_to_f128(factor), froots);
        for (const auto& r : froots)
            for (int i = 0; i < mult; ++i) out.roots.push_back(r);
    }

    std::sort(out.roots.begin(), out.roots.end(), [](const cplx& a, const cplx& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });

    out.residuals.resize(out.roots.size());
    double worst = 0.0;
    for (size_t i = 0; i < out.roots.size(); ++i) {
        auto [val, d] = eval_with_derivative(dc, out.roots[i]);
        (void)d;
        out.residuals[i] = std::abs(val) / eval_scale(dc, out.roots[i]);
        worst = std::max(worst, out.residuals[i]);
    }
    if (static_cast<int>(out.roots.size()) != q.degree() || worst > cfg.residual_tol)
        throw RootFindingError(out.residuals);
    return out;
}

}  // namespace

RootSet find_roots(const QuadPoly& p, const RootConfig& cfg) { return find_roots_impl(p, cfg); }
RootSet find_roots(const UniPoly& p, const RootConfig& cfg) { return find_roots_impl(p, cfg); }

}  // namespace fpoly
