#ifndef FACTORPOLY_POLYNOMIAL_HPP
#define FACTORPOLY_POLYNOMIAL_HPP

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "factorpoly/quadratic.hpp"
#include "factorpoly/rational.hpp"

namespace fpoly {

// Dense univariate polynomial over an exact field T (Rat or Quadratic),
// coefficient of t^j at index j, trailing zeros trimmed. The zero
// polynomial has an empty coefficient list and degree -1.
template <typename T>
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return constant(T(1)); }
    static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }
    // t^k
    static Polynomial monomial(const T& v, int k) {
        std::vector<T> c(static_cast<size_t>(k) + 1, T(0));
        c.back() = v;
        return Polynomial(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero_poly() const { return c_.empty(); }
    const std::vector<T>& coeffs() const { return c_; }
    T coeff(int j) const {
        return (j >= 0 && j < static_cast<int>(c_.size())) ? c_[j] : T(0);
    }
    const T& leading() const { return c_.back(); }

    Polynomial operator+(const Polynomial& o) const {
        std::vector<T> r(std::max(c_.size(), o.c_.size()), T(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return Polynomial(std::move(r));
    }
    Polynomial operator-(const Polynomial& o) const {
        std::vector<T> r(std::max(c_.size(), o.c_.size()), T(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
        return Polynomial(std::move(r));
    }
    Polynomial operator*(const Polynomial& o) const {
        if (is_zero_poly() || o.is_zero_poly()) return zero();
        std::vector<T> r(c_.size() + o.c_.size() - 1, T(0));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return Polynomial(std::move(r));
    }
    Polynomial scaled(const T& s) const {
        std::vector<T> r(c_);
        for (auto& x : r) x *= s;
        return Polynomial(std::move(r));
    }
    bool operator==(const Polynomial& o) const {
        if (c_.size() != o.c_.size()) return false;
        for (size_t i = 0; i < c_.size(); ++i)
            if (!(c_[i] == o.c_[i])) return false;
        return true;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return zero();
        std::vector<T> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * T(static_cast<long>(i));
        return Polynomial(std::move(r));
    }

    Polynomial pow(unsigned e) const {
        Polynomial acc = one(), base = *this;
        while (e) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    T eval(const T& x) const {
        T acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    std::vector<double> coeffs_as_double() const {
        std::vector<double> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = to_double(c_[i]);
        return r;
    }

    // multiplicity of 0 as a root (count of low-order zero coefficients)
    int origin_multiplicity() const {
        int k = 0;
        while (k < static_cast<int>(c_.size()) && is_zero(c_[k])) ++k;
        return c_.empty() ? 0 : k;
    }
    Polynomial deflate_origin() const {
        int k = origin_multiplicity();
        if (k == 0) return *this;
        return Polynomial(std::vector<T>(c_.begin() + k, c_.end()));
    }

    Polynomial monic() const {
        if (is_zero_poly()) return *this;
        Polynomial r(*this);
        T lead = r.c_.back();
        for (auto& x : r.c_) x /= lead;
        return r;
    }

    // Euclidean division; o must be nonzero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& o) const {
        if (o.is_zero_poly()) throw std::domain_error("polynomial division by zero");
        std::vector<T> rem(c_);
        int dr = static_cast<int>(rem.size()) - 1, dd = o.degree();
        if (dr < dd) return {zero(), *this};
        std::vector<T> quot(dr - dd + 1, T(0));
        for (int i = dr; i >= dd; --i) {
            if (is_zero(rem[i])) continue;
            T q = rem[i] / o.c_[dd];
            quot[i - dd] = q;
            for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * o.c_[j];
            rem[i] = T(0);
        }
        return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
    }

    std::string to_string(const std::string& var = "t") const;

  private:
    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }
    std::vector<T> c_;
};

using UniPoly = Polynomial<Rat>;
using QuadPoly = Polynomial<Quadratic>;

inline QuadPoly to_quad_poly(const UniPoly& p) {
    std::vector<Quadratic> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) c.emplace_back(x);
    return QuadPoly(std::move(c));
}

// Monic gcd by the Euclidean algorithm; T must be a field.
template <typename T>
Polynomial<T> poly_gcd(Polynomial<T> a, Polynomial<T> b) {
    while (!b.is_zero_poly()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

// Yun's square-free decomposition: returns (factor, multiplicity) pairs with
// multiplicities strictly increasing; the product of factor^multiplicity is
// the monic part of p. p must be nonzero.
template <typename T>
std::vector<std::pair<Polynomial<T>, int>> squarefree_decomposition(const Polynomial<T>& p) {
    std::vector<std::pair<Polynomial<T>, int>> out;
    Polynomial<T> a = p.monic();
    if (a.degree() <= 0) return out;
    Polynomial<T> d = a.derivative();
    Polynomial<T> g = poly_gcd(a, d);
    if (g.degree() == 0) {
        out.emplace_back(a, 1);
        return out;
    }
    Polynomial<T> c = a.divmod(g).first;
    Polynomial<T> w = d.divmod(g).first - c.derivative();
    int mult = 1;
    while (c.degree() > 0) {
        Polynomial<T> f = poly_gcd(c, w);
        if (f.degree() > 0) out.emplace_back(f, mult);
        c = c.divmod(f).first;
        w = w.divmod(f).first - c.derivative();
        ++mult;
    }
    return out;
}

template <typename T>
std::string Polynomial<T>::to_string(const std::string& var) const {
    auto term_str = [&](const T& v, size_t j) {
        std::string coeff;
        if constexpr (std::is_same_v<T, Rat>) coeff = rat_to_string(v);
        else coeff = v.to_string();
        if (j == 0) return coeff;
        std::string mono = (j == 1) ? var : var + "^" + std::to_string(j);
        if (coeff == "1") return mono;
        if (coeff == "-1") return "-" + mono;
        return coeff + "*" + mono;
    };
    if (c_.empty()) return "0";
    std::string s;
    for (size_t j = 0; j < c_.size(); ++j) {
        if (is_zero(c_[j])) continue;
        std::string t = term_str(c_[j], j);
        if (s.empty()) s = t;
        else if (!t.empty() && t[0] == '-') s += " - " + t.substr(1);
        else s += " + " + t;
    }
    return s;
}

}  // namespace fpoly

#endif
