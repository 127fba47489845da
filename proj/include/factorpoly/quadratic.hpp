#ifndef FACTORPOLY_QUADRATIC_HPP
#define FACTORPOLY_QUADRATIC_HPP

#include <cmath>
#include <stdexcept>
#include <string>

#include "factorpoly/rational.hpp"

namespace fpoly {

// Exact scalar of the form a + b*sqrt(m) with a, b rational and m a fixed
// nonnegative integer radicand. Closed under ring operations and division,
// with exact sign computation, so fugacity sequences such as
// (1, sqrt(2-2/D), 1) and the sqrt(3)/sqrt(2) quadratic constructions stay
// exact through enumeration and the inequality checkers.
//
// Values with b == 0 are plain rationals and carry radicand 0; mixing two
// distinct nonzero radicands in one operation is a programming error.
class Quadratic {
  public:
    Quadratic() : a_(0), b_(0), m_(0) {}
    Quadratic(const Rat& a) : a_(a), b_(0), m_(0) {}  // NOLINT(google-explicit-constructor)
    Quadratic(long a) : a_(a), b_(0), m_(0) {}        // NOLINT(google-explicit-constructor)
    Quadratic(const Rat& a, const Rat& b, unsigned long m);

    // Exact square root of a nonnegative rational: sqrt(p/q) = sqrt(p*q)/q.
    // Square factors of the radicand are pulled out (so sqrt(4/9) and
    // sqrt(1) come back rational).
    static Quadratic sqrt_of(const Rat& r);

    const Rat& rational_part() const { return a_; }
    const Rat& radical_coeff() const { return b_; }
    unsigned long radicand() const { return m_; }
    bool is_rational() const { return sgn(b_) == 0; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_one() const { return sgn(b_) == 0 && a_ == 1; }
    int sign() const;
    double to_double() const;
    std::string to_string() const;  // "a", "b*sqrt(m)", or "a+b*sqrt(m)"

    Quadratic operator-() const { return Quadratic(-a_, -b_, m_); }
    Quadratic& operator+=(const Quadratic& o);
    Quadratic& operator-=(const Quadratic& o);
    Quadratic& operator*=(const Quadratic& o);
    Quadratic& operator/=(const Quadratic& o);

    friend Quadratic operator+(Quadratic x, const Quadratic& y) { return x += y; }
    friend Quadratic operator-(Quadratic x, const Quadratic& y) { return x -= y; }
    friend Quadratic operator*(Quadratic x, const Quadratic& y) { return x *= y; }
    friend Quadratic operator/(Quadratic x, const Quadratic& y) { return x /= y; }
    friend bool operator==(const Quadratic& x, const Quadratic& y) {
        return (x - y).is_zero();
    }
    friend bool operator!=(const Quadratic& x, const Quadratic& y) { return !(x == y); }
    friend bool operator<(const Quadratic& x, const Quadratic& y) {
        return (x - y).sign() < 0;
    }
    friend bool operator<=(const Quadratic& x, const Quadratic& y) {
        return (x - y).sign() <= 0;
    }
    friend bool operator>(const Quadratic& x, const Quadratic& y) { return y < x; }
    friend bool operator>=(const Quadratic& x, const Quadratic& y) { return y <= x; }

  private:
    void normalize();
    static unsigned long unify_radicand(const Quadratic& x, const Quadratic& y);

    Rat a_, b_;
    unsigned long m_;
};

inline bool is_zero(const Quadratic& x) { return x.is_zero(); }
inline bool is_negative(const Quadratic& x) { return x.sign() < 0; }
inline double to_double(const Quadratic& x) { return x.to_double(); }

Quadratic abs(const Quadratic& x);

}  // namespace fpoly

#endif
