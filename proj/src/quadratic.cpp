#include "factorpoly/quadratic.hpp"

namespace fpoly {

Quadratic::Quadratic(const Rat& a, const Rat& b, unsigned long m) : a_(a), b_(b), m_(m) {
    normalize();
}

void Quadratic::normalize() {
    if (sgn(b_) == 0) {
        m_ = 0;
        return;
    }
    if (m_ == 0) {
        b_ = 0;
        return;
    }
    if (m_ == 1) {
        a_ += b_;
        b_ = 0;
        m_ = 0;
    }
}

unsigned long Quadratic::unify_radicand(const Quadratic& x, const Quadratic& y) {
    if (sgn(x.b_) == 0) return y.m_;
    if (sgn(y.b_) == 0) return x.m_;
    if (x.m_ != y.m_)
        throw std::logic_error("mixed radicands sqrt(" + std::to_string(x.m_) +
                               ") and sqrt(" + std::to_string(y.m_) + ")");
    return x.m_;
}

Quadratic Quadratic::sqrt_of(const Rat& r) {
    if (sgn(r) < 0) throw std::invalid_argument("sqrt of negative rational");
    if (sgn(r) == 0) return Quadratic(0);
    // sqrt(p/q) = sqrt(p*q) / q
    Int pq = r.get_num() * r.get_den();
    // pull out square factors by trial division; radicands here are tiny
    Int square(1);
    for (unsigned long d = 2; Int(d) * Int(d) <= pq; ++d) {
        Int dd = Int(d) * Int(d);
        while (mpz_divisible_p(pq.get_mpz_t(), dd.get_mpz_t())) {
            pq /= dd;
            square *= d;
        }
    }
    if (pq == 1) return Quadratic(Rat(square) / Rat(r.get_den()));
    if (!pq.fits_ulong_p()) throw std::invalid_argument("radicand too large");
    return Quadratic(Rat(0), Rat(square) / Rat(r.get_den()), pq.get_ui());
}

int Quadratic::sign() const {
    int sa = sgn(a_), sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // a and b*sqrt(m) pull in opposite directions; compare a^2 with b^2*m
    Rat lhs = a_ * a_, rhs = b_ * b_ * Rat(static_cast<long>(m_));
    int c = cmp(lhs, rhs);
    if (c == 0) return 0;
    return (c > 0) ? sa : sb;
}

double Quadratic::to_double() const {
    return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(m_));
}

std::string Quadratic::to_string() const {
    if (sgn(b_) == 0) return rat_to_string(a_);
    std::string rad = rat_to_string(b_) + "*sqrt(" + std::to_string(m_) + ")";
    if (sgn(a_) == 0) return rad;
    if (sgn(b_) > 0) return rat_to_string(a_) + "+" + rad;
    return rat_to_string(a_) + rad;  // b's own minus sign separates the terms
}

Quadratic& Quadratic::operator+=(const Quadratic& o) {
    m_ = unify_radicand(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    normalize();
    return *this;
}

Quadratic& Quadratic::operator-=(const Quadratic& o) {
    m_ = unify_radicand(*this, o);
    a_ -= o.a_;
    b_ -= o.b_;
    normalize();
    return *this;
}

Quadratic& Quadratic::operator*=(const Quadratic& o) {
    // fast path: rational * rational dominates enumeration workloads
    if (sgn(b_) == 0 && sgn(o.b_) == 0) {
        a_ *= o.a_;
        m_ = 0;
        return *this;
    }
    unsigned long m = unify_radicand(*this, o);
    Rat na = a_ * o.a_ + b_ * o.b_ * Rat(static_cast<long>(m));
    Rat nb = a_ * o.b_ + b_ * o.a_;
    a_ = na;
    b_ = nb;
    m_ = m;
    normalize();
    return *this;
}

Quadratic& Quadratic::operator/=(const Quadratic& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    if (sgn(o.b_) == 0) {
        a_ /= o.a_;
        b_ /= o.a_;
        normalize();
        return *this;
    }
    // 1/(a+b*sqrt(m)) = (a-b*sqrt(m)) / (a^2 - b^2*m)
    Rat denom = o.a_ * o.a_ - o.b_ * o.b_ * Rat(static_cast<long>(o.m_));
    Quadratic conj(o.a_ / denom, -o.b_ / denom, o.m_);
    return *this *= conj;
}

Quadratic abs(const Quadratic& x) { return x.sign() < 0 ? -x : x; }

}  // namespace fpoly
