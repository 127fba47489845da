#ifndef FACTORPOLY_RATIONAL_HPP
#define FACTORPOLY_RATIONAL_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace fpoly {

// Exact rational scalar. All enumeration and inequality arithmetic runs on
// these; doubles appear only at the root-finding boundary.
using Rat = mpq_class;
using Int = mpz_class;

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline bool is_negative(const Rat& x) { return sgn(x) < 0; }
inline double to_double(const Rat& x) { return x.get_d(); }

inline Rat rat_of(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// "p" or "p/q"; denominator sign is normalized away.
std::string rat_to_string(const Rat& x);

// Accepts "p", "p/q", and plain decimals like "0.25" or "-1.5e0" is NOT
// supported (no exponents); used by the graph file and CLI parsers.
Rat rat_from_string(const std::string& text);

Int binomial(unsigned n, unsigned k);
Int factorial(unsigned n);

}  // namespace fpoly

#endif
