#include "factorpoly/rational.hpp"

#include <cctype>

namespace fpoly {

std::string rat_to_string(const Rat& x) {
    Rat c(x);
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rat rat_from_string(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (num.empty() || den.empty())
            throw std::invalid_argument("malformed rational literal: " + text);
        Rat r;
        if (r.set_str(num + "/" + den, 10) != 0)
            throw std::invalid_argument("malformed rational literal: " + text);
        if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
        r.canonicalize();
        return r;
    }

    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string head = s.substr(0, dot), frac = s.substr(dot + 1);
        if (frac.find_first_not_of("0123456789") != std::string::npos || frac.empty())
            throw std::invalid_argument("malformed decimal literal: " + text);
        bool neg = !head.empty() && head[0] == '-';
        if (!head.empty() && (head[0] == '+' || head[0] == '-')) head = head.substr(1);
        if (head.empty()) head = "0";
        if (head.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("malformed decimal literal: " + text);
        Int ipart(head, 10), fpart(frac, 10), scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        Rat r = Rat(ipart) + Rat(fpart) / Rat(scale);
        if (neg) r = -r;
        r.canonicalize();
        return r;
    }

    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed integer literal: " + text);
    r.canonicalize();
    return r;
}

Int binomial(unsigned n, unsigned k) {
    if (k > n) return Int(0);
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

Int factorial(unsigned n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

}  // namespace fpoly
