#include <doctest.h>

#include <random>

#include "factorpoly/polynomial.hpp"

using namespace fpoly;

namespace {

UniPoly upoly(std::initializer_list<long> cs) {
    std::vector<Rat> v;
    for (long c : cs) v.emplace_back(c);
    return UniPoly(std::move(v));
}

}  // namespace

TEST_CASE("trimming and degree conventions") {
    CHECK(upoly({1, 3, 0, 0}).degree() == 1);
    CHECK(upoly({}).is_zero_poly());
    CHECK(upoly({0, 0}).is_zero_poly());
    CHECK(upoly({5}).degree() == 0);
    CHECK(upoly({0, 0, 7}).origin_multiplicity() == 2);
    CHECK(upoly({0, 0, 7}).deflate_origin() == upoly({7}));
}

TEST_CASE("ring operations") {
    UniPoly a = upoly({1, 1});       // 1 + t
    UniPoly b = upoly({1, 2, 1});    // (1+t)^2
    CHECK(a * a == b);
    CHECK(a.pow(3) == upoly({1, 3, 3, 1}));
    CHECK((b - a * a).is_zero_poly());
    CHECK(a.derivative() == upoly({1}));
    CHECK(upoly({1, 3, 3, 1}).derivative() == upoly({3, 6, 3}));
    CHECK(a.eval(Rat(2)) == Rat(3));
}

TEST_CASE("euclidean division invariant") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> coeff(-5, 5), deg(0, 8);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Rat> ca(static_cast<size_t>(deg(rng)) + 1), cb;
        for (auto& c : ca) c = Rat(coeff(rng));
        int db = deg(rng);
        cb.resize(static_cast<size_t>(db) + 1);
        for (auto& c : cb) c = Rat(coeff(rng));
        cb.back() = Rat(coeff(rng) * 2 + 1);  // nonzero leading
        UniPoly a(ca), b(cb);
        auto [q, r] = a.divmod(b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("gcd of products recovers common factors") {
    UniPoly a = upoly({1, 1});
    UniPoly b = upoly({2, 1});
    UniPoly c = upoly({3, 1});
    CHECK(poly_gcd(a * b, a * c) == a.monic());
    CHECK(poly_gcd(a * a * b, a * b * b) == (a * b).monic());
    CHECK(poly_gcd(b, c).degree() == 0);
}

TEST_CASE("squarefree decomposition splits multiplicities") {
    UniPoly a = upoly({1, 1});     // 1+t
    UniPoly b = upoly({1, 0, 1});  // 1+t^2
    UniPoly p = a.pow(3) * b;      // (1+t)^3 (1+t^2)
    auto parts = squarefree_decomposition(p);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].second == 1);
    CHECK(parts[0].first == b.monic());
    CHECK(parts[1].second == 3);
    CHECK(parts[1].first == a.monic());

    auto cube = squarefree_decomposition(upoly({1, 3, 3, 1}));
    REQUIRE(cube.size() == 1);
    CHECK(cube[0].second == 3);
    CHECK(cube[0].first == a);
}

TEST_CASE("squarefree decomposition over a quadratic extension") {
    // (y^2 - 2)^2 in Q(sqrt 2) has the simple square-free part y^2 - 2
    QuadPoly f({Quadratic(-2), Quadratic(0), Quadratic(1)});
    auto parts = squarefree_decomposition(f * f);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].second == 2);
    CHECK(parts[0].first == f);
}

TEST_CASE("string forms") {
    CHECK(upoly({1, 3, 3, 1}).to_string() == "1 + 3*t + 3*t^2 + t^3");
    CHECK(upoly({0, -1}).to_string("y") == "-y");
    CHECK(UniPoly().to_string() == "0");
}
