#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jp/poly.hpp"
#include "jp/ratfunc.hpp"

#include <cstdint>

using jp::Poly;
using jp::RatFunc;
using jp::Rational;

namespace {

// x^2 - 1, x - 1, x^3 and friends without spelling out vectors each time
Poly from_ints(std::initializer_list<long> cs) {
    std::vector<Rational> v;
    for (long c : cs)
        v.emplace_back(c);
    return Poly(std::move(v));
}

std::uint64_t rng_state = 12345;
long rnd(long lo, long hi) {
    rng_state = rng_state * 6364136223846793005ULL + 1442695040888963407ULL;
    return lo + static_cast<long>((rng_state >> 33) % (hi - lo + 1));
}

Poly random_poly(long max_deg) {
    std::vector<Rational> c;
    const long d = rnd(0, max_deg);
    for (long i = 0; i <= d; ++i)
        c.emplace_back(rnd(-5, 5), rnd(1, 3));
    return Poly(std::move(c));
}

} // namespace

TEST_CASE("basic structure") {
    CHECK(Poly().is_zero());
    CHECK(Poly().degree() == -1);
    CHECK(from_ints({0, 0, 3}).degree() == 2);
    CHECK(from_ints({1, 2, 0, 0}).degree() == 1); // trailing zeros trimmed
    CHECK(from_ints({0, 0, 3}).valuation() == 2);
    CHECK(Poly::monomial(Rational(2), 3) == from_ints({0, 0, 0, 2}));
}

TEST_CASE("derivative of x^2 is 2x") {
    CHECK(from_ints({0, 0, 1}).derivative() == from_ints({0, 2}));
    CHECK(from_ints({7}).derivative().is_zero());
}

TEST_CASE("gcd of x^2-1 and x-1 is x-1") {
    CHECK(jp::poly_gcd(from_ints({-1, 0, 1}), from_ints({-1, 1})) == from_ints({-1, 1}));
    CHECK(jp::poly_gcd(Poly(), Poly()).is_zero());
    CHECK(jp::poly_gcd(from_ints({0, 2}), Poly()) == from_ints({0, 1})); // made monic
}

TEST_CASE("divmod of x^3 by x-1 is (x^2+x+1, 1)") {
    auto [q, r] = from_ints({0, 0, 0, 1}).divmod(from_ints({-1, 1}));
    CHECK(q == from_ints({1, 1, 1}));
    CHECK(r == from_ints({1}));
    CHECK_THROWS_AS(from_ints({1}).divmod(Poly()), std::domain_error);
}

TEST_CASE("divmod identity a = q*b + r with deg r < deg b") {
    for (int t = 0; t < 200; ++t) {
        const Poly a = random_poly(8);
        Poly b = random_poly(4);
        if (b.is_zero())
            b = from_ints({1, 1});
        auto [q, r] = a.divmod(b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("evaluation and shifting") {
    const Poly p = from_ints({1, -3, 2}); // 2x^2 - 3x + 1 = (2x-1)(x-1)
    CHECK(p.eval(Rational(1)) == Rational(0));
    CHECK(p.eval(Rational(1, 2)) == Rational(0));
    CHECK(p.eval(Rational(2)) == Rational(3));
    CHECK(p.shifted(Rational(1)).eval(Rational(0)) == p.eval(Rational(1)));
    CHECK(p.root_multiplicity(Rational(1)) == 1);
    CHECK((p * p).root_multiplicity(Rational(1)) == 2);
    CHECK(p.root_multiplicity(Rational(7)) == 0);
}

TEST_CASE("rational roots with multiplicity") {
    // 6 (x - 1/2)^2 (x + 3) x
    const Poly p = from_ints({1, -2}) * from_ints({1, -2}) * from_ints({3, 1}) *
                   from_ints({0, 1}) * Rational(3, 2);
    const auto rr = jp::rational_roots(p);
    REQUIRE(rr.roots.size() == 3);
    CHECK(rr.roots.at(Rational(1, 2)) == 2);
    CHECK(rr.roots.at(Rational(-3)) == 1);
    CHECK(rr.roots.at(Rational(0)) == 1);
    CHECK(rr.residual == Poly(1));
    // x^2 + 1 has no rational roots
    const auto none = jp::rational_roots(from_ints({1, 0, 1}));
    CHECK(none.roots.empty());
    CHECK(none.residual == from_ints({1, 0, 1}));
}

TEST_CASE("ratfunc reduction and arithmetic") {
    const RatFunc f(from_ints({-1, 0, 1}), from_ints({-1, 1})); // (x^2-1)/(x-1) = x+1
    CHECK(f.is_polynomial());
    CHECK(f.as_poly() == from_ints({1, 1}));
    const RatFunc g(from_ints({1}), from_ints({0, 2})); // 1/(2x) -> (1/2)/x
    CHECK(g.den() == from_ints({0, 1}));
    CHECK(g.num() == Poly(Rational(1, 2)));
    CHECK(g + g == RatFunc(from_ints({1}), from_ints({0, 1})));
    CHECK((g - g).is_zero());
    CHECK_THROWS_AS(RatFunc(from_ints({1}), Poly()), std::domain_error);
    CHECK_THROWS_AS(g / RatFunc(0), std::domain_error);
}

TEST_CASE("ratfunc derivative and local data") {
    const RatFunc f(from_ints({1}), from_ints({0, 1})); // 1/x
    CHECK(f.derivative() == RatFunc(from_ints({-1}), from_ints({0, 0, 1})));
    CHECK(f.order_at(Rational(0)) == -1);
    CHECK(f.laurent_lead(Rational(0)) == Rational(1));
    CHECK(f.inf_degree() == -1);
    const RatFunc g(from_ints({0, 0, 3}), from_ints({-1, 1})); // 3x^2/(x-1)
    CHECK(g.order_at(Rational(1)) == -1);
    CHECK(g.order_at(Rational(0)) == 2);
    CHECK(g.laurent_lead(Rational(1)) == Rational(3));
    CHECK(g.inf_lead() == Rational(3));
}
