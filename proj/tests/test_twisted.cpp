#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jp/twisted.hpp"
#include "jp/wronskian.hpp"

#include <cstdint>

using namespace jp;

namespace {

Poly from_ints(std::initializer_list<long> cs) {
    std::vector<Rational> v;
    for (long c : cs)
        v.emplace_back(c);
    return Poly(std::move(v));
}

std::uint64_t rng_state = 7;
long rnd(long lo, long hi) {
    rng_state = rng_state * 6364136223846793005ULL + 1442695040888963407ULL;
    return lo + static_cast<long>((rng_state >> 33) % (hi - lo + 1));
}

} // namespace

TEST_CASE("normalization absorbs powers of x and x-1") {
    // body x^3 - x^2 = x^2 (x-1) folds entirely into the exponents
    const TwistedFunction g(from_ints({0, 0, -1, 1}), Rational(0), Rational(0));
    CHECK(g.body() == Poly(1));
    CHECK(g.exp_zero() == Rational(2));
    CHECK(g.exp_one() == Rational(1));
    const TwistedFunction f(from_ints({0, 0, -1, 1}), Rational(1, 2), Rational(0));
    CHECK(f.exp_zero() == Rational(5, 2));
    CHECK(TwistedFunction(Poly(), Rational(5), Rational(5)) == TwistedFunction());
}

TEST_CASE("derivative of x^a (x-1)^b is x^(a-1)(x-1)^(b-1)((a+b)x - a)") {
    const Rational a(2, 3), b(1, 5);
    const TwistedFunction f(Poly(1), a, b);
    const TwistedFunction d = f.derivative();
    CHECK(d.exp_zero() == a - Rational(1));
    CHECK(d.exp_one() == b - Rational(1));
    CHECK(d.body() == Poly(std::vector<Rational>{-a, a + b}));
}

TEST_CASE("derivative of x^2 as a twisted function is 2x") {
    const TwistedFunction f(Poly(1), Rational(2), Rational(0));
    const TwistedFunction d = f.derivative();
    CHECK(d.is_polynomial());
    CHECK(d.expand() == from_ints({0, 2}));
}

TEST_CASE("derivative of x^-2 (x-1)^-2") {
    const TwistedFunction f(Poly(1), Rational(-2), Rational(-2));
    const TwistedFunction d = f.derivative();
    CHECK(d.exp_zero() == Rational(-3));
    CHECK(d.exp_one() == Rational(-3));
    CHECK(d.body() == from_ints({2, -4}));
}

TEST_CASE("twisted derivative matches poly derivative on integer exponents") {
    for (int t = 0; t < 100; ++t) {
        std::vector<Rational> c;
        for (long d = rnd(0, 4); d >= 0; --d)
            c.emplace_back(rnd(-4, 4));
        const Poly body(std::move(c));
        if (body.is_zero())
            continue;
        const TwistedFunction f(body, Rational(rnd(0, 3)), Rational(rnd(0, 3)));
        CHECK(f.derivative().is_polynomial());
        CHECK(f.derivative().expand() == f.expand().derivative());
    }
}

TEST_CASE("multiplication cancels inverse exponent pairs") {
    const TwistedFunction x_pow(Poly(1), Rational(1), Rational(0));
    const TwistedFunction x_neg(Poly(1), Rational(-1), Rational(0));
    CHECK(x_pow * x_neg == TwistedFunction::one());

    const TwistedFunction f(Poly(1), Rational(5, 2), Rational(-7, 3));
    CHECK(f * f.inverse() == TwistedFunction::one());

    const TwistedFunction g(from_ints({1, 2}), Rational(1, 2), Rational(0));
    const TwistedFunction h(Poly(1), Rational(0), Rational(1, 2));
    const TwistedFunction prod = g * h;
    CHECK(prod.body() == from_ints({1, 2}));
    CHECK(prod.exp_zero() == Rational(1, 2));
    CHECK(prod.exp_one() == Rational(1, 2));
}

TEST_CASE("sum requires integer exponent differences") {
    const TwistedFunction a(Poly(1), Rational(1, 2), Rational(0));
    const TwistedFunction b(Poly(1), Rational(3, 2), Rational(0));
    const TwistedFunction s = a + b;
    CHECK(s.body() == from_ints({1, 1}));
    CHECK(s.exp_zero() == Rational(1, 2));
    const TwistedFunction c(Poly(1), Rational(1, 3), Rational(0));
    CHECK_THROWS_AS(a + c, std::domain_error);
    CHECK((a - a).is_zero());
}

TEST_CASE("log derivative is rational") {
    const TwistedFunction f(from_ints({1, 1}), Rational(1, 2), Rational(-3));
    // f'/f = 1/(x+1) + (1/2)/x - 3/(x-1)
    const RatFunc expect = RatFunc(Poly(1), from_ints({1, 1})) +
                           RatFunc(Poly(Rational(1, 2)), from_ints({0, 1})) +
                           RatFunc(Poly(Rational(-3)), from_ints({-1, 1}));
    CHECK(f.log_derivative() == expect);
}

TEST_CASE("twisted wronskian handles fractional exponents") {
    // W(x^a, x^a (x-1)) = x^(2a-1) ((a+1)x - a - a(x-1)) = x^(2a)
    const Rational a(1, 2);
    const TwistedFunction f(Poly(1), a, Rational(0));
    const TwistedFunction g(from_ints({-1, 1}), a, Rational(0));
    const TwistedFunction w = wronskian(std::vector<TwistedFunction>{f, g});
    CHECK(w == TwistedFunction(Poly(1), Rational(2) * a, Rational(0)));
}
