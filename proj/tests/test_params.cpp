#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jp/params.hpp"

#include <cstdint>

using namespace jp;

namespace {

std::uint64_t rng_state = 17;
long rnd(long lo, long hi) {
    rng_state = rng_state * 6364136223846793005ULL + 1442695040888963407ULL;
    return lo + static_cast<long>((rng_state >> 33) % (hi - lo + 1));
}

ParameterSet params(std::initializer_list<long> m, std::initializer_list<long> l, long k) {
    std::vector<Rational> mq;
    for (long v : m)
        mq.emplace_back(v);
    return ParameterSet(std::move(mq), std::vector<long>(l), Rational(k));
}

} // namespace

TEST_CASE("validation of l") {
    CHECK_THROWS(ParameterSet({}, {}, Rational(0)));
    CHECK_THROWS(params({1, 1}, {0, 1}, 2));  // increasing l
    CHECK_THROWS(params({1, 1}, {0, -1}, 2)); // negative l
    CHECK_THROWS(ParameterSet({Rational(1)}, {0, 0}, Rational(0))); // length mismatch
}

TEST_CASE("boundary conventions l_0 = k and l_{r+1} = 0") {
    const ParameterSet p = params({2, 1}, {2, 1}, 3);
    CHECK(p.l_at(0) == Rational(3));
    CHECK(p.l_at(1) == Rational(2));
    CHECK(p.l_at(2) == Rational(1));
    CHECK(p.l_at(3) == Rational(0));
}

TEST_CASE("consistency flag") {
    CHECK(params({2}, {1}, 2).consistent());
    CHECK(params({0}, {0}, 0).consistent());
    CHECK_FALSE(params({2}, {1}, 0).consistent());      // k < l_1
    CHECK_FALSE(params({0}, {1}, 2).consistent());      // l_1 - l_2 > m_1
    CHECK_FALSE(ParameterSet({Rational(1, 2)}, {0}, Rational(1)).consistent());
    CHECK_FALSE(ParameterSet({Rational(1)}, {0}, Rational(1, 2)).consistent());
    CHECK_FALSE(ParameterSet({Rational(-1)}, {0}, Rational(1)).consistent());
    CHECK(params({1, 2, 3}, {2, 1, 1}, 2).consistent());
}

TEST_CASE("exponent data for r=1, m=2, l=1, k=2") {
    const ExponentData e = exponent_data(params({2}, {1}, 2));
    CHECK(e.infinity_exponents == std::vector<Rational>{Rational(1), Rational(4)});
    CHECK(e.zero_exponents == std::vector<Rational>{Rational(0), Rational(3)});
    CHECK(e.infinity_falling ==
          std::vector<Rational>{Rational(4), Rational(-4), Rational(1)});
    CHECK(e.zero_falling == std::vector<Rational>{Rational(0), Rational(-2), Rational(1)});
    CHECK(e.seed_exponents == std::vector<Rational>{Rational(0), Rational(3)});
}

TEST_CASE("zero exponents always start at 0") {
    for (int t = 0; t < 30; ++t) {
        std::vector<Rational> m;
        const size_t r = static_cast<size_t>(rnd(1, 3));
        for (size_t i = 0; i < r; ++i)
            m.emplace_back(rnd(-4, 4), rnd(1, 3));
        std::vector<long> l(r, 0);
        const ParameterSet p(std::move(m), std::move(l), Rational(rnd(-4, 4), rnd(1, 3)));
        const ExponentData e = exponent_data(p);
        CHECK(e.zero_exponents[0] == Rational(0));
        CHECK(e.seed_exponents[0] == Rational(0));
    }
}

TEST_CASE("seed exponents for r=2, m=(1,2)") {
    const ExponentData e = exponent_data(params({1, 2}, {0, 0}, 0));
    CHECK(e.seed_exponents ==
          std::vector<Rational>{Rational(0), Rational(2), Rational(5)});
}

TEST_CASE("falling coefficients of a^2 are (0, 1, 1)") {
    const Poly a2 = Poly::monomial(Rational(1), 2);
    CHECK(falling_factorial_coeffs(a2) ==
          std::vector<Rational>{Rational(0), Rational(1), Rational(1)});
}

TEST_CASE("falling coefficients of a constant") {
    CHECK(falling_factorial_coeffs(Poly(Rational(7))) == std::vector<Rational>{Rational(7)});
}

TEST_CASE("falling coefficients of (a-1)(a-4) are (4, -4, 1)") {
    const Poly d = Poly::linear_root(Rational(1)) * Poly::linear_root(Rational(4));
    CHECK(falling_factorial_coeffs(d) ==
          std::vector<Rational>{Rational(4), Rational(-4), Rational(1)});
}

TEST_CASE("reconstruction identity holds exactly") {
    for (int t = 0; t < 100; ++t) {
        std::vector<Rational> c;
        for (long d = rnd(0, 6); d >= 0; --d)
            c.emplace_back(rnd(-6, 6), rnd(1, 4));
        const Poly f(std::move(c));
        CHECK(from_falling_coeffs(falling_factorial_coeffs(f)) == f);
    }
}

TEST_CASE("structural constants of the falling decompositions") {
    for (int t = 0; t < 50; ++t) {
        const size_t r = static_cast<size_t>(rnd(1, 3));
        std::vector<Rational> m;
        for (size_t i = 0; i < r; ++i)
            m.emplace_back(rnd(-4, 4), rnd(1, 3));
        std::vector<long> l;
        long cur = rnd(0, 2);
        for (size_t i = 0; i < r; ++i)
            l.push_back(cur);
        const ParameterSet p(std::move(m), std::move(l), Rational(rnd(-4, 4), rnd(1, 3)));
        const ExponentData e = exponent_data(p);
        CHECK(e.infinity_falling.back() == Rational(1));
        CHECK(e.zero_falling.back() == Rational(1));
        CHECK(e.zero_falling.front() == Rational(0));
        Rational d0(1);
        for (const auto& root : e.infinity_exponents)
            d0 *= -root;
        CHECK(e.infinity_falling.front() == d0);
    }
}
