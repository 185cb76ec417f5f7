#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jp/linalg.hpp"
#include "jp/wronskian.hpp"

#include <cstdint>

using namespace jp;

namespace {

std::uint64_t rng_state = 99;
long rnd(long lo, long hi) {
    rng_state = rng_state * 6364136223846793005ULL + 1442695040888963407ULL;
    return lo + static_cast<long>((rng_state >> 33) % (hi - lo + 1));
}

Poly from_ints(std::initializer_list<long> cs) {
    std::vector<Rational> v;
    for (long c : cs)
        v.emplace_back(c);
    return Poly(std::move(v));
}

} // namespace

TEST_CASE("1x1 system") {
    const auto sol = solve_linear({{Rational(1)}}, {Rational(2)});
    REQUIRE(sol.consistent);
    CHECK(sol.rank == 1);
    CHECK(sol.particular == Vec{Rational(2)});
    CHECK(sol.kernel.empty());
}

TEST_CASE("rank-1 homogeneous system has kernel (1,-1)") {
    const Mat a{{Rational(1), Rational(1)}, {Rational(1), Rational(1)}};
    const auto sol = solve_linear(a, {Rational(0), Rational(0)});
    REQUIRE(sol.consistent);
    CHECK(sol.rank == 1);
    REQUIRE(sol.kernel.size() == 1);
    CHECK(sol.kernel[0] == Vec{Rational(1), Rational(-1)});
}

TEST_CASE("identity system") {
    const Mat a{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
    const auto sol = solve_linear(a, {Rational(3), Rational(4)});
    REQUIRE(sol.consistent);
    CHECK(sol.particular == Vec{Rational(3), Rational(4)});
    CHECK(sol.kernel.empty());
}

TEST_CASE("inconsistency is a report, not a failure") {
    const Mat a{{Rational(1), Rational(1)}, {Rational(2), Rational(2)}};
    const auto sol = solve_linear(a, {Rational(1), Rational(3)});
    CHECK_FALSE(sol.consistent);
    CHECK(sol.rank == 1);
}

TEST_CASE("solutions substituted back reproduce the rhs") {
    for (int t = 0; t < 100; ++t) {
        const size_t rows = static_cast<size_t>(rnd(1, 5));
        const size_t cols = static_cast<size_t>(rnd(1, 5));
        Mat a(rows, Vec(cols));
        for (auto& row : a)
            for (auto& e : row)
                e = Rational(rnd(-3, 3), rnd(1, 2));
        Vec rhs(rows);
        for (auto& e : rhs)
            e = Rational(rnd(-3, 3));
        const auto sol = solve_linear(a, rhs);
        if (!sol.consistent)
            continue;
        // particular solution
        for (size_t i = 0; i < rows; ++i) {
            Rational acc(0);
            for (size_t j = 0; j < cols; ++j)
                acc += a[i][j] * sol.particular[j];
            CHECK(acc == rhs[i]);
        }
        // kernel vectors map to zero
        for (const auto& v : sol.kernel) {
            for (size_t i = 0; i < rows; ++i) {
                Rational acc(0);
                for (size_t j = 0; j < cols; ++j)
                    acc += a[i][j] * v[j];
                CHECK(acc == Rational(0));
            }
        }
    }
}

TEST_CASE("canonical span compares subspaces") {
    const Poly a = from_ints({1, 1});     // x + 1
    const Poly b = from_ints({0, 0, 1});  // x^2
    CHECK(same_span({a, b}, {a * Rational(3), b + a}));
    CHECK_FALSE(same_span({a}, {b}));
    CHECK(same_span({a, b, a + b}, {b, a}));
    CHECK(canonical_span({Poly(), Poly()}).empty());
}

TEST_CASE("wronskian of (1, x) is 1") {
    CHECK(wronskian(std::vector<Poly>{Poly(1), from_ints({0, 1})}) == Poly(1));
}

TEST_CASE("wronskian of (x^2, x^5) is 3x^6") {
    const Poly w = wronskian(std::vector<Poly>{Poly::monomial(Rational(1), 2),
                                               Poly::monomial(Rational(1), 5)});
    CHECK(w == Poly::monomial(Rational(3), 6));
}

TEST_CASE("wronskian of a single function is the function") {
    const Poly f = from_ints({2, 0, 7});
    CHECK(wronskian(std::vector<Poly>{f}) == f);
}

TEST_CASE("wronskian is alternating") {
    for (int t = 0; t < 50; ++t) {
        std::vector<Poly> fs;
        for (int i = 0; i < 3; ++i) {
            std::vector<Rational> c;
            for (long d = rnd(0, 4); d >= 0; --d)
                c.emplace_back(rnd(-4, 4));
            fs.push_back(Poly(std::move(c)));
        }
        const Poly w = wronskian(fs);
        std::swap(fs[0], fs[2]);
        CHECK(wronskian(fs) == -w);
        fs[1] = fs[0]; // repeated input
        CHECK(wronskian(fs).is_zero());
    }
}
