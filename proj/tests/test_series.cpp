#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schroeder/sequences.hpp"
#include "schroeder/series.hpp"
#include "schroeder/triangles.hpp"
#include "schroeder/verify.hpp"

using namespace schroeder;

namespace {

std::vector<Rational> rationals(std::initializer_list<long> xs) {
    std::vector<Rational> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("Schroeder series coefficients") {
    CHECK(sd_series(Rational(2), 5).coefficients == rationals({0, 1, 2, 10, 62, 430}));
    CHECK(sd_series(Rational(-1), 6).coefficients == rationals({0, 1, -1, 1, -1, 1, -1}));
    CHECK(sd_series(Rational(7, 3), 1).coefficients == rationals({0, 1}));
    CHECK(sd_series(Rational(-5), 1).coefficients == rationals({0, 1}));
}

TEST_CASE("series equals recurrence across the grid") {
    for (const Rational& d : default_d_grid()) {
        auto series = sd_series(d, 40);
        auto rec = sd_recurrence_prefix(d, 40);
        for (long n = 1; n <= 40; ++n) CHECK(series.coefficients[n] == rec[n]);
    }
}

TEST_CASE("Narayana series coefficients") {
    CHECK(narayana_series(Rational(1), 6).coefficients == rationals({0, 1, 1, 2, 5, 14, 42}));
    CHECK(narayana_series(Rational(5), 2).coefficients.back() == Rational(5));
    CHECK(narayana_series(Rational(-1), 8).coefficients ==
          rationals({0, 1, -1, 0, 1, 0, -2, 0, 5}));
}

TEST_CASE("Narayana series matches weighted row sums") {
    for (const Rational& d : default_d_grid()) {
        auto series = narayana_series(d, 20);
        for (long n = 1; n <= 20; ++n) {
            Rational by_rows(0);
            for (long k = 0; k < n; ++k)
                by_rows += Rational(narayana_entry(n, k)) * d.pow(k);
            CHECK(series.coefficients[n] == by_rows);
        }
    }
}

TEST_CASE("residuals vanish when the prefix is plugged back in") {
    for (const Rational& d : default_d_grid()) {
        for (const auto& series : {sd_series(d, 30), narayana_series(d, 30)}) {
            auto residual = functional_equation_residual(series);
            for (const Rational& r : residual) CHECK(r.is_zero());
        }
    }

    SUBCASE("a perturbed coefficient is detected") {
        auto series = sd_series(Rational(2), 10);
        series.coefficients[7] += Rational(1);
        auto residual = functional_equation_residual(series);
        bool any_nonzero = false;
        for (const Rational& r : residual) any_nonzero = any_nonzero || !r.is_zero();
        CHECK(any_nonzero);
    }
}

TEST_CASE("sign-alternating Catalan pattern at d = -1") {
    CHECK(catalan_gf_relation_check(12));
    CHECK(catalan_gf_relation_check(2));
    CHECK(catalan_gf_relation_check(25));
}

TEST_CASE("scaled d = -1/2 values appear in the d = -1 Narayana column") {
    auto series = narayana_series(Rational(-1), 20);
    for (long n = 1; n <= 20; ++n)
        CHECK(Rational(2).pow(n - 1) * s_minus_half(n) == series.coefficients[n]);
}
