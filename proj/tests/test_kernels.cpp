#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schroeder/kernels.hpp"
#include "schroeder/sequences.hpp"
#include "schroeder/triangles.hpp"

using namespace schroeder;

TEST_CASE("parallel kernels agree with the serial reference") {
    const std::pair<Rational, Rational> weights[] = {
        {Rational(1), Rational(1)},   {Rational(2), Rational(3)},
        {Rational(-1), Rational(0)},  {Rational(-1, 2), Rational(1, 2)},
        {Rational(7, 3), Rational(-2)},
    };
    for (long n = 1; n <= 9; ++n) {
        for (const auto& [a, b] : weights) {
            CHECK(valley_weighted_catalan(a, b, n) == serial::valley_weighted_catalan(a, b, n));
            CHECK(peak_weighted_catalan(a, b, n) == serial::peak_weighted_catalan(a, b, n));
        }
        CHECK(peak_parity_counts(n) == serial::peak_parity_counts(n));
        for (PathClass cls :
             {PathClass::small_schroeder, PathClass::large_schroeder, PathClass::dyck})
            CHECK(count_paths(cls, n) == serial::count_paths(cls, n));
    }
}

TEST_CASE("valley-weighted counts") {
    for (long n = 1; n <= 8; ++n)
        CHECK(valley_weighted_catalan(Rational(1), Rational(1), n) == Rational(catalan(n)));

    // D_3 = {UUDD, UDUD}: weights d^2 and d(d+1)
    Rational d(5, 3);
    CHECK(valley_weighted_catalan(d, d + Rational(1), 3) == d + Rational(2) * d * d);

    for (long n = 1; n <= 8; ++n)
        CHECK(valley_weighted_catalan(Rational(-1), Rational(0), n) ==
              Rational(n % 2 == 1 ? 1 : -1));

    SUBCASE("matches the weighted sequence") {
        for (const Rational& d2 : {Rational(-2), Rational(0), Rational(1), Rational(5, 2)})
            for (long n = 1; n <= 8; ++n)
                CHECK(valley_weighted_catalan(d2, d2 + Rational(1), n) == sd_recurrence(d2, n));
    }
}

TEST_CASE("peak-weighted counts") {
    // D_3: UUDD has one peak and one non-peak up, UDUD has two peaks
    Rational a(3), b(7);
    CHECK(peak_weighted_catalan(a, b, 3) == a * a + a * b);
    CHECK(peak_weighted_catalan(Rational(-1), Rational(1), 6) == Rational(-2));
    for (long n = 1; n <= 8; ++n)
        CHECK(peak_weighted_catalan(Rational(1), Rational(1), n) == Rational(catalan(n)));

    SUBCASE("valley and peak weightings coincide") {
        const std::pair<Rational, Rational> weights[] = {
            {Rational(2), Rational(3)}, {Rational(-1), Rational(1)},
            {Rational(1, 2), Rational(-3, 2)},
        };
        for (const auto& [x, y] : weights)
            for (long n = 1; n <= 8; ++n)
                CHECK(valley_weighted_catalan(x, y, n) == peak_weighted_catalan(x, y, n));
    }
}

TEST_CASE("colored Dyck paths") {
    for (long n = 1; n <= 8; ++n) {
        CHECK(colored_dyck_count(1, 2, 1, n) == sd_recurrence(Rational(1), n));
        CHECK(colored_dyck_count(2, 2, 1, n) == sd_recurrence(Rational(3), n));
    }
    CHECK(colored_dyck_count(3, 1, 1, 4) == Rational(62));
    CHECK(colored_dyck_count(2, 2, 1, 3) == Rational(21));

    SUBCASE("nothing forbidden paints freely") {
        for (long n = 1; n <= 6; ++n)
            CHECK(colored_dyck_count(2, 3, 0, n) ==
                  Rational(6).pow(n - 1) * Rational(catalan(n)));
    }

    SUBCASE("formula equals the explicit-coloring oracle") {
        const std::tuple<long, long, long> grid[] = {
            {1, 1, 1}, {1, 2, 1}, {2, 2, 1}, {3, 1, 1}, {2, 2, 2},
        };
        for (const auto& [k, l, p] : grid)
            for (long n = 1; n <= 5; ++n)
                CHECK(colored_dyck_count(k, l, p, n) ==
                      Rational(colored_dyck_count_explicit(k, l, p, n)));
    }

    SUBCASE("general p matches the scaled weighted sequence") {
        const std::tuple<long, long, long> grid[] = {
            {1, 2, 1}, {2, 2, 1}, {3, 1, 1}, {2, 2, 2}, {2, 3, 4},
        };
        for (const auto& [k, l, p] : grid)
            for (long n = 1; n <= 8; ++n)
                CHECK(colored_dyck_count(k, l, p, n) ==
                      Rational(p).pow(n - 1) * sd_recurrence(Rational(k * l - p, p), n));
    }

    CHECK_THROWS_AS(colored_dyck_count(2, 2, 5, 4), std::domain_error);
    CHECK_THROWS_AS(colored_dyck_count_explicit(1, 1, 2, 4), std::domain_error);
}

TEST_CASE("peak parity counts") {
    CHECK(peak_parity_counts(6) == std::pair<Integer, Integer>{20, 22});
    CHECK(peak_parity_counts(9) == std::pair<Integer, Integer>{715, 715});
    // The empty path has zero peaks, so it counts as even; the published
    // table lists this row as (0, 1) instead.
    CHECK(peak_parity_counts(1) == std::pair<Integer, Integer>{1, 0});

    for (long n = 1; n <= 10; ++n) {
        auto [even, odd] = peak_parity_counts(n);
        CHECK(even + odd == catalan(n));
        CHECK(Rational(even - odd) == peak_weighted_catalan(Rational(-1), Rational(1), n));
        CHECK(Rational(even - odd) == Rational(2).pow(n - 1) * s_minus_half(n));
    }
}

TEST_CASE("flat-weighted small Schroeder counts") {
    for (long m : {1L, 2L, 3L})
        for (long n = 1; n <= 7; ++n) {
            Rational expected = Rational(m).pow(n - 1) * sd_recurrence(Rational(1, m), n);
            CHECK(flat_weighted_small_count(m, n) == expected);
            CHECK(valley_weighted_catalan(Rational(1), Rational(m + 1), n) == expected);
        }
}

TEST_CASE("kernels respect the enumeration bound") {
    CHECK_THROWS_AS(valley_weighted_catalan(Rational(1), Rational(1), 20), EnumerationLimitError);
    EnumerationOptions loose{13};
    CHECK(count_paths(PathClass::dyck, 13, loose) == catalan(13));
}

TEST_CASE("generic statistic sums") {
    // total peaks across D_5, via the generic kernel both ways
    StatWeight peaks = [](const PathStatistics& st) { return Rational(st.peaks); };
    CHECK(sum_over_paths(PathClass::dyck, 5, peaks) ==
          serial::sum_over_paths(PathClass::dyck, 5, peaks));
}

TEST_CASE("Dyck paths stratified by peak count give the Narayana numbers") {
    for (long n = 1; n <= 8; ++n) {
        for (long k = 0; k < n; ++k) {
            StatWeight indicator = [k](const PathStatistics& st) {
                return Rational(st.peaks == k ? 1 : 0);
            };
            CHECK(sum_over_paths(PathClass::dyck, n, indicator) ==
                  Rational(narayana_entry(n, k)));
        }
    }
}
