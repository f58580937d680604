#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schroeder/bfile.hpp"
#include "schroeder/fixtures.hpp"
#include "schroeder/sequences.hpp"

using namespace schroeder;

TEST_CASE("parses plain data lines") {
    BFile f = parse_bfile("1 1\n2 1\n3 3\n4 11\n", "A001003");
    REQUIRE(f.entries.size() == 4);
    CHECK(f.sequence_id == "A001003");
    CHECK(f.entries[0] == std::pair<long, Integer>{1, 1});
    CHECK(f.entries[3] == std::pair<long, Integer>{4, 11});
}

TEST_CASE("comments, blanks, and CRLF are tolerated") {
    BFile f = parse_bfile("# header\r\n\r\n  \n5 45\r\n6 197\n# trailer\n");
    REQUIRE(f.entries.size() == 2);
    CHECK(f.entries[0].first == 5);
    CHECK(f.entries[1].second == 197);

    CHECK(parse_bfile("# comment\n").entries.empty());
    CHECK(parse_bfile("").entries.empty());
}

TEST_CASE("malformed input is rejected with a line number") {
    CHECK_THROWS_WITH_AS(parse_bfile("1 1\nfoo\n"), doctest::Contains("line 2"),
                         BFileParseError);
    CHECK_THROWS_AS(parse_bfile("1 1 1\n"), BFileParseError);
    CHECK_THROWS_AS(parse_bfile("1\n"), BFileParseError);
    CHECK_THROWS_AS(parse_bfile("x 3\n"), BFileParseError);

    SUBCASE("indices must increase") {
        CHECK_THROWS_AS(parse_bfile("2 1\n1 1\n"), BFileParseError);
        CHECK_THROWS_AS(parse_bfile("2 1\n2 1\n"), BFileParseError);
    }
}

TEST_CASE("serialize-parse is a fixed point") {
    std::string messy = "# c\n1 1\r\n\n2   -4\n10 99999999999999999999999\n";
    BFile once = parse_bfile(messy);
    std::string canon = serialize_bfile(once);
    BFile twice = parse_bfile(canon);
    CHECK(once.entries == twice.entries);
    CHECK(serialize_bfile(twice) == canon);
}

TEST_CASE("sequence comparison") {
    // our n = 1 term sits at OEIS A001003 offset 0
    BFile f = parse_bfile("0 1\n1 1\n2 3\n3 11\n4 45\n5 197\n6 903\n7 4279\n", "A001003");
    std::vector<Integer> values(fixtures::small_schroeder_numbers());

    ComparisonReport clean = compare_sequence(values, 1, f, -1);
    CHECK(clean.compared == 8);
    CHECK(clean.clean());

    SUBCASE("a perturbed value is flagged") {
        values[3] += 1;
        ComparisonReport report = compare_sequence(values, 1, f, -1);
        REQUIRE(report.mismatches.size() == 1);
        CHECK(report.mismatches[0].index == 4);
        CHECK(report.mismatches[0].expected == 11);
        CHECK(report.mismatches[0].actual == 12);
    }

    SUBCASE("disjoint ranges give an empty overlap, not an error") {
        ComparisonReport report = compare_sequence(values, 1, f, 100);
        CHECK(report.empty_overlap());
        CHECK(report.mismatches.empty());
    }

    SUBCASE("a wrong shift misaligns everything") {
        ComparisonReport report = compare_sequence(values, 1, f, 0);
        CHECK_FALSE(report.clean());
    }
}

TEST_CASE("computed sequences match the embedded fixtures through a b-file round trip") {
    auto as_bfile = [](const std::vector<Integer>& values) {
        BFile f;
        for (size_t i = 0; i < values.size(); ++i)
            f.entries.emplace_back(static_cast<long>(i + 1), values[i]);
        return f;
    };
    const std::pair<Rational, const std::vector<Integer>*> families[] = {
        {Rational(1), &fixtures::small_schroeder_numbers()},
        {Rational(2), &fixtures::weighted_d2()},
        {Rational(3), &fixtures::weighted_d3()},
        {Rational(4), &fixtures::weighted_d4()},
    };
    for (const auto& [d, table] : families) {
        std::vector<Integer> computed;
        for (long n = 1; n <= 8; ++n) computed.push_back(sd_recurrence(d, n).to_integer());
        ComparisonReport report = compare_sequence(computed, 1, as_bfile(*table), 0);
        CHECK(report.compared == 8);
        CHECK(report.clean());
    }
}

TEST_CASE("fetch is gated") {
    CHECK_THROWS_AS(fetch_bfile("A001003", false), NetworkDisabledError);
    CHECK_THROWS_AS(fetch_bfile("bogus", false), std::invalid_argument);
    CHECK_THROWS_AS(fetch_bfile("A12", true), std::invalid_argument);
    CHECK_THROWS_AS(fetch_bfile("A12345678901", true), std::invalid_argument);
    CHECK(is_valid_sequence_id("A001003"));
    CHECK_FALSE(is_valid_sequence_id("A1003"));
    CHECK_FALSE(is_valid_sequence_id("B001003"));
}
