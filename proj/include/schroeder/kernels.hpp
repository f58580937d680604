#pragma once

#include <functional>
#include <utility>

#include "schroeder/enumerate.hpp"
#include "schroeder/paths.hpp"
#include "schroeder/rational.hpp"

namespace schroeder {

struct EnumerationOptions {
    long bound = default_enumeration_bound;
};

/// Weight of a completed path, as a function of its statistics only.
using StatWeight = std::function<Rational(const PathStatistics&)>;

// Brute-force aggregations over entire path families. The functions below
// split the enumeration space by path prefix and fan the completions out
// across OpenMP threads; exact arithmetic makes the result independent of
// the schedule. schroeder::serial holds the plain single-threaded reference
// implementations the tests compare against.

/// Sum of weight(statistics(P)) over every path of the class with size n.
Rational sum_over_paths(PathClass cls, long n, const StatWeight& weight,
                        EnumerationOptions opt = {});

/// Sum of a^(non-valley ups) * b^(valleys) over Dyck paths of size n.
Rational valley_weighted_catalan(const Rational& a, const Rational& b, long n,
                                 EnumerationOptions opt = {});

/// Sum of a^(peaks) * b^(non-peak ups) over Dyck paths of size n.
Rational peak_weighted_catalan(const Rational& a, const Rational& b, long n,
                               EnumerationOptions opt = {});

/// Dyck paths of size n with up_types colors per up step, down_types colors
/// per down step, and the first `forbidden_peaks` (up,down) color pairs
/// banned as peaks; computed as the statistics sum
/// up_types^(non-peak ups) * down_types^(non-peak downs) *
/// (up_types*down_types - forbidden_peaks)^(peaks).
Rational colored_dyck_count(long up_types, long down_types, long forbidden_peaks,
                            long n, EnumerationOptions opt = {});

/// Same count by literally enumerating color assignments and rejecting any
/// forbidden peak; the independent oracle for colored_dyck_count, viable for
/// tiny n only.
Integer colored_dyck_count_explicit(long up_types, long down_types,
                                    long forbidden_peaks, long n,
                                    EnumerationOptions opt = {});

/// (paths with an even number of peaks, paths with an odd number) over D_n.
/// The empty path at n = 1 has zero peaks and lands in the even bucket.
std::pair<Integer, Integer> peak_parity_counts(long n, EnumerationOptions opt = {});

/// Sum of colors^(flats) over small Schroeder paths of size n.
Rational flat_weighted_small_count(long colors, long n, EnumerationOptions opt = {});

Integer count_paths(PathClass cls, long n, EnumerationOptions opt = {});

namespace serial {

Rational sum_over_paths(PathClass cls, long n, const StatWeight& weight,
                        EnumerationOptions opt = {});
Rational valley_weighted_catalan(const Rational& a, const Rational& b, long n,
                                 EnumerationOptions opt = {});
Rational peak_weighted_catalan(const Rational& a, const Rational& b, long n,
                               EnumerationOptions opt = {});
std::pair<Integer, Integer> peak_parity_counts(long n, EnumerationOptions opt = {});
Integer count_paths(PathClass cls, long n, EnumerationOptions opt = {});

}  // namespace serial

}  // namespace schroeder
