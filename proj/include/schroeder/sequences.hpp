#pragma once

#include <utility>
#include <vector>

#include "schroeder/rational.hpp"

namespace schroeder {

enum class SeqMethod { definition, recurrence, series,
                       auto_select /* resolves to the recurrence */ };

/// Weight-d small Schroeder number by its definition: the triangle row of
/// size n summed with weights d^k. The ground-truth (slow) path.
Rational sd_definition(const Rational& d, long n);

/// Same value by the three-term recurrence
///   n*s(n) = (2d+1)(2n-3)*s(n-1) - (n-3)*s(n-2),  s(1) = 1, s(2) = d.
Rational sd_recurrence(const Rational& d, long n);

/// Values s_d(1) .. s_d(n_max) in one linear pass (index 0 unused).
std::vector<Rational> sd_recurrence_prefix(const Rational& d, long n_max);

/// Weighted large Schroeder number: the large-triangle row summed with
/// weights d^k; equals (d+1)/d * s_d(n) for n >= 2, d != 0.
Rational sbar_d(const Rational& d, long n);

/// Right-hand side of the reflection identity
///   s_d(n) = (-1)^(n-1) * d/(d+1) * s_{-d-1}(n)   (n >= 2, d != -1),
/// evaluated via the recurrence at -d-1, for cross-checking.
Rational sd_reflection(const Rational& d, long n);

/// Closed form for d = -1/2: 0 at odd n, (-1)^m / 2^(2m-1) * catalan(m)
/// at n = 2m.
Rational s_minus_half(long n);

/// (sum of s(n,k) over odd k, sum over even k); the two always differ
/// by (-1)^n.
std::pair<Integer, Integer> parity_split(long n);

}  // namespace schroeder
