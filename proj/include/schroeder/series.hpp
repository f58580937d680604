#pragma once

#include <vector>

#include "schroeder/rational.hpp"

namespace schroeder {

enum class SeriesKind { schroeder_y, narayana_C };

/// Truncated formal power series: coefficients[i] is the coefficient of x^i,
/// i = 0 .. N. Both supported series have constant term 0 and linear term 1.
struct SeriesPrefix {
    SeriesKind kind{};
    Rational weight_d;
    std::vector<Rational> coefficients;

    long order() const { return static_cast<long>(coefficients.size()) - 1; }
};

/// Coefficients of the series y with (d+1)*y^2 - (x+1)*y + x = 0, extracted
/// by matching coefficients (no closed form, no square roots). Coefficient n
/// is the weighted small Schroeder number s_d(n).
SeriesPrefix sd_series(const Rational& d, long n_max);

/// Coefficients of the series C with C^2 + (d*x - x - 1)*C + x = 0.
/// Coefficient n is the d-weighted Narayana row sum.
SeriesPrefix narayana_series(const Rational& d, long n_max);

/// Coefficients of x^1..x^N left by substituting the prefix back into its
/// functional equation; all must be zero for a correct prefix.
std::vector<Rational> functional_equation_residual(const SeriesPrefix& series);

/// True iff narayana_series(-1) matches the sign-alternating even-index
/// Catalan pattern through x^N: coefficient 1 at n = 1, 0 at odd n >= 3,
/// and (-1)^(n/2) * catalan(n/2) at even n.
bool catalan_gf_relation_check(long n_max);

}  // namespace schroeder
