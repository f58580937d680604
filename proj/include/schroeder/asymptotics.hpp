#pragma once

#include "schroeder/rational.hpp"

namespace schroeder {

/// Saddle-point quantities for the growth of s_d(n), d > 0. The generating
/// function satisfies y = x * phi(y) with phi(y) = (1-y)/(1-(d+1)y); s_char
/// solves the characteristic equation phi(s) = s * phi'(s) inside the disc of
/// convergence, and rho = phi(s)/s is the exponential growth rate.
struct AsymptoticProfile {
    double d = 0;
    double s_char = 0;
    double phi_at_s = 0;
    double phi_pp_at_s = 0;  // second derivative of phi at s_char
    double rho = 0;          // 2d + 1 + 2*sqrt(d^2+d), in (4d+1, 4d+2)
    double prefactor = 0;    // s_d(n) ~ prefactor * n^(-3/2) * rho^n
};

/// Builds the profile for d > 0; throws std::domain_error otherwise.
AsymptoticProfile build_profile(double d);

/// phi(s) - s*phi'(s) relative to phi(s), with phi' evaluated analytically;
/// should sit at roundoff level.
double characteristic_residual(const AsymptoticProfile& p);

/// prefactor * n^(-3/2) * rho^n; may overflow to +inf for huge n.
double asymptotic_estimate(double d, long n);

/// log of the estimate, safe for n far beyond double range.
double asymptotic_estimate_log(double d, long n);

/// Exact ratio s_d(n+1)/s_d(n) rounded to double; approaches rho.
double empirical_growth_rate(const Rational& d, long n);

/// |estimate/exact - 1| computed in log space, so it stays meaningful when
/// s_d(n) overflows double.
double estimate_relative_error(const Rational& d, long n);

}  // namespace schroeder
