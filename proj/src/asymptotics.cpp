#include "schroeder/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "schroeder/sequences.hpp"

namespace schroeder {

AsymptoticProfile build_profile(double d) {
    if (!(d > 0)) throw std::domain_error("asymptotics require d > 0");
    AsymptoticProfile p;
    p.d = d;
    double rd = std::sqrt(d), rd1 = std::sqrt(d + 1);
    p.s_char = 1.0 - rd / rd1;
    p.phi_at_s = 1.0 / (rd1 * (rd1 - rd));
    // phi(y) = (1-y)/(1-(d+1)y) has phi''(y) = 2d(d+1)/(1-(d+1)y)^3, and
    // 1-(d+1)s = sqrt(d)(sqrt(d+1)-sqrt(d)).
    p.phi_pp_at_s = 2.0 * (d + 1) / (rd * std::pow(rd1 - rd, 3.0));
    p.rho = 2 * d + 1 + 2 * std::sqrt(d * d + d);
    p.prefactor =
        (rd1 - rd) * std::pow(d, 0.25) / (2.0 * std::pow(d + 1, 0.75) * std::sqrt(M_PI));
    return p;
}

double characteristic_residual(const AsymptoticProfile& p) {
    double denom = 1.0 - (p.d + 1) * p.s_char;
    double phi = (1.0 - p.s_char) / denom;
    double phi_prime = p.d / (denom * denom);
    return std::fabs(phi - p.s_char * phi_prime) / std::fabs(phi);
}

double asymptotic_estimate(double d, long n) {
    if (n < 1) throw std::domain_error("asymptotic_estimate requires n >= 1");
    AsymptoticProfile p = build_profile(d);
    return p.prefactor * std::pow(static_cast<double>(n), -1.5) *
           std::pow(p.rho, static_cast<double>(n));
}

double asymptotic_estimate_log(double d, long n) {
    if (n < 1) throw std::domain_error("asymptotic_estimate requires n >= 1");
    AsymptoticProfile p = build_profile(d);
    return std::log(p.prefactor) - 1.5 * std::log(static_cast<double>(n)) +
           static_cast<double>(n) * std::log(p.rho);
}

double empirical_growth_rate(const Rational& d, long n) {
    if (d.sign() <= 0) throw std::domain_error("asymptotics require d > 0");
    if (n < 1) throw std::domain_error("empirical_growth_rate requires n >= 1");
    std::vector<Rational> s = sd_recurrence_prefix(d, n + 1);
    return (s[static_cast<size_t>(n) + 1] / s[static_cast<size_t>(n)]).to_double();
}

double estimate_relative_error(const Rational& d, long n) {
    if (d.sign() <= 0) throw std::domain_error("asymptotics require d > 0");
    double log_exact = log_rational(sd_recurrence(d, n));
    double log_est = asymptotic_estimate_log(d.to_double(), n);
    return std::fabs(std::expm1(log_est - log_exact));
}

}  // namespace schroeder
