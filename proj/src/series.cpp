#include "schroeder/series.hpp"

#include <stdexcept>

#include "schroeder/triangles.hpp"

namespace schroeder {

namespace {

// Convolution term sum_{i=1}^{n-1} c[i]*c[n-i].
Rational self_convolution(const std::vector<Rational>& c, long n) {
    Rational sum(0);
    for (long i = 1; i < n; ++i) sum += c[i] * c[n - i];
    return sum;
}

}  // namespace

SeriesPrefix sd_series(const Rational& d, long n_max) {
    if (n_max < 1) throw std::domain_error("sd_series requires n_max >= 1");
    SeriesPrefix s{SeriesKind::schroeder_y, d, {}};
    auto& c = s.coefficients;
    c.assign(static_cast<size_t>(n_max) + 1, Rational(0));
    // Matching x^1 gives -c[1] + 1 = 0; matching x^n for n >= 2 gives
    // (d+1) * sum_i c[i]c[n-i] - c[n] - c[n-1] = 0.
    c[1] = Rational(1);
    Rational d1 = d + Rational(1);
    for (long n = 2; n <= n_max; ++n)
        c[n] = d1 * self_convolution(c, n) - c[n - 1];
    return s;
}

SeriesPrefix narayana_series(const Rational& d, long n_max) {
    if (n_max < 1) throw std::domain_error("narayana_series requires n_max >= 1");
    SeriesPrefix s{SeriesKind::narayana_C, d, {}};
    auto& c = s.coefficients;
    c.assign(static_cast<size_t>(n_max) + 1, Rational(0));
    // Matching x^1 gives -c[1] + 1 = 0; x^n for n >= 2 gives
    // sum_i c[i]c[n-i] + (d-1)*c[n-1] - c[n] = 0.
    c[1] = Rational(1);
    Rational dm1 = d - Rational(1);
    for (long n = 2; n <= n_max; ++n)
        c[n] = self_convolution(c, n) + dm1 * c[n - 1];
    return s;
}

std::vector<Rational> functional_equation_residual(const SeriesPrefix& series) {
    const auto& c = series.coefficients;
    long n_max = series.order();
    std::vector<Rational> residual(static_cast<size_t>(n_max) + 1, Rational(0));
    const Rational& d = series.weight_d;
    for (long n = 1; n <= n_max; ++n) {
        Rational conv = self_convolution(c, n);
        if (series.kind == SeriesKind::schroeder_y) {
            // (d+1)y^2 - (x+1)y + x, coefficient of x^n
            residual[n] = (d + Rational(1)) * conv - c[n] - c[n - 1] +
                          (n == 1 ? Rational(1) : Rational(0));
        } else {
            // C^2 + (dx - x - 1)C + x, coefficient of x^n
            residual[n] = conv + (d - Rational(1)) * c[n - 1] - c[n] +
                          (n == 1 ? Rational(1) : Rational(0));
        }
    }
    residual[0] = Rational(0);  // both equations have no constant residue when c[0] = 0
    return residual;
}

bool catalan_gf_relation_check(long n_max) {
    if (n_max < 2) throw std::domain_error("catalan_gf_relation_check requires n_max >= 2");
    SeriesPrefix s = narayana_series(Rational(-1), n_max);
    for (long n = 1; n <= n_max; ++n) {
        Rational expected(0);
        if (n == 1) {
            expected = Rational(1);
        } else if (n % 2 == 0) {
            expected = Rational(catalan(n / 2));
            if ((n / 2) % 2 == 1) expected = -expected;
        }
        if (s.coefficients[static_cast<size_t>(n)] != expected) return false;
    }
    return true;
}

}  // namespace schroeder
