#include "schroeder/sequences.hpp"

#include <cassert>
#include <stdexcept>

#include "schroeder/triangles.hpp"

namespace schroeder {

Rational sd_definition(const Rational& d, long n) {
    if (n < 1) throw std::domain_error("sd_definition requires n >= 1");
    Rational sum(0);
    for (long k = 0; k < n; ++k)
        sum += Rational(small_schroeder_entry(n, k)) * d.pow(k);
    return sum;
}

std::vector<Rational> sd_recurrence_prefix(const Rational& d, long n_max) {
    if (n_max < 1) throw std::domain_error("sd_recurrence requires n >= 1");
    std::vector<Rational> s(static_cast<size_t>(n_max) + 1);
    s[1] = Rational(1);
    if (n_max >= 2) s[2] = d;
    Rational two_d_plus_1 = Rational(2) * d + Rational(1);
    for (long n = 3; n <= n_max; ++n) {
        // The division by n is exact for every rational d.
        s[n] = (two_d_plus_1 * Rational(2 * n - 3) * s[n - 1] -
                Rational(n - 3) * s[n - 2]) /
               Rational(n);
        assert(!d.is_integer() || s[n].is_integer());
    }
    return s;
}

Rational sd_recurrence(const Rational& d, long n) {
    return sd_recurrence_prefix(d, n)[static_cast<size_t>(n)];
}

Rational sbar_d(const Rational& d, long n) {
    if (n < 1) throw std::domain_error("sbar_d requires n >= 1");
    if (n == 1 || d.is_zero()) {
        // Definitional sum; at n = 1 the large triangle row is just {1}.
        if (n == 1) return Rational(1);
        Rational sum(0);
        for (long k = 0; k < n; ++k)
            sum += Rational(large_schroeder_entry(n, k)) * d.pow(k);
        return sum;
    }
    return (d + Rational(1)) / d * sd_recurrence(d, n);
}

Rational sd_reflection(const Rational& d, long n) {
    if (n < 2) throw std::domain_error("sd_reflection requires n >= 2");
    if (d == Rational(-1))
        throw std::domain_error("sd_reflection is undefined at d = -1");
    Rational reflected = sd_recurrence(-d - Rational(1), n);
    Rational factor = d / (d + Rational(1));
    return (n % 2 == 0 ? -factor : factor) * reflected;
}

Rational s_minus_half(long n) {
    if (n < 1) throw std::domain_error("s_minus_half requires n >= 1");
    if (n == 1) return Rational(1);
    if (n % 2 == 1) return Rational(0);
    long m = n / 2;
    Rational scale = Rational(1, 2).pow(2 * m - 1);
    Rational value = scale * Rational(catalan(m));
    return m % 2 == 0 ? value : -value;
}

std::pair<Integer, Integer> parity_split(long n) {
    if (n < 1) throw std::domain_error("parity_split requires n >= 1");
    Integer odd = 0, even = 0;
    for (long k = 0; k < n; ++k)
        (k % 2 == 1 ? odd : even) += small_schroeder_entry(n, k);
    return {odd, even};
}

}  // namespace schroeder
