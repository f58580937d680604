#include "schroeder/triangles.hpp"

#include <stdexcept>

namespace schroeder {

namespace {

// Entries are evaluated as exact rationals; a non-integral result means the
// formula was transcribed wrong, so fail hard instead of rounding.
Integer checked_integral(const Rational& v, const char* what) {
    if (!v.is_integer())
        throw std::logic_error(std::string(what) + " produced non-integer " + v.str());
    return v.to_integer();
}

}  // namespace

Integer small_schroeder_entry(long n, long k) {
    if (n < 1) throw std::domain_error("small_schroeder_entry requires n >= 1");
    if (n == 1) return k == 0 ? Integer(1) : Integer(0);
    if (k < 0 || k >= n) return 0;
    Rational v(binomial(n - 1, k) * binomial(n + k - 1, n), Integer(n - 1));
    return checked_integral(v, "small_schroeder_entry");
}

Integer narayana_entry(long n, long k) {
    if (n < 1) throw std::domain_error("narayana_entry requires n >= 1");
    if (n == 1) return k == 0 ? Integer(1) : Integer(0);
    if (k < 0 || k >= n) return 0;
    Rational v(binomial(n - 1, k - 1) * binomial(n - 1, k), Integer(n - 1));
    return checked_integral(v, "narayana_entry");
}

Integer large_schroeder_entry(long n, long k) {
    if (n < 2) throw std::domain_error("large_schroeder_entry requires n >= 2");
    if (k < 0 || k >= n) return 0;
    return small_schroeder_entry(n, k) + small_schroeder_entry(n, k + 1);
}

Integer catalan(long n) {
    if (n < 1) throw std::domain_error("catalan requires n >= 1");
    Rational v(binomial(2 * n - 2, n - 1), Integer(n));
    return checked_integral(v, "catalan");
}

Integer catalan_by_recurrence(long n) {
    if (n < 1) throw std::domain_error("catalan requires n >= 1");
    Rational c(1);
    for (long m = 2; m <= n; ++m)
        c *= Rational(2 * (2 * m - 3), m);
    return checked_integral(c, "catalan_by_recurrence");
}

TriangleRow triangle_row(TriangleKind kind, long n) {
    TriangleRow row;
    row.n = static_cast<int>(n);
    row.entries.reserve(static_cast<size_t>(n));
    for (long k = 0; k < n; ++k) {
        switch (kind) {
            case TriangleKind::small_schroeder:
                row.entries.push_back(small_schroeder_entry(n, k));
                break;
            case TriangleKind::narayana:
                row.entries.push_back(narayana_entry(n, k));
                break;
            case TriangleKind::large_schroeder:
                row.entries.push_back(large_schroeder_entry(n, k));
                break;
        }
    }
    return row;
}

Integer triangle_row_sum(TriangleKind kind, long n) {
    Integer sum = 0;
    for (const Integer& e : triangle_row(kind, n).entries) sum += e;
    return sum;
}

}  // namespace schroeder
