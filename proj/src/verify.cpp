#include "schroeder/verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <tuple>

#include "schroeder/asymptotics.hpp"
#include "schroeder/bijections.hpp"
#include "schroeder/fixtures.hpp"
#include "schroeder/kernels.hpp"
#include "schroeder/sequences.hpp"
#include "schroeder/series.hpp"
#include "schroeder/triangles.hpp"

namespace schroeder {

Suite suite_from_name(const std::string& name) {
    if (name == "identities") return Suite::identities;
    if (name == "bijections") return Suite::bijections;
    if (name == "colored") return Suite::colored;
    if (name == "series") return Suite::series;
    if (name == "triangles") return Suite::triangles;
    if (name == "parity") return Suite::parity;
    if (name == "asymptotics") return Suite::asymptotics;
    if (name == "all") return Suite::all;
    throw std::invalid_argument("unknown suite '" + name + "'");
}

std::string suite_name(Suite suite) {
    switch (suite) {
        case Suite::identities: return "identities";
        case Suite::bijections: return "bijections";
        case Suite::colored: return "colored";
        case Suite::series: return "series";
        case Suite::triangles: return "triangles";
        case Suite::parity: return "parity";
        case Suite::asymptotics: return "asymptotics";
        case Suite::all: return "all";
    }
    return "?";
}

const std::vector<Rational>& default_d_grid() {
    static const std::vector<Rational> grid = {
        Rational(-3),    Rational(-2), Rational(-3, 2), Rational(-1),
        Rational(-1, 2), Rational(0),  Rational(1, 3),  Rational(1),
        Rational(2),     Rational(3),  Rational(7, 2),
    };
    return grid;
}

namespace {

// Collects one CheckResult per named check; the body reports the first
// counterexample through `fail` and is cut short once it has failed.
class Checker {
public:
    explicit Checker(std::vector<CheckResult>& out) : out_(out) {}

    template <class Body>
    void check(const std::string& name, Body&& body) {
        CheckResult result{name, true, ""};
        bool failed = false;
        auto fail = [&](const std::string& detail) {
            if (!failed) {
                result.passed = false;
                result.detail = detail;
                failed = true;
            }
        };
        try {
            body(fail);
        } catch (const std::exception& e) {
            fail(std::string("exception: ") + e.what());
        }
        out_.push_back(std::move(result));
    }

private:
    std::vector<CheckResult>& out_;
};

std::string at(const char* var, long value) {
    std::ostringstream os;
    os << var << " = " << value;
    return os.str();
}

std::string at(const Rational& d, long n) {
    std::ostringstream os;
    os << "d = " << d.str() << ", n = " << n;
    return os.str();
}

struct Limits {
    long n_max;
    std::vector<Rational> grid;
    long bound;

    long capped(long fallback) const { return n_max > 0 ? n_max : fallback; }
};

void identities_suite(Checker& c, const Limits& lim) {
    c.check("definition-vs-recurrence", [&](auto fail) {
        long n_max = lim.capped(30);
        for (const Rational& d : lim.grid) {
            auto rec = sd_recurrence_prefix(d, n_max);
            for (long n = 1; n <= n_max; ++n)
                if (sd_definition(d, n) != rec[static_cast<size_t>(n)])
                    return fail(at(d, n));
        }
    });

    c.check("minus-half-closed-form", [&](auto fail) {
        long n_max = lim.capped(16);
        auto rec = sd_recurrence_prefix(Rational(-1, 2), n_max);
        for (long n = 1; n <= n_max; ++n)
            if (s_minus_half(n) != rec[static_cast<size_t>(n)]) return fail(at("n", n));
    });

    c.check("parity-split", [&](auto fail) {
        long n_max = lim.capped(12);
        for (long n = 1; n <= n_max; ++n) {
            auto [odd, even] = parity_split(n);
            Integer rhs = even + (n % 2 == 0 ? 1 : -1);
            if (odd != rhs) return fail(at("n", n));
        }
    });

    c.check("small-schroeder-odd", [&](auto fail) {
        long n_max = lim.capped(40);
        auto rec = sd_recurrence_prefix(Rational(1), n_max);
        for (long n = 1; n <= n_max; ++n)
            if (mpz_even_p(rec[static_cast<size_t>(n)].to_integer().get_mpz_t()))
                return fail(at("n", n));
        for (long d : {1L, 3L, 5L}) {
            auto seq = sd_recurrence_prefix(Rational(d), std::min(n_max, 20L));
            for (long n = 1; n < static_cast<long>(seq.size()); ++n)
                if (mpz_even_p(seq[static_cast<size_t>(n)].to_integer().get_mpz_t()))
                    return fail(at(Rational(d), n));
        }
    });

    c.check("large-schroeder-mod-4", [&](auto fail) {
        long n_max = lim.capped(40);
        auto rec = sd_recurrence_prefix(Rational(1), n_max);
        for (long n = 2; n <= n_max; ++n) {
            Integer large = 2 * rec[static_cast<size_t>(n)].to_integer();
            if (large % 4 != 2) return fail(at("n", n));
        }
    });

    c.check("reflection", [&](auto fail) {
        long n_max = lim.capped(30);
        for (const Rational& d : lim.grid) {
            if (d == Rational(-1)) continue;
            auto rec = sd_recurrence_prefix(d, n_max);
            for (long n = 2; n <= n_max; ++n)
                if (sd_reflection(d, n) != rec[static_cast<size_t>(n)])
                    return fail(at(d, n));
        }
    });

    c.check("large-small-ratio", [&](auto fail) {
        long n_max = lim.capped(30);
        for (const Rational& d : lim.grid) {
            for (long n = 2; n <= std::min(n_max, 20L); ++n) {
                Rational by_rows(0);
                for (long k = 0; k < n; ++k)
                    by_rows += Rational(large_schroeder_entry(n, k)) * d.pow(k);
                if (sbar_d(d, n) != by_rows) return fail(at(d, n));
            }
        }
    });

    c.check("large-reflection", [&](auto fail) {
        long n_max = lim.capped(30);
        for (const Rational& d : lim.grid) {
            if (d.is_zero() || d == Rational(-1)) continue;
            for (long n = 2; n <= n_max; ++n) {
                Rational rhs = sd_recurrence(-d - Rational(1), n);
                if (n % 2 == 0) rhs = -rhs;
                if (sbar_d(d, n) != rhs) return fail(at(d, n));
            }
        }
    });

    EnumerationOptions opt{lim.bound};
    long brute_max = std::min({lim.capped(8), 10L, lim.bound});

    c.check("valley-weighted-equals-sd", [&](auto fail) {
        for (const Rational& d : lim.grid)
            for (long n = 1; n <= brute_max; ++n)
                if (valley_weighted_catalan(d, d + Rational(1), n, opt) !=
                    sd_recurrence(d, n))
                    return fail(at(d, n));
    });

    c.check("valley-weighted-general", [&](auto fail) {
        const std::pair<Rational, Rational> pairs[] = {
            {Rational(1), Rational(2)},  {Rational(2), Rational(1)},
            {Rational(1), Rational(3)},  {Rational(3), Rational(1)},
            {Rational(-1), Rational(1)}, {Rational(2), Rational(5)},
        };
        for (const auto& [a, b] : pairs) {
            Rational spread = b - a;
            for (long n = 1; n <= brute_max; ++n) {
                Rational rhs = spread.pow(n - 1) * sd_recurrence(a / spread, n);
                if (valley_weighted_catalan(a, b, n, opt) != rhs)
                    return fail("a = " + a.str() + ", b = " + b.str() +
                                ", n = " + std::to_string(n));
            }
        }
    });

    c.check("flat-colorings", [&](auto fail) {
        for (long m : {1L, 2L, 3L}) {
            for (long n = 1; n <= std::min(brute_max, 7L); ++n) {
                Rational expected = Rational(m).pow(n - 1) * sd_recurrence(Rational(1, m), n);
                if (flat_weighted_small_count(m, n, opt) != expected)
                    return fail("m = " + std::to_string(m) + ", n = " + std::to_string(n));
                if (valley_weighted_catalan(Rational(1), Rational(m + 1), n, opt) != expected)
                    return fail("m = " + std::to_string(m) + ", n = " + std::to_string(n) +
                                " (valley form)");
            }
        }
    });

    c.check("valley-equals-peak-weights", [&](auto fail) {
        const std::pair<Rational, Rational> pairs[] = {
            {Rational(1), Rational(1)},  {Rational(2), Rational(3)},
            {Rational(-1), Rational(1)}, {Rational(1, 2), Rational(-2)},
            {Rational(0), Rational(2)},
        };
        for (const auto& [a, b] : pairs)
            for (long n = 1; n <= brute_max; ++n)
                if (valley_weighted_catalan(a, b, n, opt) !=
                    peak_weighted_catalan(a, b, n, opt))
                    return fail("a = " + a.str() + ", b = " + b.str() +
                                ", n = " + std::to_string(n));
    });
}

void triangles_suite(Checker& c, const Limits& lim) {
    long n_max = lim.capped(12);

    c.check("row-sums-are-small-schroeder", [&](auto fail) {
        auto rec = sd_recurrence_prefix(Rational(1), n_max);
        for (long n = 1; n <= n_max; ++n)
            if (triangle_row_sum(TriangleKind::small_schroeder, n) !=
                rec[static_cast<size_t>(n)].to_integer())
                return fail(at("n", n));
    });

    c.check("last-column-is-catalan", [&](auto fail) {
        for (long n = 1; n <= n_max; ++n)
            if (small_schroeder_entry(n, n - 1) != catalan(n)) return fail(at("n", n));
    });

    c.check("catalan-closed-vs-recurrence", [&](auto fail) {
        for (long n = 1; n <= 200; ++n)
            if (catalan(n) != catalan_by_recurrence(n)) return fail(at("n", n));
    });

    c.check("large-rows-double-small", [&](auto fail) {
        for (long n = 2; n <= n_max; ++n)
            if (triangle_row_sum(TriangleKind::large_schroeder, n) !=
                2 * triangle_row_sum(TriangleKind::small_schroeder, n))
                return fail(at("n", n));
    });

    c.check("narayana-rows-sum-to-catalan", [&](auto fail) {
        for (long n = 1; n <= n_max; ++n)
            if (triangle_row_sum(TriangleKind::narayana, n) != catalan(n))
                return fail(at("n", n));
    });

    c.check("binomial-symmetry-and-pascal", [&](auto fail) {
        for (long n = 0; n <= 64; ++n) {
            for (long k = 0; k <= n; ++k) {
                if (binomial(n, k) != binomial(n, n - k)) return fail(at("n", n));
                if (n >= 1 &&
                    binomial(n, k) != binomial(n - 1, k - 1) + binomial(n - 1, k))
                    return fail(at("n", n));
            }
        }
    });

    c.check("published-table-rows", [&](auto fail) {
        const auto& small = fixtures::small_schroeder_triangle();
        const auto& narayana = fixtures::narayana_triangle();
        for (long n = 1; n <= 6; ++n) {
            if (triangle_row(TriangleKind::small_schroeder, n).entries !=
                small[static_cast<size_t>(n - 1)])
                return fail(at("n", n));
            if (triangle_row(TriangleKind::narayana, n).entries !=
                narayana[static_cast<size_t>(n - 1)])
                return fail(at("n", n));
        }
    });
}

void series_suite(Checker& c, const Limits& lim) {
    long n_max = lim.capped(40);

    c.check("three-way-agreement", [&](auto fail) {
        for (const Rational& d : lim.grid) {
            auto rec = sd_recurrence_prefix(d, n_max);
            auto ser = sd_series(d, n_max);
            for (long n = 1; n <= n_max; ++n) {
                if (ser.coefficients[static_cast<size_t>(n)] != rec[static_cast<size_t>(n)])
                    return fail(at(d, n) + " (series vs recurrence)");
                if (sd_definition(d, n) != rec[static_cast<size_t>(n)])
                    return fail(at(d, n) + " (definition vs recurrence)");
            }
        }
    });

    c.check("functional-equation-residuals", [&](auto fail) {
        for (const Rational& d : lim.grid) {
            for (const auto& series :
                 {sd_series(d, std::min(n_max, 25L)), narayana_series(d, std::min(n_max, 25L))}) {
                for (const Rational& r : functional_equation_residual(series))
                    if (!r.is_zero())
                        return fail("d = " + d.str() + ", kind " +
                                    (series.kind == SeriesKind::schroeder_y ? "y" : "C"));
            }
        }
    });

    c.check("narayana-row-sums", [&](auto fail) {
        long cap = std::min(n_max, 20L);
        for (const Rational& d : lim.grid) {
            auto ser = narayana_series(d, cap);
            for (long n = 1; n <= cap; ++n) {
                Rational by_rows(0);
                for (long k = 0; k < n; ++k)
                    by_rows += Rational(narayana_entry(n, k)) * d.pow(k);
                if (ser.coefficients[static_cast<size_t>(n)] != by_rows)
                    return fail(at(d, n));
            }
        }
    });

    c.check("catalan-gf-relation", [&](auto fail) {
        if (!catalan_gf_relation_check(std::min(n_max, 12L))) fail("relation broken");
    });

    c.check("minus-half-narayana-chain", [&](auto fail) {
        long cap = std::min(n_max, 20L);
        auto ser = narayana_series(Rational(-1), cap);
        for (long n = 1; n <= cap; ++n)
            if (Rational(2).pow(n - 1) * s_minus_half(n) !=
                ser.coefficients[static_cast<size_t>(n)])
                return fail(at("n", n));
    });
}

void bijections_suite(Checker& c, const Limits& lim) {
    long n_max = std::min(lim.capped(7), lim.bound);
    long bound = lim.bound;

    c.check("walks-biject-by-strata", [&](auto fail) {
        for (long n = 1; n <= n_max; ++n) {
            std::map<long, Integer> by_ups_ccw, by_ups_cw;
            std::set<std::string> seen_ccw, seen_cw;
            long trees = 0;
            bool bad = false;
            visit_schroeder_trees(n, bound, [&](const PlaneTree& t) {
                if (bad) return;
                ++trees;
                LatticePath ccw = tree_to_path(t);
                LatticePath cw = tree_to_path_clockwise(t);
                long k = internal_count(t);
                PathStatistics sc = path_statistics(ccw), sw = path_statistics(cw);
                if (sc.ups != k || sw.ups != k) { bad = true; return; }
                if (encode_tree(path_to_tree(ccw)) != encode_tree(t)) { bad = true; return; }
                if (encode_tree(path_to_tree_clockwise(cw)) != encode_tree(t)) { bad = true; return; }
                seen_ccw.insert(encode_path(ccw));
                seen_cw.insert(encode_path(cw));
                ++by_ups_ccw[sc.ups];
                ++by_ups_cw[sw.ups];
            });
            if (bad) return fail(at("n", n));
            if (static_cast<long>(seen_ccw.size()) != trees ||
                static_cast<long>(seen_cw.size()) != trees)
                return fail(at("n", n) + " (not injective)");
            for (long k = 0; k < n; ++k) {
                Integer expected = small_schroeder_entry(n, k);
                auto strataccw = by_ups_ccw.count(k) ? by_ups_ccw[k] : Integer(0);
                auto stratacw = by_ups_cw.count(k) ? by_ups_cw[k] : Integer(0);
                if (strataccw != expected || stratacw != expected)
                    return fail(at("n", n) + ", k = " + std::to_string(k));
            }
        }
    });

    c.check("valley-flat-involution", [&](auto fail) {
        for (long n = 2; n <= n_max; ++n) {
            std::vector<Step> staircase;
            for (long i = 0; i < n - 1; ++i) staircase.push_back(Step::up);
            for (long i = 0; i < n - 1; ++i) staircase.push_back(Step::down);
            for (const auto& p : enumerate_paths(PathClass::small_schroeder, n, bound)) {
                if (p.steps == staircase) {
                    try {
                        toggle_first_valley_flat(p);
                        return fail(at("n", n) + " (staircase accepted)");
                    } catch (const std::domain_error&) {
                    }
                    continue;
                }
                LatticePath q = toggle_first_valley_flat(p);
                long du = path_statistics(q).ups - path_statistics(p).ups;
                if (du != 1 && du != -1) return fail(at("n", n) + " " + encode_path(p));
                if (toggle_first_valley_flat(q).steps != p.steps)
                    return fail(at("n", n) + " " + encode_path(p) + " (not an involution)");
            }
        }
    });

    c.check("ground-flat-bijection", [&](auto fail) {
        for (long n = 2; n <= n_max; ++n) {
            std::set<std::string> image;
            long strictly_large = 0;
            for (const auto& p : enumerate_paths(PathClass::large_schroeder, n, bound)) {
                if (is_small_schroeder(p.steps)) continue;
                ++strictly_large;
                LatticePath q = lift_ground_flat(p);
                if (path_statistics(q).ups != path_statistics(p).ups + 1)
                    return fail(at("n", n) + " " + encode_path(p));
                if (lower_to_ground_flat(q).steps != p.steps)
                    return fail(at("n", n) + " " + encode_path(p) + " (round trip)");
                image.insert(encode_path(q));
            }
            auto small = enumerate_paths(PathClass::small_schroeder, n, bound);
            if (image.size() != small.size() || strictly_large != static_cast<long>(small.size()))
                return fail(at("n", n) + " (image size)");
            for (const auto& q : small)
                if (lift_ground_flat(lower_to_ground_flat(q)).steps != q.steps)
                    return fail(at("n", n) + " " + encode_path(q) + " (reverse round trip)");
        }
    });

    c.check("dyck-conjugation", [&](auto fail) {
        for (long n = 2; n <= n_max; ++n) {
            std::set<std::string> image;
            long total = 0;
            for (const auto& p : enumerate_paths(PathClass::dyck, n, bound)) {
                ++total;
                LatticePath q = dyck_conjugate(p);
                image.insert(encode_path(q));
                if (path_statistics(p).peaks + path_statistics(q).peaks != n)
                    return fail(at("n", n) + " " + encode_path(p));
            }
            if (static_cast<long>(image.size()) != total)
                return fail(at("n", n) + " (not a permutation)");
        }
    });

    c.check("full-binary-statistics", [&](auto fail) {
        for (long n = 2; n <= n_max; ++n) {
            BijectionReport report = full_binary_statistics_check(n, bound);
            if (!report.passed() || report.domain_size != catalan(n))
                return fail(at("n", n));
        }
    });
}

void colored_suite(Checker& c, const Limits& lim) {
    EnumerationOptions opt{lim.bound};
    const std::tuple<long, long, long> grid[] = {
        {1, 1, 1}, {1, 2, 1}, {2, 2, 1}, {3, 1, 1}, {2, 2, 2},
    };

    c.check("formula-vs-explicit-colorings", [&](auto fail) {
        long n_max = std::min({lim.capped(5), 6L, lim.bound});
        for (const auto& [k, l, p] : grid)
            for (long n = 1; n <= n_max; ++n)
                if (colored_dyck_count(k, l, p, n, opt) !=
                    Rational(colored_dyck_count_explicit(k, l, p, n, opt)))
                    return fail("(k,l,p) = (" + std::to_string(k) + "," + std::to_string(l) +
                                "," + std::to_string(p) + "), n = " + std::to_string(n));
    });

    c.check("formula-vs-weighted-sequence", [&](auto fail) {
        long n_max = std::min(lim.capped(8), lim.bound);
        for (const auto& [k, l, p] : grid) {
            Rational weight(k * l - p, p);
            for (long n = 1; n <= n_max; ++n)
                if (colored_dyck_count(k, l, p, n, opt) !=
                    Rational(p).pow(n - 1) * sd_recurrence(weight, n))
                    return fail("(k,l,p) = (" + std::to_string(k) + "," + std::to_string(l) +
                                "," + std::to_string(p) + "), n = " + std::to_string(n));
        }
    });

    c.check("published-special-cases", [&](auto fail) {
        long n_max = std::min(lim.capped(8), lim.bound);
        for (long n = 1; n <= n_max; ++n) {
            if (colored_dyck_count(1, 2, 1, n, opt) != sd_recurrence(Rational(1), n))
                return fail(at("n", n) + " (one up, two down types)");
            if (colored_dyck_count(3, 1, 1, n, opt) != sd_recurrence(Rational(2), n))
                return fail(at("n", n) + " (three up types)");
            if (colored_dyck_count(2, 2, 1, n, opt) != sd_recurrence(Rational(3), n))
                return fail(at("n", n) + " (two by two types)");
        }
    });
}

void parity_suite(Checker& c, const Limits& lim) {
    EnumerationOptions opt{lim.bound};

    c.check("peak-parity-table", [&](auto fail) {
        const auto& rows = fixtures::peak_parity_rows();
        long n_max = std::min({lim.capped(10), static_cast<long>(rows.size()), lim.bound});
        for (long n = 1; n <= n_max; ++n) {
            auto [even, odd] = peak_parity_counts(n, opt);
            const auto& expected = rows[static_cast<size_t>(n - 1)];
            if (even != expected.first || odd != expected.second) return fail(at("n", n));
        }
    });

    c.check("peak-parity-weighted-identity", [&](auto fail) {
        long n_max = std::min(lim.capped(12), lim.bound);
        for (long n = 1; n <= n_max; ++n) {
            auto [even, odd] = peak_parity_counts(n, opt);
            Rational diff = Rational(even) - Rational(odd);
            if (diff != Rational(2).pow(n - 1) * s_minus_half(n))
                return fail(at("n", n) + " (vs weighted sequence)");
            if (diff != peak_weighted_catalan(Rational(-1), Rational(1), n, opt))
                return fail(at("n", n) + " (vs peak weights)");
        }
    });
}

void asymptotics_suite(Checker& c, const Limits& lim) {
    (void)lim;

    c.check("characteristic-residual", [&](auto fail) {
        for (double d : {0.1, 0.5, 1.0, 2.0, 10.0})
            if (characteristic_residual(build_profile(d)) >= 1e-12)
                fail("d = " + std::to_string(d));
    });

    c.check("growth-rate-bounds", [&](auto fail) {
        for (double e = -3; e <= 3; e += 0.25) {
            double d = std::pow(10.0, e);
            double rho = build_profile(d).rho;
            if (!(4 * d + 1 < rho && rho < 4 * d + 2)) return fail("d = " + std::to_string(d));
        }
    });

    c.check("prefactor-consistency", [&](auto fail) {
        for (double d : {0.5, 1.0, 2.0}) {
            AsymptoticProfile p = build_profile(d);
            double via_phi = std::sqrt(p.phi_at_s / (2 * p.phi_pp_at_s)) / std::sqrt(M_PI);
            if (std::fabs(via_phi - p.prefactor) > 1e-12 * p.prefactor)
                return fail("d = " + std::to_string(d) + " (two prefactor routes)");
            for (long n : {10L, 50L, 90L}) {
                double scaled = asymptotic_estimate(d, n) * std::pow(n, 1.5) /
                                std::pow(p.rho, static_cast<double>(n));
                if (std::fabs(scaled - p.prefactor) > 1e-9 * p.prefactor)
                    return fail("d = " + std::to_string(d) + ", n = " + std::to_string(n));
            }
        }
    });

    c.check("growth-rate-convergence", [&](auto fail) {
        for (const Rational& d : {Rational(1, 2), Rational(1), Rational(2)}) {
            AsymptoticProfile p = build_profile(d.to_double());
            double ratio = empirical_growth_rate(d, 1000);
            if (std::fabs(ratio - p.rho) / p.rho >= 1e-2)
                return fail("d = " + d.str());
        }
        AsymptoticProfile p1 = build_profile(1.0);
        double early = std::fabs(empirical_growth_rate(Rational(1), 500) - p1.rho);
        double late = std::fabs(empirical_growth_rate(Rational(1), 2000) - p1.rho);
        if (!(late < early)) fail("d = 1 (no monotone approach)");
    });

    c.check("estimate-error", [&](auto fail) {
        for (const Rational& d : {Rational(1, 2), Rational(1), Rational(2)}) {
            double at100 = estimate_relative_error(d, 100);
            double at400 = estimate_relative_error(d, 400);
            if (at100 >= 0.02) return fail("d = " + d.str() + " (2% at n = 100)");
            if (!(at400 < at100)) return fail("d = " + d.str() + " (error not shrinking)");
        }
    });
}

}  // namespace

std::vector<CheckResult> run_suite(Suite suite, const VerifyOptions& opt) {
    std::vector<CheckResult> results;
    Checker checker(results);
    Limits lim{opt.n_max, opt.d_grid.empty() ? default_d_grid() : opt.d_grid, opt.bound};
    switch (suite) {
        case Suite::identities: identities_suite(checker, lim); break;
        case Suite::bijections: bijections_suite(checker, lim); break;
        case Suite::colored: colored_suite(checker, lim); break;
        case Suite::series: series_suite(checker, lim); break;
        case Suite::triangles: triangles_suite(checker, lim); break;
        case Suite::parity: parity_suite(checker, lim); break;
        case Suite::asymptotics: asymptotics_suite(checker, lim); break;
        case Suite::all:
            for (Suite s : {Suite::triangles, Suite::identities, Suite::series,
                            Suite::bijections, Suite::colored, Suite::parity,
                            Suite::asymptotics}) {
                auto part = run_suite(s, opt);
                for (auto& r : part) {
                    r.name = suite_name(s) + "/" + r.name;
                    results.push_back(std::move(r));
                }
            }
            break;
    }
    return results;
}

}  // namespace schroeder
