#include "schroeder/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "schroeder/asymptotics.hpp"
#include "schroeder/bfile.hpp"
#include "schroeder/bijections.hpp"
#include "schroeder/enumerate.hpp"
#include "schroeder/kernels.hpp"
#include "schroeder/sequences.hpp"
#include "schroeder/series.hpp"
#include "schroeder/triangles.hpp"
#include "schroeder/verify.hpp"

namespace schroeder {

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitBadInput = 2;

json rational_json(const Rational& q) {
    return json{{"num", q.numerator().get_str()}, {"den", q.denominator().get_str()}};
}

json integer_json(const Integer& z) { return json(z.get_str()); }

std::pair<long, long> parse_range(const std::string& text) {
    auto throw_bad = [&] {
        throw std::invalid_argument("bad range '" + text + "' (expected a or a..b)");
    };
    long lo = 0, hi = 0;
    try {
        if (auto dots = text.find(".."); dots != std::string::npos) {
            lo = std::stol(text.substr(0, dots));
            hi = std::stol(text.substr(dots + 2));
        } else {
            lo = hi = std::stol(text);
        }
    } catch (const std::exception&) {
        throw_bad();
    }
    if (lo < 1 || hi < lo) throw_bad();
    return {lo, hi};
}

/// Accepts "p/q", "p", or a plain decimal like "0.5" (converted exactly).
Rational parse_weight(const std::string& text) {
    if (auto dot = text.find('.'); dot != std::string::npos && text.find("..") == std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        long scale = static_cast<long>(text.size() - dot - 1);
        Rational mantissa = Rational::parse(digits);
        return mantissa / Rational(10).pow(scale);
    }
    return Rational::parse(text);
}

enum class Format { plain, csv, json_fmt };

Format parse_format(const std::string& name) {
    if (name == "plain") return Format::plain;
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json_fmt;
    throw std::invalid_argument("unknown format '" + name + "'");
}

struct CliConfig {
    std::string format = "plain";
    long max_objects = default_enumeration_bound;
    bool network_enabled = false;
};

// ---- seq ----

struct SeqArgs {
    std::string family = "sd";
    std::string d_text = "1";
    std::string range = "1..8";
    std::string method = "auto";
};

Rational seq_value(const SeqArgs& args, const Rational& d, long n,
                   const std::vector<Rational>& series_coeffs) {
    bool large = args.family == "sbar";
    if (args.method == "definition") {
        if (!large) return sd_definition(d, n);
        if (n == 1) return Rational(1);
        Rational sum(0);
        for (long k = 0; k < n; ++k)
            sum += Rational(large_schroeder_entry(n, k)) * d.pow(k);
        return sum;
    }
    if (args.method == "series") {
        Rational base = series_coeffs[static_cast<size_t>(n)];
        if (!large) return base;
        if (n == 1 || d.is_zero()) return sbar_d(d, n);
        return (d + Rational(1)) / d * base;
    }
    // recurrence and auto
    return large ? sbar_d(d, n) : sd_recurrence(d, n);
}

int cmd_seq(const SeqArgs& args, const CliConfig& cfg, std::ostream& out) {
    Rational d = Rational::parse(args.d_text);
    auto [lo, hi] = parse_range(args.range);
    if (args.family != "sd" && args.family != "sbar")
        throw std::invalid_argument("unknown family '" + args.family + "'");
    if (args.method != "definition" && args.method != "recurrence" &&
        args.method != "series" && args.method != "auto")
        throw std::invalid_argument("unknown method '" + args.method + "'");
    std::vector<Rational> series_coeffs;
    if (args.method == "series") series_coeffs = sd_series(d, hi).coefficients;

    Format format = parse_format(cfg.format);
    if (format == Format::json_fmt) {
        json doc{{"family", args.family},
                 {"d", rational_json(d)},
                 {"method", args.method},
                 {"values", json::array()}};
        for (long n = lo; n <= hi; ++n)
            doc["values"].push_back(
                json{{"n", n}, {"value", rational_json(seq_value(args, d, n, series_coeffs))}});
        out << doc.dump(2) << "\n";
        return kExitOk;
    }
    if (format == Format::csv) out << "n,value\n";
    for (long n = lo; n <= hi; ++n) {
        Rational v = seq_value(args, d, n, series_coeffs);
        out << n << (format == Format::csv ? "," : " ") << v.str() << "\n";
    }
    return kExitOk;
}

// ---- series ----

struct SeriesArgs {
    std::string kind = "sd";
    std::string d_text = "1";
    long n_max = 8;
};

int cmd_series(const SeriesArgs& args, const CliConfig& cfg, std::ostream& out) {
    Rational d = Rational::parse(args.d_text);
    SeriesPrefix prefix = args.kind == "sd"         ? sd_series(d, args.n_max)
                          : args.kind == "narayana" ? narayana_series(d, args.n_max)
                          : throw std::invalid_argument("unknown series kind '" + args.kind + "'");

    Format format = parse_format(cfg.format);
    if (format == Format::json_fmt) {
        json doc{{"kind", args.kind}, {"d", rational_json(d)}, {"coefficients", json::array()}};
        for (const Rational& c : prefix.coefficients)
            doc["coefficients"].push_back(rational_json(c));
        out << doc.dump(2) << "\n";
        return kExitOk;
    }
    if (format == Format::csv) out << "n,coefficient\n";
    for (size_t n = 0; n < prefix.coefficients.size(); ++n)
        out << n << (format == Format::csv ? "," : " ") << prefix.coefficients[n].str() << "\n";
    return kExitOk;
}

// ---- triangle ----

struct TriangleArgs {
    std::string kind = "small";
    std::string range = "1..6";
};

int cmd_triangle(const TriangleArgs& args, const CliConfig& cfg, std::ostream& out) {
    TriangleKind kind = args.kind == "small"      ? TriangleKind::small_schroeder
                        : args.kind == "narayana" ? TriangleKind::narayana
                        : args.kind == "large"    ? TriangleKind::large_schroeder
                        : throw std::invalid_argument("unknown triangle '" + args.kind + "'");
    auto [lo, hi] = parse_range(args.range);
    if (kind == TriangleKind::large_schroeder && lo < 2)
        throw std::invalid_argument("the large triangle starts at n = 2");

    Format format = parse_format(cfg.format);
    if (format == Format::json_fmt) {
        json doc{{"kind", args.kind}, {"rows", json::array()}};
        for (long n = lo; n <= hi; ++n) {
            json row{{"n", n}, {"entries", json::array()}};
            for (const Integer& e : triangle_row(kind, n).entries)
                row["entries"].push_back(integer_json(e));
            doc["rows"].push_back(std::move(row));
        }
        out << doc.dump(2) << "\n";
        return kExitOk;
    }
    if (format == Format::csv) out << "n,k,value\n";
    for (long n = lo; n <= hi; ++n) {
        TriangleRow row = triangle_row(kind, n);
        if (format == Format::csv) {
            for (long k = 0; k < n; ++k)
                out << n << "," << k << "," << row.entries[static_cast<size_t>(k)].get_str()
                    << "\n";
        } else {
            out << n << ":";
            for (const Integer& e : row.entries) out << " " << e.get_str();
            out << "\n";
        }
    }
    return kExitOk;
}

// ---- objects ----

struct ObjectsArgs {
    std::string kind = "small";
    long n = 4;
    bool emit = false;
};

PathClass path_class_from_name(const std::string& kind) {
    if (kind == "small") return PathClass::small_schroeder;
    if (kind == "large") return PathClass::large_schroeder;
    if (kind == "dyck") return PathClass::dyck;
    throw std::invalid_argument("unknown object kind '" + kind + "'");
}

int cmd_objects(const ObjectsArgs& args, const CliConfig& cfg, std::ostream& out) {
    Format format = parse_format(cfg.format);
    long bound = cfg.max_objects;
    if (args.kind == "trees") {
        if (args.emit) {
            visit_schroeder_trees(args.n, bound,
                                  [&](const PlaneTree& t) { out << encode_tree(t) << "\n"; });
            return kExitOk;
        }
        auto by_internal = tree_counts_by_internal_nodes(args.n, bound);
        Integer total = 0;
        for (const auto& [k, count] : by_internal) total += count;
        if (format == Format::json_fmt) {
            json doc{{"kind", "trees"}, {"n", args.n}, {"count", integer_json(total)},
                     {"by_internal_nodes", json::object()}};
            for (const auto& [k, count] : by_internal)
                doc["by_internal_nodes"][std::to_string(k)] = integer_json(count);
            out << doc.dump(2) << "\n";
        } else if (format == Format::csv) {
            out << "kind,n,count\ntrees," << args.n << "," << total.get_str() << "\n";
        } else {
            out << total.get_str() << "\n";
        }
        return kExitOk;
    }

    PathClass cls = path_class_from_name(args.kind);
    if (args.emit) {
        visit_paths(cls, args.n, bound,
                    [&](const std::vector<Step>& s) { out << encode_path(s) << "\n"; });
        return kExitOk;
    }
    auto by_ups = path_counts_by_ups(cls, args.n, bound);
    Integer total = 0;
    for (const auto& [k, count] : by_ups) total += count;
    if (format == Format::json_fmt) {
        json doc{{"kind", args.kind}, {"n", args.n}, {"count", integer_json(total)},
                 {"by_up_steps", json::object()}};
        for (const auto& [k, count] : by_ups)
            doc["by_up_steps"][std::to_string(k)] = integer_json(count);
        out << doc.dump(2) << "\n";
    } else if (format == Format::csv) {
        out << "kind,n,count\n" << args.kind << "," << args.n << "," << total.get_str() << "\n";
    } else {
        out << total.get_str() << "\n";
    }
    return kExitOk;
}

// ---- peaks ----

struct PeaksArgs {
    std::string range = "1..10";
};

int cmd_peaks(const PeaksArgs& args, const CliConfig& cfg, std::ostream& out) {
    auto [lo, hi] = parse_range(args.range);
    EnumerationOptions opt{cfg.max_objects};
    Format format = parse_format(cfg.format);
    if (format == Format::json_fmt) {
        json doc{{"rows", json::array()}};
        for (long n = lo; n <= hi; ++n) {
            auto [even, odd] = peak_parity_counts(n, opt);
            doc["rows"].push_back(json{{"n", n},
                                       {"even", integer_json(even)},
                                       {"odd", integer_json(odd)}});
        }
        out << doc.dump(2) << "\n";
        return kExitOk;
    }
    if (format == Format::csv) out << "n,even,odd\n";
    for (long n = lo; n <= hi; ++n) {
        auto [even, odd] = peak_parity_counts(n, opt);
        const char* sep = format == Format::csv ? "," : " ";
        out << n << sep << even.get_str() << sep << odd.get_str() << "\n";
    }
    return kExitOk;
}

// ---- bijections ----

struct BijectionsArgs {
    std::string name = "psi";
    long n = 4;
    bool emit_pairs = false;
};

int cmd_bijections(const BijectionsArgs& args, const CliConfig& cfg, std::ostream& out) {
    long bound = cfg.max_objects;
    long n = args.n;
    BijectionReport report{args.name, n, 0, 0, 0, 0};
    std::set<std::string> image;

    auto emit = [&](const std::string& from, const std::string& to) {
        if (args.emit_pairs) out << from << " -> " << to << "\n";
    };

    if (args.name == "psi" || args.name == "psi-prime") {
        bool clockwise = args.name == "psi-prime";
        visit_schroeder_trees(n, bound, [&](const PlaneTree& t) {
            ++report.domain_size;
            LatticePath p = clockwise ? tree_to_path_clockwise(t) : tree_to_path(t);
            PlaneTree back = clockwise ? path_to_tree_clockwise(p) : path_to_tree(p);
            if (encode_tree(back) != encode_tree(t)) ++report.round_trip_failures;
            if (path_statistics(p).ups != internal_count(t)) ++report.statistic_failures;
            image.insert(encode_path(p));
            emit(encode_tree(t), encode_path(p));
        });
    } else if (args.name == "alpha") {
        for (const auto& p : enumerate_paths(PathClass::small_schroeder, n, bound)) {
            PathStatistics st = path_statistics(p);
            if (st.valleys == 0 && st.flats == 0) continue;  // the excluded staircase
            ++report.domain_size;
            LatticePath q = toggle_first_valley_flat(p);
            long delta = path_statistics(q).ups - st.ups;
            if (delta != 1 && delta != -1) ++report.statistic_failures;
            if (toggle_first_valley_flat(q).steps != p.steps) ++report.round_trip_failures;
            image.insert(encode_path(q));
            emit(encode_path(p), encode_path(q));
        }
    } else if (args.name == "beta") {
        if (n < 2) throw std::invalid_argument("beta requires n >= 2");
        for (const auto& p : enumerate_paths(PathClass::large_schroeder, n, bound)) {
            if (is_small_schroeder(p.steps)) continue;
            ++report.domain_size;
            LatticePath q = lift_ground_flat(p);
            if (path_statistics(q).ups != path_statistics(p).ups + 1)
                ++report.statistic_failures;
            if (lower_to_ground_flat(q).steps != p.steps) ++report.round_trip_failures;
            image.insert(encode_path(q));
            emit(encode_path(p), encode_path(q));
        }
    } else if (args.name == "gamma") {
        for (const auto& p : enumerate_paths(PathClass::dyck, n, bound)) {
            ++report.domain_size;
            LatticePath q = dyck_conjugate(p);
            if (path_statistics(p).peaks + path_statistics(q).peaks != n)
                ++report.statistic_failures;
            image.insert(encode_path(q));
            emit(encode_path(p), encode_path(q));
        }
    } else if (args.name == "lemma") {
        report = full_binary_statistics_check(n, bound);
        report.name = "lemma";
    } else {
        throw std::invalid_argument("unknown bijection '" + args.name + "'");
    }

    if (args.name != "lemma") report.range_size = static_cast<long>(image.size());
    bool injective = args.name == "lemma" || report.range_size == report.domain_size;

    json doc{{"name", report.name},
             {"n", report.n},
             {"domain_size", report.domain_size},
             {"range_size", report.range_size},
             {"round_trip_failures", report.round_trip_failures},
             {"statistic_failures", report.statistic_failures},
             {"injective", injective},
             {"passed", report.passed() && injective}};
    out << doc.dump(2) << "\n";
    return report.passed() && injective ? kExitOk : kExitVerificationFailed;
}

// ---- asym ----

struct AsymArgs {
    std::string d_text = "1";
    long n = 100;
    bool compare_exact = false;
};

int cmd_asym(const AsymArgs& args, std::ostream& out) {
    Rational d = parse_weight(args.d_text);
    if (d.sign() <= 0) throw std::invalid_argument("asym requires d > 0");
    AsymptoticProfile p = build_profile(d.to_double());
    json doc{{"d", d.to_double()},
             {"s_char", p.s_char},
             {"phi_at_s", p.phi_at_s},
             {"phi_pp_at_s", p.phi_pp_at_s},
             {"rho", p.rho},
             {"prefactor", p.prefactor},
             {"characteristic_residual", characteristic_residual(p)},
             {"n", args.n},
             {"estimate", asymptotic_estimate(d.to_double(), args.n)},
             {"estimate_log", asymptotic_estimate_log(d.to_double(), args.n)}};
    if (args.compare_exact) {
        Rational exact = sd_recurrence(d, args.n);
        doc["exact"] = rational_json(exact);
        doc["exact_double"] = exact.to_double();
        doc["relative_error"] = estimate_relative_error(d, args.n);
        doc["growth_ratio"] = empirical_growth_rate(d, args.n);
    }
    out << doc.dump(2) << "\n";
    return kExitOk;
}

// ---- oeis-check ----

struct OeisArgs {
    std::string sequence_id;
    std::string bfile_path;
    bool fetch = false;
    std::string family = "sd";
    std::string d_text = "1";
    long offset_shift = 0;
    long n_max = 8;
};

int cmd_oeis_check(const OeisArgs& args, const CliConfig& cfg, std::ostream& out,
                   std::ostream& err) {
    if (!is_valid_sequence_id(args.sequence_id))
        throw std::invalid_argument("malformed OEIS id '" + args.sequence_id + "'");
    if (args.fetch != args.bfile_path.empty())
        throw std::invalid_argument("exactly one of --bfile and --fetch is required");

    std::string text;
    if (args.fetch) {
        text = fetch_bfile(args.sequence_id, cfg.network_enabled);
    } else {
        std::ifstream in(args.bfile_path, std::ios::binary);
        if (!in) throw std::invalid_argument("cannot open b-file '" + args.bfile_path + "'");
        std::ostringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    }
    BFile bfile = parse_bfile(text, args.sequence_id);

    Rational d = Rational::parse(args.d_text);
    std::vector<Integer> values;
    for (long n = 1; n <= args.n_max; ++n) {
        Rational v = args.family == "sbar" ? sbar_d(d, n) : sd_recurrence(d, n);
        if (!v.is_integer())
            throw std::invalid_argument("sequence value at n = " + std::to_string(n) +
                                        " is not an integer; cannot compare to a b-file");
        values.push_back(v.to_integer());
    }
    ComparisonReport report = compare_sequence(values, 1, bfile, args.offset_shift);

    json doc{{"sequence", args.sequence_id},
             {"family", args.family},
             {"d", rational_json(d)},
             {"offset_shift", args.offset_shift},
             {"compared", report.compared},
             {"mismatches", json::array()}};
    for (const auto& m : report.mismatches)
        doc["mismatches"].push_back(json{{"n", m.index},
                                         {"expected", integer_json(m.expected)},
                                         {"actual", integer_json(m.actual)}});
    out << doc.dump(2) << "\n";
    if (report.empty_overlap()) err << "warning: no overlapping indices\n";
    return report.mismatches.empty() ? kExitOk : kExitVerificationFailed;
}

// ---- verify ----

struct VerifyArgs {
    std::string suite = "all";
    long n_max = 0;
    std::string d_grid;
};

int cmd_verify(const VerifyArgs& args, const CliConfig& cfg, std::ostream& out) {
    VerifyOptions opt;
    opt.n_max = args.n_max;
    opt.bound = cfg.max_objects;
    if (!args.d_grid.empty()) {
        std::istringstream grid(args.d_grid);
        std::string token;
        while (std::getline(grid, token, ','))
            if (!token.empty()) opt.d_grid.push_back(Rational::parse(token));
    }
    auto results = run_suite(suite_from_name(args.suite), opt);
    long failures = 0;
    json doc{{"suite", args.suite}, {"checks", json::array()}};
    for (const auto& r : results) {
        json entry{{"name", r.name}, {"passed", r.passed}};
        if (!r.passed) {
            entry["counterexample"] = r.detail;
            ++failures;
        }
        doc["checks"].push_back(std::move(entry));
    }
    doc["failures"] = failures;
    out << doc.dump(2) << "\n";
    return failures == 0 ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"weighted Schroeder number toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    CliConfig cfg;
    app.add_option("--format", cfg.format, "Output format: plain, csv, or json");
    app.add_option("--max-objects", cfg.max_objects,
                   "Enumeration size bound override (default 12)");
    app.add_flag("--enable-network", cfg.network_enabled, "Allow OEIS fetches");

    SeqArgs seq_args;
    auto* seq = app.add_subcommand("seq", "Weighted Schroeder sequence values");
    seq->add_option("--family", seq_args.family, "sd or sbar");
    seq->add_option("--d", seq_args.d_text, "Weight, as p/q or p")->required();
    seq->add_option("--n", seq_args.range, "Index range a..b (inclusive)")->required();
    seq->add_option("--method", seq_args.method, "definition, recurrence, series, or auto");

    SeriesArgs series_args;
    auto* series = app.add_subcommand("series", "Generating-function coefficients");
    series->add_option("--kind", series_args.kind, "sd or narayana");
    series->add_option("--d", series_args.d_text, "Weight, as p/q or p")->required();
    series->add_option("--n-max", series_args.n_max, "Highest coefficient")->required();

    TriangleArgs triangle_args;
    auto* triangle = app.add_subcommand("triangle", "Triangle rows");
    triangle->add_option("--kind", triangle_args.kind, "small, narayana, or large");
    triangle->add_option("--n", triangle_args.range, "Row range a..b")->required();

    ObjectsArgs objects_args;
    auto* objects = app.add_subcommand("objects", "Enumerate trees and paths");
    objects->add_option("--kind", objects_args.kind, "trees, small, large, or dyck");
    objects->add_option("--n", objects_args.n, "Size parameter")->required();
    objects->add_flag("--emit", objects_args.emit, "Print one canonical encoding per line");

    PeaksArgs peaks_args;
    auto* peaks = app.add_subcommand("peaks", "Dyck paths by peak parity");
    peaks->add_option("--n", peaks_args.range, "Size range a..b")->required();

    BijectionsArgs bijections_args;
    auto* bijections = app.add_subcommand("bijections", "Verify a bijection exhaustively");
    bijections->add_option("--name", bijections_args.name,
                           "psi, psi-prime, alpha, beta, gamma, or lemma");
    bijections->add_option("--n", bijections_args.n, "Object size")->required();
    bijections->add_flag("--emit-pairs", bijections_args.emit_pairs,
                         "Also print input -> output lines");

    AsymArgs asym_args;
    auto* asym = app.add_subcommand("asym", "Asymptotic profile and estimate");
    asym->add_option("--d", asym_args.d_text, "Weight > 0")->required();
    asym->add_option("--n", asym_args.n, "Index for the estimate")->required();
    asym->add_flag("--compare-exact", asym_args.compare_exact,
                   "Also compute the exact value and relative error");

    OeisArgs oeis_args;
    auto* oeis = app.add_subcommand("oeis-check", "Cross-check a sequence against a b-file");
    oeis->add_option("--seq", oeis_args.sequence_id, "OEIS id, e.g. A001003")->required();
    oeis->add_option("--bfile", oeis_args.bfile_path, "Path to a local b-file");
    oeis->add_flag("--fetch", oeis_args.fetch, "Download the b-file (needs --enable-network)");
    oeis->add_option("--family", oeis_args.family, "sd or sbar");
    oeis->add_option("--d", oeis_args.d_text, "Weight, as p/q or p");
    oeis->add_option("--offset-shift", oeis_args.offset_shift,
                     "b-file index of our n = 1 term, minus 1");
    oeis->add_option("--n-max", oeis_args.n_max, "Compare n = 1..n_max");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Run identity verification suites");
    verify->add_option("--suite", verify_args.suite,
                       "identities, bijections, colored, series, triangles, parity, "
                       "asymptotics, or all");
    verify->add_option("--n-max", verify_args.n_max, "Override per-check size limits");
    verify->add_option("--d-grid", verify_args.d_grid, "Comma-separated weights");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitBadInput;
    }

    try {
        if (seq->parsed()) return cmd_seq(seq_args, cfg, out);
        if (series->parsed()) return cmd_series(series_args, cfg, out);
        if (triangle->parsed()) return cmd_triangle(triangle_args, cfg, out);
        if (objects->parsed()) return cmd_objects(objects_args, cfg, out);
        if (peaks->parsed()) return cmd_peaks(peaks_args, cfg, out);
        if (bijections->parsed()) return cmd_bijections(bijections_args, cfg, out);
        if (asym->parsed()) return cmd_asym(asym_args, out);
        if (oeis->parsed()) return cmd_oeis_check(oeis_args, cfg, out, err);
        if (verify->parsed()) return cmd_verify(verify_args, cfg, out);
    } catch (const NetworkDisabledError& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const FetchError& e) {
        err << "error: " << e.what() << "\n";
        return kExitVerificationFailed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    err << "no subcommand given\n";
    return kExitBadInput;
}

}  // namespace schroeder
