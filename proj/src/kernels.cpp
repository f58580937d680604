#include "schroeder/kernels.hpp"

#include <omp.h>

#include <stdexcept>
#include <vector>

namespace schroeder {

namespace {

// Enumeration state without the step buffer: heights, widths, and the
// adjacency statistics accumulated so far. Cheap to copy, so prefixes can be
// handed to worker threads wholesale.
struct PartialPath {
    long height = 0;
    long width_left = 0;
    long steps_taken = 0;
    bool has_last = false;
    Step last = Step::up;
    PathStatistics stats;
};

PartialPath initial_state(long n) {
    PartialPath st;
    st.width_left = 2 * (n - 1);
    return st;
}

PartialPath advance(PartialPath st, Step s) {
    switch (s) {
        case Step::up:
            ++st.height;
            st.width_left -= 1;
            ++st.stats.ups;
            break;
        case Step::flat:
            st.width_left -= 2;
            ++st.stats.flats;
            break;
        case Step::down:
            --st.height;
            st.width_left -= 1;
            ++st.stats.downs;
            break;
    }
    if (st.has_last) {
        if (st.last == Step::down && s == Step::up) ++st.stats.valleys;
        if (st.last == Step::up && s == Step::down) ++st.stats.peaks;
    }
    st.last = s;
    st.has_last = true;
    ++st.steps_taken;
    return st;
}

void finalize_stats(PathStatistics& st) {
    st.nonvalley_ups = st.ups - st.valleys;
    st.nonvalley_downs = st.downs - st.valleys;
    st.nonpeak_ups = st.ups - st.peaks;
    st.nonpeak_downs = st.downs - st.peaks;
}

bool may_step(PathClass cls, const PartialPath& st, Step s) {
    switch (s) {
        case Step::up:
            return st.width_left >= st.height + 2;
        case Step::flat:
            if (cls == PathClass::dyck) return false;
            if (cls == PathClass::small_schroeder && st.height == 0) return false;
            return st.width_left - 2 >= st.height;
        case Step::down:
            return st.height >= 1;
    }
    return false;
}

// Visits the statistics of every completion of `st`, in generation order.
template <class OnDone>
void complete(PathClass cls, const PartialPath& st, OnDone&& done) {
    if (st.width_left == 0) {
        PathStatistics stats = st.stats;
        finalize_stats(stats);
        done(stats);
        return;
    }
    for (Step s : {Step::up, Step::flat, Step::down})
        if (may_step(cls, st, s)) complete(cls, advance(st, s), done);
}

// Splits the space at a fixed prefix depth; paths that end sooner are
// reported through `short_path`.
template <class OnPrefix, class OnShort>
void collect_prefixes(PathClass cls, const PartialPath& st, long depth,
                      OnPrefix&& prefix, OnShort&& short_path) {
    if (st.width_left == 0) {
        PathStatistics stats = st.stats;
        finalize_stats(stats);
        short_path(stats);
        return;
    }
    if (st.steps_taken == depth) {
        prefix(st);
        return;
    }
    for (Step s : {Step::up, Step::flat, Step::down})
        if (may_step(cls, st, s))
            collect_prefixes(cls, advance(st, s), depth, prefix, short_path);
}

constexpr long kSplitDepth = 8;

void merge_into(Rational& total, Rational& local) { total += local; }
void merge_into(Integer& total, Integer& local) { total += local; }
void merge_into(std::pair<Integer, Integer>& total, std::pair<Integer, Integer>& local) {
    total.first += local.first;
    total.second += local.second;
}

// Parallel statistics reduction: Acc must be default-constructible and
// mergeable; fold takes (Acc&, const PathStatistics&). Exact arithmetic
// keeps the merged result schedule-independent.
template <class Acc, class Fold>
Acc reduce_stats(PathClass cls, long n, long bound, Fold&& fold) {
    check_enumeration_bound(n, bound);
    Acc total{};
    std::vector<PartialPath> prefixes;
    collect_prefixes(
        cls, initial_state(n), kSplitDepth,
        [&](const PartialPath& p) { prefixes.push_back(p); },
        [&](const PathStatistics& st) { fold(total, st); });
#pragma omp parallel
    {
        Acc local{};
        auto count = static_cast<long>(prefixes.size());
#pragma omp for schedule(dynamic) nowait
        for (long i = 0; i < count; ++i)
            complete(cls, prefixes[static_cast<size_t>(i)],
                     [&](const PathStatistics& st) { fold(local, st); });
#pragma omp critical
        merge_into(total, local);
    }
    return total;
}

// Power table q^0 .. q^max, so per-path weights are plain lookups.
std::vector<Rational> powers(const Rational& q, long max_exp) {
    std::vector<Rational> p(static_cast<size_t>(max_exp) + 1);
    p[0] = Rational(1);
    for (long e = 1; e <= max_exp; ++e) p[static_cast<size_t>(e)] = p[e - 1] * q;
    return p;
}

}  // namespace

Rational sum_over_paths(PathClass cls, long n, const StatWeight& weight,
                        EnumerationOptions opt) {
    return reduce_stats<Rational>(
        cls, n, opt.bound,
        [&](Rational& acc, const PathStatistics& st) { acc += weight(st); });
}

Rational valley_weighted_catalan(const Rational& a, const Rational& b, long n,
                                 EnumerationOptions opt) {
    auto pa = powers(a, n), pb = powers(b, n);
    return reduce_stats<Rational>(
        PathClass::dyck, n, opt.bound, [&](Rational& acc, const PathStatistics& st) {
            acc += pa[static_cast<size_t>(st.nonvalley_ups)] *
                   pb[static_cast<size_t>(st.valleys)];
        });
}

Rational peak_weighted_catalan(const Rational& a, const Rational& b, long n,
                               EnumerationOptions opt) {
    auto pa = powers(a, n), pb = powers(b, n);
    return reduce_stats<Rational>(
        PathClass::dyck, n, opt.bound, [&](Rational& acc, const PathStatistics& st) {
            acc += pa[static_cast<size_t>(st.peaks)] *
                   pb[static_cast<size_t>(st.nonpeak_ups)];
        });
}

Rational colored_dyck_count(long up_types, long down_types, long forbidden_peaks,
                            long n, EnumerationOptions opt) {
    if (up_types < 1 || down_types < 1 || forbidden_peaks < 0)
        throw std::domain_error("colored_dyck_count requires positive type counts");
    if (forbidden_peaks > up_types * down_types)
        throw std::domain_error("cannot forbid more peak types than exist");
    auto pu = powers(Rational(up_types), n);
    auto pd = powers(Rational(down_types), n);
    auto pk = powers(Rational(up_types * down_types - forbidden_peaks), n);
    return reduce_stats<Rational>(
        PathClass::dyck, n, opt.bound, [&](Rational& acc, const PathStatistics& st) {
            acc += pu[static_cast<size_t>(st.nonpeak_ups)] *
                   pd[static_cast<size_t>(st.nonpeak_downs)] *
                   pk[static_cast<size_t>(st.peaks)];
        });
}

Integer colored_dyck_count_explicit(long up_types, long down_types,
                                    long forbidden_peaks, long n,
                                    EnumerationOptions opt) {
    if (up_types < 1 || down_types < 1 || forbidden_peaks < 0)
        throw std::domain_error("colored_dyck_count requires positive type counts");
    if (forbidden_peaks > up_types * down_types)
        throw std::domain_error("cannot forbid more peak types than exist");

    // The first `forbidden_peaks` pairs in (up color, down color) lexicographic
    // order are banned; which pairs they are never changes the count.
    auto forbidden = [&](long up_color, long down_color) {
        return up_color * down_types + down_color < forbidden_peaks;
    };

    Integer total = 0;
    visit_paths(PathClass::dyck, n, opt.bound, [&](const std::vector<Step>& steps) {
        // Assign colors step by step; colors[i] is only constrained by an
        // adjacent UD pair.
        std::vector<long> colors(steps.size(), 0);
        Integer valid = 0;
        auto assign = [&](auto&& self, size_t i) -> void {
            if (i == steps.size()) {
                ++valid;
                return;
            }
            long limit = steps[i] == Step::up ? up_types : down_types;
            for (long c = 0; c < limit; ++c) {
                if (i > 0 && steps[i - 1] == Step::up && steps[i] == Step::down &&
                    forbidden(colors[i - 1], c))
                    continue;
                colors[i] = c;
                self(self, i + 1);
            }
        };
        assign(assign, 0);
        total += valid;
    });
    return total;
}

std::pair<Integer, Integer> peak_parity_counts(long n, EnumerationOptions opt) {
    return reduce_stats<std::pair<Integer, Integer>>(
        PathClass::dyck, n, opt.bound,
        [](std::pair<Integer, Integer>& acc, const PathStatistics& st) {
            ++(st.peaks % 2 == 0 ? acc.first : acc.second);
        });
}

Rational flat_weighted_small_count(long colors, long n, EnumerationOptions opt) {
    auto pm = powers(Rational(colors), n);
    return reduce_stats<Rational>(
        PathClass::small_schroeder, n, opt.bound,
        [&](Rational& acc, const PathStatistics& st) {
            acc += pm[static_cast<size_t>(st.flats)];
        });
}

Integer count_paths(PathClass cls, long n, EnumerationOptions opt) {
    return reduce_stats<Integer>(
        cls, n, opt.bound, [](Integer& acc, const PathStatistics&) { ++acc; });
}

namespace serial {

Rational sum_over_paths(PathClass cls, long n, const StatWeight& weight,
                        EnumerationOptions opt) {
    Rational total(0);
    visit_paths(cls, n, opt.bound, [&](const std::vector<Step>& steps) {
        total += weight(path_statistics(steps));
    });
    return total;
}

Rational valley_weighted_catalan(const Rational& a, const Rational& b, long n,
                                 EnumerationOptions opt) {
    return serial::sum_over_paths(
        PathClass::dyck, n,
        [&](const PathStatistics& st) {
            return a.pow(st.nonvalley_ups) * b.pow(st.valleys);
        },
        opt);
}

Rational peak_weighted_catalan(const Rational& a, const Rational& b, long n,
                               EnumerationOptions opt) {
    return serial::sum_over_paths(
        PathClass::dyck, n,
        [&](const PathStatistics& st) { return a.pow(st.peaks) * b.pow(st.nonpeak_ups); },
        opt);
}

std::pair<Integer, Integer> peak_parity_counts(long n, EnumerationOptions opt) {
    std::pair<Integer, Integer> counts{0, 0};
    visit_paths(PathClass::dyck, n, opt.bound, [&](const std::vector<Step>& steps) {
        ++(path_statistics(steps).peaks % 2 == 0 ? counts.first : counts.second);
    });
    return counts;
}

Integer count_paths(PathClass cls, long n, EnumerationOptions opt) {
    Integer total = 0;
    visit_paths(cls, n, opt.bound, [&](const std::vector<Step>&) { ++total; });
    return total;
}

}  // namespace serial

}  // namespace schroeder
