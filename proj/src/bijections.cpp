#include "schroeder/bijections.hpp"

#include <stdexcept>

#include "schroeder/enumerate.hpp"

namespace schroeder {

namespace {

void require_schroeder(const PlaneTree& t) {
    if (!is_schroeder_tree(t))
        throw std::invalid_argument("tree has an internal node with fewer than 2 children");
}

void walk_counterclockwise(const PlaneTree& node, std::vector<Step>& out) {
    size_t count = node.children.size();
    for (size_t i = 0; i < count; ++i) {
        out.push_back(i == 0 ? Step::up : i == count - 1 ? Step::down : Step::flat);
        walk_counterclockwise(node.children[i], out);
    }
}

void walk_clockwise(const PlaneTree& node, std::vector<Step>& out) {
    size_t count = node.children.size();
    for (size_t i = count; i-- > 0;) {
        out.push_back(i == count - 1 ? Step::up : i == 0 ? Step::down : Step::flat);
        walk_clockwise(node.children[i], out);
    }
}

long first_valley(const std::vector<Step>& s) {
    for (size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] == Step::down && s[i + 1] == Step::up) return static_cast<long>(i);
    return -1;
}

long first_flat(const std::vector<Step>& s) {
    for (size_t i = 0; i < s.size(); ++i)
        if (s[i] == Step::flat) return static_cast<long>(i);
    return -1;
}

}  // namespace

LatticePath tree_to_path(const PlaneTree& t) {
    require_schroeder(t);
    std::vector<Step> steps;
    walk_counterclockwise(t, steps);
    return make_path(std::move(steps), PathClass::small_schroeder);
}

LatticePath tree_to_path_clockwise(const PlaneTree& t) {
    require_schroeder(t);
    std::vector<Step> steps;
    walk_clockwise(t, steps);
    return make_path(std::move(steps), PathClass::small_schroeder);
}

PlaneTree path_to_tree(const LatticePath& p) {
    if (!is_small_schroeder(p.steps))
        throw std::invalid_argument("path_to_tree requires a small Schroeder path");
    PlaneTree root;
    // Stack of nodes whose child lists are still open; `last` is the node a
    // following U would descend into. Heights in the path equal stack depths,
    // so a small Schroeder path can never underflow the stack.
    std::vector<PlaneTree*> open;
    PlaneTree* last = &root;
    for (Step s : p.steps) {
        switch (s) {
            case Step::up:
                open.push_back(last);
                last->children.emplace_back();
                last = &open.back()->children.back();
                break;
            case Step::flat:
                open.back()->children.emplace_back();
                last = &open.back()->children.back();
                break;
            case Step::down:
                open.back()->children.emplace_back();
                last = &open.back()->children.back();
                open.pop_back();
                break;
        }
    }
    return root;
}

PlaneTree path_to_tree_clockwise(const LatticePath& p) {
    // The clockwise walk of T is the counterclockwise walk of mirror(T).
    return mirror(path_to_tree(p));
}

LatticePath toggle_first_valley_flat(const LatticePath& p) {
    if (!is_small_schroeder(p.steps))
        throw std::invalid_argument("toggle_first_valley_flat requires a small Schroeder path");
    long valley = first_valley(p.steps);
    long flat = first_flat(p.steps);
    if (valley < 0 && flat < 0)
        throw std::domain_error(
            "path has neither valley nor flat (the excluded staircase path)");
    std::vector<Step> out = p.steps;
    if (valley >= 0 && (flat < 0 || valley < flat)) {
        out.erase(out.begin() + valley, out.begin() + valley + 2);
        out.insert(out.begin() + valley, Step::flat);
    } else {
        out.erase(out.begin() + flat);
        out.insert(out.begin() + flat, {Step::down, Step::up});
    }
    return make_path(std::move(out), PathClass::small_schroeder);
}

LatticePath lift_ground_flat(const LatticePath& p) {
    if (!is_large_schroeder(p.steps))
        throw std::invalid_argument("lift_ground_flat requires a large Schroeder path");
    long h = 0, split = -1;
    for (size_t i = 0; i < p.steps.size(); ++i) {
        if (p.steps[i] == Step::flat && h == 0) {
            split = static_cast<long>(i);
            break;
        }
        if (p.steps[i] == Step::up) ++h;
        if (p.steps[i] == Step::down) --h;
    }
    if (split < 0)
        throw std::domain_error("path has no ground-level flat (already small)");
    std::vector<Step> out(p.steps.begin(), p.steps.begin() + split);
    out.push_back(Step::up);
    out.insert(out.end(), p.steps.begin() + split + 1, p.steps.end());
    out.push_back(Step::down);
    return make_path(std::move(out), PathClass::small_schroeder);
}

LatticePath lower_to_ground_flat(const LatticePath& p) {
    if (!is_small_schroeder(p.steps))
        throw std::invalid_argument("lower_to_ground_flat requires a small Schroeder path");
    if (p.steps.empty())
        throw std::domain_error("the empty path (size 1) has no preimage");
    // The inserted U is the last step that leaves height 0: the lifted segment
    // after it never returns to the ground before the final appended D.
    long h = 0, split = -1;
    for (size_t i = 0; i < p.steps.size(); ++i) {
        if (p.steps[i] == Step::up && h == 0) split = static_cast<long>(i);
        if (p.steps[i] == Step::up) ++h;
        if (p.steps[i] == Step::down) --h;
    }
    std::vector<Step> out(p.steps.begin(), p.steps.begin() + split);
    out.push_back(Step::flat);
    out.insert(out.end(), p.steps.begin() + split + 1, p.steps.end() - 1);
    return make_path(std::move(out), PathClass::large_schroeder);
}

LatticePath dyck_conjugate(const LatticePath& p) {
    if (!is_dyck(p.steps))
        throw std::invalid_argument("dyck_conjugate requires a Dyck path");
    LatticePath q = tree_to_path_clockwise(
        path_to_tree(LatticePath{p.steps, PathClass::small_schroeder}));
    return make_path(std::move(q.steps), PathClass::dyck);
}

BijectionReport full_binary_statistics_check(long n, long bound) {
    if (n < 2) throw std::domain_error("full_binary_statistics_check requires n >= 2");
    BijectionReport report{"full-binary-walk-statistics", n, 0, 0, 0, 0};
    visit_schroeder_trees(n, bound, [&](const PlaneTree& t) {
        if (internal_count(t) != n - 1) return;  // full binary trees only
        ++report.domain_size;
        LatticePath ccw = tree_to_path(t);
        LatticePath cw = tree_to_path_clockwise(t);
        PathStatistics a = path_statistics(ccw);
        PathStatistics b = path_statistics(cw);
        ++report.range_size;
        if (a.peaks + b.peaks != n || a.peaks != b.nonvalley_ups ||
            a.nonpeak_ups != b.valleys)
            ++report.statistic_failures;
    });
    return report;
}

}  // namespace schroeder
