#include "schroeder/enumerate.hpp"

namespace schroeder {

void check_enumeration_bound(long n, long bound) {
    if (n < 1) throw std::domain_error("enumeration requires n >= 1");
    if (n > bound) throw EnumerationLimitError(n, bound);
}

namespace {

// Every branch below is exact: from height h with w horizontal units left,
// a completion exists iff w >= h (w - h stays even along any step).
struct PathEnumerator {
    PathClass cls;
    std::vector<Step> steps;
    const std::function<void(const std::vector<Step>&)>& visit;

    void run(long height, long width_left) {
        if (width_left == 0) {
            visit(steps);
            return;
        }
        if (width_left >= height + 2) {
            steps.push_back(Step::up);
            run(height + 1, width_left - 1);
            steps.pop_back();
        }
        bool flat_ok = cls == PathClass::large_schroeder ||
                       (cls == PathClass::small_schroeder && height >= 1);
        if (flat_ok && width_left - 2 >= height) {
            steps.push_back(Step::flat);
            run(height, width_left - 2);
            steps.pop_back();
        }
        if (height >= 1) {
            steps.push_back(Step::down);
            run(height - 1, width_left - 1);
            steps.pop_back();
        }
    }
};

struct TreeEnumerator {
    const std::function<void(const PlaneTree&)>& visit;
    PlaneTree scratch;

    // All trees with `leaves` leaves, assembled in place at `node`.
    void trees(long leaves, PlaneTree& node, const std::function<void()>& done) {
        if (leaves == 1) {
            done();
            return;
        }
        // Keeps child references stable while continuations extend the list:
        // a node with `leaves` leaves never has more than `leaves` children.
        node.children.reserve(static_cast<size_t>(leaves));
        child_list(leaves, 2, node, done);
    }

    // Extends node.children by subtrees holding `leaves` more leaves in
    // total, at least `min_more` of them.
    void child_list(long leaves, long min_more, PlaneTree& node,
                    const std::function<void()>& done) {
        if (leaves == 0) {
            if (min_more == 0) done();
            return;
        }
        if (min_more > leaves) return;
        for (long first = 1; first <= leaves; ++first) {
            if (first == leaves && min_more > 1) continue;
            node.children.emplace_back();
            trees(first, node.children.back(), [&] {
                child_list(leaves - first, min_more > 0 ? min_more - 1 : 0, node, done);
            });
            node.children.pop_back();
        }
    }
};

}  // namespace

void visit_paths(PathClass cls, long n, long bound,
                 const std::function<void(const std::vector<Step>&)>& visit) {
    check_enumeration_bound(n, bound);
    PathEnumerator e{cls, {}, visit};
    e.steps.reserve(static_cast<size_t>(2 * n));
    e.run(0, 2 * (n - 1));
}

void visit_schroeder_trees(long n, long bound,
                           const std::function<void(const PlaneTree&)>& visit) {
    check_enumeration_bound(n, bound);
    TreeEnumerator e{visit, {}};
    e.trees(n, e.scratch, [&] { visit(e.scratch); });
}

std::vector<LatticePath> enumerate_paths(PathClass cls, long n, long bound) {
    std::vector<LatticePath> out;
    visit_paths(cls, n, bound,
                [&](const std::vector<Step>& s) { out.push_back(LatticePath{s, cls}); });
    return out;
}

std::vector<PlaneTree> enumerate_schroeder_trees(long n, long bound) {
    std::vector<PlaneTree> out;
    visit_schroeder_trees(n, bound, [&](const PlaneTree& t) { out.push_back(t); });
    return out;
}

std::map<long, Integer> tree_counts_by_internal_nodes(long n, long bound) {
    std::map<long, Integer> counts;
    visit_schroeder_trees(n, bound,
                          [&](const PlaneTree& t) { ++counts[internal_count(t)]; });
    return counts;
}

std::map<long, Integer> path_counts_by_ups(PathClass cls, long n, long bound) {
    std::map<long, Integer> counts;
    visit_paths(cls, n, bound, [&](const std::vector<Step>& s) {
        long ups = 0;
        for (Step st : s)
            if (st == Step::up) ++ups;
        ++counts[ups];
    });
    return counts;
}

}  // namespace schroeder
