#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "schroeder/enumerate.hpp"
#include "schroeder/sequences.hpp"
#include "schroeder/triangles.hpp"

using namespace schroeder;

TEST_CASE("path statistics by hand") {
    PathStatistics st = path_statistics(make_path("UUDUDD", PathClass::dyck).steps);
    CHECK(st.ups == 3);
    CHECK(st.downs == 3);
    CHECK(st.flats == 0);
    CHECK(st.valleys == 1);
    CHECK(st.peaks == 2);
    CHECK(st.nonvalley_ups == 2);
    CHECK(st.nonvalley_downs == 2);
    CHECK(st.nonpeak_ups == 1);
    CHECK(st.nonpeak_downs == 1);

    // The flat step breaks UD adjacency.
    PathStatistics ufd = path_statistics(make_path("UFD", PathClass::small_schroeder).steps);
    CHECK(ufd.peaks == 0);
    CHECK(ufd.valleys == 0);
    CHECK(ufd.nonpeak_ups == 1);
    CHECK(ufd.nonpeak_downs == 1);

    PathStatistics staircase = path_statistics(make_path("UUUDDD", PathClass::dyck).steps);
    CHECK(staircase.valleys == 0);
    CHECK(staircase.peaks == 1);
}

TEST_CASE("statistics invariants across whole families") {
    for (long n = 1; n <= 7; ++n) {
        for (PathClass cls :
             {PathClass::small_schroeder, PathClass::large_schroeder, PathClass::dyck}) {
            visit_paths(cls, n, default_enumeration_bound, [&](const std::vector<Step>& s) {
                PathStatistics st = path_statistics(s);
                CHECK(st.ups == st.nonvalley_ups + st.valleys);
                CHECK(st.ups == st.nonpeak_ups + st.peaks);
                CHECK(st.downs == st.nonpeak_downs + st.peaks);
                CHECK(st.downs == st.nonvalley_downs + st.valleys);
                CHECK(st.ups == st.downs);  // closed paths
                CHECK(st.ups + st.flats + 1 == n);
                if (cls == PathClass::dyck) {
                    CHECK(st.nonpeak_ups == st.nonpeak_downs);
                    if (n >= 2) CHECK(st.valleys == st.peaks - 1);
                }
            });
        }
    }
}

TEST_CASE("class predicates") {
    CHECK(is_small_schroeder(make_path("UFD", PathClass::small_schroeder).steps));
    CHECK_FALSE(is_small_schroeder({Step::flat}));
    CHECK(is_large_schroeder({Step::flat}));
    CHECK_FALSE(is_large_schroeder({Step::down, Step::up}));
    CHECK_FALSE(is_large_schroeder({Step::up}));
    CHECK(is_dyck({}));
    CHECK_FALSE(is_dyck({Step::up, Step::flat, Step::down}));

    CHECK_THROWS_AS(make_path("F", PathClass::small_schroeder), std::invalid_argument);
    CHECK_THROWS_AS(make_path("UXD", PathClass::dyck), std::invalid_argument);
    CHECK(make_path("", PathClass::dyck).steps.empty());
    CHECK(path_size(make_path("UFD", PathClass::small_schroeder).steps) == 3);
    CHECK(path_size({}) == 1);
}

TEST_CASE("path counts match the triangles") {
    for (long n = 1; n <= 8; ++n) {
        auto small = enumerate_paths(PathClass::small_schroeder, n);
        CHECK(Integer(small.size()) == triangle_row_sum(TriangleKind::small_schroeder, n));

        auto by_ups = path_counts_by_ups(PathClass::small_schroeder, n);
        for (long k = 0; k < n; ++k) {
            Integer expected = small_schroeder_entry(n, k);
            Integer actual = by_ups.count(k) ? by_ups[k] : Integer(0);
            CHECK(actual == expected);
        }

        auto dyck = enumerate_paths(PathClass::dyck, n);
        CHECK(Integer(dyck.size()) == catalan(n));

        if (n >= 2) {
            auto large = enumerate_paths(PathClass::large_schroeder, n);
            CHECK(Integer(large.size()) ==
                  2 * triangle_row_sum(TriangleKind::small_schroeder, n));
            auto large_by_ups = path_counts_by_ups(PathClass::large_schroeder, n);
            for (long k = 0; k < n; ++k) {
                Integer expected = large_schroeder_entry(n, k);
                Integer actual = large_by_ups.count(k) ? large_by_ups[k] : Integer(0);
                CHECK(actual == expected);
            }
        }
    }
}

TEST_CASE("paths are emitted in lexicographic order without duplicates") {
    for (PathClass cls :
         {PathClass::small_schroeder, PathClass::large_schroeder, PathClass::dyck}) {
        for (long n = 1; n <= 6; ++n) {
            std::set<std::string> seen;
            std::string prev;
            bool first = true;
            visit_paths(cls, n, default_enumeration_bound, [&](const std::vector<Step>& s) {
                CHECK(satisfies_class(s, cls));
                CHECK(path_size(s) == n);
                std::string enc = encode_path(s);
                CHECK(seen.insert(enc).second);
                if (!first) {
                    // U < F < D is the documented character order
                    auto rank = [](char c) { return c == 'U' ? 0 : c == 'F' ? 1 : 2; };
                    bool less = std::lexicographical_compare(
                        prev.begin(), prev.end(), enc.begin(), enc.end(),
                        [&](char a, char b) { return rank(a) < rank(b); });
                    CHECK(less);
                }
                prev = enc;
                first = false;
            });
        }
    }
}

TEST_CASE("tree counts match the triangle strata") {
    CHECK(enumerate_schroeder_trees(4).size() == 11);
    CHECK(enumerate_schroeder_trees(1).size() == 1);

    auto by_internal = tree_counts_by_internal_nodes(5);
    CHECK(by_internal[1] == 1);
    CHECK(by_internal[2] == 9);
    CHECK(by_internal[3] == 21);
    CHECK(by_internal[4] == 14);

    for (long n = 1; n <= 8; ++n) {
        auto counts = tree_counts_by_internal_nodes(n);
        Integer total = 0;
        for (const auto& [k, count] : counts) {
            CHECK(count == small_schroeder_entry(n, k));
            total += count;
        }
        CHECK(total == triangle_row_sum(TriangleKind::small_schroeder, n));
    }
}

TEST_CASE("generated trees are valid and distinct") {
    for (long n = 1; n <= 7; ++n) {
        std::set<std::string> seen;
        visit_schroeder_trees(n, default_enumeration_bound, [&](const PlaneTree& t) {
            CHECK(is_schroeder_tree(t));
            CHECK(leaf_count(t) == n);
            CHECK(seen.insert(encode_tree(t)).second);
        });
    }
}

TEST_CASE("tree encoding round trips") {
    visit_schroeder_trees(6, default_enumeration_bound, [&](const PlaneTree& t) {
        CHECK(decode_tree(encode_tree(t)) == t);
    });
    CHECK(encode_tree(PlaneTree{}) == "()");
    CHECK_THROWS_AS(decode_tree("(()"), std::invalid_argument);
    CHECK_THROWS_AS(decode_tree("())("), std::invalid_argument);
}

TEST_CASE("enumeration bound is enforced and overridable") {
    CHECK_THROWS_AS(enumerate_paths(PathClass::dyck, 13), EnumerationLimitError);
    CHECK_THROWS_AS(enumerate_schroeder_trees(42), EnumerationLimitError);
    CHECK_THROWS_AS(enumerate_paths(PathClass::dyck, 0), std::domain_error);
    CHECK(enumerate_paths(PathClass::dyck, 13, 13).size() == 208012);  // catalan(13)
}

TEST_CASE("mirror reverses children recursively") {
    PlaneTree t = decode_tree("((()())()())");
    CHECK(encode_tree(mirror(t)) == "(()()(()()))");
    CHECK(mirror(mirror(t)) == t);
}
