#pragma once

#include <string>

#include "schroeder/paths.hpp"
#include "schroeder/trees.hpp"

namespace schroeder {

/// Outcome of an exhaustive bijection verification run.
struct BijectionReport {
    std::string name;
    long n = 0;
    long domain_size = 0;
    long range_size = 0;
    long round_trip_failures = 0;
    long statistic_failures = 0;

    bool passed() const { return round_trip_failures == 0 && statistic_failures == 0; }
};

/// Counterclockwise walk around a Schroeder tree: in preorder, a node maps to
/// U when it is the leftmost child of its parent, D when rightmost, F
/// otherwise. A tree with n leaves and k internal nodes yields a small
/// Schroeder path of size n with k up steps; the single leaf yields the
/// empty path.
LatticePath tree_to_path(const PlaneTree& t);

/// Inverse of tree_to_path, by one scan with a stack of open child lists:
/// U starts a child list under the newest node, F appends a sibling, D
/// appends the final sibling and closes the list.
PlaneTree path_to_tree(const LatticePath& p);

/// Clockwise walk: root-right-left traversal, with U for rightmost children
/// and D for leftmost. Equals tree_to_path of the mirrored tree.
LatticePath tree_to_path_clockwise(const PlaneTree& t);

PlaneTree path_to_tree_clockwise(const LatticePath& p);

/// Swaps the earliest valley-or-flat: the first DU becomes F if it precedes
/// every flat, otherwise the first F becomes DU. An involution on small
/// Schroeder paths that changes the up-step count by one; undefined on the
/// single valley-free flat-free path U^(n-1) D^(n-1).
LatticePath toggle_first_valley_flat(const LatticePath& p);

/// Rewrites a large Schroeder path with a ground-level flat, P1 F P2 with no
/// ground flat in P1, into the small path P1 U P2 D (one more up step).
LatticePath lift_ground_flat(const LatticePath& p);

/// Inverse of lift_ground_flat: splits at the last departure from height 0
/// and drops the final down step. Requires size >= 2.
LatticePath lower_to_ground_flat(const LatticePath& p);

/// The Dyck-path permutation obtained by pulling a path back to its binary
/// tree and walking around it the other way; transports peak statistics onto
/// valley statistics.
LatticePath dyck_conjugate(const LatticePath& p);

/// Checks, over every full binary tree with n leaves, that the two walks
/// satisfy peaks(ccw) + peaks(cw) = n, peaks(ccw) = nonvalley_ups(cw), and
/// nonpeak_ups(ccw) = valleys(cw).
BijectionReport full_binary_statistics_check(long n, long bound);

}  // namespace schroeder
