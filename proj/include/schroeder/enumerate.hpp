#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "schroeder/paths.hpp"
#include "schroeder/trees.hpp"

namespace schroeder {

/// Generators refuse n beyond this unless the caller passes a larger bound
/// explicitly; object counts grow like 6^n.
inline constexpr long default_enumeration_bound = 12;

struct EnumerationLimitError : std::runtime_error {
    explicit EnumerationLimitError(long n, long bound)
        : std::runtime_error("enumeration size " + std::to_string(n) +
                             " exceeds bound " + std::to_string(bound) +
                             " (raise the bound explicitly for stress runs)") {}
};

void check_enumeration_bound(long n, long bound);

/// Streams every path of the class with size parameter n exactly once, in
/// lexicographic order with U < F < D. The buffer passed to the visitor is
/// reused between calls.
void visit_paths(PathClass cls, long n, long bound,
                 const std::function<void(const std::vector<Step>&)>& visit);

/// Streams every Schroeder tree with n leaves exactly once. Order: trees are
/// ordered by their root child lists, lists by (size of first child
/// ascending, first child recursively, remaining list recursively).
void visit_schroeder_trees(long n, long bound,
                           const std::function<void(const PlaneTree&)>& visit);

std::vector<LatticePath> enumerate_paths(PathClass cls, long n,
                                         long bound = default_enumeration_bound);
std::vector<PlaneTree> enumerate_schroeder_trees(long n,
                                                 long bound = default_enumeration_bound);

/// Count of trees in one pass, keyed by number of internal nodes.
std::map<long, Integer> tree_counts_by_internal_nodes(long n,
                                                      long bound = default_enumeration_bound);

/// Count of paths in one pass, keyed by number of up steps.
std::map<long, Integer> path_counts_by_ups(PathClass cls, long n,
                                           long bound = default_enumeration_bound);

}  // namespace schroeder
