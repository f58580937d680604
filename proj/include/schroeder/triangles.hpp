#pragma once

#include <vector>

#include "schroeder/rational.hpp"

namespace schroeder {

enum class TriangleKind { small_schroeder, narayana, large_schroeder };

/// One triangle row: entries for k = 0 .. n-1.
struct TriangleRow {
    int n = 0;
    std::vector<Integer> entries;
};

/// Number of plane rooted trees with n leaves and k internal nodes, every
/// internal node having at least two children. Closed form
///   1                               for n = 1, k = 0,
///   C(n-1,k) * C(n+k-1,n) / (n-1)   for n >= 2,
/// and 0 for k outside 0..n-1. Requires n >= 1.
Integer small_schroeder_entry(long n, long k);

/// Narayana number: Dyck paths of size n with exactly k up steps, refined by
/// peak structure. C(n-1,k-1) * C(n-1,k) / (n-1) for n >= 2; 1 at (1,0);
/// 0 outside 0..n-1.
Integer narayana_entry(long n, long k);

/// small_schroeder_entry(n,k) + small_schroeder_entry(n,k+1). Requires n >= 2.
Integer large_schroeder_entry(long n, long k);

/// n-th Catalan number, C(2n-2, n-1) / n (so catalan(1) = 1, catalan(5) = 14).
Integer catalan(long n);

/// Same value by the linear recurrence c(n) = 2(2n-3)/n * c(n-1), c(1) = 1.
Integer catalan_by_recurrence(long n);

TriangleRow triangle_row(TriangleKind kind, long n);

/// Sum of the row entries.
Integer triangle_row_sum(TriangleKind kind, long n);

}  // namespace schroeder
