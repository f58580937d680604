#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "schroeder/rational.hpp"

namespace schroeder {

/// Lattice-path step. U rises by 1, D falls by 1, F stays level (its display
/// width of 2 never matters here). Declaration order is the canonical
/// generation order U < F < D.
enum class Step : unsigned char { up, flat, down };

char step_char(Step s);
Step step_from_char(char c);

enum class PathClass { small_schroeder, large_schroeder, dyck };

/// A nonnegative lattice path returning to height 0, tagged with the class
/// it was validated against. The size parameter n is ups + flats + 1, so the
/// path runs from (0,0) to (2n-2,0); n = 1 is the empty path.
struct LatticePath {
    std::vector<Step> steps;
    PathClass cls = PathClass::small_schroeder;
};

/// The step counts and adjacency statistics of a path: ups/flats/downs,
/// valleys (adjacent DU pairs), peaks (adjacent UD pairs), and the up/down
/// steps left over once each valley or peak claims its U and D.
struct PathStatistics {
    long ups = 0;
    long flats = 0;
    long downs = 0;
    long valleys = 0;
    long peaks = 0;
    long nonvalley_ups = 0;
    long nonvalley_downs = 0;
    long nonpeak_ups = 0;
    long nonpeak_downs = 0;
};

PathStatistics path_statistics(const std::vector<Step>& steps);
inline PathStatistics path_statistics(const LatticePath& p) { return path_statistics(p.steps); }

/// Size parameter n = ups + flats + 1 of a closed path.
long path_size(const std::vector<Step>& steps);

/// Class predicates: nonnegative prefix heights and final height 0, plus
/// no ground-level flats (small), no flats at all (dyck).
bool is_large_schroeder(const std::vector<Step>& steps);
bool is_small_schroeder(const std::vector<Step>& steps);
bool is_dyck(const std::vector<Step>& steps);
bool satisfies_class(const std::vector<Step>& steps, PathClass cls);

/// One character per step, e.g. "UUFDD"; the empty path encodes as "".
std::string encode_path(const std::vector<Step>& steps);
inline std::string encode_path(const LatticePath& p) { return encode_path(p.steps); }

/// Decodes and validates; throws std::invalid_argument on junk characters or
/// class violations.
LatticePath make_path(std::string_view text, PathClass cls);
LatticePath make_path(std::vector<Step> steps, PathClass cls);

}  // namespace schroeder
