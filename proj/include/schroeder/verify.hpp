#pragma once

#include <string>
#include <vector>

#include "schroeder/enumerate.hpp"
#include "schroeder/rational.hpp"

namespace schroeder {

enum class Suite {
    identities,
    bijections,
    colored,
    series,
    triangles,
    parity,
    asymptotics,
    all,
};

Suite suite_from_name(const std::string& name);
std::string suite_name(Suite suite);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  // first counterexample, empty when passed
};

struct VerifyOptions {
    long n_max = 0;                 // 0: use each check's documented default
    std::vector<Rational> d_grid;   // empty: use the default grid
    long bound = default_enumeration_bound;
};

/// The d values every identity is exercised on unless the caller overrides.
const std::vector<Rational>& default_d_grid();

/// Runs every check of the suite; one result per named identity.
std::vector<CheckResult> run_suite(Suite suite, const VerifyOptions& opt = {});

}  // namespace schroeder
