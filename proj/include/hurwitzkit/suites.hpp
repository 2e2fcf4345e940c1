#pragma once

// Named verification suites shared by the command-line tool and the Python module.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hurwitzkit/ansatz.hpp"
#include "hurwitzkit/budget.hpp"
#include "hurwitzkit/hodge.hpp"
#include "hurwitzkit/hurwitz_table.hpp"

namespace hurwitzkit::suites {

struct Options {
    int d_max = -1;  // suite default when negative
    int r_max = -1;
    Budget budget;
};

struct SuiteReport {
    std::string suite;
    std::vector<nlohmann::json> checks;  // each has "check" and "status"
    bool passed() const;
    nlohmann::json to_json() const;
};

/// change-theorem, genus-expansion, recursions, closed-forms, oracle-vs-cutjoin
const std::vector<std::string>& suite_names();

/// Throws PreconditionError for an unknown suite.
SuiteReport run_suite(const std::string& name, const Options& options);

/// Default fitting depth: 6 for g = 2, 8 for g = 3, 3g - 1 beyond.
int default_fit_depth(int g);

/// Fits genus g from cut-and-join numbers at the default depth, writing the primitives into `table`.
ansatz::FitResult fit_from_cutjoin(int g, hodge::HodgeTable& table, const Budget& budget = Budget());

}  // namespace hurwitzkit::suites
