#pragma once

#include <functional>
#include <string>
#include <vector>

namespace misere {

struct SuiteOptions {
    int max_cells = 16;  // table1 sweep ceiling
};

struct SuiteResult {
    bool passed = true;
    int checks = 0;
    double seconds = 0;
};

// theorem1, theorem3, theorem5, automata, k2, table1, table2.
const std::vector<std::string>& suite_names();

// Runs a named suite, handing each certificate line to `sink`. Throws
// ParseError for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options,
                      const std::function<void(const std::string&)>& sink);

}  // namespace misere
