#pragma once

#include <vector>

#include "wallcross/genfun.hpp"

namespace wallcross {

struct SuiteReport {
    std::string suite;
    std::vector<CheckReport> checks;
    bool pass = true;
};

std::vector<std::string> suite_names();

/// Run one named verification suite at the given genus. order == 0 picks
/// the default truncation 10 g. Checks run concurrently; the report order
/// is fixed by the suite definition, not by completion.
SuiteReport run_suite(const std::string& name, int g, int order = 0);

} // namespace wallcross
