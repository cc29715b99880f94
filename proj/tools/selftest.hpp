#pragma once

#include <ostream>

namespace iquo::tools {

/// Run the invariant suites on the built-in fixtures, printing one PASS/FAIL
/// line per check. Returns true when everything passed.
bool selftest(std::ostream& out);

}  // namespace iquo::tools
