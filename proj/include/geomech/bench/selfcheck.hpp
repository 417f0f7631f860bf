#pragma once

#include <ostream>

namespace geomech::bench {

/// Quick invariant checks of the library; prints one line per check and
/// returns true when all pass.
bool run_selfcheck(std::ostream& out);

}  // namespace geomech::bench
