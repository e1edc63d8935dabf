#pragma once

#include <optional>
#include <string>

namespace pconn {

/// Runs the congruence sweep and the golden-value suite. Returns the first
/// failing case, or nullopt when everything passes.
std::optional<std::string> selftest();

} // namespace pconn
