#pragma once

#include <stdexcept>

namespace zeck {

/// Raised when a computation would exceed its configured cost or memory
/// budget; mapped to exit code 3 by the command line tool.
struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace zeck
