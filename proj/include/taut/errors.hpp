#pragma once

#include <stdexcept>
#include <string>

namespace taut {

// Error taxonomy mirrored by the CLI exit codes.
struct ValidationError : std::runtime_error {   // exit 2
  using std::runtime_error::runtime_error;
};
struct PreconditionError : std::runtime_error { // exit 3
  using std::runtime_error::runtime_error;
};
struct ResourceError : std::runtime_error {     // exit 4
  using std::runtime_error::runtime_error;
};
struct InternalDefect : std::runtime_error {    // exit 5
  using std::runtime_error::runtime_error;
};

}  // namespace taut
