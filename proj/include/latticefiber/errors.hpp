#pragma once

#include <stdexcept>
#include <string>

namespace latticefiber {

// Thrown when an input violates a structural invariant: malformed partition,
// unsaturated path, self-merging tree event, unparsable record, exceeded
// enumeration bound. The CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace latticefiber
