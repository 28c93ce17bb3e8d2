#pragma once

#include <stdexcept>
#include <string>

namespace entropy_adjoint {

// Raised for malformed or semantically invalid inputs (unknown states,
// non-total maps, size caps, bad lambdas). The CLI maps it to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace entropy_adjoint
