#pragma once

#include <stdexcept>
#include <string>

namespace dqd {

// Numerical failure: non-convergence, internal consistency violation,
// unbracketed root search. Distinct from std::invalid_argument so callers
// can map bad input and numerical trouble to different exit paths.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dqd
