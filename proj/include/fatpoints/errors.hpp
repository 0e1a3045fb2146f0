#pragma once

#include <stdexcept>
#include <string>

namespace fatpoints {

// Out-of-range or inconsistent caller input. The CLI maps this to exit code 2.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A named hypothesis of a closed-form bound does not hold for the inputs.
class PreconditionError : public ParameterError {
 public:
  PreconditionError(std::string inequality, const std::string& detail)
      : ParameterError(inequality + " violated: " + detail),
        inequality_(std::move(inequality)) {}

  const std::string& inequality() const noexcept { return inequality_; }

 private:
  std::string inequality_;
};

// Conjectured Betti numbers came out with a negative top-degree count.
class ResolutionInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A bounded degree scan ran out before finding a nonzero ideal piece.
class ScanExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fatpoints
