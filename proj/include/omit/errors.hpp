#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace omit {

/// Invalid user input. Carries one message per violated field so callers can
/// report every problem at once instead of the first one hit.
class validation_error : public std::invalid_argument {
 public:
  explicit validation_error(std::vector<std::string> fields)
      : std::invalid_argument(join(fields)), fields_(std::move(fields)) {}

  const std::vector<std::string>& fields() const noexcept { return fields_; }

 private:
  static std::string join(const std::vector<std::string>& fields) {
    std::string msg = "invalid parameters:";
    for (const auto& f : fields) {
      msg += "\n  - " + f;
    }
    return msg;
  }

  std::vector<std::string> fields_;
};

/// Numerical-domain failure (degenerate relation, singular index, ...).
class domain_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Filesystem-level failure.
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace omit
