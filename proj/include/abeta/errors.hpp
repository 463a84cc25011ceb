#ifndef ABETA_ERRORS_HPP
#define ABETA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace abeta {

// Input outside the documented domain of an operation.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A series or iteration could not reach its requested accuracy within the
// configured budget.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace abeta

#endif  // ABETA_ERRORS_HPP
