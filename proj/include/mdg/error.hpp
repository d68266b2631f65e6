#ifndef MDG_ERROR_HPP
#define MDG_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mdg {

/// Precondition or input violation (bad modulus, mismatched rings, k > n, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

class DivisionByZeroError : public DomainError {
 public:
  explicit DivisionByZeroError(const std::string& what) : DomainError(what) {}
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A bounded computation ran out of its step/size budget.  Carries the
/// statistics needed for an informative report instead of a silent hang.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& phase, std::uint64_t used, std::uint64_t budget)
      : std::runtime_error(phase + ": budget exceeded (" + std::to_string(used) +
                           " / " + std::to_string(budget) + ")"),
        phase_(phase),
        used_(used),
        budget_(budget) {}

  const std::string& phase() const { return phase_; }
  std::uint64_t steps_used() const { return used_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::string phase_;
  std::uint64_t used_;
  std::uint64_t budget_;
};

}  // namespace mdg

#endif
