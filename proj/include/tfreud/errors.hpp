#ifndef TFREUD_ERRORS_HPP
#define TFREUD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tfreud {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A series or iteration failed to converge.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition on the inputs does not hold.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Requested index outside the stored or admissible range.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Working precision too small for an ill-conditioned computation.
class PrecisionExhausted : public std::runtime_error {
 public:
  PrecisionExhausted(int index, const std::string& what)
      : std::runtime_error(what), index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

/// A forward recursion hit a vanishing linear coefficient.
class InstabilityError : public std::runtime_error {
 public:
  InstabilityError(int index, const std::string& what)
      : std::runtime_error(what), index_(index) {}
  int index() const { return index_; }

 private:
  int index_;
};

}  // namespace tfreud

#endif  // TFREUD_ERRORS_HPP
