#ifndef ROOTPOSET_ERRORS_HPP
#define ROOTPOSET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rootposet
{

/// Raised when a computed object contradicts a structural theorem the
/// library relies on. Carries a human-readable counterexample.
class TheoremViolation : public std::runtime_error
{
public:
  TheoremViolation(std::string const &what, std::string witness)
  : std::runtime_error(what + ": " + witness), witness_(std::move(witness))
  {}

  std::string const &witness() const { return witness_; }

private:
  std::string witness_;
};

} // namespace rootposet

#endif // ROOTPOSET_ERRORS_HPP
