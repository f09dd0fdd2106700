#ifndef EDWARDS_ERRORS_HPP
#define EDWARDS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace edwards {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("inverse of zero field element") {}
};

// A localization denominator evaluated to zero; carries the factor name.
struct DenominatorVanishes : std::domain_error {
  explicit DenominatorVanishes(std::string factor_)
      : std::domain_error("denominator vanishes: " + factor_),
        factor(std::move(factor_)) {}
  std::string factor;
};

struct DeltaVanishes : std::domain_error {
  explicit DeltaVanishes(std::string which_)
      : std::domain_error("addition denominator is zero: " + which_),
        which(std::move(which_)) {}
  std::string which;
};

struct ZeroCoordinate : std::domain_error {
  ZeroCoordinate() : std::domain_error("tau is undefined at a zero coordinate") {}
};

struct ParamsNotComplete : std::domain_error {
  explicit ParamsNotComplete(std::string why)
      : std::domain_error("curve parameters are not complete: " + why) {}
};

struct CapExceeded : std::runtime_error {
  explicit CapExceeded(std::string what) : std::runtime_error(std::move(what)) {}
};

struct ResourceBound : std::runtime_error {
  explicit ResourceBound(std::string what) : std::runtime_error(std::move(what)) {}
};

// Raised only if neither dichotomy branch verifies; would falsify the dichotomy
// property, so seeing this on curve inputs is a library bug by definition.
struct Inconsistent : std::logic_error {
  explicit Inconsistent(std::string what) : std::logic_error(std::move(what)) {}
};

}  // namespace edwards

#endif
