#ifndef EDWARDS_DIVISION_HPP
#define EDWARDS_DIVISION_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "edwards/polynomial.hpp"

namespace edwards {

// Machine-checkable proof object of a multivariate division:
//   dividend = sum_i quotients[i] * divisors[i] + remainder
// holds identically, and no remainder term is reducible by any divisor
// (reducible = leading monomial divides and leading coefficient divides;
// over this catalog divisor leading coefficients are units, so the two
// notions of minimality coincide).
struct ReductionCertificate {
  Polynomial dividend;
  std::vector<Polynomial> divisors;
  std::vector<Polynomial> quotients;
  Polynomial remainder;
  MonomialOrder order;
};

// Naive multivariate division.  Divisors are tried in list order at each
// step, so the result is deterministic for fixed inputs and order.  A
// nonzero remainder is a result, not an error.
ReductionCertificate poly_reduce(const Polynomial& dividend,
                                 std::vector<Polynomial> divisors,
                                 MonomialOrder order);

// Exact recheck of the certificate identity by polynomial arithmetic, plus
// `trials` random evaluations modulo kAuditPrime (seeded deterministically).
bool verify_certificate(const ReductionCertificate& cert,
                        std::size_t trials = 100, std::uint64_t seed = 0);
// The two halves, for diagnostics.
bool certificate_identity_holds(const ReductionCertificate& cert);
bool certificate_random_audit(const ReductionCertificate& cert,
                              std::size_t trials, std::uint64_t seed = 0);
bool remainder_is_minimal(const ReductionCertificate& cert);

std::pair<bool, ReductionCertificate> reduces_to_zero(
    const Polynomial& r, const std::vector<Polynomial>& divisors,
    const MonomialOrder& order);

// Division in a localization where `unit` is invertible: finds the smallest
// k <= max_power such that unit^k * r has zero remainder, and returns that
// certificate (dividend = unit^k * r).  Falls back to k = 0 on failure.
struct ScaledReduction {
  ReductionCertificate cert;
  std::uint32_t unit_power = 0;
  bool zero = false;
};
ScaledReduction reduce_with_unit(const Polynomial& r,
                                 const std::vector<Polynomial>& divisors,
                                 const MonomialOrder& order, Variable unit,
                                 std::uint32_t max_power = 8);

// Certificate interchange format (JSON with polynomials in canonical text).
std::string certificate_to_json(const ReductionCertificate& cert);
ReductionCertificate certificate_from_json(const std::string& json,
                                           const RingPtr& ring);
// Order-insensitive content digest (FNV-1a over the serialized form).
std::string certificate_digest(const ReductionCertificate& cert);

}  // namespace edwards

#endif
