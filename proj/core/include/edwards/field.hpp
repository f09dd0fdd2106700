#ifndef EDWARDS_FIELD_HPP
#define EDWARDS_FIELD_HPP

#include <cstdint>
#include <compare>

#include "edwards/errors.hpp"

namespace edwards {

// Fixed audit prime for randomized certificate checks: the largest prime
// below 2^62.  Products of two reduced residues fit in an unsigned 128-bit
// multiply.
inline constexpr std::uint64_t kAuditPrime = 4611686018427387847ULL;

class PrimeField;

// Canonical residue in [0, p).  Carries its modulus so mixed-field arithmetic
// can be rejected.
struct FieldElement {
  std::uint64_t value = 0;
  std::uint64_t p = 0;
  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

// Odd prime field of desk-scale modulus (fits a machine word).
class PrimeField {
 public:
  // Validates that p is an odd prime >= 3.
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }

  FieldElement element(std::uint64_t v) const { return {v % p_, p_}; }
  // Signed embedding, e.g. element_of(-1) == p-1.
  FieldElement element_of(std::int64_t v) const;
  FieldElement zero() const { return {0, p_}; }
  FieldElement one() const { return {1 % p_, p_}; }

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const;
  // Throws DivisionByZero on a == 0.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

  // Euler criterion.  0 counts as a square; note 0 is NOT in the group of
  // nonzero squares, so d = 0 passes the "d not a nonzero square" test.
  bool is_square(FieldElement a) const;
  bool is_nonzero_square(FieldElement a) const;

 private:
  std::uint64_t p_;
  void check(FieldElement a) const;
};

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m);

}  // namespace edwards

#endif
