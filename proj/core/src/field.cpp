#include "edwards/field.hpp"

#include <stdexcept>
#include <string>

namespace edwards {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                          19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  // This witness set is deterministic for n < 2^64.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                          19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p < 3 || (p & 1) == 0 || !is_prime_u64(p))
    throw std::invalid_argument("modulus must be an odd prime >= 3, got " +
                                std::to_string(p));
}

void PrimeField::check(FieldElement a) const {
  if (a.p != p_)
    throw std::invalid_argument("field element from a different field");
}

FieldElement PrimeField::element_of(std::int64_t v) const {
  std::int64_t m = static_cast<std::int64_t>(p_);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return {static_cast<std::uint64_t>(r), p_};
}

FieldElement PrimeField::add(FieldElement a, FieldElement b) const {
  check(a); check(b);
  std::uint64_t s = a.value + b.value;
  if (s >= p_) s -= p_;
  return {s, p_};
}

FieldElement PrimeField::sub(FieldElement a, FieldElement b) const {
  check(a); check(b);
  return {a.value >= b.value ? a.value - b.value : a.value + p_ - b.value, p_};
}

FieldElement PrimeField::mul(FieldElement a, FieldElement b) const {
  check(a); check(b);
  return {mulmod_u64(a.value, b.value, p_), p_};
}

FieldElement PrimeField::neg(FieldElement a) const {
  check(a);
  return {a.value == 0 ? 0 : p_ - a.value, p_};
}

FieldElement PrimeField::pow(FieldElement a, std::uint64_t e) const {
  check(a);
  return {powmod_u64(a.value, e, p_), p_};
}

FieldElement PrimeField::inv(FieldElement a) const {
  check(a);
  if (a.value == 0) throw DivisionByZero();
  return pow(a, p_ - 2);
}

bool PrimeField::is_square(FieldElement a) const {
  check(a);
  if (a.value == 0) return true;
  return powmod_u64(a.value, (p_ - 1) / 2, p_) == 1;
}

bool PrimeField::is_nonzero_square(FieldElement a) const {
  check(a);
  return a.value != 0 && is_square(a);
}

}  // namespace edwards
