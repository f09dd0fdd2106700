#ifndef EDWARDS_POLYNOMIAL_HPP
#define EDWARDS_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "edwards/field.hpp"
#include "edwards/variable.hpp"

namespace edwards {

using Int = mpz_class;
using Mono = std::vector<std::uint32_t>;

// Monomial order: lex or grevlex over an explicit variable sequence
// (biggest variable first).  Ring variables absent from the sequence are
// appended after it, smallest.
struct MonomialOrder {
  enum class Kind { lex, grevlex };
  Kind kind = Kind::lex;
  std::vector<Variable> sequence;

  static MonomialOrder lex(std::vector<Variable> seq) {
    return {Kind::lex, std::move(seq)};
  }
  static MonomialOrder grevlex(std::vector<Variable> seq) {
    return {Kind::grevlex, std::move(seq)};
  }
  std::string describe() const;
};

// Order comparator specialized to one ring.
class OrderView {
 public:
  OrderView(const MonomialOrder& order, const Ring& ring);
  // three-way: <0, 0, >0 as a is smaller/equal/greater than b
  int cmp(const Mono& a, const Mono& b) const;
  bool greater(const Mono& a, const Mono& b) const { return cmp(a, b) > 0; }
  const std::vector<std::size_t>& positions() const { return perm_; }

 private:
  MonomialOrder::Kind kind_;
  std::vector<std::size_t> perm_;  // ring positions, biggest variable first
};

// Exact sparse multivariate polynomial over the integers.  Immutable in
// spirit: arithmetic returns new values.  Terms are keyed by exponent vector
// over the ring's variable list; no zero coefficients are stored, so equality
// of canonical forms is structural equality.
class Polynomial {
 public:
  using Terms = std::map<Mono, Int>;

  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, Int c);
  static Polynomial variable(const RingPtr& ring, Variable v, std::uint32_t e = 1);

  const RingPtr& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  std::uint32_t total_degree() const;
  std::uint32_t degree_in(Variable v) const;

  // Mutating primitive used by the arithmetic below.
  void add_term(const Mono& m, const Int& c);

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Int& k);
  friend Polynomial operator*(const Int& k, const Polynomial& a) { return a * k; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial pow(std::uint32_t e) const;

  // Leading term under an order view.
  std::pair<Mono, Int> leading(const OrderView& view) const;

  // gcd of all coefficients (0 for the zero polynomial).
  Int content() const;

  // Exact division by a single polynomial: returns the quotient if divisor
  // divides *this exactly (zero remainder under any order), else nullopt.
  // Division is performed under lex over the ring sequence.
  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

 private:
  RingPtr ring_;
  Terms terms_;
  void check_same_ring(const Polynomial& other) const;
};

Polynomial mono_times(const Polynomial& p, const Mono& m, const Int& c);

// Ring homomorphism induced by a variable assignment.  Variables of p's ring
// absent from the map go to the same-named variable of the target ring.
Polynomial substitute(const Polynomial& p,
                      const std::map<Variable, Polynomial>& sigma,
                      const RingPtr& target);
// Convenience: same ring source and target.
Polynomial substitute(const Polynomial& p,
                      const std::map<Variable, Polynomial>& sigma);

// Evaluation homomorphism into a prime field; assignment is indexed by ring
// position.
FieldElement eval_poly(const Polynomial& p,
                       const std::vector<FieldElement>& assignment,
                       const PrimeField& k);

// Canonical text form: terms descending under `order`, integer coefficients
// in decimal, factors within a term sorted by variable name.  This is the
// certificate interchange format and round-trips exactly.
std::string to_text(const Polynomial& p, const MonomialOrder& order);
std::string to_text(const Polynomial& p);  // lex over the ring sequence
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

}  // namespace edwards

#endif
