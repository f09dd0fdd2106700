#include "edwards/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace edwards {

std::string MonomialOrder::describe() const {
  std::string s = kind == Kind::lex ? "lex(" : "grevlex(";
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    if (i) s += ",";
    s += sequence[i].name();
  }
  return s + ")";
}

OrderView::OrderView(const MonomialOrder& order, const Ring& ring)
    : kind_(order.kind) {
  std::vector<bool> used(ring.size(), false);
  perm_.reserve(ring.size());
  for (Variable v : order.sequence) {
    if (auto i = ring.index_of(v)) {
      perm_.push_back(*i);
      used[*i] = true;
    }
  }
  for (std::size_t i = 0; i < ring.size(); ++i)
    if (!used[i]) perm_.push_back(i);
}

int OrderView::cmp(const Mono& a, const Mono& b) const {
  if (kind_ == MonomialOrder::Kind::lex) {
    for (std::size_t p : perm_) {
      if (a[p] != b[p]) return a[p] < b[p] ? -1 : 1;
    }
    return 0;
  }
  // grevlex: total degree first, ties broken by the smallest variable in
  // which they differ, smaller exponent there wins.
  std::uint64_t da = 0, db = 0;
  for (std::uint32_t e : a) da += e;
  for (std::uint32_t e : b) db += e;
  if (da != db) return da < db ? -1 : 1;
  for (auto it = perm_.rbegin(); it != perm_.rend(); ++it) {
    if (a[*it] != b[*it]) return a[*it] > b[*it] ? -1 : 1;
  }
  return 0;
}

Polynomial Polynomial::constant(RingPtr ring, Int c) {
  Polynomial p(std::move(ring));
  if (c != 0) p.terms_.emplace(Mono(p.ring_->size(), 0), std::move(c));
  return p;
}

Polynomial Polynomial::variable(const RingPtr& ring, Variable v, std::uint32_t e) {
  auto idx = ring->index_of(v);
  if (!idx) throw std::invalid_argument("variable " + v.name() + " not in ring");
  Polynomial p(ring);
  if (e == 0) return constant(ring, 1);
  Mono m(ring->size(), 0);
  m[*idx] = e;
  p.terms_.emplace(std::move(m), 1);
  return p;
}

void Polynomial::check_same_ring(const Polynomial& other) const {
  if (ring_ == other.ring_) return;
  if (ring_ && other.ring_ && ring_->same_universe(*other.ring_)) return;
  throw std::invalid_argument("polynomials over different variable universes");
}

void Polynomial::add_term(const Mono& m, const Int& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  a.check_same_ring(b);
  Polynomial r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  a.check_same_ring(b);
  Polynomial r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
  return r;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial r(a.ring_);
  for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial operator*(const Polynomial& a, const Int& k) {
  Polynomial r(a.ring_);
  if (k == 0) return r;
  for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, c * k);
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_ring(b);
  Polynomial r(a.ring_);
  Mono m(a.ring_ ? a.ring_->size() : 0, 0);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  a.check_same_ring(b);
  return a.terms_ == b.terms_;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial r = constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1) r = r * base;
    if (e >>= 1) base = base * base;
  }
  return r;
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) {
    std::uint32_t s = 0;
    for (auto e : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

std::uint32_t Polynomial::degree_in(Variable v) const {
  auto idx = ring_->index_of(v);
  if (!idx) return 0;
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[*idx]);
  return d;
}

std::pair<Mono, Int> Polynomial::leading(const OrderView& view) const {
  if (terms_.empty()) throw std::logic_error("leading term of zero");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (view.greater(it->first, best->first)) best = it;
  return {best->first, best->second};
}

Int Polynomial::content() const {
  Int g = 0;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Polynomial mono_times(const Polynomial& p, const Mono& m, const Int& c) {
  Polynomial r(p.ring());
  if (c == 0) return r;
  Mono t(m.size());
  for (const auto& [pm, pc] : p.terms()) {
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = pm[i] + m[i];
    r.add_term(t, pc * c);
  }
  return r;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  OrderView view(MonomialOrder::lex(ring_->vars()), *ring_);
  auto [dm, dc] = divisor.leading(view);
  Polynomial q(ring_);
  Polynomial rest = *this;
  Mono qm(ring_->size());
  while (!rest.is_zero()) {
    auto [m, c] = rest.leading(view);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] < dm[i]) return std::nullopt;
      qm[i] = m[i] - dm[i];
    }
    if (!mpz_divisible_p(c.get_mpz_t(), dc.get_mpz_t())) return std::nullopt;
    Int qc = c / dc;
    q.add_term(qm, qc);
    rest = rest - mono_times(divisor, qm, qc);
  }
  return q;
}

Polynomial substitute(const Polynomial& p,
                      const std::map<Variable, Polynomial>& sigma,
                      const RingPtr& target) {
  const Ring& src = *p.ring();
  // image of each source variable, plus a power ladder built on demand
  std::vector<Polynomial> image(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    Variable v = src.var(i);
    auto it = sigma.find(v);
    if (it != sigma.end()) {
      image[i] = it->second;
      if (image[i].ring() != target && !image[i].ring()->same_universe(*target))
        throw std::invalid_argument("substitution image not in target ring");
    } else {
      image[i] = Polynomial::variable(target, v);
    }
  }
  std::vector<std::vector<Polynomial>> powers(src.size());
  auto power = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
    auto& ladder = powers[i];
    if (ladder.empty()) ladder.push_back(Polynomial::constant(target, 1));
    while (ladder.size() <= e) ladder.push_back(ladder.back() * image[i]);
    return ladder[e];
  };
  Polynomial out(target);
  for (const auto& [m, c] : p.terms()) {
    Polynomial t = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) t = t * power(i, m[i]);
    out = out + t;
  }
  return out;
}

Polynomial substitute(const Polynomial& p,
                      const std::map<Variable, Polynomial>& sigma) {
  return substitute(p, sigma, p.ring());
}

FieldElement eval_poly(const Polynomial& p,
                       const std::vector<FieldElement>& assignment,
                       const PrimeField& k) {
  if (assignment.size() != p.ring()->size())
    throw std::invalid_argument("assignment size does not match ring");
  // power cache per variable
  std::vector<std::vector<std::uint64_t>> pw(assignment.size());
  for (std::size_t i = 0; i < assignment.size(); ++i)
    pw[i].push_back(1 % k.modulus());
  auto power = [&](std::size_t i, std::uint32_t e) {
    auto& l = pw[i];
    while (l.size() <= e)
      l.push_back(mulmod_u64(l.back(), assignment[i].value, k.modulus()));
    return l[e];
  };
  std::uint64_t acc = 0;
  const std::uint64_t m = k.modulus();
  for (const auto& [mono, c] : p.terms()) {
    std::uint64_t t = mpz_fdiv_ui(c.get_mpz_t(), m);  // nonnegative residue
    for (std::size_t i = 0; i < mono.size(); ++i)
      if (mono[i]) t = mulmod_u64(t, power(i, mono[i]), m);
    acc += t;
    if (acc >= m) acc -= m;
  }
  return {acc, m};
}

namespace {

void write_term(std::ostringstream& out, const Ring& ring, const Mono& m,
                const Int& c, bool first) {
  bool neg = c < 0;
  Int mag = abs(c);
  if (first) {
    if (neg) out << "-";
  } else {
    out << (neg ? " - " : " + ");
  }
  // factors sorted by variable name
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i]) idx.push_back(i);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return ring.var(a).name() < ring.var(b).name();
  });
  bool coeff_written = false;
  if (mag != 1 || idx.empty()) {
    out << mag.get_str();
    coeff_written = true;
  }
  for (std::size_t i : idx) {
    if (coeff_written || i != idx.front()) out << "*";
    coeff_written = true;
    out << ring.var(i).name();
    if (m[i] > 1) out << "^" << m[i];
  }
}

}  // namespace

std::string to_text(const Polynomial& p, const MonomialOrder& order) {
  if (p.is_zero()) return "0";
  OrderView view(order, *p.ring());
  std::vector<const Mono*> monos;
  monos.reserve(p.term_count());
  for (const auto& [m, c] : p.terms()) monos.push_back(&m);
  std::sort(monos.begin(), monos.end(),
            [&](const Mono* a, const Mono* b) { return view.greater(*a, *b); });
  std::ostringstream out;
  bool first = true;
  for (const Mono* m : monos) {
    write_term(out, *p.ring(), *m, p.terms().at(*m), first);
    first = false;
  }
  return out.str();
}

std::string to_text(const Polynomial& p) {
  return to_text(p, MonomialOrder::lex(p.ring()->vars()));
}

namespace {

struct Parser {
  std::string_view s;
  std::size_t i = 0;
  const RingPtr& ring;

  explicit Parser(std::string_view text, const RingPtr& r) : s(text), ring(r) {}

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) { ++i; return true; }
    return false;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("polynomial parse error at offset " +
                                std::to_string(i) + ": " + why);
  }
  Int integer() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail("expected integer");
    return Int(std::string(s.substr(start, i - start)));
  }
  std::string ident() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
      ++i;
    if (i == start) fail("expected variable");
    return std::string(s.substr(start, i - start));
  }

  // term := factor ('*' factor)*
  void term(Polynomial& acc, bool negative) {
    Int coeff = 1;
    Mono m(ring->size(), 0);
    bool more = true;
    while (more) {
      skip_ws();
      if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        coeff *= integer();
      } else {
        Variable v = Variable::of(ident());
        auto idx = ring->index_of(v);
        if (!idx) fail("unknown variable " + v.name());
        std::uint32_t e = 1;
        if (eat('^')) e = static_cast<std::uint32_t>(integer().get_ui());
        m[*idx] += e;
      }
      more = eat('*');
    }
    if (negative) coeff = -coeff;
    Polynomial t(ring);
    t.add_term(m, coeff);
    acc = acc + t;
  }

  Polynomial parse() {
    Polynomial acc(ring);
    skip_ws();
    if (i >= s.size()) fail("empty input");
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    term(acc, neg);
    while (true) {
      skip_ws();
      if (i >= s.size()) break;
      if (eat('+')) term(acc, false);
      else if (eat('-')) term(acc, true);
      else fail("expected + or -");
    }
    return acc;
  }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring).parse();
}

}  // namespace edwards
