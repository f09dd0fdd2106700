#include "edwards/division.hpp"

#include <json.hpp>

#include <map>
#include <random>
#include <stdexcept>

namespace edwards {

namespace {

struct Descending {
  const OrderView* view;
  bool operator()(const Mono& a, const Mono& b) const {
    return view->cmp(a, b) > 0;
  }
};

bool mono_divides(const Mono& d, const Mono& m) {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > m[i]) return false;
  return true;
}

}  // namespace

ReductionCertificate poly_reduce(const Polynomial& dividend,
                                 std::vector<Polynomial> divisors,
                                 MonomialOrder order) {
  if (divisors.empty()) throw std::invalid_argument("empty divisor list");
  for (const auto& d : divisors)
    if (d.is_zero()) throw std::invalid_argument("zero divisor");

  const RingPtr& ring = dividend.ring();
  OrderView view(order, *ring);
  std::vector<std::pair<Mono, Int>> lead;
  lead.reserve(divisors.size());
  for (const auto& d : divisors) lead.push_back(d.leading(view));

  std::map<Mono, Int, Descending> work(Descending{&view});
  for (const auto& [m, c] : dividend.terms()) work.emplace(m, c);

  std::vector<Polynomial> quotients(divisors.size(), Polynomial(ring));
  Polynomial remainder(ring);
  Mono qm(ring->size());

  while (!work.empty()) {
    auto it = work.begin();  // leading term of the running dividend
    const Mono m = it->first;
    const Int c = it->second;
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      const auto& [dm, dc] = lead[i];
      if (!mono_divides(dm, m)) continue;
      if (!mpz_divisible_p(c.get_mpz_t(), dc.get_mpz_t())) continue;
      for (std::size_t k = 0; k < qm.size(); ++k) qm[k] = m[k] - dm[k];
      Int qc = c / dc;
      quotients[i].add_term(qm, qc);
      // subtract qc * qm * divisors[i] from the working polynomial
      Mono t(qm.size());
      for (const auto& [pm, pc] : divisors[i].terms()) {
        for (std::size_t k = 0; k < t.size(); ++k) t[k] = pm[k] + qm[k];
        auto [wit, fresh] = work.try_emplace(t, 0);
        wit->second -= pc * qc;
        if (wit->second == 0) work.erase(wit);
      }
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.add_term(m, c);
      work.erase(work.begin());
    }
  }
  return {dividend, std::move(divisors), std::move(quotients),
          std::move(remainder), std::move(order)};
}

bool certificate_identity_holds(const ReductionCertificate& cert) {
  if (cert.divisors.size() != cert.quotients.size()) return false;
  Polynomial acc = cert.remainder;
  for (std::size_t i = 0; i < cert.divisors.size(); ++i)
    acc = acc + cert.quotients[i] * cert.divisors[i];
  return acc == cert.dividend;
}

bool certificate_random_audit(const ReductionCertificate& cert,
                              std::size_t trials, std::uint64_t seed) {
  const PrimeField k(kAuditPrime);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, kAuditPrime - 1);
  const std::size_t nvars = cert.dividend.ring()->size();
  std::vector<FieldElement> point(nvars);
  for (std::size_t t = 0; t < trials; ++t) {
    for (auto& x : point) x = k.element(dist(rng));
    FieldElement lhs = eval_poly(cert.dividend, point, k);
    FieldElement rhs = eval_poly(cert.remainder, point, k);
    for (std::size_t i = 0; i < cert.divisors.size(); ++i)
      rhs = k.add(rhs, k.mul(eval_poly(cert.quotients[i], point, k),
                             eval_poly(cert.divisors[i], point, k)));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

bool remainder_is_minimal(const ReductionCertificate& cert) {
  if (cert.remainder.is_zero()) return true;
  OrderView view(cert.order, *cert.dividend.ring());
  for (const auto& d : cert.divisors) {
    auto [dm, dc] = d.leading(view);
    for (const auto& [m, c] : cert.remainder.terms()) {
      if (mono_divides(dm, m) &&
          mpz_divisible_p(c.get_mpz_t(), dc.get_mpz_t()))
        return false;
    }
  }
  return true;
}

bool verify_certificate(const ReductionCertificate& cert, std::size_t trials,
                        std::uint64_t seed) {
  return certificate_identity_holds(cert) &&
         certificate_random_audit(cert, trials, seed);
}

std::pair<bool, ReductionCertificate> reduces_to_zero(
    const Polynomial& r, const std::vector<Polynomial>& divisors,
    const MonomialOrder& order) {
  if (r.is_zero()) {
    ReductionCertificate cert{
        r, divisors,
        std::vector<Polynomial>(divisors.size(), Polynomial(r.ring())),
        Polynomial(r.ring()), order};
    return {true, std::move(cert)};
  }
  ReductionCertificate cert = poly_reduce(r, divisors, order);
  bool zero = cert.remainder.is_zero();
  return {zero, std::move(cert)};
}

ScaledReduction reduce_with_unit(const Polynomial& r,
                                 const std::vector<Polynomial>& divisors,
                                 const MonomialOrder& order, Variable unit,
                                 std::uint32_t max_power) {
  Polynomial u = Polynomial::variable(r.ring(), unit);
  Polynomial scaled = r;
  for (std::uint32_t k = 0; k <= max_power; ++k) {
    auto [zero, cert] = reduces_to_zero(scaled, divisors, order);
    if (zero || k == max_power) {
      if (!zero && k == max_power) {
        // report the unscaled attempt on failure
        auto [z0, c0] = reduces_to_zero(r, divisors, order);
        return {std::move(c0), 0, z0};
      }
      return {std::move(cert), k, zero};
    }
    scaled = scaled * u;
  }
  auto [z0, c0] = reduces_to_zero(r, divisors, order);
  return {std::move(c0), 0, z0};
}

namespace {

nlohmann::ordered_json order_to_json(const MonomialOrder& o) {
  nlohmann::ordered_json j;
  j["kind"] = o.kind == MonomialOrder::Kind::lex ? "lex" : "grevlex";
  std::vector<std::string> seq;
  for (Variable v : o.sequence) seq.push_back(v.name());
  j["sequence"] = seq;
  return j;
}

}  // namespace

std::string certificate_to_json(const ReductionCertificate& cert) {
  nlohmann::ordered_json j;
  j["order"] = order_to_json(cert.order);
  std::vector<std::string> vars;
  for (Variable v : cert.dividend.ring()->vars()) vars.push_back(v.name());
  j["ring"] = vars;
  j["dividend"] = to_text(cert.dividend, cert.order);
  nlohmann::ordered_json divs = nlohmann::ordered_json::array();
  for (const auto& d : cert.divisors) divs.push_back(to_text(d, cert.order));
  j["divisors"] = divs;
  nlohmann::ordered_json quots = nlohmann::ordered_json::array();
  for (const auto& q : cert.quotients) quots.push_back(to_text(q, cert.order));
  j["quotients"] = quots;
  j["remainder"] = to_text(cert.remainder, cert.order);
  return j.dump(2);
}

ReductionCertificate certificate_from_json(const std::string& json,
                                           const RingPtr& ring) {
  auto j = nlohmann::json::parse(json);
  ReductionCertificate cert;
  cert.order.kind = j["order"]["kind"] == "lex" ? MonomialOrder::Kind::lex
                                                : MonomialOrder::Kind::grevlex;
  for (const auto& n : j["order"]["sequence"])
    cert.order.sequence.push_back(Variable::of(n.get<std::string>()));
  cert.dividend = parse_polynomial(j["dividend"].get<std::string>(), ring);
  for (const auto& d : j["divisors"])
    cert.divisors.push_back(parse_polynomial(d.get<std::string>(), ring));
  for (const auto& q : j["quotients"])
    cert.quotients.push_back(parse_polynomial(q.get<std::string>(), ring));
  cert.remainder = parse_polynomial(j["remainder"].get<std::string>(), ring);
  return cert;
}

std::string certificate_digest(const ReductionCertificate& cert) {
  std::string s = certificate_to_json(cert);
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace edwards
