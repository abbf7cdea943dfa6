#include "stanley/ideal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace stanley {

namespace {

void check_width(std::size_t n, const Monomial& m) {
  if (m.size() != n) {
    std::ostringstream msg;
    msg << "ring mismatch: generator over " << m.size() << " variables in an ideal over " << n;
    throw RingMismatch(msg.str());
  }
}

}  // namespace

MonomialIdeal minimalize(std::size_t n, std::vector<Monomial> gens) {
  for (const auto& g : gens) check_width(n, g);
  // A divisor has degree at most that of its multiple, so scanning by degree
  // only needs to compare against already accepted generators.
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    const auto da = a.degree();
    const auto db = b.degree();
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (auto& g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& h) { return divides(h, g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end());
  return MonomialIdeal(n, std::move(kept), MonomialIdeal::Canonical{});
}

MonomialIdeal::MonomialIdeal(std::size_t n, std::vector<Monomial> generators)
    : MonomialIdeal(minimalize(n, std::move(generators))) {}

MonomialIdeal MonomialIdeal::prime(std::size_t n, VariableSet vars) {
  std::vector<Monomial> gens;
  for (std::size_t i : vars.indices()) gens.push_back(Monomial::variable(n, i));
  return MonomialIdeal(n, std::move(gens));
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(generators_.begin(), generators_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& u) const {
  check_width(n_, u);
  return std::any_of(generators_.begin(), generators_.end(), [&](const Monomial& g) { return divides(g, u); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  require_same_ring(*this, other);
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [&](const Monomial& g) { return contains(g); });
}

Monomial MonomialIdeal::generator_bound() const {
  Monomial bound(n_);
  for (const auto& g : generators_) bound = lcm(bound, g);
  return bound;
}

VariableSet MonomialIdeal::support() const {
  VariableSet s;
  for (const auto& g : generators_) s = s | g.support();
  return s;
}

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ring_size() != b.ring_size()) {
    std::ostringstream msg;
    msg << "ring mismatch: ideals over " << a.ring_size() << " and " << b.ring_size() << " variables";
    throw RingMismatch(msg.str());
  }
}

void require_same_ring(const MonomialIdeal& a, const Monomial& u) { check_width(a.ring_size(), u); }

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) gens.push_back(lcm(g, h));
  }
  return minimalize(a.ring_size(), std::move(gens));
}

MonomialIdeal intersect_all(std::size_t n, std::span<const MonomialIdeal> ideals) {
  MonomialIdeal acc = MonomialIdeal::unit(n);
  for (const auto& ideal : ideals) acc = intersect(acc, ideal);
  return acc;
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) gens.push_back(g * h);
  }
  return minimalize(a.ring_size(), std::move(gens));
}

MonomialIdeal product_power(const MonomialIdeal& ideal, std::size_t k) {
  if (k == 0) throw std::invalid_argument("product_power: exponent must be at least 1");
  MonomialIdeal acc = ideal;
  for (std::size_t i = 1; i < k; ++i) acc = product(acc, ideal);
  return acc;
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return minimalize(a.ring_size(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& v) {
  require_same_ring(ideal, v);
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) gens.push_back(strip(g, v));
  return minimalize(ideal.ring_size(), std::move(gens));
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) gens.push_back(squarefree_part(g));
  return minimalize(ideal.ring_size(), std::move(gens));
}

Exponent radical_power_exponent(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw std::invalid_argument("radical_power_exponent: zero ideal");
  // u^k is in I iff some generator g has g_j <= k u_j for all j, so the
  // search for each k_i terminates at the largest generator exponent.
  const Exponent cap = [&] {
    Exponent m = 1;
    const Monomial bound = ideal.generator_bound();
    for (Exponent e : bound.exponents()) m = std::max(m, e);
    return m;
  }();
  Exponent result = 1;
  const MonomialIdeal rad = radical(ideal);
  for (const auto& u : rad.generators()) {
    Exponent k = 1;
    while (!ideal.contains(pow(u, k))) {
      if (k >= cap) throw std::logic_error("radical_power_exponent: search exceeded generator bound");
      ++k;
    }
    result = std::lcm(result, k);
  }
  return result;
}

}  // namespace stanley
