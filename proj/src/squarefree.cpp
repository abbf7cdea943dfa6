#include "stanley/squarefree.hpp"

#include <algorithm>
#include <stdexcept>

namespace stanley {

namespace {

void require_squarefree(const MonomialIdeal& ideal, const char* op) {
  if (!ideal.is_squarefree()) throw std::invalid_argument(std::string(op) + ": ideal is not squarefree");
}

void require_proper_nonzero(const MonomialIdeal& ideal, const char* op) {
  if (ideal.is_zero()) throw std::invalid_argument(std::string(op) + ": zero ideal");
  if (ideal.is_unit()) throw std::invalid_argument(std::string(op) + ": unit ideal");
}

void drop_supersets(std::vector<VariableSet>& sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VariableSet> kept;
  for (VariableSet s : sets) {
    bool covered = std::any_of(kept.begin(), kept.end(), [&](VariableSet t) { return t.is_subset_of(s); });
    if (!covered) kept.push_back(s);
  }
  sets = std::move(kept);
}

void weak_compositions(std::vector<std::size_t> const& vars, std::size_t pos, Exponent remaining, Monomial& current,
                       std::vector<Monomial>& out) {
  if (pos + 1 == vars.size()) {
    current[vars[pos]] = remaining;
    out.push_back(current);
    current[vars[pos]] = 0;
    return;
  }
  for (Exponent e = 0; e <= remaining; ++e) {
    current[vars[pos]] = e;
    weak_compositions(vars, pos + 1, remaining - e, current, out);
  }
  current[vars[pos]] = 0;
}

}  // namespace

bool is_squarefree(const MonomialIdeal& ideal) { return ideal.is_squarefree(); }

std::vector<VariableSet> minimal_transversals(const std::vector<VariableSet>& edges) {
  std::vector<VariableSet> current{VariableSet{}};
  for (VariableSet edge : edges) {
    if (edge.empty()) throw std::invalid_argument("minimal_transversals: empty edge has no transversal");
    std::vector<VariableSet> next;
    for (VariableSet t : current) {
      if (!(t & edge).empty()) {
        next.push_back(t);
        continue;
      }
      for (std::size_t v : edge.indices()) {
        VariableSet grown = t;
        grown.insert(v);
        next.push_back(grown);
      }
    }
    drop_supersets(next);
    current = std::move(next);
  }
  return current;
}

PrimaryDecomposition minimal_primes(const MonomialIdeal& ideal) {
  require_squarefree(ideal, "minimal_primes");
  require_proper_nonzero(ideal, "minimal_primes");
  std::vector<VariableSet> edges;
  edges.reserve(ideal.size());
  for (const auto& g : ideal.generators()) edges.push_back(g.support());
  PrimaryDecomposition out{{}, ideal};
  for (VariableSet t : minimal_transversals(edges)) out.primes.push_back(PrimeIdeal{t});
  std::sort(out.primes.begin(), out.primes.end());
  return out;
}

MonomialIdeal prime_power(std::size_t n, const PrimeIdeal& p, std::size_t k) {
  if (k == 0) throw std::invalid_argument("prime_power: exponent must be at least 1");
  if (p.support.empty()) throw std::invalid_argument("prime_power: empty prime support");
  const auto vars = p.support.indices();
  if (vars.back() >= n) throw std::out_of_range("prime_power: variable outside the ring");
  std::vector<Monomial> gens;
  Monomial current(n);
  weak_compositions(vars, 0, static_cast<Exponent>(k), current, gens);
  return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal symbolic_power(const PrimaryDecomposition& decomposition, std::size_t k) {
  if (k == 0) throw std::invalid_argument("symbolic_power: exponent must be at least 1");
  const std::size_t n = decomposition.source.ring_size();
  MonomialIdeal acc = MonomialIdeal::unit(n);
  for (const auto& p : decomposition.primes) acc = intersect(acc, prime_power(n, p, k));
  return acc;
}

MonomialIdeal symbolic_power(const MonomialIdeal& ideal, std::size_t k) {
  if (k == 0) throw std::invalid_argument("symbolic_power: exponent must be at least 1");
  require_squarefree(ideal, "symbolic_power");
  if (ideal.is_unit() || ideal.is_zero()) return ideal;
  return symbolic_power(minimal_primes(ideal), k);
}

bool symbolic_power_contains(const PrimaryDecomposition& decomposition, std::size_t k, const Monomial& u) {
  require_same_ring(decomposition.source, u);
  return std::all_of(decomposition.primes.begin(), decomposition.primes.end(),
                     [&](const PrimeIdeal& p) { return p.power_contains(u, k); });
}

HeightInfo height_unmixed(const MonomialIdeal& ideal) {
  const auto decomposition = minimal_primes(ideal);
  std::size_t lo = decomposition.primes.front().height();
  std::size_t hi = lo;
  for (const auto& p : decomposition.primes) {
    lo = std::min(lo, p.height());
    hi = std::max(hi, p.height());
  }
  return {lo, lo == hi};
}

nlohmann::json decomposition_to_json(const PrimaryDecomposition& decomposition) {
  auto j = nlohmann::json::array();
  for (const auto& p : decomposition.primes) {
    auto members = nlohmann::json::array();
    for (std::size_t i : p.support.indices()) members.push_back(i + 1);
    j.push_back(std::move(members));
  }
  return j;
}

}  // namespace stanley
