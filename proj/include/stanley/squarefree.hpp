#pragma once

#include <cstddef>
#include <vector>

#include <json.hpp>

#include "stanley/ideal.hpp"

namespace stanley {

/// Monomial prime generated by the variables in `support`.
struct PrimeIdeal {
  VariableSet support;

  MonomialIdeal as_ideal(std::size_t n) const { return MonomialIdeal::prime(n, support); }
  std::size_t height() const { return support.size(); }
  // u lies in p^k iff the degree of u in the variables of p is at least k.
  bool power_contains(const Monomial& u, std::size_t k) const { return u.degree_in(support) >= k; }

  auto operator<=>(const PrimeIdeal&) const = default;
};

/// Irredundant decomposition of a squarefree ideal into monomial primes.
struct PrimaryDecomposition {
  std::vector<PrimeIdeal> primes;  // sorted by (height, indices)
  MonomialIdeal source;
};

bool is_squarefree(const MonomialIdeal& ideal);

/// Minimal primes of a proper nonzero squarefree ideal: the minimal
/// transversals of its generator supports.
PrimaryDecomposition minimal_primes(const MonomialIdeal& ideal);

// Minimal transversals of a family of nonempty sets, by incremental
// dualization (one edge at a time, minimalizing after each step).
std::vector<VariableSet> minimal_transversals(const std::vector<VariableSet>& edges);

MonomialIdeal prime_power(std::size_t n, const PrimeIdeal& p, std::size_t k);

/// k-th symbolic power: the intersection of the k-th powers of the minimal
/// primes. The unit ideal and the zero ideal are fixed points.
MonomialIdeal symbolic_power(const MonomialIdeal& ideal, std::size_t k);
MonomialIdeal symbolic_power(const PrimaryDecomposition& decomposition, std::size_t k);
// Membership test that avoids materializing the generators.
bool symbolic_power_contains(const PrimaryDecomposition& decomposition, std::size_t k, const Monomial& u);

struct HeightInfo {
  std::size_t height;
  bool unmixed;
};

HeightInfo height_unmixed(const MonomialIdeal& ideal);

nlohmann::json decomposition_to_json(const PrimaryDecomposition& decomposition);

}  // namespace stanley
