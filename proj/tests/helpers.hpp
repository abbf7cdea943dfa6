#pragma once

#include <vector>

#include "oracles.hpp"
#include "stanley/ideal.hpp"
#include "stanley/io.hpp"

namespace testing {

inline oracle::Vec to_vec(const stanley::Monomial& m) { return oracle::Vec(m.exponents().begin(), m.exponents().end()); }

inline stanley::Monomial to_monomial(const oracle::Vec& v) {
  return stanley::Monomial(std::vector<stanley::Exponent>(v.begin(), v.end()));
}

inline oracle::Gens to_gens(const stanley::MonomialIdeal& ideal) {
  oracle::Gens out;
  for (const auto& g : ideal.generators()) out.push_back(to_vec(g));
  return out;
}

inline stanley::MonomialIdeal to_ideal(std::size_t n, const oracle::Gens& gens) {
  std::vector<stanley::Monomial> ms;
  for (const auto& g : gens) ms.push_back(to_monomial(g));
  return stanley::MonomialIdeal(n, std::move(ms));
}

// Parses `x1*x2, x3^2` style generator lists in a ring with n variables.
inline stanley::MonomialIdeal ideal(std::size_t n, std::initializer_list<const char*> gens) {
  const stanley::Ring ring(n);
  std::vector<stanley::Monomial> ms;
  for (const char* g : gens) ms.push_back(stanley::parse_monomial(ring, g));
  return stanley::MonomialIdeal(n, std::move(ms));
}

inline stanley::Monomial mono(std::size_t n, const char* text) { return stanley::parse_monomial(stanley::Ring(n), text); }

}  // namespace testing
