#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "stanley/monomial.hpp"

namespace stanley {

/// Monomial ideal stored as its minimal generators in lexicographic order.
///
/// The empty generator list is the zero ideal and {1} is the whole ring.
/// Two ideals are equal iff their canonical generator lists are equal.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t n) : n_(n) {}
  MonomialIdeal(std::size_t n, std::vector<Monomial> generators);

  static MonomialIdeal zero(std::size_t n) { return MonomialIdeal(n); }
  static MonomialIdeal unit(std::size_t n) { return MonomialIdeal(n, {Monomial::one(n)}); }
  static MonomialIdeal principal(const Monomial& m) { return MonomialIdeal(m.size(), {m}); }
  static MonomialIdeal prime(std::size_t n, VariableSet vars);

  std::size_t ring_size() const { return n_; }
  const std::vector<Monomial>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }

  bool is_zero() const { return generators_.empty(); }
  bool is_unit() const { return generators_.size() == 1 && generators_.front().is_one(); }
  bool is_squarefree() const;

  bool contains(const Monomial& u) const;
  // True iff `other` is a subideal of this ideal.
  bool contains(const MonomialIdeal& other) const;

  // Componentwise max of generator exponents; the zero vector for the zero ideal.
  Monomial generator_bound() const;
  // Union of generator supports.
  VariableSet support() const;

  bool operator==(const MonomialIdeal&) const = default;

 private:
  struct Canonical {};
  MonomialIdeal(std::size_t n, std::vector<Monomial> generators, Canonical) : n_(n), generators_(std::move(generators)) {}
  friend MonomialIdeal minimalize(std::size_t n, std::vector<Monomial> gens);

  std::size_t n_;
  std::vector<Monomial> generators_;
};

/// Drops every monomial divisible by another one and sorts the rest.
MonomialIdeal minimalize(std::size_t n, std::vector<Monomial> gens);

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
// Left fold of pairwise intersections; the empty family gives the unit ideal.
MonomialIdeal intersect_all(std::size_t n, std::span<const MonomialIdeal> ideals);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product_power(const MonomialIdeal& ideal, std::size_t k);
MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
// (I : v) = {u : u v in I}.
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& v);
MonomialIdeal radical(const MonomialIdeal& ideal);

/// Least common multiple, over the minimal generators u_i of the radical, of
/// the least k_i with u_i^{k_i} in I. For every monomial u this exponent k
/// satisfies: u in rad(I) iff u^k in I.
Exponent radical_power_exponent(const MonomialIdeal& ideal);

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b);
void require_same_ring(const MonomialIdeal& a, const Monomial& u);

}  // namespace stanley
