#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stanley {

using Exponent = std::uint32_t;

// Variable sets are bitmasks; bit i stands for x_{i+1}.
constexpr std::size_t kMaxVariables = 64;

class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Set of variable indices (0-based) of a ring with at most 64 variables.
class VariableSet {
 public:
  constexpr VariableSet() = default;
  constexpr explicit VariableSet(std::uint64_t bits) : bits_(bits) {}
  VariableSet(std::initializer_list<std::size_t> members);

  static VariableSet all(std::size_t n);
  static VariableSet from_indices(std::span<const std::size_t> members);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(std::size_t i) const { return i < 64 && ((bits_ >> i) & 1U); }
  constexpr bool empty() const { return bits_ == 0; }
  std::size_t size() const;
  std::vector<std::size_t> indices() const;

  void insert(std::size_t i);
  void erase(std::size_t i);

  constexpr bool is_subset_of(VariableSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr VariableSet operator&(VariableSet o) const { return VariableSet(bits_ & o.bits_); }
  constexpr VariableSet operator|(VariableSet o) const { return VariableSet(bits_ | o.bits_); }

  constexpr bool operator==(const VariableSet&) const = default;
  // Orders by size first, then by the sorted index list.
  std::strong_ordering operator<=>(const VariableSet& other) const;

 private:
  std::uint64_t bits_ = 0;
};

/// Polynomial ring K[x_1..x_n]; only the variable names are materialized.
class Ring {
 public:
  explicit Ring(std::size_t n);
  explicit Ring(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  // Returns size() when the name is unknown.
  std::size_t index_of(std::string_view name) const;

  bool operator==(const Ring&) const = default;

 private:
  std::vector<std::string> names_;
};

/// Monomial x^e as an exponent vector. The all-zero vector is the monomial 1.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t n) : exponents_(n, 0) {}
  explicit Monomial(std::vector<Exponent> exponents) : exponents_(std::move(exponents)) {}
  Monomial(std::initializer_list<Exponent> exponents) : exponents_(exponents) {}

  static Monomial one(std::size_t n) { return Monomial(n); }
  static Monomial variable(std::size_t n, std::size_t i);
  // Product of the variables in `vars`.
  static Monomial squarefree(std::size_t n, VariableSet vars);

  std::size_t size() const { return exponents_.size(); }
  Exponent operator[](std::size_t i) const { return exponents_[i]; }
  Exponent& operator[](std::size_t i) { return exponents_[i]; }
  std::span<const Exponent> exponents() const { return exponents_; }

  bool is_one() const;
  bool is_squarefree() const;
  std::uint64_t degree() const;
  VariableSet support() const;
  // Sum of exponents over the variables in `vars`.
  std::uint64_t degree_in(VariableSet vars) const;

  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<Exponent> exponents_;
};

void require_same_ring(const Monomial& a, const Monomial& b);

bool divides(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial operator*(const Monomial& a, const Monomial& b);
Monomial pow(const Monomial& a, Exponent k);
// a / b; requires b | a.
Monomial exact_quotient(const Monomial& a, const Monomial& b);
// a / gcd(a, b).
Monomial strip(const Monomial& a, const Monomial& b);
// Exponents clamped to at most 1.
Monomial squarefree_part(const Monomial& a);

Exponent checked_add(Exponent a, Exponent b);
Exponent checked_mul(Exponent a, Exponent b);

}  // namespace stanley
