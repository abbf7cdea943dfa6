#include "stanley/monomial.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_set>

namespace stanley {

VariableSet::VariableSet(std::initializer_list<std::size_t> members) {
  for (std::size_t i : members) insert(i);
}

VariableSet VariableSet::all(std::size_t n) {
  if (n > kMaxVariables) throw std::invalid_argument("at most 64 variables are supported");
  return VariableSet(n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
}

VariableSet VariableSet::from_indices(std::span<const std::size_t> members) {
  VariableSet s;
  for (std::size_t i : members) s.insert(i);
  return s;
}

std::size_t VariableSet::size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

std::vector<std::size_t> VariableSet::indices() const {
  std::vector<std::size_t> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  }
  return out;
}

void VariableSet::insert(std::size_t i) {
  if (i >= kMaxVariables) throw std::out_of_range("variable index out of range");
  bits_ |= std::uint64_t{1} << i;
}

void VariableSet::erase(std::size_t i) {
  if (i < kMaxVariables) bits_ &= ~(std::uint64_t{1} << i);
}

std::strong_ordering VariableSet::operator<=>(const VariableSet& other) const {
  if (auto c = size() <=> other.size(); c != 0) return c;
  const auto a = indices();
  const auto b = other.indices();
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

Ring::Ring(std::size_t n) {
  if (n == 0) throw std::invalid_argument("a ring needs at least one variable");
  if (n > kMaxVariables) throw std::invalid_argument("at most 64 variables are supported");
  names_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names_.push_back("x" + std::to_string(i + 1));
}

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw std::invalid_argument("a ring needs at least one variable");
  if (names_.size() > kMaxVariables) throw std::invalid_argument("at most 64 variables are supported");
  std::unordered_set<std::string> seen;
  for (const auto& name : names_) {
    if (name.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(name).second) throw std::invalid_argument("duplicate variable name '" + name + "'");
  }
}

std::size_t Ring::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return static_cast<std::size_t>(it - names_.begin());
}

Monomial Monomial::variable(std::size_t n, std::size_t i) {
  if (i >= n) throw std::out_of_range("variable index out of range");
  Monomial m(n);
  m[i] = 1;
  return m;
}

Monomial Monomial::squarefree(std::size_t n, VariableSet vars) {
  Monomial m(n);
  for (std::size_t i : vars.indices()) {
    if (i >= n) throw std::out_of_range("variable index out of range");
    m[i] = 1;
  }
  return m;
}

bool Monomial::is_one() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](Exponent e) { return e <= 1; });
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (Exponent e : exponents_) d += e;
  return d;
}

VariableSet Monomial::support() const {
  VariableSet s;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] != 0) s.insert(i);
  }
  return s;
}

std::uint64_t Monomial::degree_in(VariableSet vars) const {
  std::uint64_t d = 0;
  for (std::size_t i : vars.indices()) {
    if (i < exponents_.size()) d += exponents_[i];
  }
  return d;
}

void require_same_ring(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) {
    std::ostringstream msg;
    msg << "ring mismatch: monomials over " << a.size() << " and " << b.size() << " variables";
    throw RingMismatch(msg.str());
  }
}

Exponent checked_add(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exponent overflow in addition");
  return r;
}

Exponent checked_mul(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("exponent overflow in multiplication");
  return r;
}

bool divides(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

Monomial pow(const Monomial& a, Exponent k) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(a[i], k);
  return r;
}

Monomial exact_quotient(const Monomial& a, const Monomial& b) {
  if (!divides(b, a)) throw std::invalid_argument("exact_quotient: divisor does not divide dividend");
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Monomial strip(const Monomial& a, const Monomial& b) {
  require_same_ring(a, b);
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > b[i] ? a[i] - b[i] : 0;
  return r;
}

Monomial squarefree_part(const Monomial& a) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > 0 ? 1 : 0;
  return r;
}

}  // namespace stanley
