#include "stanley/decomposition.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "stanley/box.hpp"
#include "stanley/io.hpp"

namespace stanley {

bool space_contains(const StanleySpace& space, const Monomial& v) {
  require_same_ring(space.root, v);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < space.root[i]) return false;
    if (v[i] > space.root[i] && !space.vars.contains(i)) return false;
  }
  return true;
}

QuotientPair::QuotientPair(MonomialIdeal numerator, MonomialIdeal denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  require_same_ring(numerator_, denominator_);
  if (!numerator_.contains(denominator_)) {
    throw std::invalid_argument("quotient pair: denominator is not contained in numerator");
  }
}

QuotientPair QuotientPair::of_ideal(MonomialIdeal ideal) {
  const std::size_t n = ideal.ring_size();
  return QuotientPair(std::move(ideal), MonomialIdeal::zero(n));
}

QuotientPair QuotientPair::of_ring_quotient(MonomialIdeal ideal) {
  const std::size_t n = ideal.ring_size();
  return QuotientPair(MonomialIdeal::unit(n), std::move(ideal));
}

Monomial QuotientPair::generator_bound() const {
  return lcm(numerator_.generator_bound(), denominator_.generator_bound());
}

Monomial verification_bound(const StanleyDecomposition& d) {
  Monomial bound = d.quotient.generator_bound();
  for (const auto& sp : d.spaces) bound = lcm(bound, sp.root);
  for (std::size_t i = 0; i < bound.size(); ++i) bound[i] = checked_add(bound[i], 1);
  return bound;
}

Verification verify_decomposition(const StanleyDecomposition& d, Exponent extra_margin) {
  const std::size_t n = d.quotient.ring_size();
  for (const auto& sp : d.spaces) {
    require_same_ring(d.quotient.numerator(), sp.root);
    if (!sp.vars.is_subset_of(VariableSet::all(n))) throw RingMismatch("space variables outside the ring");
  }
  Monomial bound = verification_bound(d);
  for (std::size_t i = 0; i < n; ++i) bound[i] = checked_add(bound[i], extra_margin);
  const Box box(bound);

  // Saturating coverage counts, filled by walking each space's part of the box.
  std::vector<std::uint8_t> hits(box.volume(), 0);
  for (const auto& sp : d.spaces) {
    if (!divides(sp.root, bound)) continue;
    Monomial upper = sp.root;
    for (std::size_t i : sp.vars.indices()) upper[i] = bound[i];
    box.for_each_between(sp.root, upper, [&](const Monomial&, std::size_t index) {
      if (hits[index] < 2) ++hits[index];
    });
  }

  Verification result;
  box.for_each([&](const Monomial& m, std::size_t index) {
    if (!result.valid) return;
    const bool in_module = d.quotient.contains(m);
    if (in_module && hits[index] == 0) {
      result = {false, m, "monomial " + format_monomial(m) + " of I\\J lies in no space"};
    } else if (hits[index] > 1) {
      result = {false, m, "monomial " + format_monomial(m) + " lies in more than one space"};
    } else if (!in_module && hits[index] == 1) {
      result = {false, m, "space contains " + format_monomial(m) + ", which is not in I\\J"};
    }
  });
  return result;
}

std::size_t min_dimension(const std::vector<StanleySpace>& spaces) {
  if (spaces.empty()) return 0;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& sp : spaces) best = std::min(best, sp.dimension());
  return best;
}

std::size_t sdepth_of(const StanleyDecomposition& d) {
  if (auto v = verify_decomposition(d); !v) throw InvalidDecomposition("invalid Stanley decomposition: " + v.reason);
  return min_dimension(d.spaces);
}

nlohmann::json spaces_to_json(const std::vector<StanleySpace>& spaces) {
  auto arr = nlohmann::json::array();
  for (const auto& sp : spaces) {
    nlohmann::json s;
    s["root"] = monomial_to_json(sp.root);
    auto vars = nlohmann::json::array();
    for (std::size_t i : sp.vars.indices()) vars.push_back(i + 1);
    s["vars"] = std::move(vars);
    arr.push_back(std::move(s));
  }
  nlohmann::json j;
  j["spaces"] = std::move(arr);
  return j;
}

std::vector<StanleySpace> spaces_from_json(const nlohmann::json& j, std::size_t n) {
  if (!j.is_object() || !j.contains("spaces") || !j.at("spaces").is_array()) {
    throw ParseError("decomposition JSON must be an object with a \"spaces\" array");
  }
  std::vector<StanleySpace> out;
  for (const auto& s : j.at("spaces")) {
    if (!s.is_object() || !s.contains("root") || !s.contains("vars")) {
      throw ParseError("each space needs \"root\" and \"vars\"");
    }
    StanleySpace sp{monomial_from_json(s.at("root"), n), {}};
    if (!s.at("vars").is_array()) throw ParseError("\"vars\" must be an array");
    for (const auto& v : s.at("vars")) {
      if (!v.is_number_integer()) throw ParseError("variable indices must be integers");
      const auto i = v.get<long long>();
      if (i < 1 || static_cast<std::size_t>(i) > n) throw ParseError("variable index out of range");
      sp.vars.insert(static_cast<std::size_t>(i - 1));
    }
    out.push_back(std::move(sp));
  }
  return out;
}

std::string format_decomposition_json(const StanleyDecomposition& d) { return spaces_to_json(d.spaces).dump(); }

std::string format_space(const StanleySpace& space) {
  std::string out = format_monomial(space.root) + "*K[";
  bool first = true;
  for (std::size_t i : space.vars.indices()) {
    if (!first) out += ',';
    out += "x" + std::to_string(i + 1);
    first = false;
  }
  return out + "]";
}

}  // namespace stanley
