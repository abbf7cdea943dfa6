#include "stanley/transfer.hpp"

#include <numeric>

#include "stanley/box.hpp"
#include "stanley/io.hpp"
#include "stanley/squarefree.hpp"

namespace stanley {

PhiMap PhiMap::power(Exponent k) {
  if (k == 0) throw std::invalid_argument("power map needs k >= 1");
  return PhiMap(Kind::Power, k, {});
}

Monomial PhiMap::operator()(const Monomial& u) const {
  switch (kind_) {
    case Kind::Identity:
      return u;
    case Kind::Power:
      return pow(u, k_);
    case Kind::Multiply:
      return u * v_;
  }
  return u;
}

Monomial PhiMap::pull_back_bound(const Monomial& image_bound) const {
  Monomial out = image_bound;
  switch (kind_) {
    case Kind::Identity:
      break;
    case Kind::Power:
      for (std::size_t i = 0; i < out.size(); ++i) out[i] = (image_bound[i] + k_ - 1) / k_;
      break;
    case Kind::Multiply:
      require_same_ring(image_bound, v_);
      for (std::size_t i = 0; i < out.size(); ++i) out[i] = image_bound[i] > v_[i] ? image_bound[i] - v_[i] : 0;
      break;
  }
  return out;
}

std::string PhiMap::describe() const {
  switch (kind_) {
    case Kind::Identity:
      return "identity";
    case Kind::Power:
      return "power(" + std::to_string(k_) + ")";
    case Kind::Multiply:
      return "multiply(" + format_monomial(v_) + ")";
  }
  return {};
}

QuotientPair shape_pair(PairShape shape, const MonomialIdeal& ideal) {
  return shape == PairShape::Ideal ? QuotientPair::of_ideal(ideal) : QuotientPair::of_ring_quotient(ideal);
}

TransferInstance make_symbolic_instance(const MonomialIdeal& ideal, std::size_t s, std::size_t k, PairShape shape) {
  if (s == 0 || k == 0) throw std::invalid_argument("symbolic instance needs s, k >= 1");
  if (!is_squarefree(ideal)) throw std::invalid_argument("symbolic instance needs a squarefree ideal");
  const auto primes = minimal_primes(ideal);
  return {shape_pair(shape, symbolic_power(primes, k * s)), shape_pair(shape, symbolic_power(primes, s)),
          PhiMap::power(static_cast<Exponent>(k))};
}

TransferInstance make_colon_instance(const MonomialIdeal& numerator, const MonomialIdeal& denominator,
                                     const Monomial& v) {
  QuotientPair source(numerator, denominator);
  require_same_ring(numerator, v);
  return {source, QuotientPair(colon(numerator, v), colon(denominator, v)), PhiMap::multiply(v)};
}

TransferInstance make_radical_instance(const MonomialIdeal& numerator, const MonomialIdeal& denominator) {
  if (numerator.is_zero()) throw std::invalid_argument("radical instance needs a nonzero numerator");
  QuotientPair source(numerator, denominator);
  // The zero ideal is radical, and u^k in 0 never holds, so any k works for it.
  const Exponent kj = denominator.is_zero() ? 1 : radical_power_exponent(denominator);
  const Exponent k = std::lcm(radical_power_exponent(numerator), kj);
  return {source, QuotientPair(radical(numerator), radical(denominator)), PhiMap::power(k)};
}

TransferInstance make_identity_instance(const QuotientPair& pair) { return {pair, pair, PhiMap::identity()}; }

namespace {

Monomial condition_box(const TransferInstance& instance) {
  Monomial bound = lcm(instance.target.generator_bound(), instance.phi.pull_back_bound(instance.source.generator_bound()));
  for (std::size_t i = 0; i < bound.size(); ++i) bound[i] = checked_add(bound[i], 1);
  return bound;
}

}  // namespace

ConditionCheck check_conditions(const TransferInstance& instance) {
  const auto& [src, tgt, phi] = instance;
  require_same_ring(src.numerator(), tgt.numerator());
  if (phi.kind() == PhiMap::Kind::Multiply) require_same_ring(src.numerator(), phi.multiplier());
  ConditionCheck out;
  const Box box(condition_box(instance));
  box.for_each([&](const Monomial& u, std::size_t) {
    if (!out.ok) return;
    const Monomial image = phi(u);
    if (tgt.numerator().contains(u) != src.numerator().contains(image)) {
      out = {false, u, "numerator membership of u and phi(u) differ"};
    } else if (tgt.denominator().contains(u) != src.denominator().contains(image)) {
      out = {false, u, "denominator membership of u and phi(u) differ"};
    }
  });
  return out;
}

TransferResult transfer(const TransferInstance& instance, const StanleyDecomposition& source_decomposition) {
  const auto& [src, tgt, phi] = instance;
  if (!(source_decomposition.quotient == src)) {
    throw std::invalid_argument("transfer: decomposition is not of the instance source");
  }
  if (auto v = verify_decomposition(source_decomposition); !v) {
    throw InvalidDecomposition("transfer: source decomposition is invalid: " + v.reason);
  }
  if (auto c = check_conditions(instance); !c) {
    throw TransferError("transfer: map conditions fail at " + format_monomial(*c.witness) + ": " + c.reason);
  }

  const auto& spaces = source_decomposition.spaces;
  Monomial roots = src.generator_bound();
  for (const auto& sp : spaces) roots = lcm(roots, sp.root);
  Monomial bound = lcm(tgt.generator_bound(), phi.pull_back_bound(roots));

  TransferResult result{StanleyDecomposition{tgt, {}}, min_dimension(spaces), 0, false, bound, 0};
  for (unsigned attempt = 0; attempt <= 3; ++attempt) {
    std::vector<std::optional<Monomial>> group_gcd(spaces.size());
    Box(bound).for_each([&](const Monomial& u, std::size_t) {
      if (!tgt.contains(u)) return;
      const Monomial image = phi(u);
      std::size_t holder = spaces.size();
      for (std::size_t i = 0; i < spaces.size(); ++i) {
        if (!space_contains(spaces[i], image)) continue;
        if (holder != spaces.size()) throw std::logic_error("transfer: phi(u) lies in two source spaces");
        holder = i;
      }
      if (holder == spaces.size()) throw std::logic_error("transfer: phi(u) lies in no source space");
      auto& g = group_gcd[holder];
      g = g ? gcd(*g, u) : u;
    });

    std::vector<StanleySpace> out;
    for (std::size_t i = 0; i < spaces.size(); ++i) {
      if (!group_gcd[i]) continue;
      if (!space_contains(spaces[i], phi(*group_gcd[i]))) {
        throw std::logic_error("transfer: image of a group root leaves its source space");
      }
      out.push_back({*group_gcd[i], spaces[i].vars});
    }
    result.output.spaces = std::move(out);
    result.box = bound;
    result.box_doublings = attempt;
    if (verify_decomposition(result.output)) {
      result.verified = true;
      result.output_sdepth = min_dimension(result.output.spaces);
      return result;
    }
    for (std::size_t i = 0; i < bound.size(); ++i) bound[i] = checked_add(checked_mul(bound[i], 2), 1);
  }
  throw TransferError("transfer: output failed verification after 3 box doublings");
}

nlohmann::json phi_to_json(const PhiMap& phi) {
  switch (phi.kind()) {
    case PhiMap::Kind::Identity:
      return {{"kind", "identity"}};
    case PhiMap::Kind::Power:
      return {{"kind", "power"}, {"k", phi.exponent()}};
    case PhiMap::Kind::Multiply:
      return {{"kind", "multiply"}, {"v", monomial_to_json(phi.multiplier())}};
  }
  return {};
}

namespace {

PhiMap phi_from_json(const nlohmann::json& j, std::size_t n) {
  const auto kind = j.value("kind", std::string{});
  if (kind == "identity") return PhiMap::identity();
  if (kind == "power") return PhiMap::power(j.at("k").get<Exponent>());
  if (kind == "multiply") return PhiMap::multiply(monomial_from_json(j.at("v"), n));
  throw ParseError("unknown phi kind \"" + kind + "\"");
}

nlohmann::json pair_to_json(const QuotientPair& q) {
  return {{"I", ideal_to_json(q.numerator())}, {"J", ideal_to_json(q.denominator())}};
}

MonomialIdeal ideal_field(const nlohmann::json& j, const char* key, std::size_t n) {
  if (!j.contains(key)) return MonomialIdeal::zero(n);
  auto ideal = ideal_from_json(j.at(key));
  if (ideal.ring_size() != n) throw ParseError(std::string("field ") + key + " has the wrong number of variables");
  return ideal;
}

std::size_t positive_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer() || j.at(key).get<long long>() < 1) {
    throw ParseError(std::string("field ") + key + " must be a positive integer");
  }
  return j.at(key).get<std::size_t>();
}

QuotientPair pair_from_json(const nlohmann::json& j, std::size_t n) {
  return QuotientPair(ideal_field(j, "I", n), ideal_field(j, "J", n));
}

}  // namespace

TransferInstance instance_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("transfer instance must be a JSON object");
  const auto kind = j.value("kind", std::string{});
  try {
    if (kind == "explicit") {
      const std::size_t n = positive_field(j, "n");
      return {pair_from_json(j.at("source"), n), pair_from_json(j.at("target"), n), phi_from_json(j.at("phi"), n)};
    }
    const auto numerator = ideal_from_json(j.at("I"));
    const std::size_t n = numerator.ring_size();
    if (kind == "symbolic") {
      const auto mode = j.value("mode", std::string{"ideal"});
      if (mode != "ideal" && mode != "quotient") throw ParseError("mode must be \"ideal\" or \"quotient\"");
      return make_symbolic_instance(numerator, positive_field(j, "s"), positive_field(j, "k"),
                                    mode == "ideal" ? PairShape::Ideal : PairShape::Quotient);
    }
    if (kind == "colon") return make_colon_instance(numerator, ideal_field(j, "J", n), monomial_from_json(j.at("v"), n));
    if (kind == "radical") return make_radical_instance(numerator, ideal_field(j, "J", n));
    if (kind == "identity") return make_identity_instance(QuotientPair(numerator, ideal_field(j, "J", n)));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("transfer instance: ") + e.what());
  }
  throw ParseError("unknown transfer instance kind \"" + kind + "\"");
}

nlohmann::json instance_to_json(const TransferInstance& instance) {
  return {{"kind", "explicit"},
          {"n", instance.source.ring_size()},
          {"phi", phi_to_json(instance.phi)},
          {"source", pair_to_json(instance.source)},
          {"target", pair_to_json(instance.target)}};
}

}  // namespace stanley
