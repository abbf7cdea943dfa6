#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "stanley/decomposition.hpp"

namespace stanley {

/// Monomial maps that carry Stanley spaces onto Stanley spaces: for every
/// member, v in u K[Z] iff phi(v) in phi(u) K[Z]. Power maps scale exponent
/// vectors and multiplication maps translate them, and both preserve
/// divisibility and the set of coordinates where one vector exceeds another.
class PhiMap {
 public:
  enum class Kind { Identity, Power, Multiply };

  static PhiMap identity() { return PhiMap(Kind::Identity, 1, {}); }
  static PhiMap power(Exponent k);
  static PhiMap multiply(Monomial v) { return PhiMap(Kind::Multiply, 1, std::move(v)); }

  Kind kind() const { return kind_; }
  Exponent exponent() const { return k_; }
  const Monomial& multiplier() const { return v_; }

  Monomial operator()(const Monomial& u) const;

  /// Smallest B with phi(B) >= image_bound componentwise, so that every
  /// threshold at or below image_bound is crossed inside [0, B].
  /// Power: ceil(image / k). Multiply: image - v clamped at 0.
  Monomial pull_back_bound(const Monomial& image_bound) const;

  std::string describe() const;

 private:
  PhiMap(Kind kind, Exponent k, Monomial v) : kind_(kind), k_(k), v_(std::move(v)) {}

  Kind kind_;
  Exponent k_;
  Monomial v_;
};

/// Data for transferring decompositions from `source` = J1/J2 to
/// `target` = I1/I2 along phi, where u in I1 iff phi(u) in J1 and u in I2 iff
/// phi(u) in J2.
struct TransferInstance {
  QuotientPair source;
  QuotientPair target;
  PhiMap phi;
};

enum class PairShape { Ideal, Quotient };  // (I, 0) or (S, I)

QuotientPair shape_pair(PairShape shape, const MonomialIdeal& ideal);

TransferInstance make_symbolic_instance(const MonomialIdeal& ideal, std::size_t s, std::size_t k, PairShape shape);
TransferInstance make_colon_instance(const MonomialIdeal& numerator, const MonomialIdeal& denominator,
                                     const Monomial& v);
TransferInstance make_radical_instance(const MonomialIdeal& numerator, const MonomialIdeal& denominator);
TransferInstance make_identity_instance(const QuotientPair& pair);

struct ConditionCheck {
  bool ok = true;
  std::optional<Monomial> witness;
  std::string reason;
  explicit operator bool() const { return ok; }
};

/// Checks both membership conditions on a box large enough to decide them
/// for every monomial (all thresholds lie inside it).
ConditionCheck check_conditions(const TransferInstance& instance);

class TransferError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TransferResult {
  StanleyDecomposition output;
  std::size_t input_sdepth = 0;
  std::size_t output_sdepth = 0;
  bool verified = false;
  Monomial box;                 // working box that produced `output`
  unsigned box_doublings = 0;
};

/// Builds a Stanley decomposition of instance.target from one of
/// instance.source. Monomials u of the target are grouped by the unique
/// source space t_i K[Z_i] holding phi(u); each nonempty group U_i
/// contributes gcd(U_i) K[Z_i].
TransferResult transfer(const TransferInstance& instance, const StanleyDecomposition& source_decomposition);

TransferInstance instance_from_json(const nlohmann::json& j);
nlohmann::json instance_to_json(const TransferInstance& instance);
nlohmann::json phi_to_json(const PhiMap& phi);

}  // namespace stanley
