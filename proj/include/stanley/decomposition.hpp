#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "stanley/ideal.hpp"

namespace stanley {

/// Stanley space root * K[vars].
struct StanleySpace {
  Monomial root;
  VariableSet vars;

  std::size_t dimension() const { return vars.size(); }
  bool operator==(const StanleySpace&) const = default;
};

// v lies in root*K[vars] iff root | v and v exceeds root only in `vars`.
bool space_contains(const StanleySpace& space, const Monomial& v);

/// The module I/J for monomial ideals J contained in I.
class QuotientPair {
 public:
  QuotientPair(MonomialIdeal numerator, MonomialIdeal denominator);

  // (I, 0), the ideal I itself.
  static QuotientPair of_ideal(MonomialIdeal ideal);
  // (S, I), the ring quotient S/I.
  static QuotientPair of_ring_quotient(MonomialIdeal ideal);

  const MonomialIdeal& numerator() const { return numerator_; }
  const MonomialIdeal& denominator() const { return denominator_; }
  std::size_t ring_size() const { return numerator_.ring_size(); }

  // u in I \ J.
  bool contains(const Monomial& u) const { return numerator_.contains(u) && !denominator_.contains(u); }
  bool is_zero_module() const { return numerator_ == denominator_; }
  // Componentwise max over the generators of both ideals.
  Monomial generator_bound() const;

  bool operator==(const QuotientPair&) const = default;

 private:
  MonomialIdeal numerator_;
  MonomialIdeal denominator_;
};

struct StanleyDecomposition {
  QuotientPair quotient;
  std::vector<StanleySpace> spaces;
};

class InvalidDecomposition : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Verification {
  bool valid = true;
  std::optional<Monomial> witness;  // first failing monomial in lexicographic order
  std::string reason;

  explicit operator bool() const { return valid; }
};

/// Componentwise max over the generators of I, J and all roots, plus one.
Monomial verification_bound(const StanleyDecomposition& d);

/// Decides whether `d` is a Stanley decomposition of its quotient.
///
/// Membership in I, J and every space depends on each exponent only up to
/// the generator and root maxima, so scanning the box [0, verification_bound]
/// decides validity for all monomials. `extra_margin` enlarges the box.
Verification verify_decomposition(const StanleyDecomposition& d, Exponent extra_margin = 0);

// Minimum space dimension, 0 for the empty decomposition (the zero module).
std::size_t min_dimension(const std::vector<StanleySpace>& spaces);

/// Stanley depth of a decomposition; throws InvalidDecomposition when it does
/// not verify.
std::size_t sdepth_of(const StanleyDecomposition& d);

nlohmann::json spaces_to_json(const std::vector<StanleySpace>& spaces);
std::vector<StanleySpace> spaces_from_json(const nlohmann::json& j, std::size_t n);
std::string format_decomposition_json(const StanleyDecomposition& d);
std::string format_space(const StanleySpace& space);

}  // namespace stanley
