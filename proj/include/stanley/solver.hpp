#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "stanley/decomposition.hpp"

namespace stanley {

struct SolverLimits {
  std::size_t max_poset_points = 4096;
  double time_budget_secs = 60.0;  // per decision call
};

/// Raised when an instance exceeds the configured limits. Never silently
/// replaced by an approximate answer.
class SolverRefused : public std::runtime_error {
 public:
  enum class Reason { PosetTooLarge, TimeBudget };
  SolverRefused(Reason reason, const std::string& what) : std::runtime_error(what), reason_(reason) {}
  Reason reason() const { return reason_; }

 private:
  Reason reason_;
};

/// Exponent vectors c <= g with x^c in I \ J, where g bounds the generators
/// of I and J.
struct CharacteristicPoset {
  QuotientPair quotient;
  Monomial bound;
  std::vector<Monomial> points;  // lexicographic order

  bool empty() const { return points.empty(); }
  // Number of coordinates where c reaches the bound.
  std::size_t free_count(const Monomial& c) const;
  // Variables where c reaches the bound.
  VariableSet free_vars(const Monomial& c) const;
};

CharacteristicPoset build_poset(const QuotientPair& quotient);

struct Interval {
  Monomial bottom;
  Monomial top;
  bool operator==(const Interval&) const = default;
};

struct IntervalPartition {
  std::vector<Interval> intervals;

  // Minimum free count of the interval tops; 0 for the empty partition.
  std::size_t value(const CharacteristicPoset& poset) const;
};

/// Every interval [a, b] becomes the spaces x^c K[Z] with Z the free
/// variables of b and c ranging over [a, b] with c_j = a_j on Z.
StanleyDecomposition decomposition_from_partition(const CharacteristicPoset& poset,
                                                  const IntervalPartition& partition);

/// Searches for a partition of the poset into intervals whose tops all have
/// free count at least `d`. Returns nullopt when none exists.
std::optional<IntervalPartition> find_partition(const CharacteristicPoset& poset, std::size_t d,
                                                const SolverLimits& limits = {});

// Minimum free count over the maximal points; every maximal point is the top
// of its interval, so this bounds sdepth from above.
std::size_t sdepth_upper_bound(const CharacteristicPoset& poset);

// Number of monomials of I \ J in each degree up to max_degree; nullopt on
// 64-bit overflow.
std::optional<std::vector<std::int64_t>> hilbert_function(const CharacteristicPoset& poset, std::size_t max_degree);

/// Necessary condition for a decomposition with all dimensions >= d: the
/// series (1-t)^d H(t) of I/J has no negative coefficient (each space
/// u K[Z] contributes t^deg(u) / (1-t)^(|Z|-d)). Checked up to a degree a bit
/// past the box; false is a proof of infeasibility, true proves nothing.
bool hilbert_series_admits(const CharacteristicPoset& poset, std::size_t d);

bool sdepth_decision(const QuotientPair& quotient, std::size_t d, const SolverLimits& limits = {});

struct SdepthResult {
  std::size_t value = 0;
  IntervalPartition partition;
  StanleyDecomposition witness;
};

SdepthResult sdepth_exact(const QuotientPair& quotient, const SolverLimits& limits = {});

}  // namespace stanley
