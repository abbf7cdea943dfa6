#include "stanley/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <random>
#include <sstream>
#include <unordered_set>

#include "stanley/box.hpp"

namespace stanley {

std::size_t CharacteristicPoset::free_count(const Monomial& c) const { return free_vars(c).size(); }

VariableSet CharacteristicPoset::free_vars(const Monomial& c) const {
  VariableSet z;
  for (std::size_t j = 0; j < bound.size(); ++j) {
    if (c[j] == bound[j]) z.insert(j);
  }
  return z;
}

CharacteristicPoset build_poset(const QuotientPair& quotient) {
  CharacteristicPoset poset{quotient, quotient.generator_bound(), {}};
  if (quotient.is_zero_module()) return poset;
  Box(poset.bound).for_each([&](const Monomial& c, std::size_t) {
    if (quotient.contains(c)) poset.points.push_back(c);
  });
  return poset;
}

std::size_t IntervalPartition::value(const CharacteristicPoset& poset) const {
  if (intervals.empty()) return 0;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& iv : intervals) best = std::min(best, poset.free_count(iv.top));
  return best;
}

StanleyDecomposition decomposition_from_partition(const CharacteristicPoset& poset,
                                                  const IntervalPartition& partition) {
  StanleyDecomposition d{poset.quotient, {}};
  const Box box(poset.bound);
  for (const auto& iv : partition.intervals) {
    const VariableSet z = poset.free_vars(iv.top);
    Monomial hi = iv.top;
    for (std::size_t j : z.indices()) hi[j] = iv.bottom[j];
    box.for_each_between(iv.bottom, hi, [&](const Monomial& c, std::size_t) { d.spaces.push_back({c, z}); });
  }
  return d;
}

namespace {

using Clock = std::chrono::steady_clock;

// Algorithm X over dancing links. Items [0, primary) must be covered exactly
// once; the remaining items at most once.
class ExactCover {
 public:
  ExactCover(std::size_t primary, std::size_t secondary) : primary_(primary) {
    const std::size_t items = primary + secondary;
    nodes_.resize(items + 1);
    size_.assign(items + 1, 0);
    for (std::size_t i = 0; i <= items; ++i) {
      nodes_[i].up = nodes_[i].down = static_cast<int>(i);
      nodes_[i].item = static_cast<int>(i);
    }
    // Header ring holds the root (0) and the primary items only.
    for (std::size_t i = 0; i <= primary; ++i) {
      nodes_[i].left = static_cast<int>(i == 0 ? primary : i - 1);
      nodes_[i].right = static_cast<int>(i == primary ? 0 : i + 1);
    }
    for (std::size_t i = primary + 1; i <= items; ++i) nodes_[i].left = nodes_[i].right = static_cast<int>(i);

    std::mt19937_64 rng(0x5354414e4c4559ULL);
    keys_.resize(items + 1);
    for (auto& k : keys_) k = {rng(), rng()};
  }

  void add_option(const std::vector<int>& items) {
    const int option = static_cast<int>(option_count_++);
    const int first = static_cast<int>(nodes_.size());
    for (std::size_t k = 0; k < items.size(); ++k) {
      const int header = items[k] + 1;
      const int id = static_cast<int>(nodes_.size());
      Node node;
      node.item = header;
      node.option = option;
      node.up = nodes_[header].up;
      node.down = header;
      node.left = k == 0 ? id : id - 1;
      node.right = first;
      nodes_.push_back(node);
      nodes_[nodes_[header].up].down = id;
      nodes_[header].up = id;
      if (k > 0) nodes_[id - 1].right = id;
      nodes_[first].left = id;
      ++size_[header];
    }
  }

  std::optional<std::vector<int>> solve(Clock::time_point deadline, double budget) {
    deadline_ = deadline;
    budget_ = budget;
    chosen_.clear();
    failed_.clear();
    if (search()) return chosen_;
    return std::nullopt;
  }

 private:
  struct Node {
    int left = 0, right = 0, up = 0, down = 0, item = 0, option = -1;
  };
  struct Key {
    std::uint64_t a = 0, b = 0;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return static_cast<std::size_t>(k.a ^ (k.b * 0x9e3779b97f4a7c15ULL)); }
  };

  static constexpr std::size_t kMaxMemo = 1u << 21;

  void toggle(int header) {
    state_.a ^= keys_[header].a;
    state_.b ^= keys_[header].b;
  }

  void cover(int c) {
    toggle(c);
    nodes_[nodes_[c].right].left = nodes_[c].left;
    nodes_[nodes_[c].left].right = nodes_[c].right;
    for (int i = nodes_[c].down; i != c; i = nodes_[i].down) {
      for (int j = nodes_[i].right; j != i; j = nodes_[j].right) {
        nodes_[nodes_[j].down].up = nodes_[j].up;
        nodes_[nodes_[j].up].down = nodes_[j].down;
        --size_[nodes_[j].item];
      }
    }
  }

  void uncover(int c) {
    for (int i = nodes_[c].up; i != c; i = nodes_[i].up) {
      for (int j = nodes_[i].left; j != i; j = nodes_[j].left) {
        ++size_[nodes_[j].item];
        nodes_[nodes_[j].down].up = j;
        nodes_[nodes_[j].up].down = j;
      }
    }
    nodes_[nodes_[c].right].left = c;
    nodes_[nodes_[c].left].right = c;
    toggle(c);
  }

  void tick() {
    if ((ticks_++ & 0x3ff) == 0 && Clock::now() > deadline_) {
      std::ostringstream msg;
      msg << "sdepth search exceeded the time budget of " << budget_ << " s";
      throw SolverRefused(SolverRefused::Reason::TimeBudget, msg.str());
    }
  }

  bool search() {
    if (nodes_[0].right == 0) return true;
    tick();
    if (failed_.count(state_) != 0) return false;

    int best = -1;
    for (int c = nodes_[0].right; c != 0; c = nodes_[c].right) {
      if (best < 0 || size_[c] < size_[best]) {
        best = c;
        if (size_[c] == 0) break;
      }
    }
    if (size_[best] > 0) {
      cover(best);
      for (int r = nodes_[best].down; r != best; r = nodes_[r].down) {
        chosen_.push_back(nodes_[r].option);
        for (int j = nodes_[r].right; j != r; j = nodes_[j].right) cover(nodes_[j].item);
        if (search()) return true;
        for (int j = nodes_[r].left; j != r; j = nodes_[j].left) uncover(nodes_[j].item);
        chosen_.pop_back();
      }
      uncover(best);
    }
    if (failed_.size() < kMaxMemo) failed_.insert(state_);
    return false;
  }

  std::size_t primary_;
  std::size_t option_count_ = 0;
  std::vector<Node> nodes_;
  std::vector<int> size_;
  std::vector<Key> keys_;
  Key state_;
  std::unordered_set<Key, KeyHash> failed_;
  std::vector<int> chosen_;
  Clock::time_point deadline_;
  double budget_ = 0;
  std::uint64_t ticks_ = 0;
};

void require_within_cap(const CharacteristicPoset& poset, const SolverLimits& limits) {
  if (poset.points.size() > limits.max_poset_points) {
    std::ostringstream msg;
    msg << "poset has " << poset.points.size() << " points, above the limit of " << limits.max_poset_points;
    throw SolverRefused(SolverRefused::Reason::PosetTooLarge, msg.str());
  }
}

// Dense lookup from box index to poset point index (-1 outside the poset).
std::vector<int> point_index(const CharacteristicPoset& poset, const Box& box) {
  std::vector<int> index(box.volume(), -1);
  for (std::size_t i = 0; i < poset.points.size(); ++i) index[box.index_of(poset.points[i])] = static_cast<int>(i);
  return index;
}

std::optional<std::int64_t> checked_binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // r * (n - k + i) / i stays integral at every step.
    std::int64_t t;
    if (__builtin_mul_overflow(r, n - k + i, &t)) return std::nullopt;
    r = t / i;
  }
  return r;
}

}  // namespace

std::optional<std::vector<std::int64_t>> hilbert_function(const CharacteristicPoset& poset, std::size_t max_degree) {
  // Every monomial u of I \ J clamps (u_j -> min(u_j, g_j)) to exactly one
  // point c, and the monomials clamping to c are c times arbitrary monomials
  // in the free variables of c.
  std::vector<std::int64_t> h(max_degree + 1, 0);
  for (const auto& c : poset.points) {
    const auto base = static_cast<std::size_t>(c.degree());
    const auto f = static_cast<std::int64_t>(poset.free_count(c));
    for (std::size_t m = base; m <= max_degree; ++m) {
      const auto r = static_cast<std::int64_t>(m - base);
      std::optional<std::int64_t> ways = f == 0 ? std::optional<std::int64_t>(r == 0 ? 1 : 0)
                                                : checked_binomial(r + f - 1, f - 1);
      if (!ways || __builtin_add_overflow(h[m], *ways, &h[m])) return std::nullopt;
    }
  }
  return h;
}

bool hilbert_series_admits(const CharacteristicPoset& poset, std::size_t d) {
  if (poset.empty() || d == 0) return true;
  std::size_t max_degree = poset.bound.size() + d;
  for (Exponent e : poset.bound.exponents()) max_degree += 2 * static_cast<std::size_t>(e);
  const auto h = hilbert_function(poset, max_degree);
  if (!h) return true;  // overflow: inconclusive, never a refutation
  for (std::size_t m = 0; m <= max_degree; ++m) {
    std::int64_t coeff = 0;
    for (std::size_t i = 0; i <= std::min(d, m); ++i) {
      const auto b = checked_binomial(static_cast<std::int64_t>(d), static_cast<std::int64_t>(i));
      std::int64_t term;
      if (!b || __builtin_mul_overflow(*b, (*h)[m - i], &term)) return true;
      if (i % 2 == 1) term = -term;
      if (__builtin_add_overflow(coeff, term, &coeff)) return true;
    }
    if (coeff < 0) return false;
  }
  return true;
}

std::optional<IntervalPartition> find_partition(const CharacteristicPoset& poset, std::size_t d,
                                                const SolverLimits& limits) {
  const auto start = Clock::now();
  require_within_cap(poset, limits);
  const std::size_t n = poset.bound.size();
  if (d > n) return std::nullopt;
  if (!hilbert_series_admits(poset, d)) return std::nullopt;

  // An interval whose top has free count above d splits into intervals with
  // free count exactly d plus singletons of free count above d. So the search
  // only has to cover the points of free count < d ("low" points) by disjoint
  // intervals with tops of free count exactly d.
  std::vector<std::size_t> rho(poset.points.size());
  std::vector<int> item(poset.points.size(), -1);
  std::vector<std::size_t> low, level;
  for (std::size_t i = 0; i < poset.points.size(); ++i) {
    rho[i] = poset.free_count(poset.points[i]);
    if (rho[i] < d) low.push_back(i);
    if (rho[i] == d) level.push_back(i);
  }
  for (std::size_t k = 0; k < low.size(); ++k) item[low[k]] = static_cast<int>(k);
  for (std::size_t k = 0; k < level.size(); ++k) item[level[k]] = static_cast<int>(low.size() + k);

  IntervalPartition partition;
  if (!low.empty()) {
    const Box box(poset.bound);
    const auto index = point_index(poset, box);
    ExactCover problem(low.size(), level.size());
    std::vector<Interval> options;
    std::vector<std::vector<int>> rows;
    for (std::size_t a : low) {
      const Monomial& bottom = poset.points[a];
      std::vector<std::pair<std::size_t, std::size_t>> candidates;  // (size, top)
      for (std::size_t b : level) {
        const Monomial& top = poset.points[b];
        if (!divides(bottom, top)) continue;
        std::size_t volume = 1;
        for (std::size_t j = 0; j < n; ++j) volume *= static_cast<std::size_t>(top[j] - bottom[j]) + 1;
        candidates.emplace_back(volume, b);
      }
      // Larger intervals first; ties by lexicographic order of the top.
      std::stable_sort(candidates.begin(), candidates.end(),
                       [](const auto& x, const auto& y) { return x.first > y.first; });
      for (const auto& [volume, b] : candidates) {
        std::vector<int> row;
        row.reserve(volume);
        box.for_each_between(bottom, poset.points[b], [&](const Monomial&, std::size_t idx) {
          const int p = index[idx];
          if (p < 0) throw std::logic_error("interval between two poset points left the poset");
          row.push_back(item[p]);
        });
        problem.add_option(row);
        options.push_back({bottom, poset.points[b]});
      }
    }
    const auto deadline =
        start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(limits.time_budget_secs));
    auto chosen = problem.solve(deadline, limits.time_budget_secs);
    if (!chosen) return std::nullopt;
    for (int o : *chosen) partition.intervals.push_back(options[static_cast<std::size_t>(o)]);
  }

  // Points not covered above have free count at least d and stay singletons.
  std::vector<bool> covered(poset.points.size(), false);
  {
    const Box box(poset.bound);
    const auto index = point_index(poset, box);
    for (const auto& iv : partition.intervals) {
      box.for_each_between(iv.bottom, iv.top, [&](const Monomial&, std::size_t idx) {
        covered[static_cast<std::size_t>(index[idx])] = true;
      });
    }
  }
  for (std::size_t i = 0; i < poset.points.size(); ++i) {
    if (!covered[i]) partition.intervals.push_back({poset.points[i], poset.points[i]});
  }
  std::sort(partition.intervals.begin(), partition.intervals.end(),
            [](const Interval& x, const Interval& y) { return x.bottom < y.bottom; });
  return partition;
}

std::size_t sdepth_upper_bound(const CharacteristicPoset& poset) {
  const std::size_t n = poset.bound.size();
  if (poset.empty()) return 0;
  const Box box(poset.bound);
  const auto index = point_index(poset, box);
  std::size_t best = n;
  for (const auto& c : poset.points) {
    bool maximal = true;
    for (std::size_t j = 0; j < n && maximal; ++j) {
      if (c[j] == poset.bound[j]) continue;
      Monomial up = c;
      ++up[j];
      if (index[box.index_of(up)] >= 0) maximal = false;
    }
    if (maximal) best = std::min(best, poset.free_count(c));
  }
  return best;
}

bool sdepth_decision(const QuotientPair& quotient, std::size_t d, const SolverLimits& limits) {
  if (d > quotient.ring_size()) throw std::invalid_argument("sdepth_decision: d exceeds the number of variables");
  if (d == 0) return true;
  if (quotient.is_zero_module()) return false;
  const auto poset = build_poset(quotient);
  require_within_cap(poset, limits);
  if (d > sdepth_upper_bound(poset) || !hilbert_series_admits(poset, d)) return false;
  return find_partition(poset, d, limits).has_value();
}

SdepthResult sdepth_exact(const QuotientPair& quotient, const SolverLimits& limits) {
  SdepthResult result{0, {}, StanleyDecomposition{quotient, {}}};
  if (quotient.is_zero_module()) return result;
  const auto poset = build_poset(quotient);
  require_within_cap(poset, limits);
  std::size_t ceiling = sdepth_upper_bound(poset);
  while (ceiling > 0 && !hilbert_series_admits(poset, ceiling)) --ceiling;

  // The all-singletons partition solves d = 0; each success at d may already
  // reach a higher value, so the next probe starts just above it.
  IntervalPartition best = *find_partition(poset, 0, limits);
  std::size_t value = best.value(poset);
  while (value < ceiling) {
    auto next = find_partition(poset, value + 1, limits);
    if (!next) break;
    best = std::move(*next);
    value = best.value(poset);
  }

  result.value = value;
  result.partition = std::move(best);
  result.witness = decomposition_from_partition(poset, result.partition);
  if (auto v = verify_decomposition(result.witness); !v) {
    throw std::logic_error("sdepth witness failed verification: " + v.reason);
  }
  if (min_dimension(result.witness.spaces) != value) throw std::logic_error("sdepth witness value mismatch");
  return result;
}

}  // namespace stanley
