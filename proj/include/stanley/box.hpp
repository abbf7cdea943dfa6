#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "stanley/monomial.hpp"

namespace stanley {

/// Dense indexing of the exponent box [0, bound]. Indices increase with the
/// lexicographic order of exponent vectors (x_1 most significant).
class Box {
 public:
  explicit Box(Monomial bound) : bound_(std::move(bound)), stride_(bound_.size(), 1) {
    volume_ = 1;
    for (std::size_t i = bound_.size(); i-- > 0;) {
      stride_[i] = volume_;
      const std::size_t side = static_cast<std::size_t>(bound_[i]) + 1;
      if (volume_ > kMaxVolume / side) throw std::length_error("exponent box too large");
      volume_ *= side;
    }
  }

  static constexpr std::size_t kMaxVolume = std::size_t{1} << 28;

  const Monomial& bound() const { return bound_; }
  std::size_t volume() const { return volume_; }

  bool contains(const Monomial& m) const { return divides(m, bound_); }

  std::size_t index_of(const Monomial& m) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < m.size(); ++i) idx += stride_[i] * m[i];
    return idx;
  }

  Monomial at(std::size_t index) const {
    Monomial m(bound_.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      m[i] = static_cast<Exponent>(index / stride_[i]);
      index %= stride_[i];
    }
    return m;
  }

  template <typename Visitor>
  void for_each(Visitor&& visit) const {
    for_each_between(Monomial(bound_.size()), bound_, visit);
  }

  /// Visits the interval [lo, hi] (clipped to the box) in lexicographic order.
  template <typename Visitor>
  void for_each_between(const Monomial& lo, const Monomial& hi, Visitor&& visit) const {
    const std::size_t n = bound_.size();
    Monomial top(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (lo[i] > std::min(hi[i], bound_[i])) return;
      top[i] = std::min(hi[i], bound_[i]);
    }
    Monomial cur = lo;
    std::size_t idx = index_of(cur);
    while (true) {
      visit(static_cast<const Monomial&>(cur), idx);
      std::size_t i = n;
      while (true) {
        if (i == 0) return;
        --i;
        if (cur[i] < top[i]) {
          ++cur[i];
          idx += stride_[i];
          break;
        }
        idx -= stride_[i] * (cur[i] - lo[i]);
        cur[i] = lo[i];
      }
    }
  }

 private:
  Monomial bound_;
  std::vector<std::size_t> stride_;
  std::size_t volume_ = 1;
};

}  // namespace stanley
