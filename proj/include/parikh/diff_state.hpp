#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "parikh/parikh_vector.hpp"

namespace parikh {

enum class Step : int { remove = -1, add = +1 };

/// Difference vector freq(window) - freq(pattern) plus the count of its
/// nonzero coordinates. The window is a permutation of the pattern exactly
/// when nonzero() == 0.
class DiffState {
 public:
  DiffState() = default;
  explicit DiffState(std::size_t sigma) : delta_(sigma, 0) {}

  static DiffState from_pattern(const ParikhVector& pattern) {
    DiffState s(pattern.sigma());
    for (std::size_t c = 0; c < pattern.sigma(); ++c) {
      if (pattern[static_cast<SymbolId>(c)] > 0) {
        s.delta_[c] = -static_cast<std::int64_t>(pattern[static_cast<SymbolId>(c)]);
        ++s.nz_;
      }
    }
    return s;
  }

  /// Changes delta[c] by `step`; nz moves only on a zero crossing.
  void apply(SymbolId c, Step step) {
    ++applies_;
    auto& x = delta_[c];
    const bool was_zero = x == 0;
    x += static_cast<int>(step);
    if (was_zero)
      ++nz_;
    else if (x == 0)
      --nz_;
  }
  void add(SymbolId c) { apply(c, Step::add); }
  void remove(SymbolId c) { apply(c, Step::remove); }

  bool is_match() const { return nz_ == 0; }

  std::int64_t delta(SymbolId c) const { return delta_[c]; }
  std::span<const std::int64_t> deltas() const { return delta_; }
  std::size_t nonzero() const { return nz_; }
  std::size_t sigma() const { return delta_.size(); }

  /// Number of apply() calls since construction.
  std::uint64_t applies() const { return applies_; }

  /// Extends the alphabet with zero coordinates (a symbol absent from the
  /// pattern and not yet seen in the window).
  void grow(std::size_t sigma) {
    if (sigma > delta_.size()) delta_.resize(sigma, 0);
  }

 private:
  std::vector<std::int64_t> delta_;
  std::size_t nz_ = 0;
  std::uint64_t applies_ = 0;
};

}  // namespace parikh
