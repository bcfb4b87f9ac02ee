#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "parikh/alphabet.hpp"

namespace parikh {

/// Per-symbol occurrence counts over a compressed alphabet.
class ParikhVector {
 public:
  ParikhVector() = default;
  explicit ParikhVector(std::size_t sigma) : counts_(sigma, 0) {}
  explicit ParikhVector(std::vector<std::uint64_t> counts)
      : counts_(std::move(counts)),
        total_(std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0})) {}

  std::uint64_t operator[](SymbolId c) const { return counts_[c]; }
  std::uint64_t total() const { return total_; }
  std::size_t sigma() const { return counts_.size(); }
  std::span<const std::uint64_t> counts() const { return counts_; }

  void add(SymbolId c, std::uint64_t k = 1) {
    counts_[c] += k;
    total_ += k;
  }

  /// Appends zero entries so the vector covers `sigma` ids.
  void grow(std::size_t sigma) {
    if (sigma > counts_.size()) counts_.resize(sigma, 0);
  }

  /// Component-wise <=, treating missing trailing entries as zero.
  bool dominated_by(const ParikhVector& supply) const {
    for (std::size_t c = 0; c < counts_.size(); ++c) {
      auto cap = c < supply.counts_.size() ? supply.counts_[c] : 0;
      if (counts_[c] > cap) return false;
    }
    return true;
  }

  ParikhVector& operator+=(const ParikhVector& other) {
    grow(other.sigma());
    for (std::size_t c = 0; c < other.counts_.size(); ++c) counts_[c] += other.counts_[c];
    total_ += other.total_;
    return *this;
  }
  friend ParikhVector operator+(ParikhVector a, const ParikhVector& b) { return a += b; }

  friend bool operator==(const ParikhVector&, const ParikhVector&) = default;

 private:
  std::vector<std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

/// Counts of `s` over `alphabet`. Throws UnknownSymbol for symbols outside it.
template <class Symbol, class Hash>
ParikhVector parikh(std::span<const Symbol> s,
                    const CompressedAlphabet<Symbol, Hash>& alphabet) {
  ParikhVector v(alphabet.size());
  for (const auto& c : s) v.add(alphabet.id_of(c));
  return v;
}

inline ParikhVector parikh_of_ids(std::span<const SymbolId> ids, std::size_t sigma) {
  ParikhVector v(sigma);
  for (auto c : ids) v.add(c);
  return v;
}

}  // namespace parikh
