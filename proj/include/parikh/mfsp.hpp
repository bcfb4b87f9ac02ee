#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "parikh/alphabet.hpp"
#include "parikh/parikh_vector.hpp"

namespace parikh {

/// pop_left() on a symbol with no copies in the window. Only reachable
/// through a driver bug.
class UnderflowViolation : public std::logic_error {
 public:
  UnderflowViolation() : std::logic_error("pop_left on a symbol absent from the window") {}
};

/// Window counts against a fixed supply, with the number of symbols whose
/// count exceeds their supply kept up to date.
class FeasState {
 public:
  FeasState() = default;
  explicit FeasState(ParikhVector supply)
      : supply_(std::move(supply)), count_(supply_.sigma(), 0) {}

  void push(SymbolId c) {
    ++pushes_;
    const auto before = count_[c]++;
    if (before <= supply_[c] && count_[c] > supply_[c]) ++viol_;
  }

  void pop_left(SymbolId d) {
    if (count_[d] == 0) throw UnderflowViolation{};
    ++pops_;
    const auto before = count_[d]--;
    if (before > supply_[d] && count_[d] <= supply_[d]) --viol_;
  }

  bool feasible() const { return viol_ == 0; }
  std::size_t violations() const { return viol_; }
  std::uint64_t count(SymbolId c) const { return count_[c]; }
  std::uint64_t supply(SymbolId c) const { return supply_[c]; }
  std::span<const std::uint64_t> counts() const { return count_; }
  const ParikhVector& supply() const { return supply_; }
  std::size_t sigma() const { return count_.size(); }

  std::uint64_t pushes() const { return pushes_; }
  std::uint64_t pops() const { return pops_; }

  /// New symbols enter with zero supply.
  void grow(std::size_t sigma) {
    supply_.grow(sigma);
    if (sigma > count_.size()) count_.resize(sigma, 0);
  }

 private:
  ParikhVector supply_;
  std::vector<std::uint64_t> count_;
  std::size_t viol_ = 0;
  std::uint64_t pushes_ = 0;
  std::uint64_t pops_ = 0;
};

/// Longest substring T[ell..r] whose counts fit within the pattern's counts.
/// The empty result is (0, -1, 0).
struct MfspResult {
  std::int64_t ell = 0;
  std::int64_t r = -1;
  std::uint64_t length = 0;
  std::uint64_t pushes = 0;    // right-pointer advances
  std::uint64_t advances = 0;  // left-pointer advances
  std::size_t n = 0;
  std::size_t m = 0;
};

namespace detail {

struct NoFeasObserver {
  void operator()(std::size_t, std::size_t, const FeasState&) const {}
};

/// Two-pointer scan. `on_step(r, ell, state)` runs once per right endpoint,
/// after feasibility has been restored.
template <class Observer = NoFeasObserver>
MfspResult mfsp_ids(std::span<const SymbolId> text, std::span<const SymbolId> pattern,
                    std::size_t sigma, Observer&& on_step = {}) {
  MfspResult best;
  best.n = text.size();
  best.m = pattern.size();
  FeasState state(parikh_of_ids(pattern, sigma));
  std::size_t ell = 0;
  for (std::size_t r = 0; r < text.size(); ++r) {
    state.push(text[r]);
    while (!state.feasible()) state.pop_left(text[ell++]);
    on_step(r, ell, std::as_const(state));
    const std::uint64_t len = r + 1 - ell;
    if (len > best.length) {
      best.length = len;
      best.ell = static_cast<std::int64_t>(ell);
      best.r = static_cast<std::int64_t>(r);
    }
  }
  best.pushes = state.pushes();
  best.advances = state.pops();
  return best;
}

}  // namespace detail

/// Leftmost longest substring of `text` with freq(S) <= freq(pattern).
template <class Symbol>
MfspResult mfsp(std::span<const Symbol> text, std::span<const Symbol> pattern) {
  auto alphabet = build_alphabet<Symbol>({pattern, text});
  auto p = encode(pattern, alphabet);
  auto t = encode(text, alphabet);
  return detail::mfsp_ids(std::span<const SymbolId>(t), std::span<const SymbolId>(p),
                          alphabet.size());
}

template <SymbolRange T, SymbolRange P>
  requires std::same_as<symbol_t<T>, symbol_t<P>>
MfspResult mfsp(const T& text, const P& pattern) {
  return mfsp(as_span(text), as_span(pattern));
}

inline MfspResult mfsp(std::string_view text, std::string_view pattern) {
  return mfsp(bytes(text), bytes(pattern));
}

/// Incremental two-pointer scan. The live window never holds more than m+1
/// symbols, so only that many ids are buffered.
template <class Symbol, class Hash = std::hash<Symbol>>
class StreamingMfsp {
 public:
  explicit StreamingMfsp(std::span<const Symbol> pattern)
      : m_(pattern.size()), ring_(m_ + 1) {
    for (const auto& c : pattern) alphabet_.insert(c);
    state_ = FeasState(parikh(pattern, alphabet_));
  }

  void push(const Symbol& s) {
    const SymbolId id = alphabet_.insert(s);
    state_.grow(alphabet_.size());
    const std::size_t r = consumed_++;
    ring_[r % ring_.size()] = id;
    state_.push(id);
    while (!state_.feasible()) state_.pop_left(ring_[ell_++ % ring_.size()]);
    const std::uint64_t len = r + 1 - ell_;
    if (len > best_.length) {
      best_.length = len;
      best_.ell = static_cast<std::int64_t>(ell_);
      best_.r = static_cast<std::int64_t>(r);
    }
  }

  MfspResult result() const {
    MfspResult out = best_;
    out.pushes = state_.pushes();
    out.advances = state_.pops();
    out.n = consumed_;
    out.m = m_;
    return out;
  }

  std::size_t left() const { return ell_; }
  std::size_t consumed() const { return consumed_; }
  const FeasState& state() const { return state_; }

 private:
  std::size_t m_;
  CompressedAlphabet<Symbol, Hash> alphabet_;
  FeasState state_;
  std::vector<SymbolId> ring_;
  std::size_t ell_ = 0;
  std::size_t consumed_ = 0;
  MfspResult best_;
};

}  // namespace parikh
