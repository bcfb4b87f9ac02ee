#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "parikh/alphabet.hpp"
#include "parikh/diff_state.hpp"
#include "parikh/parikh_vector.hpp"

namespace parikh {

/// Start positions of every length-m window of the text whose Parikh vector
/// equals the pattern's.
struct MatchReport {
  bool found = false;
  std::vector<std::size_t> positions;  // ascending
  std::size_t n = 0;                   // text length
  std::size_t m = 0;                   // pattern length
  std::uint64_t applies = 0;           // DiffState updates performed
};

namespace detail {

struct NoWindowObserver {
  void operator()(std::size_t, const DiffState&) const {}
};

/// Sliding-window scan over id-encoded text. `on_window(i, state)` sees the
/// state for every window W_i that is examined. With `first_only` the scan
/// stops at the first match.
template <class Observer = NoWindowObserver>
MatchReport scan_ids(std::span<const SymbolId> text, std::span<const SymbolId> pattern,
                     std::size_t sigma, bool first_only, Observer&& on_window = {}) {
  MatchReport report;
  report.n = text.size();
  report.m = pattern.size();
  const std::size_t n = text.size();
  const std::size_t m = pattern.size();
  if (m > n) return report;

  DiffState state = DiffState::from_pattern(parikh_of_ids(pattern, sigma));
  for (std::size_t j = 0; j < m; ++j) state.add(text[j]);

  auto record = [&](std::size_t i) {
    on_window(i, std::as_const(state));
    if (state.is_match()) {
      report.positions.push_back(i);
      return first_only;
    }
    return false;
  };

  if (!record(0)) {
    for (std::size_t i = 0; i + m < n; ++i) {
      state.remove(text[i]);
      state.add(text[i + m]);
      if (record(i + 1)) break;
    }
  }
  report.found = !report.positions.empty();
  report.applies = state.applies();
  return report;
}

template <class Symbol, class Observer = NoWindowObserver>
MatchReport scan(std::span<const Symbol> text, std::span<const Symbol> pattern, bool first_only,
                 Observer&& on_window = {}) {
  auto alphabet = build_alphabet<Symbol>({pattern, text});
  auto p = encode(pattern, alphabet);
  auto t = encode(text, alphabet);
  return scan_ids(std::span<const SymbolId>(t), std::span<const SymbolId>(p), alphabet.size(),
                  first_only, std::forward<Observer>(on_window));
}

}  // namespace detail

/// All permutation-match start positions of `pattern` in `text`, found in a
/// single pass. An empty pattern matches every (empty) window, so the result
/// is 0..n; a pattern longer than the text matches nowhere.
template <class Symbol>
MatchReport enumerate(std::span<const Symbol> text, std::span<const Symbol> pattern) {
  return detail::scan(text, pattern, false);
}

/// Smallest start position of a permutation match, if any.
template <class Symbol>
std::optional<std::size_t> find_first(std::span<const Symbol> text,
                                      std::span<const Symbol> pattern) {
  auto report = detail::scan(text, pattern, true);
  if (!report.found) return std::nullopt;
  return report.positions.front();
}

template <SymbolRange T, SymbolRange P>
  requires std::same_as<symbol_t<T>, symbol_t<P>>
MatchReport enumerate(const T& text, const P& pattern) {
  return enumerate(as_span(text), as_span(pattern));
}

template <SymbolRange T, SymbolRange P>
  requires std::same_as<symbol_t<T>, symbol_t<P>>
std::optional<std::size_t> find_first(const T& text, const P& pattern) {
  return find_first(as_span(text), as_span(pattern));
}

inline MatchReport enumerate(std::string_view text, std::string_view pattern) {
  return enumerate(bytes(text), bytes(pattern));
}

inline std::optional<std::size_t> find_first(std::string_view text, std::string_view pattern) {
  return find_first(bytes(text), bytes(pattern));
}

/// Incremental matcher for text that arrives one symbol at a time.
///
/// Keeps only the last m symbol ids in a ring buffer, so memory is
/// O(m + sigma') regardless of text length. Text symbols that are not in the
/// pattern get fresh ids on first sight with a zero difference entry, which
/// gives the same ids as building the alphabet over pattern then text.
template <class Symbol, class Hash = std::hash<Symbol>>
class StreamingMatcher {
 public:
  explicit StreamingMatcher(std::span<const Symbol> pattern) : m_(pattern.size()), ring_(m_) {
    for (const auto& c : pattern) alphabet_.insert(c);
    state_ = DiffState::from_pattern(parikh(pattern, alphabet_));
  }

  /// Start of the current window if it is complete and a match. For the
  /// empty pattern window 0 exists before anything is pushed.
  std::optional<std::size_t> current_match() const {
    if (consumed_ < m_ || !state_.is_match()) return std::nullopt;
    return consumed_ - m_;
  }

  /// Consumes one text symbol; returns the start of the window that this
  /// symbol completed, if that window is a match.
  std::optional<std::size_t> push(const Symbol& s) {
    const SymbolId id = alphabet_.insert(s);
    state_.grow(alphabet_.size());
    if (m_ == 0) {
      state_.remove(id);
      state_.add(id);
    } else if (consumed_ < m_) {
      state_.add(id);
      ring_[consumed_] = id;
    } else {
      state_.remove(ring_[head_]);
      state_.add(id);
      ring_[head_] = id;
      head_ = head_ + 1 == m_ ? 0 : head_ + 1;
    }
    ++consumed_;
    return current_match();
  }

  std::size_t consumed() const { return consumed_; }
  std::size_t pattern_length() const { return m_; }
  std::uint64_t applies() const { return state_.applies(); }
  const DiffState& state() const { return state_; }
  const CompressedAlphabet<Symbol, Hash>& alphabet() const { return alphabet_; }

 private:
  std::size_t m_;
  CompressedAlphabet<Symbol, Hash> alphabet_;
  DiffState state_;
  std::vector<SymbolId> ring_;
  std::size_t head_ = 0;
  std::size_t consumed_ = 0;
};

}  // namespace parikh
