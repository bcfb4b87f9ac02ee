#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "parikh/matcher.hpp"

namespace parikh {

class InvalidMatchSet : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Pairwise disjoint match intervals [s, s+m-1], smallest start first.
struct Selection {
  std::vector<std::size_t> starts;
  std::size_t m = 0;
  std::size_t count() const { return starts.size(); }
};

namespace detail {

inline void validate_matches(std::span<const std::size_t> matches, std::size_t m, std::size_t n) {
  if (m == 0) throw InvalidMatchSet("interval length must be at least 1");
  for (std::size_t k = 0; k < matches.size(); ++k) {
    if (m > n || matches[k] > n - m)
      throw InvalidMatchSet("match start " + std::to_string(matches[k]) + " out of range");
    if (k > 0 && matches[k] <= matches[k - 1])
      throw InvalidMatchSet("match starts must be strictly ascending");
  }
}

}  // namespace detail

/// Maximum set of non-overlapping equal-length intervals: take the earliest
/// start at or after the cursor, then move the cursor past its interval.
/// Runs over the sorted match list in O(|matches|).
inline Selection greedy_pack(std::span<const std::size_t> matches, std::size_t m, std::size_t n) {
  detail::validate_matches(matches, m, n);
  Selection sel;
  sel.m = m;
  std::size_t cursor = 0;
  for (auto s : matches) {
    if (s < cursor) continue;
    sel.starts.push_back(s);
    cursor = s + m;
  }
  return sel;
}

/// Same selection computed by walking every text position against a
/// membership bitmap, as in the textbook O(n) formulation.
inline Selection greedy_pack_by_position(std::span<const std::size_t> matches, std::size_t m,
                                         std::size_t n) {
  detail::validate_matches(matches, m, n);
  Selection sel;
  sel.m = m;
  if (m > n) return sel;
  std::vector<bool> is_match(n - m + 1, false);
  for (auto s : matches) is_match[s] = true;
  std::size_t i = 0;
  while (i <= n - m) {
    if (is_match[i]) {
      sel.starts.push_back(i);
      i += m;
    } else {
      ++i;
    }
  }
  return sel;
}

/// Enumerates the permutation matches of `pattern` and packs them. The empty
/// pattern yields an empty selection (there are no nonempty intervals).
template <class Symbol>
Selection pack_text(std::span<const Symbol> text, std::span<const Symbol> pattern) {
  if (pattern.empty()) return Selection{};
  auto report = enumerate(text, pattern);
  return greedy_pack(report.positions, report.m, report.n);
}

template <SymbolRange T, SymbolRange P>
  requires std::same_as<symbol_t<T>, symbol_t<P>>
Selection pack_text(const T& text, const P& pattern) {
  return pack_text(as_span(text), as_span(pattern));
}

inline Selection pack_text(std::string_view text, std::string_view pattern) {
  return pack_text(bytes(text), bytes(pattern));
}

}  // namespace parikh
