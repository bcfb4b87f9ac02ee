#pragma once

// Brute-force reference implementations. These share nothing with the fast
// paths: no alphabet compression, no incremental state.

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "parikh/alphabet.hpp"

namespace parikh::oracle {

/// {i : sorted(T[i..i+m-1]) == sorted(P)}, one window at a time.
template <class Symbol>
std::vector<std::size_t> brute_matches(std::span<const Symbol> text,
                                       std::span<const Symbol> pattern) {
  std::vector<std::size_t> out;
  const std::size_t n = text.size(), m = pattern.size();
  if (m > n) return out;
  std::vector<Symbol> want(pattern.begin(), pattern.end());
  std::sort(want.begin(), want.end());
  for (std::size_t i = 0; i + m <= n; ++i) {
    std::vector<Symbol> window(text.begin() + i, text.begin() + i + m);
    std::sort(window.begin(), window.end());
    if (window == want) out.push_back(i);
  }
  return out;
}

struct BruteMfsp {
  std::int64_t ell = 0;
  std::int64_t r = -1;
  std::uint64_t length = 0;
};

/// Longest T[ell..r] whose counts fit under freq(P), by checking every
/// substring against the full supply. Ties go to the smallest ell.
template <class Symbol>
BruteMfsp brute_mfsp(std::span<const Symbol> text, std::span<const Symbol> pattern) {
  std::map<Symbol, std::uint64_t> supply;
  for (const auto& c : pattern) ++supply[c];
  auto fits = [&](const std::map<Symbol, std::uint64_t>& counts) {
    for (const auto& [c, k] : counts) {
      auto it = supply.find(c);
      if (k > (it == supply.end() ? 0 : it->second)) return false;
    }
    return true;
  };

  BruteMfsp best;
  const std::size_t n = text.size();
  for (std::size_t ell = 0; ell < n; ++ell) {
    std::map<Symbol, std::uint64_t> counts;
    for (std::size_t r = ell; r < n; ++r) {
      ++counts[text[r]];
      const std::uint64_t len = r - ell + 1;
      if (len > best.length && fits(counts)) {
        best.length = len;
        best.ell = static_cast<std::int64_t>(ell);
        best.r = static_cast<std::int64_t>(r);
      }
    }
  }
  return best;
}

/// Largest disjoint subset by trying all 2^k subsets. k <= 25.
inline std::size_t brute_pack_exhaustive(std::span<const std::size_t> matches, std::size_t m) {
  if (matches.size() > 25) throw std::invalid_argument("too many matches for exhaustive search");
  std::vector<std::size_t> starts(matches.begin(), matches.end());
  std::sort(starts.begin(), starts.end());
  const std::size_t k = starts.size();
  std::size_t best = 0;
  // Include/exclude search over disjoint subsets, cut when the rest cannot beat best.
  auto search = [&](auto&& self, std::size_t j, std::size_t taken, std::size_t free_from) -> void {
    if (taken + (k - j) <= best) return;
    if (j == k) {
      best = taken;
      return;
    }
    if (starts[j] >= free_from) self(self, j + 1, taken + 1, starts[j] + m);
    self(self, j + 1, taken, free_from);
  };
  search(search, 0, 0, 0);
  return best;
}

/// Weighted-interval-scheduling DP with unit weights, intervals sorted by end.
inline std::size_t brute_pack_dp(std::span<const std::size_t> matches, std::size_t m) {
  std::vector<std::size_t> starts(matches.begin(), matches.end());
  std::sort(starts.begin(), starts.end());
  const std::size_t k = starts.size();
  // dp[j] = best over the first j intervals.
  std::vector<std::size_t> dp(k + 1, 0);
  for (std::size_t j = 1; j <= k; ++j) {
    const std::size_t s = starts[j - 1];
    std::size_t p = j - 1;  // intervals ending before s
    while (p > 0 && starts[p - 1] + m > s) --p;
    dp[j] = std::max(dp[j - 1], dp[p] + 1);
  }
  return dp[k];
}

/// Maximum number of pairwise disjoint length-m intervals. Uses both
/// sub-oracles when the set is small enough and insists they agree.
inline std::size_t brute_pack(std::span<const std::size_t> matches, std::size_t m) {
  const std::size_t dp = brute_pack_dp(matches, m);
  if (matches.size() <= 25) {
    const std::size_t ex = brute_pack_exhaustive(matches, m);
    if (ex != dp) throw std::logic_error("packing sub-oracles disagree");
  }
  return dp;
}

inline std::vector<std::size_t> brute_matches(std::string_view text, std::string_view pattern) {
  return brute_matches(bytes(text), bytes(pattern));
}

inline BruteMfsp brute_mfsp(std::string_view text, std::string_view pattern) {
  return brute_mfsp(bytes(text), bytes(pattern));
}

}  // namespace parikh::oracle
