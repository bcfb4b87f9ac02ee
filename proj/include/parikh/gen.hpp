#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "parikh/alphabet.hpp"

namespace parikh::gen {

/// SplitMix64 (Steele, Lea, Flood 2014):
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
/// Fixed here rather than taken from <random> so corpora are identical on
/// every platform and in every port.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound) via the high half of next() * bound (Lemire).
  /// bound must be nonzero.
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

 private:
  std::uint64_t state_;
};

class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Distribution { uniform, planted };

struct WorkloadSpec {
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t sigma = 1;
  std::uint64_t seed = 0;
  Distribution distribution = Distribution::uniform;
  std::vector<std::size_t> planted;  // window starts, planted mode only
};

/// Text and pattern as symbol ids in [0, sigma).
struct Workload {
  std::vector<SymbolId> text;
  std::vector<SymbolId> pattern;
};

inline void validate(const WorkloadSpec& spec) {
  if (spec.sigma < 1) throw SpecError("sigma must be at least 1");
  if (spec.sigma > (std::uint64_t{1} << 32)) throw SpecError("sigma exceeds the id range");
  if (spec.distribution == Distribution::uniform && !spec.planted.empty())
    throw SpecError("planted positions given for a uniform workload");
  if (spec.distribution == Distribution::planted) {
    if (spec.m > spec.n) throw SpecError("planted mode needs m <= n");
    auto sorted = spec.planted;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k) {
      if (sorted[k] > spec.n - spec.m)
        throw SpecError("planted position " + std::to_string(sorted[k]) + " out of range");
      if (k > 0 && (sorted[k] == sorted[k - 1] || sorted[k] < sorted[k - 1] + spec.m))
        throw SpecError("planted windows overlap");
    }
  }
}

/// Draws the pattern, then the text, each symbol uniform over [0, sigma).
/// In planted mode each planted window is then overwritten, in ascending
/// position order, with a Fisher-Yates shuffle of the pattern.
inline Workload generate(const WorkloadSpec& spec) {
  validate(spec);
  SplitMix64 rng(spec.seed);
  Workload w;
  w.pattern.resize(spec.m);
  for (auto& c : w.pattern) c = static_cast<SymbolId>(rng.below(spec.sigma));
  w.text.resize(spec.n);
  for (auto& c : w.text) c = static_cast<SymbolId>(rng.below(spec.sigma));

  if (spec.distribution == Distribution::planted) {
    auto order = spec.planted;
    std::sort(order.begin(), order.end());
    std::vector<SymbolId> perm = w.pattern;
    for (auto pos : order) {
      for (std::size_t k = perm.size(); k > 1; --k) std::swap(perm[k - 1], perm[rng.below(k)]);
      std::copy(perm.begin(), perm.end(), w.text.begin() + static_cast<std::ptrdiff_t>(pos));
    }
  }
  return w;
}

/// Printable byte for symbol ids when sigma <= 62, raw byte value otherwise.
inline constexpr std::string_view kPrintableSymbols =
    "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789";

inline std::string to_bytes(const std::vector<SymbolId>& ids, std::uint64_t sigma) {
  if (sigma > 256) throw SpecError("byte output needs sigma <= 256");
  std::string out(ids.size(), '\0');
  const bool printable = sigma <= kPrintableSymbols.size();
  for (std::size_t i = 0; i < ids.size(); ++i)
    out[i] = printable ? kPrintableSymbols[ids[i]] : static_cast<char>(ids[i]);
  return out;
}

/// Whitespace-separated tokens "s<id>", one line.
inline std::string to_tokens(const std::vector<SymbolId>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ' ';
    out += 's';
    out += std::to_string(ids[i]);
  }
  return out;
}

}  // namespace parikh::gen
