#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace parikh::testing {

// Random strings over the first `sigma` lowercase letters.
class StringGen {
 public:
  explicit StringGen(std::uint64_t seed) : rng_(seed) {}

  std::string string(std::size_t len, std::size_t sigma) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(sigma) - 1);
    std::string s(len, 'a');
    for (auto& c : s) c = static_cast<char>('a' + pick(rng_));
    return s;
  }

  std::size_t uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Random strictly ascending subset of [0, limit] with at most `max_size` elements.
inline std::vector<std::size_t> random_match_set(std::mt19937_64& rng, std::size_t max_size,
                                                 std::size_t limit) {
  std::uniform_int_distribution<std::size_t> size_dist(0, max_size);
  std::uniform_int_distribution<std::size_t> pos(0, limit);
  const std::size_t want = size_dist(rng);
  std::vector<bool> taken(limit + 1, false);
  std::size_t have = 0;
  for (std::size_t tries = 0; have < want && tries < 8 * want + 8; ++tries) {
    auto p = pos(rng);
    if (!taken[p]) {
      taken[p] = true;
      ++have;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= limit; ++i)
    if (taken[i]) out.push_back(i);
  return out;
}

}  // namespace parikh::testing
