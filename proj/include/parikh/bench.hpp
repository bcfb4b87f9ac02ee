#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <future>
#include <string>
#include <vector>

#include "parikh/gen.hpp"
#include "parikh/matcher.hpp"
#include "parikh/mfsp.hpp"

namespace parikh::bench {

struct Grid {
  std::vector<std::uint64_t> sigmas;
  std::vector<std::size_t> ms;
  std::vector<std::size_t> ns;

  /// sigma x m over the fixed sets, n = n_min, 2 n_min, ... up to n_max.
  static Grid standard(std::size_t n_min, std::size_t n_max) {
    Grid g{{4, 16, 64, 256}, {16, 64, 256, 1024}, {}};
    for (std::size_t n = n_min; n > 0 && n <= n_max; n *= 2) g.ns.push_back(n);
    return g;
  }
};

struct Caps {
  std::size_t max_n = std::size_t{1} << 26;
  std::size_t max_cell_bytes = std::size_t{1} << 30;  // corpus + id buffers
};

struct Options {
  std::size_t repetitions = 5;  // >= 3
  std::size_t warmups = 1;
  std::uint64_t seed = 1;
  bool parallel = false;
};

struct Timing {
  double median_s = 0;
  double min_s = 0;
  double max_s = 0;
  double symbols_per_s = 0;
};

struct Cell {
  gen::WorkloadSpec spec;
  std::string skipped;  // reason; empty when measured
  std::size_t repetitions = 0;
  Timing matcher;
  Timing mfsp;
  std::size_t match_count = 0;
  std::uint64_t mfsp_length = 0;
  bool counters_ok = false;

  bool measured() const { return skipped.empty(); }
};

inline Timing summarize(std::vector<double> seconds, std::size_t n) {
  std::sort(seconds.begin(), seconds.end());
  Timing t;
  const std::size_t k = seconds.size();
  t.min_s = seconds.front();
  t.max_s = seconds.back();
  t.median_s = k % 2 ? seconds[k / 2] : (seconds[k / 2 - 1] + seconds[k / 2]) / 2;
  t.symbols_per_s = t.median_s > 0 ? static_cast<double>(n) / t.median_s : 0;
  return t;
}

/// Wall time of `fn` over `reps` runs after `warmups` discarded runs.
template <class Fn>
std::vector<double> time_runs(Fn&& fn, std::size_t warmups, std::size_t reps) {
  using clock = std::chrono::steady_clock;
  for (std::size_t k = 0; k < warmups; ++k) fn();
  std::vector<double> out;
  out.reserve(reps);
  for (std::size_t k = 0; k < reps; ++k) {
    auto t0 = clock::now();
    fn();
    out.push_back(std::chrono::duration<double>(clock::now() - t0).count());
  }
  return out;
}

inline std::uint64_t cell_seed(std::uint64_t base, std::uint64_t sigma, std::size_t m,
                               std::size_t n) {
  gen::SplitMix64 mix(base ^ (sigma * 0x100000001B3ULL) ^ (std::uint64_t{m} << 32) ^ n);
  return mix.next();
}

inline std::string skip_reason(const gen::WorkloadSpec& spec, const Caps& caps) {
  if (spec.m > spec.n) return "pattern longer than text";
  if (spec.n > caps.max_n) return "n exceeds cap " + std::to_string(caps.max_n);
  if (spec.sigma > 256) return "sigma exceeds byte alphabet";
  // generated ids, byte text, encoded ids inside the scan
  const std::size_t bytes = spec.n * (2 * sizeof(SymbolId) + 1);
  if (bytes > caps.max_cell_bytes)
    return "cell needs " + std::to_string(bytes) + " bytes, cap " +
           std::to_string(caps.max_cell_bytes);
  return {};
}

/// Generates the cell's corpus and times both scans on it. Corpus generation
/// and byte conversion are outside the timed region.
inline Cell run_cell(const gen::WorkloadSpec& spec, const Caps& caps, const Options& opt) {
  Cell cell;
  cell.spec = spec;
  cell.skipped = skip_reason(spec, caps);
  if (!cell.measured()) return cell;

  auto w = gen::generate(spec);
  const std::string text = gen::to_bytes(w.text, spec.sigma);
  const std::string pattern = gen::to_bytes(w.pattern, spec.sigma);

  const std::size_t reps = std::max<std::size_t>(opt.repetitions, 3);
  cell.repetitions = reps;

  MatchReport report;
  cell.matcher = summarize(
      time_runs([&] { report = parikh::enumerate(text, pattern); }, opt.warmups, reps), spec.n);
  MfspResult best;
  cell.mfsp =
      summarize(time_runs([&] { best = parikh::mfsp(text, pattern); }, opt.warmups, reps), spec.n);

  cell.match_count = report.positions.size();
  cell.mfsp_length = best.length;
  cell.counters_ok = report.applies == spec.m + 2 * (spec.n - spec.m) && best.pushes == spec.n &&
                     best.advances <= spec.n;
  return cell;
}

/// One cell per (sigma, m, n), in that nesting order. Cells over a cap come
/// back with a skip reason instead of timings.
inline std::vector<Cell> run_sweep(const Grid& grid, const Caps& caps, const Options& opt) {
  std::vector<gen::WorkloadSpec> specs;
  for (auto sigma : grid.sigmas)
    for (auto m : grid.ms)
      for (auto n : grid.ns) {
        gen::WorkloadSpec s;
        s.n = n;
        s.m = m;
        s.sigma = sigma;
        s.seed = cell_seed(opt.seed, sigma, m, n);
        specs.push_back(s);
      }

  std::vector<Cell> cells(specs.size());
  if (opt.parallel) {
    std::vector<std::future<Cell>> jobs;
    jobs.reserve(specs.size());
    for (const auto& s : specs)
      jobs.push_back(std::async(std::launch::async, [&caps, &opt, s] { return run_cell(s, caps, opt); }));
    for (std::size_t k = 0; k < jobs.size(); ++k) cells[k] = jobs[k].get();
  } else {
    for (std::size_t k = 0; k < specs.size(); ++k) cells[k] = run_cell(specs[k], caps, opt);
  }
  return cells;
}

/// Median time ratios between consecutive doublings of n, for cells that
/// share sigma and m and were measured.
struct ScalingRatio {
  std::uint64_t sigma;
  std::size_t m;
  std::size_t n_from;
  std::size_t n_to;
  double matcher;
  double mfsp;
};

inline std::vector<ScalingRatio> doubling_ratios(const std::vector<Cell>& cells) {
  std::vector<ScalingRatio> out;
  for (const auto& a : cells) {
    if (!a.measured()) continue;
    for (const auto& b : cells) {
      if (!b.measured() || b.spec.sigma != a.spec.sigma || b.spec.m != a.spec.m ||
          b.spec.n != 2 * a.spec.n)
        continue;
      out.push_back({a.spec.sigma, a.spec.m, a.spec.n, b.spec.n,
                     b.matcher.median_s / a.matcher.median_s, b.mfsp.median_s / a.mfsp.median_s});
    }
  }
  return out;
}

}  // namespace parikh::bench
