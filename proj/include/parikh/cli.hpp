#pragma once

// Command-line front end. Kept header-only so tests can drive run() with
// in-memory streams.

#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "parikh/bench.hpp"
#include "parikh/gen.hpp"
#include "parikh/io.hpp"
#include "parikh/matcher.hpp"
#include "parikh/mfsp.hpp"
#include "parikh/oracle.hpp"
#include "parikh/packing.hpp"

namespace parikh::cli {

enum ExitCode : int { kOk = 0, kNotFound = 1, kError = 2 };

enum class Format { text, records };

struct Options {
  std::optional<std::string> pattern;
  std::optional<std::string> pattern_file;
  std::optional<std::string> text;
  std::optional<std::string> text_file;
  io::Mode mode = io::Mode::bytes;
  Format format = Format::text;
  bool stats = false;
  bool oracle = false;
  bool quiet = false;
  bool show_substring = false;

  // gen
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t sigma = 4;
  std::uint64_t seed = 1;
  std::vector<std::size_t> plant;
  std::optional<std::string> out;

  // bench
  std::vector<std::uint64_t> sigmas;
  std::vector<std::size_t> ms;
  std::vector<std::size_t> ns;
  std::size_t n_min = 100000;
  std::size_t n_max = 1600000;
  std::size_t max_n = bench::Caps{}.max_n;
  std::size_t reps = 5;
  std::size_t warmups = 1;
  bool parallel = false;
};

/// Fast path and oracle disagreed.
class OracleMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

using json = nlohmann::ordered_json;

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

inline void emit(std::ostream& out, const json& record) {
  out << record.dump(-1, ' ', false, json::error_handler_t::replace) << '\n';
}

template <class T>
std::string join(const std::vector<T>& v, char sep) {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? std::string(1, sep) : "") << v[i];
  return s.str();
}

inline io::Source pattern_source(const Options& o) {
  if (!o.pattern && !o.pattern_file) throw UsageError("one of --pattern or --pattern-file is required");
  return {o.pattern, o.pattern_file};
}

inline io::Source text_source(const Options& o) { return {o.text, o.text_file}; }

/// A text that is either fully loaded (for the oracle or to recover the MFSP
/// substring from stdin) or streamed from its source.
template <io::Mode M>
struct Text {
  using Symbol = io::symbol_for<M>;
  io::Source source;
  std::optional<std::vector<Symbol>> loaded;

  template <class F>
  void for_each(std::istream& in, F&& f) const {
    if (loaded) {
      for (const auto& c : *loaded)
        if (!f(c)) return;
    } else {
      io::for_each_symbol<M>(source, in, std::forward<F>(f));
    }
  }
};

template <io::Mode M>
Text<M> open_text(const Options& o, std::istream& in, bool load) {
  Text<M> t{text_source(o), std::nullopt};
  if (load) t.loaded = io::read_all<M>(t.source, in);
  return t;
}

template <class Symbol>
std::vector<std::size_t> stream_positions(StreamingMatcher<Symbol>& sm, const auto& text,
                                          std::istream& in) {
  std::vector<std::size_t> positions;
  if (auto p = sm.current_match()) positions.push_back(*p);
  text.for_each(in, [&](const Symbol& c) {
    if (auto p = sm.push(c)) positions.push_back(*p);
    return true;
  });
  return positions;
}

template <io::Mode M>
int cmd_match(const Options& o, Streams s) {
  using Symbol = io::symbol_for<M>;
  const auto pattern = io::read_all<M>(pattern_source(o), s.in);
  const auto text = open_text<M>(o, s.in, o.oracle);

  StreamingMatcher<Symbol> sm{std::span<const Symbol>(pattern)};
  std::optional<std::size_t> hit = sm.current_match();
  if (!hit)
    text.for_each(s.in, [&](const Symbol& c) {
      hit = sm.push(c);
      return !hit;
    });

  if (o.oracle) {
    auto expected = oracle::brute_matches(std::span<const Symbol>(*text.loaded),
                                          std::span<const Symbol>(pattern));
    std::optional<std::size_t> want;
    if (!expected.empty()) want = expected.front();
    if (want != hit) throw OracleMismatch("match: first position differs from brute force");
  }

  if (!o.quiet) {
    if (o.format == Format::records) {
      json r{{"command", "match"}, {"found", hit.has_value()}};
      r["position"] = hit ? json(*hit) : json(nullptr);
      r["m"] = pattern.size();
      if (o.stats) r["stats"] = {{"scanned", sm.consumed()}, {"applies", sm.applies()}};
      emit(s.out, r);
    } else {
      if (hit) s.out << *hit << '\n';
      if (o.stats)
        s.out << "stats scanned=" << sm.consumed() << " m=" << pattern.size()
              << " applies=" << sm.applies() << '\n';
    }
  }
  return hit ? kOk : kNotFound;
}

template <io::Mode M>
int cmd_enumerate(const Options& o, Streams s) {
  using Symbol = io::symbol_for<M>;
  const auto pattern = io::read_all<M>(pattern_source(o), s.in);
  const auto text = open_text<M>(o, s.in, o.oracle);

  StreamingMatcher<Symbol> sm{std::span<const Symbol>(pattern)};
  const auto positions = stream_positions(sm, text, s.in);

  if (o.oracle) {
    auto expected = oracle::brute_matches(std::span<const Symbol>(*text.loaded),
                                          std::span<const Symbol>(pattern));
    if (expected != positions) throw OracleMismatch("enumerate: positions differ from brute force");
  }

  if (!o.quiet) {
    if (o.format == Format::records) {
      json r{{"command", "enumerate"}, {"found", !positions.empty()},
             {"n", sm.consumed()},     {"m", pattern.size()},
             {"count", positions.size()}, {"positions", positions}};
      if (o.stats) r["stats"] = {{"applies", sm.applies()}};
      emit(s.out, r);
    } else {
      for (auto p : positions) s.out << p << '\n';
      if (o.stats)
        s.out << "stats n=" << sm.consumed() << " m=" << pattern.size()
              << " count=" << positions.size() << " applies=" << sm.applies() << '\n';
    }
  }
  return kOk;
}

template <io::Mode M>
int cmd_mfsp(const Options& o, Streams s) {
  using Symbol = io::symbol_for<M>;
  const auto pattern = io::read_all<M>(pattern_source(o), s.in);
  const bool load = o.oracle || (o.show_substring && text_source(o).from_stream());
  const auto text = open_text<M>(o, s.in, load);

  StreamingMfsp<Symbol> scan{std::span<const Symbol>(pattern)};
  text.for_each(s.in, [&](const Symbol& c) {
    scan.push(c);
    return true;
  });
  const MfspResult res = scan.result();

  if (o.oracle) {
    auto want = oracle::brute_mfsp(std::span<const Symbol>(*text.loaded),
                                   std::span<const Symbol>(pattern));
    if (want.length != res.length || want.ell != res.ell || want.r != res.r)
      throw OracleMismatch("mfsp: window differs from brute force");
  }

  std::optional<std::string> substring;
  if (o.show_substring) {
    std::vector<Symbol> piece;
    const auto ell = static_cast<std::size_t>(res.ell);
    if (text.loaded)
      piece.assign(text.loaded->begin() + res.ell, text.loaded->begin() + res.ell + res.length);
    else
      piece = io::read_range<M>(text.source, s.in, ell, res.length);
    substring = io::render(piece);
  }

  if (!o.quiet) {
    if (o.format == Format::records) {
      json r{{"command", "mfsp"}, {"ell", res.ell}, {"r", res.r}, {"length", res.length},
             {"n", res.n},        {"m", res.m}};
      if (substring) r["substring"] = *substring;
      if (o.stats) r["stats"] = {{"pushes", res.pushes}, {"advances", res.advances}};
      emit(s.out, r);
    } else {
      s.out << "ell=" << res.ell << " r=" << res.r << " length=" << res.length << '\n';
      if (substring) s.out << "substring=" << *substring << '\n';
      if (o.stats)
        s.out << "stats n=" << res.n << " m=" << res.m << " pushes=" << res.pushes
              << " advances=" << res.advances << '\n';
    }
  }
  return kOk;
}

template <io::Mode M>
int cmd_pack(const Options& o, Streams s) {
  using Symbol = io::symbol_for<M>;
  const auto pattern = io::read_all<M>(pattern_source(o), s.in);
  const auto text = open_text<M>(o, s.in, o.oracle);

  StreamingMatcher<Symbol> sm{std::span<const Symbol>(pattern)};
  const auto positions = stream_positions(sm, text, s.in);
  const std::size_t m = pattern.size();
  Selection sel;
  if (m > 0) sel = greedy_pack(positions, m, sm.consumed());

  if (o.oracle && m > 0) {
    auto matches = oracle::brute_matches(std::span<const Symbol>(*text.loaded),
                                         std::span<const Symbol>(pattern));
    if (matches != positions) throw OracleMismatch("pack: match set differs from brute force");
    if (oracle::brute_pack(matches, m) != sel.count())
      throw OracleMismatch("pack: selection is not maximum");
    if (greedy_pack_by_position(matches, m, sm.consumed()).starts != sel.starts)
      throw OracleMismatch("pack: bitmap scan disagrees with list scan");
  }

  if (!o.quiet) {
    if (o.format == Format::records) {
      json r{{"command", "pack"},          {"n", sm.consumed()},     {"m", m},
             {"matches", positions.size()}, {"count", sel.count()}, {"starts", sel.starts}};
      if (o.stats) r["stats"] = {{"applies", sm.applies()}, {"matches", positions.size()}};
      emit(s.out, r);
    } else {
      for (auto p : sel.starts) s.out << p << '\n';
      if (o.stats)
        s.out << "stats n=" << sm.consumed() << " m=" << m << " matches=" << positions.size()
              << " count=" << sel.count() << " applies=" << sm.applies() << '\n';
    }
  }
  return kOk;
}

inline void write_file(const std::string& path, const std::string& data) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw io::IoError("cannot write " + path);
  f << data;
  if (!f) throw io::IoError("write failed: " + path);
}

inline int cmd_gen(const Options& o, Streams s) {
  gen::WorkloadSpec spec;
  spec.n = o.n;
  spec.m = o.m;
  spec.sigma = o.sigma;
  spec.seed = o.seed;
  spec.planted = o.plant;
  spec.distribution = o.plant.empty() ? gen::Distribution::uniform : gen::Distribution::planted;
  const auto w = gen::generate(spec);

  const bool bytes = o.mode == io::Mode::bytes;
  const std::string text = bytes ? gen::to_bytes(w.text, spec.sigma) : gen::to_tokens(w.text);
  const std::string pattern =
      bytes ? gen::to_bytes(w.pattern, spec.sigma) : gen::to_tokens(w.pattern);

  json r{{"command", "gen"}, {"n", spec.n},       {"m", spec.m},
         {"sigma", spec.sigma}, {"seed", spec.seed}, {"planted", spec.planted}};
  if (o.out) {
    const std::string pattern_path = *o.out + ".pattern";
    write_file(*o.out, text);
    write_file(pattern_path, pattern);
    if (!o.quiet) {
      if (o.format == Format::records) {
        r["text"] = *o.out;
        r["pattern"] = pattern_path;
        emit(s.out, r);
      } else {
        s.out << "text=" << *o.out << " pattern=" << pattern_path << " n=" << spec.n
              << " m=" << spec.m << " sigma=" << spec.sigma << " seed=" << spec.seed << '\n';
      }
    }
    return kOk;
  }

  if (bytes && spec.sigma > gen::kPrintableSymbols.size())
    throw UsageError("sigma > 62 produces binary bytes; use --out or --mode tokens");
  if (o.format == Format::records) {
    r["pattern"] = pattern;
    r["text"] = text;
    emit(s.out, r);
  } else {
    s.out << pattern << '\n' << text << '\n';
  }
  return kOk;
}

inline int cmd_bench(const Options& o, Streams s) {
  bench::Grid grid = bench::Grid::standard(o.n_min, o.n_max);
  if (!o.sigmas.empty()) grid.sigmas = o.sigmas;
  if (!o.ms.empty()) grid.ms = o.ms;
  if (!o.ns.empty()) grid.ns = o.ns;
  bench::Caps caps;
  caps.max_n = o.max_n;
  bench::Options opt;
  if (o.reps < 3) throw UsageError("--reps must be at least 3");
  opt.repetitions = o.reps;
  opt.warmups = o.warmups;
  opt.seed = o.seed;
  opt.parallel = o.parallel;

  const auto cells = bench::run_sweep(grid, caps, opt);

  auto timing = [](const bench::Timing& t) {
    return json{{"median_s", t.median_s},
                {"min_s", t.min_s},
                {"max_s", t.max_s},
                {"symbols_per_s", t.symbols_per_s}};
  };

  bool counters_ok = true;
  if (o.format == Format::records) {
    for (const auto& c : cells) {
      json r{{"command", "bench"}, {"sigma", c.spec.sigma}, {"m", c.spec.m}, {"n", c.spec.n},
             {"seed", c.spec.seed}};
      if (!c.measured()) {
        r["skipped"] = c.skipped;
      } else {
        r["reps"] = c.repetitions;
        r["matcher"] = timing(c.matcher);
        r["mfsp"] = timing(c.mfsp);
        r["matches"] = c.match_count;
        r["mfsp_length"] = c.mfsp_length;
        r["counters_ok"] = c.counters_ok;
      }
      emit(s.out, r);
    }
  } else if (!o.quiet) {
    s.out << std::left << std::setw(6) << "sigma" << std::setw(6) << "m" << std::setw(10) << "n"
          << std::setw(13) << "match_ms" << std::setw(13) << "match_Msym/s" << std::setw(13)
          << "mfsp_ms" << std::setw(13) << "mfsp_Msym/s" << std::setw(9) << "|M|" << std::setw(7)
          << "L*" << "counters\n";
    for (const auto& c : cells) {
      s.out << std::left << std::setw(6) << c.spec.sigma << std::setw(6) << c.spec.m
            << std::setw(10) << c.spec.n;
      if (!c.measured()) {
        s.out << "skipped: " << c.skipped << '\n';
        continue;
      }
      s.out << std::fixed << std::setprecision(3) << std::setw(13) << c.matcher.median_s * 1e3
            << std::setw(13) << c.matcher.symbols_per_s / 1e6 << std::setw(13)
            << c.mfsp.median_s * 1e3 << std::setw(13) << c.mfsp.symbols_per_s / 1e6
            << std::setw(9) << c.match_count << std::setw(7) << c.mfsp_length
            << (c.counters_ok ? "ok" : "MISMATCH") << '\n';
    }
  }
  for (const auto& c : cells)
    if (c.measured() && !c.counters_ok) counters_ok = false;

  // L* distribution over the texts of each (sigma, m) group, and the
  // per-doubling time ratios.
  std::map<std::pair<std::uint64_t, std::size_t>, std::vector<std::uint64_t>> lengths;
  for (const auto& c : cells)
    if (c.measured()) lengths[{c.spec.sigma, c.spec.m}].push_back(c.mfsp_length);
  const auto ratios = bench::doubling_ratios(cells);

  if (o.format == Format::records) {
    for (auto& [key, ls] : lengths) {
      std::sort(ls.begin(), ls.end());
      emit(s.out, json{{"command", "bench-summary"},
                       {"sigma", key.first},
                       {"m", key.second},
                       {"cells", ls.size()},
                       {"mfsp_length", {{"min", ls.front()},
                                        {"median", ls[ls.size() / 2]},
                                        {"max", ls.back()}}}});
    }
    for (const auto& q : ratios)
      emit(s.out, json{{"command", "bench-scaling"},
                       {"sigma", q.sigma},
                       {"m", q.m},
                       {"n_from", q.n_from},
                       {"n_to", q.n_to},
                       {"matcher_ratio", q.matcher},
                       {"mfsp_ratio", q.mfsp}});
  } else if (!o.quiet && !ratios.empty()) {
    s.out << "\ndoubling ratios (median time 2n / n)\n";
    for (const auto& q : ratios)
      s.out << "sigma=" << q.sigma << " m=" << q.m << " n=" << q.n_from << "->" << q.n_to
            << std::setprecision(2) << " matcher=" << q.matcher << " mfsp=" << q.mfsp << '\n';
  }
  if (!counters_ok) {
    s.err << "parikh: bench work counters disagree with the expected update counts\n";
    return kError;
  }
  return kOk;
}

template <class Fn>
void on_mode(io::Mode mode, Fn&& fn) {
  if (mode == io::Mode::bytes)
    fn(std::integral_constant<io::Mode, io::Mode::bytes>{});
  else
    fn(std::integral_constant<io::Mode, io::Mode::tokens>{});
}

inline void add_input_options(CLI::App* sub, Options& o) {
  auto* pat = sub->add_option("--pattern", o.pattern, "Pattern given inline");
  sub->add_option("--pattern-file", o.pattern_file, "Read the pattern from a file")->excludes(pat);
  auto* txt = sub->add_option("--text", o.text, "Text given inline (default: stdin)");
  sub->add_option("--text-file", o.text_file, "Read the text from a file")->excludes(txt);
}

inline void add_output_options(CLI::App* sub, Options& o) {
  sub->add_option("--mode", o.mode, "Symbol encoding: bytes or tokens (whitespace-delimited)")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, io::Mode>{{"bytes", io::Mode::bytes}, {"tokens", io::Mode::tokens}}));
  sub->add_option("--format", o.format, "Output: text or records (one JSON object per line)")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"text", Format::text}, {"records", Format::records}}));
  sub->add_flag("--quiet,-q", o.quiet, "Suppress output; report through the exit code only");
}

}  // namespace detail

/// Runs one invocation. argv[0] is the program name.
inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
               std::ostream& err) {
  Options o;
  CLI::App app{"Permutation matching, budgeted substrings and disjoint match packing"};
  app.name("parikh");
  app.require_subcommand(1);

  auto* match = app.add_subcommand("match", "Report the first permutation match (exit 1 if none)");
  auto* enumerate = app.add_subcommand("enumerate", "Report every permutation match start");
  auto* mfsp = app.add_subcommand("mfsp", "Longest substring whose counts fit within the pattern's");
  auto* pack = app.add_subcommand("pack", "Maximum set of non-overlapping permutation matches");
  for (auto* sub : {match, enumerate, mfsp, pack}) {
    detail::add_input_options(sub, o);
    detail::add_output_options(sub, o);
    sub->add_flag("--stats", o.stats, "Also print work counters");
    sub->add_flag("--oracle", o.oracle, "Cross-check against brute force (loads the whole text)");
  }
  mfsp->add_flag("--show-substring", o.show_substring, "Print the optimal substring");

  auto* gen = app.add_subcommand("gen", "Write a seeded synthetic text and pattern");
  detail::add_output_options(gen, o);
  gen->add_option("--n", o.n, "Text length")->required();
  gen->add_option("--m", o.m, "Pattern length")->required();
  gen->add_option("--sigma", o.sigma, "Alphabet size")->capture_default_str();
  gen->add_option("--seed", o.seed, "Generator seed")->capture_default_str();
  gen->add_option("--plant", o.plant, "Comma-separated starts of planted pattern permutations")
      ->delimiter(',');
  gen->add_option("--out", o.out, "Write the text to PATH and the pattern to PATH.pattern");

  auto* bench = app.add_subcommand("bench", "Time both scans over a seeded workload grid");
  bench->add_option("--format", o.format, "Output: text or records")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{
          {"text", Format::text}, {"records", Format::records}}));
  bench->add_flag("--quiet,-q", o.quiet, "Suppress the text table");
  bench->add_option("--sigma", o.sigmas, "Alphabet sizes (default 4,16,64,256)")->delimiter(',');
  bench->add_option("--m", o.ms, "Pattern lengths (default 16,64,256,1024)")->delimiter(',');
  bench->add_option("--n", o.ns, "Explicit text lengths (overrides --n-min/--n-max)")
      ->delimiter(',');
  bench->add_option("--n-min", o.n_min, "Smallest n of the doubling sequence")
      ->capture_default_str();
  bench->add_option("--n-max", o.n_max, "Largest n of the doubling sequence")
      ->capture_default_str();
  bench->add_option("--max-n", o.max_n, "Cells with n above this are skipped")
      ->capture_default_str();
  bench->add_option("--reps", o.reps, "Timed repetitions per cell (>= 3)")->capture_default_str();
  bench->add_option("--warmups", o.warmups, "Discarded runs per cell")->capture_default_str();
  bench->add_option("--seed", o.seed, "Base seed for the cell corpora")->capture_default_str();
  bench->add_flag("--parallel", o.parallel, "Run cells concurrently");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kError;
  }

  detail::Streams s{in, out, err};
  try {
    int code = kOk;
    if (*gen) return detail::cmd_gen(o, s);
    if (*bench) return detail::cmd_bench(o, s);
    detail::on_mode(o.mode, [&](auto mode) {
      constexpr io::Mode M = decltype(mode)::value;
      if (*match) code = detail::cmd_match<M>(o, s);
      else if (*enumerate) code = detail::cmd_enumerate<M>(o, s);
      else if (*mfsp) code = detail::cmd_mfsp<M>(o, s);
      else code = detail::cmd_pack<M>(o, s);
    });
    return code;
  } catch (const OracleMismatch& e) {
    err << "parikh: oracle mismatch: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "parikh: " << e.what() << '\n';
  }
  return kError;
}

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  std::vector<const char*> argv{"parikh"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), in, out, err);
}

}  // namespace parikh::cli
