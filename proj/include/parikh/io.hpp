#pragma once

#include <array>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace parikh::io {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Mode { bytes, tokens };

template <Mode M>
using symbol_for = std::conditional_t<M == Mode::bytes, char, std::string>;

/// Where a symbol sequence comes from: an inline string, a file, or the
/// fallback stream (stdin).
struct Source {
  std::optional<std::string> inline_text;
  std::optional<std::string> path;

  bool in_memory() const { return inline_text.has_value(); }
  bool from_stream() const { return !inline_text && !path; }
};

namespace detail {

// Calls f(symbol) until it returns false or input ends.
template <class F>
void read_bytes(std::istream& in, F&& f) {
  std::array<char, 1 << 16> buf;
  while (in) {
    in.read(buf.data(), buf.size());
    const auto got = in.gcount();
    for (std::streamsize k = 0; k < got; ++k)
      if (!f(buf[static_cast<std::size_t>(k)])) return;
  }
  if (in.bad()) throw IoError("read error");
}

template <class F>
void read_tokens(std::istream& in, F&& f) {
  std::string tok;
  while (in >> tok)
    if (!f(tok)) return;
  if (in.bad()) throw IoError("read error");
}

template <Mode M, class F>
void read_stream(std::istream& in, F&& f) {
  if constexpr (M == Mode::bytes)
    read_bytes(in, std::forward<F>(f));
  else
    read_tokens(in, std::forward<F>(f));
}

}  // namespace detail

/// Streams the symbols of `src` into `f` (returning false stops early).
template <Mode M, class F>
void for_each_symbol(const Source& src, std::istream& fallback, F&& f) {
  if (src.inline_text) {
    std::istringstream in(*src.inline_text);
    detail::read_stream<M>(in, std::forward<F>(f));
  } else if (src.path) {
    std::ifstream in(*src.path, std::ios::binary);
    if (!in) throw IoError("cannot open " + *src.path);
    detail::read_stream<M>(in, std::forward<F>(f));
  } else {
    detail::read_stream<M>(fallback, std::forward<F>(f));
  }
}

template <Mode M>
std::vector<symbol_for<M>> read_all(const Source& src, std::istream& fallback) {
  std::vector<symbol_for<M>> out;
  for_each_symbol<M>(src, fallback, [&](const auto& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

/// Symbols [offset, offset + length) of `src`, read again from the start.
template <Mode M>
std::vector<symbol_for<M>> read_range(const Source& src, std::istream& fallback,
                                      std::size_t offset, std::size_t length) {
  std::vector<symbol_for<M>> out;
  if (length == 0) return out;
  std::size_t k = 0;
  for_each_symbol<M>(src, fallback, [&](const auto& s) {
    if (k++ >= offset) out.push_back(s);
    return out.size() < length;
  });
  return out;
}

template <class Symbol>
std::string render(const std::vector<Symbol>& symbols) {
  if constexpr (std::is_same_v<Symbol, char>) {
    return {symbols.begin(), symbols.end()};
  } else {
    std::string out;
    for (std::size_t i = 0; i < symbols.size(); ++i) {
      if (i) out += ' ';
      out += symbols[i];
    }
    return out;
  }
}

}  // namespace parikh::io
