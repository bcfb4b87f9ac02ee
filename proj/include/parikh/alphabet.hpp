#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <ranges>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <unordered_map>
#include <vector>

namespace parikh {

/// Dense symbol id, contiguous in [0, sigma_prime).
using SymbolId = std::uint32_t;

/// A symbol was looked up that the alphabet does not contain.
class UnknownSymbol : public std::out_of_range {
 public:
  UnknownSymbol() : std::out_of_range("symbol not present in alphabet") {}
};

namespace detail {

template <class Symbol>
inline constexpr bool is_byte_symbol_v =
    std::is_integral_v<Symbol> && sizeof(Symbol) == 1;

constexpr std::int32_t kNoId = -1;

// Byte-sized symbols use a flat 256-entry table; everything else hashes.
template <class Symbol, class Hash, bool Bytes = is_byte_symbol_v<Symbol>>
class ForwardMap {
 public:
  std::optional<SymbolId> find(const Symbol& s) const {
    auto it = map_.find(s);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  void assign(const Symbol& s, SymbolId id) { map_.emplace(s, id); }

 private:
  std::unordered_map<Symbol, SymbolId, Hash> map_;
};

template <class Symbol, class Hash>
class ForwardMap<Symbol, Hash, true> {
 public:
  ForwardMap() { table_.fill(kNoId); }
  std::optional<SymbolId> find(const Symbol& s) const {
    auto v = table_[static_cast<unsigned char>(s)];
    if (v == kNoId) return std::nullopt;
    return static_cast<SymbolId>(v);
  }
  void assign(const Symbol& s, SymbolId id) {
    table_[static_cast<unsigned char>(s)] = static_cast<std::int32_t>(id);
  }

 private:
  std::array<std::int32_t, 256> table_{};
};

}  // namespace detail

/// Bijection between the symbols actually observed and dense ids.
///
/// Ids are handed out in first-occurrence order. An alphabet is normally
/// built once with build_alphabet() and then only read; insert() exists for
/// the streaming scanners, which extend a private alphabet as new text
/// symbols arrive.
template <class Symbol, class Hash = std::hash<Symbol>>
class CompressedAlphabet {
 public:
  using symbol_type = Symbol;

  std::optional<SymbolId> find(const Symbol& s) const { return forward_.find(s); }

  SymbolId id_of(const Symbol& s) const {
    if (auto id = forward_.find(s)) return *id;
    throw UnknownSymbol{};
  }

  bool contains(const Symbol& s) const { return forward_.find(s).has_value(); }

  /// Returns the id of `s`, assigning the next free id if it is new.
  SymbolId insert(const Symbol& s) {
    if (auto id = forward_.find(s)) return *id;
    auto id = static_cast<SymbolId>(reverse_.size());
    forward_.assign(s, id);
    reverse_.push_back(s);
    return id;
  }

  const Symbol& symbol(SymbolId id) const { return reverse_.at(id); }
  std::span<const Symbol> symbols() const { return reverse_; }

  /// sigma'
  std::size_t size() const { return reverse_.size(); }
  bool empty() const { return reverse_.empty(); }

 private:
  detail::ForwardMap<Symbol, Hash> forward_;
  std::vector<Symbol> reverse_;
};

/// Builds the alphabet over the union of `strings`, scanned in order.
template <class Symbol, class Hash = std::hash<Symbol>>
CompressedAlphabet<Symbol, Hash> build_alphabet(
    std::span<const std::span<const Symbol>> strings) {
  CompressedAlphabet<Symbol, Hash> alphabet;
  for (auto s : strings)
    for (const auto& c : s) alphabet.insert(c);
  return alphabet;
}

template <class Symbol, class Hash = std::hash<Symbol>>
CompressedAlphabet<Symbol, Hash> build_alphabet(
    std::initializer_list<std::span<const Symbol>> strings) {
  return build_alphabet<Symbol, Hash>(
      std::span<const std::span<const Symbol>>(strings.begin(), strings.size()));
}

/// Maps every symbol of `s` to its id. Throws UnknownSymbol.
template <class Symbol, class Hash>
std::vector<SymbolId> encode(std::span<const Symbol> s,
                             const CompressedAlphabet<Symbol, Hash>& alphabet) {
  std::vector<SymbolId> ids;
  ids.reserve(s.size());
  for (const auto& c : s) ids.push_back(alphabet.id_of(c));
  return ids;
}

/// Byte view of a string, the default symbol encoding for text input.
inline std::span<const char> bytes(std::string_view s) { return {s.data(), s.size()}; }

/// Contiguous sequence of symbols. Raw arrays are excluded so that string
/// literals go through the string_view overloads instead of dragging their
/// terminating NUL along as a symbol.
template <class R>
concept SymbolRange = std::ranges::contiguous_range<R> && std::ranges::sized_range<R> &&
                      !std::is_array_v<std::remove_cvref_t<R>>;

template <class R>
using symbol_t = std::remove_cv_t<std::ranges::range_value_t<R>>;

template <SymbolRange R>
std::span<const symbol_t<R>> as_span(const R& r) {
  return {std::ranges::data(r), std::ranges::size(r)};
}

}  // namespace parikh
