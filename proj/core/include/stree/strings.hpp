#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stree {

/// Symbols are the integers 1..sigma; 0 is never a valid symbol.
using Symbol = std::uint32_t;

/// Sentinel appended to every suffix. Compares greater than every
/// alphabet symbol, so "terminator last" falls out of symbol order.
inline constexpr Symbol kTerminator = std::numeric_limits<Symbol>::max();

class Alphabet {
public:
    /// sigma = 1 is admitted but degenerate(); sigma = 0 throws DomainError.
    explicit Alphabet(std::uint32_t size);

    std::uint32_t size() const noexcept { return size_; }
    bool contains(Symbol s) const noexcept { return s >= 1 && s <= size_; }
    bool degenerate() const noexcept { return size_ < 2; }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::uint32_t size_;
};

/// Immutable symbol sequence over an Alphabet. Positions are 1-based
/// through at() and substring(); symbols() exposes the 0-based storage.
class Str {
public:
    Str(std::vector<Symbol> symbols, Alphabet alphabet);

    std::size_t size() const noexcept { return symbols_.size(); }
    bool empty() const noexcept { return symbols_.empty(); }
    const Alphabet& alphabet() const noexcept { return alphabet_; }
    std::span<const Symbol> symbols() const noexcept { return symbols_; }

    /// S[i], 1 <= i <= n. Throws RangeError otherwise.
    Symbol at(std::size_t i) const;

    friend bool operator==(const Str&, const Str&) = default;

private:
    std::vector<Symbol> symbols_;
    Alphabet alphabet_;
};

/// Validates every raw symbol against the alphabet.
Str make_string(std::span<const Symbol> raw, Alphabet alphabet);

/// Text codec: 'a'..'z' map to 1..26.
Str make_string(std::string_view text, Alphabet alphabet);

/// Smallest alphabet that can hold every letter of text (at least 2).
Alphabet alphabet_for(std::string_view text);

/// Inverse of the text codec. Symbols above 26 render as "{27}";
/// the terminator renders as '$'.
std::string to_text(std::span<const Symbol> symbols);
std::string to_text(const Str& s);
std::string symbol_text(Symbol s);

/// S[i,j], inclusive and 1-based; empty when j < i.
Str substring(const Str& s, std::size_t i, std::size_t j);

/// Smallest d with d | n and S[i] = S[i+d] for all i <= n-d.
std::size_t minimal_period(const Str& s);
std::size_t minimal_period(std::span<const Symbol> s);

bool is_aperiodic(const Str& s);
bool is_aperiodic(std::span<const Symbol> s);

}  // namespace stree
