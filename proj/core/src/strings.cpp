#include "stree/strings.hpp"

#include <algorithm>

#include "stree/error.hpp"

namespace stree {

Alphabet::Alphabet(std::uint32_t size) : size_(size) {
    if (size == 0) throw DomainError("alphabet size must be positive");
    if (size == kTerminator) throw DomainError("alphabet would contain the terminator");
}

Str::Str(std::vector<Symbol> symbols, Alphabet alphabet)
    : symbols_(std::move(symbols)), alphabet_(alphabet) {
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (!alphabet_.contains(symbols_[i])) {
            throw SymbolError(i + 1, "symbol " + std::to_string(symbols_[i]) + " at position " +
                                         std::to_string(i + 1) + " is outside 1.." +
                                         std::to_string(alphabet_.size()));
        }
    }
}

Symbol Str::at(std::size_t i) const {
    if (i < 1 || i > symbols_.size()) {
        throw RangeError("position " + std::to_string(i) + " outside 1.." +
                         std::to_string(symbols_.size()));
    }
    return symbols_[i - 1];
}

Str make_string(std::span<const Symbol> raw, Alphabet alphabet) {
    return Str(std::vector<Symbol>(raw.begin(), raw.end()), alphabet);
}

Str make_string(std::string_view text, Alphabet alphabet) {
    std::vector<Symbol> raw;
    raw.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c < 'a' || c > 'z') {
            throw SymbolError(i + 1, std::string("character '") + c + "' at position " +
                                         std::to_string(i + 1) + " is not in a..z");
        }
        Symbol s = static_cast<Symbol>(c - 'a' + 1);
        if (!alphabet.contains(s)) {
            throw SymbolError(i + 1, std::string("character '") + c + "' at position " +
                                         std::to_string(i + 1) + " is outside an alphabet of size " +
                                         std::to_string(alphabet.size()));
        }
        raw.push_back(s);
    }
    return Str(std::move(raw), alphabet);
}

Alphabet alphabet_for(std::string_view text) {
    std::uint32_t size = 2;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c < 'a' || c > 'z') {
            throw SymbolError(i + 1, std::string("character '") + c + "' at position " +
                                         std::to_string(i + 1) + " is not in a..z");
        }
        size = std::max<std::uint32_t>(size, static_cast<std::uint32_t>(c - 'a' + 1));
    }
    return Alphabet(size);
}

std::string symbol_text(Symbol s) {
    if (s == kTerminator) return "$";
    if (s >= 1 && s <= 26) return std::string(1, static_cast<char>('a' + s - 1));
    return "{" + std::to_string(s) + "}";
}

std::string to_text(std::span<const Symbol> symbols) {
    std::string out;
    out.reserve(symbols.size());
    for (Symbol s : symbols) out += symbol_text(s);
    return out;
}

std::string to_text(const Str& s) { return to_text(s.symbols()); }

Str substring(const Str& s, std::size_t i, std::size_t j) {
    if (j < i) return Str({}, s.alphabet());
    if (i < 1 || j > s.size()) {
        throw RangeError("substring [" + std::to_string(i) + "," + std::to_string(j) +
                         "] outside 1.." + std::to_string(s.size()));
    }
    auto sym = s.symbols();
    return Str(std::vector<Symbol>(sym.begin() + static_cast<std::ptrdiff_t>(i - 1),
                                   sym.begin() + static_cast<std::ptrdiff_t>(j)),
               s.alphabet());
}

std::size_t minimal_period(std::span<const Symbol> s) {
    const std::size_t n = s.size();
    if (n == 0) throw EmptyStringError("period of the empty string is undefined");
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        if (std::equal(s.begin() + static_cast<std::ptrdiff_t>(d), s.end(), s.begin())) return d;
    }
    return n;
}

std::size_t minimal_period(const Str& s) { return minimal_period(s.symbols()); }

bool is_aperiodic(std::span<const Symbol> s) { return minimal_period(s) == s.size(); }

bool is_aperiodic(const Str& s) { return is_aperiodic(s.symbols()); }

}  // namespace stree
