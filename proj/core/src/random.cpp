#include "stree/random.hpp"

#include "stree/error.hpp"

namespace stree {

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    if (bound == 0) throw DomainError("below() requires a positive bound");
    // reject the low (2^64 mod bound) values so every residue is equally likely
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t r = (*this)();
        if (r >= threshold) return r % bound;
    }
}

std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> path) noexcept {
    std::uint64_t h = mix64(seed);
    for (std::uint64_t part : path) h = mix64(h ^ mix64(part + SplitMix64::kGamma));
    return h;
}

Str random_string(std::size_t n, Alphabet alphabet, SplitMix64& rng) {
    if (n == 0) throw DomainError("random_string requires n >= 1");
    std::vector<Symbol> symbols(n);
    for (auto& s : symbols) s = static_cast<Symbol>(rng.below(alphabet.size())) + 1;
    return Str(std::move(symbols), alphabet);
}

}  // namespace stree
