#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>

#include "stree/strings.hpp"

namespace stree {

/// SplitMix64 finalizer (Stafford variant 13).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// SplitMix64 (Steele, Lea, Flood 2014). The output stream is
///   state += 0x9e3779b97f4a7c15; return mix64(state);
/// and is identical on every platform.
class SplitMix64 {
public:
    using result_type = std::uint64_t;
    static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    constexpr result_type operator()() noexcept {
        state_ += kGamma;
        return mix64(state_);
    }

    /// Uniform value in [0, bound) by rejection, no modulo bias.
    std::uint64_t below(std::uint64_t bound);

    /// Independent child generator; advances this one by one step.
    SplitMix64 split() noexcept { return SplitMix64(mix64((*this)() ^ 0x6a09e667f3bcc909ULL)); }

    constexpr std::uint64_t state() const noexcept { return state_; }

private:
    std::uint64_t state_;
};

/// Seed of the stream addressed by a path of indices under a root seed,
/// e.g. derive_seed(seed, {tag, n, sample}).
std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> path) noexcept;

/// n i.i.d. uniform symbols. Throws DomainError for n = 0.
Str random_string(std::size_t n, Alphabet alphabet, SplitMix64& rng);

}  // namespace stree
