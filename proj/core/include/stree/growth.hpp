#pragma once

#include <compare>
#include <cstddef>
#include <span>

#include "stree/strings.hpp"
#include "stree/suffix_tree.hpp"

namespace stree {

/// Number of internal nodes that inserting the whole string S[1,n]
/// contributes to the suffix tree, 1 <= value <= n.
struct GrowthValue {
    std::size_t value = 0;

    friend auto operator<=>(const GrowthValue&, const GrowthValue&) = default;
};

/// Reads the growth off the naive tree: distance from leaf 1 up to its
/// nearest ancestor with two or more children, minus one. When no such
/// ancestor exists (n = 1) the root is used.
GrowthValue growth_tree(const NaiveSuffixTree& tree);
GrowthValue growth_tree(const Str& s);

/// n - max_{2<=j<=n} LCP(S[1,n], S[j,n]), by direct symbol comparison.
GrowthValue growth_oracle(const Str& s);
std::size_t growth_oracle(std::span<const Symbol> s);

/// Compares the naive tree size with the growths of the suffixes:
///   nodes = sum_{m=1}^{n-1} growth(S[m,n]) + 2 + n
struct GrowthIdentity {
    std::size_t lhs = 0;
    std::size_t rhs = 0;

    bool equal() const noexcept { return lhs == rhs; }
};

/// Throws DomainError for n < 2.
GrowthIdentity growth_sum_identity(const Str& s);

/// Right-hand side alone, no tree built.
std::size_t growth_sum(std::span<const Symbol> s);

}  // namespace stree
