#include "stree/growth.hpp"

#include "stree/error.hpp"

namespace stree {

GrowthValue growth_tree(const NaiveSuffixTree& tree) {
    NodeId leaf1 = tree.leaf(1);
    std::size_t distance = 0;
    NodeId v = leaf1;
    do {
        v = tree.node(v).parent;
        ++distance;
    } while (v != tree.root() && tree.node(v).degree < 2);
    return GrowthValue{distance - 1};
}

GrowthValue growth_tree(const Str& s) { return growth_tree(build_naive(s)); }

std::size_t growth_oracle(std::span<const Symbol> s) {
    const std::size_t n = s.size();
    if (n == 0) throw EmptyStringError("growth of the empty string is undefined");
    std::size_t best = 0;
    for (std::size_t j = 1; j < n && n - j > best; ++j) {
        std::size_t l = 0;
        while (j + l < n && s[l] == s[j + l]) ++l;
        if (l > best) best = l;
    }
    return n - best;
}

GrowthValue growth_oracle(const Str& s) { return GrowthValue{growth_oracle(s.symbols())}; }

std::size_t growth_sum(std::span<const Symbol> s) {
    const std::size_t n = s.size();
    if (n < 2) throw DomainError("growth sum identity requires n >= 2");
    std::size_t sum = 0;
    for (std::size_t m = 0; m + 1 < n; ++m) sum += growth_oracle(s.subspan(m));
    return sum + 2 + n;
}

GrowthIdentity growth_sum_identity(const Str& s) {
    if (s.size() < 2) throw DomainError("growth sum identity requires n >= 2");
    return GrowthIdentity{node_count(build_naive(s)), growth_sum(s.symbols())};
}

}  // namespace stree
