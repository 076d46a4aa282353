#include <doctest.h>

#include "stree/error.hpp"
#include "stree/growth.hpp"
#include "stree/random.hpp"
#include "unit/oracles.hpp"

using namespace stree;

TEST_CASE("growth worked values") {
    struct Case {
        const char* text;
        std::size_t growth;
    };
    for (auto [text, expected] : {Case{"aabccb", 5}, Case{"abcdefabcdab", 8}, Case{"abc", 3},
                                  Case{"aaaa", 1}, Case{"a", 1}, Case{"ab", 2}, Case{"aa", 1}}) {
        CAPTURE(text);
        Str s = make_string(text, alphabet_for(text));
        CHECK(growth_tree(s).value == expected);
        CHECK(growth_oracle(s).value == expected);
    }
}

TEST_CASE("growth of the empty string is rejected") {
    CHECK_THROWS_AS(growth_oracle(make_string("", Alphabet(2))), EmptyStringError);
    CHECK_THROWS_AS(growth_tree(make_string("", Alphabet(2))), EmptyStringError);
}

TEST_CASE("growth by tree equals growth by LCP oracle, all binary strings up to 12") {
    const Alphabet a(2);
    std::size_t mismatches = 0;
    for (std::size_t n = 1; n <= 12; ++n) {
        for (const auto& raw : oracle::all_strings(n, 2)) {
            Str s = make_string(std::span<const Symbol>(raw), a);
            if (growth_tree(s) != growth_oracle(s)) ++mismatches;
        }
    }
    CHECK(mismatches == 0);
}

TEST_CASE("growth by tree equals growth by LCP oracle on random strings") {
    for (std::uint32_t sigma : {2U, 3U, 4U}) {
        SplitMix64 rng(derive_seed(99, {sigma}));
        std::size_t mismatches = 0;
        for (int rep = 0; rep < 10000; ++rep) {
            Str s = random_string(1 + rng.below(64), Alphabet(sigma), rng);
            if (growth_tree(s) != growth_oracle(s)) ++mismatches;
        }
        CHECK(mismatches == 0);
    }
}

TEST_CASE("growth lies in 1..n") {
    SplitMix64 rng(5);
    for (int rep = 0; rep < 500; ++rep) {
        std::size_t n = 1 + rng.below(30);
        Str s = random_string(n, Alphabet(3), rng);
        auto g = growth_oracle(s).value;
        CHECK(g >= 1);
        CHECK(g <= n);
    }
}

TEST_CASE("growth sum identity examples") {
    auto aabccb = growth_sum_identity(make_string("aabccb", Alphabet(3)));
    CHECK(aabccb.lhs == 25);
    CHECK(aabccb.rhs == 5 + 5 + 3 + 2 + 2 + 2 + 6);
    CHECK(aabccb.equal());

    auto ab = growth_sum_identity(make_string("ab", Alphabet(2)));
    CHECK(ab.lhs == 6);
    CHECK(ab.rhs == 6);
    auto aa = growth_sum_identity(make_string("aa", Alphabet(2)));
    CHECK(aa.lhs == 5);
    CHECK(aa.rhs == 5);

    CHECK_THROWS_AS(growth_sum_identity(make_string("a", Alphabet(2))), DomainError);
}

TEST_CASE("growth sum identity holds exhaustively") {
    struct Sweep {
        std::uint32_t sigma;
        std::size_t n_max;
    };
    for (auto [sigma, n_max] : {Sweep{2, 12}, Sweep{3, 7}}) {
        const Alphabet a(sigma);
        std::size_t failures = 0;
        for (std::size_t n = 2; n <= n_max; ++n) {
            for (const auto& raw : oracle::all_strings(n, sigma)) {
                if (!growth_sum_identity(make_string(std::span<const Symbol>(raw), a)).equal()) ++failures;
            }
        }
        CHECK(failures == 0);
    }
}
