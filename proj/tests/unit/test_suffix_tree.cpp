#include <doctest.h>

#include <algorithm>
#include <set>

#include "stree/error.hpp"
#include "stree/random.hpp"
#include "stree/suffix_tree.hpp"
#include "unit/oracles.hpp"

using namespace stree;

namespace {

std::vector<Symbol> suffix_with_terminator(const Str& s, std::size_t j) {
    std::vector<Symbol> out(s.symbols().begin() + static_cast<std::ptrdiff_t>(j - 1), s.symbols().end());
    out.push_back(kTerminator);
    return out;
}

void check_invariants(const NaiveSuffixTree& t) {
    const Str& s = t.source();
    const std::size_t n = s.size();
    REQUIRE(t.counts().leaves == n);
    std::size_t leaves_seen = 0;
    for (NodeId v = 0; v < t.nodes().size(); ++v) {
        const auto& node = t.node(v);
        auto kids = t.children(v);
        CHECK(kids.size() == node.degree);
        std::set<Symbol> labels;
        for (NodeId u : kids) labels.insert(t.node(u).label);
        CHECK(labels.size() == kids.size());
        CHECK(std::is_sorted(kids.begin(), kids.end(),
                             [&](NodeId a, NodeId b) { return t.node(a).label < t.node(b).label; }));
        if (node.leaf != 0) {
            ++leaves_seen;
            CHECK(node.degree == 0);
            CHECK(node.label == kTerminator);
        } else if (v != t.root()) {
            CHECK(node.label != kTerminator);
        }
    }
    CHECK(leaves_seen == n);
    for (std::size_t j = 1; j <= n; ++j) {
        CHECK(t.node(t.leaf(j)).leaf == j);
        CHECK(t.path_label(t.leaf(j)) == suffix_with_terminator(s, j));
    }
}

void check_invariants(const CompactSuffixTree& t) {
    const Str& s = t.source();
    const std::size_t n = s.size();
    CHECK(t.counts().total <= 2 * n);
    for (NodeId v = 1; v < t.nodes().size(); ++v) {
        const auto& node = t.node(v);
        CHECK(node.label.size() >= 1);
        if (node.leaf == 0) CHECK(node.children.size() >= 2);
    }
    for (NodeId v = 0; v < t.nodes().size(); ++v) {
        std::set<Symbol> first;
        for (NodeId u : t.node(v).children) first.insert(t.first_symbol(u));
        CHECK(first.size() == t.node(v).children.size());
    }
    for (std::size_t j = 1; j <= n; ++j) {
        CHECK(t.path_label(t.leaf(j)) == suffix_with_terminator(s, j));
    }
}

}  // namespace

TEST_CASE("naive tree of aabccb has 25 nodes") {
    auto t = build_naive(make_string("aabccb", Alphabet(3)));
    CHECK(t.counts() == TreeCounts{25, 19, 6});
    CHECK(node_count(t) == 25);
    check_invariants(t);
}

TEST_CASE("naive tree small cases") {
    auto a = build_naive(make_string("a", Alphabet(2)));
    CHECK(node_count(a) == 3);
    check_invariants(a);

    auto ab = build_naive(make_string("ab", Alphabet(2)));
    CHECK(node_count(ab) == 6);
    CHECK(ab.created_internal()[0] == 2);
    CHECK(ab.created_internal()[1] == 1);
    check_invariants(ab);

    CHECK_THROWS_AS(build_naive(make_string("", Alphabet(2))), EmptyStringError);
}

TEST_CASE("naive tree size equals distinct substrings plus root and leaves") {
    const Alphabet a(3);
    for (std::size_t n = 1; n <= 7; ++n) {
        for (const auto& raw : oracle::all_strings(n, 3)) {
            auto t = build_naive(make_string(std::span<const Symbol>(raw), a));
            CHECK(node_count(t) == oracle::distinct_substrings(raw) + 1 + n);
            std::size_t created = 0;
            for (auto c : t.created_internal()) created += c;
            CHECK(created + 1 == t.counts().internal);
        }
    }
}

TEST_CASE("constructed trees satisfy their structural invariants") {
    SplitMix64 rng(7);
    for (std::uint32_t sigma : {2U, 3U, 4U}) {
        for (int rep = 0; rep < 40; ++rep) {
            std::size_t n = 1 + rng.below(40);
            Str s = random_string(n, Alphabet(sigma), rng);
            auto naive = build_naive(s);
            check_invariants(naive);
            std::size_t cap = 2;
            for (std::size_t j = 1; j <= n; ++j) cap += n - j + 2;
            CHECK(node_count(naive) <= cap);
            check_invariants(compress(naive));
        }
    }
}

TEST_CASE("compact tree of aabccb reproduces the published labels") {
    auto t = build_compact(make_string("aabccb", Alphabet(3)));
    CHECK(t.counts() == TreeCounts{10, 4, 6});
    std::vector<std::string> root_labels;
    for (NodeId u : t.node(t.root()).children) root_labels.push_back(to_text(t.edge_symbols(u)));
    CHECK(root_labels == std::vector<std::string>{"a", "b", "c"});

    std::multiset<std::string> leaf_labels;
    for (std::size_t j = 1; j <= 6; ++j) leaf_labels.insert(to_text(t.edge_symbols(t.leaf(j))));
    CHECK(leaf_labels ==
          std::multiset<std::string>{"b$", "cb$", "ccb$", "$", "bccb$", "abccb$"});
    CHECK(to_text(t.edge_symbols(t.leaf(1))) == "abccb$");
    CHECK(to_text(t.edge_symbols(t.leaf(6))) == "$");
    check_invariants(t);
}

TEST_CASE("compact tree small cases") {
    auto a = build_compact(make_string("a", Alphabet(2)));
    CHECK(node_count(a) == 2);
    CHECK(to_text(a.edge_symbols(a.leaf(1))) == "a$");

    auto abc = build_compact(make_string("abc", Alphabet(3)));
    CHECK(node_count(abc) == 4);
    CHECK(abc.node(abc.root()).children.size() == 3);

    auto aaaa = build_compact(make_string("aaaa", Alphabet(2)));
    check_invariants(aaaa);
}

TEST_CASE("find_occurrences examples") {
    auto t = build_compact(make_string("aabccb", Alphabet(3)));
    Alphabet a(3);
    CHECK(find_occurrences(t, make_string("cb", a)) == std::vector<std::size_t>{5});
    CHECK(find_occurrences(t, make_string("b", a)) == std::vector<std::size_t>{3, 6});
    CHECK(find_occurrences(t, make_string("ba", a)).empty());
    CHECK(find_occurrences(t, make_string("aabccb", a)) == std::vector<std::size_t>{1});
    CHECK(find_occurrences(t, make_string("aabccbc", a)).empty());
    CHECK_THROWS_AS(find_occurrences(t, make_string("", a)), EmptyStringError);
}

TEST_CASE("find_occurrences agrees with a direct scan") {
    SplitMix64 rng(2024);
    for (int rep = 0; rep < 2000; ++rep) {
        const std::uint32_t sigma = rep % 2 == 0 ? 2 : 4;
        const Alphabet a(sigma);
        Str text = random_string(1 + rng.below(60), a, rng);
        auto tree = build_compact(text);
        Str pattern = random_string(1 + rng.below(6), a, rng);
        std::vector<Symbol> t(text.symbols().begin(), text.symbols().end());
        std::vector<Symbol> p(pattern.symbols().begin(), pattern.symbols().end());
        CHECK(find_occurrences(tree, pattern) == oracle::scan(t, p));
    }
}

TEST_CASE("DOT export is deterministic") {
    auto a = to_dot(build_naive(make_string("a", Alphabet(2))));
    CHECK(a == "digraph naive_suffix_tree {\n"
               "  node [shape=circle, label=\"\", width=0.25];\n"
               "  n0;\n"
               "  n1;\n"
               "  n2 [label=\"1\", shape=plaintext];\n"
               "  n0 -> n1 [label=\"a\"];\n"
               "  n1 -> n2 [label=\"$\"];\n"
               "}\n");

    auto s = make_string("aabccb", Alphabet(3));
    auto dot = to_dot(build_compact(s));
    CHECK(dot.find("[label=\"abccb$\"]") != std::string::npos);
    CHECK(dot == to_dot(build_compact(s)));
    CHECK(std::count(dot.begin(), dot.end(), ';') == 10 + 9 + 1);
    CHECK(to_dot(build_naive(s)) == to_dot(build_naive(s)));
}

TEST_CASE("stats line") {
    auto s = make_string("aabccb", Alphabet(3));
    CHECK(stats_line(s, build_naive(s).counts(), 5) == "n=6 sigma=3 nodes=25 internal=19 leaves=6 growth=5");
}
