#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stree/strings.hpp"

namespace stree {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

struct TreeCounts {
    std::size_t total = 0;
    std::size_t internal = 0;  // includes the root
    std::size_t leaves = 0;

    friend bool operator==(const TreeCounts&, const TreeCounts&) = default;
};

/// Uncompressed suffix tree: one symbol per edge, leaf j reached by
/// S[j,n] followed by the terminator.
class NaiveSuffixTree {
public:
    struct Node {
        NodeId parent = kNoNode;
        NodeId first_child = kNoNode;
        NodeId next_sibling = kNoNode;  // siblings sorted by label
        Symbol label = 0;               // symbol on the incoming edge
        std::uint32_t depth = 0;        // edges from the root
        std::uint32_t origin = 0;       // suffix whose insertion created the node
        std::uint32_t degree = 0;       // number of children
        std::uint32_t leaf = 0;         // suffix number, 0 for internal nodes
    };

    const Str& source() const noexcept { return source_; }
    NodeId root() const noexcept { return 0; }
    std::span<const Node> nodes() const noexcept { return nodes_; }
    const Node& node(NodeId v) const { return nodes_.at(v); }

    /// Node of leaf j, 1 <= j <= n.
    NodeId leaf(std::size_t j) const;
    bool is_leaf(NodeId v) const { return nodes_.at(v).leaf != 0; }

    /// kNoNode when v has no edge labelled s.
    NodeId child(NodeId v, Symbol s) const;
    std::vector<NodeId> children(NodeId v) const;

    /// Symbols on the root-to-v path, terminator included for leaves.
    std::vector<Symbol> path_label(NodeId v) const;

    /// created_internal()[j-1] is the number of internal nodes added while
    /// inserting suffix j.
    std::span<const std::size_t> created_internal() const noexcept { return created_internal_; }

    TreeCounts counts() const noexcept;

private:
    explicit NaiveSuffixTree(Str source) : source_(std::move(source)) {}
    NodeId add_child(NodeId v, Symbol s, std::uint32_t origin);

    friend NaiveSuffixTree build_naive(const Str& s);

    Str source_;
    std::vector<Node> nodes_;
    std::vector<NodeId> leaves_;
    std::vector<std::size_t> created_internal_;
};

/// Inserts suffixes j = 1..n one at a time: walk down while the next
/// symbol of S[j,n]$ has an edge, then hang the remainder as a fresh path.
/// Throws EmptyStringError for n = 0.
NaiveSuffixTree build_naive(const Str& s);

/// Edge label as a span of the source: S[start, start+length-1], then
/// the terminator when `terminal` is set. start is 1-based.
struct EdgeLabel {
    std::uint32_t start = 0;
    std::uint32_t length = 0;
    bool terminal = false;

    std::size_t size() const noexcept { return length + (terminal ? 1 : 0); }
};

/// Suffix tree with unary chains compressed into single edges. Every
/// internal node other than the root has at least two children.
class CompactSuffixTree {
public:
    struct Node {
        NodeId parent = kNoNode;
        std::vector<NodeId> children;  // ordered by first label symbol
        EdgeLabel label;
        std::uint32_t depth = 0;  // symbols from the root, terminator counted
        std::uint32_t leaf = 0;
    };

    const Str& source() const noexcept { return source_; }
    NodeId root() const noexcept { return 0; }
    std::span<const Node> nodes() const noexcept { return nodes_; }
    const Node& node(NodeId v) const { return nodes_.at(v); }
    NodeId leaf(std::size_t j) const;
    bool is_leaf(NodeId v) const { return nodes_.at(v).leaf != 0; }

    /// Materialized label of the edge entering v.
    std::vector<Symbol> edge_symbols(NodeId v) const;
    Symbol first_symbol(NodeId v) const;
    std::vector<Symbol> path_label(NodeId v) const;

    /// Leaf numbers in the subtree of v, ascending.
    std::vector<std::size_t> leaves_below(NodeId v) const;

    TreeCounts counts() const noexcept;

private:
    explicit CompactSuffixTree(Str source) : source_(std::move(source)) {}

    friend CompactSuffixTree compress(const NaiveSuffixTree& tree);

    Str source_;
    std::vector<Node> nodes_;
    std::vector<NodeId> leaves_;
};

/// Removes every non-root node with exactly one child.
CompactSuffixTree compress(const NaiveSuffixTree& tree);
CompactSuffixTree build_compact(const Str& s);

inline std::size_t node_count(const NaiveSuffixTree& t) noexcept { return t.counts().total; }
inline std::size_t node_count(const CompactSuffixTree& t) noexcept { return t.counts().total; }

/// Sorted 1-based start positions of pattern in the tree's source.
/// Throws EmptyStringError for an empty pattern.
std::vector<std::size_t> find_occurrences(const CompactSuffixTree& tree, const Str& pattern);

/// Graphviz rendering. Node names follow preorder with children in
/// symbol order; leaves carry their suffix number.
std::string to_dot(const NaiveSuffixTree& tree);
std::string to_dot(const CompactSuffixTree& tree);

/// "n=<n> sigma=<sigma> nodes=<total> internal=<i> leaves=<n> growth=<g>"
std::string stats_line(const Str& s, const TreeCounts& counts, std::size_t growth);

}  // namespace stree
