#include "stree/suffix_tree.hpp"

#include <algorithm>

#include "stree/error.hpp"

namespace stree {

NodeId CompactSuffixTree::leaf(std::size_t j) const {
    if (j < 1 || j > leaves_.size()) {
        throw RangeError("leaf " + std::to_string(j) + " outside 1.." +
                         std::to_string(leaves_.size()));
    }
    return leaves_[j - 1];
}

std::vector<Symbol> CompactSuffixTree::edge_symbols(NodeId v) const {
    const auto& label = nodes_.at(v).label;
    auto sym = source_.symbols();
    std::vector<Symbol> out(sym.begin() + label.start - 1, sym.begin() + label.start - 1 + label.length);
    if (label.terminal) out.push_back(kTerminator);
    return out;
}

Symbol CompactSuffixTree::first_symbol(NodeId v) const {
    const auto& label = nodes_.at(v).label;
    return label.length > 0 ? source_.symbols()[label.start - 1] : kTerminator;
}

std::vector<Symbol> CompactSuffixTree::path_label(NodeId v) const {
    std::vector<NodeId> chain;
    for (NodeId u = v; u != root(); u = nodes_.at(u).parent) chain.push_back(u);
    std::vector<Symbol> out;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        auto e = edge_symbols(*it);
        out.insert(out.end(), e.begin(), e.end());
    }
    return out;
}

std::vector<std::size_t> CompactSuffixTree::leaves_below(NodeId v) const {
    std::vector<std::size_t> out;
    std::vector<NodeId> stack{v};
    while (!stack.empty()) {
        NodeId u = stack.back();
        stack.pop_back();
        const auto& node = nodes_.at(u);
        if (node.leaf != 0) out.push_back(node.leaf);
        stack.insert(stack.end(), node.children.begin(), node.children.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

TreeCounts CompactSuffixTree::counts() const noexcept {
    return TreeCounts{nodes_.size(), nodes_.size() - leaves_.size(), leaves_.size()};
}

CompactSuffixTree compress(const NaiveSuffixTree& naive) {
    const std::size_t n = naive.source().size();
    CompactSuffixTree tree(naive.source());
    tree.nodes_.emplace_back();
    tree.leaves_.assign(n, kNoNode);

    struct Pending {
        NodeId naive_child;   // first node below the branching point
        NodeId naive_parent;  // branching (or root) node above it
        NodeId parent;        // compact node the new edge hangs from
    };
    std::vector<Pending> stack;
    auto push_children = [&](NodeId naive_v, NodeId compact_v) {
        auto kids = naive.children(naive_v);
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
            stack.push_back({*it, naive_v, compact_v});
        }
    };
    push_children(naive.root(), tree.root());

    while (!stack.empty()) {
        Pending p = stack.back();
        stack.pop_back();

        NodeId end = p.naive_child;
        while (!naive.is_leaf(end) && naive.node(end).degree == 1) {
            end = naive.node(end).first_child;
        }
        const auto& top = naive.node(p.naive_parent);
        const auto& bottom = naive.node(end);

        // bottom's path label is S[origin, origin+depth-1] (plus $ at a leaf)
        CompactSuffixTree::Node node;
        node.parent = p.parent;
        node.depth = bottom.depth;
        node.leaf = bottom.leaf;
        node.label.start = bottom.origin + top.depth;
        if (bottom.leaf != 0) {
            node.label.length = static_cast<std::uint32_t>(n - bottom.origin + 1) - top.depth;
            node.label.terminal = true;
        } else {
            node.label.length = bottom.depth - top.depth;
        }

        const auto id = static_cast<NodeId>(tree.nodes_.size());
        tree.nodes_.push_back(std::move(node));
        tree.nodes_[p.parent].children.push_back(id);
        if (bottom.leaf != 0) {
            tree.leaves_[bottom.leaf - 1] = id;
        } else {
            push_children(end, id);
        }
    }
    return tree;
}

CompactSuffixTree build_compact(const Str& s) { return compress(build_naive(s)); }

std::vector<std::size_t> find_occurrences(const CompactSuffixTree& tree, const Str& pattern) {
    if (pattern.empty()) throw EmptyStringError("search pattern must be nonempty");
    auto text = tree.source().symbols();
    auto pat = pattern.symbols();

    NodeId v = tree.root();
    std::size_t pos = 0;
    while (pos < pat.size()) {
        NodeId next = kNoNode;
        for (NodeId u : tree.node(v).children) {
            if (tree.first_symbol(u) == pat[pos]) {
                next = u;
                break;
            }
        }
        if (next == kNoNode) return {};
        const auto& label = tree.node(next).label;
        for (std::uint32_t t = 0; t < label.length && pos < pat.size(); ++t, ++pos) {
            if (text[label.start - 1 + t] != pat[pos]) return {};
        }
        // the pattern never contains the terminator, so running past the
        // symbolic part of a label means no match
        if (pos < pat.size() && label.terminal) return {};
        v = next;
    }
    return tree.leaves_below(v);
}

}  // namespace stree
