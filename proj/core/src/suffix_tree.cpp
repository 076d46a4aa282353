#include "stree/suffix_tree.hpp"

#include <algorithm>
#include <sstream>

#include "stree/error.hpp"

namespace stree {

NodeId NaiveSuffixTree::leaf(std::size_t j) const {
    if (j < 1 || j > leaves_.size()) {
        throw RangeError("leaf " + std::to_string(j) + " outside 1.." +
                         std::to_string(leaves_.size()));
    }
    return leaves_[j - 1];
}

NodeId NaiveSuffixTree::child(NodeId v, Symbol s) const {
    for (NodeId u = nodes_.at(v).first_child; u != kNoNode; u = nodes_[u].next_sibling) {
        if (nodes_[u].label == s) return u;
        if (nodes_[u].label > s) break;
    }
    return kNoNode;
}

std::vector<NodeId> NaiveSuffixTree::children(NodeId v) const {
    std::vector<NodeId> out;
    out.reserve(nodes_.at(v).degree);
    for (NodeId u = nodes_[v].first_child; u != kNoNode; u = nodes_[u].next_sibling) {
        out.push_back(u);
    }
    return out;
}

std::vector<Symbol> NaiveSuffixTree::path_label(NodeId v) const {
    std::vector<Symbol> out;
    for (NodeId u = v; u != root(); u = nodes_.at(u).parent) out.push_back(nodes_[u].label);
    std::reverse(out.begin(), out.end());
    return out;
}

TreeCounts NaiveSuffixTree::counts() const noexcept {
    return TreeCounts{nodes_.size(), nodes_.size() - leaves_.size(), leaves_.size()};
}

NodeId NaiveSuffixTree::add_child(NodeId v, Symbol s, std::uint32_t origin) {
    const auto id = static_cast<NodeId>(nodes_.size());
    Node node;
    node.parent = v;
    node.label = s;
    node.depth = nodes_[v].depth + 1;
    node.origin = origin;

    // keep the sibling list sorted by label
    NodeId prev = kNoNode;
    NodeId next = nodes_[v].first_child;
    while (next != kNoNode && nodes_[next].label < s) {
        prev = next;
        next = nodes_[next].next_sibling;
    }
    node.next_sibling = next;
    nodes_.push_back(node);
    if (prev == kNoNode) {
        nodes_[v].first_child = id;
    } else {
        nodes_[prev].next_sibling = id;
    }
    ++nodes_[v].degree;
    return id;
}

NaiveSuffixTree build_naive(const Str& s) {
    const std::size_t n = s.size();
    if (n == 0) throw EmptyStringError("cannot build the suffix tree of the empty string");

    NaiveSuffixTree tree(s);
    tree.nodes_.emplace_back();
    tree.leaves_.assign(n, kNoNode);
    tree.created_internal_.assign(n, 0);

    auto sym = s.symbols();
    auto symbol_of = [&](std::size_t pos) { return pos < n ? sym[pos] : kTerminator; };

    for (std::size_t j = 1; j <= n; ++j) {
        // X = S[j,n]$ occupies 0-based positions j-1 .. n of sym + terminator
        const std::size_t len = n - j + 2;
        NodeId v = tree.root();
        std::size_t i = 0;
        while (i < len) {
            NodeId u = tree.child(v, symbol_of(j - 1 + i));
            if (u == kNoNode) break;
            v = u;
            ++i;
        }
        // remaining n-j-i+2 edges hang off v
        for (std::size_t t = i; t < len; ++t) {
            v = tree.add_child(v, symbol_of(j - 1 + t), static_cast<std::uint32_t>(j));
        }
        tree.created_internal_[j - 1] = len - i - 1;
        tree.nodes_[v].leaf = static_cast<std::uint32_t>(j);
        tree.leaves_[j - 1] = v;
    }
    return tree;
}

namespace {

void dot_header(std::ostringstream& out, const char* name) {
    out << "digraph " << name << " {\n";
    out << "  node [shape=circle, label=\"\", width=0.25];\n";
}

void dot_node(std::ostringstream& out, std::size_t name, std::uint32_t leaf) {
    out << "  n" << name;
    if (leaf != 0) out << " [label=\"" << leaf << "\", shape=plaintext]";
    out << ";\n";
}

void dot_edge(std::ostringstream& out, std::size_t from, std::size_t to, const std::string& label) {
    out << "  n" << from << " -> n" << to << " [label=\"" << label << "\"];\n";
}

}  // namespace

std::string to_dot(const NaiveSuffixTree& tree) {
    std::ostringstream out;
    dot_header(out, "naive_suffix_tree");
    std::vector<std::pair<NodeId, std::size_t>> stack{{tree.root(), kNoNode}};
    std::size_t next_name = 0;
    std::ostringstream edges;
    while (!stack.empty()) {
        auto [v, parent_name] = stack.back();
        stack.pop_back();
        const std::size_t name = next_name++;
        const auto& node = tree.node(v);
        dot_node(out, name, node.leaf);
        if (parent_name != static_cast<std::size_t>(kNoNode)) {
            dot_edge(edges, parent_name, name, symbol_text(node.label));
        }
        auto kids = tree.children(v);
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.emplace_back(*it, name);
    }
    out << edges.str() << "}\n";
    return out.str();
}

std::string to_dot(const CompactSuffixTree& tree) {
    std::ostringstream out;
    dot_header(out, "compact_suffix_tree");
    std::ostringstream edges;
    // compact node ids are already assigned in preorder
    for (NodeId v = 0; v < tree.nodes().size(); ++v) {
        const auto& node = tree.node(v);
        dot_node(out, v, node.leaf);
        if (node.parent != kNoNode) dot_edge(edges, node.parent, v, to_text(tree.edge_symbols(v)));
    }
    out << edges.str() << "}\n";
    return out.str();
}

std::string stats_line(const Str& s, const TreeCounts& counts, std::size_t growth) {
    std::ostringstream out;
    out << "n=" << s.size() << " sigma=" << s.alphabet().size() << " nodes=" << counts.total
        << " internal=" << counts.internal << " leaves=" << counts.leaves << " growth=" << growth;
    return out.str();
}

}  // namespace stree
