#include "cosmd/cotree.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace cosmd {

bool CoTree::contains_dir_join() const {
    for (const auto& n : nodes)
        if (n.kind == NodeKind::op_dir_join) return true;
    return false;
}

std::vector<NodeId> CoTree::postorder() const {
    std::vector<NodeId> order;
    order.reserve(nodes.size());
    // stack entry: (node, next child to visit)
    std::vector<std::pair<NodeId, std::size_t>> stack{{root, 0}};
    while (!stack.empty()) {
        auto& [id, next] = stack.back();
        const auto& nd = nodes[id];
        if (next < nd.children.size()) {
            NodeId child = nd.children[next++];
            stack.emplace_back(child, 0);
        } else {
            order.push_back(id);
            stack.pop_back();
        }
    }
    return order;
}

std::vector<std::int32_t> CoTree::leaf_labels_under(NodeId id) const {
    std::vector<std::int32_t> out;
    std::vector<NodeId> stack{id};
    while (!stack.empty()) {
        NodeId cur = stack.back();
        stack.pop_back();
        const auto& nd = nodes[cur];
        if (nd.kind == NodeKind::leaf) {
            out.push_back(nd.label);
        } else {
            for (auto it = nd.children.rbegin(); it != nd.children.rend(); ++it)
                stack.push_back(*it);
        }
    }
    return out;
}

namespace {

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

CoTree parse_cotree(std::string_view text) {
    CoTree t;
    std::unordered_set<std::string> seen;

    struct Frame {
        NodeKind kind;
        std::size_t open_pos;
        std::vector<NodeId> children;
    };
    std::vector<Frame> stack;
    NodeId finished = -1;  // completed subtree waiting for ',' / ')' / EOF

    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto attach = [&](NodeId id) {
        if (finished != -1) throw parse_error("expected ',' or ')'", i);
        if (stack.empty()) {
            finished = id;
        } else {
            stack.back().children.push_back(id);
            finished = id;
        }
    };

    skip_ws();
    while (i < text.size()) {
        char c = text[i];
        if (ident_char(c)) {
            std::size_t start = i;
            while (i < text.size() && ident_char(text[i])) ++i;
            std::string word(text.substr(start, i - start));
            skip_ws();
            bool opens = i < text.size() && text[i] == '(' &&
                         (word == "U" || word == "J" || word == "D");
            if (opens) {
                NodeKind kind = word == "U"   ? NodeKind::op_union
                                : word == "J" ? NodeKind::op_join
                                              : NodeKind::op_dir_join;
                if (finished != -1) throw parse_error("expected ',' or ')'", start);
                stack.push_back({kind, start, {}});
                ++i;  // consume '('
            } else {
                if (!seen.insert(word).second)
                    throw parse_error("duplicate leaf label '" + word + "'", start);
                NodeId id = static_cast<NodeId>(t.nodes.size());
                t.nodes.push_back({NodeKind::leaf, static_cast<std::int32_t>(t.labels.size()), {}});
                t.labels.push_back(word);
                attach(id);
            }
        } else if (c == ',') {
            if (stack.empty() || finished == -1) throw parse_error("unexpected ','", i);
            finished = -1;
            ++i;
        } else if (c == ')') {
            if (stack.empty()) throw parse_error("unexpected ')'", i);
            if (finished == -1) throw parse_error("expected subtree before ')'", i);
            Frame frame = std::move(stack.back());
            stack.pop_back();
            if (frame.children.size() < 2)
                throw parse_error("operator needs at least 2 children", frame.open_pos);
            NodeId id = static_cast<NodeId>(t.nodes.size());
            t.nodes.push_back({frame.kind, -1, std::move(frame.children)});
            finished = -1;
            attach(id);
        } else {
            throw parse_error(std::string("unexpected character '") + c + "'", i);
        }
        skip_ws();
    }
    if (!stack.empty()) throw parse_error("unterminated '('", stack.back().open_pos);
    if (finished == -1) throw parse_error("empty input", 0);
    t.root = finished;
    return t;
}

std::string serialize(const CoTree& t) {
    std::string out;
    out.reserve(t.nodes.size() * 3);
    // emit entries: (node, child position); position == children.size() closes
    struct Item {
        NodeId id;
        std::size_t pos;
    };
    std::vector<Item> stack{{t.root, 0}};
    while (!stack.empty()) {
        auto& [id, pos] = stack.back();
        const auto& nd = t.node(id);
        if (nd.kind == NodeKind::leaf) {
            out += t.labels[nd.label];
            stack.pop_back();
            continue;
        }
        if (pos == 0) {
            out += nd.kind == NodeKind::op_union ? 'U' : nd.kind == NodeKind::op_join ? 'J' : 'D';
            out += '(';
        } else if (pos < nd.children.size()) {
            out += ',';
        }
        if (pos == nd.children.size()) {
            out += ')';
            stack.pop_back();
        } else {
            NodeId child = nd.children[pos++];
            stack.push_back({child, 0});
        }
    }
    return out;
}

namespace {

// begin/end of each node's leaf range when leaves are numbered left to right
struct LeafSpans {
    std::vector<std::int32_t> begin, end;
};

LeafSpans leaf_spans(const CoTree& t, const std::vector<NodeId>& order) {
    LeafSpans s;
    s.begin.assign(t.nodes.size(), 0);
    s.end.assign(t.nodes.size(), 0);
    std::int32_t next_leaf = 0;
    for (NodeId id : order) {
        const auto& nd = t.node(id);
        if (nd.kind == NodeKind::leaf) {
            s.begin[id] = next_leaf;
            s.end[id] = ++next_leaf;
        } else {
            s.begin[id] = s.begin[nd.children.front()];
            s.end[id] = s.end[nd.children.back()];
        }
    }
    return s;
}

}  // namespace

Graph evaluate_as(const CoTree& t, GraphKind kind) {
    if (kind == GraphKind::undirected && t.contains_dir_join())
        throw input_error("tree contains a directed join; cannot evaluate as undirected");

    auto order = t.postorder();
    auto spans = leaf_spans(t, order);

    // graph vertex i = i-th leaf left to right
    std::vector<std::string> labels(t.leaf_count());
    for (NodeId id : order) {
        const auto& nd = t.node(id);
        if (nd.kind == NodeKind::leaf) labels[spans.begin[id]] = t.labels[nd.label];
    }

    Graph g;
    g.kind = kind;
    g.labels = std::move(labels);
    const int n = t.leaf_count();
    g.out.assign(n, {});
    g.in.assign(n, {});

    for (NodeId id : order) {
        const auto& nd = t.node(id);
        if (nd.kind == NodeKind::leaf || nd.kind == NodeKind::op_union) continue;
        for (std::size_t a = 0; a + 1 < nd.children.size(); ++a) {
            for (std::size_t b = a + 1; b < nd.children.size(); ++b) {
                for (int u = spans.begin[nd.children[a]]; u < spans.end[nd.children[a]]; ++u) {
                    for (int v = spans.begin[nd.children[b]]; v < spans.end[nd.children[b]]; ++v) {
                        g.out[u].push_back(v);
                        g.in[v].push_back(u);
                        if (nd.kind == NodeKind::op_join || kind == GraphKind::undirected) {
                            g.out[v].push_back(u);
                            g.in[u].push_back(v);
                        }
                    }
                }
            }
        }
    }
    for (int u = 0; u < n; ++u) {
        std::sort(g.out[u].begin(), g.out[u].end());
        std::sort(g.in[u].begin(), g.in[u].end());
    }
    return g;
}

Graph evaluate(const CoTree& t) {
    return evaluate_as(t, t.contains_dir_join() ? GraphKind::directed : GraphKind::undirected);
}

CanonicalForm canonicalize(const CoTree& t) {
    CoTree out;
    out.labels = t.labels;
    out.nodes.reserve(t.nodes.size());
    std::vector<NodeId> mapped(t.nodes.size(), -1);
    for (NodeId id : t.postorder()) {
        const auto& nd = t.node(id);
        if (nd.kind == NodeKind::leaf) {
            mapped[id] = static_cast<NodeId>(out.nodes.size());
            out.nodes.push_back({NodeKind::leaf, nd.label, {}});
            continue;
        }
        std::vector<NodeId> children;
        for (NodeId c : nd.children) {
            NodeId mc = mapped[c];
            if (out.node(mc).kind == nd.kind) {
                // splice a same-kind child's children in place
                for (NodeId gc : out.node(mc).children) children.push_back(gc);
            } else {
                children.push_back(mc);
            }
        }
        mapped[id] = static_cast<NodeId>(out.nodes.size());
        out.nodes.push_back({nd.kind, -1, std::move(children)});
    }
    out.root = mapped[t.root];
    return CanonicalForm{std::move(out)};
}

bool is_canonical(const CoTree& t) {
    for (NodeId id : t.postorder()) {
        const auto& nd = t.node(id);
        for (NodeId c : nd.children)
            if (t.node(c).kind == nd.kind) return false;
    }
    return true;
}

CoTree binarize(const CoTree& t) {
    CoTree out;
    out.labels = t.labels;
    out.nodes.reserve(t.nodes.size() * 2);
    std::vector<NodeId> mapped(t.nodes.size(), -1);
    for (NodeId id : t.postorder()) {
        const auto& nd = t.node(id);
        if (nd.kind == NodeKind::leaf) {
            mapped[id] = static_cast<NodeId>(out.nodes.size());
            out.nodes.push_back({NodeKind::leaf, nd.label, {}});
            continue;
        }
        NodeId acc = mapped[nd.children[0]];
        for (std::size_t k = 1; k < nd.children.size(); ++k) {
            NodeId next = static_cast<NodeId>(out.nodes.size());
            out.nodes.push_back({nd.kind, -1, {acc, mapped[nd.children[k]]}});
            acc = next;
        }
        mapped[id] = acc;
    }
    out.root = mapped[t.root];
    return out;
}

bool is_binary(const CoTree& t) {
    for (NodeId id : t.postorder()) {
        const auto& nd = t.node(id);
        if (nd.kind != NodeKind::leaf && nd.children.size() != 2) return false;
    }
    return true;
}

bool trees_equal(const CoTree& a, const CoTree& b) {
    // serialization is a faithful structural encoding
    return serialize(a) == serialize(b);
}

}  // namespace cosmd
