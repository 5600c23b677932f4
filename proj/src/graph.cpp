#include "cosmd/graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <unordered_map>

namespace cosmd {

bool Graph::has_arc(int u, int v) const {
    const auto& a = out[u];
    return std::binary_search(a.begin(), a.end(), v);
}

int Graph::index_of(std::string_view label) const {
    for (int i = 0; i < n(); ++i)
        if (labels[i] == label) return i;
    throw input_error("unknown vertex label: " + std::string(label));
}

long long Graph::edge_count() const {
    long long arcs = 0;
    for (const auto& a : out) arcs += static_cast<long long>(a.size());
    return kind == GraphKind::undirected ? arcs / 2 : arcs;
}

Graph build_graph_indexed(GraphKind kind, std::vector<std::string> labels,
                          const std::vector<std::pair<int, int>>& edges) {
    const int n = static_cast<int>(labels.size());
    {
        auto sorted = labels;
        std::sort(sorted.begin(), sorted.end());
        auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end()) throw input_error("duplicate label: " + *dup);
        for (const auto& l : labels)
            if (l.empty()) throw input_error("empty vertex label");
    }

    Graph g;
    g.kind = kind;
    g.labels = std::move(labels);
    g.out.assign(n, {});
    g.in.assign(n, {});

    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw input_error("edge endpoint out of range");
        if (u == v) throw input_error("self-loop at vertex: " + g.labels[u]);
        g.out[u].push_back(v);
        g.in[v].push_back(u);
        if (kind == GraphKind::undirected) {
            g.out[v].push_back(u);
            g.in[u].push_back(v);
        }
    }
    for (int u = 0; u < n; ++u) {
        std::sort(g.out[u].begin(), g.out[u].end());
        std::sort(g.in[u].begin(), g.in[u].end());
        auto dup = std::adjacent_find(g.out[u].begin(), g.out[u].end());
        if (dup != g.out[u].end())
            throw input_error("duplicate edge: " + g.labels[u] + " " + g.labels[*dup]);
    }
    return g;
}

Graph build_graph(GraphKind kind, std::vector<std::string> labels,
                  const std::vector<std::pair<std::string, std::string>>& edges) {
    std::unordered_map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
        if (!index.emplace(labels[i], i).second)
            throw input_error("duplicate label: " + labels[i]);
    }
    std::vector<std::pair<int, int>> resolved;
    resolved.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        auto ia = index.find(a);
        if (ia == index.end()) throw input_error("unknown endpoint: " + a);
        auto ib = index.find(b);
        if (ib == index.end()) throw input_error("unknown endpoint: " + b);
        resolved.emplace_back(ia->second, ib->second);
    }
    return build_graph_indexed(kind, std::move(labels), resolved);
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    if (source < 0 || source >= g.n()) throw input_error("unknown source vertex");
    std::vector<int> dist(g.n(), kUnreachable);
    std::deque<int> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : g.out[u]) {
            if (dist[v] == kUnreachable) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    DistanceMatrix m;
    m.n = g.n();
    m.d.resize(static_cast<std::size_t>(m.n) * m.n);
    for (int s = 0; s < m.n; ++s) {
        auto row = bfs_distances(g, s);
        std::copy(row.begin(), row.end(), m.d.begin() + static_cast<std::size_t>(s) * m.n);
    }
    return m;
}

Graph complement(const Graph& g) {
    if (g.kind != GraphKind::undirected)
        throw input_error("complement is defined for undirected graphs only");
    Graph c;
    c.kind = GraphKind::undirected;
    c.labels = g.labels;
    const int n = g.n();
    c.out.assign(n, {});
    for (int u = 0; u < n; ++u) {
        const auto& a = g.out[u];
        std::size_t k = 0;
        for (int v = 0; v < n; ++v) {
            while (k < a.size() && a[k] < v) ++k;
            bool adjacent = k < a.size() && a[k] == v;
            if (v != u && !adjacent) c.out[u].push_back(v);
        }
    }
    c.in = c.out;
    return c;
}

namespace {

// BFS reach count over a chosen adjacency view.
int reach_count(const std::vector<std::vector<int>>& adj, int start) {
    std::vector<char> seen(adj.size(), 0);
    std::deque<int> queue{start};
    seen[start] = 1;
    int count = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : adj[u]) {
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                queue.push_back(v);
            }
        }
    }
    return count;
}

}  // namespace

Connectivity connectivity(const Graph& g) {
    const int n = g.n();
    if (n == 0) throw input_error("connectivity of the empty graph is undefined");
    if (g.kind == GraphKind::undirected) {
        return reach_count(g.out, 0) == n ? Connectivity::connected : Connectivity::disconnected;
    }
    bool strong = reach_count(g.out, 0) == n && reach_count(g.in, 0) == n;
    if (strong) return Connectivity::strongly_connected;
    std::vector<std::vector<int>> undirected(n);
    for (int u = 0; u < n; ++u) {
        for (int v : g.out[u]) {
            undirected[u].push_back(v);
            undirected[v].push_back(u);
        }
    }
    return reach_count(undirected, 0) == n ? Connectivity::weakly_connected_only
                                           : Connectivity::disconnected;
}

VertexClass classify_vertex(const Graph& g, int u) {
    if (g.kind != GraphKind::directed)
        throw input_error("vertex classes are defined for directed graphs only");
    if (u < 0 || u >= g.n()) throw input_error("unknown vertex");
    VertexClass c;
    for (int v = 0; v < g.n(); ++v) {
        if (v == u) continue;
        bool uv = g.has_arc(u, v);
        bool vu = g.has_arc(v, u);
        if (!uv && !vu) c.solitary = true;
        if (vu && !uv) c.in_vertex = true;
        if (uv && !vu) c.out_vertex = true;
    }
    c.in_out = c.in_vertex && c.out_vertex;
    return c;
}

TwinStatus twin_status(const Graph& g, int u, int v) {
    if (g.kind != GraphKind::undirected)
        throw input_error("twin status is defined for undirected graphs only");
    if (u < 0 || u >= g.n() || v < 0 || v >= g.n()) throw input_error("unknown vertex");
    if (u == v) throw input_error("twin status needs two distinct vertices");
    auto without = [](const std::vector<int>& a, int x) {
        std::vector<int> r;
        r.reserve(a.size());
        for (int w : a)
            if (w != x) r.push_back(w);
        return r;
    };
    bool adjacent = g.has_arc(u, v);
    bool open_equal = without(g.out[u], v) == without(g.out[v], u);
    if (!open_equal) return TwinStatus::not_twins;
    return adjacent ? TwinStatus::true_twins : TwinStatus::false_twins;
}

namespace {

bool valid_label(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> index;
    std::vector<std::pair<int, int>> edges;
    bool have_kind = false;
    GraphKind kind = GraphKind::undirected;

    auto intern = [&](const std::string& name) {
        auto it = index.find(name);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(labels.size());
        labels.push_back(name);
        index.emplace(name, id);
        return id;
    };

    std::size_t pos = 0;
    int line_no = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

        std::vector<std::string> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            std::size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            if (i > start) tokens.emplace_back(line.substr(start, i - start));
        }
        if (tokens.empty()) {
            if (eol == text.size()) break;
            continue;
        }

        if (!have_kind) {
            if (tokens.size() != 1 || (tokens[0] != "undirected" && tokens[0] != "directed"))
                throw input_error("edge list line " + std::to_string(line_no) +
                                  ": expected 'undirected' or 'directed'");
            kind = tokens[0] == "directed" ? GraphKind::directed : GraphKind::undirected;
            have_kind = true;
        } else {
            if (tokens.size() != 2)
                throw input_error("edge list line " + std::to_string(line_no) +
                                  ": expected 'u v'");
            for (const auto& t : tokens)
                if (!valid_label(t))
                    throw input_error("edge list line " + std::to_string(line_no) +
                                      ": bad label '" + t + "'");
            edges.emplace_back(intern(tokens[0]), intern(tokens[1]));
        }
        if (eol == text.size()) break;
    }
    if (!have_kind) throw input_error("edge list: missing 'undirected'/'directed' header");
    return build_graph_indexed(kind, std::move(labels), edges);
}

bool graphs_equal_labelled(const Graph& a, const Graph& b) {
    if (a.kind != b.kind || a.n() != b.n()) return false;
    std::unordered_map<std::string, int> where;
    for (int i = 0; i < b.n(); ++i) where.emplace(b.labels[i], i);
    std::vector<int> map(a.n());
    for (int i = 0; i < a.n(); ++i) {
        auto it = where.find(a.labels[i]);
        if (it == where.end()) return false;
        map[i] = it->second;
    }
    if (a.edge_count() != b.edge_count()) return false;
    for (int u = 0; u < a.n(); ++u)
        for (int v : a.out[u])
            if (!b.has_arc(map[u], map[v])) return false;
    return true;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> map(g.n(), -1);
    std::vector<std::string> labels;
    labels.reserve(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        int v = sorted[i];
        if (v < 0 || v >= g.n()) throw input_error("unknown vertex in subset");
        map[v] = static_cast<int>(i);
        labels.push_back(g.labels[v]);
    }
    std::vector<std::pair<int, int>> edges;
    for (int u : sorted) {
        for (int v : g.out[u]) {
            if (map[v] < 0) continue;
            if (g.kind == GraphKind::undirected && v < u) continue;
            edges.emplace_back(map[u], map[v]);
        }
    }
    return build_graph_indexed(g.kind, std::move(labels), edges);
}

}  // namespace cosmd
