#include "outpart/digraph.hpp"

#include <algorithm>
#include <sstream>

namespace outpart {

namespace {

void sorted_insert(std::vector<int>& xs, int v) {
    xs.insert(std::lower_bound(xs.begin(), xs.end(), v), v);
}

bool sorted_contains(const std::vector<int>& xs, int v) {
    return std::binary_search(xs.begin(), xs.end(), v);
}

// Parses a line of exactly `count` space-separated non-negative integers.
bool parse_ints(const std::string& line, int count, std::vector<long long>& out) {
    out.clear();
    size_t i = 0;
    for (int f = 0; f < count; ++f) {
        if (f > 0) {
            if (i >= line.size() || line[i] != ' ') return false;
            ++i;
        }
        if (i >= line.size() || !std::isdigit(static_cast<unsigned char>(line[i]))) return false;
        long long value = 0;
        while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) {
            value = value * 10 + (line[i] - '0');
            if (value > 1'000'000'000LL) return false;
            ++i;
        }
        out.push_back(value);
    }
    return i == line.size();
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    // trailing blank lines are tolerated
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

}  // namespace

Digraph::Digraph(int n) : n_(n), out_(n), in_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
}

int Digraph::check(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range: " + std::to_string(v));
    return v;
}

void Digraph::add_arc(int u, int v) {
    check(u);
    check(v);
    if (u == v) throw std::invalid_argument("self-loop rejected: " + std::to_string(u));
    if (has_arc(u, v))
        throw std::invalid_argument("duplicate arc rejected: " + std::to_string(u) + "->" + std::to_string(v));
    sorted_insert(out_[u], v);
    sorted_insert(in_[v], u);
    ++m_;
}

bool Digraph::has_arc(int u, int v) const {
    check(u);
    check(v);
    return sorted_contains(out_[u], v);
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
    std::vector<std::pair<int, int>> result;
    result.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : out_[u]) result.emplace_back(u, v);
    return result;
}

Graph::Graph(int n) : n_(n), adj_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
}

int Graph::check(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range: " + std::to_string(v));
    return v;
}

void Graph::add_edge(int u, int v) {
    check(u);
    check(v);
    if (u == v) throw std::invalid_argument("self-loop rejected: " + std::to_string(u));
    if (has_edge(u, v))
        throw std::invalid_argument("duplicate edge rejected: {" + std::to_string(u) + "," + std::to_string(v) + "}");
    sorted_insert(adj_[u], v);
    sorted_insert(adj_[v], u);
    ++m_;
}

bool Graph::has_edge(int u, int v) const {
    check(u);
    check(v);
    return sorted_contains(adj_[u], v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> result;
    result.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) result.emplace_back(u, v);
    return result;
}

DegreeProfile degree_profile(const Digraph& d) {
    DegreeProfile p;
    const int n = d.vertex_count();
    p.out_degree.resize(n);
    p.in_degree.resize(n);
    for (int v = 0; v < n; ++v) {
        p.out_degree[v] = d.out_degree(v);
        p.in_degree[v] = d.in_degree(v);
        p.max_out = std::max(p.max_out, p.out_degree[v]);
        p.max_in = std::max(p.max_in, p.in_degree[v]);
    }
    p.out_regular = n > 0;
    for (int v = 0; v < n; ++v)
        if (p.out_degree[v] != p.out_degree[0]) p.out_regular = false;
    if (p.out_regular) p.out_regular_k = p.out_degree[0];
    return p;
}

Graph underlying_graph(const Digraph& d) {
    Graph g(d.vertex_count());
    for (auto [u, v] : d.arcs())
        if (!g.has_edge(u, v)) g.add_edge(u, v);
    return g;
}

Digraph reverse(const Digraph& d) {
    Digraph r(d.vertex_count());
    for (auto [u, v] : d.arcs()) r.add_arc(v, u);
    return r;
}

std::pair<Digraph, std::vector<int>> induced_subdigraph(const Digraph& d,
                                                        const std::vector<int>& vertices) {
    std::vector<int> to_new(d.vertex_count(), -1);
    for (size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= d.vertex_count()) throw std::invalid_argument("vertex id out of range");
        if (to_new[v] != -1) throw std::invalid_argument("duplicate vertex in induced set");
        to_new[v] = static_cast<int>(i);
    }
    Digraph sub(static_cast<int>(vertices.size()));
    for (int v : vertices)
        for (int w : d.out(v))
            if (to_new[w] != -1) sub.add_arc(to_new[v], to_new[w]);
    return {std::move(sub), vertices};
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> to_new(g.vertex_count(), -1);
    for (size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex id out of range");
        if (to_new[v] != -1) throw std::invalid_argument("duplicate vertex in induced set");
        to_new[v] = static_cast<int>(i);
    }
    Graph sub(static_cast<int>(vertices.size()));
    for (int v : vertices)
        for (int w : g.neighbors(v))
            if (to_new[w] != -1 && to_new[v] < to_new[w]) sub.add_edge(to_new[v], to_new[w]);
    return sub;
}

Digraph parse_digraph(const std::string& text) {
    auto lines = split_lines(text);
    std::vector<long long> fields;
    if (lines.empty() || !parse_ints(lines[0], 2, fields))
        throw parse_error(parse_error::kind::bad_header, "expected header line \"n m\"");
    const long long n = fields[0], m = fields[1];
    if (static_cast<long long>(lines.size()) != m + 1)
        throw parse_error(parse_error::kind::malformed_line,
                          "expected " + std::to_string(m) + " arc lines, got " +
                              std::to_string(lines.size() - 1));
    Digraph d(static_cast<int>(n));
    for (long long i = 1; i <= m; ++i) {
        if (!parse_ints(lines[i], 2, fields))
            throw parse_error(parse_error::kind::malformed_line, "malformed arc line: \"" + lines[i] + "\"");
        const long long u = fields[0], v = fields[1];
        if (u >= n || v >= n)
            throw parse_error(parse_error::kind::out_of_range, "vertex id out of range on line " + std::to_string(i));
        if (u == v)
            throw parse_error(parse_error::kind::self_loop, "self-loop on line " + std::to_string(i));
        if (d.has_arc(static_cast<int>(u), static_cast<int>(v)))
            throw parse_error(parse_error::kind::duplicate_arc, "duplicate arc on line " + std::to_string(i));
        d.add_arc(static_cast<int>(u), static_cast<int>(v));
    }
    return d;
}

std::string serialize_digraph(const Digraph& d) {
    std::ostringstream os;
    os << d.vertex_count() << ' ' << d.arc_count() << '\n';
    for (auto [u, v] : d.arcs()) os << u << ' ' << v << '\n';
    return os.str();
}

Graph parse_graph(const std::string& text) {
    auto lines = split_lines(text);
    std::vector<long long> fields;
    if (lines.empty() || !parse_ints(lines[0], 2, fields))
        throw parse_error(parse_error::kind::bad_header, "expected header line \"n m\"");
    const long long n = fields[0], m = fields[1];
    if (static_cast<long long>(lines.size()) != m + 1)
        throw parse_error(parse_error::kind::malformed_line,
                          "expected " + std::to_string(m) + " edge lines, got " +
                              std::to_string(lines.size() - 1));
    Graph g(static_cast<int>(n));
    for (long long i = 1; i <= m; ++i) {
        if (!parse_ints(lines[i], 2, fields))
            throw parse_error(parse_error::kind::malformed_line, "malformed edge line: \"" + lines[i] + "\"");
        const long long u = fields[0], v = fields[1];
        if (u >= n || v >= n)
            throw parse_error(parse_error::kind::out_of_range, "vertex id out of range on line " + std::to_string(i));
        if (u == v)
            throw parse_error(parse_error::kind::self_loop, "self-loop on line " + std::to_string(i));
        if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
            throw parse_error(parse_error::kind::duplicate_edge, "duplicate edge on line " + std::to_string(i));
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream os;
    os << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

std::string to_dot(const Digraph& d) {
    std::ostringstream os;
    os << "digraph G {\n";
    for (int v = 0; v < d.vertex_count(); ++v) os << "  " << v << ";\n";
    for (auto [u, v] : d.arcs()) os << "  " << u << " -> " << v << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace outpart
