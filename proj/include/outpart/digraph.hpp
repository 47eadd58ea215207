#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace outpart {

/// Error raised by the text parsers. `why` identifies the exact defect so
/// callers (and tests) can distinguish input problems.
struct parse_error : std::runtime_error {
    enum class kind {
        malformed_line,
        out_of_range,
        self_loop,
        duplicate_arc,
        duplicate_edge,
        bad_header,
        bad_arity,
        bad_literal,
        bad_partition,
    };

    kind why;

    parse_error(kind k, const std::string& msg) : std::runtime_error(msg), why(k) {}
};

/// Raised when a requested parameter regime is outside what the toolkit can
/// build (e.g. seed digraphs that are not known for large k).
struct unsupported_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Loop-free digraph on vertices 0..n-1. Digons (u,v)+(v,u) are allowed,
/// parallel arcs are not. Adjacency lists are kept sorted ascending, so all
/// traversals are deterministic. Treat instances as immutable once built.
class Digraph {
  public:
    Digraph() = default;
    explicit Digraph(int n);

    void add_arc(int u, int v);
    bool has_arc(int u, int v) const;

    int vertex_count() const { return n_; }
    int arc_count() const { return m_; }
    int out_degree(int v) const { return static_cast<int>(out_[check(v)].size()); }
    int in_degree(int v) const { return static_cast<int>(in_[check(v)].size()); }

    const std::vector<int>& out(int v) const { return out_[check(v)]; }
    const std::vector<int>& in(int v) const { return in_[check(v)]; }

    /// All arcs as (tail, head), sorted by tail then head.
    std::vector<std::pair<int, int>> arcs() const;

    bool operator==(const Digraph&) const = default;

  private:
    int check(int v) const;

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

/// Simple loop-free undirected graph, same id conventions as Digraph.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n);

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    int degree(int v) const { return static_cast<int>(adj_[check(v)].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[check(v)]; }

    /// Edges as (u, v) with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;

  private:
    int check(int v) const;

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
};

struct DegreeProfile {
    std::vector<int> out_degree;
    std::vector<int> in_degree;
    int max_out = 0;
    int max_in = 0;
    bool out_regular = false;  // every vertex has the same out-degree
    int out_regular_k = -1;    // that out-degree, when out_regular

    bool is_k_out_regular(int k) const { return out_regular && out_regular_k == k; }
};

DegreeProfile degree_profile(const Digraph& d);

/// Suppress orientations and collapse digons to single edges.
Graph underlying_graph(const Digraph& d);

Digraph reverse(const Digraph& d);

/// Subdigraph induced by `vertices` (ids renumbered 0..k-1 in the given
/// order). Second element maps new ids back to the originals.
std::pair<Digraph, std::vector<int>> induced_subdigraph(const Digraph& d,
                                                        const std::vector<int>& vertices);

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// Edge-list text format: first line "n m", then m lines "u v", LF endings.
Digraph parse_digraph(const std::string& text);
std::string serialize_digraph(const Digraph& d);

Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

/// DOT export, write-only.
std::string to_dot(const Digraph& d);

}  // namespace outpart
