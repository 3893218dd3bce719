#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "leavitt/errors.hpp"

namespace leavitt {

/// Finite directed graph with named vertices and edges; declaration order of
/// edges is observable (it drives the canonical special-edge choice).
class Graph {
public:
    struct Edge {
        std::string name;
        int src;
        int dst;
    };

    // (edge name, source name, range name) triples
    Graph(std::vector<std::string> vertices,
          std::vector<std::tuple<std::string, std::string, std::string>> edges);

    // one vertex v and loops e1..en
    static std::shared_ptr<const Graph> rose(int n);
    // line-based file grammar: `vertex <name>`, `edge <name> <src> <dst>`,
    // `#` comments, blank lines ignored
    static std::shared_ptr<const Graph> parse(std::string_view text);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::string& vertex_name(int v) const { return vertices_[static_cast<std::size_t>(v)]; }
    const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
    int find_vertex(std::string_view name) const; // -1 if absent
    int find_edge(std::string_view name) const;   // -1 if absent
    const std::vector<int>& out_edges(int v) const { return out_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& in_edges(int v) const { return in_[static_cast<std::size_t>(v)]; }
    bool is_sink(int v) const { return out_edges(v).empty(); }
    bool is_regular(int v) const { return !is_sink(v); }
    bool is_rose() const { return vertex_count() == 1 && edge_count() >= 1; }

    friend bool operator==(const Graph& a, const Graph& b);

private:
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
};

using GraphPtr = std::shared_ptr<const Graph>;

/// Finite path: a composable edge sequence, or a vertex (the empty path).
class Path {
public:
    static Path vertex(GraphPtr g, int v);
    static Path edge(GraphPtr g, int e);
    static Path of_edges(GraphPtr g, std::vector<int> edges); // validates composability

    const GraphPtr& graph() const { return graph_; }
    int length() const { return static_cast<int>(edges_.size()); }
    bool empty() const { return edges_.empty(); }
    int source() const { return base_; }
    int range() const;
    int at(int i) const { return edges_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& edges() const { return edges_; }

    Path appended(int e) const;        // this . e
    Path prefix(int len) const;        // first len edges
    Path suffix_from(int k) const;     // edges [k, length)
    Path dropped_back() const { return prefix(length() - 1); }
    Path pow(int k) const;             // requires closed (or k == 1)
    Path rotated(int i) const;         // requires closed
    bool starts_with(const Path& p) const; // treats a vertex path as prefix iff sources agree
    bool ends_with(const Path& p) const;

    bool is_closed() const { return !empty() && source() == range(); }
    std::vector<std::string> edge_names() const;

    friend Path concat(const Path& a, const Path& b); // requires r(a) == s(b)
    friend bool operator==(const Path& a, const Path& b);
    friend bool operator!=(const Path& a, const Path& b) { return !(a == b); }

private:
    Path(GraphPtr g, int base, std::vector<int> edges)
        : graph_(std::move(g)), base_(base), edges_(std::move(edges)) {}
    GraphPtr graph_;
    int base_; // source vertex; the vertex itself when empty
    std::vector<int> edges_;
};

// order used for maps and display: (length, edge-name sequence, vertex name)
bool path_less(const Path& a, const Path& b);
struct PathLess {
    bool operator()(const Path& a, const Path& b) const { return path_less(a, b); }
};

// closed, nonempty, and not a proper power of a shorter closed path
bool is_simple_closed(const Path& c);
// smallest closed root d with c == d^k
Path primitive_root(const Path& c);
// the cyclic rotations of c in rotation order, duplicates removed
std::vector<Path> rotations(const Path& c);
// c = e_{k_1}..e_{k_m} with k_i in {1,3,..,n} for i < m and k_m = 2 (1-based
// declaration indices in the rose R_n)
bool in_Cs(const Path& c, int n);

/// Eventually periodic infinite path beta . c^infinity in canonical form:
/// the period is primitive and the prefix is the minimal preperiod (while the
/// prefix ends with the period's last edge, that edge is rotated into the
/// period). Equality of values is equality of infinite paths.
class RationalInfinitePath {
public:
    RationalInfinitePath(Path prefix, Path period); // requires r(prefix) == s(period), period closed

    const Path& prefix() const { return prefix_; }
    const Path& period() const { return period_; }
    int source() const { return prefix_.empty() ? period_.source() : prefix_.source(); }
    int first_edge() const { return prefix_.empty() ? period_.at(0) : prefix_.at(0); }

    Path tau_leq(int n) const;                 // first n edges
    RationalInfinitePath tau_gt(int n) const;  // drop the first n edges
    RationalInfinitePath prepended(int e) const;

    friend bool operator==(const RationalInfinitePath& a, const RationalInfinitePath& b);
    friend bool operator!=(const RationalInfinitePath& a, const RationalInfinitePath& b) { return !(a == b); }

private:
    Path prefix_;
    Path period_;
};

bool rational_tail_equivalent(const RationalInfinitePath& a, const RationalInfinitePath& b);
std::pair<Path, RationalInfinitePath> tau_truncate(const RationalInfinitePath& p, int n);

bool rip_less(const RationalInfinitePath& a, const RationalInfinitePath& b);
struct RipLess {
    bool operator()(const RationalInfinitePath& a, const RationalInfinitePath& b) const {
        return rip_less(a, b);
    }
};

} // namespace leavitt
