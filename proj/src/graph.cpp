#include "leavitt/graph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace leavitt {

namespace {

bool valid_name(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0]))))
        return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

} // namespace

Graph::Graph(std::vector<std::string> vertices,
             std::vector<std::tuple<std::string, std::string, std::string>> edges) {
    std::unordered_map<std::string, int> vidx;
    for (auto& v : vertices) {
        if (!valid_name(v)) throw domain_error("invalid vertex name '" + v + "'");
        if (!vidx.emplace(v, vertex_count()).second)
            throw domain_error("duplicate vertex name '" + v + "'");
        vertices_.push_back(std::move(v));
    }
    out_.resize(vertices_.size());
    in_.resize(vertices_.size());
    std::unordered_set<std::string> enames;
    for (auto& [name, src, dst] : edges) {
        if (!valid_name(name)) throw domain_error("invalid edge name '" + name + "'");
        if (vidx.count(name)) throw domain_error("edge name '" + name + "' already used as a vertex");
        if (!enames.insert(name).second) throw domain_error("duplicate edge name '" + name + "'");
        auto s = vidx.find(src);
        if (s == vidx.end()) throw domain_error("unknown vertex '" + src + "' in edge '" + name + "'");
        auto r = vidx.find(dst);
        if (r == vidx.end()) throw domain_error("unknown vertex '" + dst + "' in edge '" + name + "'");
        int id = edge_count();
        edges_.push_back(Edge{std::move(name), s->second, r->second});
        out_[static_cast<std::size_t>(s->second)].push_back(id);
        in_[static_cast<std::size_t>(r->second)].push_back(id);
    }
}

std::shared_ptr<const Graph> Graph::rose(int n) {
    if (n < 1) throw domain_error("rose needs at least one petal");
    std::vector<std::tuple<std::string, std::string, std::string>> edges;
    for (int i = 1; i <= n; ++i)
        edges.emplace_back("e" + std::to_string(i), "v", "v");
    return std::make_shared<const Graph>(std::vector<std::string>{"v"}, std::move(edges));
}

std::shared_ptr<const Graph> Graph::parse(std::string_view text) {
    std::vector<std::string> vertices;
    std::vector<std::tuple<std::string, std::string, std::string>> edges;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    bool saw_any = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind)) continue;
        saw_any = true;
        auto fail = [&](const std::string& msg) -> parse_error {
            return parse_error("graph file line " + std::to_string(lineno) + ": " + msg);
        };
        if (kind == "vertex") {
            std::string name, extra;
            if (!(ls >> name) || (ls >> extra)) throw fail("expected `vertex <name>`");
            if (!valid_name(name)) throw fail("invalid name '" + name + "'");
            vertices.push_back(name);
        } else if (kind == "edge") {
            std::string name, src, dst, extra;
            if (!(ls >> name >> src >> dst) || (ls >> extra))
                throw fail("expected `edge <name> <src> <dst>`");
            if (!valid_name(name)) throw fail("invalid name '" + name + "'");
            edges.emplace_back(name, src, dst);
        } else {
            throw fail("unknown directive '" + kind + "'");
        }
    }
    if (!saw_any) throw parse_error("empty graph file");
    try {
        return std::make_shared<const Graph>(std::move(vertices), std::move(edges));
    } catch (const domain_error& e) {
        throw parse_error(std::string("graph file: ") + e.what());
    }
}

int Graph::find_vertex(std::string_view name) const {
    for (int i = 0; i < vertex_count(); ++i)
        if (vertices_[static_cast<std::size_t>(i)] == name) return i;
    return -1;
}

int Graph::find_edge(std::string_view name) const {
    for (int i = 0; i < edge_count(); ++i)
        if (edges_[static_cast<std::size_t>(i)].name == name) return i;
    return -1;
}

bool operator==(const Graph& a, const Graph& b) {
    if (a.vertices_ != b.vertices_) return false;
    if (a.edges_.size() != b.edges_.size()) return false;
    for (std::size_t i = 0; i < a.edges_.size(); ++i) {
        const auto& x = a.edges_[i];
        const auto& y = b.edges_[i];
        if (x.name != y.name || x.src != y.src || x.dst != y.dst) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Path

Path Path::vertex(GraphPtr g, int v) {
    if (v < 0 || v >= g->vertex_count()) throw domain_error("vertex id out of range");
    return Path(std::move(g), v, {});
}

Path Path::edge(GraphPtr g, int e) {
    if (e < 0 || e >= g->edge_count()) throw domain_error("edge id out of range");
    int src = g->edge(e).src;
    return Path(std::move(g), src, {e});
}

Path Path::of_edges(GraphPtr g, std::vector<int> edges) {
    if (edges.empty()) throw domain_error("of_edges needs at least one edge; use Path::vertex");
    for (std::size_t i = 0; i < edges.size(); ++i) {
        int e = edges[i];
        if (e < 0 || e >= g->edge_count()) throw domain_error("edge id out of range");
        if (i > 0 && g->edge(edges[i - 1]).dst != g->edge(e).src)
            throw domain_error("edges do not compose: r(" + g->edge(edges[i - 1]).name +
                               ") != s(" + g->edge(e).name + ")");
    }
    int src = g->edge(edges.front()).src;
    return Path(std::move(g), src, std::move(edges));
}

int Path::range() const {
    return empty() ? base_ : graph_->edge(edges_.back()).dst;
}

Path Path::appended(int e) const {
    if (graph_->edge(e).src != range()) throw domain_error("appended edge does not compose");
    std::vector<int> es = edges_;
    es.push_back(e);
    return Path(graph_, empty() ? graph_->edge(e).src : base_, std::move(es));
}

Path Path::prefix(int len) const {
    if (len < 0 || len > length()) throw domain_error("prefix length out of range");
    return Path(graph_, base_, std::vector<int>(edges_.begin(), edges_.begin() + len));
}

Path Path::suffix_from(int k) const {
    if (k < 0 || k > length()) throw domain_error("suffix start out of range");
    int base = k == 0 ? base_ : graph_->edge(edges_[static_cast<std::size_t>(k - 1)]).dst;
    return Path(graph_, base, std::vector<int>(edges_.begin() + k, edges_.end()));
}

Path Path::pow(int k) const {
    if (k < 0) throw domain_error("negative path power");
    if (k == 0) return Path::vertex(graph_, source());
    if (k > 1 && !is_closed()) throw domain_error("powers need a closed path");
    std::vector<int> es;
    es.reserve(edges_.size() * static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) es.insert(es.end(), edges_.begin(), edges_.end());
    return Path(graph_, base_, std::move(es));
}

Path Path::rotated(int i) const {
    if (!is_closed()) throw domain_error("rotations need a closed path");
    int t = length();
    i = ((i % t) + t) % t;
    std::vector<int> es;
    es.reserve(static_cast<std::size_t>(t));
    for (int j = 0; j < t; ++j) es.push_back(edges_[static_cast<std::size_t>((i + j) % t)]);
    int src = graph_->edge(es.front()).src;
    return Path(graph_, src, std::move(es));
}

bool Path::starts_with(const Path& p) const {
    if (p.length() > length()) return false;
    if (p.empty()) return p.source() == source();
    return std::equal(p.edges_.begin(), p.edges_.end(), edges_.begin());
}

bool Path::ends_with(const Path& p) const {
    if (p.length() > length()) return false;
    if (p.empty()) return p.source() == range();
    return std::equal(p.edges_.rbegin(), p.edges_.rend(), edges_.rbegin());
}

std::vector<std::string> Path::edge_names() const {
    std::vector<std::string> out;
    out.reserve(edges_.size());
    for (int e : edges_) out.push_back(graph_->edge(e).name);
    return out;
}

Path concat(const Path& a, const Path& b) {
    if (!(*a.graph_ == *b.graph_)) throw domain_error("paths from different graphs");
    if (a.range() != b.source())
        throw domain_error("paths do not compose: r(first) != s(second)");
    if (a.empty()) return b;
    if (b.empty()) return a;
    std::vector<int> es = a.edges_;
    es.insert(es.end(), b.edges_.begin(), b.edges_.end());
    return Path(a.graph_, a.base_, std::move(es));
}

bool operator==(const Path& a, const Path& b) {
    return a.base_ == b.base_ && a.edges_ == b.edges_ && *a.graph_ == *b.graph_;
}

bool path_less(const Path& a, const Path& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    for (int i = 0; i < a.length(); ++i) {
        const std::string& an = a.graph()->edge(a.at(i)).name;
        const std::string& bn = b.graph()->edge(b.at(i)).name;
        if (an != bn) return an < bn;
    }
    if (a.empty())
        return a.graph()->vertex_name(a.source()) < b.graph()->vertex_name(b.source());
    return false;
}

// ---------------------------------------------------------------------------
// closed-path combinatorics

Path primitive_root(const Path& c) {
    if (!c.is_closed()) throw domain_error("primitive root needs a closed path");
    int t = c.length();
    for (int d = 1; d < t; ++d) {
        if (t % d != 0) continue;
        Path root = c.prefix(d);
        if (!root.is_closed()) continue;
        if (root.pow(t / d) == c) return root;
    }
    return c;
}

bool is_simple_closed(const Path& c) {
    if (!c.is_closed()) return false;
    return primitive_root(c).length() == c.length();
}

std::vector<Path> rotations(const Path& c) {
    if (!c.is_closed()) throw domain_error("rotations need a closed nonempty path");
    // rotation by i repeats with period = primitive period, so the first
    // t_prim rotations are exactly the distinct ones
    int t = primitive_root(c).length();
    std::vector<Path> out;
    out.reserve(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) out.push_back(c.rotated(i));
    return out;
}

bool in_Cs(const Path& c, int n) {
    const Graph& g = *c.graph();
    if (!g.is_rose() || g.edge_count() != n)
        throw domain_error("C_s membership needs the rose with " + std::to_string(n) + " petals");
    if (n < 2 || c.empty()) return false;
    int m = c.length();
    for (int i = 0; i + 1 < m; ++i) {
        int k = c.at(i) + 1; // 1-based petal index
        if (k != 1 && !(k >= 3 && k <= n)) return false;
    }
    return c.at(m - 1) + 1 == 2;
}

// ---------------------------------------------------------------------------
// RationalInfinitePath

RationalInfinitePath::RationalInfinitePath(Path prefix, Path period)
    : prefix_(std::move(prefix)), period_(std::move(period)) {
    if (!period_.is_closed()) throw domain_error("period must be a closed nonempty path");
    if (prefix_.range() != period_.source())
        throw domain_error("prefix does not reach the period: r(prefix) != s(period)");
    period_ = primitive_root(period_);
    // minimal preperiod: while the prefix ends with the period's last edge,
    // rotate that edge into the period
    while (!prefix_.empty() && prefix_.at(prefix_.length() - 1) == period_.at(period_.length() - 1)) {
        prefix_ = prefix_.dropped_back();
        period_ = period_.rotated(period_.length() - 1);
    }
}

Path RationalInfinitePath::tau_leq(int n) const {
    if (n < 0) throw domain_error("negative truncation length");
    Path out = prefix_.length() >= n ? prefix_.prefix(n) : prefix_;
    while (out.length() < n) {
        int need = n - out.length();
        out = concat(out, need >= period_.length() ? period_ : period_.prefix(need));
    }
    return out;
}

RationalInfinitePath RationalInfinitePath::tau_gt(int n) const {
    if (n < 0) throw domain_error("negative truncation length");
    if (n <= prefix_.length()) return RationalInfinitePath(prefix_.suffix_from(n), period_);
    int k = (n - prefix_.length()) % period_.length();
    Path rot = period_.rotated(k);
    return RationalInfinitePath(Path::vertex(rot.graph(), rot.source()), rot);
}

RationalInfinitePath RationalInfinitePath::prepended(int e) const {
    Path ep = Path::edge(prefix_.graph(), e);
    return RationalInfinitePath(concat(ep, prefix_), period_);
}

bool operator==(const RationalInfinitePath& a, const RationalInfinitePath& b) {
    return a.prefix_ == b.prefix_ && a.period_ == b.period_;
}

bool rational_tail_equivalent(const RationalInfinitePath& a, const RationalInfinitePath& b) {
    for (const Path& r : rotations(a.period()))
        if (r == b.period()) return true;
    return false;
}

std::pair<Path, RationalInfinitePath> tau_truncate(const RationalInfinitePath& p, int n) {
    return {p.tau_leq(n), p.tau_gt(n)};
}

bool rip_less(const RationalInfinitePath& a, const RationalInfinitePath& b) {
    if (a.prefix() != b.prefix()) return path_less(a.prefix(), b.prefix());
    return path_less(a.period(), b.period());
}

} // namespace leavitt
