#include "leavitt/morphism.hpp"

#include "leavitt/io.hpp"

namespace leavitt {

AlgMatrix::AlgMatrix(SessionPtr s, int n) : session_(std::move(s)), n_(n) {
    if (n < 1) throw domain_error("matrix size must be positive");
    data_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
                 AlgebraElement::zero(session_));
}

AlgMatrix AlgMatrix::identity(SessionPtr s, int n) {
    AlgMatrix m(s, n);
    AlgebraElement one = AlgebraElement::identity(s);
    for (int i = 0; i < n; ++i) m.set(i, i, one);
    return m;
}

const AlgebraElement& AlgMatrix::at(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_) throw domain_error("matrix index out of range");
    return data_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)];
}

void AlgMatrix::set(int i, int j, AlgebraElement x) {
    if (i < 0 || i >= n_ || j < 0 || j >= n_) throw domain_error("matrix index out of range");
    check_same_session(session_, x.session());
    data_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)] =
        std::move(x);
}

AlgMatrix operator+(const AlgMatrix& a, const AlgMatrix& b) {
    if (a.n_ != b.n_) throw domain_error("matrix size mismatch");
    AlgMatrix out(a.session_, a.n_);
    for (int i = 0; i < a.n_; ++i)
        for (int j = 0; j < a.n_; ++j) out.set(i, j, a.at(i, j) + b.at(i, j));
    return out;
}

AlgMatrix operator*(const AlgMatrix& a, const AlgMatrix& b) {
    if (a.n_ != b.n_) throw domain_error("matrix size mismatch");
    AlgMatrix out(a.session_, a.n_);
    for (int i = 0; i < a.n_; ++i) {
        for (int j = 0; j < a.n_; ++j) {
            AlgebraElement acc = AlgebraElement::zero(a.session_);
            for (int k = 0; k < a.n_; ++k) acc += a.at(i, k) * b.at(k, j);
            out.set(i, j, std::move(acc));
        }
    }
    return out;
}

bool operator==(const AlgMatrix& a, const AlgMatrix& b) {
    if (a.n_ != b.n_) return false;
    for (int i = 0; i < a.n_; ++i)
        for (int j = 0; j < a.n_; ++j)
            if (a.at(i, j) != b.at(i, j)) return false;
    return true;
}

// ---------------------------------------------------------------------------

GenMap::GenMap(SessionPtr s, std::vector<AlgebraElement> vertex_images,
               std::vector<AlgebraElement> edge_images, std::vector<AlgebraElement> ghost_images)
    : session_(std::move(s)), vimg_(std::move(vertex_images)), eimg_(std::move(edge_images)),
      gimg_(std::move(ghost_images)) {
    const Graph& g = *session_->graph();
    if (static_cast<int>(vimg_.size()) != g.vertex_count() ||
        static_cast<int>(eimg_.size()) != g.edge_count() ||
        static_cast<int>(gimg_.size()) != g.edge_count())
        throw domain_error("generator map needs one image per vertex, edge and ghost edge");
    for (const auto& x : vimg_) check_same_session(session_, x.session());
    for (const auto& x : eimg_) check_same_session(session_, x.session());
    for (const auto& x : gimg_) check_same_session(session_, x.session());
}

GenMap GenMap::identity(SessionPtr s) {
    const Graph& g = *s->graph();
    std::vector<AlgebraElement> vs, es, gs;
    for (int v = 0; v < g.vertex_count(); ++v) vs.push_back(AlgebraElement::vertex(s, v));
    for (int e = 0; e < g.edge_count(); ++e) {
        es.push_back(AlgebraElement::edge(s, e));
        gs.push_back(AlgebraElement::ghost(s, e));
    }
    GenMap m(s, std::move(vs), std::move(es), std::move(gs));
    m.verified_ = true;
    return m;
}

GenMap GenMap::mark_verified() const {
    GenMap m = *this;
    m.verified_ = true;
    return m;
}

bool operator==(const GenMap& a, const GenMap& b) {
    check_same_session(a.session_, b.session_);
    return a.vimg_ == b.vimg_ && a.eimg_ == b.eimg_ && a.gimg_ == b.gimg_;
}

RelationReport check_relations(const GenMap& m) {
    const Graph& g = *m.session()->graph();
    RelationReport rep;
    auto complain = [&](const std::string& where, const AlgebraElement& lhs, const AlgebraElement& rhs) {
        rep.violations.push_back(where + ": got " + format_element(lhs) + ", want " + format_element(rhs));
    };
    AlgebraElement zero = AlgebraElement::zero(m.session());
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int w = 0; w < g.vertex_count(); ++w) {
            AlgebraElement lhs = m.vertex_image(u) * m.vertex_image(w);
            const AlgebraElement& rhs = u == w ? m.vertex_image(u) : zero;
            if (lhs != rhs)
                complain("relation (1) at (" + g.vertex_name(u) + ", " + g.vertex_name(w) + ")", lhs, rhs);
        }
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        AlgebraElement se = m.vertex_image(ed.src) * m.edge_image(e);
        AlgebraElement er = m.edge_image(e) * m.vertex_image(ed.dst);
        if (se != m.edge_image(e))
            complain("relation (2) at s(" + ed.name + ")" + ed.name, se, m.edge_image(e));
        if (er != m.edge_image(e))
            complain("relation (2) at " + ed.name + "r(" + ed.name + ")", er, m.edge_image(e));
        AlgebraElement gs = m.ghost_image(e) * m.vertex_image(ed.src);
        AlgebraElement rg = m.vertex_image(ed.dst) * m.ghost_image(e);
        if (gs != m.ghost_image(e))
            complain("relation (2) at " + ed.name + "'s(" + ed.name + ")", gs, m.ghost_image(e));
        if (rg != m.ghost_image(e))
            complain("relation (2) at r(" + ed.name + ")" + ed.name + "'", rg, m.ghost_image(e));
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        for (int f = 0; f < g.edge_count(); ++f) {
            AlgebraElement lhs = m.ghost_image(e) * m.edge_image(f);
            const AlgebraElement& rhs = e == f ? m.vertex_image(g.edge(e).dst) : zero;
            if (lhs != rhs)
                complain("relation (3) at (" + g.edge(e).name + ", " + g.edge(f).name + ")", lhs, rhs);
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!g.is_regular(v)) continue;
        AlgebraElement sum = AlgebraElement::zero(m.session());
        for (int e : g.out_edges(v)) sum += m.edge_image(e) * m.ghost_image(e);
        if (sum != m.vertex_image(v))
            complain("relation (4) at " + g.vertex_name(v), sum, m.vertex_image(v));
    }
    return rep;
}

GenMap verify(const GenMap& m) {
    RelationReport rep = check_relations(m);
    if (!rep.ok()) {
        std::string msg = "generator images violate the defining relations:";
        for (const auto& v : rep.violations) msg += "\n  " + v;
        throw relation_error(msg);
    }
    return m.mark_verified();
}

bool validate_pq(const AlgMatrix& P, const AlgMatrix& Q, int w) {
    if (P.size() != Q.size()) throw domain_error("matrix size mismatch");
    const SessionPtr& s = P.session();
    check_same_session(s, Q.session());
    AlgMatrix W(s, P.size());
    AlgebraElement wel = AlgebraElement::vertex(s, w);
    for (int i = 0; i < P.size(); ++i) W.set(i, i, wel);
    if (W * P != P * W || W * Q != Q * W) return false;
    return W * P * Q == W && W * Q * P == W;
}

GenMap build_phi_pq(const std::vector<int>& edges, const AlgMatrix& P, const AlgMatrix& Q) {
    const SessionPtr& s = P.session();
    const Graph& g = *s->graph();
    int n = static_cast<int>(edges.size());
    if (n == 0) throw domain_error("need at least one edge");
    if (P.size() != n || Q.size() != n) throw domain_error("matrix size must equal the edge count");
    for (int i = 0; i < n; ++i) {
        if (edges[static_cast<std::size_t>(i)] < 0 || edges[static_cast<std::size_t>(i)] >= g.edge_count())
            throw domain_error("edge id out of range");
        for (int j = i + 1; j < n; ++j)
            if (edges[static_cast<std::size_t>(i)] == edges[static_cast<std::size_t>(j)])
                throw domain_error("edges must be distinct");
    }
    int v = g.edge(edges[0]).src, w = g.edge(edges[0]).dst;
    for (int e : edges)
        if (g.edge(e).src != v || g.edge(e).dst != w)
            throw domain_error("edges must share source and range");
    if (!validate_pq(P, Q, w))
        throw domain_error("matrices fail wP=Pw, wQ=Qw, wPQ=wQP=wI");

    GenMap id = GenMap::identity(s);
    std::vector<AlgebraElement> vs, es, gs;
    for (int u = 0; u < g.vertex_count(); ++u) vs.push_back(id.vertex_image(u));
    for (int e = 0; e < g.edge_count(); ++e) {
        es.push_back(id.edge_image(e));
        gs.push_back(id.ghost_image(e));
    }
    for (int i = 0; i < n; ++i) {
        AlgebraElement ei = AlgebraElement::zero(s);
        AlgebraElement gi = AlgebraElement::zero(s);
        for (int k = 0; k < n; ++k) {
            ei += AlgebraElement::edge(s, edges[static_cast<std::size_t>(k)]) * P.at(k, i);
            gi += Q.at(i, k) * AlgebraElement::ghost(s, edges[static_cast<std::size_t>(k)]);
        }
        es[static_cast<std::size_t>(edges[static_cast<std::size_t>(i)])] = std::move(ei);
        gs[static_cast<std::size_t>(edges[static_cast<std::size_t>(i)])] = std::move(gi);
    }
    return verify(GenMap(s, std::move(vs), std::move(es), std::move(gs)));
}

AlgebraElement apply_hom(const GenMap& m, const AlgebraElement& x) {
    if (!m.verified())
        throw domain_error("apply_hom needs a verified generator map (run check_relations)");
    check_same_session(m.session(), x.session());
    AlgebraElement acc = AlgebraElement::zero(m.session());
    for (const auto& [mon, k] : x.terms()) {
        AlgebraElement t = m.vertex_image(mon.range_vertex());
        const auto& q = mon.ghost().edges();
        for (auto it = q.rbegin(); it != q.rend(); ++it) t = t * m.ghost_image(*it);
        const auto& p = mon.real().edges();
        for (auto it = p.rbegin(); it != p.rend(); ++it) t = m.edge_image(*it) * t;
        acc += t.scaled(k);
    }
    return acc;
}

GenMap compose_homs(const GenMap& f, const GenMap& g) {
    check_same_session(f.session(), g.session());
    if (!f.verified() || !g.verified()) throw domain_error("compose_homs needs verified maps");
    const Graph& gr = *f.session()->graph();
    std::vector<AlgebraElement> vs, es, gs;
    for (int v = 0; v < gr.vertex_count(); ++v) vs.push_back(apply_hom(f, g.vertex_image(v)));
    for (int e = 0; e < gr.edge_count(); ++e) {
        es.push_back(apply_hom(f, g.edge_image(e)));
        gs.push_back(apply_hom(f, g.ghost_image(e)));
    }
    GenMap h(f.session(), std::move(vs), std::move(es), std::move(gs));
    return check_relations(h).ok() ? h.mark_verified() : h;
}

bool iso_condition(const GenMap& m, const AlgMatrix& P, const AlgMatrix& Q, int w) {
    AlgebraElement wel = AlgebraElement::vertex(m.session(), w);
    auto fixes = [&](const AlgMatrix& M) {
        for (int i = 0; i < M.size(); ++i)
            for (int j = 0; j < M.size(); ++j)
                if (wel * apply_hom(m, M.at(i, j)) != wel * M.at(i, j)) return false;
        return true;
    };
    return fixes(P) || fixes(Q);
}

std::pair<GenMap, GenMap> build_anick(const AlgebraElement& p, int e1, int e2) {
    const SessionPtr& s = p.session();
    const Graph& g = *s->graph();
    if (e1 < 0 || e1 >= g.edge_count() || e2 < 0 || e2 >= g.edge_count())
        throw domain_error("edge id out of range");
    if (e1 == e2) throw domain_error("Anick construction needs two distinct edges");
    if (g.edge(e1).src != g.edge(e2).src || g.edge(e1).dst != g.edge(e2).dst)
        throw domain_error("e1 and e2 must share source and range");
    int w = g.edge(e1).dst;
    AlgebraElement wel = AlgebraElement::vertex(s, w);
    if (wel * p != p * wel) throw domain_error("twist element must commute with the range vertex");
    if (!in_fixed_subalgebra(p, e1, e2))
        throw domain_error("twist element is not in the fixed subalgebra A(e1, e2)");

    AlgebraElement one = AlgebraElement::identity(s);
    AlgMatrix P(s, 2), Q(s, 2);
    P.set(0, 0, one); P.set(0, 1, p); P.set(1, 1, one);
    Q.set(0, 0, one); Q.set(0, 1, -p); Q.set(1, 1, one);
    std::vector<int> edges{e1, e2};
    return {build_phi_pq(edges, P, Q), build_phi_pq(edges, Q, P)};
}

} // namespace leavitt
