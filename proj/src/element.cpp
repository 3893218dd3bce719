#include "leavitt/element.hpp"

#include <deque>

namespace leavitt {

Monomial::Monomial(Path real, Path ghost) : real_(std::move(real)), ghost_(std::move(ghost)) {
    if (!(*real_.graph() == *ghost_.graph()))
        throw domain_error("monomial parts from different graphs");
    if (real_.range() != ghost_.range())
        throw domain_error("monomial needs r(p) = r(q)");
}

Monomial Monomial::vertex(GraphPtr g, int v) {
    Path p = Path::vertex(std::move(g), v);
    return Monomial(p, p);
}

bool monomial_less(const Monomial& a, const Monomial& b) {
    int la = a.real().length() + a.ghost().length();
    int lb = b.real().length() + b.ghost().length();
    if (la != lb) return la < lb;
    if (a.real() != b.real()) return path_less(a.real(), b.real());
    if (a.ghost() != b.ghost()) return path_less(a.ghost(), b.ghost());
    return false;
}

// ---------------------------------------------------------------------------
// canonical reduction

namespace {

// seam redex: p and q both end with the special edge of that edge's source
bool has_seam_redex(const Graph& g, std::span<const int> table, const Monomial& m) {
    if (m.real().empty() || m.ghost().empty()) return false;
    int e = m.real().at(m.real().length() - 1);
    if (e != m.ghost().at(m.ghost().length() - 1)) return false;
    return table[static_cast<std::size_t>(g.edge(e).src)] == e;
}

void accumulate(TermMap& acc, const Monomial& m, const Scalar& k) {
    auto [it, inserted] = acc.emplace(m, k);
    if (!inserted) {
        it->second += k;
        if (it->second.is_zero()) acc.erase(it);
    }
}

} // namespace

AlgebraElement reduce_terms(const SessionPtr& s, const std::vector<RawTerm>& raw,
                            std::span<const int> table, ReduceStrategy strategy) {
    const Graph& g = *s->graph();
    TermMap acc;
    std::deque<RawTerm> work;
    if (strategy == ReduceStrategy::DepthFirst) {
        // pops from the back; reversed so the leftmost raw term is handled first
        work.assign(raw.rbegin(), raw.rend());
    } else {
        work.assign(raw.begin(), raw.end());
    }
    while (!work.empty()) {
        RawTerm term = strategy == ReduceStrategy::DepthFirst ? work.back() : work.front();
        if (strategy == ReduceStrategy::DepthFirst)
            work.pop_back();
        else
            work.pop_front();
        auto& [m, k] = term;
        if (k.is_zero()) continue;
        if (!has_seam_redex(g, table, m)) {
            accumulate(acc, m, k);
            continue;
        }
        int gamma = m.real().at(m.real().length() - 1);
        int v = g.edge(gamma).src;
        Path p1 = m.real().dropped_back();
        Path q1 = m.ghost().dropped_back();
        std::vector<RawTerm> children;
        children.emplace_back(Monomial(p1, q1), k);
        for (int e : g.out_edges(v)) {
            if (e == gamma) continue;
            children.emplace_back(Monomial(p1.appended(e), q1.appended(e)), -k);
        }
        if (strategy == ReduceStrategy::DepthFirst) {
            // push the shorter contractum last so it is reduced first
            for (auto it = children.rbegin(); it != children.rend(); ++it) work.push_back(*it);
        } else {
            for (auto& c : children) work.push_back(std::move(c));
        }
    }
    return AlgebraElement(s, std::move(acc));
}

AlgebraElement normal_form(const SessionPtr& s, const std::vector<RawTerm>& raw) {
    return reduce_terms(s, raw, s->special_edges(), ReduceStrategy::DepthFirst);
}

// ---------------------------------------------------------------------------
// constructors

AlgebraElement AlgebraElement::zero(SessionPtr s) { return AlgebraElement(std::move(s), {}); }

AlgebraElement AlgebraElement::vertex(SessionPtr s, int v) {
    Scalar one = Scalar::one(s->field());
    Monomial m = Monomial::vertex(s->graph(), v);
    return monomial(std::move(s), m, one);
}

AlgebraElement AlgebraElement::edge(SessionPtr s, int e) {
    Path p = Path::edge(s->graph(), e);
    return path(std::move(s), p);
}

AlgebraElement AlgebraElement::ghost(SessionPtr s, int e) {
    Path q = Path::edge(s->graph(), e);
    return ghost_path(std::move(s), q);
}

AlgebraElement AlgebraElement::path(SessionPtr s, const Path& p) {
    Scalar one = Scalar::one(s->field());
    Monomial m(p, Path::vertex(s->graph(), p.range()));
    return monomial(std::move(s), m, one);
}

AlgebraElement AlgebraElement::ghost_path(SessionPtr s, const Path& q) {
    Scalar one = Scalar::one(s->field());
    Monomial m(Path::vertex(s->graph(), q.range()), q);
    return monomial(std::move(s), m, one);
}

AlgebraElement AlgebraElement::monomial(SessionPtr s, const Monomial& m, const Scalar& k) {
    if (k.field() != s->field()) throw domain_error("scalar field differs from session field");
    return normal_form(s, {{m, k}});
}

AlgebraElement AlgebraElement::identity(SessionPtr s) {
    std::vector<RawTerm> raw;
    Scalar one = Scalar::one(s->field());
    for (int v = 0; v < s->graph()->vertex_count(); ++v)
        raw.emplace_back(Monomial::vertex(s->graph(), v), one);
    return normal_form(s, raw);
}

Scalar AlgebraElement::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero(session_->field()) : it->second;
}

// ---------------------------------------------------------------------------
// linear structure

AlgebraElement AlgebraElement::operator-() const {
    TermMap t;
    for (const auto& [m, k] : terms_) t.emplace(m, -k);
    return AlgebraElement(session_, std::move(t));
}

AlgebraElement AlgebraElement::scaled(const Scalar& k) const {
    if (k.is_zero()) return zero(session_);
    TermMap t;
    for (const auto& [m, c] : terms_) t.emplace(m, c * k);
    return AlgebraElement(session_, std::move(t));
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    check_same_session(a.session_, b.session_);
    TermMap t = a.terms_;
    for (const auto& [m, k] : b.terms_) accumulate(t, m, k);
    return AlgebraElement(a.session_, std::move(t));
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) { return a + (-b); }

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    check_same_session(a.session_, b.session_);
    return a.terms_ == b.terms_;
}

// ---------------------------------------------------------------------------
// multiplication via CK1 cancellation at the q|r junction

std::vector<RawTerm> product_raw_terms(const AlgebraElement& a, const AlgebraElement& b) {
    check_same_session(a.session(), b.session());
    std::vector<RawTerm> raw;
    for (const auto& [ma, ka] : a.terms()) {
        for (const auto& [mb, kb] : b.terms()) {
            const Path& q = ma.ghost();
            const Path& r = mb.real();
            if (q.length() <= r.length()) {
                if (!r.starts_with(q)) continue; // e* f = 0 for e != f
                Path mid = r.suffix_from(q.length());
                raw.emplace_back(Monomial(concat(ma.real(), mid), mb.ghost()), ka * kb);
            } else {
                if (!q.starts_with(r)) continue;
                Path rest = q.suffix_from(r.length());
                raw.emplace_back(Monomial(ma.real(), concat(mb.ghost(), rest)), ka * kb);
            }
        }
    }
    return raw;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
    return normal_form(a.session(), product_raw_terms(a, b));
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) { return multiply(a, b); }

AlgebraElement involution(const AlgebraElement& x) {
    std::vector<RawTerm> raw;
    for (const auto& [m, k] : x.terms())
        raw.emplace_back(Monomial(m.ghost(), m.real()), k);
    return normal_form(x.session(), raw);
}

std::map<int, AlgebraElement> graded_parts(const AlgebraElement& x) {
    std::map<int, std::vector<RawTerm>> split;
    for (const auto& [m, k] : x.terms()) split[m.degree()].emplace_back(m, k);
    std::map<int, AlgebraElement> out;
    for (auto& [d, raw] : split) out.emplace(d, normal_form(x.session(), raw));
    return out;
}

AlgebraElement eval_poly_at_cycle(const SessionPtr& s, const Poly& f, const Path& c) {
    if (!c.is_closed()) throw domain_error("f(c) needs a closed path");
    if (f.field() != s->field()) throw domain_error("polynomial field differs from session field");
    std::vector<RawTerm> raw;
    for (int i = 0; i <= f.degree(); ++i) {
        Scalar a = f.coeff(i);
        if (a.is_zero()) continue;
        Path ci = c.pow(i);
        raw.emplace_back(Monomial(ci, Path::vertex(s->graph(), ci.range())), a);
    }
    return normal_form(s, raw);
}

AlgebraElement eval_poly_at_element(const Poly& f, const AlgebraElement& x) {
    const SessionPtr& s = x.session();
    if (f.field() != s->field()) throw domain_error("polynomial field differs from session field");
    AlgebraElement acc = AlgebraElement::zero(s);
    AlgebraElement power = AlgebraElement::identity(s);
    for (int i = 0; i <= f.degree(); ++i) {
        acc += power.scaled(f.coeff(i));
        if (i < f.degree()) power = power * x;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// fixed-subalgebra membership

bool in_fixed_subalgebra(const AlgebraElement& x, int e1, int e2) {
    const Graph& g = *x.session()->graph();
    if (e1 < 0 || e1 >= g.edge_count() || e2 < 0 || e2 >= g.edge_count() || e1 == e2)
        throw domain_error("need two distinct edges");
    if (g.edge(e1).src != g.edge(e2).src || g.edge(e1).dst != g.edge(e2).dst)
        throw domain_error("e1 and e2 must share source and range");
    // Reduce against a table whose special edge at s(e1) is e1 itself: the
    // subalgebra's basis monomials carry no e1 in ghost parts, hence are
    // seam-free there, and the letter test below is exact in that basis.
    std::vector<int> table = x.session()->special_edges();
    table[static_cast<std::size_t>(g.edge(e1).src)] = e1;
    std::vector<RawTerm> raw(x.terms().begin(), x.terms().end());
    AlgebraElement y = reduce_terms(x.session(), raw, table, ReduceStrategy::DepthFirst);
    for (const auto& [m, k] : y.terms()) {
        for (int e : m.real().edges())
            if (e == e2) return false;
        for (int e : m.ghost().edges())
            if (e == e1) return false;
    }
    return true;
}

bool in_A_subalgebra(const AlgebraElement& x, int n) {
    const Graph& g = *x.session()->graph();
    if (!g.is_rose() || g.edge_count() != n)
        throw domain_error("A_{R_n} membership needs the rose with " + std::to_string(n) + " petals");
    if (n < 2) throw domain_error("A_{R_n} needs n >= 2");
    return in_fixed_subalgebra(x, 0, 1);
}

} // namespace leavitt
