#include "leavitt/repmod.hpp"

#include <algorithm>

namespace leavitt {

SfcSpec::SfcSpec(SessionPtr s, Path cycle, IrrPoly f)
    : session_(std::move(s)), cycle_(std::move(cycle)),
      qf_(QuotientField::make(std::move(f))),
      x_(Residue::x(qf_)), xinv_(Residue::x(qf_).inverse()) {
    if (!(*cycle_.graph() == *session_->graph()))
        throw domain_error("cycle does not live in the session graph");
    if (!is_simple_closed(cycle_))
        throw domain_error("S^f_c needs a simple closed path");
    if (qf_->field() != session_->field())
        throw domain_error("modulus field differs from session field");
}

SfcElement SfcElement::zero(SfcSpecPtr spec) { return SfcElement(std::move(spec), {}); }

SfcElement SfcElement::generator(SfcSpecPtr spec) {
    Terms t;
    Path v = Path::vertex(spec->session()->graph(), spec->base_vertex());
    t.emplace(v, Residue::one(spec->qf()));
    return SfcElement(std::move(spec), std::move(t));
}

namespace {

// strip trailing copies of c, multiplying by x per copy
void canonical_index(const SfcSpec& spec, Path& alpha, Residue& u) {
    const Path& c = spec.cycle();
    while (alpha.ends_with(c)) {
        alpha = alpha.prefix(alpha.length() - c.length());
        u = u * spec.x_residue();
    }
}

void add_term(SfcElement::Terms& terms, const Path& alpha, const Residue& u) {
    if (u.is_zero()) return;
    auto [it, inserted] = terms.emplace(alpha, u);
    if (!inserted) {
        it->second += u;
        if (it->second.is_zero()) terms.erase(it);
    }
}

} // namespace

SfcElement SfcElement::unit(SfcSpecPtr spec, const Path& alpha, const Residue& u) {
    if (alpha.range() != spec->base_vertex())
        throw domain_error("index path must end at the base of the cycle");
    Path a = alpha;
    Residue r = u;
    canonical_index(*spec, a, r);
    Terms t;
    add_term(t, a, r);
    return SfcElement(std::move(spec), std::move(t));
}

SfcElement SfcElement::operator-() const {
    Terms t;
    for (const auto& [a, u] : terms_) t.emplace(a, -u);
    return SfcElement(spec_, std::move(t));
}

SfcElement operator+(const SfcElement& a, const SfcElement& b) {
    if (!(*a.spec_ == *b.spec_)) throw domain_error("module elements from different modules");
    SfcElement::Terms t = a.terms_;
    for (const auto& [alpha, u] : b.terms_) add_term(t, alpha, u);
    return SfcElement(a.spec_, std::move(t));
}

SfcElement operator-(const SfcElement& a, const SfcElement& b) { return a + (-b); }

bool operator==(const SfcElement& a, const SfcElement& b) {
    if (!(*a.spec_ == *b.spec_)) throw domain_error("module elements from different modules");
    return a.terms_ == b.terms_;
}

SfcElement sfc_canonicalize(const SfcSpecPtr& spec, const std::map<Path, Residue, PathLess>& raw) {
    SfcElement::Terms t;
    for (const auto& [alpha, u] : raw) {
        if (alpha.range() != spec->base_vertex())
            throw domain_error("index path must end at the base of the cycle");
        Path a = alpha;
        Residue r = u;
        canonical_index(*spec, a, r);
        add_term(t, a, r);
    }
    return SfcElement(spec, std::move(t));
}

namespace {

using Terms = SfcElement::Terms;

Terms vertex_step(const SfcSpec& spec, const Terms& in, int v) {
    Terms out;
    for (const auto& [a, u] : in)
        if (a.source() == v) out.emplace(a, u);
    (void)spec;
    return out;
}

Terms edge_step(const SfcSpec& spec, const Terms& in, int e) {
    const Graph& g = *spec.session()->graph();
    Terms out;
    for (const auto& [a, u] : in) {
        if (g.edge(e).dst != a.source()) continue;
        Path b = concat(Path::edge(spec.session()->graph(), e), a);
        Residue r = u;
        canonical_index(spec, b, r);
        add_term(out, b, r);
    }
    return out;
}

Terms ghost_step(const SfcSpec& spec, const Terms& in, int e) {
    const Path& c = spec.cycle();
    Terms out;
    for (const auto& [a, u] : in) {
        if (a.empty()) {
            // e* z = (e* c) f_1(c) z: nonzero only when e opens the cycle;
            // one unrolled period multiplies the residue by x^{-1}
            if (c.at(0) != e) continue;
            add_term(out, c.suffix_from(1), u * spec.x_inverse());
        } else {
            if (a.at(0) != e) continue;
            add_term(out, a.suffix_from(1), u);
        }
    }
    return out;
}

} // namespace

SfcElement sfc_act(const AlgebraElement& r, const SfcElement& m) {
    const SfcSpecPtr& spec = m.spec();
    check_same_session(r.session(), spec->session());
    Terms acc;
    for (const auto& [mon, k] : r.terms()) {
        Terms cur = m.terms();
        for (int e : mon.ghost().edges()) {
            cur = ghost_step(*spec, cur, e);
            if (cur.empty()) break;
        }
        if (mon.is_vertex()) cur = vertex_step(*spec, cur, mon.source_vertex());
        const auto& p = mon.real().edges();
        for (auto it = p.rbegin(); it != p.rend() && !cur.empty(); ++it)
            cur = edge_step(*spec, cur, *it);
        for (const auto& [a, u] : cur) add_term(acc, a, u.scaled(k));
    }
    return SfcElement(spec, std::move(acc));
}

SfcElement sfc_act_twisted(const AlgebraElement& p, const AlgebraElement& r, const SfcElement& m) {
    const SfcSpecPtr& spec = m.spec();
    const Graph& g = *spec->session()->graph();
    if (!g.is_rose() || g.edge_count() < 2)
        throw domain_error("twisted modules need a rose session with n >= 2 petals");
    if (!in_A_subalgebra(p, g.edge_count()))
        throw domain_error("twist element is not in A_{R_n}(e1, e2)");
    if (!in_Cs(spec->cycle(), g.edge_count()))
        throw domain_error("twisted modules need c in C_s(R_n)");
    GenMap sigma = build_anick(p, 0, 1).first;
    return sfc_act(apply_hom(sigma, r), m);
}

bool sfc_annihilates(const AlgebraElement& r, const SfcSpecPtr& spec) {
    return sfc_act(r, SfcElement::generator(spec)).is_zero();
}

bool sfc_equiv(const AlgebraElement& p, const AlgebraElement& q, const SfcSpecPtr& spec) {
    int n = spec->session()->graph()->edge_count();
    if (!in_A_subalgebra(p, n) || !in_A_subalgebra(q, n))
        throw domain_error("equivalence operands must lie in A_{R_n}(e1, e2)");
    return sfc_annihilates(p - q, spec);
}

SfcElement sfc_endo(const Residue& u, const SfcElement& m) {
    Terms t;
    for (const auto& [a, r] : m.terms()) add_term(t, a, r * u);
    return SfcElement(m.spec(), std::move(t));
}

AlgebraElement sfc_witness(const SfcElement& y) {
    if (y.is_zero()) throw domain_error("witness of the zero element");
    const SfcSpecPtr& spec = y.spec();
    const SessionPtr& s = spec->session();
    const Path& c = spec->cycle();
    int t_period = c.length();

    // target index: the smallest in index order
    const Path& beta1 = y.terms().begin()->first;

    std::vector<RationalInfinitePath> tails;
    for (const auto& [a, u] : y.terms()) tails.emplace_back(a, c);

    // distinct indices have distinct tails; truncations separate within
    // max length + one period
    int max_len = 0;
    for (const auto& [a, u] : y.terms()) max_len = std::max(max_len, a.length());
    int l_max = (max_len + 2 * t_period) / t_period + 2;
    int trunc_len = -1;
    for (int l = 0; l <= l_max; ++l) {
        int n = beta1.length() + l * t_period;
        bool distinct = true;
        for (std::size_t i = 0; i < tails.size() && distinct; ++i)
            for (std::size_t j = i + 1; j < tails.size() && distinct; ++j)
                if (tails[i].tau_leq(n) == tails[j].tau_leq(n)) distinct = false;
        if (distinct) {
            trunc_len = n;
            break;
        }
    }
    if (trunc_len < 0) throw domain_error("internal: could not separate index tails");

    Path t1 = RationalInfinitePath(beta1, c).tau_leq(trunc_len);
    AlgebraElement ghost = AlgebraElement::ghost_path(s, t1);
    SfcElement m1 = sfc_act(ghost, y);

    Path vpath = Path::vertex(s->graph(), spec->base_vertex());
    if (m1.terms().size() != 1 || m1.terms().begin()->first != vpath)
        throw domain_error("internal: truncation did not isolate the generator line");
    Residue g = m1.terms().begin()->second.inverse();
    AlgebraElement r = eval_poly_at_cycle(s, g.lift(), c) * ghost;

    if (sfc_act(r, y) != SfcElement::generator(spec))
        throw domain_error("internal: witness verification failed");
    return r;
}

// ---------------------------------------------------------------------------
// Chen modules

ChenSpec::ChenSpec(SessionPtr s, const Path& cycle)
    : session_(std::move(s)),
      tail_(Path::vertex(cycle.graph(), cycle.source()), cycle) {
    if (!(*cycle.graph() == *session_->graph()))
        throw domain_error("cycle does not live in the session graph");
}

ChenElement ChenElement::zero(ChenSpecPtr spec) { return ChenElement(std::move(spec), {}); }

ChenElement ChenElement::basis(ChenSpecPtr spec, const RationalInfinitePath& q) {
    if (!rational_tail_equivalent(q, spec->tail()))
        throw domain_error("infinite path is not tail-equivalent to the module class");
    Terms t;
    t.emplace(q, Scalar::one(spec->session()->field()));
    return ChenElement(std::move(spec), std::move(t));
}

namespace {

void add_chen(ChenElement::Terms& t, const RationalInfinitePath& k, const Scalar& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = t.emplace(k, v);
    if (!inserted) {
        it->second += v;
        if (it->second.is_zero()) t.erase(it);
    }
}

} // namespace

ChenElement ChenElement::scaled(const Scalar& k) const {
    if (k.is_zero()) return zero(spec_);
    Terms t;
    for (const auto& [key, v] : terms_) t.emplace(key, v * k);
    return ChenElement(spec_, std::move(t));
}

ChenElement operator+(const ChenElement& a, const ChenElement& b) {
    if (!(*a.spec() == *b.spec())) throw domain_error("Chen elements from different modules");
    ChenElement::Terms t = a.terms();
    for (const auto& [k, v] : b.terms()) add_chen(t, k, v);
    return ChenElement(a.spec(), std::move(t));
}

bool operator==(const ChenElement& a, const ChenElement& b) {
    if (!(*a.spec() == *b.spec())) throw domain_error("Chen elements from different modules");
    return a.terms_ == b.terms_;
}

ChenElement chen_act(const AlgebraElement& r, const ChenElement& m) {
    const ChenSpecPtr& spec = m.spec();
    check_same_session(r.session(), spec->session());
    const Graph& g = *spec->session()->graph();
    ChenElement::Terms acc;
    for (const auto& [mon, k] : r.terms()) {
        ChenElement::Terms cur = m.terms();
        for (int e : mon.ghost().edges()) {
            ChenElement::Terms next;
            for (const auto& [q, v] : cur)
                if (q.first_edge() == e) add_chen(next, q.tau_gt(1), v);
            cur = std::move(next);
            if (cur.empty()) break;
        }
        if (mon.is_vertex()) {
            ChenElement::Terms next;
            for (const auto& [q, v] : cur)
                if (q.source() == mon.source_vertex()) add_chen(next, q, v);
            cur = std::move(next);
        }
        const auto& p = mon.real().edges();
        for (auto it = p.rbegin(); it != p.rend() && !cur.empty(); ++it) {
            ChenElement::Terms next;
            for (const auto& [q, v] : cur)
                if (g.edge(*it).dst == q.source()) add_chen(next, q.prepended(*it), v);
            cur = std::move(next);
        }
        for (const auto& [q, v] : cur) add_chen(acc, q, v * k);
    }
    return ChenElement(spec, std::move(acc));
}

std::vector<Path> sfc_basis_indices(const SfcSpecPtr& spec, int max_len) {
    const GraphPtr& g = spec->session()->graph();
    const Path& c = spec->cycle();
    std::vector<Path> out{Path::vertex(g, spec->base_vertex())};
    std::vector<Path> frontier = out;
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Path> next;
        for (const Path& a : frontier)
            for (int e : g->in_edges(a.source()))
                next.push_back(concat(Path::edge(g, e), a));
        for (const Path& a : next)
            if (!a.ends_with(c)) out.push_back(a);
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(), PathLess{});
    return out;
}

bool sfc_to_chen_compat_check(const SfcSpecPtr& spec, int max_len) {
    const Poly& f = spec->f().poly();
    Field field = spec->session()->field();
    Poly one_minus_x = Poly::from_ints(field, {1, -1});
    if (!(f == one_minus_x)) throw domain_error("Chen compatibility needs f = 1 - x");

    const SessionPtr& s = spec->session();
    const GraphPtr& g = s->graph();
    ChenSpecPtr ch = make_chen(s, spec->cycle());

    auto to_chen = [&](const SfcElement& m) {
        ChenElement acc = ChenElement::zero(ch);
        for (const auto& [a, u] : m.terms()) {
            RationalInfinitePath key(a, spec->cycle());
            // deg f = 1, so residues are constants
            acc = acc + ChenElement::basis(ch, key).scaled(u.lift().coeff(0));
        }
        return acc;
    };

    std::vector<AlgebraElement> generators;
    for (int v = 0; v < g->vertex_count(); ++v) generators.push_back(AlgebraElement::vertex(s, v));
    for (int e = 0; e < g->edge_count(); ++e) {
        generators.push_back(AlgebraElement::edge(s, e));
        generators.push_back(AlgebraElement::ghost(s, e));
    }

    for (const Path& alpha : sfc_basis_indices(spec, max_len)) {
        SfcElement unit = SfcElement::unit(spec, alpha, Residue::one(spec->qf()));
        ChenElement chen_unit = ChenElement::basis(ch, RationalInfinitePath(alpha, spec->cycle()));
        for (const AlgebraElement& gen : generators) {
            if (!(to_chen(sfc_act(gen, unit)) == chen_act(gen, chen_unit))) return false;
        }
    }
    return true;
}

} // namespace leavitt
