#include "leavitt/oracle.hpp"

#include <algorithm>

#include "leavitt/io.hpp"

namespace leavitt {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Path random_forward_path(const Graph& g, GraphPtr gp, std::mt19937_64& rng, int from, int len) {
    Path p = Path::vertex(std::move(gp), from);
    for (int i = 0; i < len; ++i) {
        const auto& outs = g.out_edges(p.range());
        if (outs.empty()) break;
        p = p.appended(outs[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(outs.size()) - 1))]);
    }
    return p;
}

Path random_backward_path(const Graph& g, GraphPtr gp, std::mt19937_64& rng, int to, int len) {
    std::vector<int> edges;
    int u = to;
    for (int i = 0; i < len; ++i) {
        const auto& ins = g.in_edges(u);
        if (ins.empty()) break;
        int e = ins[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(ins.size()) - 1))];
        edges.push_back(e);
        u = g.edge(e).src;
    }
    if (edges.empty()) return Path::vertex(std::move(gp), to);
    std::reverse(edges.begin(), edges.end());
    return Path::of_edges(std::move(gp), std::move(edges));
}

} // namespace

Monomial random_monomial(const SessionPtr& s, std::mt19937_64& rng, int max_len) {
    const Graph& g = *s->graph();
    int v = uniform(rng, 0, g.vertex_count() - 1);
    Path real = random_forward_path(g, s->graph(), rng, v, uniform(rng, 0, max_len));
    Path ghost = random_backward_path(g, s->graph(), rng, real.range(), uniform(rng, 0, max_len));
    return Monomial(std::move(real), std::move(ghost));
}

AlgebraElement random_element(const SessionPtr& s, std::mt19937_64& rng, int max_len, int max_terms) {
    std::vector<RawTerm> raw;
    int terms = uniform(rng, 1, max_terms);
    for (int i = 0; i < terms; ++i) {
        Scalar k = Scalar::of_int(s->field(), uniform(rng, 0, 1) ? 1 : -1);
        raw.emplace_back(random_monomial(s, rng, max_len), k);
    }
    return normal_form(s, raw);
}

AlgebraElement random_element(const SampleConfig& cfg) {
    if (cfg.samples == 0) return AlgebraElement::zero(cfg.session);
    std::mt19937_64 rng(cfg.seed);
    return random_element(cfg.session, rng, cfg.max_len);
}

bool cross_check_zero_raw(const SessionPtr& s, const std::vector<RawTerm>& raw) {
    AlgebraElement depth = reduce_terms(s, raw, s->special_edges(), ReduceStrategy::DepthFirst);
    AlgebraElement breadth = reduce_terms(s, raw, s->special_edges(), ReduceStrategy::BreadthFirst);
    if (depth != breadth) return false;
    auto alt_policy = s->policy() == SpecialEdgePolicy::LastDeclared
                          ? SpecialEdgePolicy::FirstDeclared
                          : SpecialEdgePolicy::LastDeclared;
    std::vector<int> alt = Session::special_table(*s->graph(), alt_policy);
    AlgebraElement other = reduce_terms(s, raw, alt, ReduceStrategy::DepthFirst);
    return depth.is_zero() == other.is_zero();
}

bool cross_check_zero(const AlgebraElement& x) {
    std::vector<RawTerm> raw(x.terms().begin(), x.terms().end());
    return cross_check_zero_raw(x.session(), raw);
}

// ---------------------------------------------------------------------------
// suites

namespace {

std::string fail_line(const std::string& suite, std::uint64_t seed, const std::string& what) {
    return "FAIL " + suite + " seed=" + std::to_string(seed) + " case=" + what;
}

} // namespace

SuiteReport check_assoc_suite(const SampleConfig& cfg) {
    SuiteReport rep{"assoc", cfg.samples, {}};
    for (int i = 0; i < cfg.samples; ++i) {
        std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(i);
        std::mt19937_64 rng(seed);
        AlgebraElement a = random_element(cfg.session, rng, cfg.max_len);
        AlgebraElement b = random_element(cfg.session, rng, cfg.max_len);
        AlgebraElement c = random_element(cfg.session, rng, cfg.max_len);
        if ((a * b) * c != a * (b * c))
            rep.failures.push_back(fail_line(rep.suite, seed,
                                             "assoc " + format_element(a) + " | " + format_element(b) +
                                                 " | " + format_element(c)));
        std::vector<RawTerm> raw(a.terms().begin(), a.terms().end());
        if (normal_form(cfg.session, raw) != a)
            rep.failures.push_back(fail_line(rep.suite, seed, "idempotence " + format_element(a)));
        if (involution(involution(a)) != a)
            rep.failures.push_back(fail_line(rep.suite, seed, "involution " + format_element(a)));
        if (involution(a * b) != involution(b) * involution(a))
            rep.failures.push_back(fail_line(rep.suite, seed,
                                             "antihomomorphism " + format_element(a) + " | " +
                                                 format_element(b)));
        auto parts = graded_parts(a);
        AlgebraElement sum = AlgebraElement::zero(cfg.session);
        for (const auto& [d, part] : parts) {
            sum += part;
            for (const auto& [mon, k] : part.terms())
                if (mon.degree() != d)
                    rep.failures.push_back(fail_line(rep.suite, seed, "grading " + format_element(a)));
        }
        if (sum != a)
            rep.failures.push_back(fail_line(rep.suite, seed, "grading sum " + format_element(a)));
    }
    return rep;
}

SuiteReport check_relations_suite(const SampleConfig& cfg) {
    SuiteReport rep{"relations", 0, {}};
    const SessionPtr& s = cfg.session;
    const Graph& g = *s->graph();
    auto fail = [&](const std::string& what) {
        rep.failures.push_back(fail_line(rep.suite, cfg.seed, what));
    };
    AlgebraElement zero = AlgebraElement::zero(s);
    for (int u = 0; u < g.vertex_count(); ++u) {
        if (AlgebraElement::vertex(s, u).is_zero()) fail("vertex " + g.vertex_name(u) + " is zero");
        for (int w = 0; w < g.vertex_count(); ++w) {
            AlgebraElement lhs = AlgebraElement::vertex(s, u) * AlgebraElement::vertex(s, w);
            AlgebraElement rhs = u == w ? AlgebraElement::vertex(s, u) : zero;
            if (lhs != rhs) fail("(1) " + g.vertex_name(u) + " " + g.vertex_name(w));
        }
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        AlgebraElement eel = AlgebraElement::edge(s, e), gel = AlgebraElement::ghost(s, e);
        if (AlgebraElement::vertex(s, ed.src) * eel != eel) fail("(2) s(e)e " + ed.name);
        if (eel * AlgebraElement::vertex(s, ed.dst) != eel) fail("(2) e r(e) " + ed.name);
        if (gel * AlgebraElement::vertex(s, ed.src) != gel) fail("(2) e* s(e) " + ed.name);
        if (AlgebraElement::vertex(s, ed.dst) * gel != gel) fail("(2) r(e) e* " + ed.name);
        for (int f = 0; f < g.edge_count(); ++f) {
            AlgebraElement lhs = gel * AlgebraElement::edge(s, f);
            AlgebraElement rhs = e == f ? AlgebraElement::vertex(s, ed.dst) : zero;
            if (lhs != rhs) fail("(3) " + ed.name + "' " + g.edge(f).name);
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!g.is_regular(v)) continue;
        AlgebraElement sum = zero;
        for (int e : g.out_edges(v))
            sum += AlgebraElement::edge(s, e) * AlgebraElement::ghost(s, e);
        if (sum != AlgebraElement::vertex(s, v)) fail("(4) " + g.vertex_name(v));
    }
    return rep;
}

SuiteReport check_confluence_suite(const SampleConfig& cfg) {
    SuiteReport rep{"confluence", cfg.samples, {}};
    for (int i = 0; i < cfg.samples; ++i) {
        std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(i);
        std::mt19937_64 rng(seed);
        std::vector<RawTerm> raw;
        if (i % 2 == 0) {
            int terms = uniform(rng, 1, 4);
            for (int t = 0; t < terms; ++t) {
                Scalar k = Scalar::of_int(cfg.session->field(), uniform(rng, 0, 1) ? 1 : -1);
                raw.emplace_back(random_monomial(cfg.session, rng, cfg.max_len), k);
            }
        } else {
            // product expansions exercise deeper rewrite chains
            AlgebraElement a = random_element(cfg.session, rng, cfg.max_len / 2 + 1);
            AlgebraElement b = random_element(cfg.session, rng, cfg.max_len / 2 + 1);
            raw = product_raw_terms(a, b);
            if (raw.empty()) raw.emplace_back(random_monomial(cfg.session, rng, cfg.max_len),
                                              Scalar::one(cfg.session->field()));
        }
        if (!cross_check_zero_raw(cfg.session, raw)) {
            rep.failures.push_back(fail_line(rep.suite, seed, "strategy/table disagreement"));
            continue;
        }
        // force a zero: append the negated normal form; every reduction
        // procedure must read zero
        AlgebraElement nf = normal_form(cfg.session, raw);
        std::vector<RawTerm> zeroed = raw;
        for (const auto& [m, k] : nf.terms()) zeroed.emplace_back(m, -k);
        AlgebraElement reduced = normal_form(cfg.session, zeroed);
        std::vector<int> alt = Session::special_table(
            *cfg.session->graph(), cfg.session->policy() == SpecialEdgePolicy::LastDeclared
                                       ? SpecialEdgePolicy::FirstDeclared
                                       : SpecialEdgePolicy::LastDeclared);
        AlgebraElement reduced_alt =
            reduce_terms(cfg.session, zeroed, alt, ReduceStrategy::BreadthFirst);
        if (!reduced.is_zero() || !reduced_alt.is_zero())
            rep.failures.push_back(fail_line(rep.suite, seed, "forced zero not read as zero"));
    }
    return rep;
}

SuiteReport check_hom_suite(const SampleConfig& cfg, const GenMap& m) {
    SuiteReport rep{"hom", cfg.samples, {}};
    RelationReport rel = check_relations(m);
    for (const auto& v : rel.violations)
        rep.failures.push_back(fail_line(rep.suite, cfg.seed, v));
    if (!rel.ok()) return rep;
    GenMap vm = m.verified() ? m : m.mark_verified();
    for (int i = 0; i < cfg.samples; ++i) {
        std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(i);
        std::mt19937_64 rng(seed);
        AlgebraElement x = random_element(cfg.session, rng, cfg.max_len);
        AlgebraElement y = random_element(cfg.session, rng, cfg.max_len);
        if (apply_hom(vm, x * y) != apply_hom(vm, x) * apply_hom(vm, y))
            rep.failures.push_back(fail_line(rep.suite, seed,
                                             "multiplicativity " + format_element(x) + " | " +
                                                 format_element(y)));
        if (apply_hom(vm, x + y) != apply_hom(vm, x) + apply_hom(vm, y))
            rep.failures.push_back(fail_line(rep.suite, seed, "additivity " + format_element(x)));
    }
    return rep;
}

SuiteReport check_module_suite(const SampleConfig& cfg, const SfcSpecPtr& spec) {
    SuiteReport rep{"module", cfg.samples, {}};
    const SessionPtr& s = cfg.session;
    SfcElement z = SfcElement::generator(spec);
    const Path& c = spec->cycle();

    // the defining relation and its unrolled form
    AlgebraElement fc = eval_poly_at_cycle(s, spec->f().poly(), c);
    if (!sfc_act(fc, z).is_zero())
        rep.failures.push_back(fail_line(rep.suite, cfg.seed, "f(c) z != 0"));
    AlgebraElement cf1 = AlgebraElement::path(s, c) * eval_poly_at_cycle(s, spec->f().f1(), c);
    if (sfc_act(cf1, z) != z)
        rep.failures.push_back(fail_line(rep.suite, cfg.seed, "z != c f_1(c) z"));

    int act_len = std::min(cfg.max_len, 3);
    for (int i = 0; i < cfg.samples; ++i) {
        std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(i);
        std::mt19937_64 rng(seed);
        AlgebraElement r = random_element(s, rng, act_len, 2);
        AlgebraElement t = random_element(s, rng, act_len, 2);
        SfcElement m = sfc_act(random_element(s, rng, act_len, 2), z);
        if (sfc_act(r * t, m) != sfc_act(r, sfc_act(t, m)))
            rep.failures.push_back(fail_line(rep.suite, seed,
                                             "module assoc " + format_element(r) + " | " +
                                                 format_element(t)));
        if (sfc_act(r + t, m) != sfc_act(r, m) + sfc_act(t, m))
            rep.failures.push_back(fail_line(rep.suite, seed, "module linearity"));
        // witness soundness on nonzero elements
        SfcElement y = sfc_act(r, z) + sfc_act(t, m);
        if (!y.is_zero()) {
            if (sfc_act(sfc_witness(y), y) != z)
                rep.failures.push_back(fail_line(rep.suite, seed,
                                                 "witness " + format_sfc_element(y)));
        }
        // endomorphisms commute with the action and separate points on z
        std::vector<Scalar> coeffs;
        for (int d = 0; d < spec->f().degree(); ++d)
            coeffs.push_back(Scalar::of_int(s->field(), uniform(rng, -3, 3)));
        Residue u(spec->qf(), Poly(s->field(), coeffs));
        if (sfc_endo(u, sfc_act(r, m)) != sfc_act(r, sfc_endo(u, m)))
            rep.failures.push_back(fail_line(rep.suite, seed, "endo centrality"));
        Residue w = u + Residue::one(spec->qf());
        if (sfc_endo(u, z) == sfc_endo(w, z))
            rep.failures.push_back(fail_line(rep.suite, seed, "endo injectivity"));
    }
    return rep;
}

GraphPtr mixed_test_graph() {
    return std::make_shared<const Graph>(
        std::vector<std::string>{"a", "b", "c", "d", "s"},
        std::vector<std::tuple<std::string, std::string, std::string>>{
            {"f1", "a", "b"},
            {"f2", "b", "c"},
            {"f3", "c", "a"},
            {"g1", "a", "c"},
            {"g2", "c", "d"},
            {"g3", "d", "s"},
            {"h", "b", "b"},
        });
}

} // namespace leavitt
