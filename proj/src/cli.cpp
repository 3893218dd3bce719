#include "leavitt/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "leavitt/io.hpp"
#include "leavitt/oracle.hpp"

namespace leavitt {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitRelation = 3;
constexpr int kExitDomain = 4;
constexpr int kExitOracle = 5;

struct CommonOpts {
    std::string graph_file;
    int rose_n = 0;
    std::string field = "Q";
    bool assume_irreducible = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--graph", opts.graph_file, "graph file");
    cmd->add_option("--rose", opts.rose_n, "use the rose with n petals");
    cmd->add_option("--field", opts.field, "coefficient field: Q or Fp:<prime>");
    cmd->add_flag("--assume-irreducible", opts.assume_irreducible,
                  "accept polynomials whose irreducibility is undecided");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SessionPtr build_session(const CommonOpts& opts, bool graph_required = true) {
    Field field = parse_field(opts.field);
    if (!opts.graph_file.empty() && opts.rose_n > 0)
        throw parse_error("give exactly one of --graph and --rose");
    if (opts.graph_file.empty() && opts.rose_n <= 0) {
        if (graph_required) throw parse_error("give exactly one of --graph and --rose");
        return nullptr;
    }
    GraphPtr g = opts.rose_n > 0 ? Graph::rose(opts.rose_n) : Graph::parse(read_file(opts.graph_file));
    return make_session(std::move(g), field);
}

// --auto accepts a file path or an inline `anick:...` descriptor; the result
// is verified (check_relations) or relation_error is thrown
GenMap load_auto(const std::string& spec, const SessionPtr& session) {
    if (spec.rfind("anick:", 0) == 0) return parse_anick_descriptor(spec, session);
    return verify(parse_genmap_file(read_file(spec), session));
}

AlgMatrix parse_matrix(const std::string& text, const SessionPtr& session) {
    std::vector<std::vector<AlgebraElement>> rows;
    std::size_t i = 0;
    std::string body = text;
    while (i <= body.size()) {
        std::size_t j = body.find(';', i);
        if (j == std::string::npos) j = body.size();
        std::string row = body.substr(i, j - i);
        std::vector<AlgebraElement> entries;
        std::size_t k = 0;
        while (k <= row.size()) {
            std::size_t l = row.find(',', k);
            if (l == std::string::npos) l = row.size();
            entries.push_back(parse_element(row.substr(k, l - k), session));
            k = l + 1;
            if (l == row.size()) break;
        }
        rows.push_back(std::move(entries));
        i = j + 1;
        if (j == body.size()) break;
    }
    int n = static_cast<int>(rows.size());
    AlgMatrix m(session, n);
    for (int r = 0; r < n; ++r) {
        if (static_cast<int>(rows[static_cast<std::size_t>(r)].size()) != n)
            throw parse_error("matrix must be square; row " + std::to_string(r + 1) +
                              " has " + std::to_string(rows[static_cast<std::size_t>(r)].size()) +
                              " entries");
        for (int c = 0; c < n; ++c) m.set(r, c, rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
    }
    return m;
}

int demo_example_2_4(Field field, std::ostream& out) {
    SessionPtr s = make_session(Graph::parse("vertex v\nedge e v v"), field);
    AlgMatrix P(s, 1), Q(s, 1);
    P.set(0, 0, AlgebraElement::ghost(s, 0));
    Q.set(0, 0, AlgebraElement::edge(s, 0));
    GenMap phi = build_phi_pq({0}, P, Q);
    out << "R_1 with P = e', Q = e (the single-edge matrix endomorphism)\n";
    out << "phi(e) = " << format_element(phi.edge_image(0)) << "\n";
    out << "phi(e') = " << format_element(phi.ghost_image(0)) << "\n";
    bool iso = iso_condition(phi, P, Q, 0);
    out << "iso-condition: " << (iso ? "true" : "false") << "\n";
    out << "phi identifies e and e' although e != e' in the algebra\n";
    return kExitOk;
}

int demo_example_3_7(Field field, std::ostream& out) {
    SessionPtr s = make_session(Graph::rose(2), field);
    IrrPoly f = IrrPoly::make(parse_poly("1-x", field));
    SfcSpecPtr spec = make_sfc(s, Path::edge(s->graph(), 1), f);
    AlgebraElement p = parse_element("e1", s);
    AlgebraElement q = parse_element("e1*e2'", s);
    AlgebraElement zero = AlgebraElement::zero(s);
    out << "module sfc:c=e2,f=1-x over " << field.str() << " in R_2\n";
    out << "equiv(e1, e1*e2') -> " << (sfc_equiv(p, q, spec) ? "equivalent" : "not equivalent") << "\n";
    out << "equiv(e1, 0) -> " << (sfc_equiv(p, zero, spec) ? "equivalent" : "not equivalent") << "\n";
    return kExitOk;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const relation_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitRelation;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    }
}

namespace {

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computation in Leavitt path algebras", "lpa"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string expr1, expr2, auto_spec, module_desc, twist_text, suite;
    std::string edges_csv, mat_p, mat_q, w_name, demo_name;
    std::uint64_t seed = 42;
    int samples = 1000, max_len = 6;

    auto* normalize = app.add_subcommand("normalize", "print the canonical normal form");
    add_common(normalize, opts);
    normalize->add_option("expr", expr1, "element expression")->required();

    auto* apply = app.add_subcommand("apply", "apply an automorphism to an element");
    add_common(apply, opts);
    apply->add_option("--auto", auto_spec, "automorphism file or anick:p=..,e1=..,e2=..")->required();
    apply->add_option("expr", expr1, "element expression")->required();

    auto* act = app.add_subcommand("act", "act by an algebra element on a module element");
    add_common(act, opts);
    act->add_option("--module", module_desc, "sfc:c=<path>,f=<poly>[,twist=<expr>]")->required();
    act->add_option("--twist", twist_text, "twist element p (overrides the descriptor)");
    act->add_option("expr", expr1, "algebra element")->required();
    act->add_option("module-expr", expr2, "module element, e.g. z or e1*z")->required();

    auto* equiv = app.add_subcommand("equiv", "decide p == q mod L f(c) for p, q in A");
    add_common(equiv, opts);
    equiv->add_option("--module", module_desc, "sfc:c=<path>,f=<poly>")->required();
    equiv->add_option("p", expr1)->required();
    equiv->add_option("q", expr2)->required();

    auto* witness = app.add_subcommand("witness", "cyclicity witness r with r y = z");
    add_common(witness, opts);
    witness->add_option("--module", module_desc, "sfc:c=<path>,f=<poly>")->required();
    witness->add_option("module-expr", expr2, "nonzero module element")->required();

    auto* check_hom = app.add_subcommand("check-hom", "verify generator images against the relations");
    add_common(check_hom, opts);
    check_hom->add_option("--auto", auto_spec, "automorphism file or anick descriptor")->required();

    auto* iso_cond = app.add_subcommand("iso-cond", "check the isomorphism condition for phi_{P,Q}");
    add_common(iso_cond, opts);
    iso_cond->add_option("--edges", edges_csv, "comma-separated edge names")->required();
    iso_cond->add_option("--P", mat_p, "matrix rows `a,b;c,d` of element expressions")->required();
    iso_cond->add_option("--Q", mat_q, "matrix rows for Q")->required();
    iso_cond->add_option("--w", w_name, "range vertex (default: range of the first edge)");

    auto* oracle = app.add_subcommand("oracle", "run a verification suite");
    add_common(oracle, opts);
    oracle->add_option("--suite", suite, "assoc | relations | confluence | module | hom")->required();
    oracle->add_option("--seed", seed, "base seed");
    oracle->add_option("--samples", samples, "sample count");
    oracle->add_option("--max-len", max_len, "maximum monomial length");
    oracle->add_option("--module", module_desc, "module descriptor for --suite module");
    oracle->add_option("--auto", auto_spec, "automorphism for --suite hom");

    auto* demo = app.add_subcommand("demo", "worked examples");
    add_common(demo, opts);
    demo->add_option("which", demo_name, "example-2-4 | example-3-7")->required();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    }

    if (demo->parsed()) {
        Field field = parse_field(opts.field);
        if (demo_name == "example-2-4") return demo_example_2_4(field, out);
        if (demo_name == "example-3-7") return demo_example_3_7(field, out);
        throw parse_error("unknown demo '" + demo_name + "'");
    }

    SessionPtr session = build_session(opts);

    if (normalize->parsed()) {
        out << format_element(parse_element(expr1, session)) << "\n";
        return kExitOk;
    }
    if (apply->parsed()) {
        GenMap m = load_auto(auto_spec, session);
        out << format_element(apply_hom(m, parse_element(expr1, session))) << "\n";
        return kExitOk;
    }
    if (act->parsed() || equiv->parsed() || witness->parsed()) {
        ModuleDescriptor desc = parse_module_descriptor(module_desc, session, opts.assume_irreducible);
        if (!twist_text.empty()) desc.twist = parse_element(twist_text, session);
        if (act->parsed()) {
            AlgebraElement r = parse_element(expr1, session);
            SfcElement m = parse_sfc_element(expr2, desc.spec);
            SfcElement res = desc.twist ? sfc_act_twisted(*desc.twist, r, m) : sfc_act(r, m);
            out << format_sfc_element(res) << "\n";
            return kExitOk;
        }
        if (equiv->parsed()) {
            bool eq = sfc_equiv(parse_element(expr1, session), parse_element(expr2, session), desc.spec);
            out << (eq ? "equivalent" : "not equivalent") << "\n";
            return kExitOk;
        }
        SfcElement y = parse_sfc_element(expr2, desc.spec);
        AlgebraElement r = sfc_witness(y);
        // in the twisted module the witness acts through sigma_p, so pull it
        // back: sigma_p(sigma_p^{-1}(r)) y = z
        if (desc.twist) r = apply_hom(build_anick(*desc.twist, 0, 1).second, r);
        out << format_element(r) << "\n";
        return kExitOk;
    }
    if (check_hom->parsed()) {
        GenMap m = auto_spec.rfind("anick:", 0) == 0
                       ? parse_anick_descriptor(auto_spec, session)
                       : parse_genmap_file(read_file(auto_spec), session);
        RelationReport rep = check_relations(m);
        if (rep.ok()) {
            out << "ok\n";
            return kExitOk;
        }
        for (const auto& v : rep.violations) out << v << "\n";
        return kExitRelation;
    }
    if (iso_cond->parsed()) {
        const Graph& g = *session->graph();
        std::vector<int> edges;
        std::stringstream ss(edges_csv);
        std::string name;
        while (std::getline(ss, name, ',')) {
            int e = g.find_edge(name);
            if (e < 0) throw parse_error("unknown edge '" + name + "'");
            edges.push_back(e);
        }
        AlgMatrix P = parse_matrix(mat_p, session);
        AlgMatrix Q = parse_matrix(mat_q, session);
        int w = edges.empty() ? -1 : g.edge(edges[0]).dst;
        if (!w_name.empty()) {
            w = g.find_vertex(w_name);
            if (w < 0) throw parse_error("unknown vertex '" + w_name + "'");
        }
        GenMap m = build_phi_pq(edges, P, Q);
        out << (iso_condition(m, P, Q, w) ? "true" : "false") << "\n";
        return kExitOk;
    }
    if (oracle->parsed()) {
        SampleConfig cfg{seed, max_len, samples, session};
        SuiteReport rep;
        if (suite == "assoc") rep = check_assoc_suite(cfg);
        else if (suite == "relations") rep = check_relations_suite(cfg);
        else if (suite == "confluence") rep = check_confluence_suite(cfg);
        else if (suite == "module") {
            if (module_desc.empty()) throw parse_error("--suite module needs --module");
            ModuleDescriptor desc = parse_module_descriptor(module_desc, session, opts.assume_irreducible);
            rep = check_module_suite(cfg, desc.spec);
        } else if (suite == "hom") {
            if (auto_spec.empty()) throw parse_error("--suite hom needs --auto");
            GenMap m = auto_spec.rfind("anick:", 0) == 0
                           ? parse_anick_descriptor(auto_spec, session)
                           : parse_genmap_file(read_file(auto_spec), session);
            rep = check_hom_suite(cfg, m);
        } else {
            throw parse_error("unknown suite '" + suite + "'");
        }
        if (rep.ok()) {
            out << rep.suite << ": ok (" << rep.samples << " samples)\n";
            return kExitOk;
        }
        for (const auto& f : rep.failures) out << f << "\n";
        return kExitOracle;
    }
    return kExitOk;
}

} // namespace

} // namespace leavitt
