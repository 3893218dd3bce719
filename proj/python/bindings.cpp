#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "leavitt/io.hpp"
#include "leavitt/oracle.hpp"

namespace py = pybind11;
using namespace leavitt;

namespace {

// Sessions and module specs are shared immutable state; python sees thin
// handles with string-based entry points.
struct PySession {
    SessionPtr s;
};

struct PySfcModule {
    SfcSpecPtr spec;
    std::optional<AlgebraElement> twist;

    SfcElement act(const AlgebraElement& r, const SfcElement& m) const {
        return twist ? sfc_act_twisted(*twist, r, m) : sfc_act(r, m);
    }
};

struct PyChenModule {
    ChenSpecPtr spec;
};

Field field_of(const std::string& name) { return parse_field(name); }

} // namespace

PYBIND11_MODULE(_leavitt, m) {
    m.doc() = "Exact computation in Leavitt path algebras";

    py::register_exception<parse_error>(m, "ParseError");
    py::register_exception<domain_error>(m, "DomainError");
    py::register_exception<relation_error>(m, "RelationError");

    py::class_<Graph, std::shared_ptr<Graph>>(m, "Graph")
        .def_property_readonly("vertices",
                               [](const Graph& g) {
                                   std::vector<std::string> out;
                                   for (int v = 0; v < g.vertex_count(); ++v)
                                       out.push_back(g.vertex_name(v));
                                   return out;
                               })
        .def_property_readonly("edges",
                               [](const Graph& g) {
                                   std::vector<std::tuple<std::string, std::string, std::string>> out;
                                   for (int e = 0; e < g.edge_count(); ++e)
                                       out.emplace_back(g.edge(e).name,
                                                        g.vertex_name(g.edge(e).src),
                                                        g.vertex_name(g.edge(e).dst));
                                   return out;
                               })
        .def("__repr__", [](const Graph& g) {
            return "Graph(" + std::to_string(g.vertex_count()) + " vertices, " +
                   std::to_string(g.edge_count()) + " edges)";
        });

    m.def("rose", [](int n) { return std::const_pointer_cast<Graph>(Graph::rose(n)); },
          py::arg("n"), "the rose with n petals");
    m.def("parse_graph",
          [](const std::string& text) { return std::const_pointer_cast<Graph>(Graph::parse(text)); },
          py::arg("text"));
    m.def("mixed_test_graph",
          []() { return std::const_pointer_cast<Graph>(mixed_test_graph()); });

    py::class_<AlgebraElement>(m, "Element")
        .def("__add__", [](const AlgebraElement& a, const AlgebraElement& b) { return a + b; })
        .def("__sub__", [](const AlgebraElement& a, const AlgebraElement& b) { return a - b; })
        .def("__mul__", [](const AlgebraElement& a, const AlgebraElement& b) { return a * b; })
        .def("__neg__", [](const AlgebraElement& a) { return -a; })
        .def("__rmul__",
             [](const AlgebraElement& a, long long k) {
                 return a.scaled(Scalar::of_int(a.session()->field(), k));
             })
        .def("__eq__", [](const AlgebraElement& a, const AlgebraElement& b) { return a == b; })
        .def("star", &involution, "the involution (pq*)* = qp*")
        .def("is_zero", &AlgebraElement::is_zero)
        .def("degree_parts",
             [](const AlgebraElement& x) {
                 std::map<int, AlgebraElement> parts = graded_parts(x);
                 py::dict out;
                 for (const auto& [d, p] : parts) out[py::int_(d)] = p;
                 return out;
             })
        .def("__repr__", &format_element)
        .def("__str__", &format_element);

    py::class_<PySession>(m, "Session")
        .def(py::init([](std::shared_ptr<Graph> g, const std::string& field) {
                 return PySession{make_session(GraphPtr(std::move(g)), field_of(field))};
             }),
             py::arg("graph"), py::arg("field") = "Q")
        .def("parse", [](const PySession& s, const std::string& t) { return parse_element(t, s.s); })
        .def("vertex",
             [](const PySession& s, const std::string& name) {
                 int v = s.s->graph()->find_vertex(name);
                 if (v < 0) throw domain_error("unknown vertex '" + name + "'");
                 return AlgebraElement::vertex(s.s, v);
             })
        .def("edge",
             [](const PySession& s, const std::string& name) {
                 int e = s.s->graph()->find_edge(name);
                 if (e < 0) throw domain_error("unknown edge '" + name + "'");
                 return AlgebraElement::edge(s.s, e);
             })
        .def("ghost",
             [](const PySession& s, const std::string& name) {
                 int e = s.s->graph()->find_edge(name);
                 if (e < 0) throw domain_error("unknown edge '" + name + "'");
                 return AlgebraElement::ghost(s.s, e);
             })
        .def("one", [](const PySession& s) { return AlgebraElement::identity(s.s); })
        .def("zero", [](const PySession& s) { return AlgebraElement::zero(s.s); })
        .def("scalar",
             [](const PySession& s, const std::string& text) {
                 return AlgebraElement::identity(s.s)
                     .scaled(parse_poly(text, s.s->field()).coeff(0));
             })
        .def("in_A", [](const PySession& s, const AlgebraElement& x) {
            return in_A_subalgebra(x, s.s->graph()->edge_count());
        })
        .def("__repr__", [](const PySession& s) {
            return "Session(" + std::to_string(s.s->graph()->vertex_count()) + "v/" +
                   std::to_string(s.s->graph()->edge_count()) + "e over " + s.s->field().str() + ")";
        });

    py::class_<AlgMatrix>(m, "AlgMatrix")
        .def(py::init([](const PySession& s, int n) { return AlgMatrix(s.s, n); }))
        .def_static("identity",
                    [](const PySession& s, int n) { return AlgMatrix::identity(s.s, n); })
        .def("set", &AlgMatrix::set)
        .def("at", &AlgMatrix::at)
        .def("__mul__", [](const AlgMatrix& a, const AlgMatrix& b) { return a * b; })
        .def("__eq__", [](const AlgMatrix& a, const AlgMatrix& b) { return a == b; });

    auto edge_ids = [](const PySession& s, const std::vector<std::string>& names) {
        std::vector<int> ids;
        for (const auto& n : names) {
            int e = s.s->graph()->find_edge(n);
            if (e < 0) throw domain_error("unknown edge '" + n + "'");
            ids.push_back(e);
        }
        return ids;
    };
    m.def("validate_pq",
          [](const PySession& s, const AlgMatrix& P, const AlgMatrix& Q, const std::string& w) {
              int v = s.s->graph()->find_vertex(w);
              if (v < 0) throw domain_error("unknown vertex '" + w + "'");
              return validate_pq(P, Q, v);
          });
    m.def("build_phi_pq",
          [edge_ids](const PySession& s, const std::vector<std::string>& edges, const AlgMatrix& P,
                     const AlgMatrix& Q) { return build_phi_pq(edge_ids(s, edges), P, Q); });
    m.def("iso_condition",
          [](const PySession& s, const GenMap& gm, const AlgMatrix& P, const AlgMatrix& Q,
             const std::string& w) {
              int v = s.s->graph()->find_vertex(w);
              if (v < 0) throw domain_error("unknown vertex '" + w + "'");
              return iso_condition(gm, P, Q, v);
          });

    py::class_<GenMap>(m, "GenMap")
        .def_property_readonly("verified", &GenMap::verified)
        .def("apply", [](const GenMap& m, const AlgebraElement& x) { return apply_hom(m, x); })
        .def("compose", [](const GenMap& f, const GenMap& g) { return compose_homs(f, g); })
        .def("vertex_image",
             [](const GenMap& m, const std::string& name) {
                 int v = m.session()->graph()->find_vertex(name);
                 if (v < 0) throw domain_error("unknown vertex '" + name + "'");
                 return m.vertex_image(v);
             })
        .def("edge_image",
             [](const GenMap& m, const std::string& name) {
                 int e = m.session()->graph()->find_edge(name);
                 if (e < 0) throw domain_error("unknown edge '" + name + "'");
                 return m.edge_image(e);
             })
        .def("ghost_image",
             [](const GenMap& m, const std::string& name) {
                 int e = m.session()->graph()->find_edge(name);
                 if (e < 0) throw domain_error("unknown edge '" + name + "'");
                 return m.ghost_image(e);
             })
        .def("__eq__", [](const GenMap& a, const GenMap& b) { return a == b; });

    m.def(
        "anick",
        [](const PySession& s, const AlgebraElement& p, const std::string& e1, const std::string& e2) {
            const Graph& g = *s.s->graph();
            int a = e1.empty() ? 0 : g.find_edge(e1);
            int b = e2.empty() ? 1 : g.find_edge(e2);
            if (a < 0 || b < 0) throw domain_error("unknown edge in anick()");
            return build_anick(p, a, b);
        },
        py::arg("session"), py::arg("p"), py::arg("e1") = "", py::arg("e2") = "",
        "the automorphism pair (sigma_p, sigma_p_inverse)");

    m.def("check_relations", [](const GenMap& m) { return check_relations(m).violations; });
    m.def("parse_genmap",
          [](const PySession& s, const std::string& text) { return parse_genmap_file(text, s.s); });

    py::class_<SfcElement>(m, "ModuleElement")
        .def("__add__", [](const SfcElement& a, const SfcElement& b) { return a + b; })
        .def("__sub__", [](const SfcElement& a, const SfcElement& b) { return a - b; })
        .def("__neg__", [](const SfcElement& a) { return -a; })
        .def("__eq__", [](const SfcElement& a, const SfcElement& b) { return a == b; })
        .def("is_zero", &SfcElement::is_zero)
        .def("__repr__", &format_sfc_element)
        .def("__str__", &format_sfc_element);

    py::class_<PySfcModule>(m, "SfcModule")
        .def(py::init([](const PySession& s, const std::string& c, const std::string& f,
                         const std::string& twist, bool assume) {
                 std::string desc = "sfc:c=" + c + ",f=" + f;
                 ModuleDescriptor d = parse_module_descriptor(desc, s.s, assume);
                 PySfcModule mod{d.spec, std::nullopt};
                 if (!twist.empty()) mod.twist = parse_element(twist, s.s);
                 return mod;
             }),
             py::arg("session"), py::arg("c"), py::arg("f"), py::arg("twist") = "",
             py::arg("assume_irreducible") = false)
        .def_property_readonly("z", [](const PySfcModule& m) { return SfcElement::generator(m.spec); })
        .def("parse", [](const PySfcModule& m, const std::string& t) { return parse_sfc_element(t, m.spec); })
        .def("act", [](const PySfcModule& m, const AlgebraElement& r, const SfcElement& x) {
            return m.act(r, x);
        })
        .def("annihilates",
             [](const PySfcModule& m, const AlgebraElement& r) {
                 if (m.twist)
                     return m.act(r, SfcElement::generator(m.spec)).is_zero();
                 return sfc_annihilates(r, m.spec);
             })
        .def("equiv", [](const PySfcModule& m, const AlgebraElement& p, const AlgebraElement& q) {
            return sfc_equiv(p, q, m.spec);
        })
        .def("witness", [](const PySfcModule& m, const SfcElement& y) { return sfc_witness(y); })
        .def("endo",
             [](const PySfcModule& m, const std::string& u_poly, const SfcElement& x) {
                 Residue u(m.spec->qf(), parse_poly(u_poly, m.spec->session()->field()));
                 return sfc_endo(u, x);
             })
        .def("chen_compatible", [](const PySfcModule& m) { return sfc_to_chen_compat_check(m.spec); })
        .def("__repr__", [](const PySfcModule& m) {
            return "SfcModule(c=" + format_path(m.spec->cycle()) + ", f=" +
                   format_poly(m.spec->f().poly()) + (m.twist ? ", twisted" : "") + ")";
        });

    py::class_<ChenElement>(m, "ChenElement")
        .def("__add__", [](const ChenElement& a, const ChenElement& b) { return a + b; })
        .def("__eq__", [](const ChenElement& a, const ChenElement& b) { return a == b; })
        .def("is_zero", &ChenElement::is_zero)
        .def("__repr__", &format_chen_element);

    py::class_<PyChenModule>(m, "ChenModule")
        .def(py::init([](const PySession& s, const std::string& c) {
                 AlgebraElement el = parse_element(c, s.s);
                 if (el.term_count() != 1 || !el.terms().begin()->first.ghost().empty())
                     throw domain_error("'" + c + "' is not a single path");
                 return PyChenModule{make_chen(s.s, el.terms().begin()->first.real())};
             }),
             py::arg("session"), py::arg("c"))
        .def("basis",
             [](const PyChenModule& m, const std::string& prefix) {
                 const SessionPtr& s = m.spec->session();
                 Path pre = prefix.empty()
                                ? Path::vertex(s->graph(), m.spec->tail().period().source())
                                : [&] {
                                      AlgebraElement el = parse_element(prefix, s);
                                      if (el.term_count() != 1 ||
                                          !el.terms().begin()->first.ghost().empty())
                                          throw domain_error("prefix must be a single path");
                                      return el.terms().begin()->first.real();
                                  }();
                 return ChenElement::basis(m.spec,
                                           RationalInfinitePath(pre, m.spec->tail().period()));
             },
             py::arg("prefix") = "")
        .def("act", [](const PyChenModule& m, const AlgebraElement& r, const ChenElement& x) {
            return chen_act(r, x);
        });

    m.def(
        "oracle_suite",
        [](const PySession& s, const std::string& kind, std::uint64_t seed, int samples, int max_len,
           const std::string& module_desc, const std::string& auto_desc) {
            SampleConfig cfg{seed, max_len, samples, s.s};
            SuiteReport rep;
            if (kind == "assoc") rep = check_assoc_suite(cfg);
            else if (kind == "relations") rep = check_relations_suite(cfg);
            else if (kind == "confluence") rep = check_confluence_suite(cfg);
            else if (kind == "module") {
                ModuleDescriptor d = parse_module_descriptor(module_desc, s.s, false);
                rep = check_module_suite(cfg, d.spec);
            } else if (kind == "hom") {
                GenMap gm = parse_anick_descriptor(auto_desc, s.s);
                rep = check_hom_suite(cfg, gm);
            } else {
                throw domain_error("unknown suite '" + kind + "'");
            }
            return rep.failures;
        },
        py::arg("session"), py::arg("kind"), py::arg("seed") = 42, py::arg("samples") = 200,
        py::arg("max_len") = 4, py::arg("module") = "", py::arg("auto_desc") = "");
}
