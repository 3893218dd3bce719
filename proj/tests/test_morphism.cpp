#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace leavitt;
using t::el;

namespace {

// the unitriangular matrix pair defining sigma_p in a rose
std::pair<AlgMatrix, AlgMatrix> unitriangular(const SessionPtr& s, const AlgebraElement& p) {
    AlgebraElement one = AlgebraElement::identity(s);
    AlgMatrix P(s, 2), Q(s, 2);
    P.set(0, 0, one); P.set(0, 1, p); P.set(1, 1, one);
    Q.set(0, 0, one); Q.set(0, 1, -p); Q.set(1, 1, one);
    return {P, Q};
}

} // namespace

TEST_CASE("matrix arithmetic") {
    SessionPtr s = t::rose_q(2);
    auto [P, Q] = unitriangular(s, el(s, "e1"));
    CHECK(AlgMatrix::identity(s, 2) * P == P);
    CHECK(P * Q == AlgMatrix::identity(s, 2));
    CHECK(Q * P == AlgMatrix::identity(s, 2));
    AlgMatrix three(s, 3);
    CHECK_THROWS_AS(P * three, domain_error);
    CHECK_THROWS_AS(P.at(2, 0), domain_error);
}

TEST_CASE("validate_pq") {
    SessionPtr s = t::rose_q(2);
    auto [P, Q] = unitriangular(s, el(s, "e1"));
    CHECK(validate_pq(P, Q, 0));
    CHECK(validate_pq(AlgMatrix::identity(s, 2), AlgMatrix::identity(s, 2), 0));

    AlgMatrix E(s, 1);
    E.set(0, 0, el(s, "e1"));
    CHECK_FALSE(validate_pq(E, E, 0)); // e1 e1 != v
}

TEST_CASE("build_phi_pq gives sigma_p on the rose") {
    SessionPtr s = t::rose_q(2);
    AlgebraElement p = el(s, "e1");
    auto [P, Q] = unitriangular(s, p);
    GenMap sigma = build_phi_pq({0, 1}, P, Q);
    CHECK(sigma.verified());
    CHECK(sigma.vertex_image(0) == el(s, "v"));
    CHECK(sigma.edge_image(0) == el(s, "e1"));
    CHECK(sigma.edge_image(1) == el(s, "e2 + e1*e1"));
    CHECK(sigma.ghost_image(0) == el(s, "e1' - e1*e2'"));
    CHECK(sigma.ghost_image(1) == el(s, "e2'"));
    CHECK(check_relations(sigma).ok());

    // identity matrices give the identity map
    GenMap id = build_phi_pq({0, 1}, AlgMatrix::identity(s, 2), AlgMatrix::identity(s, 2));
    CHECK(id == GenMap::identity(s));

    // invalid edge lists
    CHECK_THROWS_AS(build_phi_pq({0, 0}, P, Q), domain_error);
    AlgMatrix E(s, 1);
    E.set(0, 0, el(s, "e1"));
    CHECK_THROWS_AS(build_phi_pq({0}, E, E), domain_error); // validate_pq fails
}

TEST_CASE("check_relations reports violations") {
    SessionPtr s = t::rose_q(2);
    GenMap id = GenMap::identity(s);
    CHECK(check_relations(id).ok());

    // e1 -> v, everything else fixed: relation (3) breaks
    std::vector<AlgebraElement> vs{el(s, "v")};
    std::vector<AlgebraElement> es{el(s, "v"), el(s, "e2")};
    std::vector<AlgebraElement> gs{el(s, "e1'"), el(s, "e2'")};
    GenMap bad(s, vs, es, gs);
    RelationReport rep = check_relations(bad);
    CHECK_FALSE(rep.ok());
    bool mentions3 = false;
    for (const auto& v : rep.violations)
        if (v.find("relation (3)") != std::string::npos) mentions3 = true;
    CHECK(mentions3);
    CHECK_THROWS_AS(verify(bad), relation_error);
    CHECK_THROWS_AS(apply_hom(bad, el(s, "e1")), domain_error);
}

TEST_CASE("apply_hom extends multiplicatively") {
    SessionPtr s = t::rose_q(2);
    GenMap sigma = build_anick(el(s, "e1"), 0, 1).first;
    CHECK(apply_hom(sigma, el(s, "e2")) == el(s, "e2 + e1*e1"));
    CHECK(apply_hom(sigma, el(s, "e1'")) == el(s, "e1' - e1*e2'"));
    CHECK(apply_hom(sigma, el(s, "v")) == el(s, "v"));

    std::mt19937_64 rng(17);
    for (int i = 0; i < 200; ++i) {
        AlgebraElement x = random_element(s, rng, 3);
        AlgebraElement y = random_element(s, rng, 3);
        REQUIRE(apply_hom(sigma, x * y) == apply_hom(sigma, x) * apply_hom(sigma, y));
    }
}

TEST_CASE("compose_homs and inverses") {
    SessionPtr s = t::rose_q(2);
    auto [sigma, sigma_inv] = build_anick(el(s, "e1"), 0, 1);
    CHECK(sigma_inv.edge_image(1) == el(s, "e2 - e1*e1"));
    CHECK(sigma_inv.ghost_image(0) == el(s, "e1' + e1*e2'"));
    GenMap id = GenMap::identity(s);
    CHECK(compose_homs(sigma, sigma_inv) == id);
    CHECK(compose_homs(sigma_inv, sigma) == id);
    CHECK(compose_homs(id, sigma) == sigma);

    // phi_{P,Q} . phi_{Q,P} = id for the unitriangular pair
    auto [P, Q] = unitriangular(s, el(s, "e1*e2' + 2*v"));
    GenMap f = build_phi_pq({0, 1}, P, Q);
    GenMap g = build_phi_pq({0, 1}, Q, P);
    CHECK(compose_homs(f, g) == id);
    CHECK(compose_homs(g, f) == id);
}

TEST_CASE("iso_condition") {
    SessionPtr s = t::rose_q(2);
    AlgebraElement p = el(s, "e1");
    auto [P, Q] = unitriangular(s, p);
    GenMap sigma = build_phi_pq({0, 1}, P, Q);
    CHECK(iso_condition(sigma, P, Q, 0)); // sigma fixes p in A

    GenMap id = build_phi_pq({0, 1}, AlgMatrix::identity(s, 2), AlgMatrix::identity(s, 2));
    CHECK(iso_condition(id, AlgMatrix::identity(s, 2), AlgMatrix::identity(s, 2), 0));
}

TEST_CASE("the R_1 endomorphism that is not an isomorphism") {
    SessionPtr s = make_session(Graph::parse("vertex v\nedge e v v"), Field::rationals());
    AlgMatrix P(s, 1), Q(s, 1);
    P.set(0, 0, el(s, "e'"));
    Q.set(0, 0, el(s, "e"));
    CHECK(validate_pq(P, Q, 0));
    GenMap phi = build_phi_pq({0}, P, Q);
    CHECK(phi.edge_image(0) == el(s, "v"));
    CHECK(phi.ghost_image(0) == el(s, "v"));
    CHECK_FALSE(iso_condition(phi, P, Q, 0));
    // phi identifies e and e' although they differ in the algebra
    CHECK(apply_hom(phi, el(s, "e")) == apply_hom(phi, el(s, "e'")));
    CHECK(el(s, "e") != el(s, "e'"));
}

TEST_CASE("build_anick preconditions") {
    SessionPtr s = t::rose_q(2);
    CHECK_THROWS_AS(build_anick(el(s, "e1"), 0, 0), domain_error);
    CHECK_THROWS_AS(build_anick(el(s, "e2"), 0, 1), domain_error);  // e2 not in A
    CHECK_THROWS_AS(build_anick(el(s, "e1'"), 0, 1), domain_error); // e1' not in A

    // p = 0 gives the identity pair
    auto [sig, sig_inv] = build_anick(AlgebraElement::zero(s), 0, 1);
    CHECK(sig == GenMap::identity(s));
    CHECK(sig_inv == GenMap::identity(s));

    // p = e1 e2' is a valid basis twist
    auto pair = build_anick(el(s, "e1*e2'"), 0, 1);
    CHECK(pair.first.verified());
    CHECK(compose_homs(pair.first, pair.second) == GenMap::identity(s));
}

TEST_CASE("sigma_p fixes the A basis") {
    SessionPtr s3 = t::rose_q(3);
    GenMap sigma = build_anick(el(s3, "e1*e3 - 2*e3'"), 0, 1).first;
    for (const char* text : {"v", "e1", "e3", "e2'", "e3'", "e1*e3*e2'", "e3*e3'", "e1*e1*e3'"}) {
        AlgebraElement q = el(s3, text);
        REQUIRE(in_A_subalgebra(q, 3));
        REQUIRE(apply_hom(sigma, q) == q);
    }
}

TEST_CASE("anick on a non-rose graph with parallel edges") {
    // two vertices with a pair of parallel edges u -> w and a loop at w
    GraphPtr g = Graph::parse("vertex u\nvertex w\nedge a u w\nedge b u w\nedge l w w");
    SessionPtr s = make_session(g, Field::rationals());
    // p must commute with w and lie in A_E(a, b): w itself qualifies
    AlgebraElement p = el(s, "w + l");
    auto [sigma, sigma_inv] = build_anick(p, 0, 1);
    CHECK(sigma.edge_image(1) == el(s, "b + a*w + a*l"));
    CHECK(compose_homs(sigma, sigma_inv) == GenMap::identity(s));
    CHECK(check_relations(sigma).ok());
}
