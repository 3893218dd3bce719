#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace leavitt;

namespace {

Path p(const GraphPtr& g, std::initializer_list<int> edges) {
    return Path::of_edges(g, std::vector<int>(edges));
}

} // namespace

TEST_CASE("graph file parsing") {
    GraphPtr g = Graph::parse("vertex v\nedge e1 v v\nedge e2 v v");
    CHECK(g->vertex_count() == 1);
    CHECK(g->edge_count() == 2);
    CHECK(g->edge(0).name == "e1");
    CHECK(g->edge(1).name == "e2");
    CHECK(*g == *Graph::rose(2));

    // the paper's R_1 with its edge named e
    GraphPtr r1 = Graph::parse("vertex v\nedge e v v");
    CHECK(r1->vertex_count() == 1);
    CHECK(r1->edge_count() == 1);
    CHECK(r1->edge(0).src == r1->edge(0).dst);
    CHECK_THROWS_AS(Graph::parse("edge e a b"), parse_error);       // unknown vertex
    CHECK_THROWS_AS(Graph::parse(""), parse_error);                 // empty file
    CHECK_THROWS_AS(Graph::parse("vertex v\nvertex v"), parse_error);
    CHECK_THROWS_AS(Graph::parse("vertex v\nedge e v v\nedge e v v"), parse_error);
    CHECK_THROWS_AS(Graph::parse("vertex 1v"), parse_error);
    CHECK_THROWS_AS(Graph::parse("loop e v v"), parse_error);

    GraphPtr commented = Graph::parse("# a rose\nvertex v\n\nedge e1 v v # loop\nedge e2 v v\n");
    CHECK(*commented == *Graph::rose(2));
}

TEST_CASE("rose") {
    GraphPtr r2 = Graph::rose(2);
    CHECK(r2->vertex_count() == 1);
    CHECK(r2->edge_count() == 2);
    CHECK(r2->is_rose());
    CHECK(Graph::rose(1)->edge_count() == 1);
    CHECK_THROWS_AS(Graph::rose(0), domain_error);
}

TEST_CASE("path construction and concatenation") {
    GraphPtr g = Graph::rose(2);
    Path e1e2 = concat(Path::edge(g, 0), Path::edge(g, 1));
    CHECK(e1e2.length() == 2);
    CHECK(e1e2.source() == 0);
    CHECK(e1e2.range() == 0);

    Path v = Path::vertex(g, 0);
    CHECK(concat(v, Path::edge(g, 0)) == Path::edge(g, 0));
    CHECK(concat(Path::edge(g, 0), v) == Path::edge(g, 0));

    GraphPtr mixed = mixed_test_graph();
    Path f1 = Path::edge(mixed, 0); // a -> b
    Path g2 = Path::edge(mixed, 4); // c -> d
    CHECK_THROWS_AS(concat(f1, g2), domain_error);
    // s/r bookkeeping through concatenation
    Path f1f2 = concat(f1, Path::edge(mixed, 1));
    CHECK(f1f2.source() == mixed->find_vertex("a"));
    CHECK(f1f2.range() == mixed->find_vertex("c"));
}

TEST_CASE("simple closed paths") {
    GraphPtr g = Graph::rose(2);
    CHECK(is_simple_closed(p(g, {0, 1})));
    CHECK_FALSE(is_simple_closed(p(g, {0, 0})));
    CHECK(is_simple_closed(p(g, {1})));
    CHECK_FALSE(is_simple_closed(Path::vertex(g, 0)));
    CHECK_FALSE(is_simple_closed(p(g, {0, 1, 0, 1})));
    CHECK(is_simple_closed(p(g, {0, 0, 1}))); // e1 e1 e2

    // d^2 is never simple for closed d
    for (auto edges : {std::vector<int>{0}, {0, 1}, {1, 0, 0}}) {
        Path d = Path::of_edges(g, edges);
        CHECK_FALSE(is_simple_closed(concat(d, d)));
    }
}

TEST_CASE("rotations") {
    GraphPtr g2 = Graph::rose(2);
    auto r = rotations(p(g2, {0, 1}));
    REQUIRE(r.size() == 2);
    CHECK(r[0] == p(g2, {0, 1}));
    CHECK(r[1] == p(g2, {1, 0}));

    CHECK(rotations(p(g2, {1})).size() == 1);

    GraphPtr g3 = Graph::rose(3);
    auto r3 = rotations(p(g3, {0, 1, 2}));
    REQUIRE(r3.size() == 3);
    CHECK(r3[1] == p(g3, {1, 2, 0}));
    CHECK(r3[2] == p(g3, {2, 0, 1}));

    // duplicates removed for proper powers
    CHECK(rotations(p(g2, {0, 0})).size() == 1);
    CHECK(rotations(p(g2, {0, 1, 0, 1})).size() == 2);

    CHECK_THROWS_AS(rotations(p(mixed_test_graph(), {0})), domain_error); // f1 not closed

    // each rotation is closed and tail-equivalent to c
    Path c = p(g3, {0, 2, 1});
    RationalInfinitePath cinf(Path::vertex(g3, 0), c);
    for (const Path& rot : rotations(c)) {
        CHECK(rot.is_closed());
        CHECK(rational_tail_equivalent(RationalInfinitePath(Path::vertex(g3, 0), rot), cinf));
    }
    // rotation count = primitive period
    CHECK(rotations(p(g3, {0, 1, 0, 1})).size() == 2);
}

TEST_CASE("rational infinite path normalization") {
    GraphPtr g = Graph::rose(2);
    Path e1 = Path::edge(g, 0), e2 = Path::edge(g, 1);
    Path c = p(g, {0, 1}); // e1e2

    // c and c^2 induce the same tail
    CHECK(RationalInfinitePath(Path::vertex(g, 0), c) ==
          RationalInfinitePath(Path::vertex(g, 0), c.pow(2)));
    // e2 . (e1e2)^inf = (e2e1)^inf
    CHECK(RationalInfinitePath(e2, c) == RationalInfinitePath(Path::vertex(g, 0), p(g, {1, 0})));
    // prefix with a trailing copy of the period is stripped
    CHECK(RationalInfinitePath(concat(e1, c), c) == RationalInfinitePath(e1, c));
    // normalization is idempotent
    RationalInfinitePath rip(p(g, {1, 1, 0, 1}), c);
    CHECK(RationalInfinitePath(rip.prefix(), rip.period()) == rip);

    CHECK_THROWS_AS(RationalInfinitePath(e1, p(mixed_test_graph(), {0})), domain_error);
}

TEST_CASE("tail equivalence") {
    GraphPtr g = Graph::rose(2);
    Path v = Path::vertex(g, 0);
    RationalInfinitePath a(v, p(g, {0, 1}));
    RationalInfinitePath b(v, p(g, {1, 0}));
    CHECK(rational_tail_equivalent(a, b));
    CHECK(rational_tail_equivalent(a, RationalInfinitePath(v, p(g, {0, 1}).pow(2))));
    CHECK_FALSE(rational_tail_equivalent(RationalInfinitePath(v, p(g, {0})),
                                         RationalInfinitePath(v, p(g, {1}))));
    // prefixes never matter
    CHECK(rational_tail_equivalent(RationalInfinitePath(p(g, {1, 1, 0}), p(g, {0, 1})), a));
}

TEST_CASE("tau truncation") {
    GraphPtr g = Graph::rose(2);
    Path v = Path::vertex(g, 0);
    RationalInfinitePath e2inf(v, p(g, {1}));
    auto [pre, rest] = tau_truncate(e2inf, 2);
    CHECK(pre == p(g, {1, 1}));
    CHECK(rest == e2inf);

    auto [pre0, rest0] = tau_truncate(e2inf, 0);
    CHECK(pre0 == v);
    CHECK(rest0 == e2inf);

    RationalInfinitePath c12(v, p(g, {0, 1}));
    auto [pre3, rest3] = tau_truncate(c12, 3);
    CHECK(pre3 == p(g, {0, 1, 0}));
    CHECK(rest3 == RationalInfinitePath(v, p(g, {1, 0})));

    // round-trip: prefix + tail rebuild the path, for all n <= 4 |period|
    for (const auto& rip : {c12, RationalInfinitePath(p(g, {1, 1}), p(g, {0, 1}))}) {
        for (int n = 0; n <= 4 * rip.period().length(); ++n) {
            auto [a, b] = tau_truncate(rip, n);
            Path joined = concat(a, b.prefix().empty() ? Path::vertex(g, b.source()) : b.prefix());
            CHECK(RationalInfinitePath(joined, b.period()) == rip);
        }
    }
}

TEST_CASE("C_s membership") {
    GraphPtr g2 = Graph::rose(2);
    CHECK(in_Cs(p(g2, {1}), 2));          // e2
    CHECK(in_Cs(p(g2, {0, 1}), 2));       // e1 e2
    CHECK_FALSE(in_Cs(p(g2, {1, 0}), 2)); // must end with e2
    CHECK_FALSE(in_Cs(p(g2, {1, 1}), 2)); // e2 may appear only last
    CHECK(in_Cs(p(g2, {0, 0, 1}), 2));

    GraphPtr g3 = Graph::rose(3);
    CHECK(in_Cs(p(g3, {0, 2, 1}), 3));       // e1 e3 e2
    CHECK_FALSE(in_Cs(p(g3, {0, 1, 1}), 3)); // e2 in the interior
    CHECK_FALSE(in_Cs(p(g3, {2}), 3));       // ends with e3

    CHECK_THROWS_AS(in_Cs(p(g2, {1}), 3), domain_error);
    CHECK_THROWS_AS(in_Cs(p(mixed_test_graph(), {0}), 2), domain_error);
}

TEST_CASE("path order is total on small paths") {
    GraphPtr g = Graph::rose(2);
    std::vector<Path> all{Path::vertex(g, 0)};
    for (int len = 1; len <= 3; ++len)
        for (int mask = 0; mask < (1 << len); ++mask) {
            std::vector<int> es;
            for (int i = 0; i < len; ++i) es.push_back((mask >> i) & 1);
            all.push_back(Path::of_edges(g, es));
        }
    for (const Path& a : all)
        for (const Path& b : all) {
            bool lt = path_less(a, b), gt = path_less(b, a);
            CHECK_FALSE((lt && gt));
            CHECK(((a == b) == (!lt && !gt)));
        }
}
