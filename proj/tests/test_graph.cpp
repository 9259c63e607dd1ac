#include <doctest.h>

#include <random>
#include <sstream>

#include "core/errors.hpp"
#include "core/generators.hpp"
#include "core/graph.hpp"
#include "test_util.hpp"

using namespace qeg;

TEST_CASE("from_edge_list builds the stated graphs") {
    const auto k2 = Graph::from_edge_list(2, {{0, 1}});
    CHECK(k2.order() == 2);
    CHECK(k2.edge_count() == 1);
    CHECK(k2.has_edge(0, 1));
    CHECK(k2.has_edge(1, 0));

    const auto c4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(c4 == cycle(4));

    const auto c5 = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    const auto det = detect_srg(c5);
    CHECK(det.kind == SrgKind::srg);
    CHECK(det.params == SrgParams{5, 2, 0, 1});
}

TEST_CASE("from_edge_list collapses duplicates and validates input") {
    const auto g = Graph::from_edge_list(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(g.edge_count() == 1);

    CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 3}}), InputError);
    CHECK_THROWS_AS(Graph::from_edge_list(3, {{-1, 0}}), InputError);
    CHECK_THROWS_AS(Graph::from_edge_list(3, {{1, 1}}), InputError);
    CHECK_THROWS_AS(Graph(0), InputError);
}

TEST_CASE("complement of K4 is empty, and complement is an involution") {
    const auto empty = complete(4).complement();
    CHECK(empty.edge_count() == 0);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = test::random_graph(rng, 1 + trial % 13, 0.4);
        CHECK(g.complement().complement() == g);
        for (std::int64_t v = 0; v < g.order(); ++v) {
            CHECK(g.degree(v) + g.complement().degree(v) == g.order() - 1);
        }
    }
}

TEST_CASE("C5 is self-complementary") {
    const auto c5 = cycle(5);
    const auto co = c5.complement();
    CHECK(test::isomorphic_bruteforce(c5, co));
    const auto det = detect_srg(co);
    CHECK(det.kind == SrgKind::srg);
    CHECK(det.params == SrgParams{5, 2, 0, 1});
}

TEST_CASE("complement of p disjoint K_q is complete multipartite") {
    // two disjoint triangles -> K_{2x3}
    const auto two_k3 =
        Graph::from_edge_list(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK(two_k3.complement() == complete_multipartite({3, 3}));
}

TEST_CASE("distance matrix of complete graphs and the Petersen graph") {
    const auto dm = distance_matrix(complete(6));
    CHECK(dm.diameter == 1);
    for (std::int64_t x = 0; x < 6; ++x) {
        for (std::int64_t y = 0; y < 6; ++y) {
            CHECK(dm.at(x, y) == (x == y ? 0 : 1));
        }
    }

    const auto pet = distance_matrix(petersen());
    CHECK(pet.diameter == 2);
    for (std::int64_t x = 0; x < 10; ++x) {
        CHECK(pet.row_sum(x) == 15);  // 2n - 2 - k
    }
}

TEST_CASE("strongly regular graphs with mu >= 1 have diameter exactly 2") {
    for (const auto& g : {petersen(), clebsch(), shrikhande(), triangular(6), rook(4), paley(13)}) {
        CHECK(distance_matrix(g).diameter == 2);
    }
}

TEST_CASE("distance matrix properties on random connected graphs") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 25; ++trial) {
        const auto n = 2 + trial % 12;
        const auto g = test::random_connected_graph(rng, n, 0.45);
        const auto dm = distance_matrix(g);
        for (std::int64_t x = 0; x < n; ++x) {
            CHECK(dm.at(x, x) == 0);
            for (std::int64_t y = 0; y < n; ++y) {
                CHECK(dm.at(x, y) == dm.at(y, x));
                CHECK((dm.at(x, y) == 1) == g.has_edge(x, y));
                if (x != y) {
                    CHECK(dm.at(x, y) >= 1);
                }
                for (std::int64_t z = 0; z < n; ++z) {
                    CHECK(dm.at(x, z) <= dm.at(x, y) + dm.at(y, z));
                }
            }
        }
    }
}

TEST_CASE("distance matrix rejects disconnected graphs") {
    const auto g = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(distance_matrix(g), DisconnectedError);
    CHECK(!g.is_connected());
    CHECK(cycle(4).is_connected());
}

TEST_CASE("detect_srg on the named examples") {
    auto det = detect_srg(petersen());
    CHECK(det.kind == SrgKind::srg);
    CHECK(det.params == SrgParams{10, 3, 0, 1});

    det = detect_srg(shrikhande());
    CHECK(det.kind == SrgKind::srg);
    CHECK(det.params == SrgParams{16, 6, 2, 2});

    const auto p4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(detect_srg(p4).kind == SrgKind::not_srg);

    CHECK(detect_srg(cycle(6)).kind == SrgKind::not_srg);
}

TEST_CASE("detect_srg flags undetermined parameters instead of inventing them") {
    const auto comp = detect_srg(complete(5));
    CHECK(comp.kind == SrgKind::complete_graph);
    CHECK(comp.params.n == 5);
    CHECK(comp.params.k == 4);
    CHECK(comp.params.lambda == 3);
    CHECK(comp.params.mu == -1);  // sentinel: no non-adjacent pair exists

    const auto empty = detect_srg(Graph(4));
    CHECK(empty.kind == SrgKind::empty_graph);
    CHECK(empty.params.k == 0);
    CHECK(empty.params.lambda == -1);  // sentinel: no adjacent pair exists
    CHECK(empty.params.mu == 0);

    CHECK(detect_srg(Graph(1)).kind == SrgKind::complete_graph);
}

TEST_CASE("disconnected unions of complete graphs are the mu = 0 case") {
    const auto two_k3 =
        Graph::from_edge_list(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    const auto det = detect_srg(two_k3);
    CHECK(det.kind == SrgKind::srg);
    CHECK(det.params == SrgParams{6, 2, 1, 0});
}

TEST_CASE("edge list round trip with comments") {
    std::istringstream in(
        "# sample graph\n"
        "5 5   # n m\n"
        "0 1\n1 2\n2 3\n3 4\n4 0\n");
    const auto g = read_edge_list(in);
    CHECK(g == cycle(5));

    std::ostringstream out;
    write_edge_list(g, out);
    std::istringstream back(out.str());
    CHECK(read_edge_list(back) == g);
}

TEST_CASE("edge list parse failures") {
    std::istringstream missing("3");
    CHECK_THROWS_AS(read_edge_list(missing), ParseError);

    std::istringstream bad_token("3 1\n0 x\n");
    CHECK_THROWS_AS(read_edge_list(bad_token), ParseError);

    std::istringstream short_list("3 2\n0 1\n");
    CHECK_THROWS_AS(read_edge_list(short_list), ParseError);

    std::istringstream bad_vertex("3 1\n0 7\n");
    CHECK_THROWS_AS(read_edge_list(bad_vertex), InputError);

    CHECK_THROWS_AS(read_edge_list_file("/nonexistent/file.txt"), InputError);
}
