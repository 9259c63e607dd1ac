#include <doctest.h>

#include <cmath>
#include <random>

#include "core/errors.hpp"
#include "core/generators.hpp"
#include "core/qec.hpp"
#include "test_util.hpp"

using namespace qeg;

TEST_CASE("qec of complete graphs is -1") {
    const auto rep = qec_numeric(complete(5));
    CHECK(rep.qec == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(rep.qe_class == QeClass::yes);
    CHECK(rep.method == Method::numeric);
}

TEST_CASE("qec of C4 is 0 (boundary)") {
    const auto rep = qec_numeric(cycle(4));
    CHECK(std::abs(rep.qec) <= 1e-12);
    CHECK(rep.qe_class == QeClass::boundary);
}

TEST_CASE("qec of the Petersen graph is 0 and equals the closed form") {
    const auto cc = cross_check(petersen());
    REQUIRE(cc.has_closed_form);
    CHECK(std::abs(cc.numeric.report.qec) <= 1e-10);
    CHECK(cc.closed_form.qec == 0.0);
    CHECK(cc.difference <= 1e-8);
    CHECK(cc.values_agree);
}

TEST_CASE("qec of paley(13) matches the conference formula") {
    const double expected = (std::sqrt(13.0) - 3.0) / 2.0;  // ~ 0.3027756377
    const auto rep = qec_numeric(paley(13));
    CHECK(rep.qec == doctest::Approx(expected).epsilon(1e-10));
    CHECK(rep.qe_class == QeClass::no);
}

TEST_CASE("transmission regularity detection") {
    for (const auto& [g, n, k] : {std::tuple{petersen(), std::int64_t{10}, std::int64_t{3}},
                                  std::tuple{clebsch(), std::int64_t{16}, std::int64_t{5}},
                                  std::tuple{rook(3), std::int64_t{9}, std::int64_t{4}}}) {
        const auto tr = is_transmission_regular(g);
        CHECK(tr.regular);
        CHECK(tr.row_sum == 2 * n - 2 - k);
    }

    const auto path4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(!is_transmission_regular(path4).regular);

    CHECK(is_transmission_regular(cycle(6)).regular);
}

TEST_CASE("cross check on the Petersen graph ties all three views together") {
    const auto cc = cross_check(petersen());
    REQUIRE(cc.has_closed_form);
    CHECK(cc.params == SrgParams{10, 3, 0, 1});
    CHECK(cc.spectrum_ok);
    CHECK(cc.qec_equals_delta2);

    // D spectrum is 15 (x1), 0 (x4), -3 (x5): multiplicities g and f.
    const auto& spectrum = cc.numeric.distance_spectrum;
    REQUIRE(spectrum.size() == 10);
    CHECK(spectrum[0] == doctest::Approx(15.0).epsilon(1e-10));
    int zeros = 0, minus3 = 0;
    for (const double v : spectrum) {
        if (std::abs(v) < 1e-8) {
            ++zeros;
        } else if (std::abs(v + 3.0) < 1e-8) {
            ++minus3;
        }
    }
    CHECK(zeros == 4);
    CHECK(minus3 == 5);
}

TEST_CASE("cross check agreement on rook(4) and C5") {
    auto cc = cross_check(rook(4));
    REQUIRE(cc.has_closed_form);
    CHECK(cc.closed_form.qec == 0.0);
    CHECK(std::abs(cc.numeric.report.qec) <= 1e-10);
    CHECK(cc.values_agree);
    CHECK(cc.spectrum_ok);

    cc = cross_check(cycle(5));
    REQUIRE(cc.has_closed_form);
    CHECK(cc.difference <= 1e-12);
    CHECK(cc.closed_form.qec == doctest::Approx((std::sqrt(5.0) - 3.0) / 2.0).epsilon(1e-14));
}

TEST_CASE("cross check without a closed form on irregular graphs") {
    const auto path4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}});
    const auto cc = cross_check(path4);
    CHECK(!cc.has_closed_form);
    CHECK(cc.numeric.report.delta2 <= cc.numeric.report.qec + 1e-9);
    CHECK(cc.numeric.report.qec < cc.numeric.report.delta1);
}

TEST_CASE("complete graphs have no mu >= 1 closed form but numeric -1") {
    const auto cc = cross_check(complete(6));
    CHECK(!cc.has_closed_form);
    CHECK(cc.numeric.report.qec == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("numeric engine properties on random connected graphs") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        const std::int64_t n = 2 + static_cast<std::int64_t>(rng() % 18);
        const auto g = test::random_connected_graph(rng, n, 0.4);
        const auto result = qec_numeric_detailed(g);
        const auto& rep = result.report;

        CHECK(rep.delta2 <= rep.qec + 1e-9);
        CHECK(rep.qec < rep.delta1);
        CHECK(rep.qec >= -1.0 - 1e-9);

        // scale coherence of the reported maximizer
        const auto dm = distance_matrix(g);
        const auto& f = result.maximizer;
        double norm2 = 0.0, ones = 0.0, quad = 0.0;
        for (std::int64_t i = 0; i < n; ++i) {
            norm2 += f[i] * f[i];
            ones += f[i];
            for (std::int64_t j = 0; j < n; ++j) {
                quad += f[i] * dm.at(i, j) * f[j];
            }
        }
        CHECK(std::abs(norm2 - 1.0) <= 1e-12);
        CHECK(std::abs(ones) <= 1e-9);
        CHECK(std::abs(quad - rep.qec) <= 1e-8);

        if (is_transmission_regular(g).regular) {
            CHECK(std::abs(rep.qec - rep.delta2) <= 1e-9);
        }
    }
}

TEST_CASE("numeric engine rejects tiny and disconnected inputs") {
    CHECK_THROWS_AS(qec_numeric(Graph(1)), InputError);
    CHECK_THROWS_AS(qec_numeric(Graph::from_edge_list(4, {{0, 1}, {2, 3}})), DisconnectedError);
    CHECK_THROWS_AS(is_transmission_regular(Graph(3)), DisconnectedError);
}
