#include <numeric>

#include "doctest.h"

#include "regspec/eig.hpp"
#include "regspec/error.hpp"
#include "regspec/evec.hpp"
#include "regspec/rng.hpp"

using namespace regspec;

TEST_CASE("mass on a set") {
    std::vector<double> e1(5, 0.0);
    e1[1] = 1.0;
    const std::vector<Vertex> t1{1};
    CHECK(mass_on_set(e1, t1) == 1.0);
    CHECK(is_localized(e1, t1, 0.1));

    std::vector<double> uni(100, 0.1);
    std::vector<Vertex> ten(10);
    std::iota(ten.begin(), ten.end(), 0);
    CHECK(mass_on_set(uni, ten) == doctest::Approx(0.1));
    CHECK_FALSE(is_localized(uni, ten, 0.1));
    uni[3] = -0.1;
    CHECK(mass_on_set(uni, ten) == doctest::Approx(0.1));

    SeededRng rng(1, 0);
    std::vector<double> v(30);
    double norm = 0.0;
    for (auto& x : v) {
        x = rng.uniform01() - 0.5;
        norm += x * x;
    }
    for (auto& x : v) {
        x /= std::sqrt(norm);
    }
    std::vector<Vertex> all(30);
    std::iota(all.begin(), all.end(), 0);
    CHECK(mass_on_set(v, all) == doctest::Approx(1.0));
    // Top-L mass equals the best of every L-subset, checked exhaustively for L = 2.
    double best = 0.0;
    for (std::size_t i = 0; i < 30; ++i) {
        for (std::size_t j = i + 1; j < 30; ++j) {
            best = std::max(best, v[i] * v[i] + v[j] * v[j]);
        }
    }
    CHECK(top_mass(v, 2) == doctest::Approx(best).epsilon(1e-14));
    std::vector<double> bad{1.0, 1.0};
    CHECK_THROWS_AS(top_mass(bad, 1), Error);
}

TEST_CASE("forced verdicts") {
    const auto id = eig_symmetric(MatrixXr::Identity(12, 12), true);
    const auto loc = adversarial_localization(id, 1, 0.5, false);
    CHECK(loc.num_localized == 12);
    CHECK(loc.degenerate_clusters == 1);

    for (std::size_t n : {40, 100}) {
        const auto cyc = eig_symmetric(cycle_graph(n), 1.0, true);
        const auto r = adversarial_localization(cyc, (n + 9) / 10, 0.1, false);
        CHECK(r.num_localized == 0);
        CHECK(r.per_eigenvector.size() == n);
    }

    SeededRng rng(3, 0);
    const Graph g = sample_regular(300, 6, rng);
    const auto s = eig_symmetric(g, 1.0, true);
    const auto r = adversarial_localization(s, 1, 0.1, true);
    CHECK(r.excluded_perron);
    CHECK(r.per_eigenvector.size() == 299);
    CHECK(r.num_localized == 0);
}

TEST_CASE("l-infinity profile") {
    MatrixXr m = MatrixXr::Constant(4, 4, 1.0);
    const auto s = eig_symmetric(m, true);
    const auto prof = linf_profile(s);
    CHECK(prof.back() == doctest::Approx(0.5));
    const auto id = linf_profile(eig_symmetric(MatrixXr::Identity(3, 3), true));
    for (double x : id) {
        CHECK(x == doctest::Approx(1.0));
    }
}
