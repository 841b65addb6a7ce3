#include "doctest.h"

#include "oracles.hpp"
#include "regspec/error.hpp"
#include "regspec/laws.hpp"

using namespace regspec;

TEST_CASE("densities and CDFs") {
    const auto sc = LawSpec::semicircle();
    CHECK(density(sc, 0.0) == doctest::Approx(1.0 / M_PI).epsilon(1e-14));
    CHECK(density(sc, 2.0) == 0.0);
    CHECK(density(sc, -2.0) == 0.0);
    CHECK(density(LawSpec::kesten_mckay(3), 0.0) ==
          doctest::Approx(3.0 * std::sqrt(8.0) / (2.0 * M_PI * 9.0)).epsilon(1e-14));
    CHECK(cdf(sc, 0.0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(cdf(sc, 2.0) == doctest::Approx(1.0));
    CHECK(cdf(LawSpec::kesten_mckay(4), 0.0) == doctest::Approx(0.5).epsilon(1e-12));

    // CDF against Simpson integration of the density.
    for (std::size_t d : {3, 5, 10}) {
        const auto km = LawSpec::kesten_mckay(d, 1.0 / std::sqrt(d - 1.0));
        const auto [lo, hi] = km.support();
        CHECK(cdf(km, hi) == doctest::Approx(1.0).epsilon(1e-10));
        for (double x : {-1.0, 0.3, 1.5}) {
            // sqrt edge singularity in the derivative: substitute x = lo + t^2.
            const double want = oracle::simpson(
                [&](double t) { return 2.0 * t * density(km, lo + t * t); }, 0.0, std::sqrt(x - lo), 4000);
            CHECK(cdf(km, x) == doctest::Approx(want).epsilon(1e-7));
        }
    }
    CHECK(quantile(sc, 0.5) == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    CHECK(cdf(sc, quantile(sc, 0.3)) == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(law_mass(sc, -0.2, 0.2) == doctest::Approx(cdf(sc, 0.2) - cdf(sc, -0.2)).epsilon(1e-10));
}

TEST_CASE("semicircle Stieltjes transform") {
    CHECK(std::abs(stieltjes_sc({0, 1}) - std::complex<double>(0, (std::sqrt(5.0) - 1) / 2)) < 1e-14);
    const auto s3 = stieltjes_sc({0, 3});
    CHECK(std::abs(s3.real()) < 1e-15);
    CHECK(s3.imag() > 0.0);
    CHECK(s3.imag() < 1.0 / 3.0);
    const std::complex<double> z(0.5, 0.1);
    const auto sc = LawSpec::semicircle();
    // x = 2 sin t removes the edge singularities.
    const auto quad = oracle::simpson(
        [&](double t) {
            const double x = 2.0 * std::sin(t);
            return std::complex<double>(density(sc, x) * 2.0 * std::cos(t)) / (x - z);
        },
        -M_PI / 2, M_PI / 2, 20000);
    CHECK(std::abs(stieltjes_sc(z) - quad) < 1e-6);
    CHECK_THROWS_AS(stieltjes_sc({1.0, 0.0}), Error);
}

TEST_CASE("moments") {
    CHECK(semicircle_moment(2) == 1.0);
    CHECK(semicircle_moment(4) == 2.0);
    CHECK(semicircle_moment(8) == 14.0);
    CHECK(semicircle_moment(7) == 0.0);
    CHECK(closed_walk_count(0, 5) == 1);
    CHECK(closed_walk_count(2, 7) == 7);
    CHECK(closed_walk_count(4, 3) == 15);
    for (std::size_t d = 3; d <= 6; ++d) {
        const Graph t = build_tree({d, 6, TreeKind::Regular});
        for (unsigned r = 0; r <= 10; ++r) {
            const auto walks = oracle::closed_walks_at(t, static_cast<Vertex>(t.size() - 1), r);
            CHECK(closed_walk_count(r, d) == walks);
            CHECK(kesten_mckay_moment(r, d) == static_cast<double>(walks));
        }
    }
}
