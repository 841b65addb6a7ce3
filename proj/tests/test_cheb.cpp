#include "doctest.h"

#include "oracles.hpp"
#include "regspec/cheb.hpp"
#include "regspec/error.hpp"

using namespace regspec;

TEST_CASE("joukowski branch") {
    const auto a = joukowski(0.0);
    CHECK(std::abs(a.w - cplx(0, 1)) < 1e-14);
    const auto b = joukowski(1.25);
    CHECK(std::abs(b.w - 2.0) < 1e-14);
    for (cplx z : {cplx(0.3, 0.4), cplx(0.3, -0.4), cplx(-2.0, 0.1), cplx(5.0, -3.0)}) {
        const auto j = joukowski(z);
        CHECK(std::abs(j.w) >= 1.0);
        CHECK(std::abs((j.w + 1.0 / j.w) / 2.0 - z) < 1e-13);
        CHECK(std::abs(j.w * j.w - 2.0 * z * j.w + 1.0) < 1e-12);
    }
    CHECK(ellipse_radius(1.25) == doctest::Approx(2.0));
}

TEST_CASE("U_n against extended-precision recursion") {
    CHECK(cheb_u(-1, 0.4) == cplx(0, 0));
    CHECK(cheb_u(0, 0.4) == cplx(1, 0));
    const cplx z(0.3, 0.2);
    CHECK(std::abs(cheb_u(10, z) - oracle::cheb_u_long(10, z)) < 1e-12 * std::abs(oracle::cheb_u_long(10, z)));
    for (cplx x : {cplx(0.3, 0.2), cplx(-0.9, 0.05), cplx(1.2, 0.7), cplx(0.0, 2.0), cplx(0.5, 0.0)}) {
        for (int n = 0; n <= 60; n += 3) {
            const cplx want = oracle::cheb_u_long(n, x);
            CHECK(std::abs(cheb_u(n, x) - want) <= 1e-10 * std::max(1.0, std::abs(want)));
        }
    }
    // U_n(cos t) = sin((n+1)t)/sin t
    for (double t : {0.3, 1.1, 2.5}) {
        CHECK(cheb_u(7, std::cos(t)).real() == doctest::Approx(std::sin(8 * t) / std::sin(t)).epsilon(1e-12));
    }
}

TEST_CASE("U_n' against finite differences") {
    const double h = 1e-6;
    for (int n : {1, 2, 5, 9}) {
        for (double x : {0.7, -0.2, 1.4}) {
            const double fd = (cheb_u(n, x + h) - cheb_u(n, x - h)).real() / (2 * h);
            CHECK(cheb_u_prime(n, x).real() == doctest::Approx(fd).epsilon(1e-6));
        }
    }
    const cplx z(0.4, 0.3);
    const cplx fd = (cheb_u(6, z + h) - cheb_u(6, z - h)) / (2 * h);
    CHECK(std::abs(cheb_u_prime(6, z) - fd) < 1e-6 * std::abs(fd));
}

TEST_CASE("ellipse points") {
    const auto one = ellipse_points(2.0, 1);
    REQUIRE(one.size() == 1);
    CHECK(std::abs(one[0] - 1.25) < 1e-14);
    const auto four = ellipse_points(2.0, 4);
    for (cplx want : {cplx(1.25, 0), cplx(-1.25, 0), cplx(0, 0.75), cplx(0, -0.75)}) {
        bool found = false;
        for (auto z : four) {
            found = found || std::abs(z - want) < 1e-14;
        }
        CHECK(found);
    }
    for (auto z : ellipse_points(1.1, 64)) {
        CHECK(std::abs(z + std::sqrt(z - 1.0) * std::sqrt(z + 1.0)) == doctest::Approx(1.1).epsilon(1e-10));
    }
}

TEST_CASE("Chebyshev envelope on ellipses") {
    for (double r : {1.05, 1.5, 2.0}) {
        for (auto z : ellipse_points(r, 32)) {
            CHECK(cheb_bound_check(1, r, z));
            CHECK(cheb_bound_check(5, r, z));
            CHECK(cheb_bound_check(40, r, z));
        }
    }
    CHECK_THROWS_AS(cheb_bound_check(3, 2.0, cplx(0.0, 0.0)), Error);
}
