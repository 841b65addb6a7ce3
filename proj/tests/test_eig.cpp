#include <sstream>

#include "doctest.h"

#include "oracles.hpp"
#include "regspec/eig.hpp"
#include "regspec/error.hpp"
#include "regspec/rng.hpp"
#include "regspec/treespec.hpp"

using namespace regspec;

TEST_CASE("fixture spectra") {
    const auto c4 = eig_symmetric(cycle_graph(4), 1.0, false);
    const std::vector<double> want_c4{-2, 0, 0, 2};
    const auto k4 = eig_symmetric(complete_graph(4), 1.0, false);
    const std::vector<double> want_k4{-1, -1, -1, 3};
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(c4.values[i] == doctest::Approx(want_c4[i]).scale(1.0).epsilon(1e-13));
        CHECK(k4.values[i] == doctest::Approx(want_k4[i]).epsilon(1e-13));
    }
    const TreeShape shape{3, 3, TreeKind::AlmostRegular};
    const auto tree = eig_symmetric(build_tree(shape), 1.0 / std::sqrt(2.0), false);
    const auto exact = expanded_values(tree_char_poly_eigs(shape));
    REQUIRE(exact.size() == tree.size());
    for (std::size_t i = 0; i < exact.size(); ++i) {
        CHECK(std::abs(tree.values[i] - exact[i]) < 1e-8);
    }
}

TEST_CASE("random graph spectrum against generic eigensolver") {
    SeededRng rng(2, 0);
    const Graph g = sample_regular(120, 5, rng);
    const double scale = 0.5;
    const auto s = eig_symmetric(g, scale, true);
    const auto other = oracle::eigenvalues_generic(oracle::adjacency(g, scale));
    for (std::size_t i = 0; i < s.size(); ++i) {
        CHECK(std::abs(s.values[i] - other[i]) < 1e-9);
    }
    CHECK(max_residual(oracle::adjacency(g, scale), s) < 1e-12);
    CHECK(orthonormality_error(s) < 1e-12);
}

TEST_CASE("Perron vector") {
    const auto k4 = eig_symmetric(complete_graph(4), 1.0, true);
    const auto i = perron_index(k4, complete_graph(4));
    CHECK(k4.values[i] == doctest::Approx(3.0));
    for (Eigen::Index j = 0; j < 4; ++j) {
        CHECK(std::abs((*k4.vectors)(j, static_cast<Eigen::Index>(i))) == doctest::Approx(0.5));
    }
    const auto c6 = eig_symmetric(cycle_graph(6), 1.0, true);
    CHECK(c6.values[perron_index(c6, cycle_graph(6))] == doctest::Approx(2.0));

    SeededRng rng(4, 0);
    const Graph g = sample_regular(500, 4, rng);
    const auto s = eig_symmetric(g, 1.0, true);
    const auto p = perron_index(s, g);
    CHECK(s.values[p] == doctest::Approx(4.0).epsilon(1e-12));
    for (Eigen::Index j = 0; j < 500; ++j) {
        CHECK(std::abs(std::abs((*s.vectors)(j, static_cast<Eigen::Index>(p))) - 1.0 / std::sqrt(500.0)) < 1e-6);
    }
    const Graph two = disjoint_union(cycle_graph(3), cycle_graph(3));
    CHECK_THROWS_AS(perron_index(eig_symmetric(two, 1.0, true), two), Error);
}

TEST_CASE("size cap and CSV output") {
    CHECK_THROWS_AS(eig_symmetric(cycle_graph(50), 1.0, false, 10), Error);
    std::ostringstream os;
    write_spectrum_csv(eig_symmetric(complete_graph(4), 1.0, false), os);
    std::istringstream in(os.str());
    std::size_t lines = 0;
    for (std::string line; std::getline(in, line);) {
        ++lines;
    }
    CHECK(lines == 4);
}
