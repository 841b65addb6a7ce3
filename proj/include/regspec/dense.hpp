#pragma once

#include <complex>

#include <Eigen/Dense>

#include "regspec/graph.hpp"

namespace regspec {

using MatrixXr = Eigen::MatrixXd;
using VectorXr = Eigen::VectorXd;
using MatrixXc = Eigen::MatrixXcd;
using VectorXc = Eigen::VectorXcd;

// Dense 0-1 adjacency matrix multiplied by `scale`.
MatrixXr adjacency_matrix(const Graph& g, double scale = 1.0);

// (scale * A - z I)^{-1} by LU with partial pivoting.
MatrixXc dense_resolvent(const Graph& g, double scale, std::complex<double> z);

// Single entry of the resolvent via one linear solve against e_col.
std::complex<double> resolvent_entry(const Graph& g, double scale, std::complex<double> z,
                                     Vertex row, Vertex col);

} // namespace regspec
