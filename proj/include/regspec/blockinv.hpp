#pragma once

#include <complex>
#include <cstddef>

#include "regspec/dense.hpp"
#include "regspec/graph.hpp"

namespace regspec {

// M = [[A, B], [B', D]] with A (n x n) and D (m x m) complex symmetric and
// B (n x m) real.
struct Block2x2 {
    MatrixXc a;
    MatrixXr b;
    MatrixXc d;

    MatrixXc assemble() const;
};

enum class SchurRoute {
    F, // F = D - B' A^{-1} B
    G, // G = A - B D^{-1} B'
};

inline constexpr double kMaxCondition = 1e12;

// Full inverse of the assembled matrix by the chosen Schur-complement route.
// Throws Singularity naming the offending block when A, D, F or G is
// numerically singular (reciprocal condition estimate below 1e-12).
MatrixXc schur_inverse(const Block2x2& blk, SchurRoute route);

// Reference inverse by LU with partial pivoting on the assembled matrix.
MatrixXc direct_inverse(const MatrixXc& m);

struct EpsilonEstimate {
    std::complex<double> epsilon;
    double bound = 0.0;
    double r = 0.0; // z/2 lies on E_r
    bool within_bound = false;
};

// epsilon = ((d-1)^{-1/2} A - z)^{-1}_{root,root} - ((d-1)^{-1/2} H_d - z)^{-1}_{root,root},
// where H_d is the subgraph induced on the depth-zeta ball around root, set
// against (2 C0^2 / (1 - r^{-2 zeta - 4})) r^{-2 zeta - 2} / Im z.
// Requires the (zeta + 1)-neighborhood of root to be acyclic.
EpsilonEstimate epsilon_root_estimate(const Graph& g, Vertex root, std::size_t d,
                                      std::size_t zeta, std::complex<double> z,
                                      double c0 = 100.0);

} // namespace regspec
