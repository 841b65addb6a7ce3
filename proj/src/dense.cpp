#include "regspec/dense.hpp"

namespace regspec {

MatrixXr adjacency_matrix(const Graph& g, double scale) {
    const auto n = static_cast<Eigen::Index>(g.size());
    MatrixXr a = MatrixXr::Zero(n, n);
    for (Vertex u = 0; u < g.size(); ++u) {
        for (Vertex v : g.neighbors(u)) {
            a(u, v) = scale;
        }
    }
    return a;
}

namespace {

MatrixXc shifted(const Graph& g, double scale, std::complex<double> z) {
    MatrixXc m = adjacency_matrix(g, scale).cast<std::complex<double>>();
    m.diagonal().array() -= z;
    return m;
}

} // namespace

MatrixXc dense_resolvent(const Graph& g, double scale, std::complex<double> z) {
    const auto n = static_cast<Eigen::Index>(g.size());
    return shifted(g, scale, z).partialPivLu().solve(MatrixXc::Identity(n, n));
}

std::complex<double> resolvent_entry(const Graph& g, double scale, std::complex<double> z,
                                     Vertex row, Vertex col) {
    const auto n = static_cast<Eigen::Index>(g.size());
    VectorXc rhs = VectorXc::Zero(n);
    rhs(col) = 1.0;
    VectorXc x = shifted(g, scale, z).partialPivLu().solve(rhs);
    return x(row);
}

} // namespace regspec
