#include "regspec/eig.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <string>

#include "regspec/error.hpp"

namespace regspec {

Spectrum eig_symmetric(const MatrixXr& m, bool want_vectors, std::size_t max_n) {
    if (m.rows() != m.cols()) {
        throw Error(ErrorKind::InvalidParameter, "matrix is not square");
    }
    if (static_cast<std::size_t>(m.rows()) > max_n) {
        throw Error(ErrorKind::Capacity, "dense eigensolver is capped at n=" + std::to_string(max_n));
    }
    Spectrum out;
    if (m.rows() == 0) {
        return out;
    }
    Eigen::SelfAdjointEigenSolver<MatrixXr> solver(
        m, want_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorKind::Convergence, "symmetric QR iteration did not converge");
    }
    const VectorXr& values = solver.eigenvalues(); // ascending
    out.values.assign(values.data(), values.data() + values.size());
    if (want_vectors) {
        out.vectors = solver.eigenvectors();
    }
    return out;
}

Spectrum eig_symmetric(const Graph& g, double scale, bool want_vectors, std::size_t max_n) {
    if (g.size() > max_n) {
        throw Error(ErrorKind::Capacity, "dense eigensolver is capped at n=" + std::to_string(max_n));
    }
    Spectrum out = eig_symmetric(adjacency_matrix(g, scale), want_vectors, max_n);
    out.scale = scale;
    return out;
}

double max_residual(const MatrixXr& m, const Spectrum& s) {
    if (!s.vectors) {
        throw Error(ErrorKind::MissingData, "spectrum has no eigenvectors");
    }
    const MatrixXr& v = *s.vectors;
    const MatrixXr mv = m * v;
    double worst = 0.0;
    for (Eigen::Index i = 0; i < v.cols(); ++i) {
        const double lambda = s.values[static_cast<std::size_t>(i)];
        const double res = (mv.col(i) - lambda * v.col(i)).cwiseAbs().maxCoeff();
        worst = std::max(worst, res / (1.0 + std::abs(lambda)));
    }
    return worst;
}

double orthonormality_error(const Spectrum& s) {
    if (!s.vectors) {
        throw Error(ErrorKind::MissingData, "spectrum has no eigenvectors");
    }
    const MatrixXr& v = *s.vectors;
    const MatrixXr gram = v.transpose() * v;
    return (gram - MatrixXr::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

std::size_t perron_index(const Spectrum& s, const Graph& g) {
    const auto d = g.degree();
    if (!d) {
        throw Error(ErrorKind::InvalidParameter, "Perron index needs a regular graph");
    }
    const double target = static_cast<double>(*d) * s.scale;
    std::size_t hits = 0;
    std::size_t index = 0;
    for (std::size_t i = 0; i < s.values.size(); ++i) {
        if (std::abs(s.values[i] - target) <= 1e-6) {
            ++hits;
            index = i;
        }
    }
    if (hits != 1) {
        throw Error(ErrorKind::NotFound,
                    hits == 0 ? "no eigenvalue at d*scale"
                              : "eigenvalue d*scale is repeated; graph is disconnected");
    }
    return index;
}

void write_spectrum_csv(const Spectrum& s, std::ostream& out) {
    out << std::setprecision(17);
    for (double v : s.values) {
        out << v << '\n';
    }
}

void write_vectors_csv(const Spectrum& s, std::ostream& out) {
    if (!s.vectors) {
        throw Error(ErrorKind::MissingData, "spectrum has no eigenvectors");
    }
    const MatrixXr& v = *s.vectors;
    out << std::setprecision(17);
    // One row per vertex, one column per eigenvector (aligned with values).
    for (Eigen::Index row = 0; row < v.rows(); ++row) {
        for (Eigen::Index col = 0; col < v.cols(); ++col) {
            if (col > 0) {
                out << ',';
            }
            out << v(row, col);
        }
        out << '\n';
    }
}

} // namespace regspec
