#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "regspec/dense.hpp"
#include "regspec/graph.hpp"

namespace regspec {

// Eigen-decomposition of scale * A. Values ascending; when present, column i
// of `vectors` is a unit eigenvector for values[i].
struct Spectrum {
    std::vector<double> values;
    std::optional<MatrixXr> vectors;
    double scale = 1.0;

    std::size_t size() const { return values.size(); }
    bool has_vectors() const { return vectors.has_value(); }
};

inline constexpr std::size_t kDenseCap = 6000;

// Householder tridiagonalization followed by implicit symmetric QR/QL sweeps.
Spectrum eig_symmetric(const Graph& g, double scale, bool want_vectors,
                       std::size_t max_n = kDenseCap);

// Same for an arbitrary real symmetric matrix (fixtures, diagnostics).
Spectrum eig_symmetric(const MatrixXr& m, bool want_vectors, std::size_t max_n = kDenseCap);

// max_i ||M v_i - lambda_i v_i||_inf / (1 + |lambda_i|)
double max_residual(const MatrixXr& m, const Spectrum& s);
// max |V'V - I|
double orthonormality_error(const Spectrum& s);

// Index of the eigenvalue d * scale of a connected d-regular graph. Throws
// NotFound when that eigenvalue is absent or repeated (disconnected input).
std::size_t perron_index(const Spectrum& s, const Graph& g);

void write_spectrum_csv(const Spectrum& s, std::ostream& out);
void write_vectors_csv(const Spectrum& s, std::ostream& out);

} // namespace regspec
