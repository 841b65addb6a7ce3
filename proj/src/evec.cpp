#include "regspec/evec.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "regspec/error.hpp"

namespace regspec {

namespace {

void require_unit(std::span<const double> v) {
    double norm2 = 0.0;
    for (double x : v) {
        norm2 += x * x;
    }
    if (std::abs(norm2 - 1.0) > 1e-8) {
        throw Error(ErrorKind::InvalidParameter, "vector is not normalized");
    }
}

const MatrixXr& require_vectors(const Spectrum& s) {
    if (!s.vectors) {
        throw Error(ErrorKind::MissingData, "spectrum has no eigenvectors");
    }
    return *s.vectors;
}

} // namespace

double mass_on_set(std::span<const double> v, std::span<const Vertex> set) {
    require_unit(v);
    double mass = 0.0;
    for (Vertex j : set) {
        if (j >= v.size()) {
            throw Error(ErrorKind::InvalidParameter, "set index out of range");
        }
        mass += v[j] * v[j];
    }
    return std::clamp(mass, 0.0, 1.0);
}

bool is_localized(std::span<const double> v, std::span<const Vertex> set, double delta) {
    return mass_on_set(v, set) >= 1.0 - delta;
}

double top_mass(std::span<const double> v, std::size_t L) {
    require_unit(v);
    if (L < 1 || L > v.size()) {
        throw Error(ErrorKind::InvalidParameter, "L must lie in [1, n]");
    }
    std::vector<double> squares(v.size());
    std::transform(v.begin(), v.end(), squares.begin(), [](double x) { return x * x; });
    std::nth_element(squares.begin(), squares.begin() + static_cast<std::ptrdiff_t>(L - 1),
                     squares.end(), std::greater<>());
    double mass = 0.0;
    for (std::size_t k = 0; k < L; ++k) {
        mass += squares[k];
    }
    return std::clamp(mass, 0.0, 1.0);
}

DelocReport adversarial_localization(const Spectrum& s, std::size_t L, double delta,
                                     bool exclude_perron) {
    const MatrixXr& vectors = require_vectors(s);
    const std::size_t n = s.size();
    if (L < 1 || L > n) {
        throw Error(ErrorKind::InvalidParameter, "L must lie in [1, n]");
    }
    DelocReport report;
    report.L = L;
    report.delta = delta;
    report.excluded_perron = exclude_perron;

    std::vector<char> degenerate(n, 0);
    for (std::size_t i = 0; i + 1 < n;) {
        std::size_t j = i;
        while (j + 1 < n && s.values[j + 1] - s.values[j] < kDegenerateGap) {
            ++j;
        }
        if (j > i) {
            ++report.degenerate_clusters;
            std::fill(degenerate.begin() + static_cast<std::ptrdiff_t>(i),
                      degenerate.begin() + static_cast<std::ptrdiff_t>(j + 1), 1);
        }
        i = j + 1;
    }

    const std::size_t end = exclude_perron && n > 0 ? n - 1 : n;
    for (std::size_t i = 0; i < end; ++i) {
        const auto col = vectors.col(static_cast<Eigen::Index>(i));
        EigenvectorVerdict verdict;
        verdict.index = i;
        verdict.max_mass_on_L = top_mass(std::span<const double>(col.data(), n), L);
        verdict.localized = verdict.max_mass_on_L >= 1.0 - delta;
        verdict.degenerate = degenerate[i] != 0;
        report.num_localized += verdict.localized ? 1 : 0;
        report.per_eigenvector.push_back(verdict);
    }
    return report;
}

std::vector<double> linf_profile(const Spectrum& s) {
    const MatrixXr& vectors = require_vectors(s);
    std::vector<double> out;
    out.reserve(s.size());
    for (Eigen::Index i = 0; i < vectors.cols(); ++i) {
        out.push_back(vectors.col(i).cwiseAbs().maxCoeff());
    }
    return out;
}

} // namespace regspec
