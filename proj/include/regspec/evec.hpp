#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "regspec/eig.hpp"
#include "regspec/graph.hpp"

namespace regspec {

// sum_{j in T} v(j)^2 for a unit vector v (checked to 1e-8).
double mass_on_set(std::span<const double> v, std::span<const Vertex> set);

// (T, delta) localization: mass_on_set(v, T) >= 1 - delta.
bool is_localized(std::span<const double> v, std::span<const Vertex> set, double delta);

// Largest mass any L-subset can carry: the sum of the L largest v(j)^2.
double top_mass(std::span<const double> v, std::size_t L);

struct EigenvectorVerdict {
    std::size_t index = 0;
    double max_mass_on_L = 0.0;
    bool localized = false;
    bool degenerate = false; // member of a numerically repeated eigenvalue cluster
};

struct DelocReport {
    std::vector<EigenvectorVerdict> per_eigenvector;
    std::size_t L = 0;
    double delta = 0.0;
    bool excluded_perron = false;
    std::size_t num_localized = 0;
    std::size_t degenerate_clusters = 0;
};

inline constexpr double kDegenerateGap = 1e-8;

// (L, delta) localization of every eigenvector against the adversarial set
// (its top-L coordinates). With exclude_perron the eigenvector of the largest
// eigenvalue is skipped.
DelocReport adversarial_localization(const Spectrum& s, std::size_t L, double delta,
                                     bool exclude_perron);

// max_j |v_i(j)| per eigenvector.
std::vector<double> linf_profile(const Spectrum& s);

} // namespace regspec
