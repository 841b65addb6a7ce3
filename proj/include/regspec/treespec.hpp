#pragma once

#include <cstddef>
#include <vector>

#include "regspec/cheb.hpp"
#include "regspec/graph.hpp"

namespace regspec {

// Closed-form resolvent entries of the labeled trees, all for the scaled
// matrix (d-1)^{-1/2} H - z with Im z > 0. Chebyshev polynomials are
// evaluated at z/2.

// (root, root) entry of the almost-regular tree: -U_zeta(z/2) / U_{zeta+1}(z/2).
// Independent of d.
cplx phi_almost(std::size_t d, std::size_t zeta, cplx z);

// Same entry via the depth-zeta continued fraction x <- -1/(z + x), zeta+1 times.
cplx phi_continued_fraction(std::size_t zeta, cplx z);

// (root, leaf) entry of the almost-regular tree: -(d-1)^{-zeta/2} / U_{zeta+1}(z/2).
cplx psi_almost(std::size_t d, std::size_t zeta, cplx z);

// (root, root) entry of the d-regular tree of depth zeta >= 1.
cplx phi_regular(std::size_t d, std::size_t zeta, cplx z);

// The same entry by one continued-fraction step over d almost-regular subtrees:
// 1 / (-z - d/(d-1) phi_almost(zeta-1)).
cplx phi_regular_one_step(std::size_t d, std::size_t zeta, cplx z);

// (root, leaf) entry of the d-regular tree of depth zeta >= 1.
cplx psi_regular(std::size_t d, std::size_t zeta, cplx z);

struct TreeResolventValue {
    cplx phi;
    cplx psi;
    TreeShape shape;
    cplx z;
};

TreeResolventValue tree_resolvent(const TreeShape& shape, cplx z);

inline constexpr double kTreeSingularity = 1e-14;

// Envelope check of the tree-resolvent estimates on z/2 in E_r:
//   (i)   |phi_d - s(z)| <= C0 [2 r^{-2 zeta} / (1 - r^{-2 zeta - 2}) + 1/(d-1)]
//   (ii)  |psi|          <= r^{-zeta-1} (d-1)^{-zeta/2} 2 / (1 - r^{-2 zeta - 4})
//   (iii) |psi_d|        <= C0 r^{-zeta-1} (d-1)^{-zeta/2} / (1 - r^{-2 zeta - 4})
struct ResolventBoundsReport {
    std::size_t d = 0;
    std::size_t zeta = 0;
    double r = 0.0;
    double c0 = 0.0;
    std::size_t samples = 0;
    double ratio_phi_regular = 0.0;
    double ratio_psi = 0.0;
    double ratio_psi_regular = 0.0;
    double max_ratio = 0.0;
    bool pass = false;
};

inline constexpr double kResolventC0 = 100.0;

ResolventBoundsReport resolvent_bounds_check(std::size_t d, std::size_t zeta, double r,
                                             double c0 = kResolventC0, int samples = 64);

struct SpectrumEntry {
    double value;
    std::size_t multiplicity;
};

// Exact spectrum of (d-1)^{-1/2} H for the almost-regular tree, from the
// factorization of its characteristic polynomial into Chebyshev factors.
struct TreeSpectrum {
    std::vector<SpectrumEntry> entries; // strictly increasing values
    std::size_t total = 0;
};

TreeSpectrum tree_char_poly_eigs(const TreeShape& shape);

// Eigenvalues repeated by multiplicity, ascending.
std::vector<double> expanded_values(const TreeSpectrum& spectrum);

// Squared root coordinate of the eigenspace projection for eigenvalue
// `lambda` (full scale, i.e. 2x with x a zero of U_{zeta+1}):
// 2 U_zeta(x) / U'_{zeta+1}(x).
double root_mass(const TreeShape& shape, double lambda);

struct RootMass {
    double lambda;
    double mass;
};

// root_mass over all zeta+1 zeros of U_{zeta+1}, ascending in lambda.
std::vector<RootMass> root_masses(const TreeShape& shape);

} // namespace regspec
