#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <utility>

namespace regspec {

enum class LawKind { Semicircle, KestenMcKay };

// Reference spectral law. `dilation` describes the law of dilation * X, so a
// Kesten-McKay(d) law can be compared directly with a spectrum of
// (d-1)^{-1/2} A by choosing dilation = (d-1)^{-1/2}.
struct LawSpec {
    LawKind kind = LawKind::Semicircle;
    std::size_t d = 0;
    double dilation = 1.0;

    static LawSpec semicircle();
    static LawSpec kesten_mckay(std::size_t d, double dilation = 1.0);

    std::pair<double, double> support() const;
};

double density(const LawSpec& law, double x);
double cdf(const LawSpec& law, double x);

// s(z) = -z/2 + sqrt(z^2 - 4)/2 on the branch with Im sqrt >= 0; Im z > 0.
std::complex<double> stieltjes_sc(std::complex<double> z);

// Catalan number C_{r/2} for even r, 0 for odd r.
double semicircle_moment(unsigned r);

// r-th moment of the Kesten-McKay(d) law by quadrature, rounded to the nearest
// integer (the moments are closed-walk counts).
double kesten_mckay_moment(unsigned r, std::size_t d);

// Closed walks of length r from the root of the infinite d-regular tree,
// counted by dynamic programming over the distance from the root.
std::uint64_t closed_walk_count(unsigned r, std::size_t d);

// Inverse CDF by bisection, p in [0, 1].
double quantile(const LawSpec& law, double p);

// Numerical integral of `law`'s density over [a, b].
double law_mass(const LawSpec& law, double a, double b);

} // namespace regspec
