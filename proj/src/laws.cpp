#include "regspec/laws.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "regspec/error.hpp"

namespace regspec {

namespace {

using boost::math::quadrature::gauss_kronrod;

constexpr double kPi = std::numbers::pi;
constexpr double kQuadTolerance = 1e-12;

double km_edge(std::size_t d) { return 2.0 * std::sqrt(static_cast<double>(d) - 1.0); }

double km_density(std::size_t d, double x) {
    const double dd = static_cast<double>(d);
    const double inner = 4.0 * (dd - 1.0) - x * x;
    if (inner <= 0.0) {
        return 0.0;
    }
    return dd * std::sqrt(inner) / (2.0 * kPi * (dd * dd - x * x));
}

double sc_density(double x) {
    const double inner = 4.0 - x * x;
    return inner <= 0.0 ? 0.0 : std::sqrt(inner) / (2.0 * kPi);
}

// Kesten-McKay mass on [-a, a sin(theta_hi)] after t = a sin(theta), which
// removes the square-root endpoint behaviour.
double km_mass_to(std::size_t d, double theta_hi) {
    const double dd = static_cast<double>(d);
    const double a = km_edge(d);
    auto integrand = [dd, a](double theta) {
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        return dd * a * a * c * c / (2.0 * kPi * (dd * dd - a * a * s * s));
    };
    return gauss_kronrod<double, 31>::integrate(integrand, -kPi / 2.0, theta_hi, 15,
                                                kQuadTolerance);
}

double km_cdf(std::size_t d, double x) {
    const double a = km_edge(d);
    if (x <= -a) {
        return 0.0;
    }
    if (x >= a) {
        return 1.0;
    }
    return std::clamp(km_mass_to(d, std::asin(x / a)), 0.0, 1.0);
}

double sc_cdf(double x) {
    if (x <= -2.0) {
        return 0.0;
    }
    if (x >= 2.0) {
        return 1.0;
    }
    const double value =
        0.5 + x * std::sqrt(4.0 - x * x) / (4.0 * kPi) + std::asin(x / 2.0) / kPi;
    return std::clamp(value, 0.0, 1.0);
}

void check_km(std::size_t d) {
    if (d < 3) {
        throw Error(ErrorKind::InvalidParameter, "Kesten-McKay law needs d >= 3");
    }
}

} // namespace

LawSpec LawSpec::semicircle() { return LawSpec{LawKind::Semicircle, 0, 1.0}; }

LawSpec LawSpec::kesten_mckay(std::size_t d, double dilation) {
    check_km(d);
    if (!(dilation > 0.0)) {
        throw Error(ErrorKind::InvalidParameter, "dilation must be positive");
    }
    return LawSpec{LawKind::KestenMcKay, d, dilation};
}

std::pair<double, double> LawSpec::support() const {
    const double edge = kind == LawKind::Semicircle ? 2.0 : km_edge(d);
    return {-edge * dilation, edge * dilation};
}

double density(const LawSpec& law, double x) {
    const double t = x / law.dilation;
    const double base = law.kind == LawKind::Semicircle ? sc_density(t) : km_density(law.d, t);
    return base / law.dilation;
}

double cdf(const LawSpec& law, double x) {
    const double t = x / law.dilation;
    return law.kind == LawKind::Semicircle ? sc_cdf(t) : km_cdf(law.d, t);
}

double law_mass(const LawSpec& law, double a, double b) {
    if (b <= a) {
        return 0.0;
    }
    return cdf(law, b) - cdf(law, a);
}

double quantile(const LawSpec& law, double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorKind::InvalidParameter, "quantile level must lie in [0, 1]");
    }
    auto [lo, hi] = law.support();
    for (int it = 0; it < 200 && hi - lo > 1e-15 * (1.0 + std::abs(lo)); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (cdf(law, mid) < p) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::complex<double> stieltjes_sc(std::complex<double> z) {
    if (!(z.imag() > 0.0)) {
        throw Error(ErrorKind::Precondition, "Stieltjes transform needs Im z > 0");
    }
    std::complex<double> root = std::sqrt(z * z - 4.0);
    if (root.imag() < 0.0) {
        root = -root;
    }
    return 0.5 * (-z + root);
}

double semicircle_moment(unsigned r) {
    if (r % 2 != 0) {
        return 0.0;
    }
    // C_k = prod_{j=2}^{k} (k + j) / j, exact in double for the sizes used here.
    const unsigned k = r / 2;
    double c = 1.0;
    for (unsigned j = 0; j < k; ++j) {
        c = c * 2.0 * (2.0 * j + 1.0) / (j + 2.0);
    }
    return std::round(c);
}

double kesten_mckay_moment(unsigned r, std::size_t d) {
    check_km(d);
    if (r % 2 != 0) {
        return 0.0;
    }
    const double dd = static_cast<double>(d);
    const double a = km_edge(d);
    auto integrand = [dd, a, r](double theta) {
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        return std::pow(a * s, static_cast<int>(r)) * dd * a * a * c * c /
               (2.0 * kPi * (dd * dd - a * a * s * s));
    };
    const double value =
        gauss_kronrod<double, 61>::integrate(integrand, -kPi / 2.0, kPi / 2.0, 20, 1e-14);
    return std::round(value);
}

std::uint64_t closed_walk_count(unsigned r, std::size_t d) {
    if (r % 2 != 0) {
        return 0;
    }
    // ways[k]: walks of the current length ending at distance k from the root.
    std::vector<std::uint64_t> ways(r / 2 + 2, 0);
    ways[0] = 1;
    for (unsigned step = 0; step < r; ++step) {
        std::vector<std::uint64_t> next(ways.size(), 0);
        for (std::size_t k = 0; k + 1 < ways.size(); ++k) {
            if (ways[k] == 0) {
                continue;
            }
            const std::uint64_t outward = k == 0 ? d : d - 1;
            next[k + 1] += ways[k] * outward;
            if (k > 0) {
                next[k - 1] += ways[k];
            }
        }
        ways = std::move(next);
    }
    return ways[0];
}

} // namespace regspec
