#include "regspec/treespec.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "regspec/error.hpp"
#include "regspec/laws.hpp"

namespace regspec {

namespace {

void require_upper(cplx z) {
    if (!(z.imag() > 0.0)) {
        throw Error(ErrorKind::Precondition, "tree resolvents need Im z > 0");
    }
}

void require_degree(std::size_t d) {
    if (d < 2) {
        throw Error(ErrorKind::InvalidParameter, "tree degree must be >= 2");
    }
}

cplx checked_inverse(cplx denominator) {
    if (std::abs(denominator) < kTreeSingularity) {
        throw Error(ErrorKind::Singularity, "Chebyshev denominator vanishes");
    }
    return 1.0 / denominator;
}

int as_index(std::size_t zeta) { return static_cast<int>(zeta); }

// U_{zeta+1}(z/2) - (d-1)^{-1} U_{zeta-1}(z/2)
cplx regular_denominator(std::size_t d, std::size_t zeta, cplx z) {
    const cplx half = 0.5 * z;
    return cheb_u(as_index(zeta) + 1, half) -
           cheb_u(as_index(zeta) - 1, half) / (static_cast<double>(d) - 1.0);
}

double leaf_decay(std::size_t d, std::size_t zeta) {
    return std::pow(static_cast<double>(d) - 1.0, -0.5 * static_cast<double>(zeta));
}

} // namespace

cplx phi_almost(std::size_t d, std::size_t zeta, cplx z) {
    require_degree(d);
    require_upper(z);
    const cplx half = 0.5 * z;
    return -cheb_u(as_index(zeta), half) * checked_inverse(cheb_u(as_index(zeta) + 1, half));
}

cplx phi_continued_fraction(std::size_t zeta, cplx z) {
    require_upper(z);
    cplx x(0.0, 0.0);
    for (std::size_t k = 0; k <= zeta; ++k) {
        x = -1.0 / (z + x);
    }
    return x;
}

cplx psi_almost(std::size_t d, std::size_t zeta, cplx z) {
    require_degree(d);
    require_upper(z);
    return -leaf_decay(d, zeta) * checked_inverse(cheb_u(as_index(zeta) + 1, 0.5 * z));
}

cplx phi_regular(std::size_t d, std::size_t zeta, cplx z) {
    require_degree(d);
    require_upper(z);
    if (zeta < 1) {
        throw Error(ErrorKind::InvalidParameter, "regular tree formulas need depth >= 1");
    }
    return -cheb_u(as_index(zeta), 0.5 * z) * checked_inverse(regular_denominator(d, zeta, z));
}

cplx phi_regular_one_step(std::size_t d, std::size_t zeta, cplx z) {
    if (zeta < 1) {
        throw Error(ErrorKind::InvalidParameter, "regular tree formulas need depth >= 1");
    }
    const double dd = static_cast<double>(d);
    return 1.0 / (-z - dd / (dd - 1.0) * phi_almost(d, zeta - 1, z));
}

cplx psi_regular(std::size_t d, std::size_t zeta, cplx z) {
    require_degree(d);
    require_upper(z);
    if (zeta < 1) {
        throw Error(ErrorKind::InvalidParameter, "regular tree formulas need depth >= 1");
    }
    return -leaf_decay(d, zeta) * checked_inverse(regular_denominator(d, zeta, z));
}

TreeResolventValue tree_resolvent(const TreeShape& shape, cplx z) {
    if (shape.kind == TreeKind::AlmostRegular) {
        return {phi_almost(shape.d, shape.zeta, z), psi_almost(shape.d, shape.zeta, z), shape, z};
    }
    return {phi_regular(shape.d, shape.zeta, z), psi_regular(shape.d, shape.zeta, z), shape, z};
}

ResolventBoundsReport resolvent_bounds_check(std::size_t d, std::size_t zeta, double r, double c0,
                                             int samples) {
    require_degree(d);
    if (!(r > 1.0) || samples < 1) {
        throw Error(ErrorKind::InvalidParameter, "bounds check needs r > 1 and samples >= 1");
    }
    const double rz = std::pow(r, -static_cast<double>(zeta));
    if (!(rz < 0.5)) {
        throw Error(ErrorKind::Precondition,
                    "r^-zeta = " + std::to_string(rz) + " is not below 1/2");
    }
    const double z_ = static_cast<double>(zeta);
    const double dm1 = static_cast<double>(d) - 1.0;
    const double bound_phi_d =
        c0 * (2.0 * std::pow(r, -2.0 * z_) / (1.0 - std::pow(r, -2.0 * z_ - 2.0)) + 1.0 / dm1);
    const double leaf_scale = std::pow(r, -z_ - 1.0) * std::pow(dm1, -z_ / 2.0) /
                              (1.0 - std::pow(r, -2.0 * z_ - 4.0));
    const double bound_psi = 2.0 * leaf_scale;
    const double bound_psi_d = c0 * leaf_scale;

    ResolventBoundsReport report;
    report.d = d;
    report.zeta = zeta;
    report.r = r;
    report.c0 = c0;
    // Upper half of E_r only; the lower half gives complex conjugates.
    for (int k = 0; k < samples; ++k) {
        const double angle = std::numbers::pi * (k + 0.5) / samples;
        const cplx w = std::polar(r, angle);
        const cplx z = w + 1.0 / w; // z/2 on E_r
        report.ratio_phi_regular = std::max(
            report.ratio_phi_regular, std::abs(phi_regular(d, zeta, z) - stieltjes_sc(z)) / bound_phi_d);
        report.ratio_psi = std::max(report.ratio_psi, std::abs(psi_almost(d, zeta, z)) / bound_psi);
        report.ratio_psi_regular =
            std::max(report.ratio_psi_regular, std::abs(psi_regular(d, zeta, z)) / bound_psi_d);
        ++report.samples;
    }
    report.max_ratio =
        std::max({report.ratio_phi_regular, report.ratio_psi, report.ratio_psi_regular});
    report.pass = report.max_ratio <= 1.0;
    return report;
}

TreeSpectrum tree_char_poly_eigs(const TreeShape& shape) {
    require_degree(shape.d);
    if (shape.kind != TreeKind::AlmostRegular) {
        throw Error(ErrorKind::InvalidParameter,
                    "characteristic polynomial factorization is for almost-regular trees");
    }
    struct Raw {
        std::size_t p;
        std::size_t q; // eigenvalue 2 cos(p pi / q), p/q in lowest terms
        std::size_t multiplicity;
    };
    std::vector<Raw> raw;
    const std::size_t zeta = shape.zeta;
    const std::size_t branch = shape.d - 1;
    std::size_t layer = 1; // (d-1)^i
    for (std::size_t i = 0; i <= zeta; ++i) {
        const std::size_t order = zeta + 1 - i; // U_order contributes its zeros
        const std::size_t mult = i == 0 ? 1 : layer - layer / branch;
        if (mult > 0) {
            for (std::size_t j = 1; j <= order; ++j) {
                const std::size_t g = std::gcd(j, order + 1);
                raw.push_back({j / g, (order + 1) / g, mult});
            }
        }
        layer *= branch;
    }
    std::vector<SpectrumEntry> values;
    values.reserve(raw.size());
    for (const auto& item : raw) {
        const double angle = std::numbers::pi * static_cast<double>(item.p) /
                             static_cast<double>(item.q);
        values.push_back({2.0 * std::cos(angle), item.multiplicity});
    }
    std::sort(values.begin(), values.end(),
              [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.value < b.value; });

    TreeSpectrum spectrum;
    for (const auto& entry : values) {
        if (!spectrum.entries.empty() &&
            std::abs(spectrum.entries.back().value - entry.value) <= 1e-12) {
            spectrum.entries.back().multiplicity += entry.multiplicity;
        } else {
            spectrum.entries.push_back(entry);
        }
        spectrum.total += entry.multiplicity;
    }
    return spectrum;
}

std::vector<double> expanded_values(const TreeSpectrum& spectrum) {
    std::vector<double> out;
    out.reserve(spectrum.total);
    for (const auto& entry : spectrum.entries) {
        out.insert(out.end(), entry.multiplicity, entry.value);
    }
    return out;
}

double root_mass(const TreeShape& shape, double lambda) {
    require_degree(shape.d);
    if (shape.kind != TreeKind::AlmostRegular) {
        throw Error(ErrorKind::InvalidParameter, "root masses are for almost-regular trees");
    }
    const int order = as_index(shape.zeta) + 1;
    const cplx x(0.5 * lambda, 0.0);
    if (std::abs(cheb_u(order, x)) > 1e-8) {
        throw Error(ErrorKind::Domain, "lambda = " + std::to_string(lambda) +
                                           " is not twice a zero of U_{zeta+1}");
    }
    return (2.0 * cheb_u(order - 1, x) / cheb_u_prime(order, x)).real();
}

std::vector<RootMass> root_masses(const TreeShape& shape) {
    const std::size_t order = shape.zeta + 1;
    std::vector<RootMass> out;
    for (std::size_t j = order; j >= 1; --j) {
        const double lambda =
            2.0 * std::cos(std::numbers::pi * static_cast<double>(j) / static_cast<double>(order + 1));
        out.push_back({lambda, root_mass(shape, lambda)});
    }
    return out;
}

} // namespace regspec
