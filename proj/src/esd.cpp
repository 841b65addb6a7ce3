#include "regspec/esd.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "regspec/error.hpp"

namespace regspec {

LocalLawParams LocalLawParams::make(double d, double alpha, double delta,
                                    std::optional<double> gamma) {
    LocalLawParams p;
    p.d = d;
    p.alpha = alpha;
    p.gamma = gamma;
    p.delta = delta;
    p.r = std::exp(std::pow(d, -alpha));
    p.eta = 0.5 * (p.r - 1.0 / p.r);
    p.validate();
    return p;
}

void LocalLawParams::validate() const {
    if (!(d > 1.0)) {
        throw Error(ErrorKind::InvalidParameter, "local law needs d > 1");
    }
    double alpha_max = 1.0;
    if (gamma) {
        if (!(*gamma > 0.0)) {
            throw Error(ErrorKind::InvalidParameter, "gamma must be positive");
        }
        alpha_max = std::min(1.0, 1.0 / *gamma);
    }
    if (!(alpha > 0.0 && alpha < alpha_max)) {
        throw Error(ErrorKind::InvalidParameter,
                    "alpha must lie in (0, " + std::to_string(alpha_max) + ")");
    }
    if (!(delta > 0.0 && delta < 1.0 / std::numbers::e)) {
        throw Error(ErrorKind::Precondition, "delta must lie in (0, 1/e)");
    }
    const double expected_r = std::exp(std::pow(d, -alpha));
    const double expected_eta = 0.5 * (expected_r - 1.0 / expected_r);
    if (std::abs(r - expected_r) > 1e-12 || std::abs(eta - expected_eta) > 1e-12) {
        throw Error(ErrorKind::InvalidParameter, "r/eta inconsistent with d and alpha");
    }
}

double LocalLawParams::min_interval_length() const {
    return std::max(2.0 * eta, eta / (-delta * std::log(delta)));
}

std::size_t count_interval(std::span<const double> values, double a, double b) {
    if (!(a < b)) {
        throw Error(ErrorKind::InvalidParameter, "interval needs a < b");
    }
    const auto lo = std::lower_bound(values.begin(), values.end(), a);
    const auto hi = std::lower_bound(values.begin(), values.end(), b);
    return static_cast<std::size_t>(hi - lo);
}

double ks_distance(std::span<const double> values, const LawSpec& law) {
    const std::size_t n = values.size();
    if (n == 0) {
        throw Error(ErrorKind::InvalidParameter, "empty spectrum");
    }
    const double nn = static_cast<double>(n);
    double worst = 0.0;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j < n && values[j] == values[i]) {
            ++j;
        }
        const double f = cdf(law, values[i]);
        worst = std::max({worst, std::abs(f - static_cast<double>(i) / nn),
                          std::abs(static_cast<double>(j) / nn - f)});
        i = j;
    }
    return worst;
}

std::complex<double> empirical_stieltjes(std::span<const double> values, std::complex<double> z) {
    if (!(z.imag() > 0.0)) {
        throw Error(ErrorKind::Precondition, "Stieltjes transform needs Im z > 0");
    }
    if (values.empty()) {
        throw Error(ErrorKind::InvalidParameter, "empty spectrum");
    }
    std::complex<double> total(0.0, 0.0);
    for (double lambda : values) {
        total += 1.0 / (lambda - z);
    }
    return total / static_cast<double>(values.size());
}

StieltjesError stieltjes_sup_error(std::span<const double> values, double eta, double d,
                                   std::span<const double> x_grid) {
    if (x_grid.empty()) {
        throw Error(ErrorKind::InvalidParameter, "empty x grid");
    }
    StieltjesError out;
    for (double x : x_grid) {
        const std::complex<double> z(x, eta);
        const double err = std::abs(empirical_stieltjes(values, z) - stieltjes_sc(z));
        if (err > out.error) {
            out.error = err;
            out.at_x = x;
        }
    }
    out.c_meas = out.error * d;
    return out;
}

std::vector<double> linear_grid(double lo, double hi, std::size_t count) {
    std::vector<double> grid;
    if (count == 1) {
        grid.push_back(0.5 * (lo + hi));
        return grid;
    }
    for (std::size_t k = 0; k < count; ++k) {
        grid.push_back(lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(count - 1));
    }
    return grid;
}

LocalLawReport local_law_sweep(std::span<const double> values, const LocalLawParams& params,
                               double pad) {
    params.validate();
    if (values.empty()) {
        throw Error(ErrorKind::InvalidParameter, "empty spectrum");
    }
    const double len = params.min_interval_length();
    const double start = -2.0 - pad;
    const double stop = std::max(2.0 + pad, values.back());
    const auto first =
        static_cast<long long>(std::floor(std::min(0.0, (values.front() - start) / len)));
    long long last = static_cast<long long>(std::ceil((stop - start) / len));
    // [start + last*len) must exclude nothing.
    while (start + static_cast<double>(last) * len <= stop) {
        ++last;
    }

    const auto sc = LawSpec::semicircle();
    LocalLawReport report;
    report.n = values.size();
    report.interval_length = len;
    const double nn = static_cast<double>(values.size());
    for (long long k = first; k < last; ++k) {
        IntervalRow row;
        row.a = start + static_cast<double>(k) * len;
        row.b = start + static_cast<double>(k + 1) * len;
        row.count = count_interval(values, row.a, row.b);
        row.predicted = nn * law_mass(sc, row.a, row.b);
        row.deviation = std::abs(static_cast<double>(row.count) - row.predicted) / (nn * len);
        report.max_deviation = std::max(report.max_deviation, row.deviation);
        report.intervals.push_back(row);
    }
    report.pass = report.max_deviation < params.delta;
    return report;
}

void write_csv(const LocalLawReport& report, std::ostream& out) {
    out << "a,b,N_I,predicted,deviation\n" << std::setprecision(17);
    for (const auto& row : report.intervals) {
        out << row.a << ',' << row.b << ',' << row.count << ',' << row.predicted << ','
            << row.deviation << '\n';
    }
}

SmoothingFunctional smoothing_functional(std::span<const double> values, double a, double b,
                                         double eta) {
    if (values.empty()) {
        throw Error(ErrorKind::InvalidParameter, "empty spectrum");
    }
    if (!(eta > 0.0) || !(a < b)) {
        throw Error(ErrorKind::InvalidParameter, "smoothing needs eta > 0 and a < b");
    }
    const double nn = static_cast<double>(values.size());
    SmoothingFunctional out;
    for (double lambda : values) {
        out.kernel_sum += (std::atan((b - lambda) / eta) - std::atan((a - lambda) / eta));
    }
    out.kernel_sum /= std::numbers::pi * nn;

    auto im_sn = [&](double x) {
        double total = 0.0;
        for (double lambda : values) {
            const double dx = lambda - x;
            total += eta / (dx * dx + eta * eta);
        }
        return total / nn;
    };
    // Break the range at eigenvalues so every piece holds at most one peak.
    std::vector<double> cuts{a};
    for (double lambda : values) {
        if (lambda > a && lambda < b) {
            cuts.push_back(lambda);
        }
    }
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    double integral = 0.0;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        if (cuts[k + 1] > cuts[k]) {
            integral += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
                im_sn, cuts[k], cuts[k + 1], 20, 1e-13);
        }
    }
    out.quadrature = integral / std::numbers::pi;
    out.agree = std::abs(out.kernel_sum - out.quadrature) <= 1e-8;
    return out;
}

} // namespace regspec
