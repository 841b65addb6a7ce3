#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "regspec/laws.hpp"

namespace regspec {

// Local-law scale: r = exp(d^-alpha), eta = (r - 1/r)/2, with 0 < delta < 1/e.
// When gamma is given (d = (log n)^gamma) alpha must also satisfy alpha < 1/gamma.
struct LocalLawParams {
    double d = 0.0;
    double alpha = 0.0;
    std::optional<double> gamma;
    double eta = 0.0;
    double r = 0.0;
    double delta = 0.0;

    static LocalLawParams make(double d, double alpha, double delta,
                               std::optional<double> gamma = std::nullopt);

    // Throws InvalidParameter/Precondition when the stored fields are
    // inconsistent or out of range.
    void validate() const;

    // max{2 eta, eta / (-delta log delta)}
    double min_interval_length() const;
};

// #{i : a <= values[i] < b}; `values` sorted ascending.
std::size_t count_interval(std::span<const double> values, double a, double b);

// sup_x |F_emp(x) - F_law(x)| over both sides of every jump; `values` sorted.
double ks_distance(std::span<const double> values, const LawSpec& law);

// (1/n) sum 1/(lambda_i - z), Im z > 0.
std::complex<double> empirical_stieltjes(std::span<const double> values, std::complex<double> z);

struct StieltjesError {
    double error = 0.0;   // max over the grid of |s_n - s|
    double at_x = 0.0;    // grid point attaining it
    double c_meas = 0.0;  // error * d
};

StieltjesError stieltjes_sup_error(std::span<const double> values, double eta, double d,
                                   std::span<const double> x_grid);

// Evenly spaced grid of `count` points on [lo, hi].
std::vector<double> linear_grid(double lo, double hi, std::size_t count);

struct IntervalRow {
    double a = 0.0;
    double b = 0.0;
    std::size_t count = 0;
    double predicted = 0.0;
    double deviation = 0.0; // |N_I - predicted| / (n |I|)
};

struct LocalLawReport {
    std::vector<IntervalRow> intervals;
    double interval_length = 0.0;
    double max_deviation = 0.0;
    std::size_t n = 0;
    bool pass = false;
};

inline constexpr double kLocalLawPad = 0.5;

// Tiles [-2 - pad, 2 + pad] (extended by whole tiles to reach any outlying
// eigenvalue) with half-open intervals of the minimum admissible length and
// compares each count with n times the semicircle mass.
LocalLawReport local_law_sweep(std::span<const double> values, const LocalLawParams& params,
                               double pad = kLocalLawPad);

void write_csv(const LocalLawReport& report, std::ostream& out);

struct SmoothingFunctional {
    double kernel_sum = 0.0; // (1/n) sum_i F(lambda_i), arctan form
    double quadrature = 0.0; // (1/pi) int_I Im s_n(x + i eta) dx
    bool agree = false;      // |difference| <= 1e-8
};

// F(y) = (1/pi) int_I eta / (eta^2 + (y - x)^2) dx evaluated two ways.
SmoothingFunctional smoothing_functional(std::span<const double> values, double a, double b,
                                         double eta);

} // namespace regspec
