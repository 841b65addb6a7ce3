#pragma once

#include <complex>
#include <vector>

namespace regspec {

using cplx = std::complex<double>;

// z = (w + 1/w) / 2 with the exterior root |w| >= 1. `root` is w - z, the
// square root of z^2 - 1 on that branch; its imaginary part is non-negative
// whenever Im z >= 0.
struct JoukowskiPair {
    cplx z;
    cplx w;
    cplx root;
};

JoukowskiPair joukowski(cplx z);

// |w| for z, i.e. the r such that z lies on the ellipse E_r (r = 1 on [-1, 1]).
double ellipse_radius(cplx z);

// Switch-over radius between recursion (|w| <= threshold) and closed form.
inline constexpr double kChebRecursionRadius = 1.0 + 1e-8;

// Chebyshev polynomial of the second kind, n >= -1.
cplx cheb_u(int n, cplx z);

// Derivative of U_n via the differentiated three-term recursion, n >= 0.
cplx cheb_u_prime(int n, cplx z);

// m points on E_r: z_k = (w_k + 1/w_k)/2 with w_k = r exp(2 pi i k / m).
std::vector<cplx> ellipse_points(double r, int m);

// Checks (r^n - r^-n)/(r + 1/r) <= |U_{n-1}(z)| <= (r^n - r^-n)/(r - 1/r) for z
// on E_r, with relative slack 1e-9. Throws Domain if z is off E_r by > 1e-6.
bool cheb_bound_check(int n, double r, cplx z);

} // namespace regspec
