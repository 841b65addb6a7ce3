#include "regspec/cheb.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "regspec/error.hpp"

namespace regspec {

namespace {

cplx ipow(cplx base, unsigned exponent) {
    cplx result(1.0, 0.0);
    while (exponent != 0) {
        if (exponent & 1U) {
            result *= base;
        }
        base *= base;
        exponent >>= 1U;
    }
    return result;
}

} // namespace

JoukowskiPair joukowski(cplx z) {
    cplx root = std::sqrt(z * z - 1.0);
    if (root.imag() < 0.0) {
        root = -root;
    }
    cplx w = z + root;
    // Off the upper half-plane the Im >= 0 branch can land inside the unit
    // disk; take the other root there.
    if (std::abs(w) < 1.0 && std::abs(z - root) > std::abs(w)) {
        root = -root;
        w = z + root;
    }
    return {z, w, root};
}

double ellipse_radius(cplx z) { return std::abs(joukowski(z).w); }

cplx cheb_u(int n, cplx z) {
    if (n < -1) {
        throw Error(ErrorKind::Domain, "Chebyshev index must be >= -1");
    }
    if (n == -1) {
        return 0.0;
    }
    if (n == 0) {
        return 1.0;
    }
    const cplx w = joukowski(z).w;
    if (std::abs(w) <= kChebRecursionRadius) {
        cplx prev(0.0, 0.0);
        cplx cur(1.0, 0.0);
        for (int k = 1; k <= n; ++k) {
            cplx next = 2.0 * z * cur - prev;
            prev = cur;
            cur = next;
        }
        return cur;
    }
    // (w^{n+1} - w^{-(n+1)}) / (w - w^{-1}) = w^n (1 - w^{-2n-2}) / (1 - w^{-2})
    const cplx winv = 1.0 / w;
    const cplx winv2 = winv * winv;
    return ipow(w, static_cast<unsigned>(n)) *
           (1.0 - ipow(winv2, static_cast<unsigned>(n + 1))) / (1.0 - winv2);
}

cplx cheb_u_prime(int n, cplx z) {
    if (n < 0) {
        throw Error(ErrorKind::Domain, "derivative index must be >= 0");
    }
    cplx u_prev(0.0, 0.0); // U_{k-2}
    cplx u_cur(1.0, 0.0);  // U_{k-1}
    cplx d_prev(0.0, 0.0); // U'_{k-2}
    cplx d_cur(0.0, 0.0);  // U'_{k-1}
    for (int k = 1; k <= n; ++k) {
        cplx d_next = 2.0 * u_cur + 2.0 * z * d_cur - d_prev;
        cplx u_next = 2.0 * z * u_cur - u_prev;
        d_prev = d_cur;
        d_cur = d_next;
        u_prev = u_cur;
        u_cur = u_next;
    }
    return d_cur;
}

std::vector<cplx> ellipse_points(double r, int m) {
    if (!(r > 1.0) || m < 1) {
        throw Error(ErrorKind::InvalidParameter, "ellipse needs r > 1 and m >= 1");
    }
    std::vector<cplx> points;
    points.reserve(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        const cplx w = std::polar(r, 2.0 * std::numbers::pi * k / m);
        points.push_back(0.5 * (w + 1.0 / w));
    }
    return points;
}

bool cheb_bound_check(int n, double r, cplx z) {
    if (n < 1 || !(r > 1.0)) {
        throw Error(ErrorKind::InvalidParameter, "bound check needs n >= 1 and r > 1");
    }
    const double radius = ellipse_radius(z);
    if (std::abs(radius - r) > 1e-6) {
        throw Error(ErrorKind::Domain, "point is not on E_r (radius " + std::to_string(radius) + ")");
    }
    const double spread = std::pow(r, n) - std::pow(r, -n);
    const double lower = spread / (r + 1.0 / r);
    const double upper = spread / (r - 1.0 / r);
    const double value = std::abs(cheb_u(n - 1, z));
    const double slack = 1e-9 * std::max(1.0, upper);
    return value >= lower - slack && value <= upper + slack;
}

} // namespace regspec
