#pragma once

// Closed-form machinery for the phi family solving u = n v, normalized to
// b = 1:
//
//   psi(t) = N(t) / D(t),   N(t) = c1 (1-c0) t + sqrt(1-t^2),
//                           D(t) = c1 c0 + t N(t),
//   phi(t) = c2 exp( int_0^t psi ).
//
// D is smooth on (-1,1) and its zeros are exactly the poles of psi; phi
// behaves like |t-t*|^rho near a simple zero t*, with rho = N(t*)/D'(t*).
// General b is handled one level up by evaluating at t = s/b.

#include <algorithm>
#include <cmath>
#include <vector>

#include "finsler/dual.hpp"
#include "finsler/errors.hpp"
#include "finsler/quadrature.hpp"

namespace finsler::riccati_core {

template <class T>
T numer(double c0, double c1, const T& t) {
    return c1 * (1.0 - c0) * t + sqrt(1.0 - t * t);
}

template <class T>
T denom(double c0, double c1, const T& t) {
    return c1 * c0 + t * numer(c0, c1, t);
}

template <class T>
T psi(double c0, double c1, const T& t) {
    return numer(c0, c1, t) / denom(c0, c1, t);
}

/// Relative guard band around D = 0.
inline double denom_guard(double c0, double c1, double b) {
    return 1e-9 * (std::fabs(c0 * c1) + b);
}

struct DenomRoot {
    double t;      // location in (-1,1)
    int order;     // 1 (sign change) or 2 (tangential touch)
    double rho;    // growth exponent of phi; 0 for order-2 roots
};

/// All interior zeros of D on (-1,1): sign-change bisection on a uniform
/// scan plus a derivative sign test that catches order-2 touch roots, which
/// produce no sign change (e.g. c0=1, c1=1/2 touching at -sqrt(2)/2).
inline std::vector<DenomRoot> denom_roots(double c0, double c1, double guard,
                                          int scan_points = 4096, double refine_tol = 1e-13) {
    auto D = [&](double t) { return denom(c0, c1, t); };
    auto Dp = [&](double t) {
        Dual<double> td{t, 1.0};
        return denom(c0, c1, td).d;
    };
    const double margin = 1e-12;
    const double lo = -1.0 + margin, hi = 1.0 - margin;
    std::vector<DenomRoot> roots;
    double prev_t = lo, prev_d = D(lo), prev_dp = Dp(lo);
    for (int k = 1; k <= scan_points; ++k) {
        double t = lo + (hi - lo) * k / scan_points;
        double d = D(t), dp = Dp(t);
        if (prev_d == 0.0) {
            roots.push_back({prev_t, 1, 0.0});
        } else if (prev_d * d < 0.0) {
            double a = prev_t, b = t, fa = prev_d;
            while (b - a > refine_tol) {
                double m = 0.5 * (a + b), fm = D(m);
                if (fa * fm <= 0.0) b = m; else { a = m; fa = fm; }
            }
            roots.push_back({0.5 * (a + b), 1, 0.0});
        } else if (prev_dp * dp < 0.0) {
            // critical point of D inside the cell: possible touch root
            double a = prev_t, b = t, fa = prev_dp;
            while (b - a > refine_tol) {
                double m = 0.5 * (a + b), fm = Dp(m);
                if (fa * fm <= 0.0) b = m; else { a = m; fa = fm; }
            }
            double tc = 0.5 * (a + b);
            if (std::fabs(D(tc)) < guard) roots.push_back({tc, 2, 0.0});
        }
        prev_t = t; prev_d = d; prev_dp = dp;
    }
    std::sort(roots.begin(), roots.end(), [](const DenomRoot& a, const DenomRoot& b) { return a.t < b.t; });
    std::vector<DenomRoot> merged;
    for (const auto& r : roots) {
        if (!merged.empty() && std::fabs(r.t - merged.back().t) < 1e-9) continue;
        merged.push_back(r);
    }
    for (auto& r : merged) {
        if (r.order == 1) {
            double dp = Dp(r.t);
            r.rho = (dp == 0.0) ? 0.0 : numer(c0, c1, r.t) / dp;
        }
    }
    return merged;
}

/// Connected component of t = 0 in (-1,1) minus the interior roots.
inline void component_of_zero(const std::vector<DenomRoot>& roots, double& lo, double& hi) {
    lo = -1.0;
    hi = 1.0;
    for (const auto& r : roots) {
        if (r.t < 0.0 && r.t > lo) lo = r.t;
        if (r.t > 0.0 && r.t < hi) hi = r.t;
    }
}

/// phi(t) = c2 * exp(int_{t_ref}^{t} psi); the caller guarantees the path
/// stays inside one component.
inline double phi_quadrature(double c0, double c1, double c2, double t_ref, double t,
                             const QuadratureOptions& opt = {}) {
    double integral = integrate([&](double tau) { return psi(c0, c1, tau); }, t_ref, t, opt);
    return c2 * std::exp(integral);
}

}  // namespace finsler::riccati_core
