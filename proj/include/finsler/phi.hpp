#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "finsler/dual.hpp"
#include "finsler/errors.hpp"
#include "finsler/riccati_core.hpp"

namespace finsler {

/// phi, phi', phi'', phi''' at one s.
struct DerivStack {
    double phi = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
    double d3 = 0.0;
};

/// Open interval; the analytic domain of a phi family. Positivity of phi is
/// screened at the evaluation sites, not baked into the interval, so that
/// validity reports can flag it (a family like 1 + 2s is analytic
/// everywhere but positive only on part of the line).
struct PhiDomain {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    bool contains(double s) const { return s > lo && s < hi; }
    bool closure_contains(double s) const { return s >= lo && s <= hi; }
};

struct ConstantOnePhi {};

struct RandersPhi {
    double epsilon = 1.0;  // phi(s) = 1 + epsilon s
};

struct PolynomialPhi {
    std::vector<double> coeffs;  // phi(s) = sum coeffs[k] s^k
};

struct QuadraticRootPhi {
    double c0 = 1.0;  // phi(s) = sqrt(c0 + c1 s^2), c0 > 0
    double c1 = 0.0;
};

/// The u = n v family: phi(s) = phi_1(s / b) with phi_1 the b = 1 closed
/// form of riccati_core; c2 = phi(0). The component of s = 0 between
/// interior poles of psi is precomputed here (in t-units).
struct RiccatiPhi {
    double c0 = 1.0;
    double c1 = 1.0;
    double c2 = 1.0;
    double b = 1.0;
    double t_lo = -1.0;  // component of 0, filled by make()
    double t_hi = 1.0;

    static RiccatiPhi make(double c0, double c1, double c2 = 1.0, double b = 1.0) {
        if (!(c0 > 0.0)) throw DomainError("riccati phi: c0 must be > 0");
        if (c1 == 0.0) throw DomainError("riccati phi: c1 must be nonzero");
        if (!(c2 > 0.0)) throw DomainError("riccati phi: c2 must be > 0");
        if (!(b > 0.0)) throw DomainError("riccati phi: b must be > 0");
        RiccatiPhi p{c0, c1, c2, b, -1.0, 1.0};
        auto roots = riccati_core::denom_roots(c0, c1, riccati_core::denom_guard(c0, c1, 1.0));
        riccati_core::component_of_zero(roots, p.t_lo, p.t_hi);
        return p;
    }
};

/// Natural cubic spline through (s_k, phi_k); open domain (s_0, s_last).
struct TablePhi {
    std::vector<double> s;
    std::vector<double> phi;
    std::vector<double> m;  // spline second derivatives at the knots

    static TablePhi make(std::vector<double> s, std::vector<double> phi);
    int piece(double x) const;
};

using PhiVariant =
    std::variant<ConstantOnePhi, RandersPhi, PolynomialPhi, QuadraticRootPhi, RiccatiPhi, TablePhi>;

class PhiSpec {
public:
    PhiSpec() : v_(ConstantOnePhi{}) {}
    PhiSpec(PhiVariant v) : v_(std::move(v)) {}  // NOLINT

    static PhiSpec constant_one() { return PhiSpec(ConstantOnePhi{}); }
    static PhiSpec randers(double epsilon = 1.0) { return PhiSpec(RandersPhi{epsilon}); }
    static PhiSpec polynomial(std::vector<double> coeffs) { return PhiSpec(PolynomialPhi{std::move(coeffs)}); }
    static PhiSpec quadratic_root(double c0, double c1) {
        if (!(c0 > 0.0)) throw DomainError("quadratic-root phi: c0 must be > 0");
        return PhiSpec(QuadraticRootPhi{c0, c1});
    }
    static PhiSpec riccati(double c0, double c1, double c2 = 1.0, double b = 1.0) {
        return PhiSpec(RiccatiPhi::make(c0, c1, c2, b));
    }
    static PhiSpec table(std::vector<double> s, std::vector<double> phi) {
        return PhiSpec(TablePhi::make(std::move(s), std::move(phi)));
    }

    const PhiVariant& variant() const { return v_; }
    template <class F>
    auto visit(F&& f) const { return std::visit(std::forward<F>(f), v_); }

    PhiDomain domain() const;
    std::string family_name() const;

    /// phi and derivatives up to order 3 at s (interior of the domain).
    DerivStack derivs(double s) const;

    /// phi(s) over a plain double or a truncated jet of order <= 3. For
    /// quadrature-backed families the jet is expanded from the derivative
    /// stack at value(s), which is exact for nilpotent perturbations of
    /// that order.
    template <class T>
    T eval(const T& s) const;

    /// phi(b t) reparameterization used by beta normalization.
    PhiSpec rescale_argument(double b) const;

private:
    void require_inside(double s) const;
    PhiVariant v_;
};

// -- implementation (templated parts) --

namespace detail {

template <class T>
T horner(const std::vector<double>& c, const T& s) {
    if (c.empty()) return T(0.0);
    T acc(c.back());
    for (std::size_t k = c.size() - 1; k-- > 0;) acc = acc * s + c[k];
    return acc;
}

}  // namespace detail

template <class T>
T PhiSpec::eval(const T& s) const {
    require_inside(value(s));
    return visit([&](const auto& fam) -> T {
        using Fam = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<Fam, ConstantOnePhi>) {
            return T(1.0);
        } else if constexpr (std::is_same_v<Fam, RandersPhi>) {
            return 1.0 + fam.epsilon * s;
        } else if constexpr (std::is_same_v<Fam, PolynomialPhi>) {
            return detail::horner(fam.coeffs, s);
        } else if constexpr (std::is_same_v<Fam, QuadraticRootPhi>) {
            return sqrt(fam.c0 + fam.c1 * s * s);
        } else if constexpr (std::is_same_v<Fam, RiccatiPhi>) {
            double s0 = value(s);
            DerivStack st = derivs(s0);
            T ds = s - s0;
            return st.phi + ds * (st.d1 + ds * (st.d2 / 2.0 + ds * (st.d3 / 6.0)));
        } else {
            static_assert(std::is_same_v<Fam, TablePhi>);
            int k = fam.piece(value(s));
            double h = fam.s[k + 1] - fam.s[k];
            T a = (fam.s[k + 1] - s) / h;
            T bb = (s - fam.s[k]) / h;
            return a * fam.phi[k] + bb * fam.phi[k + 1] +
                   ((a * a * a - a) * fam.m[k] + (bb * bb * bb - bb) * fam.m[k + 1]) * (h * h) / 6.0;
        }
    });
}

}  // namespace finsler
