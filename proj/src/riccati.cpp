#include "finsler/riccati.hpp"

#include <cmath>
#include <sstream>

#include "finsler/invariants.hpp"
#include "finsler/quadrature.hpp"
#include "finsler/riccati_core.hpp"

namespace finsler {

namespace rc = riccati_core;

RiccatiParams RiccatiParams::make(double c0, double c1, double c2, double b) {
    if (!(c0 > 0.0)) throw DomainError("riccati params: c0 must be > 0");
    if (c1 == 0.0) throw DomainError("riccati params: c1 must be nonzero");
    if (!(c2 > 0.0)) throw DomainError("riccati params: c2 must be > 0");
    if (!(b > 0.0)) throw DomainError("riccati params: b must be > 0");
    return {c0, c1, c2, b};
}

std::string to_string(SingularityKind k) {
    switch (k) {
        case SingularityKind::PoleLike: return "pole-like";
        case SingularityKind::Vanishing: return "vanishing";
        default: return "bounded-derivative-blowup";
    }
}

namespace {

double to_t(const RiccatiParams& p, double s, const char* who) {
    if (!(std::fabs(s) < p.b)) {
        std::ostringstream os;
        os << who << ": s = " << s << " outside (-b, b) with b = " << p.b;
        throw DomainError(os.str());
    }
    return s / p.b;
}

void guard_denom(const RiccatiParams& p, double t, double s, const char* who) {
    double d = rc::denom(p.c0, p.c1, t);
    if (std::fabs(d) < rc::denom_guard(p.c0, p.c1, 1.0)) {
        std::ostringstream os;
        os << who << ": s = " << s << " is inside the guard band of a singularity";
        throw SingularityError(os.str(), s);
    }
}

}  // namespace

double psi_closed(const RiccatiParams& p, double s) {
    double t = to_t(p, s, "psi_closed");
    guard_denom(p, t, s, "psi_closed");
    return rc::psi(p.c0, p.c1, t) / p.b;
}

double phi_by_quadrature(const RiccatiParams& p, double s_ref, double s) {
    double t_ref = to_t(p, s_ref, "phi_by_quadrature");
    double t = to_t(p, s, "phi_by_quadrature");
    double lo = std::min(t_ref, t), hi = std::max(t_ref, t);
    auto roots = rc::denom_roots(p.c0, p.c1, rc::denom_guard(p.c0, p.c1, 1.0));
    for (const auto& r : roots) {
        if (r.t >= lo && r.t <= hi) {
            std::ostringstream os;
            os << "phi_by_quadrature: integration blocked by the singularity at s = "
               << r.t * p.b;
            throw SingularityError(os.str(), r.t * p.b);
        }
    }
    return rc::phi_quadrature(p.c0, p.c1, p.c2, t_ref, t);
}

double riccati_residual(const RiccatiParams& p, double s) {
    double t = to_t(p, s, "riccati_residual");
    guard_denom(p, t, s, "riccati_residual");
    D1 tj{t, 1.0};
    D1 pj = rc::psi(p.c0, p.c1, tj);
    double ps = pj.v, dps = pj.d;
    double ic0 = 1.0 / p.c0;
    double rhs = (((1.0 + ic0) * t * t - 1.0) * ps * ps + (1.0 - 2.0 * ic0) * t * ps +
                  (ic0 - 1.0)) /
                 (1.0 - t * t);
    return dps - rhs;
}

NormSpec riccati_norm(const RiccatiParams& p, int n) {
    Eigen::VectorXd beta = Eigen::VectorXd::Zero(n);
    beta[0] = p.b;
    return NormSpec(n, beta, PhiSpec::riccati(p.c0, p.c1, p.c2, p.b));
}

double ode_u_equals_nv_residual(const RiccatiParams& p, double s, int n) {
    NormSpec spec = riccati_norm(p, n);
    ScalarInvariants sc = uvwq(spec, s);
    return sc.u - n * sc.v;
}

SingularitySet singularities(const RiccatiParams& p) {
    SingularitySet set;
    auto roots = rc::denom_roots(p.c0, p.c1, rc::denom_guard(p.c0, p.c1, 1.0));
    for (const auto& r : roots) {
        Singularity s;
        s.s = r.t * p.b;
        s.order = r.order;
        s.growth_exponent = r.rho;
        if (r.order == 2) {
            // phi -> +inf on one side of a touch root; not extendable
            s.kind = SingularityKind::PoleLike;
        } else {
            s.kind = (r.rho < 0.0) ? SingularityKind::PoleLike : SingularityKind::Vanishing;
        }
        set.interior.push_back(s);
    }
    return set;
}

SInterval maximal_interval(const RiccatiParams& p, double s_anchor, int n, int grid_samples) {
    double t_anchor = to_t(p, s_anchor, "maximal_interval");
    guard_denom(p, t_anchor, s_anchor, "maximal_interval");

    auto roots = rc::denom_roots(p.c0, p.c1, rc::denom_guard(p.c0, p.c1, 1.0));
    double t_lo = -1.0, t_hi = 1.0;
    for (const auto& r : roots) {
        if (r.t < t_anchor && r.t > t_lo) t_lo = r.t;
        if (r.t > t_anchor && r.t < t_hi) t_hi = r.t;
    }

    // validity sweep over the component; shrink to the contiguous block of
    // passing samples around the anchor
    const double pad = 1e-9 * (t_hi - t_lo);
    auto conditions_ok = [&](double t) {
        double s = t * p.b;
        double d = rc::denom(p.c0, p.c1, t);
        if (std::fabs(d) < rc::denom_guard(p.c0, p.c1, 1.0)) return false;
        double phi0 = rc::phi_quadrature(p.c0, p.c1, p.c2, t_anchor, t);
        if (!(phi0 > 0.0)) return false;
        D2 tj{D1{t, 1.0}, D1{1.0, 0.0}};
        D2 pj = rc::psi(p.c0, p.c1, tj);
        double ps = pj.v.v, ps1 = pj.v.d;
        double d1 = ps * phi0 / p.b;
        double d2 = (ps1 + ps * ps) * phi0 / (p.b * p.b);
        double c1v = phi0 - s * d1;
        double c2v = c1v + (p.b * p.b - s * s) * d2;
        return (n == 2) ? c2v > 0.0 : (c1v > 0.0 && c2v > 0.0);
    };

    int anchor_idx = static_cast<int>((t_anchor - t_lo) / (t_hi - t_lo) * grid_samples);
    anchor_idx = std::max(0, std::min(grid_samples - 1, anchor_idx));
    auto t_at = [&](int k) {
        return t_lo + pad + (t_hi - t_lo - 2.0 * pad) * (k + 0.5) / grid_samples;
    };
    int k_lo = anchor_idx, k_hi = anchor_idx;
    while (k_lo - 1 >= 0 && conditions_ok(t_at(k_lo - 1))) --k_lo;
    while (k_hi + 1 < grid_samples && conditions_ok(t_at(k_hi + 1))) ++k_hi;

    SInterval out;
    out.lo = (k_lo == 0) ? t_lo * p.b : t_at(k_lo) * p.b;
    out.hi = (k_hi == grid_samples - 1) ? t_hi * p.b : t_at(k_hi) * p.b;
    return out;
}

PhiTable phi_table(const RiccatiParams& p, double lo, double hi, int count) {
    if (count < 2) throw DomainError("phi_table: need at least 2 nodes");
    if (!(lo < hi)) throw DomainError("phi_table: need lo < hi");
    double t_lo = to_t(p, lo, "phi_table");
    double t_hi = to_t(p, hi, "phi_table");
    auto roots = rc::denom_roots(p.c0, p.c1, rc::denom_guard(p.c0, p.c1, 1.0));
    for (const auto& r : roots)
        if (r.t >= t_lo && r.t <= t_hi) {
            std::ostringstream os;
            os << "phi_table: interval crosses the singularity at s = " << r.t * p.b;
            throw SingularityError(os.str(), r.t * p.b);
        }

    // anchor phi(0) = c2 when 0 lies in the same component as the interval;
    // otherwise normalize at the left node
    double t_anchor = 0.0;
    for (const auto& r : roots)
        if (std::min(0.0, t_lo) <= r.t && r.t <= std::max(0.0, t_hi)) t_anchor = t_lo;

    PhiTable tab;
    double acc = integrate([&](double tau) { return rc::psi(p.c0, p.c1, tau); }, t_anchor, t_lo);
    double prev_t = t_lo;
    for (int k = 0; k < count; ++k) {
        double t = t_lo + (t_hi - t_lo) * k / (count - 1);
        acc += integrate([&](double tau) { return rc::psi(p.c0, p.c1, tau); }, prev_t, t);
        prev_t = t;
        double s = t * p.b;
        double phi0 = p.c2 * std::exp(acc);
        D2 tj{D1{t, 1.0}, D1{1.0, 0.0}};
        D2 pj = rc::psi(p.c0, p.c1, tj);
        double ps = pj.v.v, ps1 = pj.v.d;
        double d1 = ps * phi0 / p.b;
        double d2 = (ps1 + ps * ps) * phi0 / (p.b * p.b);
        double c1v = phi0 - s * d1;
        double c2v = c1v + (p.b * p.b - s * s) * d2;
        tab.s.push_back(s);
        tab.psi.push_back(ps / p.b);
        tab.phi.push_back(phi0);
        tab.cond1.push_back(c1v);
        tab.cond2.push_back(c2v);
        tab.valid.push_back(phi0 > 0.0 && c1v > 0.0 && c2v > 0.0);
    }
    return tab;
}

}  // namespace finsler
