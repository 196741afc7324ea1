#pragma once

#include <string>
#include <vector>

#include "finsler/norm.hpp"
#include "finsler/phi.hpp"

namespace finsler {

/// Parameters of the u = n v solution family. The appendix form is
/// normalized to b = 1; general b means the argument-rescaled family
/// phi(s) = phi_1(s/b) (beta-normalization corollary), which solves the
/// same ODE with the same c0 for every b.
struct RiccatiParams {
    double c0;
    double c1;
    double c2 = 1.0;
    double b = 1.0;

    static RiccatiParams make(double c0, double c1, double c2 = 1.0, double b = 1.0);
};

enum class SingularityKind { PoleLike, Vanishing, BoundedDerivativeBlowup };

std::string to_string(SingularityKind k);

struct Singularity {
    double s = 0.0;
    int order = 1;                 // 1: simple pole of psi, 2: tangential touch of D
    SingularityKind kind = SingularityKind::PoleLike;
    double growth_exponent = 0.0;  // phi ~ |s - s*|^rho for order-1 roots
};

struct SingularitySet {
    std::vector<Singularity> interior;  // sorted ascending, strictly inside (-b, b)
    bool endpoint_minus = true;  // +-b always singular: phi'' blows up there
    bool endpoint_plus = true;
};

/// psi = (log phi)' of the family. Throws DomainError for |s| >= b and
/// SingularityError (carrying s) within the guard band of a pole.
double psi_closed(const RiccatiParams& p, double s);

/// phi(s) = c2 exp(int_{s_ref}^s psi), adaptive quadrature at 1e-12.
/// Throws SingularityError naming the blocking singularity if the interval
/// crosses one.
double phi_by_quadrature(const RiccatiParams& p, double s_ref, double s);

/// Residual of the Riccati ODE satisfied by psi (b normalized away first);
/// psi' comes from dual-number differentiation of the closed form.
double riccati_residual(const RiccatiParams& p, double s);

/// u - n v evaluated through the closed-form invariants of the norm built
/// from p (beta along the first axis, |beta| = b).
double ode_u_equals_nv_residual(const RiccatiParams& p, double s, int n);

/// Norm with this phi family; beta = (b, 0, ..., 0).
NormSpec riccati_norm(const RiccatiParams& p, int n);

/// Interior zeros of the psi denominator on (-b, b), refined to 1e-12,
/// order-2 touch roots merged, each classified by the one-sided growth of
/// phi: pole-like (phi -> inf) vs vanishing (phi -> 0). Endpoints are always
/// flagged (psi stays bounded but phi'' blows up like 1/sqrt(b -+ s)).
SingularitySet singularities(const RiccatiParams& p);

struct SInterval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Largest open interval around s_anchor that is free of singularities and
/// on which the strong-convexity conditions hold at all grid samples.
SInterval maximal_interval(const RiccatiParams& p, double s_anchor, int n,
                           int grid_samples = 512);

struct PhiTable {
    std::vector<double> s;
    std::vector<double> psi;
    std::vector<double> phi;
    std::vector<double> cond1;  // phi - s phi'
    std::vector<double> cond2;  // cond1 + (b^2 - s^2) phi''
    std::vector<bool> valid;    // both conditions positive and phi > 0
};

/// Tabulates the family on [lo, hi] (nodes strictly inside (-b, b); the
/// interval must not cross a singularity). phi is accumulated segment by
/// segment from s_ref = the anchor 0 component convention.
PhiTable phi_table(const RiccatiParams& p, double lo, double hi, int count);

}  // namespace finsler
