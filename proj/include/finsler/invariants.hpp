#pragma once

#include <optional>

#include <Eigen/Dense>

#include "finsler/linalg.hpp"
#include "finsler/norm.hpp"

namespace finsler {

/// The scalar coefficients of the closed-form Cartan tensor:
///   v = (phi/2) [log(phi (phi - s phi'))]'
///   u = (phi/2) [log(phi^{n+1} (phi - s phi')^{n-2} ((phi-s phi')+(b^2-s^2) phi''))]'
///   w = (phi/2) (3 phi' phi'' + phi phi''' - 3 phi phi'' [log(phi (phi-s phi'))]')
/// q = 1 - n + u/v is reported only where |v| clears a u-scaled guard.
struct ScalarInvariants {
    double u = 0.0;
    double v = 0.0;
    double w = 0.0;
    std::optional<double> q;
};

/// q is undefined when |v| < q_eps(u); near-zero v with large u flags
/// numerical trouble rather than geometry.
inline double q_eps(double u) { return 1e-10 * (1.0 + std::fabs(u)); }

/// Requires n >= 3 (the closed forms assume it).
ScalarInvariants uvwq(const NormSpec& spec, double s);

/// Y_i = b_i - s y_i/|y|; annihilates y, vanishes only at s = +-b.
Eigen::VectorXd y_sharp(const NormSpec& spec, const Eigen::VectorXd& y);

/// h_ij = phi(phi - s phi')(delta_ij - a_i a_j) + phi phi'' Y_i Y_j with
/// a = y/|y|. Rank n-1, h y = 0.
Eigen::MatrixXd angular_metric(const NormSpec& spec, const Eigen::VectorXd& y);

/// g = h + dF (x) dF with dF_i = phi a_i + phi' Y_i.
Eigen::MatrixXd fundamental_tensor_closed(const NormSpec& spec, const Eigen::VectorXd& y);

/// det g = phi^{n+1} (phi - s phi')^{n-2} [(phi - s phi') + (b^2-s^2) phi''].
double det_closed(const NormSpec& spec, const Eigen::VectorXd& y);

/// A_ijk = v (h_ij Y_k + h_jk Y_i + h_ki Y_j) + w Y_i Y_j Y_k. The w-form is
/// used everywhere; it has no 1/|Y|^2 factor and so is regular at s = +-b.
/// Requires n >= 3.
Tensor3 cartan_tensor(const NormSpec& spec, const Eigen::VectorXd& y);

struct CartanFormRoutes {
    Eigen::VectorXd trace_route;  // g^{jk} A_ijk
    Eigen::VectorXd u_route;      // u Y_i
    double max_deviation = 0.0;
};

/// The Cartan form by its two expressions; both returned with their gap.
CartanFormRoutes cartan_form(const NormSpec& spec, const Eigen::VectorXd& y);

/// ||C||^2 of the indicatrix cubic form in closed form:
///   [3(n-2) v^2 + (u + (2-n) v)^2] ||Y||_g^2
/// evaluated after rescaling y to the indicatrix. Requires n >= 3.
double cubic_norm_closed(const NormSpec& spec, const Eigen::VectorXd& y);

/// Everything at one direction y.
struct InvariantBundle {
    int n = 0;
    double s = 0.0;
    Eigen::MatrixXd g;
    Eigen::MatrixXd h;
    Tensor3 A;
    Eigen::VectorXd eta;      // u Y
    Eigen::VectorXd y_sharp;
    double u = 0.0, v = 0.0, w = 0.0;
    std::optional<double> q;
    double det_g = 0.0;
    double y_sharp_norm2 = 0.0;  // g-inverse norm
    double eta_norm2 = 0.0;
};

InvariantBundle invariant_bundle(const NormSpec& spec, const Eigen::VectorXd& y);

}  // namespace finsler
