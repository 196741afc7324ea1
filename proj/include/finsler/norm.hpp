#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "finsler/dual.hpp"
#include "finsler/errors.hpp"
#include "finsler/linalg.hpp"
#include "finsler/phi.hpp"

namespace finsler {

/// One Minkowski (alpha,beta)-norm F(y) = |y| phi(<beta,y>/|y|), with alpha
/// the standard Euclidean norm in the chosen basis (a general inner product
/// is handled by pre-transforming y). Immutable after construction.
class NormSpec {
public:
    NormSpec(int n, Eigen::VectorXd beta, PhiSpec phi);

    int n() const { return n_; }
    const Eigen::VectorXd& beta() const { return beta_; }
    double b() const { return b_; }
    const PhiSpec& phi() const { return phi_; }

    /// Whether the closure of the phi domain covers [-b, b]; false marks an
    /// "almost regular" norm defined only on a cone of directions.
    bool domain_covers_beta_range() const;

private:
    int n_;
    Eigen::VectorXd beta_;
    double b_;
    PhiSpec phi_;
};

/// F(y) over a plain double vector or a jet vector (order <= 3).
template <class T>
T norm_value(const NormSpec& spec, const std::vector<T>& y) {
    T r2(0.0);
    for (const T& yi : y) r2 += yi * yi;
    if (!(value(r2) > 0.0)) throw DomainError("norm: zero vector input");
    T r = sqrt(r2);
    T sb(0.0);
    for (int i = 0; i < spec.n(); ++i) sb += spec.beta()[i] * y[static_cast<std::size_t>(i)];
    T s = sb / r;
    return r * spec.phi().eval(s);
}

template <class T>
T norm_energy(const NormSpec& spec, const std::vector<T>& y) {
    T f = norm_value(spec, y);
    return 0.5 * f * f;
}

/// F(y); throws DomainError on y = 0, s outside the phi domain, or phi <= 0
/// at the evaluation point.
double eval_norm(const NormSpec& spec, const Eigen::VectorXd& y);

/// s(y) = <beta, y>/|y|; 0-homogeneous, |s| <= b.
double s_of(const NormSpec& spec, const Eigen::VectorXd& y);

struct ValidityReport {
    int n = 0;
    int sample_count = 0;
    bool domain_covers = true;     // closure(phi domain) contains [-b, b]
    bool boundary_inset = false;   // endpoint samples moved inside an open domain
    bool phi_positive = true;
    double phi_min = 0.0;
    double condition1_min = 0.0;   // min over samples of phi - s phi'
    double condition2_min = 0.0;   // min of (phi - s phi') + (b^2 - s^2) phi''
    double worst_s = 0.0;          // argmin of the governing quantity
    bool pass = false;
};

/// Samples both strong-convexity conditions on a uniform grid over [-b, b]
/// (endpoints included; 1025 samples by default). phi positivity is screened
/// first. Pass rule: n = 2 needs condition 2 only, n >= 3 needs both.
ValidityReport check_validity(const NormSpec& spec, int sample_count = 1025);

/// Rescales beta to unit alpha-length and reparameterizes phi so the norm is
/// unchanged: beta/b, phi~(t) = phi(b t). Throws on b = 0.
NormSpec normalize_beta(const NormSpec& spec);

/// Hessian of F^2/2 by nested dual numbers; checked symmetric positive
/// definite (ValidityError carries the offending y otherwise).
Eigen::MatrixXd fundamental_tensor_oracle(const NormSpec& spec, const Eigen::VectorXd& y);

/// Same Hessian by central finite differences, step cbrt(eps) max(1, |y|).
/// Noisier second route, used as a cross-check of the dual-number tower.
Eigen::MatrixXd fundamental_tensor_fd(const NormSpec& spec, const Eigen::VectorXd& y);

/// A_ijk = (F/2) d^3(F^2/2)/dy^i dy^j dy^k by third-order dual numbers.
Tensor3 cartan_tensor_oracle(const NormSpec& spec, const Eigen::VectorXd& y);

/// dF at y (components F_{y^i}) by dual numbers.
Eigen::VectorXd norm_gradient(const NormSpec& spec, const Eigen::VectorXd& y);

}  // namespace finsler
