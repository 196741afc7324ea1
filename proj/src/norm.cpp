#include "finsler/norm.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace finsler {

NormSpec::NormSpec(int n, Eigen::VectorXd beta, PhiSpec phi)
    : n_(n), beta_(std::move(beta)), phi_(std::move(phi)) {
    if (n_ < 2) throw DomainError("norm: dimension must be >= 2");
    if (beta_.size() != n_) throw DomainError("norm: beta has wrong dimension");
    b_ = beta_.norm();
}

bool NormSpec::domain_covers_beta_range() const {
    PhiDomain d = phi_.domain();
    return d.closure_contains(-b_) && d.closure_contains(b_);
}

double eval_norm(const NormSpec& spec, const Eigen::VectorXd& y) {
    double f = norm_value(spec, to_std(y));
    if (!(f > 0.0)) {
        std::ostringstream os;
        os << "norm: phi <= 0 at s = " << s_of(spec, y) << " (F = " << f << ")";
        throw DomainError(os.str());
    }
    return f;
}

double s_of(const NormSpec& spec, const Eigen::VectorXd& y) {
    double r = y.norm();
    if (!(r > 0.0)) throw DomainError("s_of: zero vector input");
    return spec.beta().dot(y) / r;
}

ValidityReport check_validity(const NormSpec& spec, int sample_count) {
    if (sample_count < 2) throw DomainError("check_validity: sample_count must be >= 2");
    const double b = spec.b();
    PhiDomain dom = spec.phi().domain();

    ValidityReport rep;
    rep.n = spec.n();
    rep.sample_count = sample_count;
    rep.domain_covers = spec.domain_covers_beta_range();

    double inf = std::numeric_limits<double>::infinity();
    rep.phi_min = inf;
    rep.condition1_min = inf;
    rep.condition2_min = inf;

    const double inset = 1e-12 * std::max(1.0, b);
    for (int k = 0; k < sample_count; ++k) {
        double s = (sample_count == 1) ? 0.0 : -b + 2.0 * b * k / (sample_count - 1);
        if (!dom.contains(s)) {
            if (dom.closure_contains(s)) {
                s = (s <= dom.lo) ? dom.lo + inset : dom.hi - inset;
                rep.boundary_inset = true;
            } else {
                rep.domain_covers = false;
                continue;
            }
        }
        DerivStack st = spec.phi().derivs(s);
        if (st.phi < rep.phi_min) rep.phi_min = st.phi;
        if (st.phi <= 0.0) {
            if (rep.phi_positive) rep.worst_s = s;
            rep.phi_positive = false;
            continue;  // conditions are meaningless where phi <= 0
        }
        double c1v = st.phi - s * st.d1;
        double c2v = c1v + (b * b - s * s) * st.d2;
        if (c1v < rep.condition1_min) { rep.condition1_min = c1v; }
        if (c2v < rep.condition2_min) { rep.condition2_min = c2v; rep.worst_s = s; }
    }

    bool conditions_ok = (rep.n == 2) ? rep.condition2_min > 0.0
                                      : (rep.condition1_min > 0.0 && rep.condition2_min > 0.0);
    rep.pass = rep.domain_covers && rep.phi_positive && conditions_ok;
    return rep;
}

NormSpec normalize_beta(const NormSpec& spec) {
    double b = spec.b();
    if (!(b > 0.0)) throw DomainError("normalize_beta: degenerate beta (b = 0)");
    return NormSpec(spec.n(), spec.beta() / b, spec.phi().rescale_argument(b));
}

namespace {

std::string format_point(const Eigen::VectorXd& y) {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < y.size(); ++i) os << (i ? ", " : "") << y[i];
    os << ")";
    return os.str();
}

}  // namespace

Eigen::MatrixXd fundamental_tensor_oracle(const NormSpec& spec, const Eigen::VectorXd& y) {
    const int n = spec.n();
    Eigen::MatrixXd g(n, n);
    std::vector<D2> yj(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k)
                yj[k] = D2{D1{y[k], k == i ? 1.0 : 0.0}, D1{k == j ? 1.0 : 0.0, 0.0}};
            g(i, j) = norm_energy(spec, yj).d.d;
        }
    }
    Eigen::LLT<Eigen::MatrixXd> llt(0.5 * (g + g.transpose()));
    if (llt.info() != Eigen::Success)
        throw ValidityError("fundamental tensor not positive definite at y = " + format_point(y));
    return g;
}

Eigen::MatrixXd fundamental_tensor_fd(const NormSpec& spec, const Eigen::VectorXd& y) {
    const int n = spec.n();
    const double h = std::cbrt(std::numeric_limits<double>::epsilon()) * std::max(1.0, y.norm());
    auto energy = [&](const Eigen::VectorXd& p) { return norm_energy(spec, to_std(p)); };
    Eigen::MatrixXd g(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            Eigen::VectorXd pp = y, pm = y, mp = y, mm = y;
            pp[i] += h; pp[j] += h;
            pm[i] += h; pm[j] -= h;
            mp[i] -= h; mp[j] += h;
            mm[i] -= h; mm[j] -= h;
            g(i, j) = (energy(pp) - energy(pm) - energy(mp) + energy(mm)) / (4.0 * h * h);
        }
    }
    return g;
}

Tensor3 cartan_tensor_oracle(const NormSpec& spec, const Eigen::VectorXd& y) {
    const int n = spec.n();
    double f = eval_norm(spec, y);
    Tensor3 A(n);
    std::vector<D3> yj(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                for (int l = 0; l < n; ++l) {
                    yj[l] = D3{D2{D1{y[l], l == i ? 1.0 : 0.0}, D1{l == j ? 1.0 : 0.0, 0.0}},
                               D2{D1{l == k ? 1.0 : 0.0, 0.0}, D1{0.0, 0.0}}};
                }
                A(i, j, k) = 0.5 * f * norm_energy(spec, yj).d.d.d;
            }
        }
    }
    return A;
}

Eigen::VectorXd norm_gradient(const NormSpec& spec, const Eigen::VectorXd& y) {
    const int n = spec.n();
    Eigen::VectorXd grad(n);
    std::vector<D1> yj(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) yj[k] = D1{y[k], k == i ? 1.0 : 0.0};
        grad[i] = norm_value(spec, yj).d;
    }
    return grad;
}

}  // namespace finsler
