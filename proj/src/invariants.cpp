#include "finsler/invariants.hpp"

#include <cmath>

namespace finsler {

namespace {

struct Pointwise {
    double r;            // |y|
    double s;
    DerivStack st;
    double p2;           // phi - s phi'
    double p3;           // p2 + (b^2 - s^2) phi''
    Eigen::VectorXd a;   // y/|y|
    Eigen::VectorXd Y;   // b - s a
};

Pointwise pointwise(const NormSpec& spec, const Eigen::VectorXd& y) {
    Pointwise p;
    p.r = y.norm();
    if (!(p.r > 0.0)) throw DomainError("invariants: zero vector input");
    p.s = spec.beta().dot(y) / p.r;
    p.st = spec.phi().derivs(p.s);
    p.p2 = p.st.phi - p.s * p.st.d1;
    p.p3 = p.p2 + (spec.b() * spec.b() - p.s * p.s) * p.st.d2;
    p.a = y / p.r;
    p.Y = spec.beta() - p.s * p.a;
    return p;
}

ScalarInvariants scalars_at(const NormSpec& spec, double s) {
    DerivStack st = spec.phi().derivs(s);
    double b = spec.b();
    double p2 = st.phi - s * st.d1;
    double p3 = p2 + (b * b - s * s) * st.d2;
    double n = spec.n();
    // log-derivative expansions; quotient rule applied per factor so no
    // numeric differentiation of logs happens near condition boundaries
    double L = st.d1 / st.phi - s * st.d2 / p2;  // [log(phi p2)]'
    ScalarInvariants out;
    out.v = 0.5 * st.phi * L;
    out.u = 0.5 * st.phi *
            ((n + 1.0) * st.d1 / st.phi + (n - 2.0) * (-s * st.d2) / p2 +
             (-3.0 * s * st.d2 + (b * b - s * s) * st.d3) / p3);
    out.w = 0.5 * st.phi * (3.0 * st.d1 * st.d2 + st.phi * st.d3 - 3.0 * st.phi * st.d2 * L);
    if (std::fabs(out.v) >= q_eps(out.u)) out.q = 1.0 - n + out.u / out.v;
    return out;
}

}  // namespace

ScalarInvariants uvwq(const NormSpec& spec, double s) {
    if (spec.n() < 3) throw DomainError("uvwq: closed forms require dimension n >= 3");
    return scalars_at(spec, s);
}

Eigen::VectorXd y_sharp(const NormSpec& spec, const Eigen::VectorXd& y) {
    double r = y.norm();
    if (!(r > 0.0)) throw DomainError("y_sharp: zero vector input");
    double s = spec.beta().dot(y) / r;
    return spec.beta() - (s / r) * y;
}

Eigen::MatrixXd angular_metric(const NormSpec& spec, const Eigen::VectorXd& y) {
    Pointwise p = pointwise(spec, y);
    const int n = spec.n();
    Eigen::MatrixXd proj = Eigen::MatrixXd::Identity(n, n) - p.a * p.a.transpose();
    return p.st.phi * p.p2 * proj + p.st.phi * p.st.d2 * p.Y * p.Y.transpose();
}

Eigen::MatrixXd fundamental_tensor_closed(const NormSpec& spec, const Eigen::VectorXd& y) {
    Pointwise p = pointwise(spec, y);
    const int n = spec.n();
    Eigen::MatrixXd proj = Eigen::MatrixXd::Identity(n, n) - p.a * p.a.transpose();
    Eigen::MatrixXd h = p.st.phi * p.p2 * proj + p.st.phi * p.st.d2 * p.Y * p.Y.transpose();
    Eigen::VectorXd df = p.st.phi * p.a + p.st.d1 * p.Y;
    return h + df * df.transpose();
}

double det_closed(const NormSpec& spec, const Eigen::VectorXd& y) {
    Pointwise p = pointwise(spec, y);
    double n = spec.n();
    return std::pow(p.st.phi, n + 1.0) * std::pow(p.p2, n - 2.0) * p.p3;
}

Tensor3 cartan_tensor(const NormSpec& spec, const Eigen::VectorXd& y) {
    if (spec.n() < 3) throw DomainError("cartan_tensor: closed form requires dimension n >= 3");
    Pointwise p = pointwise(spec, y);
    ScalarInvariants sc = scalars_at(spec, p.s);
    const int n = spec.n();
    Eigen::MatrixXd proj = Eigen::MatrixXd::Identity(n, n) - p.a * p.a.transpose();
    Eigen::MatrixXd h = p.st.phi * p.p2 * proj + p.st.phi * p.st.d2 * p.Y * p.Y.transpose();
    Tensor3 A(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                A(i, j, k) = sc.v * (h(i, j) * p.Y[k] + h(j, k) * p.Y[i] + h(k, i) * p.Y[j]) +
                             sc.w * p.Y[i] * p.Y[j] * p.Y[k];
    return A;
}

CartanFormRoutes cartan_form(const NormSpec& spec, const Eigen::VectorXd& y) {
    if (spec.n() < 3) throw DomainError("cartan_form: closed form requires dimension n >= 3");
    const int n = spec.n();
    Pointwise p = pointwise(spec, y);
    ScalarInvariants sc = scalars_at(spec, p.s);
    Eigen::MatrixXd g = fundamental_tensor_closed(spec, y);
    Eigen::MatrixXd ginv = g.inverse();
    Tensor3 A = cartan_tensor(spec, y);

    CartanFormRoutes out;
    out.trace_route = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) acc += ginv(j, k) * A(i, j, k);
        out.trace_route[i] = acc;
    }
    out.u_route = sc.u * p.Y;
    out.max_deviation = (out.trace_route - out.u_route).cwiseAbs().maxCoeff();
    return out;
}

double cubic_norm_closed(const NormSpec& spec, const Eigen::VectorXd& y) {
    if (spec.n() < 3) throw DomainError("cubic_norm_closed: requires dimension n >= 3");
    Eigen::VectorXd yi = y / eval_norm(spec, y);  // rescale to the indicatrix
    Pointwise p = pointwise(spec, yi);
    ScalarInvariants sc = scalars_at(spec, p.s);
    Eigen::MatrixXd g = fundamental_tensor_closed(spec, yi);
    double y2 = p.Y.dot(g.llt().solve(p.Y));
    double n = spec.n();
    double bracket = 3.0 * (n - 2.0) * sc.v * sc.v +
                     (sc.u + (2.0 - n) * sc.v) * (sc.u + (2.0 - n) * sc.v);
    return bracket * y2;
}

InvariantBundle invariant_bundle(const NormSpec& spec, const Eigen::VectorXd& y) {
    if (spec.n() < 3) throw DomainError("invariant_bundle: closed forms require dimension n >= 3");
    InvariantBundle bundle;
    Pointwise p = pointwise(spec, y);
    ScalarInvariants sc = scalars_at(spec, p.s);
    bundle.n = spec.n();
    bundle.s = p.s;
    bundle.h = angular_metric(spec, y);
    bundle.g = fundamental_tensor_closed(spec, y);
    bundle.A = cartan_tensor(spec, y);
    bundle.y_sharp = p.Y;
    bundle.eta = sc.u * p.Y;
    bundle.u = sc.u;
    bundle.v = sc.v;
    bundle.w = sc.w;
    bundle.q = sc.q;
    bundle.det_g = det_closed(spec, y);
    Eigen::LLT<Eigen::MatrixXd> llt(bundle.g);
    bundle.y_sharp_norm2 = p.Y.dot(llt.solve(p.Y));
    bundle.eta_norm2 = bundle.eta.dot(llt.solve(bundle.eta));
    return bundle;
}

}  // namespace finsler
