#include "finsler/indicatrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "finsler/rng.hpp"

namespace finsler {

IndicatrixFrame tangent_frame(const NormSpec& spec, Eigen::VectorXd y) {
    const int n = spec.n();
    double f = eval_norm(spec, y);
    y /= f;

    IndicatrixFrame frame;
    frame.base = y;
    frame.g = fundamental_tensor_closed(spec, y);
    Eigen::VectorXd df = norm_gradient(spec, y);  // dF(y) = 1 on the indicatrix

    frame.vectors = Eigen::MatrixXd::Zero(n - 1, n);
    int found = 0;
    for (int axis = 0; axis < n && found < n - 1; ++axis) {
        Eigen::VectorXd v = Eigen::VectorXd::Unit(n, axis);
        v -= df[axis] * y;  // project off the radial direction
        for (int a = 0; a < found; ++a) {
            Eigen::VectorXd e = frame.vectors.row(a).transpose();
            v -= (e.dot(frame.g * v)) * e;
        }
        double norm2 = v.dot(frame.g * v);
        if (norm2 > 1e-20) {
            frame.vectors.row(found++) = (v / std::sqrt(norm2)).transpose();
        }
    }
    if (found != n - 1)
        throw DegeneracyError("tangent_frame: projection rank-deficient, frame incomplete");
    return frame;
}

CubicData cubic_and_tchebychev(const NormSpec& spec, const IndicatrixFrame& frame) {
    const int n = spec.n();
    const int m = n - 1;
    Tensor3 A = cartan_tensor(spec, frame.base);
    Eigen::VectorXd eta = cartan_form(spec, frame.base).u_route;

    CubicData out;
    out.C = Tensor3(m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c) {
                double acc = 0.0;
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        for (int k = 0; k < n; ++k)
                            acc += A(i, j, k) * frame.vectors(a, i) * frame.vectors(b, j) *
                                   frame.vectors(c, k);
                out.C(a, b, c) = -acc;
            }
    out.T = Eigen::VectorXd::Zero(m);
    for (int a = 0; a < m; ++a)
        out.T[a] = -eta.dot(frame.vectors.row(a).transpose()) / (n - 1.0);
    out.T2 = out.T.squaredNorm();
    return out;
}

Tensor4 gauss_curvature(const Tensor3& C) {
    const int m = C.dim();
    if (m < 2) throw std::invalid_argument("gauss_curvature: need frame dimension >= 2");
    if (C.symmetry_defect() > 1e-9 * (1.0 + C.max_abs()))
        throw std::invalid_argument("gauss_curvature: cubic form is not totally symmetric");
    auto kron = [](int i, int j) { return i == j ? 1.0 : 0.0; };
    Tensor4 R(m);
    for (int b = 0; b < m; ++b)
        for (int g = 0; g < m; ++g)
            for (int mu = 0; mu < m; ++mu)
                for (int nu = 0; nu < m; ++nu) {
                    double acc = -(kron(b, mu) * kron(g, nu) - kron(b, nu) * kron(g, mu));
                    for (int a = 0; a < m; ++a)
                        acc += C(a, b, mu) * C(a, g, nu) - C(a, b, nu) * C(a, g, mu);
                    R(b, g, mu, nu) = acc;
                }
    return R;
}

std::vector<double> sectional_values(const Tensor4& R) {
    std::vector<double> out;
    for (int b = 0; b < R.dim(); ++b)
        for (int g = b + 1; g < R.dim(); ++g) out.push_back(R(b, g, b, g));
    return out;
}

CurvatureReport constancy_sweep(const NormSpec& spec, int sample_count, std::uint64_t seed,
                                std::optional<std::pair<double, double>> s_window) {
    const int n = spec.n();
    CurvatureReport rep;
    rep.n = n;
    rep.requested = sample_count;
    rep.small_dimension_warning = (n == 3);

    CounterRng rng{seed};
    const double y_sharp_floor = 1e-10;

    double t2_lo = std::numeric_limits<double>::infinity(), t2_hi = -t2_lo;
    double sect_lo = t2_lo, sect_hi = t2_hi;
    double t2_sum = 0.0;

    std::uint64_t counter = 0;
    int accepted = 0;
    std::uint64_t attempts = 0;
    const std::uint64_t max_attempts = 64ULL * static_cast<std::uint64_t>(sample_count) + 1024;
    while (accepted < sample_count && attempts < max_attempts) {
        ++attempts;
        Eigen::VectorXd dir = rng.sphere(counter++, n);
        try {
            double s = s_of(spec, dir);
            if (s_window && (s <= s_window->first || s >= s_window->second)) {
                ++rep.skipped;
                continue;
            }
            IndicatrixFrame frame = tangent_frame(spec, dir);
            Eigen::VectorXd Y = y_sharp(spec, frame.base);
            double y2 = Y.dot(frame.g.llt().solve(Y));
            if (y2 <= y_sharp_floor) {  // Y-sharp degenerates near s = +-b
                ++rep.skipped;
                continue;
            }
            CubicData cd = cubic_and_tchebychev(spec, frame);
            Tensor4 R = gauss_curvature(cd.C);

            CurvatureSample sample;
            sample.s = s;
            sample.T2 = cd.T2;
            double ratio = (n - 1.0) / n;
            sample.k_pred = 1.0 - ratio * ratio * cd.T2;
            auto sect = sectional_values(R);
            sample.sect_min = *std::min_element(sect.begin(), sect.end());
            sample.sect_max = *std::max_element(sect.begin(), sect.end());
            auto kron = [](int i, int j) { return i == j ? 1.0 : 0.0; };
            double defect = 0.0;
            const int m = n - 1;
            for (int b = 0; b < m; ++b)
                for (int g = 0; g < m; ++g)
                    for (int mu = 0; mu < m; ++mu)
                        for (int nu = 0; nu < m; ++nu)
                            defect = std::max(defect,
                                              std::fabs(R(b, g, mu, nu) +
                                                        sample.k_pred * (kron(b, mu) * kron(g, nu) -
                                                                         kron(b, nu) * kron(g, mu))));
            sample.isotropy_defect = defect;
            rep.samples.push_back(sample);

            t2_lo = std::min(t2_lo, cd.T2);
            t2_hi = std::max(t2_hi, cd.T2);
            sect_lo = std::min(sect_lo, sample.sect_min);
            sect_hi = std::max(sect_hi, sample.sect_max);
            t2_sum += cd.T2;
            ++accepted;
        } catch (const DomainError&) {
            ++rep.skipped;  // direction outside the valid cone
        } catch (const SingularityError&) {
            ++rep.skipped;
        }
    }
    if (accepted > 0) {
        rep.T2_mean = t2_sum / accepted;
        rep.T2_spread = t2_hi - t2_lo;
        rep.sect_spread = sect_hi - sect_lo;
    }
    return rep;
}

}  // namespace finsler
