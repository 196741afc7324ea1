#pragma once

#include <cmath>
#include <cstdint>
#include <functional>

#include "finsler/errors.hpp"

namespace finsler {

struct QuadratureOptions {
    double abs_tol = 1e-12;
    std::uint64_t max_evals = 1000000;  // hard cap; exceeded -> DegeneracyError
};

namespace detail {

struct SimpsonState {
    const std::function<double(double)>& f;
    std::uint64_t evals = 0;
    std::uint64_t max_evals;

    double eval(double x) {
        if (++evals > max_evals)
            throw DegeneracyError("adaptive Simpson: evaluation budget exhausted");
        return f(x);
    }
};

inline double simpson_rec(SimpsonState& st, double a, double b, double fa, double fm, double fb,
                          double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = st.eval(lm), frm = st.eval(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double delta = left + right - whole;
    if (depth > 0 && std::fabs(delta) > 15.0 * tol) {
        return simpson_rec(st, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
               simpson_rec(st, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
    }
    return left + right + delta / 15.0;
}

}  // namespace detail

/// Adaptive Simpson with Richardson correction. Throws DegeneracyError when
/// the evaluation cap is hit (keeps integrands that blow up near a
/// singularity from hanging the caller).
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        const QuadratureOptions& opt = {}) {
    if (a == b) return 0.0;
    detail::SimpsonState st{f, 0, opt.max_evals};
    double fa = st.eval(a), fb = st.eval(b), fm = st.eval(0.5 * (a + b));
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::simpson_rec(st, a, b, fa, fm, fb, whole, opt.abs_tol, 60);
}

}  // namespace finsler
