#include "finsler/phi.hpp"

#include <algorithm>
#include <cmath>

namespace finsler {

TablePhi TablePhi::make(std::vector<double> s, std::vector<double> phi) {
    if (s.size() < 3 || s.size() != phi.size())
        throw DomainError("table phi: need >= 3 knots with matching values");
    if (!std::is_sorted(s.begin(), s.end()))
        throw DomainError("table phi: knots must be strictly increasing");
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] <= s[i - 1]) throw DomainError("table phi: knots must be strictly increasing");

    // natural cubic spline: tridiagonal solve for the second derivatives
    const int n = static_cast<int>(s.size());
    std::vector<double> m(n, 0.0), diag(n, 0.0), rhs(n, 0.0), sub(n, 0.0), sup(n, 0.0);
    for (int i = 1; i + 1 < n; ++i) {
        double hl = s[i] - s[i - 1], hr = s[i + 1] - s[i];
        sub[i] = hl / 6.0;
        diag[i] = (hl + hr) / 3.0;
        sup[i] = hr / 6.0;
        rhs[i] = (phi[i + 1] - phi[i]) / hr - (phi[i] - phi[i - 1]) / hl;
    }
    for (int i = 2; i + 1 < n; ++i) {
        double f = sub[i] / diag[i - 1];
        diag[i] -= f * sup[i - 1];
        rhs[i] -= f * rhs[i - 1];
    }
    for (int i = n - 2; i >= 1; --i)
        m[i] = (rhs[i] - sup[i] * (i + 2 < n ? m[i + 1] : 0.0)) / diag[i];

    TablePhi t;
    t.s = std::move(s);
    t.phi = std::move(phi);
    t.m = std::move(m);
    return t;
}

int TablePhi::piece(double x) const {
    auto it = std::upper_bound(s.begin(), s.end(), x);
    int k = static_cast<int>(it - s.begin()) - 1;
    return std::clamp(k, 0, static_cast<int>(s.size()) - 2);
}

PhiDomain PhiSpec::domain() const {
    return visit([](const auto& fam) -> PhiDomain {
        using Fam = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<Fam, QuadraticRootPhi>) {
            if (fam.c1 < 0.0) {
                double r = std::sqrt(fam.c0 / -fam.c1);
                return {-r, r};
            }
            return {};
        } else if constexpr (std::is_same_v<Fam, RiccatiPhi>) {
            return {fam.t_lo * fam.b, fam.t_hi * fam.b};
        } else if constexpr (std::is_same_v<Fam, TablePhi>) {
            return {fam.s.front(), fam.s.back()};
        } else {
            return {};
        }
    });
}

std::string PhiSpec::family_name() const {
    return visit([](const auto& fam) -> std::string {
        using Fam = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<Fam, ConstantOnePhi>) return "constant-one";
        else if constexpr (std::is_same_v<Fam, RandersPhi>) return "randers";
        else if constexpr (std::is_same_v<Fam, PolynomialPhi>) return "polynomial";
        else if constexpr (std::is_same_v<Fam, QuadraticRootPhi>) return "quadratic-root";
        else if constexpr (std::is_same_v<Fam, RiccatiPhi>) return "riccati";
        else return "table";
    });
}

void PhiSpec::require_inside(double s) const {
    PhiDomain d = domain();
    if (!d.contains(s)) {
        std::ostringstream os;
        os << "phi(" << family_name() << "): s = " << s << " outside the open domain ("
           << d.lo << ", " << d.hi << ")";
        throw DomainError(os.str());
    }
}

DerivStack PhiSpec::derivs(double s) const {
    require_inside(s);
    return visit([&](const auto& fam) -> DerivStack {
        using Fam = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<Fam, ConstantOnePhi>) {
            return {1.0, 0.0, 0.0, 0.0};
        } else if constexpr (std::is_same_v<Fam, RandersPhi>) {
            return {1.0 + fam.epsilon * s, fam.epsilon, 0.0, 0.0};
        } else if constexpr (std::is_same_v<Fam, PolynomialPhi>) {
            const auto& c = fam.coeffs;
            DerivStack st;
            for (std::size_t k = c.size(); k-- > 0;) {
                st.d3 = st.d3 * s + 3.0 * st.d2;
                st.d2 = st.d2 * s + 2.0 * st.d1;
                st.d1 = st.d1 * s + st.phi;
                st.phi = st.phi * s + c[k];
            }
            return st;
        } else if constexpr (std::is_same_v<Fam, QuadraticRootPhi>) {
            double p = std::sqrt(fam.c0 + fam.c1 * s * s);
            double p1 = fam.c1 * s / p;
            double p2 = (fam.c1 - p1 * p1) / p;
            double p3 = -3.0 * p1 * p2 / p;
            return {p, p1, p2, p3};
        } else if constexpr (std::is_same_v<Fam, RiccatiPhi>) {
            double t = s / fam.b;
            double dguard = riccati_core::denom_guard(fam.c0, fam.c1, 1.0);
            if (std::fabs(riccati_core::denom(fam.c0, fam.c1, t)) < dguard) {
                std::ostringstream os;
                os << "riccati phi: s = " << s << " is a singularity of psi";
                throw SingularityError(os.str(), s);
            }
            double phi0 = riccati_core::phi_quadrature(fam.c0, fam.c1, fam.c2, 0.0, t);
            D2 tj{D1{t, 1.0}, D1{1.0, 0.0}};
            D2 pj = riccati_core::psi(fam.c0, fam.c1, tj);
            double ps = pj.v.v, ps1 = pj.v.d, ps2 = pj.d.d;
            double ib = 1.0 / fam.b;
            DerivStack st;
            st.phi = phi0;
            st.d1 = ps * phi0 * ib;
            st.d2 = (ps1 + ps * ps) * phi0 * ib * ib;
            st.d3 = (ps2 + 3.0 * ps * ps1 + ps * ps * ps) * phi0 * ib * ib * ib;
            return st;
        } else {
            static_assert(std::is_same_v<Fam, TablePhi>);
            int k = fam.piece(s);
            double h = fam.s[k + 1] - fam.s[k];
            double a = (fam.s[k + 1] - s) / h, b = (s - fam.s[k]) / h;
            DerivStack st;
            st.phi = a * fam.phi[k] + b * fam.phi[k + 1] +
                     ((a * a * a - a) * fam.m[k] + (b * b * b - b) * fam.m[k + 1]) * h * h / 6.0;
            st.d1 = (fam.phi[k + 1] - fam.phi[k]) / h -
                    (3.0 * a * a - 1.0) * h / 6.0 * fam.m[k] + (3.0 * b * b - 1.0) * h / 6.0 * fam.m[k + 1];
            st.d2 = a * fam.m[k] + b * fam.m[k + 1];
            st.d3 = (fam.m[k + 1] - fam.m[k]) / h;
            return st;
        }
    });
}

PhiSpec PhiSpec::rescale_argument(double b) const {
    if (!(b > 0.0)) throw DomainError("rescale_argument: b must be > 0");
    return visit([&](const auto& fam) -> PhiSpec {
        using Fam = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<Fam, ConstantOnePhi>) {
            return PhiSpec::constant_one();
        } else if constexpr (std::is_same_v<Fam, RandersPhi>) {
            return PhiSpec::randers(fam.epsilon * b);
        } else if constexpr (std::is_same_v<Fam, PolynomialPhi>) {
            std::vector<double> c = fam.coeffs;
            double p = 1.0;
            for (auto& ck : c) { ck *= p; p *= b; }
            return PhiSpec::polynomial(std::move(c));
        } else if constexpr (std::is_same_v<Fam, QuadraticRootPhi>) {
            return PhiSpec::quadratic_root(fam.c0, fam.c1 * b * b);
        } else if constexpr (std::is_same_v<Fam, RiccatiPhi>) {
            return PhiSpec::riccati(fam.c0, fam.c1, fam.c2, fam.b / b);
        } else {
            static_assert(std::is_same_v<Fam, TablePhi>);
            std::vector<double> sk = fam.s;
            for (auto& x : sk) x /= b;
            return PhiSpec::table(std::move(sk), fam.phi);
        }
    });
}

}  // namespace finsler
