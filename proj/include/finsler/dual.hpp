#pragma once

#include <cmath>
#include <type_traits>

namespace finsler {

/// First-order dual number over an arbitrary scalar ring T.
///
/// Nesting gives exact higher derivatives: Dual<Dual<double>> carries a
/// second-order jet, Dual<Dual<Dual<double>>> a third-order one. Seed the
/// infinitesimal slots of independent levels with distinct directions and
/// read mixed partials off the corresponding nested .d components.
template <class T>
struct Dual {
    T v{};  // value part
    T d{};  // infinitesimal part

    Dual() = default;
    Dual(double value) : v(value), d() {}  // NOLINT: implicit by design
    Dual(T value, T deriv) : v(std::move(value)), d(std::move(deriv)) {}
};

using D1 = Dual<double>;
using D2 = Dual<Dual<double>>;
using D3 = Dual<Dual<Dual<double>>>;

inline double value(double x) { return x; }
template <class T>
double value(const Dual<T>& x) { return value(x.v); }

template <class T> Dual<T> operator+(const Dual<T>& a, const Dual<T>& b) { return {a.v + b.v, a.d + b.d}; }
template <class T> Dual<T> operator-(const Dual<T>& a, const Dual<T>& b) { return {a.v - b.v, a.d - b.d}; }
template <class T> Dual<T> operator-(const Dual<T>& a) { return {-a.v, -a.d}; }
template <class T> Dual<T> operator+(const Dual<T>& a) { return a; }

template <class T>
Dual<T> operator*(const Dual<T>& a, const Dual<T>& b) {
    return {a.v * b.v, a.v * b.d + a.d * b.v};
}

template <class T>
Dual<T> operator/(const Dual<T>& a, const Dual<T>& b) {
    T q = a.v / b.v;
    return {q, (a.d - q * b.d) / b.v};
}

template <class T> Dual<T> operator+(const Dual<T>& a, double c) { return a + Dual<T>(c); }
template <class T> Dual<T> operator+(double c, const Dual<T>& a) { return Dual<T>(c) + a; }
template <class T> Dual<T> operator-(const Dual<T>& a, double c) { return a - Dual<T>(c); }
template <class T> Dual<T> operator-(double c, const Dual<T>& a) { return Dual<T>(c) - a; }
template <class T> Dual<T> operator*(const Dual<T>& a, double c) { return {a.v * c, a.d * c}; }
template <class T> Dual<T> operator*(double c, const Dual<T>& a) { return a * c; }
template <class T> Dual<T> operator/(const Dual<T>& a, double c) { return {a.v / c, a.d / c}; }
template <class T> Dual<T> operator/(double c, const Dual<T>& a) { return Dual<T>(c) / a; }

template <class T> Dual<T>& operator+=(Dual<T>& a, const Dual<T>& b) { a = a + b; return a; }
template <class T> Dual<T>& operator-=(Dual<T>& a, const Dual<T>& b) { a = a - b; return a; }
template <class T> Dual<T>& operator*=(Dual<T>& a, const Dual<T>& b) { a = a * b; return a; }
template <class T> Dual<T>& operator/=(Dual<T>& a, const Dual<T>& b) { a = a / b; return a; }

template <class T> bool operator<(const Dual<T>& a, const Dual<T>& b) { return value(a) < value(b); }
template <class T> bool operator>(const Dual<T>& a, const Dual<T>& b) { return value(a) > value(b); }
template <class T> bool operator<(const Dual<T>& a, double b) { return value(a) < b; }
template <class T> bool operator>(const Dual<T>& a, double b) { return value(a) > b; }

using std::exp;
using std::log;
using std::sqrt;

template <class T>
Dual<T> sqrt(const Dual<T>& a) {
    T r = sqrt(a.v);
    return {r, a.d / (2.0 * r)};
}

template <class T>
Dual<T> exp(const Dual<T>& a) {
    T e = exp(a.v);
    return {e, a.d * e};
}

template <class T>
Dual<T> log(const Dual<T>& a) {
    return {log(a.v), a.d / a.v};
}

inline double abs_value(double x) { return std::fabs(x); }
template <class T>
double abs_value(const Dual<T>& x) { return std::fabs(value(x)); }

}  // namespace finsler
