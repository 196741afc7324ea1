#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "finsler/dual.hpp"
#include "finsler/errors.hpp"

namespace finsler {

/// Dense rank-3 tensor, row-major (i*n*n + j*n + k). Dimensions here are
/// tiny (n <= 8), so a flat vector is all we need.
class Tensor3 {
public:
    Tensor3() = default;
    explicit Tensor3(int n) : n_(n), a_(static_cast<std::size_t>(n) * n * n, 0.0) {}

    int dim() const { return n_; }
    double& operator()(int i, int j, int k) { return a_[idx(i, j, k)]; }
    double operator()(int i, int j, int k) const { return a_[idx(i, j, k)]; }

    const std::vector<double>& data() const { return a_; }
    std::vector<double>& data() { return a_; }

    double max_abs() const {
        double m = 0.0;
        for (double x : a_) m = std::max(m, std::fabs(x));
        return m;
    }

    /// Largest deviation over all 6 index permutations.
    double symmetry_defect() const {
        double m = 0.0;
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                for (int k = 0; k < n_; ++k) {
                    double a = (*this)(i, j, k);
                    m = std::max(m, std::fabs(a - (*this)(i, k, j)));
                    m = std::max(m, std::fabs(a - (*this)(j, i, k)));
                    m = std::max(m, std::fabs(a - (*this)(j, k, i)));
                    m = std::max(m, std::fabs(a - (*this)(k, i, j)));
                    m = std::max(m, std::fabs(a - (*this)(k, j, i)));
                }
        return m;
    }

private:
    std::size_t idx(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * n_ + j) * n_ + k;
    }
    int n_ = 0;
    std::vector<double> a_;
};

/// Dense rank-4 tensor, row-major; used for the indicatrix curvature tensor.
class Tensor4 {
public:
    Tensor4() = default;
    explicit Tensor4(int n) : n_(n), a_(static_cast<std::size_t>(n) * n * n * n, 0.0) {}

    int dim() const { return n_; }
    double& operator()(int i, int j, int k, int l) { return a_[idx(i, j, k, l)]; }
    double operator()(int i, int j, int k, int l) const { return a_[idx(i, j, k, l)]; }
    const std::vector<double>& data() const { return a_; }

    double max_abs() const {
        double m = 0.0;
        for (double x : a_) m = std::max(m, std::fabs(x));
        return m;
    }

private:
    std::size_t idx(int i, int j, int k, int l) const {
        return ((static_cast<std::size_t>(i) * n_ + j) * n_ + k) * n_ + l;
    }
    int n_ = 0;
    std::vector<double> a_;
};

/// Solve A x = rhs by Gaussian elimination with partial pivoting over a
/// generic scalar ring (doubles or nested duals). A is n x n row-major and
/// is consumed.
template <class T>
std::vector<T> solve_dense(std::vector<T> A, std::vector<T> rhs, int n) {
    for (int col = 0; col < n; ++col) {
        int piv = col;
        double best = abs_value(A[static_cast<std::size_t>(col) * n + col]);
        for (int r = col + 1; r < n; ++r) {
            double cand = abs_value(A[static_cast<std::size_t>(r) * n + col]);
            if (cand > best) { best = cand; piv = r; }
        }
        if (best == 0.0) throw ValidityError("singular matrix in solve_dense");
        if (piv != col) {
            for (int c = 0; c < n; ++c)
                std::swap(A[static_cast<std::size_t>(piv) * n + c], A[static_cast<std::size_t>(col) * n + c]);
            std::swap(rhs[piv], rhs[col]);
        }
        for (int r = col + 1; r < n; ++r) {
            T f = A[static_cast<std::size_t>(r) * n + col] / A[static_cast<std::size_t>(col) * n + col];
            for (int c = col; c < n; ++c)
                A[static_cast<std::size_t>(r) * n + c] -= f * A[static_cast<std::size_t>(col) * n + c];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<T> x(static_cast<std::size_t>(n));
    for (int r = n - 1; r >= 0; --r) {
        T acc = rhs[r];
        for (int c = r + 1; c < n; ++c) acc -= A[static_cast<std::size_t>(r) * n + c] * x[c];
        x[r] = acc / A[static_cast<std::size_t>(r) * n + r];
    }
    return x;
}

inline std::vector<double> to_std(const Eigen::VectorXd& v) {
    return std::vector<double>(v.data(), v.data() + v.size());
}

inline Eigen::VectorXd to_eigen(const std::vector<double>& v) {
    return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

}  // namespace finsler
