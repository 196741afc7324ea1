#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "finsler/invariants.hpp"
#include "finsler/linalg.hpp"
#include "finsler/norm.hpp"

namespace finsler {

/// g-orthonormal tangent frame of the indicatrix at a base direction.
/// rows of `vectors` span ker dF; g is the fundamental tensor at `base`.
struct IndicatrixFrame {
    Eigen::VectorXd base;     // y with F(y) = 1
    Eigen::MatrixXd vectors;  // (n-1) x n, row alpha = e_alpha
    Eigen::MatrixXd g;
};

/// Gram-Schmidt in the g-metric on ker dF, seeded by the coordinate axes in
/// index order (deterministic). y is rescaled to the indicatrix first.
IndicatrixFrame tangent_frame(const NormSpec& spec, Eigen::VectorXd y);

struct CubicData {
    Tensor3 C;          // C_abc = -A(e_a, e_b, e_c)
    Eigen::VectorXd T;  // T_a = -eta(e_a)/(n-1)
    double T2 = 0.0;    // sum T_a^2
};

CubicData cubic_and_tchebychev(const NormSpec& spec, const IndicatrixFrame& frame);

/// Gauss equation of the centroaffine indicatrix:
///   R_bgmn = -(d_bm d_gn - d_bn d_gm) + sum_a (C_abm C_agn - C_abn C_agm).
/// Sign convention pinned by C = 0 giving R_1212 = -1. Throws on an
/// asymmetric C.
Tensor4 gauss_curvature(const Tensor3& C);

/// Sectional values R_bgbg for all coordinate 2-planes b < g of the frame.
std::vector<double> sectional_values(const Tensor4& R);

struct CurvatureSample {
    double s = 0.0;
    double T2 = 0.0;
    double sect_min = 0.0;
    double sect_max = 0.0;
    double k_pred = 0.0;        // 1 - ((n-1)/n)^2 T2
    double isotropy_defect = 0.0;  // max |R + k (dd - dd)|
};

struct CurvatureReport {
    int n = 0;
    int requested = 0;
    int skipped = 0;   // rejected near s = +-b or outside the window
    bool small_dimension_warning = false;  // n = 3: no constancy claim
    std::vector<CurvatureSample> samples;
    double T2_mean = 0.0;
    double T2_spread = 0.0;      // max - min over samples
    double sect_spread = 0.0;    // max - min of all sectional values
};

/// Samples indicatrix points from seeded uniform directions, optionally
/// restricted to an s-window (one validity interval), and reports the
/// Tchebychev norm and sectional curvature statistics.
CurvatureReport constancy_sweep(const NormSpec& spec, int sample_count, std::uint64_t seed,
                                std::optional<std::pair<double, double>> s_window = {});

}  // namespace finsler
