/*
Copyright 2026 The kssparse Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "kssparse/graph.hpp"
#include "kssparse/matrix.hpp"

namespace kss {

/// Coordinates on range(L_G) in which L_G becomes the identity.
///
/// `whitening` is the rank x n matrix Lambda_r^{-1/2} V_r^T, so that for any
/// PSD L_H the matrix whitening * L_H * whitening^T is the normalized form
/// L_G^{+1/2} L_H L_G^{+1/2} restricted to range(L_G). `kernel` holds an
/// orthonormal basis of ker(L_G) as columns.
struct RangeFrame {
    std::size_t n = 0;
    std::size_t rank = 0;
    Matrix whitening;
    Matrix kernel;
    double lambda_max = 0.0;
};

/// Frame from the `kernel_dim` smallest eigenvalues being treated as zero.
RangeFrame range_frame(const Matrix& lg, std::size_t kernel_dim);

/// Frame with kernel chosen by |lambda| <= rank_tol * lambda_max.
RangeFrame range_frame_by_tolerance(const Matrix& lg, double rank_tol);

/// Frame of a graph Laplacian; the kernel dimension is the component count.
RangeFrame range_frame(const WeightedGraph& g);

/// Which form of approximation statement a verdict refers to.
enum class Convention {
    Linear,       ///< (1 - eps) L_G <= L_H <= (1 + eps) L_G
    Exponential,  ///< e^{-eps} L_G <= L_H <= e^{eps} L_G
};

std::string_view to_string(Convention c);

/// Extreme generalized eigenvalues of (L_H, L_G) on range(L_G).
struct ApproxCertificate {
    double lower = 1.0;  ///< a
    double upper = 1.0;  ///< b
    bool kernel_match = true;
    std::size_t rank_g = 0;
    std::size_t rank_h = 0;
    /// Vertex-space vectors x attaining x^T L_H x = a x^T L_G x (resp. b).
    std::vector<double> witness_lower;
    std::vector<double> witness_upper;

    /// max(b - 1, 1 - a)
    double epsilon() const;
    /// max(log b, -log a); infinite when a <= 0.
    double epsilon_exp() const;
    double epsilon(Convention c) const { return c == Convention::Linear ? epsilon() : epsilon_exp(); }
};

/// Absolute slack allowed on a and b when certifying.
inline constexpr double kCertifyTolerance = 1e-9;

/// Relative rank tolerance used when only matrices are available.
inline constexpr double kMatrixRankTolerance = 1e-10;

ApproxCertificate approx_factors(const RangeFrame& frame, const Matrix& lh, std::size_t rank_h);

/// Matrix-level certificate. Ranks of both inputs use `rank_tol` relative to
/// their own largest eigenvalue. Throws std::invalid_argument on a dimension
/// mismatch.
ApproxCertificate approx_factors(const Matrix& lg, const Matrix& lh, double rank_tol = kMatrixRankTolerance);

/// Graph-level certificate; ranks come from component counts.
ApproxCertificate approx_factors(const WeightedGraph& g, const WeightedGraph& h);

/// kernel_match and the factor bounds at `epsilon` under `convention`, with
/// kCertifyTolerance absolute slack on a and b.
bool certifies(const ApproxCertificate& cert, double epsilon, Convention convention = Convention::Linear);

/// Throws std::invalid_argument unless 0 < epsilon < 1.
bool is_epsilon_approx(const Matrix& lg, const Matrix& lh, double epsilon,
                       Convention convention = Convention::Linear);
bool is_epsilon_approx(const WeightedGraph& g, const WeightedGraph& h, double epsilon,
                       Convention convention = Convention::Linear);

}  // namespace kss
