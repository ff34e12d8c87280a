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
#include <stdexcept>
#include <string>
#include <vector>

#include "kssparse/matrix.hpp"

namespace kss {

/// Thrown when the Jacobi iteration exhausts its sweep budget.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double residual) : std::runtime_error(what), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

/// Eigenvalues ascending; column j of `vectors` belongs to values[j].
struct EigenDecomposition {
    std::vector<double> values;
    Matrix vectors;

    Matrix reconstruct() const;
};

/// Relative symmetry tolerance accepted by the eigensolver.
inline constexpr double kSymmetryTolerance = 1e-12;

/// Cyclic Jacobi eigendecomposition of a symmetric matrix.
///
/// Throws std::invalid_argument for a non-square or non-symmetric input and
/// ConvergenceError (carrying the off-diagonal residual) if the sweep budget
/// runs out.
EigenDecomposition eig_sym(const Matrix& a);

/// Eigenvalues only, ascending. Same algorithm without accumulating vectors.
std::vector<double> eigenvalues_sym(const Matrix& a);

/// Default relative rank tolerance for pinv: n * 2^-52.
double default_rank_tolerance(std::size_t n);

/// Moore-Penrose pseudoinverse of a symmetric matrix. Eigenvalues with
/// |lambda| <= rank_tol * max|lambda| are treated as zero.
Matrix pinv(const Matrix& a, std::optional<double> rank_tol = std::nullopt);

/// V f(Lambda) V^T applied to the eigenvalues that survive the rank cut.
/// Used for the pseudo-inverse square root.
Matrix pinv_sqrt(const Matrix& a, std::optional<double> rank_tol = std::nullopt);

/// True iff B - A is PSD: min eig(B - A) >= -tol * max(1, max|eig(B - A)|).
bool loewner_leq(const Matrix& a, const Matrix& b, double tol = 1e-9);

}  // namespace kss
