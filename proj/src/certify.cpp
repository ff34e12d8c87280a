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

#include "kssparse/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "kssparse/linalg.hpp"

namespace kss {

namespace {

RangeFrame frame_from(const EigenDecomposition& eig, std::size_t kernel_dim) {
    const std::size_t n = eig.values.size();
    RangeFrame frame;
    frame.n = n;
    frame.rank = n - kernel_dim;
    frame.lambda_max = n == 0 ? 0.0 : std::max(0.0, eig.values.back());
    frame.whitening = Matrix(frame.rank, n);
    frame.kernel = Matrix(n, kernel_dim);
    for (std::size_t k = 0; k < kernel_dim; ++k)
        for (std::size_t i = 0; i < n; ++i) frame.kernel(i, k) = eig.vectors(i, k);
    for (std::size_t r = 0; r < frame.rank; ++r) {
        const double lambda = eig.values[kernel_dim + r];
        if (!(lambda > 0.0)) throw std::invalid_argument("range frame: non-positive eigenvalue on the range");
        const double s = 1.0 / std::sqrt(lambda);
        for (std::size_t i = 0; i < n; ++i) frame.whitening(r, i) = s * eig.vectors(i, kernel_dim + r);
    }
    return frame;
}

std::size_t numerical_rank(std::span<const double> values, double rank_tol) {
    double largest = 0.0;
    for (double x : values) largest = std::max(largest, std::abs(x));
    const double cut = rank_tol * largest;
    return static_cast<std::size_t>(
        std::count_if(values.begin(), values.end(), [&](double x) { return std::abs(x) > cut && x != 0.0; }));
}

}  // namespace

RangeFrame range_frame(const Matrix& lg, std::size_t kernel_dim) {
    if (kernel_dim > lg.rows()) throw std::invalid_argument("range frame: kernel dimension exceeds size");
    return frame_from(eig_sym(lg), kernel_dim);
}

RangeFrame range_frame_by_tolerance(const Matrix& lg, double rank_tol) {
    const EigenDecomposition eig = eig_sym(lg);
    return frame_from(eig, eig.values.size() - numerical_rank(eig.values, rank_tol));
}

RangeFrame range_frame(const WeightedGraph& g) { return range_frame(laplacian(g), connected_components(g)); }

std::string_view to_string(Convention c) { return c == Convention::Linear ? "linear" : "exponential"; }

double ApproxCertificate::epsilon() const { return std::max(upper - 1.0, 1.0 - lower); }

double ApproxCertificate::epsilon_exp() const {
    if (!(lower > 0.0)) return std::numeric_limits<double>::infinity();
    return std::max(std::log(upper), -std::log(lower));
}

ApproxCertificate approx_factors(const RangeFrame& frame, const Matrix& lh, std::size_t rank_h) {
    if (lh.rows() != frame.n || lh.cols() != frame.n) throw std::invalid_argument("approx_factors: dimension mismatch");
    ApproxCertificate cert;
    cert.rank_g = frame.rank;
    cert.rank_h = rank_h;

    bool kernel_ok = rank_h == frame.rank;
    const double kernel_tol = 1e-9 * std::max(1.0, frobenius_norm(lh));
    for (std::size_t k = 0; k < frame.kernel.cols() && kernel_ok; ++k) {
        std::vector<double> x(frame.n);
        for (std::size_t i = 0; i < frame.n; ++i) x[i] = frame.kernel(i, k);
        if (norm2(lh * std::span<const double>(x)) > kernel_tol) kernel_ok = false;
    }
    cert.kernel_match = kernel_ok;

    if (frame.rank == 0) {
        cert.lower = cert.upper = 1.0;
        cert.witness_lower.assign(frame.n, 0.0);
        cert.witness_upper.assign(frame.n, 0.0);
        return cert;
    }
    Matrix normalized = frame.whitening * lh * frame.whitening.transpose();
    // symmetrize roundoff before the eigensolver's check
    for (std::size_t i = 0; i < normalized.rows(); ++i)
        for (std::size_t j = i + 1; j < normalized.cols(); ++j) {
            const double avg = 0.5 * (normalized(i, j) + normalized(j, i));
            normalized(i, j) = normalized(j, i) = avg;
        }
    const EigenDecomposition eig = eig_sym(normalized);
    cert.lower = eig.values.front();
    cert.upper = eig.values.back();

    auto lift = [&](std::size_t column) {
        std::vector<double> x(frame.n, 0.0);
        for (std::size_t r = 0; r < frame.rank; ++r)
            for (std::size_t i = 0; i < frame.n; ++i) x[i] += frame.whitening(r, i) * eig.vectors(r, column);
        return x;
    };
    cert.witness_lower = lift(0);
    cert.witness_upper = lift(frame.rank - 1);
    return cert;
}

ApproxCertificate approx_factors(const Matrix& lg, const Matrix& lh, double rank_tol) {
    if (lg.rows() != lh.rows() || lg.cols() != lh.cols() || !lg.square())
        throw std::invalid_argument("approx_factors: dimension mismatch");
    const RangeFrame frame = range_frame_by_tolerance(lg, rank_tol);
    return approx_factors(frame, lh, numerical_rank(eigenvalues_sym(lh), rank_tol));
}

ApproxCertificate approx_factors(const WeightedGraph& g, const WeightedGraph& h) {
    if (g.n() != h.n()) throw std::invalid_argument("approx_factors: graphs have different vertex counts");
    return approx_factors(range_frame(g), laplacian(h), h.n() - connected_components(h));
}

bool certifies(const ApproxCertificate& cert, double epsilon, Convention convention) {
    if (!cert.kernel_match) return false;
    const double lo = convention == Convention::Linear ? 1.0 - epsilon : std::exp(-epsilon);
    const double hi = convention == Convention::Linear ? 1.0 + epsilon : std::exp(epsilon);
    return cert.lower >= lo - kCertifyTolerance && cert.upper <= hi + kCertifyTolerance;
}

namespace {

void check_epsilon(double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
}

}  // namespace

bool is_epsilon_approx(const Matrix& lg, const Matrix& lh, double epsilon, Convention convention) {
    check_epsilon(epsilon);
    return certifies(approx_factors(lg, lh), epsilon, convention);
}

bool is_epsilon_approx(const WeightedGraph& g, const WeightedGraph& h, double epsilon, Convention convention) {
    check_epsilon(epsilon);
    return certifies(approx_factors(g, h), epsilon, convention);
}

}  // namespace kss
