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

#include "kssparse/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace kss {

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::diagonal(std::span<const double> d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Matrix& Matrix::operator+=(const Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix dimension mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix dimension mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(double s) {
    for (double& x : data_) x *= s;
    return *this;
}

void Matrix::add_outer(std::span<const double> x, double s) {
    assert(square() && x.size() == rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        const double xi = s * x[i];
        if (xi == 0.0) continue;
        double* r = data_.data() + i * cols_;
        for (std::size_t j = 0; j < cols_; ++j) r[j] += xi * x[j];
    }
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(Matrix a, double s) { return a *= s; }
Matrix operator*(double s, Matrix a) { return a *= s; }

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

std::vector<double> operator*(const Matrix& a, std::span<const double> x) {
    if (a.cols() != x.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
    std::vector<double> y(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) y[i] = dot(a.row(i), x);
    return y;
}

double frobenius_norm(const Matrix& a) {
    double s = 0.0;
    for (double x : a.data()) s += x * x;
    return std::sqrt(s);
}

double max_abs(const Matrix& a) {
    double s = 0.0;
    for (double x : a.data()) s = std::max(s, std::abs(x));
    return s;
}

double dot(std::span<const double> x, std::span<const double> y) {
    assert(x.size() == y.size());
    return std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
}

double norm2(std::span<const double> x) { return std::sqrt(dot(x, x)); }

double asymmetry(const Matrix& a) {
    if (!a.square()) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j) {
            const double scale = std::max(1.0, std::abs(a(i, j)));
            worst = std::max(worst, std::abs(a(i, j) - a(j, i)) / scale);
        }
    return worst;
}

// ---------------------------------------------------------------------------
// Jacobi

namespace {

constexpr int kMaxSweeps = 100;

void check_symmetric(const Matrix& a) {
    if (!a.square()) throw std::invalid_argument("eigendecomposition requires a square matrix");
    if (asymmetry(a) > kSymmetryTolerance) throw std::invalid_argument("eigendecomposition requires a symmetric matrix");
}

double off_diagonal_norm(const Matrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j) s += a(i, j) * a(i, j);
    return std::sqrt(2.0 * s);
}

// Rotates rows/columns p and q of the symmetric working copy so that a(p,q)
// becomes zero. Only the upper triangle is kept consistent.
template <bool WithVectors>
void diagonalize(Matrix& a, Matrix* v) {
    const std::size_t n = a.rows();
    // symmetrize from the upper triangle
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double avg = 0.5 * (a(i, j) + a(j, i));
            a(i, j) = avg;
            a(j, i) = avg;
        }
    const double scale = frobenius_norm(a);
    if (scale == 0.0 || n < 2) return;
    const double target = 1e-17 * scale;

    double previous = std::numeric_limits<double>::infinity();
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        const double off = off_diagonal_norm(a);
        if (off <= target) return;
        // roundoff floor reached
        if (off >= previous && off <= 1e-13 * scale) return;
        previous = off;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                const double app = a(p, p);
                const double aqq = a(q, q);
                const double theta = (aqq - app) / (2.0 * apq);
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0.0) t = -t;
                if (!std::isfinite(theta)) t = 0.5 / theta;  // |theta| overflowed: t ~ 1/(2 theta)
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = a(q, p) = 0.0;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = a(r, p);
                    const double arq = a(r, q);
                    const double np = c * arp - s * arq;
                    const double nq = s * arp + c * arq;
                    a(r, p) = a(p, r) = np;
                    a(r, q) = a(q, r) = nq;
                }
                if constexpr (WithVectors) {
                    Matrix& vm = *v;
                    for (std::size_t r = 0; r < n; ++r) {
                        const double vrp = vm(r, p);
                        const double vrq = vm(r, q);
                        vm(r, p) = c * vrp - s * vrq;
                        vm(r, q) = s * vrp + c * vrq;
                    }
                }
            }
        }
    }
    const double off = off_diagonal_norm(a);
    if (off > 1e-13 * scale)
        throw ConvergenceError("Jacobi eigensolver did not converge (off-diagonal residual " + std::to_string(off) + ")",
                               off);
}

}  // namespace

Matrix EigenDecomposition::reconstruct() const {
    Matrix scaled = vectors;
    for (std::size_t i = 0; i < scaled.rows(); ++i)
        for (std::size_t j = 0; j < scaled.cols(); ++j) scaled(i, j) *= values[j];
    return scaled * vectors.transpose();
}

EigenDecomposition eig_sym(const Matrix& a) {
    check_symmetric(a);
    const std::size_t n = a.rows();
    Matrix work = a;
    Matrix v = Matrix::identity(n);
    diagonalize<true>(work, &v);

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return work(i, i) < work(j, j); });

    EigenDecomposition out{std::vector<double>(n), Matrix(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = work(order[k], order[k]);
        for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
    }
    return out;
}

std::vector<double> eigenvalues_sym(const Matrix& a) {
    check_symmetric(a);
    Matrix work = a;
    diagonalize<false>(work, nullptr);
    std::vector<double> values(a.rows());
    for (std::size_t i = 0; i < values.size(); ++i) values[i] = work(i, i);
    std::sort(values.begin(), values.end());
    return values;
}

double default_rank_tolerance(std::size_t n) {
    return static_cast<double>(n) * std::numeric_limits<double>::epsilon();
}

namespace {

template <typename F>
Matrix spectral_map(const Matrix& a, std::optional<double> rank_tol, F f) {
    const EigenDecomposition eig = eig_sym(a);
    const std::size_t n = a.rows();
    double largest = 0.0;
    for (double x : eig.values) largest = std::max(largest, std::abs(x));
    const double cut = rank_tol.value_or(default_rank_tolerance(n)) * largest;
    Matrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double lambda = eig.values[k];
        if (std::abs(lambda) <= cut || lambda == 0.0) continue;
        const double g = f(lambda);
        for (std::size_t i = 0; i < n; ++i) {
            const double vik = g * eig.vectors(i, k);
            if (vik == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * eig.vectors(j, k);
        }
    }
    return out;
}

}  // namespace

Matrix pinv(const Matrix& a, std::optional<double> rank_tol) {
    if (rank_tol && *rank_tol < 0.0) throw std::invalid_argument("rank tolerance must be non-negative");
    return spectral_map(a, rank_tol, [](double lambda) { return 1.0 / lambda; });
}

Matrix pinv_sqrt(const Matrix& a, std::optional<double> rank_tol) {
    if (rank_tol && *rank_tol < 0.0) throw std::invalid_argument("rank tolerance must be non-negative");
    return spectral_map(a, rank_tol, [](double lambda) {
        if (lambda < 0.0) throw std::invalid_argument("pinv_sqrt requires a positive semidefinite matrix");
        return 1.0 / std::sqrt(lambda);
    });
}

bool loewner_leq(const Matrix& a, const Matrix& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("loewner_leq: dimension mismatch");
    const std::vector<double> values = eigenvalues_sym(b - a);
    if (values.empty()) return true;
    const double magnitude = std::max(std::abs(values.front()), std::abs(values.back()));
    return values.front() >= -tol * std::max(1.0, magnitude);
}

}  // namespace kss
