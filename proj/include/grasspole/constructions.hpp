/*
   Copyright 2026 The grasspole Authors

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

/**
 * @file constructions.hpp
 * @brief Osculating normal curves, monomial systems, MDS checks and Cauchy-based builders.
 */

#ifndef GRASSPOLE_CONSTRUCTIONS_HPP
#define GRASSPOLE_CONSTRUCTIONS_HPP

#include <deque>
#include <optional>
#include <utility>
#include <vector>

#include "systems.hpp"

namespace grasspole {

/// Entry (i, j) is the i-th derivative of s^j; rows i < p, columns j < m + p.
inline PolyMatrix osculating_curve_classical(std::size_t p, std::size_t m, FieldHandle f) {
    PolyMatrix M(f, p, m + p);
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < m + p; ++j) M(i, j) = classical_derivative(Poly::monomial(Scalar::one(f), j), i);
    }
    return M;
}

/// Entry (i, j) = C(j, i) s^{j-i}.
inline PolyMatrix osculating_curve_hasse(std::size_t p, std::size_t m, FieldHandle f) {
    PolyMatrix M(f, p, m + p);
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < m + p; ++j) M(i, j) = hasse_derivative(Poly::monomial(Scalar::one(f), j), i);
    }
    return M;
}

/// Lex-least column subset with an identically zero maximal minor.
inline std::optional<MultiIndex> find_zero_maximal_minor(const PolyMatrix& M) {
    for (const auto& alpha : subsets(M.cols(), M.rows())) {
        if (column_minor(M, alpha).is_zero()) return alpha;
    }
    return std::nullopt;
}

inline std::vector<std::size_t> zero_rows(const PolyMatrix& M) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < M.rows(); ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < M.cols() && zero; ++j) zero = M(i, j).is_zero();
        if (zero) out.push_back(i);
    }
    return out;
}

struct DegreeMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<int> d;  // row-major, nonnegative

    DegreeMatrix() = default;
    DegreeMatrix(std::size_t r, std::size_t c, std::vector<int> values) : rows(r), cols(c), d(std::move(values)) {
        if (d.size() != r * c) fail(ErrorCode::DimensionMismatch, "degree matrix size mismatch");
        for (int x : d) {
            if (x < 0) fail(ErrorCode::DegreeLawViolation, "degrees must be nonnegative");
        }
    }

    int operator()(std::size_t i, std::size_t j) const { return d[i * cols + j]; }
};

/**
 * Finds (r, c) with d(i,j) = r_i + c_j for every (i,j) where `support` is true, by propagating
 * along the bipartite support graph. Entries outside the support are unconstrained.
 */
inline std::optional<std::pair<std::vector<int>, std::vector<int>>> decompose_degrees(const DegreeMatrix& D,
                                                                                    const std::vector<bool>& support) {
    std::vector<std::optional<int>> r(D.rows), c(D.cols);
    for (std::size_t start = 0; start < D.rows; ++start) {
        if (r[start]) continue;
        r[start] = 0;
        std::deque<std::pair<bool, std::size_t>> queue{{true, start}};
        while (!queue.empty()) {
            const auto [is_row, k] = queue.front();
            queue.pop_front();
            if (is_row) {
                for (std::size_t j = 0; j < D.cols; ++j) {
                    if (!support[k * D.cols + j]) continue;
                    const int want = D(k, j) - *r[k];
                    if (!c[j]) {
                        c[j] = want;
                        queue.emplace_back(false, j);
                    } else if (*c[j] != want) {
                        return std::nullopt;
                    }
                }
            } else {
                for (std::size_t i = 0; i < D.rows; ++i) {
                    if (!support[i * D.cols + k]) continue;
                    const int want = D(i, k) - *c[k];
                    if (!r[i]) {
                        r[i] = want;
                        queue.emplace_back(true, i);
                    } else if (*r[i] != want) {
                        return std::nullopt;
                    }
                }
            }
        }
    }
    std::pair<std::vector<int>, std::vector<int>> out;
    for (auto& x : r) out.first.push_back(*x);
    for (auto& x : c) out.second.push_back(x.value_or(0));
    return out;
}

struct MonomialSystem {
    ConstMatrix coefficients;
    DegreeMatrix degrees;
    PolyMatrix realized;

    FactoredSystem to_factored() const { return FactoredSystem::from_matrix(realized); }
};

/**
 * Realizes alpha_{ij} s^{d_ij}. The degree law is required on the support of the coefficient
 * matrix (zero coefficients leave their degree free); every maximal minor is then checked to be
 * a monomial or zero. Throws DegreeLawViolation.
 */
inline MonomialSystem monomial_matrix(const ConstMatrix& coeffs, const DegreeMatrix& degrees) {
    if (coeffs.rows() != degrees.rows || coeffs.cols() != degrees.cols) {
        fail(ErrorCode::DimensionMismatch, "coefficient and degree matrices differ in shape");
    }
    std::vector<bool> support(coeffs.rows() * coeffs.cols());
    for (std::size_t i = 0; i < coeffs.rows(); ++i) {
        for (std::size_t j = 0; j < coeffs.cols(); ++j) support[i * coeffs.cols() + j] = !coeffs(i, j).is_zero();
    }
    if (!decompose_degrees(degrees, support)) fail(ErrorCode::DegreeLawViolation, "no d_ij = r_i + c_j on the support");
    PolyMatrix M(coeffs.field(), coeffs.rows(), coeffs.cols());
    for (std::size_t i = 0; i < coeffs.rows(); ++i) {
        for (std::size_t j = 0; j < coeffs.cols(); ++j) {
            M(i, j) = Poly::monomial(coeffs(i, j), static_cast<std::size_t>(degrees(i, j)));
        }
    }
    if (M.rows() <= M.cols()) {
        for (const auto& minor : maximal_minors(M)) {
            if (!minor.is_zero() && !minor.is_monomial()) fail(ErrorCode::DegreeLawViolation, "a maximal minor is not a monomial");
        }
    }
    return {coeffs, degrees, std::move(M)};
}

/// All maximal minors nonzero.
inline bool mds_check(const ConstMatrix& M) {
    if (M.rows() > M.cols()) return false;
    for (const auto& alpha : subsets(M.cols(), M.rows())) {
        if (column_minor(M, alpha).is_zero()) return false;
    }
    return true;
}

/// All minors of all sizes nonzero.
inline bool superregular_check(const ConstMatrix& R) {
    for (std::size_t k = 1; k <= std::min(R.rows(), R.cols()); ++k) {
        for (const auto& rows : subsets(R.rows(), k)) {
            for (const auto& cols : subsets(R.cols(), k)) {
                if (det(R.submatrix(rows.columns(), cols.columns())).is_zero()) return false;
            }
        }
    }
    return true;
}

namespace detail {

inline bool cauchy_parameters_valid(const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t k = i + 1; k < x.size(); ++k) {
            if (x[i] == x[k]) return false;
        }
        for (const auto& yj : y) {
            if ((x[i] + yj).is_zero()) return false;
        }
    }
    for (std::size_t j = 0; j < y.size(); ++j) {
        for (std::size_t k = j + 1; k < y.size(); ++k) {
            if (y[j] == y[k]) return false;
        }
    }
    return true;
}

}  // namespace detail

/**
 * p x m Cauchy matrix R_ij = 1/(x_i + y_j), superregular for distinct x, distinct y and
 * x_i + y_j != 0. Tries x_i = i, y_j = p + j first; otherwise takes p + m distinct field elements
 * e and sets x_i = e_i, y_j = -e_{p+j}. Throws FieldTooSmall when q < p + m.
 */
inline ConstMatrix cauchy_matrix(std::size_t p, std::size_t m, FieldHandle f) {
    if (f->is_finite() && f->order() < p + m) {
        fail(ErrorCode::FieldTooSmall, "need at least p + m = " + std::to_string(p + m) + " field elements");
    }
    std::vector<Scalar> x, y;
    for (std::size_t i = 0; i < p; ++i) x.push_back(Scalar::from_int(f, static_cast<long long>(i)));
    for (std::size_t j = 0; j < m; ++j) y.push_back(Scalar::from_int(f, static_cast<long long>(p + j)));
    if (!detail::cauchy_parameters_valid(x, y)) {
        const auto elements = enumerate_field(f);
        for (std::size_t i = 0; i < p; ++i) x[i] = elements[i];
        for (std::size_t j = 0; j < m; ++j) y[j] = -elements[p + j];
        if (!detail::cauchy_parameters_valid(x, y)) fail(ErrorCode::FieldTooSmall, "no valid Cauchy parameters");
    }
    ConstMatrix R(f, p, m);
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < m; ++j) R(i, j) = (x[i] + y[j]).inverse();
    }
    return R;
}

/**
 * [I_p R] with R Cauchy, degrees d_ij = max(j - i, 0), and for n > mp the last column raised by
 * n - mp. The result is verified superregular, left prime and of degree n.
 */
inline MonomialSystem main_theorem_system(std::size_t p, std::size_t m, FieldHandle f, std::optional<std::size_t> n = {}) {
    const std::size_t target = n.value_or(m * p);
    if (target < m * p) fail(ErrorCode::InvalidArgument, "n must be at least m p");
    const ConstMatrix R = cauchy_matrix(p, m, f);
    if (!superregular_check(R)) fail(ErrorCode::FieldTooSmall, "Cauchy matrix is not superregular");
    const ConstMatrix coeffs = ConstMatrix::identity(f, p).hstack(R);
    const std::size_t N = m + p;
    std::vector<int> d(p * N);
    for (std::size_t i = 0; i < p; ++i) {
        for (std::size_t j = 0; j < N; ++j) d[i * N + j] = j >= i ? static_cast<int>(j - i) : 0;
        d[i * N + N - 1] += static_cast<int>(target - m * p);
    }
    MonomialSystem sys = monomial_matrix(coeffs, DegreeMatrix(p, N, std::move(d)));
    const int degree = system_degree(sys.realized);
    if (degree != static_cast<int>(target) || !is_left_prime(sys.realized)) {
        fail(ErrorCode::InvalidArgument, "constructed system has unexpected degree or is not left prime");
    }
    return sys;
}

}  // namespace grasspole

#endif  // GRASSPOLE_CONSTRUCTIONS_HPP
