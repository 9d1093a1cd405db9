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
 * @file matrix.hpp
 * @brief Dense matrices over a field (ConstMatrix) and over F[s] (PolyMatrix).
 *
 * Determinants use fraction-free Bareiss elimination, so polynomial matrices never leave F[s].
 * Minor lists are always ordered by the lex order of the column multi-index.
 */

#ifndef GRASSPOLE_MATRIX_HPP
#define GRASSPOLE_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "combinatorics.hpp"
#include "field.hpp"
#include "poly.hpp"

namespace grasspole {

template <class T>
struct element_traits;

template <>
struct element_traits<Scalar> {
    static Scalar zero(FieldHandle f) { return Scalar::zero(f); }
    static Scalar one(FieldHandle f) { return Scalar::one(f); }
};

template <>
struct element_traits<Poly> {
    static Poly zero(FieldHandle f) { return Poly(f); }
    static Poly one(FieldHandle f) { return Poly::constant(Scalar::one(f)); }
};

template <class T>
class Matrix {
   public:
    Matrix() = default;

    Matrix(FieldHandle f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), data_(rows * cols, element_traits<T>::zero(f)) {}

    Matrix(FieldHandle f, std::size_t rows, std::size_t cols, std::vector<T> data)
        : field_(f), rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows * cols) fail(ErrorCode::DimensionMismatch, "matrix data size mismatch");
        for (const auto& x : data_) {
            if (x.field() != field_) fail(ErrorCode::FieldMismatch, "matrix entry outside the matrix's field");
        }
    }

    static Matrix identity(FieldHandle f, std::size_t n) {
        Matrix I(f, n, n);
        for (std::size_t i = 0; i < n; ++i) I(i, i) = element_traits<T>::one(f);
        return I;
    }

    FieldHandle field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    const std::vector<T>& data() const noexcept { return data_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const {
        for (const auto& x : data_) {
            if (!x.is_zero()) return false;
        }
        return true;
    }

    Matrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
        Matrix out(field_, rows.size(), cols.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
        }
        return out;
    }

    Matrix select_columns(std::span<const std::size_t> cols) const {
        Matrix out(field_, rows_, cols.size());
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(i, cols[j]);
        }
        return out;
    }

    Matrix column_range(std::size_t first, std::size_t count) const {
        std::vector<std::size_t> cols(count);
        for (std::size_t j = 0; j < count; ++j) cols[j] = first + j;
        return select_columns(cols);
    }

    Matrix transpose() const {
        Matrix out(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        }
        return out;
    }

    Matrix hstack(const Matrix& rhs) const {
        if (rows_ != rhs.rows_) fail(ErrorCode::DimensionMismatch, "hstack needs equal row counts");
        Matrix out(field_, rows_, cols_ + rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, cols_ + j) = rhs(i, j);
        }
        return out;
    }

    Matrix vstack(const Matrix& rhs) const {
        if (cols_ != rhs.cols_) fail(ErrorCode::DimensionMismatch, "vstack needs equal column counts");
        std::vector<T> data(data_);
        data.insert(data.end(), rhs.data_.begin(), rhs.data_.end());
        return Matrix(field_, rows_ + rhs.rows_, cols_, std::move(data));
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix out(a);
        for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
        return out;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.require_same_shape(b);
        Matrix out(a);
        for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) fail(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
        if (a.field_ != b.field_) fail(ErrorCode::FieldMismatch, "matrices over different fields");
        Matrix out(a.field_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& x = a(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
            }
        }
        return out;
    }

    Matrix scaled(const T& c) const {
        Matrix out(*this);
        for (auto& x : out.data_) x = x * c;
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

   private:
    void require_same_shape(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) fail(ErrorCode::DimensionMismatch, "matrix shape mismatch");
        if (field_ != b.field_) fail(ErrorCode::FieldMismatch, "matrices over different fields");
    }

    FieldHandle field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using ConstMatrix = Matrix<Scalar>;
using PolyMatrix = Matrix<Poly>;

inline ConstMatrix const_matrix(FieldHandle f, std::size_t rows, std::size_t cols, std::initializer_list<long long> v) {
    std::vector<Scalar> d;
    for (auto x : v) d.push_back(Scalar::from_int(f, x));
    return ConstMatrix(f, rows, cols, std::move(d));
}

inline PolyMatrix to_poly_matrix(const ConstMatrix& M) {
    PolyMatrix out(M.field(), M.rows(), M.cols());
    for (std::size_t i = 0; i < M.rows(); ++i) {
        for (std::size_t j = 0; j < M.cols(); ++j) out(i, j) = Poly::constant(M(i, j));
    }
    return out;
}

/// s I - A
inline PolyMatrix characteristic_matrix(const ConstMatrix& A) {
    if (!A.is_square()) fail(ErrorCode::NonSquare, "characteristic matrix of a non-square matrix");
    return PolyMatrix::identity(A.field(), A.rows()).scaled(Poly::s(A.field())) - to_poly_matrix(A);
}

inline ConstMatrix evaluate(const PolyMatrix& M, const Scalar& x) {
    ConstMatrix out(M.field(), M.rows(), M.cols());
    for (std::size_t i = 0; i < M.rows(); ++i) {
        for (std::size_t j = 0; j < M.cols(); ++j) out(i, j) = M(i, j)(x);
    }
    return out;
}

inline int max_degree(const PolyMatrix& M) {
    int d = neg_inf_degree;
    for (const auto& x : M.data()) d = std::max(d, x.degree());
    return d;
}

/// M = sum_k M_k s^k; returns M_0, ..., M_d (empty for the zero matrix).
inline std::vector<ConstMatrix> coefficient_matrices(const PolyMatrix& M) {
    const int d = max_degree(M);
    std::vector<ConstMatrix> out;
    for (int k = 0; k <= d; ++k) {
        ConstMatrix Mk(M.field(), M.rows(), M.cols());
        for (std::size_t i = 0; i < M.rows(); ++i) {
            for (std::size_t j = 0; j < M.cols(); ++j) Mk(i, j) = M(i, j).coefficient(static_cast<std::size_t>(k));
        }
        out.push_back(std::move(Mk));
    }
    return out;
}

inline ConstMatrix embed(const ConstMatrix& M, const QuadraticExtension& ext) {
    std::vector<Scalar> d;
    for (const auto& x : M.data()) d.push_back(ext.embed(x));
    return ConstMatrix(ext.field, M.rows(), M.cols(), std::move(d));
}

inline PolyMatrix embed(const PolyMatrix& M, const QuadraticExtension& ext) {
    std::vector<Poly> d;
    for (const auto& x : M.data()) d.push_back(embed(x, ext));
    return PolyMatrix(ext.field, M.rows(), M.cols(), std::move(d));
}

inline ConstMatrix random_matrix(FieldHandle f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    std::vector<Scalar> d;
    for (std::size_t i = 0; i < rows * cols; ++i) d.push_back(random_scalar(f, rng));
    return ConstMatrix(f, rows, cols, std::move(d));
}

/// Fraction-free (Bareiss) determinant; exact over a field and over F[s].
template <class T>
T det(Matrix<T> M) {
    if (!M.is_square()) fail(ErrorCode::NonSquare, "determinant of a non-square matrix");
    const std::size_t n = M.rows();
    const FieldHandle f = M.field();
    if (n == 0) return element_traits<T>::one(f);
    bool negate = false;
    T prev = element_traits<T>::one(f);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (M(k, k).is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && M(swap_row, k).is_zero()) ++swap_row;
            if (swap_row == n) return element_traits<T>::zero(f);
            for (std::size_t j = k; j < n; ++j) std::swap(M(k, j), M(swap_row, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                M(i, j) = exact_divide(M(i, j) * M(k, k) - M(i, k) * M(k, j), prev);
            }
        }
        prev = M(k, k);
    }
    T d = M(n - 1, n - 1);
    return negate ? -d : d;
}

/// Laplace expansion along the first row; an independent route for checking det().
template <class T>
T det_cofactor(const Matrix<T>& M) {
    if (!M.is_square()) fail(ErrorCode::NonSquare, "determinant of a non-square matrix");
    const std::size_t n = M.rows();
    if (n == 0) return element_traits<T>::one(M.field());
    if (n == 1) return M(0, 0);
    T total = element_traits<T>::zero(M.field());
    std::vector<std::size_t> rows(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) rows[i] = i + 1;
    for (std::size_t j = 0; j < n; ++j) {
        if (M(0, j).is_zero()) continue;
        std::vector<std::size_t> cols;
        for (std::size_t c = 0; c < n; ++c) {
            if (c != j) cols.push_back(c);
        }
        T term = M(0, j) * det_cofactor(M.submatrix(rows, cols));
        if (j % 2 == 0) {
            total += term;
        } else {
            total -= term;
        }
    }
    return total;
}

/// Determinant of the columns `cols` of a matrix with exactly cols.size() rows.
template <class T>
T column_minor(const Matrix<T>& M, const MultiIndex& cols) {
    return det(M.select_columns(cols.columns()));
}

/// All maximal (rows x rows) minors, indexed by the lex rank of the column multi-index.
template <class T>
std::vector<T> maximal_minors(const Matrix<T>& M) {
    if (M.rows() > M.cols()) fail(ErrorCode::DimensionMismatch, "maximal minors need rows <= cols");
    std::vector<T> out;
    for (const auto& alpha : subsets(M.cols(), M.rows())) out.push_back(column_minor(M, alpha));
    return out;
}

struct RrefResult {
    ConstMatrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // 0-based, strictly increasing
};

inline RrefResult rref(ConstMatrix M) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < M.cols() && r < M.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < M.rows() && M(pivot, c).is_zero()) ++pivot;
        if (pivot == M.rows()) continue;
        if (pivot != r) {
            for (std::size_t j = 0; j < M.cols(); ++j) std::swap(M(r, j), M(pivot, j));
        }
        const Scalar inv = M(r, c).inverse();
        for (std::size_t j = c; j < M.cols(); ++j) M(r, j) *= inv;
        for (std::size_t i = 0; i < M.rows(); ++i) {
            if (i == r || M(i, c).is_zero()) continue;
            const Scalar factor = M(i, c);
            for (std::size_t j = c; j < M.cols(); ++j) M(i, j) -= factor * M(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(M), r, std::move(pivots)};
}

inline std::size_t rank(const ConstMatrix& M) { return rref(M).rank; }

/// Rows form a basis of the right kernel {x : M x = 0}.
inline ConstMatrix nullspace(const ConstMatrix& M) {
    const RrefResult R = rref(M);
    std::vector<bool> is_pivot(M.cols(), false);
    for (auto c : R.pivots) is_pivot[c] = true;
    const std::size_t dim = M.cols() - R.rank;
    ConstMatrix basis(M.field(), dim, M.cols());
    std::size_t row = 0;
    for (std::size_t free = 0; free < M.cols(); ++free) {
        if (is_pivot[free]) continue;
        basis(row, free) = Scalar::one(M.field());
        for (std::size_t i = 0; i < R.rank; ++i) basis(row, R.pivots[i]) = -R.reduced(i, free);
        ++row;
    }
    return basis;
}

/// A particular solution of A x = b, or nullopt when the system is inconsistent.
inline std::optional<std::vector<Scalar>> solve(const ConstMatrix& A, const std::vector<Scalar>& b) {
    if (b.size() != A.rows()) fail(ErrorCode::DimensionMismatch, "right-hand side length mismatch");
    ConstMatrix aug(A.field(), A.rows(), A.cols() + 1);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) aug(i, j) = A(i, j);
        aug(i, A.cols()) = b[i];
    }
    const RrefResult R = rref(aug);
    if (!R.pivots.empty() && R.pivots.back() == A.cols()) return std::nullopt;
    std::vector<Scalar> x(A.cols(), Scalar::zero(A.field()));
    for (std::size_t i = 0; i < R.rank; ++i) x[R.pivots[i]] = R.reduced(i, A.cols());
    return x;
}

inline ConstMatrix inverse(const ConstMatrix& M) {
    if (!M.is_square()) fail(ErrorCode::NonSquare, "inverse of a non-square matrix");
    const std::size_t n = M.rows();
    const RrefResult R = rref(M.hstack(ConstMatrix::identity(M.field(), n)));
    if (R.rank < n || R.pivots[n - 1] >= n) fail(ErrorCode::RankDeficient, "matrix is singular");
    return R.reduced.column_range(n, n);
}

inline bool same_row_space(const ConstMatrix& a, const ConstMatrix& b) {
    const std::size_t ra = rank(a);
    return ra == rank(b) && rank(a.vstack(b)) == ra;
}

/**
 * Determinant of the vertical stack [K; M] with the constant m x (m+p) matrix K on top of the
 * p x (m+p) polynomial matrix M.
 */
inline Poly stacked_det(const ConstMatrix& K, const PolyMatrix& M) {
    if (K.cols() != M.cols() || K.rows() + M.rows() != M.cols()) {
        fail(ErrorCode::DimensionMismatch, "stacked matrix must be square with matching column counts");
    }
    return det(to_poly_matrix(K).vstack(M));
}

template <class T>
Matrix<T> adjugate(const Matrix<T>& M) {
    if (!M.is_square()) fail(ErrorCode::NonSquare, "adjugate of a non-square matrix");
    const std::size_t n = M.rows();
    Matrix<T> adj(M.field(), n, n);
    if (n == 1) {
        adj(0, 0) = element_traits<T>::one(M.field());
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::size_t> rows, cols;
            for (std::size_t r = 0; r < n; ++r) {
                if (r != j) rows.push_back(r);
            }
            for (std::size_t c = 0; c < n; ++c) {
                if (c != i) cols.push_back(c);
            }
            T minor = det(M.submatrix(rows, cols));
            adj(i, j) = (i + j) % 2 == 0 ? minor : -minor;
        }
    }
    return adj;
}

/// Left prime: the maximal minors have a nonzero constant gcd (full rank p at every point of the closure).
inline bool is_left_prime(const PolyMatrix& M) {
    Poly g(M.field());
    for (const auto& minor : maximal_minors(M)) g = gcd(g, minor);
    return !g.is_zero() && g.degree() == 0;
}

/// Max degree over the maximal minors; neg_inf_degree for rank-deficient matrices.
inline int system_degree(const PolyMatrix& M) {
    int d = neg_inf_degree;
    for (const auto& minor : maximal_minors(M)) d = std::max(d, minor.degree());
    return d;
}

inline bool has_full_column_rank(const PolyMatrix& T) {
    if (T.cols() > T.rows()) return false;
    std::vector<std::size_t> all_cols(T.cols());
    for (std::size_t j = 0; j < T.cols(); ++j) all_cols[j] = j;
    for (const auto& rows : subsets(T.rows(), T.cols())) {
        if (!det(T.submatrix(rows.columns(), all_cols)).is_zero()) return true;
    }
    return false;
}

namespace detail {

inline PolyMatrix rows_to_poly_matrix(FieldHandle f, std::size_t width, const std::vector<std::vector<Poly>>& rows) {
    std::vector<Poly> data;
    for (const auto& r : rows) data.insert(data.end(), r.begin(), r.end());
    return PolyMatrix(f, rows.size(), width, std::move(data));
}

}  // namespace detail

/**
 * Minimal polynomial basis of the left kernel of T ((R x n), full column rank over F(s)).
 *
 * Degree sweep: for d = 0, 1, ... solve the coefficient-wise linear system for kernel vectors of
 * degree <= d and keep those not generated by s-shifts of rows already found. Rows come out sorted
 * by degree and their leading coefficient vectors are independent. Throws DegreeBoundExceeded when
 * no complete basis appears by degree `degree_bound` (default: n).
 */
inline PolyMatrix left_kernel_min_basis(const PolyMatrix& T, std::optional<std::size_t> degree_bound = std::nullopt) {
    const FieldHandle F = T.field();
    const std::size_t R = T.rows(), n = T.cols();
    if (!has_full_column_rank(T)) fail(ErrorCode::RankDeficient, "left kernel basis needs full column rank");
    const std::size_t target = R - n;
    const std::size_t bound = degree_bound.value_or(n);
    const auto Tk = coefficient_matrices(T);
    const std::size_t dT = Tk.empty() ? 0 : Tk.size() - 1;

    std::vector<std::vector<Poly>> basis;
    std::vector<int> degrees;

    // Coefficient vector of a row of polynomials of degree <= d: index j * R + r holds coeff j of entry r.
    auto flatten = [&](const std::vector<Poly>& row, std::size_t d, std::size_t shift, ConstMatrix& out,
                       std::size_t out_row) {
        for (std::size_t r = 0; r < R; ++r) {
            const auto& c = row[r].coefficients();
            for (std::size_t j = 0; j < c.size() && j + shift <= d; ++j) out(out_row, (j + shift) * R + r) = c[j];
        }
    };

    if (target == 0) return PolyMatrix(F, 0, R);

    for (std::size_t d = 0; d <= bound; ++d) {
        const std::size_t unknowns = R * (d + 1);
        const std::size_t equations = n * (d + dT + 1);
        ConstMatrix A(F, equations, unknowns);
        for (std::size_t j = 0; j <= d; ++j) {
            for (std::size_t k = 0; k <= dT; ++k) {
                const std::size_t e = j + k;
                for (std::size_t r = 0; r < R; ++r) {
                    for (std::size_t c = 0; c < n; ++c) A(e * n + c, j * R + r) = Tk[k](r, c);
                }
            }
        }
        const ConstMatrix kernel = nullspace(A);

        std::size_t shifted = 0;
        for (std::size_t b = 0; b < basis.size(); ++b) shifted += d - static_cast<std::size_t>(degrees[b]) + 1;
        ConstMatrix span(F, shifted, unknowns);
        std::size_t row = 0;
        for (std::size_t b = 0; b < basis.size(); ++b) {
            for (std::size_t t = 0; t + static_cast<std::size_t>(degrees[b]) <= d; ++t) flatten(basis[b], d, t, span, row++);
        }
        std::size_t current_rank = rank(span);

        for (std::size_t v = 0; v < kernel.rows() && basis.size() < target; ++v) {
            ConstMatrix candidate(F, 1, unknowns);
            for (std::size_t i = 0; i < unknowns; ++i) candidate(0, i) = kernel(v, i);
            ConstMatrix extended = span.vstack(candidate);
            const std::size_t new_rank = rank(extended);
            if (new_rank == current_rank) continue;
            current_rank = new_rank;
            span = std::move(extended);
            std::vector<Poly> poly_row;
            for (std::size_t r = 0; r < R; ++r) {
                std::vector<Scalar> coeffs;
                for (std::size_t j = 0; j <= d; ++j) coeffs.push_back(kernel(v, j * R + r));
                poly_row.emplace_back(F, std::move(coeffs));
            }
            basis.push_back(std::move(poly_row));
            degrees.push_back(static_cast<int>(d));
        }
        if (basis.size() == target) return detail::rows_to_poly_matrix(F, R, basis);
    }
    fail(ErrorCode::DegreeBoundExceeded, "no minimal kernel basis found up to degree " + std::to_string(bound));
}

}  // namespace grasspole

#endif  // GRASSPOLE_MATRIX_HPP
