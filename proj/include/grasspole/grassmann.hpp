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
 * @file grassmann.hpp
 * @brief Pluecker coordinates, decomposability and enumeration of Grass(r, F_q^N).
 */

#ifndef GRASSPOLE_GRASSMANN_HPP
#define GRASSPOLE_GRASSMANN_HPP

#include <cstdint>
#include <vector>

#include "combinatorics.hpp"
#include "matrix.hpp"

namespace grasspole {

/// Coordinates indexed by the lex rank of size-`size` subsets of {0..ambient-1}.
struct PluckerVector {
    std::size_t size = 0;
    std::size_t ambient = 0;
    std::vector<Scalar> coords;

    FieldHandle field() const { return coords.empty() ? FieldHandle{} : coords.front().field(); }

    bool is_zero() const {
        for (const auto& c : coords) {
            if (!c.is_zero()) return false;
        }
        return true;
    }

    const Scalar& at(const MultiIndex& alpha) const { return coords[alpha.rank()]; }

    /// Scales the first nonzero coordinate to 1.
    PluckerVector normalized() const {
        PluckerVector out(*this);
        for (const auto& c : coords) {
            if (c.is_zero()) continue;
            const Scalar inv = c.inverse();
            for (auto& x : out.coords) x *= inv;
            return out;
        }
        fail(ErrorCode::ZeroVector, "cannot normalize the zero vector");
    }

    bool proportional_to(const PluckerVector& other) const {
        if (size != other.size || ambient != other.ambient) return false;
        if (is_zero() || other.is_zero()) return is_zero() && other.is_zero();
        return normalized().coords == other.normalized().coords;
    }

    friend bool operator==(const PluckerVector&, const PluckerVector&) = default;
};

inline PluckerVector make_plucker(std::size_t size, std::size_t ambient, std::vector<Scalar> coords) {
    if (coords.size() != choose(ambient, size)) fail(ErrorCode::DimensionMismatch, "wrong number of Pluecker coordinates");
    return {size, ambient, std::move(coords)};
}

/// Maximal minors in lex order. Throws RankDeficient when the rows are dependent.
inline PluckerVector plucker_of_matrix(const ConstMatrix& M) {
    PluckerVector v{M.rows(), M.cols(), maximal_minors(M)};
    if (v.is_zero()) fail(ErrorCode::RankDeficient, "rows are linearly dependent");
    return v;
}

/// Unchecked variant for hot loops over matrices known to have full row rank.
inline std::vector<Scalar> plucker_coords(const ConstMatrix& M) { return maximal_minors(M); }

namespace detail {

inline Scalar signed_coord(const PluckerVector& v, std::vector<std::size_t> tuple) {
    auto sorted = sort_with_sign(std::move(tuple), v.ambient);
    if (!sorted) return Scalar::zero(v.field());
    const Scalar& c = v.at(sorted->first);
    return sorted->second > 0 ? c : -c;
}

}  // namespace detail

/**
 * Evaluates every Grassmann-Pluecker relation
 *   sum_k (-1)^k v[sigma + tau_k] v[tau - tau_k]
 * over all increasing sigma of size r-1 and tau of size r+1. Throws ZeroVector.
 */
inline bool is_decomposable(const PluckerVector& v) {
    if (v.is_zero()) fail(ErrorCode::ZeroVector, "decomposability of the zero vector");
    const std::size_t r = v.size, N = v.ambient;
    if (r <= 1 || r + 1 >= N) return true;
    const auto sigmas = subsets(N, r - 1);
    const auto taus = subsets(N, r + 1);
    const FieldHandle F = v.field();
    for (const auto& sigma : sigmas) {
        for (const auto& tau : taus) {
            Scalar total = Scalar::zero(F);
            for (std::size_t k = 0; k <= r; ++k) {
                std::vector<std::size_t> left(sigma.columns());
                left.push_back(tau[k]);
                const Scalar a = detail::signed_coord(v, std::move(left));
                if (a.is_zero()) continue;
                std::vector<std::size_t> right;
                for (std::size_t i = 0; i <= r; ++i) {
                    if (i != k) right.push_back(tau[i]);
                }
                const Scalar term = a * v.at(MultiIndex(std::move(right), N));
                if (k % 2 == 0) {
                    total += term;
                } else {
                    total -= term;
                }
            }
            if (!total.is_zero()) return false;
        }
    }
    return true;
}

/// Q(v) = v12 v34 - v13 v24 + v14 v23 on Grass(2,4), coordinates in lex order.
inline Scalar plucker_quadric_2_4(std::span<const Scalar> v) { return v[0] * v[5] - v[1] * v[4] + v[2] * v[3]; }

/// Polarization B(x,y) = Q(x+y) - Q(x) - Q(y).
inline Scalar plucker_bilinear_2_4(std::span<const Scalar> x, std::span<const Scalar> y) {
    return x[0] * y[5] + y[0] * x[5] - x[1] * y[4] - y[1] * x[4] + x[2] * y[3] + y[2] * x[3];
}

/**
 * Inverse of the Pluecker embedding: picks the first nonzero coordinate v_I and fills row i with
 * the coordinates obtained by replacing the i-th label of I. The result is the identity on the
 * columns of I. Throws NotDecomposable when the round trip does not reproduce v.
 */
inline ConstMatrix reconstruct_matrix(const PluckerVector& v) {
    if (v.is_zero()) fail(ErrorCode::ZeroVector, "reconstruction of the zero vector");
    const FieldHandle F = v.field();
    std::size_t lead = 0;
    while (v.coords[lead].is_zero()) ++lead;
    const MultiIndex I = subsets(v.ambient, v.size)[lead];
    const Scalar inv = v.coords[lead].inverse();
    ConstMatrix A(F, v.size, v.ambient);
    for (std::size_t i = 0; i < v.size; ++i) {
        for (std::size_t j = 0; j < v.ambient; ++j) {
            std::vector<std::size_t> tuple(I.columns());
            tuple[i] = j;
            A(i, j) = detail::signed_coord(v, std::move(tuple)) * inv;
        }
    }
    const auto minors = plucker_coords(A);
    for (std::size_t k = 0; k < minors.size(); ++k) {
        if (minors[k] != v.coords[k] * inv) fail(ErrorCode::NotDecomposable, "vector is not a Pluecker vector");
    }
    return A;
}

/// Number of r-dimensional subspaces of F_q^N.
inline BigInt gaussian_binomial(std::size_t N, std::size_t r, std::uint64_t q) {
    if (r > N) return 0;
    BigInt num = 1, den = 1, Q = q;
    for (std::size_t i = 0; i < r; ++i) {
        num *= boost::multiprecision::pow(Q, static_cast<unsigned>(N - i)) - 1;
        den *= boost::multiprecision::pow(Q, static_cast<unsigned>(i + 1)) - 1;
    }
    return num / den;
}

/**
 * Random-access view of Grass(r, F_q^N) as canonical RREF matrices. Points are ordered by pivot
 * set (lex), then by the free entries read as base-q digits (row-major, last entry fastest).
 */
class GrassmannianIndex {
   public:
    GrassmannianIndex(std::size_t r, std::size_t N, FieldHandle f) : r_(r), N_(N), field_(f) {
        if (!f->is_finite()) fail(ErrorCode::InfiniteField, "Grassmannian enumeration needs a finite field");
        elements_ = enumerate_field(f);
        const std::uint64_t q = f->order();
        for (const auto& pivots : subsets(N, r)) {
            Cell cell{pivots, {}, offset_ + 0, 1};
            for (std::size_t i = 0; i < r; ++i) {
                std::size_t next_pivot = 0;
                for (std::size_t j = pivots[i] + 1; j < N; ++j) {
                    while (next_pivot < r && pivots[next_pivot] < j) ++next_pivot;
                    if (next_pivot < r && pivots[next_pivot] == j) continue;
                    cell.free.emplace_back(i, j);
                }
            }
            for (std::size_t k = 0; k < cell.free.size(); ++k) {
                if (cell.size > (std::uint64_t{1} << 62) / q) fail(ErrorCode::InvalidArgument, "Grassmannian too large");
                cell.size *= q;
            }
            cell.offset = offset_;
            offset_ += cell.size;
            cells_.push_back(std::move(cell));
        }
    }

    std::uint64_t size() const noexcept { return offset_; }
    std::size_t subspace_dim() const noexcept { return r_; }
    std::size_t ambient() const noexcept { return N_; }
    FieldHandle field() const noexcept { return field_; }

    ConstMatrix point(std::uint64_t index) const {
        std::size_t c = 0;
        while (index >= cells_[c].offset + cells_[c].size) ++c;
        const Cell& cell = cells_[c];
        std::uint64_t local = index - cell.offset;
        ConstMatrix M(field_, r_, N_);
        for (std::size_t i = 0; i < r_; ++i) M(i, cell.pivots[i]) = Scalar::one(field_);
        const std::uint64_t q = elements_.size();
        for (std::size_t k = cell.free.size(); k-- > 0;) {
            M(cell.free[k].first, cell.free[k].second) = elements_[local % q];
            local /= q;
        }
        return M;
    }

   private:
    struct Cell {
        MultiIndex pivots;
        std::vector<std::pair<std::size_t, std::size_t>> free;
        std::uint64_t offset;
        std::uint64_t size;
    };

    std::size_t r_, N_;
    FieldHandle field_;
    std::vector<Scalar> elements_;
    std::vector<Cell> cells_;
    std::uint64_t offset_ = 0;
};

template <class Visitor>
void for_each_grassmannian_point(std::size_t r, std::size_t N, FieldHandle f, Visitor&& visit) {
    const GrassmannianIndex index(r, N, f);
    for (std::uint64_t i = 0; i < index.size(); ++i) visit(index.point(i));
}

inline std::vector<ConstMatrix> enumerate_grassmannian(std::size_t r, std::size_t N, FieldHandle f) {
    std::vector<ConstMatrix> out;
    for_each_grassmannian_point(r, N, f, [&](const ConstMatrix& M) { out.push_back(M); });
    return out;
}

}  // namespace grasspole

#endif  // GRASSPOLE_GRASSMANN_HPP
