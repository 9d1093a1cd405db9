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
 * @file systems.hpp
 * @brief State-space and factored systems, closed-loop polynomials and degeneracy tests.
 *
 * Conventions. A factored system is M(s) = [N(s) D(s)] with N p x m and D p x p. A projective
 * compensator is an m x (m+p) matrix [K1 K2]; the closed-loop polynomial is det [[K1 K2],[N D]].
 * Laplace expansion along the top m rows gives
 *   det [[K],[M]] = sum_beta laplace_sign(beta) * K_beta * M_{complement(beta)}
 * where beta runs over the m-subsets of the K columns. The coefficient matrix Chat has one
 * column per beta (lex rank) holding laplace_sign(beta) times the coefficients of the M minor at
 * the complement, so that the coefficient vector of the closed-loop polynomial is
 * Chat * plucker([K1 K2]).
 */

#ifndef GRASSPOLE_SYSTEMS_HPP
#define GRASSPOLE_SYSTEMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "grassmann.hpp"
#include "matrix.hpp"
#include "parallel.hpp"

namespace grasspole {

struct StateSpace {
    ConstMatrix A, B, C;

    StateSpace() = default;
    StateSpace(ConstMatrix a, ConstMatrix b, ConstMatrix c) : A(std::move(a)), B(std::move(b)), C(std::move(c)) {
        if (!A.is_square() || A.rows() == 0) fail(ErrorCode::DimensionMismatch, "A must be square and nonempty");
        if (B.rows() != A.rows() || C.cols() != A.rows()) fail(ErrorCode::DimensionMismatch, "B or C does not match A");
        if (B.cols() == 0 || C.rows() == 0) fail(ErrorCode::DimensionMismatch, "need at least one input and output");
        if (B.field() != A.field() || C.field() != A.field()) fail(ErrorCode::FieldMismatch, "A, B, C over different fields");
    }

    std::size_t n() const { return A.rows(); }
    std::size_t m() const { return B.cols(); }
    std::size_t p() const { return C.rows(); }
    FieldHandle field() const { return A.field(); }
};

/// Rank of [C; CA; ...; CA^{n-1}].
inline std::size_t observability_rank(const StateSpace& ss) {
    ConstMatrix O = ss.C;
    ConstMatrix block = ss.C;
    for (std::size_t i = 1; i < ss.n(); ++i) {
        block = block * ss.A;
        O = O.vstack(block);
    }
    return rank(O);
}

/// Rank of [B, AB, ..., A^{n-1}B].
inline std::size_t reachability_rank(const StateSpace& ss) {
    ConstMatrix R = ss.B;
    ConstMatrix block = ss.B;
    for (std::size_t i = 1; i < ss.n(); ++i) {
        block = ss.A * block;
        R = R.hstack(block);
    }
    return rank(R);
}

/// Random (A,B,C) with (C,A) observable; redraws until the observability test passes.
inline StateSpace random_observable_system(FieldHandle f, std::size_t n, std::size_t m, std::size_t p,
                                           std::mt19937_64& rng) {
    while (true) {
        StateSpace ss(random_matrix(f, n, n, rng), random_matrix(f, n, m, rng), random_matrix(f, p, n, rng));
        if (observability_rank(ss) == n) return ss;
    }
}

class FactoredSystem {
   public:
    FactoredSystem() = default;

    FactoredSystem(PolyMatrix N, PolyMatrix D) : N_(std::move(N)), D_(std::move(D)) {
        if (!D_.is_square() || D_.rows() == 0) fail(ErrorCode::DimensionMismatch, "D must be square and nonempty");
        if (N_.rows() != D_.rows() || N_.cols() == 0) fail(ErrorCode::DimensionMismatch, "N must be p x m with m >= 1");
        if (N_.field() != D_.field()) fail(ErrorCode::FieldMismatch, "N and D over different fields");
        M_ = N_.hstack(D_);
        minors_ = maximal_minors(M_);
        if (minors_.back().is_zero()) fail(ErrorCode::SingularDenominator, "det D is zero");
        degree_ = 0;
        Poly g(field());
        for (const auto& minor : minors_) {
            degree_ = std::max(degree_, minor.degree());
            g = gcd(g, minor);
        }
        coprime_ = g.degree() == 0;
    }

    /// Splits a p x (m+p) matrix after its first m columns.
    static FactoredSystem from_matrix(const PolyMatrix& M) {
        if (M.cols() <= M.rows()) fail(ErrorCode::DimensionMismatch, "M must have more columns than rows");
        const std::size_t m = M.cols() - M.rows();
        return FactoredSystem(M.column_range(0, m), M.column_range(m, M.rows()));
    }

    const PolyMatrix& N() const noexcept { return N_; }
    const PolyMatrix& D() const noexcept { return D_; }
    const PolyMatrix& M() const noexcept { return M_; }
    /// Maximal minors of M in lex order of the column multi-index.
    const std::vector<Poly>& minors() const noexcept { return minors_; }
    /// Max degree over the maximal minors.
    int degree() const noexcept { return degree_; }
    bool coprime() const noexcept { return coprime_; }
    std::size_t m() const noexcept { return N_.cols(); }
    std::size_t p() const noexcept { return N_.rows(); }
    FieldHandle field() const noexcept { return M_.field(); }

   private:
    PolyMatrix N_, D_, M_;
    std::vector<Poly> minors_;
    int degree_ = 0;
    bool coprime_ = false;
};

inline FactoredSystem embed(const FactoredSystem& fs, const QuadraticExtension& ext) {
    return FactoredSystem(embed(fs.N(), ext), embed(fs.D(), ext));
}

/// [K1 K2] of full row rank m.
class ProjectiveCompensator {
   public:
    ProjectiveCompensator() = default;

    ProjectiveCompensator(ConstMatrix K, std::size_t m) : K_(std::move(K)) {
        if (K_.rows() != m || K_.cols() <= m) fail(ErrorCode::DimensionMismatch, "compensator must be m x (m+p)");
        if (rank(K_) != m) fail(ErrorCode::RankDeficientCompensator, "[K1 K2] must have full rank m");
    }

    explicit ProjectiveCompensator(ConstMatrix K) : ProjectiveCompensator(K, K.rows()) {}

    /// [I K] for a feedback K (m x p).
    static ProjectiveCompensator from_feedback(const ConstMatrix& K) {
        return ProjectiveCompensator(ConstMatrix::identity(K.field(), K.rows()).hstack(K));
    }

    const ConstMatrix& matrix() const noexcept { return K_; }
    std::size_t m() const noexcept { return K_.rows(); }
    std::size_t p() const noexcept { return K_.cols() - K_.rows(); }
    ConstMatrix K1() const { return K_.column_range(0, m()); }
    ConstMatrix K2() const { return K_.column_range(m(), p()); }

   private:
    ConstMatrix K_;
};

/// det(sI - A - B K C).
inline Poly closed_loop_charpoly(const StateSpace& ss, const ConstMatrix& K) {
    if (K.rows() != ss.m() || K.cols() != ss.p()) fail(ErrorCode::DimensionMismatch, "K must be m x p");
    return det(characteristic_matrix(ss.A + ss.B * K * ss.C));
}

/// det [[K1 K2],[N D]].
inline Poly charpoly_via_factors(const FactoredSystem& fs, const ProjectiveCompensator& pk) {
    if (pk.m() != fs.m() || pk.p() != fs.p()) fail(ErrorCode::DimensionMismatch, "compensator shape mismatch");
    return stacked_det(pk.matrix(), fs.M());
}

/// det [[sI-A, B],[K2 C, K1]].
inline Poly lemma2_form(const StateSpace& ss, const ProjectiveCompensator& pk) {
    if (pk.m() != ss.m() || pk.p() != ss.p()) fail(ErrorCode::DimensionMismatch, "compensator shape mismatch");
    const PolyMatrix top = characteristic_matrix(ss.A).hstack(to_poly_matrix(ss.B));
    const PolyMatrix bottom = to_poly_matrix(pk.K2() * ss.C).hstack(to_poly_matrix(pk.K1()));
    return det(top.vstack(bottom));
}

/**
 * D^{-1} N = C (sI-A)^{-1} B from a minimal left kernel basis [X | D] of [[sI-A],[C]], with
 * N = -X B and the first row rescaled so that det D = det(sI-A). Throws NotObservable.
 */
inline FactoredSystem left_coprime_factorization(const StateSpace& ss) {
    if (observability_rank(ss) != ss.n()) fail(ErrorCode::NotObservable, "(C, A) is not observable");
    const FieldHandle F = ss.field();
    const std::size_t n = ss.n(), p = ss.p();
    const PolyMatrix sIA = characteristic_matrix(ss.A);
    PolyMatrix basis = left_kernel_min_basis(sIA.vstack(to_poly_matrix(ss.C)));
    PolyMatrix X = basis.column_range(0, n);
    PolyMatrix D = basis.column_range(n, p);
    const Poly chi = det(sIA);
    const Poly dD = det(D);
    if (dD.degree() != chi.degree()) fail(ErrorCode::NotObservable, "kernel basis does not realize the state dimension");
    const Scalar c = dD.leading_coefficient().inverse();
    for (std::size_t j = 0; j < n; ++j) X(0, j) = X(0, j).scaled(c);
    for (std::size_t j = 0; j < p; ++j) D(0, j) = D(0, j).scaled(c);
    PolyMatrix N = (X * to_poly_matrix(ss.B)).scaled(Poly::constant(-Scalar::one(F)));
    FactoredSystem fs(std::move(N), std::move(D));
    if (det(fs.D()) != chi) fail(ErrorCode::NotObservable, "det D differs from det(sI - A)");
    return fs;
}

/// Checks N det(sI-A) = D C adj(sI-A) B.
inline bool factorization_identity_holds(const StateSpace& ss, const FactoredSystem& fs) {
    const PolyMatrix sIA = characteristic_matrix(ss.A);
    const Poly chi = det(sIA);
    const PolyMatrix lhs = fs.N().scaled(chi);
    const PolyMatrix rhs = fs.D() * to_poly_matrix(ss.C) * adjugate(sIA) * to_poly_matrix(ss.B);
    return lhs == rhs;
}

/// Chat: (degree+1) x C(m+p, m).
struct CoefficientMatrix {
    ConstMatrix matrix;
    std::size_t m = 0, p = 0;
    int degree = 0;

    /// Coefficients (ascending) of the closed-loop polynomial for the Pluecker vector of [K1 K2].
    std::vector<Scalar> apply(std::span<const Scalar> k) const {
        std::vector<Scalar> out(matrix.rows(), Scalar::zero(matrix.field()));
        for (std::size_t r = 0; r < matrix.rows(); ++r) {
            for (std::size_t c = 0; c < matrix.cols(); ++c) {
                if (!k[c].is_zero() && !matrix(r, c).is_zero()) out[r] += matrix(r, c) * k[c];
            }
        }
        return out;
    }
};

inline CoefficientMatrix coefficient_matrix(const FactoredSystem& fs) {
    const std::size_t m = fs.m(), p = fs.p(), N = m + p;
    const int n = std::max(fs.degree(), 0);
    const auto betas = subsets(N, m);
    ConstMatrix Chat(fs.field(), static_cast<std::size_t>(n) + 1, betas.size());
    for (const auto& beta : betas) {
        const Poly& g = fs.minors()[beta.complement().rank()];
        const Scalar sign = Scalar::from_int(fs.field(), laplace_sign(beta));
        for (int e = 0; e <= n; ++e) Chat(static_cast<std::size_t>(e), beta.rank()) = sign * g.coefficient(static_cast<std::size_t>(e));
    }
    return {std::move(Chat), m, p, n};
}

/**
 * Scans every F_q-rational point of Grass(m, F_q^{m+p}) for a compensator with identically zero
 * closed-loop polynomial. A nullopt result only rules out rational witnesses.
 */
inline std::optional<ProjectiveCompensator> is_degenerate_rational(const FactoredSystem& fs) {
    if (!fs.field()->is_finite()) fail(ErrorCode::InfiniteField, "rational degeneracy scan needs a finite field");
    const CoefficientMatrix Chat = coefficient_matrix(fs);
    const GrassmannianIndex grass(fs.m(), fs.m() + fs.p(), fs.field());
    constexpr std::uint64_t none = ~std::uint64_t{0};
    const auto firsts = parallel_chunks<std::uint64_t>(grass.size(), [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t i = begin; i < end; ++i) {
            const auto image = Chat.apply(plucker_coords(grass.point(i)));
            if (std::all_of(image.begin(), image.end(), [](const Scalar& x) { return x.is_zero(); })) return i;
        }
        return none;
    });
    for (auto i : firsts) {
        if (i == none) continue;
        ProjectiveCompensator witness(grass.point(i), fs.m());
        if (!charpoly_via_factors(fs, witness).is_zero()) fail(ErrorCode::InvalidArgument, "coefficient matrix mismatch");
        return witness;
    }
    return std::nullopt;
}

enum class DegeneracyVerdict { degenerate, nondegenerate, unsupported };

constexpr std::string_view to_string(DegeneracyVerdict v) noexcept {
    switch (v) {
        case DegeneracyVerdict::degenerate: return "degenerate";
        case DegeneracyVerdict::nondegenerate: return "nondegenerate";
        case DegeneracyVerdict::unsupported: return "unsupported";
    }
    return "unknown";
}

struct ExactDegeneracy {
    DegeneracyVerdict verdict = DegeneracyVerdict::unsupported;
    std::size_t kernel_dimension = 0;
    /// Kernel generator when the kernel of Chat is one-dimensional.
    std::optional<std::vector<Scalar>> generator;
    /// Value of the Grass(2,4) quadric on the generator (m = p = 2 only).
    std::optional<Scalar> quadric_value;
};

/**
 * Degeneracy over the algebraic closure. Decided for min(m,p) = 1, where every Pluecker vector is
 * decomposable, and for m = p = 2, where a projective line always meets the quadric; other shapes
 * return `unsupported`.
 */
inline ExactDegeneracy is_degenerate_exact(const FactoredSystem& fs) {
    ExactDegeneracy out;
    const CoefficientMatrix Chat = coefficient_matrix(fs);
    const ConstMatrix kernel = nullspace(Chat.matrix);
    out.kernel_dimension = kernel.rows();
    if (kernel.rows() == 1) {
        out.generator = std::vector<Scalar>(kernel.data().begin(), kernel.data().end());
    }
    if (std::min(fs.m(), fs.p()) == 1) {
        out.verdict = kernel.rows() == 0 ? DegeneracyVerdict::nondegenerate : DegeneracyVerdict::degenerate;
    } else if (fs.m() == 2 && fs.p() == 2) {
        if (kernel.rows() == 0) {
            out.verdict = DegeneracyVerdict::nondegenerate;
        } else if (kernel.rows() >= 2) {
            out.verdict = DegeneracyVerdict::degenerate;
        } else {
            out.quadric_value = plucker_quadric_2_4(*out.generator);
            out.verdict = out.quadric_value->is_zero() ? DegeneracyVerdict::degenerate : DegeneracyVerdict::nondegenerate;
        }
    }
    return out;
}

/// Pluecker vector of M(lambda). Throws RankDeficient when M(lambda) drops rank.
inline PluckerVector evaluate_curve_point(const FactoredSystem& fs, const Scalar& lambda) {
    return plucker_of_matrix(evaluate(fs.M(), lambda));
}

/// K = K1^{-1} K2. Throws DependentAtInfinity when K1 is singular.
inline ConstMatrix recover_feedback(const ProjectiveCompensator& pk) {
    const ConstMatrix K1 = pk.K1();
    if (rank(K1) != pk.m()) fail(ErrorCode::DependentAtInfinity, "K1 is singular");
    return inverse(K1) * pk.K2();
}

}  // namespace grasspole

#endif  // GRASSPOLE_SYSTEMS_HPP
