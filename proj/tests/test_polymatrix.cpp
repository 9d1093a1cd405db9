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

#include <random>

#include "support/oracles.hpp"
#include "support/testing.hpp"

using namespace grasspole;
using testing_support::P;
using testing_support::PM;

namespace {

PolyMatrix mdsdeg_M() {
    const auto F = gf(5);
    return PM(F, 2, 4, {"1", "s", "s", "s^2", "0", "1", "2", "3*s"});
}

PolyMatrix ex2x4_M() {
    const auto F = gf(2);
    return PM(F, 2, 4, {"0", "s", "s+1", "s^2", "1", "s^2+1", "1", "s"});
}

PolyMatrix random_poly_matrix(FieldHandle f, std::size_t r, std::size_t c, int deg, std::mt19937_64& rng) {
    PolyMatrix M(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) M(i, j) = random_poly(f, deg, rng);
    }
    return M;
}

}  // namespace

TEST(Det, SmallExamples) {
    const auto F3 = gf(3), F5 = gf(5);
    EXPECT_TRUE(det(ConstMatrix::identity(F5, 3)).is_one());
    EXPECT_EQ(det(PM(F3, 2, 2, {"s", "1", "1", "s"})), P("s^2-1", F3));
    const ConstMatrix K = const_matrix(F5, 2, 4, {0, 1, 2, 0, 0, 0, 0, 1});
    EXPECT_TRUE(stacked_det(K, mdsdeg_M()).is_zero());
    EXPECT_TRUE(det(to_poly_matrix(K).vstack(mdsdeg_M())).is_zero());
    EXPECT_GP_ERROR(det(ConstMatrix(F5, 2, 3)), ErrorCode::NonSquare);
    EXPECT_TRUE(det(ConstMatrix(F5, 0, 0)).is_one());
}

TEST(Det, ExhaustiveOverF2) {
    for (std::size_t n : {2u, 3u}) {
        for (std::uint64_t bits = 0; bits < (1u << (n * n)); ++bits) {
            const ConstMatrix M = oracle::f2_matrix(bits, n, n);
            const Scalar expected = oracle::det(M, oracle::all_columns(n));
            ASSERT_EQ(det(M), expected) << bits;
            ASSERT_EQ(det_cofactor(M), expected) << bits;
        }
    }
}

TEST(Det, RandomAgreesWithCofactorAndLeibniz) {
    std::mt19937_64 rng(31);
    for (const char* spec : {"2", "3", "7", "2^2:modulus=1,1,1", "QQ"}) {
        const auto F = make_field(spec);
        for (std::size_t n = 1; n <= 6; ++n) {
            for (int iter = 0; iter < 20; ++iter) {
                const ConstMatrix M = random_matrix(F, n, n, rng);
                const Scalar d = det(M);
                ASSERT_EQ(d, det_cofactor(M)) << spec << " n=" << n;
                ASSERT_EQ(d, oracle::det(M, oracle::all_columns(n))) << spec << " n=" << n;
            }
        }
    }
}

TEST(Det, PolynomialMatrices) {
    std::mt19937_64 rng(37);
    for (const char* spec : {"2", "5", "QQ"}) {
        const auto F = make_field(spec);
        for (std::size_t n = 1; n <= 4; ++n) {
            for (int iter = 0; iter < 10; ++iter) {
                const PolyMatrix M = random_poly_matrix(F, n, n, 2, rng);
                const Poly d = det(M);
                ASSERT_EQ(d, det_cofactor(M));
                ASSERT_EQ(d, oracle::det(M, oracle::all_columns(n)));
                const Scalar x = random_scalar(F, rng);
                ASSERT_EQ(d(x), det(evaluate(M, x)));
            }
        }
    }
}

TEST(Det, Multiplicative) {
    std::mt19937_64 rng(41);
    const auto F = gf(7);
    for (int iter = 0; iter < 50; ++iter) {
        const ConstMatrix A = random_matrix(F, 4, 4, rng), B = random_matrix(F, 4, 4, rng);
        ASSERT_EQ(det(A * B), det(A) * det(B));
    }
}

TEST(Rref, Examples) {
    const auto F5 = gf(5);
    const auto swap = rref(const_matrix(F5, 2, 2, {0, 1, 1, 0}));
    EXPECT_EQ(swap.reduced, ConstMatrix::identity(F5, 2));
    EXPECT_EQ(swap.pivots, (std::vector<std::size_t>{0, 1}));
    const auto K = rref(const_matrix(F5, 2, 4, {0, 1, 2, 0, 0, 0, 0, 1}));
    EXPECT_EQ(K.pivots, (std::vector<std::size_t>{1, 3}));
    EXPECT_EQ(rank(ConstMatrix(F5, 3, 4)), 0u);
}

TEST(Rref, IdempotentAndRowSpacePreserving) {
    std::mt19937_64 rng(43);
    for (const char* spec : {"2", "3", "7", "QQ"}) {
        const auto F = make_field(spec);
        for (int iter = 0; iter < 100; ++iter) {
            std::uniform_int_distribution<std::size_t> dim(1, 5);
            const std::size_t r = dim(rng), c = dim(rng);
            ConstMatrix M = random_matrix(F, r, c, rng);
            if (iter % 3 == 0 && r > 1) {
                for (std::size_t j = 0; j < c; ++j) M(r - 1, j) = M(0, j) + M(0, j);
            }
            const auto R = rref(M);
            ASSERT_EQ(rref(R.reduced).reduced, R.reduced);
            ASSERT_EQ(rank(M.vstack(R.reduced)), R.rank);
            ASSERT_TRUE(same_row_space(M, R.reduced));
            const ConstMatrix ker = nullspace(M);
            ASSERT_EQ(ker.rows() + R.rank, c);
            ASSERT_TRUE((M * ker.transpose()).is_zero());
        }
    }
}

TEST(LinearSolve, SolveAndInverse) {
    std::mt19937_64 rng(47);
    const auto F = gf(11);
    for (int iter = 0; iter < 50; ++iter) {
        const ConstMatrix A = random_matrix(F, 4, 4, rng);
        std::vector<Scalar> x0;
        for (int i = 0; i < 4; ++i) x0.push_back(random_scalar(F, rng));
        std::vector<Scalar> b(4, Scalar::zero(F));
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) b[i] += A(i, j) * x0[j];
        }
        const auto x = solve(A, b);
        ASSERT_TRUE(x.has_value());
        for (std::size_t i = 0; i < 4; ++i) {
            Scalar acc = Scalar::zero(F);
            for (std::size_t j = 0; j < 4; ++j) acc += A(i, j) * (*x)[j];
            ASSERT_EQ(acc, b[i]);
        }
        if (!det(A).is_zero()) {
            ASSERT_EQ(A * inverse(A), ConstMatrix::identity(F, 4));
        } else {
            EXPECT_GP_ERROR(inverse(A), ErrorCode::RankDeficient);
        }
    }
    const ConstMatrix Z(F, 2, 2);
    EXPECT_FALSE(solve(Z, {Scalar::one(F), Scalar::zero(F)}).has_value());
}

TEST(Minors, LexOrderExamples) {
    const auto F5 = gf(5);
    const PolyMatrix M = PM(F5, 2, 4, {"1", "0", "s^2", "2*s^3", "0", "1", "s", "s^2"});
    const auto minors = maximal_minors(M);
    const std::vector<Poly> direct = oracle::minors_2x4(M);
    EXPECT_EQ(minors, direct);
    const std::vector<Poly> expected = {P("1", F5), P("s", F5), P("s^2", F5), P("-s^2", F5), P("-2*s^3", F5), P("-s^4", F5)};
    EXPECT_EQ(minors, expected);

    const auto id = maximal_minors(const_matrix(F5, 2, 4, {1, 0, 0, 0, 0, 1, 0, 0}));
    EXPECT_TRUE(id[0].is_one());
    for (std::size_t k = 1; k < 6; ++k) EXPECT_TRUE(id[k].is_zero());
    EXPECT_GP_ERROR(maximal_minors(ConstMatrix(F5, 3, 2)), ErrorCode::DimensionMismatch);
}

TEST(Minors, Example2x4AgainstOracle) {
    const PolyMatrix M = ex2x4_M();
    const auto F2 = gf(2);
    const auto minors = maximal_minors(M);
    const auto direct = oracle::minors_2x4(M);
    ASSERT_EQ(minors.size(), 6u);
    EXPECT_EQ(minors, direct);
    // Published list: s, s+1, s^2, s^3+s+1, s^4, s. Five entries agree; the {2,3} entry is s^3+s^2+1.
    const std::vector<Poly> published = {P("s", F2), P("s+1", F2), P("s^2", F2), P("s^3+s+1", F2), P("s^4", F2), P("s", F2)};
    int agree = 0;
    for (std::size_t k = 0; k < 6; ++k) agree += minors[k] == published[k] ? 1 : 0;
    EXPECT_EQ(agree, 5);
    EXPECT_NE(minors[3], published[3]);
    EXPECT_EQ(minors[3], P("s^3+s^2+1", F2));
    EXPECT_TRUE(is_left_prime(M));
    EXPECT_EQ(system_degree(M), 4);
}

TEST(StackedDet, BlockAndLaplace) {
    const auto F = gf(7);
    const PolyMatrix D = PM(F, 2, 2, {"s+1", "2", "s^2", "3*s"});
    const ConstMatrix K = const_matrix(F, 2, 4, {1, 0, 0, 0, 0, 1, 0, 0});
    const PolyMatrix M = PolyMatrix(F, 2, 2).hstack(D);
    EXPECT_EQ(stacked_det(K, M), det(D));
    EXPECT_GP_ERROR(stacked_det(const_matrix(F, 1, 4, {1, 0, 0, 0}), M), ErrorCode::DimensionMismatch);
}

// stacked_det(K, M) = sum over p-subsets a of sign * det K[complement of a] * det M[a].
TEST(StackedDet, LaplaceIdentityRandom) {
    std::mt19937_64 rng(53);
    for (const char* spec : {"7", "2", "QQ"}) {
        const auto F = make_field(spec);
        for (int iter = 0; iter < 100; ++iter) {
            std::uniform_int_distribution<std::size_t> dim(1, 3);
            const std::size_t m = dim(rng), p = dim(rng), N = m + p;
            const ConstMatrix K = random_matrix(F, m, N, rng);
            const PolyMatrix M = random_poly_matrix(F, p, N, 2, rng);
            Poly sum(F);
            for (const auto& alpha : subsets(N, p)) {
                const auto comp = alpha.complement();
                std::size_t label_sum = m * (m + 1) / 2;
                for (auto c : comp.columns()) label_sum += c + 1;
                const Scalar k = oracle::det(K, comp.columns());
                const Poly g = oracle::det(M, alpha.columns());
                sum += (label_sum % 2 ? -g : g).scaled(k);
            }
            ASSERT_EQ(stacked_det(K, M), sum) << spec << " m=" << m << " p=" << p;
        }
    }
}

TEST(LeftPrime, Examples) {
    const auto F = gf(5);
    PolyMatrix sI_minus_I = characteristic_matrix(ConstMatrix(F, 3, 3)).hstack(to_poly_matrix(ConstMatrix::identity(F, 3).scaled(-Scalar::one(F))));
    EXPECT_TRUE(is_left_prime(sI_minus_I));
    EXPECT_EQ(system_degree(sI_minus_I), 3);
    const PolyMatrix sI = PM(F, 2, 4, {"s", "0", "s", "0", "0", "s", "0", "s"});
    EXPECT_FALSE(is_left_prime(sI));
    EXPECT_EQ(system_degree(PM(F, 2, 4, {"1", "0", "1", "0", "1", "0", "1", "0"})), neg_inf_degree);
}

TEST(Adjugate, Examples) {
    const auto F = gf(7);
    EXPECT_EQ(adjugate(ConstMatrix::identity(F, 3)), ConstMatrix::identity(F, 3));
    EXPECT_EQ(adjugate(PM(F, 2, 2, {"s", "1", "0", "s"})), PM(F, 2, 2, {"s", "-1", "0", "s"}));
    std::mt19937_64 rng(59);
    for (int iter = 0; iter < 30; ++iter) {
        const ConstMatrix A = random_matrix(F, 3, 3, rng);
        ASSERT_EQ(A * adjugate(A), ConstMatrix::identity(F, 3).scaled(det(A)));
        const PolyMatrix B = random_poly_matrix(F, 3, 3, 2, rng);
        ASSERT_EQ(B * adjugate(B), PolyMatrix::identity(F, 3).scaled(Poly::constant(Scalar::one(F)) * det(B)));
    }
}

TEST(KernelBasis, Examples) {
    const auto F = gf(5);
    const PolyMatrix T1 = PM(F, 2, 1, {"s", "1"});
    const PolyMatrix K1 = left_kernel_min_basis(T1);
    ASSERT_EQ(K1.rows(), 1u);
    EXPECT_TRUE((K1 * T1).is_zero());
    const Scalar c = K1(0, 0).leading_coefficient();
    EXPECT_EQ(K1(0, 0), Poly::constant(c));
    EXPECT_EQ(K1(0, 1), P("-s", F).scaled(c));

    // [[sI - A], [C]] with A the 2x2 shift, C = [1 0].
    const ConstMatrix A = const_matrix(F, 2, 2, {0, 1, 0, 0});
    const ConstMatrix C = const_matrix(F, 1, 2, {1, 0});
    const PolyMatrix T = characteristic_matrix(A).vstack(to_poly_matrix(C));
    const PolyMatrix K = left_kernel_min_basis(T);
    ASSERT_EQ(K.rows(), 1u);
    EXPECT_TRUE((K * T).is_zero());
    EXPECT_EQ(K(0, 2).monic(), P("s^2", F));
    EXPECT_EQ(max_degree(K), 2);
}

TEST(KernelBasis, ObservableSystemsHaveDegreeSumN) {
    std::mt19937_64 rng(61);
    for (const char* spec : {"5", "7", "2"}) {
        const auto F = make_field(spec);
        for (int iter = 0; iter < 40; ++iter) {
            std::uniform_int_distribution<std::size_t> pick_n(1, 4), pick_p(1, 2);
            const std::size_t n = pick_n(rng), p = pick_p(rng);
            const StateSpace ss = random_observable_system(F, n, 1, p, rng);
            const PolyMatrix T = characteristic_matrix(ss.A).vstack(to_poly_matrix(ss.C));
            const PolyMatrix K = left_kernel_min_basis(T);
            ASSERT_EQ(K.rows(), p);
            ASSERT_TRUE((K * T).is_zero());
            int sum = 0;
            for (std::size_t r = 0; r < K.rows(); ++r) {
                int d = neg_inf_degree;
                for (std::size_t c = 0; c < K.cols(); ++c) d = std::max(d, K(r, c).degree());
                sum += d;
            }
            ASSERT_EQ(sum, static_cast<int>(n)) << spec;
        }
    }
}

TEST(KernelBasis, Errors) {
    const auto F = gf(5);
    EXPECT_GP_ERROR(left_kernel_min_basis(PM(F, 2, 1, {"0", "0"})), ErrorCode::RankDeficient);
    const ConstMatrix A = const_matrix(F, 3, 3, {0, 1, 0, 0, 0, 1, 0, 0, 0});
    const PolyMatrix T = characteristic_matrix(A).vstack(to_poly_matrix(const_matrix(F, 1, 3, {1, 0, 0})));
    EXPECT_GP_ERROR(left_kernel_min_basis(T, 1), ErrorCode::DegreeBoundExceeded);
    EXPECT_EQ(max_degree(left_kernel_min_basis(T)), 3);
}
