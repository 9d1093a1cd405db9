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

#include <map>
#include <random>

#include "support/oracles.hpp"
#include "support/testing.hpp"

using namespace grasspole;
using testing_support::P;
using testing_support::PM;

namespace {

FactoredSystem ex2x4() {
    return FactoredSystem::from_matrix(PM(gf(2), 2, 4, {"0", "s", "s+1", "s^2", "1", "s^2+1", "1", "s"}));
}

// Normalizes the leading nonzero coefficient to one; empty for the zero polynomial.
std::vector<std::uint64_t> projective_key(const Poly& f, int n) {
    if (f.is_zero()) return {};
    const Poly g = f.scaled(f.coefficient(static_cast<std::size_t>(f.degree())).inverse());
    std::vector<std::uint64_t> key;
    for (int e = 0; e <= n; ++e) key.push_back(g.coefficient(static_cast<std::size_t>(e)).code());
    return key;
}

// Re-derives a projective census by stacked determinants instead of the coefficient matrix.
struct BruteCensus {
    std::map<std::vector<std::uint64_t>, std::uint64_t> fibers;
    std::uint64_t zero = 0, domain = 0;
};

BruteCensus brute_projective(const FactoredSystem& fs, int n) {
    BruteCensus out;
    for (const auto& K : enumerate_grassmannian(fs.m(), fs.m() + fs.p(), fs.field())) {
        ++out.domain;
        const auto key = projective_key(charpoly_via_factors(fs, ProjectiveCompensator(K, fs.m())), n);
        if (key.empty()) {
            ++out.zero;
        } else {
            ++out.fibers[key];
        }
    }
    return out;
}

void expect_census_matches_brute(const FactoredSystem& fs) {
    const CensusReport r = census(fs, CensusMode::projective);
    const BruteCensus b = brute_projective(fs, r.degree);
    EXPECT_EQ(r.domain_size, b.domain);
    EXPECT_EQ(BigInt(r.domain_size), gaussian_binomial(fs.m() + fs.p(), fs.m(), fs.field()->order()));
    EXPECT_EQ(r.off_target, b.zero);
    EXPECT_EQ(r.image_size, b.fibers.size());
    std::map<std::uint64_t, std::uint64_t> hist;
    for (const auto& [key, count] : b.fibers) ++hist[count];
    EXPECT_EQ(r.histogram, hist);
    std::uint64_t total = r.off_target;
    for (const auto& [size, count] : r.histogram) total += size * count;
    EXPECT_EQ(total, r.domain_size);
    EXPECT_EQ(r.missed_count + r.image_size, r.target_size);
    if (r.missed_listed) {
        EXPECT_EQ(r.missed.size(), r.missed_count);
        for (const auto& t : r.missed) {
            std::vector<std::uint64_t> key;
            for (const auto& x : t) key.push_back(x.code());
            EXPECT_FALSE(b.fibers.contains(key));
        }
    }
}

bool is_square(const Scalar& x) {
    for (const auto& y : enumerate_field(x.field())) {
        if (y * y == x) return true;
    }
    return false;
}

Poly random_monic_quartic(FieldHandle F, std::mt19937_64& rng) {
    std::vector<Scalar> c;
    for (int i = 0; i < 4; ++i) c.push_back(random_scalar(F, rng));
    c.push_back(Scalar::one(F));
    return Poly(F, c);
}

}  // namespace

TEST(Schubert, Values) {
    for (std::size_t k = 1; k <= 8; ++k) {
        EXPECT_EQ(schubert_number(k, 1), 1);
        EXPECT_EQ(schubert_number(1, k), 1);
    }
    EXPECT_EQ(schubert_number(2, 2), 2);
    EXPECT_EQ(schubert_number(2, 3), 5);
    EXPECT_EQ(schubert_number(3, 2), 5);
    EXPECT_EQ(schubert_number(2, 4), 14);
    EXPECT_EQ(schubert_number(3, 3), 42);
    EXPECT_GP_ERROR(schubert_number(0, 2), ErrorCode::InvalidArgument);
}

TEST(Schubert, HookOracleAndSymmetry) {
    for (std::size_t m = 1; m <= 6; ++m) {
        for (std::size_t p = 1; p <= 6; ++p) {
            EXPECT_EQ(schubert_number(m, p), schubert_number(p, m));
            EXPECT_EQ(schubert_number(m, p), oracle::schubert_hook(m, p)) << m << "x" << p;
        }
    }
    EXPECT_EQ(schubert_number(6, 6), oracle::schubert_hook(6, 6));
}

// 1/s closed with k: det [[1, k], [1, s]] = s - k.
TEST(Census, IntegratorOverF3) {
    const auto F3 = gf(3);
    const FactoredSystem fs(PM(F3, 1, 1, {"1"}), PM(F3, 1, 1, {"s"}));
    const CensusReport r = census(fs, CensusMode::affine);
    EXPECT_EQ(r.domain_size, 3u);
    EXPECT_EQ(r.target_size, 3u);
    EXPECT_EQ(r.image_size, 3u);
    EXPECT_EQ(r.off_target, 0u);
    EXPECT_EQ(r.histogram, (std::map<std::uint64_t, std::uint64_t>{{1, 3}}));
    EXPECT_TRUE(r.missed_listed);
    EXPECT_TRUE(r.missed.empty());
    expect_census_matches_brute(fs);
}

TEST(Census, AffineDomainIsAllFeedbacks) {
    std::mt19937_64 rng(107);
    for (const char* spec : {"2", "3", "5"}) {
        const auto F = make_field(spec);
        for (int iter = 0; iter < 4; ++iter) {
            const std::size_t m = 1 + iter % 2, p = 1 + iter / 2;
            const StateSpace ss = random_observable_system(F, 2, m, p, rng);
            const FactoredSystem fs = left_coprime_factorization(ss);
            const CensusReport r = census(fs, CensusMode::affine);
            std::uint64_t qmp = 1;
            for (std::size_t k = 0; k < m * p; ++k) qmp *= F->order();
            EXPECT_EQ(r.domain_size, qmp);
            std::uint64_t total = r.off_target;
            for (const auto& [size, count] : r.histogram) total += size * count;
            EXPECT_EQ(total, qmp);
            // every feedback gives a monic degree-n polynomial
            EXPECT_EQ(r.off_target, 0u);
            // brute force over feedbacks via the state-space formula
            std::map<std::vector<std::uint64_t>, std::uint64_t> fibers;
            const auto elements = enumerate_field(F);
            for (std::uint64_t idx = 0; idx < qmp; ++idx) {
                ConstMatrix K(F, m, p);
                std::uint64_t rest = idx;
                for (std::size_t k = 0; k < m * p; ++k, rest /= F->order()) K(k / p, k % p) = elements[rest % F->order()];
                ++fibers[oracle::codes(closed_loop_charpoly(ss, K))];
            }
            EXPECT_EQ(r.image_size, fibers.size());
        }
    }
}

TEST(Census, Example2x4IsNotOnto) {
    const CensusReport r = census(ex2x4(), CensusMode::projective);
    EXPECT_EQ(r.domain_size, 35u);
    EXPECT_EQ(r.target_size, 31u);
    EXPECT_EQ(r.degree, 4);
    EXPECT_EQ(r.off_target, 0u);
    EXPECT_LE(r.image_size, 30u);
    EXPECT_EQ(r.image_size, 25u);
    EXPECT_EQ(r.missed_count, 6u);
    expect_census_matches_brute(ex2x4());
}

TEST(CensusProperties, ProjectiveAgreesWithStackedDeterminants) {
    expect_census_matches_brute(main_theorem_system(2, 2, gf(5)).to_factored());
    expect_census_matches_brute(FactoredSystem::from_matrix(osculating_curve_hasse(2, 2, gf(2))));
    expect_census_matches_brute(FactoredSystem(PM(gf(5), 2, 2, {"1", "s", "0", "1"}), PM(gf(5), 2, 2, {"s", "s^2", "2", "3*s"})));
    std::mt19937_64 rng(109);
    for (int iter = 0; iter < 6; ++iter) {
        const auto F = gf(iter % 2 == 0 ? 3 : 2);
        const StateSpace ss = random_observable_system(F, 3, 1 + iter % 2, 2, rng);
        expect_census_matches_brute(left_coprime_factorization(ss));
    }
    EXPECT_GP_ERROR(census(main_theorem_system(2, 2, rationals()).to_factored(), CensusMode::affine), ErrorCode::InfiniteField);
}

// d(2,2) = 2 points over the closure in every fiber.
TEST(Fiber, MultiplicityTwoOverF101) {
    const auto F = gf(101);
    const FactoredSystem fs = main_theorem_system(2, 2, F).to_factored();
    std::mt19937_64 rng(113);
    int extension_cases = 0;
    for (int iter = 0; iter < 50; ++iter) {
        const Poly target = random_monic_quartic(F, rng);
        const FiberSolution sol = fiber_solve_2x2(fs, target);
        ASSERT_EQ(sol.total_multiplicity, 2u);
        ASSERT_FALSE(plucker_quadric_2_4(sol.kernel).is_zero());
        const Scalar disc = sol.quadratic[1] * sol.quadratic[1] - Scalar::from_int(F, 4) * sol.quadratic[0] * sol.quadratic[2];
        ASSERT_EQ(sol.extension_field.empty(), is_square(disc));
        unsigned mult = 0;
        for (const auto& e : sol.entries) {
            ASSERT_TRUE(e.charpoly_matches);
            ASSERT_EQ(e.in_extension, !sol.extension_field.empty());
            ASSERT_EQ(e.feedback.has_value(), e.k1_invertible && !e.in_extension);
            mult += e.multiplicity;
        }
        ASSERT_EQ(mult, 2u);
        extension_cases += sol.extension_field.empty() ? 0 : 1;
    }
    EXPECT_GT(extension_cases, 0);
    EXPECT_LT(extension_cases, 50);
}

TEST(Fiber, PlantAndRecover) {
    std::mt19937_64 rng(127);
    for (const char* spec : {"101", "7", "2"}) {
        const auto F = make_field(spec);
        const FactoredSystem fs = std::string(spec) == "2" ? ex2x4() : main_theorem_system(2, 2, F).to_factored();
        for (int iter = 0; iter < 20; ++iter) {
            ConstMatrix K = random_matrix(F, 2, 4, rng);
            if (rank(K) != 2) continue;
            const Poly target = charpoly_via_factors(fs, ProjectiveCompensator(K, 2));
            ASSERT_FALSE(target.is_zero());
            const FiberSolution sol = fiber_solve_2x2(fs, target);
            ASSERT_TRUE(sol.extension_field.empty());
            bool found = false;
            for (const auto& e : sol.entries) found = found || same_row_space(e.compensator, K);
            ASSERT_TRUE(found) << spec;
            ASSERT_EQ(sol.total_multiplicity, 2u);
        }
    }
}

TEST(Fiber, StateSpaceRoundTrip) {
    const auto F = gf(101);
    std::mt19937_64 rng(131);
    int checked = 0;
    while (checked < 10) {
        const StateSpace ss = random_observable_system(F, 4, 2, 2, rng);
        if (reachability_rank(ss) != 4) continue;
        const FactoredSystem fs = left_coprime_factorization(ss);
        if (is_degenerate_exact(fs).verdict != DegeneracyVerdict::nondegenerate) continue;
        const Poly target = random_monic_quartic(F, rng);
        for (const auto& e : fiber_solve_2x2(fs, target).entries) {
            if (!e.feedback) continue;
            ASSERT_EQ(closed_loop_charpoly(ss, *e.feedback), target);
            ++checked;
        }
    }
}

TEST(Fiber, RationalsAndCharacteristicTwo) {
    const auto Q = rationals();
    const FactoredSystem fs = main_theorem_system(2, 2, Q).to_factored();
    for (const char* t : {"s^4+1", "s^4-s", "s^4+2*s^3-s^2+5", "s^4"}) {
        const FiberSolution sol = fiber_solve_2x2(fs, P(t, Q));
        EXPECT_EQ(sol.total_multiplicity, 2u) << t;
        if (sol.irrational_discriminant) {
            EXPECT_TRUE(sol.entries.empty());
        }
        for (const auto& e : sol.entries) EXPECT_TRUE(e.charpoly_matches) << t;
    }
    // every projective target over F_2, including those in the extension
    const FactoredSystem two = ex2x4();
    for (int bits = 1; bits < 32; ++bits) {
        std::vector<Scalar> c;
        for (int i = 0; i < 5; ++i) c.push_back(Scalar::from_int(gf(2), (bits >> i) & 1));
        const FiberSolution sol = fiber_solve_2x2(two, Poly(gf(2), c));
        EXPECT_EQ(sol.total_multiplicity, 2u) << bits;
        for (const auto& e : sol.entries) EXPECT_TRUE(e.charpoly_matches) << bits;
    }
}

TEST(Fiber, Errors) {
    EXPECT_GP_ERROR(fiber_solve_2x2(main_theorem_system(2, 3, gf(7)).to_factored(), P("s^6", gf(7))), ErrorCode::UnsupportedShape);
    EXPECT_GP_ERROR(fiber_solve_2x2(FactoredSystem::from_matrix(osculating_curve_hasse(2, 2, gf(2))), P("s^4+1", gf(2))),
                    ErrorCode::DegenerateSystem);
    const FactoredSystem fs = main_theorem_system(2, 2, gf(5)).to_factored();
    EXPECT_GP_ERROR(fiber_solve_2x2(fs, Poly(gf(5))), ErrorCode::InvalidArgument);
    EXPECT_GP_ERROR(fiber_solve_2x2(fs, P("s^4", gf(7))), ErrorCode::FieldMismatch);
}

TEST(F2Theorem, Verifies) {
    const F2Report r = verify_f2_theorem();
    EXPECT_EQ(r.nonzero_points, 63u);
    EXPECT_EQ(r.quadric_points, 35u);
    EXPECT_EQ(r.off_quadric_points, 28u);
    EXPECT_TRUE(r.quadric_is_grassmannian);
    EXPECT_TRUE(r.off_quadric_matches_list);
    EXPECT_TRUE(r.swaps_preserve_quadric);
    ASSERT_EQ(r.cases.size(), 28u);
    for (const auto& c : r.cases) {
        EXPECT_LT(c.image_size, 31u);
        EXPECT_EQ(c.image_size + c.missed.size(), 31u);
    }
    EXPECT_TRUE(r.canonical_ok());
    EXPECT_EQ(r.canonical[0].listed_missed, (F2Point{1, 1, 1, 0, 1}));
    EXPECT_EQ(r.canonical[2].listed_missed, (F2Point{0, 1, 0, 0, 1}));
    EXPECT_TRUE(r.orbits_match);
    EXPECT_TRUE(r.passed());
}

TEST(Orbits, Examples) {
    const auto& swaps = f2data::swaps();
    const auto orbits = orbit_decomposition({{1, 0, 0, 0, 0, 1}, {1, 1, 1, 1, 1, 1}}, swaps);
    ASSERT_EQ(orbits.size(), 2u);
    const auto& first = orbits[0].members.size() > 1 ? orbits[0] : orbits[1];
    const auto& fixed = orbits[0].members.size() > 1 ? orbits[1] : orbits[0];
    EXPECT_NE(std::find(first.members.begin(), first.members.end(), F2Point{0, 1, 0, 0, 1, 0}), first.members.end());
    EXPECT_NE(std::find(first.members.begin(), first.members.end(), F2Point{0, 0, 1, 1, 0, 0}), first.members.end());
    EXPECT_EQ(fixed.members, (std::vector<F2Point>{{1, 1, 1, 1, 1, 1}}));

    const auto all = orbit_decomposition(f2data::off_quadric_list(), swaps);
    std::size_t total = 0;
    for (const auto& o : all) total += o.members.size();
    EXPECT_EQ(total, 28u);
    EXPECT_EQ(all.size(), 4u);
}
