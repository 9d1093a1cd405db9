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

#ifndef GRASSPOLE_SWEEPS_HPP
#define GRASSPOLE_SWEEPS_HPP

#include <map>
#include <random>
#include <string>

#include "systems.hpp"

namespace grasspole {

struct SweepTally {
    std::size_t passed = 0;
    std::size_t total = 0;
    void record(bool ok) {
        ++total;
        passed += ok ? 1 : 0;
    }
    bool ok() const { return passed == total; }
};

/// Randomized determinant-identity checks on observable systems with n <= 4 and m, p <= 2.
struct SweepReport {
    std::map<std::string, SweepTally> checks;
    bool ok() const {
        for (const auto& [name, t] : checks) {
            if (!t.ok()) return false;
        }
        return true;
    }
};

inline ConstMatrix random_full_rank(FieldHandle f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
    while (true) {
        ConstMatrix K = random_matrix(f, rows, cols, rng);
        if (rank(K) == rows) return K;
    }
}

inline SweepReport identity_sweeps(FieldHandle f, std::uint64_t seed, std::size_t count) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick_n(1, 4), pick_mp(1, 2);
    SweepReport report;
    for (std::size_t iter = 0; iter < count; ++iter) {
        const std::size_t n = pick_n(rng), m = pick_mp(rng), p = pick_mp(rng);
        const StateSpace ss = random_observable_system(f, n, m, p, rng);
        const FactoredSystem fs = left_coprime_factorization(ss);
        report.checks["det_D_equals_charpoly_A"].record(det(fs.D()) == det(characteristic_matrix(ss.A)));
        report.checks["factorization_identity"].record(factorization_identity_holds(ss, fs));

        const ConstMatrix K = random_matrix(f, m, p, rng);
        const Poly direct = closed_loop_charpoly(ss, K);
        const auto pk_feedback = ProjectiveCompensator::from_feedback(K);
        report.checks["closed_loop_via_factors"].record(direct == charpoly_via_factors(fs, pk_feedback));
        report.checks["closed_loop_lemma2"].record(direct == lemma2_form(ss, pk_feedback));

        const ProjectiveCompensator pk(random_full_rank(f, m, m + p, rng), m);
        const Poly via = charpoly_via_factors(fs, pk);
        report.checks["lemma2_projective"].record(via == lemma2_form(ss, pk));
        const CoefficientMatrix Chat = coefficient_matrix(fs);
        const auto coeffs = Chat.apply(plucker_coords(pk.matrix()));
        report.checks["coefficient_matrix"].record(Poly(f, coeffs) == via);
        report.checks["degree_bound"].record(via.degree() <= fs.degree());
    }
    return report;
}

}  // namespace grasspole

#endif  // GRASSPOLE_SWEEPS_HPP
