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
 * @file poleplace.hpp
 * @brief Schubert numbers, pole placement censuses, the (m,p,n) = (2,2,4) fiber solver and the
 *        exhaustive check that no system over F_2 gives an onto map Grass(2,4) -> P^4.
 */

#ifndef GRASSPOLE_POLEPLACE_HPP
#define GRASSPOLE_POLEPLACE_HPP

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "constructions.hpp"
#include "parallel.hpp"
#include "systems.hpp"

namespace grasspole {

/// d(m,p) = 1! 2! ... (p-1)! (mp)! / (m! (m+1)! ... (m+p-1)!).
inline BigInt schubert_number(std::size_t m, std::size_t p) {
    if (m == 0 || p == 0) fail(ErrorCode::InvalidArgument, "m and p must be positive");
    BigInt num = factorial(m * p), den = 1;
    for (std::size_t i = 1; i < p; ++i) num *= factorial(i);
    for (std::size_t i = 0; i < p; ++i) den *= factorial(m + i);
    return num / den;
}

enum class CensusMode { affine, projective };

constexpr std::string_view to_string(CensusMode mode) noexcept {
    return mode == CensusMode::affine ? "affine" : "projective";
}

/**
 * Image statistics of the pole placement map at rational points.
 *
 * Affine mode: domain F_q^{m x p}, targets are the monic polynomials of degree n; results that
 * are not monic of degree n are counted in `off_target`. Projective mode: domain Grass(m, m+p),
 * targets are the points of P^n; compensators with identically zero polynomial are counted in
 * `off_target`. In both modes sum(size * count) + off_target = domain_size.
 */
struct CensusReport {
    std::string field;
    CensusMode mode = CensusMode::projective;
    int degree = 0;
    std::uint64_t domain_size = 0;
    std::uint64_t target_size = 0;
    std::uint64_t image_size = 0;
    std::uint64_t off_target = 0;
    std::map<std::uint64_t, std::uint64_t> histogram;  // fiber size -> number of targets
    std::uint64_t missed_count = 0;
    bool missed_listed = false;  // false when the target space was too large to list
    std::vector<std::vector<Scalar>> missed;  // ascending coefficients
};

namespace detail {

using CodeVector = std::vector<std::uint64_t>;

inline CodeVector codes_of(const std::vector<Scalar>& v) {
    CodeVector out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x.code());
    return out;
}

inline std::uint64_t checked_power(std::uint64_t q, std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (r > (std::uint64_t{1} << 62) / q) fail(ErrorCode::InvalidArgument, "census domain too large");
        r *= q;
    }
    return r;
}

}  // namespace detail

inline CensusReport census(const FactoredSystem& fs, CensusMode mode, std::uint64_t list_limit = 1u << 16) {
    const FieldHandle F = fs.field();
    if (!F->is_finite()) fail(ErrorCode::InfiniteField, "census needs a finite field");
    const CoefficientMatrix Chat = coefficient_matrix(fs);
    const std::size_t m = fs.m(), p = fs.p();
    const std::size_t n = static_cast<std::size_t>(Chat.degree);
    const std::uint64_t q = F->order();
    const auto elements = enumerate_field(F);

    CensusReport report;
    report.field = F->to_string();
    report.mode = mode;
    report.degree = Chat.degree;

    using Buckets = std::map<detail::CodeVector, std::uint64_t>;
    struct Partial {
        Buckets buckets;
        std::uint64_t off_target = 0;
    };

    std::function<std::vector<Scalar>(std::uint64_t)> image_of;
    std::optional<GrassmannianIndex> grass;
    if (mode == CensusMode::affine) {
        report.domain_size = detail::checked_power(q, m * p);
        report.target_size = detail::checked_power(q, n);
        image_of = [&](std::uint64_t index) {
            ConstMatrix K(F, m, p);
            for (std::size_t k = m * p; k-- > 0;) {
                K(k / p, k % p) = elements[index % q];
                index /= q;
            }
            return Chat.apply(plucker_coords(ConstMatrix::identity(F, m).hstack(K)));
        };
    } else {
        grass.emplace(m, m + p, F);
        report.domain_size = grass->size();
        report.target_size = (detail::checked_power(q, n + 1) - 1) / (q - 1);
        image_of = [&](std::uint64_t index) { return Chat.apply(plucker_coords(grass->point(index))); };
    }

    const auto partials = parallel_chunks<Partial>(report.domain_size, [&](std::uint64_t begin, std::uint64_t end) {
        Partial part;
        for (std::uint64_t i = begin; i < end; ++i) {
            auto image = image_of(i);
            if (mode == CensusMode::affine) {
                if (!image[n].is_one()) {
                    ++part.off_target;
                    continue;
                }
            } else {
                auto lead = std::find_if(image.begin(), image.end(), [](const Scalar& x) { return !x.is_zero(); });
                if (lead == image.end()) {
                    ++part.off_target;
                    continue;
                }
                const Scalar inv = lead->inverse();
                for (auto& x : image) x *= inv;
            }
            ++part.buckets[detail::codes_of(image)];
        }
        return part;
    });

    Buckets buckets;
    for (const auto& part : partials) {
        report.off_target += part.off_target;
        for (const auto& [key, count] : part.buckets) buckets[key] += count;
    }
    report.image_size = buckets.size();
    for (const auto& [key, count] : buckets) ++report.histogram[count];
    report.missed_count = report.target_size - report.image_size;

    if (report.target_size <= list_limit) {
        report.missed_listed = true;
        // Targets in ascending order of their code vectors read from the constant term.
        std::vector<Scalar> v(n + 1, Scalar::zero(F));
        auto visit = [&](const std::vector<Scalar>& target) {
            if (!buckets.contains(detail::codes_of(target))) report.missed.push_back(target);
        };
        if (mode == CensusMode::affine) {
            for (std::uint64_t idx = 0; idx < report.target_size; ++idx) {
                std::uint64_t rest = idx;
                for (std::size_t k = n; k-- > 0;) {
                    v[k] = elements[rest % q];
                    rest /= q;
                }
                v[n] = Scalar::one(F);
                visit(v);
            }
        } else {
            for (std::size_t lead = n + 1; lead-- > 0;) {
                const std::uint64_t tail = detail::checked_power(q, n - lead);
                for (std::uint64_t idx = 0; idx < tail; ++idx) {
                    std::fill(v.begin(), v.end(), Scalar::zero(F));
                    v[lead] = Scalar::one(F);
                    std::uint64_t rest = idx;
                    for (std::size_t k = n + 1; k-- > lead + 1;) {
                        v[k] = elements[rest % q];
                        rest /= q;
                    }
                    visit(v);
                }
            }
        }
    }
    return report;
}

struct FiberEntry {
    std::vector<Scalar> plucker;  // over the base field, or over F_{q^2} when in_extension
    unsigned multiplicity = 1;
    bool in_extension = false;
    bool k1_invertible = false;
    ConstMatrix compensator;             // [K1 K2] reconstructed from the Pluecker point
    std::optional<ConstMatrix> feedback;  // K1^{-1} K2, base-field entries only
    bool charpoly_matches = false;
};

struct FiberSolution {
    Poly target;
    std::vector<Scalar> particular;  // k0 with Chat k0 = target coefficients
    std::vector<Scalar> kernel;      // generator v of ker Chat
    std::array<Scalar, 3> quadratic; // Q(k0 + t v) = quadratic[0] + quadratic[1] t + quadratic[2] t^2
    std::vector<FiberEntry> entries;
    unsigned total_multiplicity = 0;
    std::string extension_field;  // set when roots were sought in F_{q^2}
    /// Over the rationals: discriminant of the quadratic when it is not a square (two conjugate
    /// irrational points, not materialized).
    std::optional<Scalar> irrational_discriminant;
};

namespace detail {

inline std::optional<BigInt> exact_isqrt(const BigInt& n) {
    if (n < 0) return std::nullopt;
    BigInt r = boost::multiprecision::sqrt(n);
    if (r * r != n) return std::nullopt;
    return r;
}

inline std::optional<Rational> rational_sqrt(const Rational& x) {
    const auto num = exact_isqrt(boost::multiprecision::numerator(x));
    const auto den = exact_isqrt(boost::multiprecision::denominator(x));
    if (!num || !den) return std::nullopt;
    return Rational(*num, *den);
}

inline bool proportional(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.monic() == b.monic();
}

}  // namespace detail

/**
 * All compensators [K1 K2] of a nondegenerate system with m = p = 2 and degree 4 whose closed-loop
 * polynomial is proportional to `target`. The preimage of the target line under Chat is
 * {k0 + t v}; intersecting with the quadric gives Q(k0) + t B(k0, v) + t^2 Q(v) = 0 with Q(v) != 0.
 */
inline FiberSolution fiber_solve_2x2(const FactoredSystem& fs, const Poly& target) {
    if (fs.m() != 2 || fs.p() != 2) fail(ErrorCode::UnsupportedShape, "fiber solver handles m = p = 2 only");
    if (fs.degree() != 4) fail(ErrorCode::UnsupportedShape, "fiber solver needs degree 4");
    if (target.is_zero() || target.degree() > 4) fail(ErrorCode::InvalidArgument, "target must be nonzero of degree <= 4");
    if (target.field() != fs.field()) fail(ErrorCode::FieldMismatch, "target over a different field");
    const ExactDegeneracy exact = is_degenerate_exact(fs);
    if (exact.verdict != DegeneracyVerdict::nondegenerate) fail(ErrorCode::DegenerateSystem, "system is degenerate");

    const FieldHandle F = fs.field();
    const CoefficientMatrix Chat = coefficient_matrix(fs);
    std::vector<Scalar> phi;
    for (std::size_t e = 0; e <= 4; ++e) phi.push_back(target.coefficient(e));
    const auto k0 = solve(Chat.matrix, phi);
    if (!k0) fail(ErrorCode::DegenerateSystem, "coefficient matrix is not onto");
    const std::vector<Scalar>& v = *exact.generator;

    FiberSolution sol{target, *k0, v, {plucker_quadric_2_4(*k0), plucker_bilinear_2_4(*k0, v), plucker_quadric_2_4(v)}, {}, 0, {}, {}};
    const Poly quad(F, {sol.quadratic[0], sol.quadratic[1], sol.quadratic[2]});

    auto add_entry = [&](const FactoredSystem& sys, const std::vector<Scalar>& a, const std::vector<Scalar>& b,
                         const Scalar& t, unsigned mult, bool in_ext, const Poly& goal) {
        FiberEntry entry;
        for (std::size_t i = 0; i < 6; ++i) entry.plucker.push_back(a[i] + t * b[i]);
        entry.multiplicity = mult;
        entry.in_extension = in_ext;
        entry.compensator = reconstruct_matrix(make_plucker(2, 4, entry.plucker));
        const ProjectiveCompensator pk(entry.compensator, 2);
        entry.k1_invertible = rank(pk.K1()) == 2;
        if (entry.k1_invertible && !in_ext) entry.feedback = recover_feedback(pk);
        entry.charpoly_matches = detail::proportional(charpoly_via_factors(sys, pk), goal);
        sol.total_multiplicity += mult;
        sol.entries.push_back(std::move(entry));
    };

    if (!F->is_finite()) {
        const Rational a = sol.quadratic[2].rational(), b = sol.quadratic[1].rational(), c = sol.quadratic[0].rational();
        const Rational disc = b * b - 4 * a * c;
        const auto root = detail::rational_sqrt(disc);
        if (!root) {
            sol.irrational_discriminant = Scalar::from_rational(F, disc);
            sol.total_multiplicity = 2;
            return sol;
        }
        if (*root == 0) {
            add_entry(fs, *k0, v, Scalar::from_rational(F, -b / (2 * a)), 2, false, target);
        } else {
            add_entry(fs, *k0, v, Scalar::from_rational(F, (-b - *root) / (2 * a)), 1, false, target);
            add_entry(fs, *k0, v, Scalar::from_rational(F, (-b + *root) / (2 * a)), 1, false, target);
        }
        return sol;
    }

    const auto roots = roots_in_field(quad);
    if (!roots.empty()) {
        for (const auto& r : roots) add_entry(fs, *k0, v, r.value, r.multiplicity, false, target);
        return sol;
    }
    const QuadraticExtension ext = quadratic_extension(F);
    sol.extension_field = ext.field->to_string();
    const FactoredSystem lifted = embed(fs, ext);
    std::vector<Scalar> k0e, ve;
    for (std::size_t i = 0; i < 6; ++i) {
        k0e.push_back(ext.embed((*k0)[i]));
        ve.push_back(ext.embed(v[i]));
    }
    for (const auto& r : roots_in_field(embed(quad, ext))) add_entry(lifted, k0e, ve, r.value, r.multiplicity, true, embed(target, ext));
    return sol;
}

// ---------------------------------------------------------------------------------------------
// Exhaustive verification over F_2.

using F2Point = std::vector<int>;
using AxisPermutation = std::array<std::size_t, 6>;

struct Orbit {
    F2Point representative;  // lex-least member
    std::vector<F2Point> members;
};

/// Orbits of `points` under the group generated by the coordinate permutations `swaps`.
inline std::vector<Orbit> orbit_decomposition(const std::vector<F2Point>& points, const std::vector<AxisPermutation>& swaps) {
    std::set<F2Point> remaining(points.begin(), points.end());
    std::vector<Orbit> orbits;
    while (!remaining.empty()) {
        std::set<F2Point> orbit{*remaining.begin()};
        std::vector<F2Point> frontier{*remaining.begin()};
        while (!frontier.empty()) {
            const F2Point x = frontier.back();
            frontier.pop_back();
            for (const auto& perm : swaps) {
                F2Point y(x.size());
                for (std::size_t i = 0; i < x.size(); ++i) y[perm[i]] = x[i];
                if (orbit.insert(y).second) frontier.push_back(y);
            }
        }
        for (const auto& x : orbit) remaining.erase(x);
        orbits.push_back({*orbit.begin(), std::vector<F2Point>(orbit.begin(), orbit.end())});
    }
    return orbits;
}

struct F2Case {
    F2Point generator;
    ConstMatrix chat;  // RREF basis of the annihilator of the generator
    std::size_t image_size = 0;
    std::vector<F2Point> missed;
    bool nonsurjective = false;
    bool missed_confirmed = false;  // every missed target re-checked against all rank-2 2x4 matrices
};

struct F2Canonical {
    F2Point generator;
    ConstMatrix listed_chat;
    F2Point listed_missed;
    bool kernel_matches = false;
    bool row_space_matches = false;
    bool listed_missed_confirmed = false;
};

struct F2Report {
    std::size_t nonzero_points = 0;
    std::size_t quadric_points = 0;
    std::size_t off_quadric_points = 0;
    bool quadric_is_grassmannian = false;
    bool off_quadric_matches_list = false;
    bool swaps_preserve_quadric = false;
    std::vector<F2Case> cases;
    std::vector<F2Canonical> canonical;
    std::vector<Orbit> orbits;
    bool orbits_match = false;

    bool all_nonsurjective() const {
        return !cases.empty() && std::all_of(cases.begin(), cases.end(), [](const F2Case& c) {
                   return c.nonsurjective && c.missed_confirmed;
               });
    }

    bool canonical_ok() const {
        return canonical.size() == 4 && std::all_of(canonical.begin(), canonical.end(), [](const F2Canonical& c) {
                   return c.kernel_matches && c.row_space_matches && c.listed_missed_confirmed;
               });
    }

    bool passed() const {
        return quadric_points == 35 && off_quadric_points == 28 && quadric_is_grassmannian && off_quadric_matches_list &&
               swaps_preserve_quadric && all_nonsurjective() && canonical_ok() && orbits_match;
    }
};

namespace f2data {

/// Off-quadric kernel generators, coordinates ordered 12, 13, 14, 23, 24, 34.
inline const std::vector<F2Point>& off_quadric_list() {
    static const std::vector<F2Point> list = {
        {1, 0, 0, 0, 0, 1}, {0, 1, 0, 0, 1, 0}, {0, 0, 1, 1, 0, 0}, {1, 1, 1, 1, 1, 1}, {1, 1, 0, 0, 0, 1},
        {1, 0, 1, 0, 0, 1}, {1, 0, 0, 1, 0, 1}, {1, 0, 0, 0, 1, 1}, {1, 1, 0, 0, 1, 0}, {0, 1, 1, 0, 1, 0},
        {0, 1, 0, 1, 1, 0}, {0, 1, 0, 0, 1, 1}, {1, 0, 1, 1, 0, 0}, {0, 1, 1, 1, 0, 0}, {0, 0, 1, 1, 1, 0},
        {0, 0, 1, 1, 0, 1}, {0, 0, 1, 1, 1, 1}, {0, 1, 0, 1, 1, 1}, {0, 1, 1, 0, 1, 1}, {0, 1, 1, 1, 0, 1},
        {1, 0, 0, 1, 1, 1}, {1, 0, 1, 0, 1, 1}, {1, 0, 1, 1, 1, 0}, {1, 1, 0, 1, 0, 1}, {1, 1, 0, 1, 1, 0},
        {1, 1, 1, 0, 0, 1}, {1, 1, 1, 0, 1, 0}, {1, 1, 1, 1, 0, 0},
    };
    return list;
}

/// Basis changes of F_2^6 induced by automorphisms of Grass(2,4), as index permutations.
inline const std::vector<AxisPermutation>& swaps() {
    static const std::vector<AxisPermutation> list = {
        AxisPermutation{5, 1, 2, 3, 4, 0}, AxisPermutation{0, 4, 2, 3, 1, 5}, AxisPermutation{0, 1, 3, 2, 4, 5},
        AxisPermutation{1, 0, 2, 3, 5, 4}, AxisPermutation{2, 1, 0, 5, 4, 3}, AxisPermutation{0, 2, 1, 4, 3, 5},
    };
    return list;
}

struct CanonicalCase {
    F2Point generator;
    std::array<std::array<int, 6>, 5> chat;
    F2Point missed;
};

inline const std::vector<CanonicalCase>& canonical_cases() {
    static const std::vector<CanonicalCase> list = {
        {{1, 0, 0, 0, 0, 1},
         {{{1, 0, 0, 0, 0, 1}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}}},
         {1, 1, 1, 0, 1}},
        {{1, 1, 0, 0, 0, 1},
         {{{1, 0, 0, 0, 0, 1}, {0, 1, 0, 0, 0, 1}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}}},
         {1, 1, 1, 1, 0}},
        {{0, 0, 1, 1, 1, 1},
         {{{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 1}, {0, 0, 0, 1, 0, 1}, {0, 0, 0, 0, 1, 1}}},
         {0, 1, 0, 0, 1}},
        {{1, 1, 1, 1, 1, 1},
         {{{1, 0, 0, 0, 0, 1}, {0, 1, 0, 0, 0, 1}, {0, 0, 1, 0, 0, 1}, {0, 0, 0, 1, 0, 1}, {0, 0, 0, 0, 1, 1}}},
         {1, 1, 0, 0, 1}},
    };
    return list;
}

}  // namespace f2data

namespace detail {

inline F2Point to_f2(const std::vector<Scalar>& v) {
    F2Point out;
    for (const auto& x : v) out.push_back(static_cast<int>(x.code()));
    return out;
}

inline std::vector<Scalar> from_f2(const F2Point& v, FieldHandle F) {
    std::vector<Scalar> out;
    for (int x : v) out.push_back(Scalar::from_int(F, x));
    return out;
}

inline F2Point apply_f2(const ConstMatrix& C, const F2Point& k) {
    F2Point out(C.rows(), 0);
    for (std::size_t r = 0; r < C.rows(); ++r) {
        int acc = 0;
        for (std::size_t c = 0; c < C.cols(); ++c) acc ^= static_cast<int>(C(r, c).code()) & k[c];
        out[r] = acc;
    }
    return out;
}

/// Pluecker vectors of all 2x4 matrices of rank 2 over F_2, computed directly from 2x2 minors.
inline std::vector<F2Point> all_rank2_pluckers() {
    std::vector<F2Point> out;
    for (int bits = 0; bits < 256; ++bits) {
        int a[2][4];
        for (int k = 0; k < 8; ++k) a[k / 4][k % 4] = (bits >> k) & 1;
        F2Point v;
        for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) v.push_back((a[0][i] * a[1][j] + a[0][j] * a[1][i]) & 1);
        }
        if (std::any_of(v.begin(), v.end(), [](int x) { return x != 0; })) out.push_back(v);
    }
    return out;
}

}  // namespace detail

inline F2Report verify_f2_theorem() {
    const FieldHandle F = gf(2);
    F2Report report;

    std::set<F2Point> grass;
    for (const auto& M : enumerate_grassmannian(2, 4, F)) grass.insert(detail::to_f2(plucker_coords(M)));

    std::set<F2Point> quadric, off;
    for (int bits = 1; bits < 64; ++bits) {
        F2Point v(6);
        for (int i = 0; i < 6; ++i) v[i] = (bits >> (5 - i)) & 1;
        ++report.nonzero_points;
        if (plucker_quadric_2_4(detail::from_f2(v, F)).is_zero()) {
            quadric.insert(v);
        } else {
            off.insert(v);
        }
    }
    report.quadric_points = quadric.size();
    report.off_quadric_points = off.size();
    report.quadric_is_grassmannian = quadric == grass;
    const auto& listed = f2data::off_quadric_list();
    report.off_quadric_matches_list = std::set<F2Point>(listed.begin(), listed.end()) == off && listed.size() == off.size();

    report.swaps_preserve_quadric = true;
    for (const auto& perm : f2data::swaps()) {
        for (const auto& x : quadric) {
            F2Point y(6);
            for (std::size_t i = 0; i < 6; ++i) y[perm[i]] = x[i];
            if (!quadric.contains(y)) report.swaps_preserve_quadric = false;
        }
    }

    const auto rank2 = detail::all_rank2_pluckers();
    for (const auto& v : off) {
        F2Case c;
        c.generator = v;
        c.chat = rref(nullspace(ConstMatrix(F, 1, 6, detail::from_f2(v, F)))).reduced;
        std::set<F2Point> image;
        for (const auto& k : grass) image.insert(detail::apply_f2(c.chat, k));
        c.image_size = image.size();
        for (int bits = 1; bits < 32; ++bits) {
            F2Point t(5);
            for (int i = 0; i < 5; ++i) t[i] = (bits >> (4 - i)) & 1;
            if (!image.contains(t)) c.missed.push_back(t);
        }
        c.nonsurjective = c.image_size < 31 && !c.missed.empty();
        c.missed_confirmed = std::all_of(c.missed.begin(), c.missed.end(), [&](const F2Point& t) {
            return std::none_of(rank2.begin(), rank2.end(), [&](const F2Point& k) { return detail::apply_f2(c.chat, k) == t; });
        });
        report.cases.push_back(std::move(c));
    }

    for (const auto& cc : f2data::canonical_cases()) {
        F2Canonical out;
        out.generator = cc.generator;
        out.listed_missed = cc.missed;
        std::vector<Scalar> entries;
        for (const auto& row : cc.chat) {
            for (int x : row) entries.push_back(Scalar::from_int(F, x));
        }
        out.listed_chat = ConstMatrix(F, 5, 6, std::move(entries));
        const ConstMatrix kernel = nullspace(out.listed_chat);
        out.kernel_matches = kernel.rows() == 1 && detail::to_f2(kernel.data()) == cc.generator;
        const auto own = std::find_if(report.cases.begin(), report.cases.end(),
                                      [&](const F2Case& c) { return c.generator == cc.generator; });
        out.row_space_matches = own != report.cases.end() && same_row_space(own->chat, out.listed_chat);
        out.listed_missed_confirmed = std::none_of(rank2.begin(), rank2.end(), [&](const F2Point& k) {
            return detail::apply_f2(out.listed_chat, k) == cc.missed;
        });
        report.canonical.push_back(std::move(out));
    }

    report.orbits = orbit_decomposition(std::vector<F2Point>(off.begin(), off.end()), f2data::swaps());
    std::size_t covered = 0;
    bool one_rep_each = report.orbits.size() == 4;
    for (const auto& orbit : report.orbits) {
        covered += orbit.members.size();
        std::size_t reps = 0;
        for (const auto& cc : f2data::canonical_cases()) {
            reps += std::count(orbit.members.begin(), orbit.members.end(), cc.generator);
        }
        one_rep_each = one_rep_each && reps == 1;
    }
    report.orbits_match = one_rep_each && covered == 28;
    return report;
}

}  // namespace grasspole

#endif  // GRASSPOLE_POLEPLACE_HPP
