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
 * @file io.hpp
 * @brief JSON encodings.
 *
 * Field elements are strings ("3", "-1/2", "(1,0,1)"). Polynomials are arrays of ascending
 * coefficients; on input a string such as "3*s^2 + s - 1" is also accepted. Matrices are nested
 * row arrays. Multi-indices are printed 1-based. Big integers are decimal strings.
 */

#ifndef GRASSPOLE_IO_HPP
#define GRASSPOLE_IO_HPP

#include <cctype>
#include <optional>
#include <string>

#include <json.hpp>

#include "poleplace.hpp"

namespace grasspole {

using json = nlohmann::ordered_json;

inline json to_json(const Scalar& x) { return x.to_string(); }

inline json to_json(const std::vector<Scalar>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(x.to_string());
    return out;
}

inline json to_json(const Poly& f) { return to_json(f.coefficients()); }

inline json to_json(const ConstMatrix& M) {
    json out = json::array();
    for (std::size_t i = 0; i < M.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < M.cols(); ++j) row.push_back(M(i, j).to_string());
        out.push_back(std::move(row));
    }
    return out;
}

inline json to_json(const PolyMatrix& M) {
    json out = json::array();
    for (std::size_t i = 0; i < M.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < M.cols(); ++j) row.push_back(to_json(M(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

inline json to_json(const MultiIndex& alpha) { return alpha.one_based(); }

inline json to_json(const BigInt& n) { return n.str(); }

inline Scalar scalar_from_json(const json& j, FieldHandle f) {
    if (j.is_number_integer()) return Scalar::from_int(f, j.get<long long>());
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
    fail(ErrorCode::InvalidArgument, "field element must be a string or an integer");
}

inline std::vector<Scalar> scalars_from_json(const json& j, FieldHandle f) {
    if (!j.is_array()) fail(ErrorCode::InvalidArgument, "expected an array of field elements");
    std::vector<Scalar> out;
    for (const auto& x : j) out.push_back(scalar_from_json(x, f));
    return out;
}

namespace detail {

/// Parses sums of terms c, c*s, c*s^k, s^k (c a field element literal).
inline Poly parse_poly_text(std::string_view text, FieldHandle f) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    if (s.empty()) fail(ErrorCode::InvalidArgument, "empty polynomial");
    std::vector<std::string> terms;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if ((c == '+' || c == '-') && depth == 0 && i > start && std::string_view("*/^(").find(s[i - 1]) == std::string_view::npos) {
            terms.push_back(s.substr(start, i - start));
            start = i;
        }
    }
    terms.push_back(s.substr(start));
    Poly out(f);
    for (std::string term : terms) {
        bool negative = false;
        while (!term.empty() && (term.front() == '+' || term.front() == '-')) {
            negative ^= term.front() == '-';
            term.erase(0, 1);
        }
        if (term.empty()) fail(ErrorCode::InvalidArgument, "dangling sign in '" + std::string(text) + "'");
        const auto pos = term.find('s');
        Scalar coeff = Scalar::one(f);
        std::size_t degree = 0;
        if (pos == std::string::npos) {
            coeff = Scalar::parse(f, term);
        } else {
            std::string head = term.substr(0, pos);
            if (!head.empty() && head.back() == '*') head.pop_back();
            if (!head.empty()) coeff = Scalar::parse(f, head);
            const std::string tail = term.substr(pos + 1);
            if (tail.empty()) {
                degree = 1;
            } else if (tail.front() == '^') {
                degree = detail::parse_u64(tail.substr(1), "exponent");
            } else {
                fail(ErrorCode::InvalidArgument, "malformed term '" + term + "'");
            }
        }
        out = out + Poly::monomial(negative ? -coeff : coeff, degree);
    }
    return out;
}

}  // namespace detail

inline Poly poly_from_json(const json& j, FieldHandle f) {
    if (j.is_string()) return detail::parse_poly_text(j.get<std::string>(), f);
    if (j.is_number_integer()) return Poly::constant(scalar_from_json(j, f));
    return Poly(f, scalars_from_json(j, f));
}

template <class T, class Parse>
Matrix<T> matrix_from_json(const json& j, FieldHandle f, Parse parse) {
    if (!j.is_array() || j.empty() || !j.front().is_array() || j.front().empty()) {
        fail(ErrorCode::InvalidArgument, "matrix must be a nonempty array of nonempty rows");
    }
    const std::size_t rows = j.size(), cols = j.front().size();
    std::vector<T> data;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != cols) fail(ErrorCode::DimensionMismatch, "ragged matrix rows");
        for (const auto& x : row) data.push_back(parse(x, f));
    }
    return Matrix<T>(f, rows, cols, std::move(data));
}

inline ConstMatrix const_matrix_from_json(const json& j, FieldHandle f) {
    return matrix_from_json<Scalar>(j, f, scalar_from_json);
}

inline PolyMatrix poly_matrix_from_json(const json& j, FieldHandle f) {
    return matrix_from_json<Poly>(j, f, poly_from_json);
}

inline DegreeMatrix degree_matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty() || !j.front().is_array()) fail(ErrorCode::InvalidArgument, "degrees must be nested arrays");
    std::vector<int> d;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != j.front().size()) fail(ErrorCode::DimensionMismatch, "ragged degree rows");
        for (const auto& x : row) d.push_back(x.get<int>());
    }
    return DegreeMatrix(j.size(), j.front().size(), std::move(d));
}

inline json to_json(const DegreeMatrix& D) {
    json out = json::array();
    for (std::size_t i = 0; i < D.rows; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < D.cols; ++j) row.push_back(D(i, j));
        out.push_back(std::move(row));
    }
    return out;
}

/**
 * A system file. Kinds:
 *   state_space  {"A", "B", "C"}
 *   factored     {"N", "D"}
 *   matrix       {"M"}            M = [N D], split after the first cols - rows columns
 *   monomial     {"coefficients", "degrees"}
 *   constant     {"M"}            a constant matrix (for MDS checks)
 */
struct SystemDocument {
    FieldHandle field;
    std::string kind;
    std::optional<StateSpace> state_space;
    std::optional<FactoredSystem> factored;
    std::optional<MonomialSystem> monomial;
    std::optional<ConstMatrix> constant;
    json provenance;

    /// The factored form; state-space systems are factored on demand.
    FactoredSystem factored_system() const {
        if (factored) return *factored;
        if (state_space) return left_coprime_factorization(*state_space);
        fail(ErrorCode::InvalidArgument, "a '" + kind + "' document has no polynomial system");
    }
};

inline SystemDocument system_from_json(const json& j, std::optional<FieldHandle> field = std::nullopt) {
    if (!j.is_object()) fail(ErrorCode::InvalidArgument, "system document must be a JSON object");
    SystemDocument doc;
    if (j.contains("field")) {
        doc.field = make_field(j.at("field").get<std::string>());
        if (field && *field != doc.field) fail(ErrorCode::FieldMismatch, "document field differs from --field");
    } else if (field) {
        doc.field = *field;
    } else {
        fail(ErrorCode::InvalidArgument, "no field given");
    }
    doc.kind = j.value("kind", std::string("factored"));
    const FieldHandle F = doc.field;
    if (doc.kind == "state_space") {
        doc.state_space = StateSpace(const_matrix_from_json(j.at("A"), F), const_matrix_from_json(j.at("B"), F),
                                     const_matrix_from_json(j.at("C"), F));
    } else if (doc.kind == "factored") {
        doc.factored = FactoredSystem(poly_matrix_from_json(j.at("N"), F), poly_matrix_from_json(j.at("D"), F));
    } else if (doc.kind == "matrix") {
        doc.factored = FactoredSystem::from_matrix(poly_matrix_from_json(j.at("M"), F));
    } else if (doc.kind == "monomial") {
        doc.monomial = monomial_matrix(const_matrix_from_json(j.at("coefficients"), F), degree_matrix_from_json(j.at("degrees")));
        doc.factored = doc.monomial->to_factored();
    } else if (doc.kind == "constant") {
        doc.constant = const_matrix_from_json(j.at("M"), F);
    } else {
        fail(ErrorCode::InvalidArgument, "unknown system kind '" + doc.kind + "'");
    }
    if (j.contains("provenance")) doc.provenance = j.at("provenance");
    return doc;
}

inline json to_json(const StateSpace& ss) {
    return json{{"field", ss.field()->to_string()}, {"kind", "state_space"}, {"A", to_json(ss.A)}, {"B", to_json(ss.B)}, {"C", to_json(ss.C)}};
}

inline json to_json(const FactoredSystem& fs) {
    return json{{"field", fs.field()->to_string()}, {"kind", "factored"}, {"N", to_json(fs.N())}, {"D", to_json(fs.D())}};
}

inline json to_json(const MonomialSystem& ms) {
    return json{{"field", ms.coefficients.field()->to_string()},
                {"kind", "monomial"},
                {"coefficients", to_json(ms.coefficients)},
                {"degrees", to_json(ms.degrees)},
                {"M", to_json(ms.realized)}};
}

inline json to_json(const SystemDocument& doc) {
    json out;
    if (doc.state_space) {
        out = to_json(*doc.state_space);
    } else if (doc.monomial) {
        out = to_json(*doc.monomial);
    } else if (doc.constant) {
        out = json{{"field", doc.field->to_string()}, {"kind", "constant"}, {"M", to_json(*doc.constant)}};
    } else if (doc.kind == "matrix") {
        out = json{{"field", doc.field->to_string()}, {"kind", "matrix"}, {"M", to_json(doc.factored->M())}};
    } else {
        out = to_json(*doc.factored);
    }
    if (!doc.provenance.is_null()) out["provenance"] = doc.provenance;
    return out;
}

inline json to_json(const PluckerVector& v) {
    return json{{"field", v.field()->to_string()}, {"m", v.size}, {"N", v.ambient}, {"coordinates", to_json(v.coords)}};
}

inline json to_json(const ExactDegeneracy& e) {
    json out{{"verdict", std::string(to_string(e.verdict))}, {"kernel_dimension", e.kernel_dimension}};
    if (e.generator) out["kernel_generator"] = to_json(*e.generator);
    if (e.quadric_value) out["quadric_value"] = to_json(*e.quadric_value);
    return out;
}

inline json to_json(const CensusReport& r) {
    json hist = json::array();
    for (const auto& [size, count] : r.histogram) hist.push_back(json{{"fiber_size", size}, {"count", count}});
    json missed = json::array();
    for (const auto& t : r.missed) missed.push_back(to_json(t));
    json out{{"field", r.field},
             {"mode", std::string(to_string(r.mode))},
             {"degree", r.degree},
             {"domain_size", r.domain_size},
             {"target_size", r.target_size},
             {"image_size", r.image_size},
             {"off_target", r.off_target},
             {"surjective", r.missed_count == 0},
             {"histogram", hist},
             {"missed_count", r.missed_count},
             {"missed_listed", r.missed_listed},
             {"missed", missed}};
    return out;
}

inline json to_json(const FiberSolution& sol) {
    json entries = json::array();
    for (const auto& e : sol.entries) {
        json entry{{"plucker", to_json(e.plucker)},
                   {"multiplicity", e.multiplicity},
                   {"in_extension", e.in_extension},
                   {"k1_invertible", e.k1_invertible},
                   {"compensator", to_json(e.compensator)},
                   {"charpoly_matches", e.charpoly_matches}};
        if (e.feedback) entry["feedback"] = to_json(*e.feedback);
        entries.push_back(std::move(entry));
    }
    json out{{"target", to_json(sol.target)},
             {"particular", to_json(sol.particular)},
             {"kernel", to_json(sol.kernel)},
             {"quadratic", json::array({to_json(sol.quadratic[0]), to_json(sol.quadratic[1]), to_json(sol.quadratic[2])})},
             {"entries", entries},
             {"total_multiplicity", sol.total_multiplicity}};
    if (!sol.extension_field.empty()) out["extension_field"] = sol.extension_field;
    if (sol.irrational_discriminant) out["irrational_discriminant"] = to_json(*sol.irrational_discriminant);
    return out;
}

inline json to_json(const F2Report& r) {
    json cases = json::array();
    for (const auto& c : r.cases) {
        cases.push_back(json{{"generator", c.generator},
                             {"chat", to_json(c.chat)},
                             {"image_size", c.image_size},
                             {"missed", c.missed},
                             {"nonsurjective", c.nonsurjective},
                             {"missed_confirmed", c.missed_confirmed},
                             {"pass", c.nonsurjective && c.missed_confirmed}});
    }
    json canonical = json::array();
    for (const auto& c : r.canonical) {
        canonical.push_back(json{{"generator", c.generator},
                                 {"listed_chat", to_json(c.listed_chat)},
                                 {"kernel_matches", c.kernel_matches},
                                 {"row_space_matches", c.row_space_matches},
                                 {"listed_missed", c.listed_missed},
                                 {"listed_missed_confirmed", c.listed_missed_confirmed}});
    }
    json orbits = json::array();
    for (const auto& o : r.orbits) orbits.push_back(json{{"representative", o.representative}, {"size", o.members.size()}});
    return json{{"nonzero_points", r.nonzero_points},
                {"quadric_points", r.quadric_points},
                {"off_quadric_points", r.off_quadric_points},
                {"quadric_is_grassmannian", r.quadric_is_grassmannian},
                {"off_quadric_matches_list", r.off_quadric_matches_list},
                {"swaps_preserve_quadric", r.swaps_preserve_quadric},
                {"cases", cases},
                {"canonical", canonical},
                {"orbits", orbits},
                {"orbits_match", r.orbits_match},
                {"pass", r.passed()}};
}

}  // namespace grasspole

#endif  // GRASSPOLE_IO_HPP
