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

// Command-line front end. Exit codes: 0 success, 1 finding contrary to --expect (or a failed
// verification), 2 usage error. Library errors are reported as {"error", "message"} with exit 1.

#ifndef GRASSPOLE_TOOLS_CLI_HPP
#define GRASSPOLE_TOOLS_CLI_HPP

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "grasspole/grasspole.hpp"

namespace grasspole::cli {

struct Options {
    std::string field;
    std::string system;
    std::string out;
    std::string format = "json";
    std::string method = "enumerate";
    std::string expect;
    std::string mode = "projective";
    std::string target;
    std::optional<std::size_t> m, p, n;
    bool hasse = false;
    std::uint64_t seed = 1;
    std::size_t count = 100;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Outcome {
    Outcome() = default;
    Outcome(json r, int code = 0, std::optional<std::string> table = std::nullopt)
        : report(std::move(r)), exit_code(code), csv(std::move(table)) {}

    json report;
    int exit_code = 0;
    std::optional<std::string> csv;  // set by subcommands that support --format csv
};

namespace detail {

inline FieldHandle require_field(const Options& o) {
    if (o.field.empty()) throw UsageError("--field is required");
    return make_field(o.field);
}

inline std::size_t require(const std::optional<std::size_t>& v, const char* name) {
    if (!v) throw UsageError(std::string("--") + name + " is required");
    if (*v == 0) throw UsageError(std::string("--") + name + " must be positive");
    return *v;
}

inline SystemDocument load_system(const Options& o) {
    if (o.system.empty()) throw UsageError("--system is required");
    std::ifstream in(o.system);
    if (!in) throw UsageError("cannot open " + o.system);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw UsageError("malformed JSON in " + o.system + ": " + e.what());
    }
    std::optional<FieldHandle> field;
    if (!o.field.empty()) field = make_field(o.field);
    return system_from_json(j, field);
}

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline void render_text(const json& j, const std::string& prefix, std::ostream& os) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) render_text(value, prefix.empty() ? key : prefix + "." + key, os);
    } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const json& x) { return x.is_object(); })) {
        for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], prefix + "[" + std::to_string(i) + "]", os);
    } else {
        os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

inline Outcome field_info(const Options& o) {
    const FieldHandle F = require_field(o);
    json modulus = F->spec().modulus;
    return {json{{"field", F->to_string()},
                 {"kind", F->is_finite() ? "finite" : "rationals"},
                 {"characteristic", F->characteristic()},
                 {"extension_degree", F->is_finite() ? F->extension_degree() : 0},
                 {"order", F->is_finite() ? std::to_string(F->order()) : std::string("infinite")},
                 {"modulus", modulus}}};
}

inline Outcome minors(const Options& o) {
    const SystemDocument doc = load_system(o);
    const FactoredSystem fs = doc.factored_system();
    json list = json::array();
    std::ostringstream csv;
    csv << "columns,minor\n";
    const auto alphas = subsets(fs.m() + fs.p(), fs.p());
    for (std::size_t k = 0; k < alphas.size(); ++k) {
        list.push_back(json{{"columns", to_json(alphas[k])}, {"minor", to_json(fs.minors()[k])}});
        std::string cols;
        for (auto c : alphas[k].one_based()) cols += (cols.empty() ? "" : " ") + std::to_string(c);
        csv << cols << "," << csv_escape(fs.minors()[k].to_string()) << "\n";
    }
    std::optional<MultiIndex> zero;
    for (std::size_t k = 0; k < alphas.size() && !zero; ++k) {
        if (fs.minors()[k].is_zero()) zero = alphas[k];
    }
    json report{{"field", fs.field()->to_string()},
                {"m", fs.m()},
                {"p", fs.p()},
                {"minors", list},
                {"degree", fs.degree()},
                {"left_prime", fs.coprime()},
                {"zero_minor", zero ? to_json(*zero) : json(nullptr)}};
    return {report, 0, csv.str()};
}

inline int expectation_exit(const Options& o, const std::string& verdict) {
    if (o.expect.empty()) return 0;
    if (o.expect != "degenerate" && o.expect != "nondegenerate") throw UsageError("--expect must be degenerate or nondegenerate");
    if (o.expect == "degenerate") return verdict == "degenerate" ? 0 : 1;
    return verdict == "degenerate" ? 1 : 0;
}

inline Outcome degeneracy(const Options& o) {
    const SystemDocument doc = load_system(o);
    const FactoredSystem fs = doc.factored_system();
    json report{{"field", fs.field()->to_string()}, {"method", o.method}, {"m", fs.m()}, {"p", fs.p()}, {"degree", fs.degree()}};
    std::string verdict;
    if (o.method == "enumerate") {
        const auto witness = is_degenerate_rational(fs);
        verdict = witness ? "degenerate" : "no_rational_witness";
        report["verdict"] = verdict;
        report["witness"] = witness ? to_json(witness->matrix()) : json(nullptr);
        if (witness) report["witness_charpoly"] = to_json(charpoly_via_factors(fs, *witness));
    } else if (o.method == "exact") {
        const ExactDegeneracy exact = is_degenerate_exact(fs);
        verdict = std::string(to_string(exact.verdict));
        const json details = to_json(exact);
        for (const auto& [key, value] : details.items()) report[key] = value;
    } else {
        throw UsageError("--method must be enumerate or exact");
    }
    return {report, expectation_exit(o, verdict)};
}

inline Outcome factorize(const Options& o) {
    const SystemDocument doc = load_system(o);
    if (!doc.state_space) throw UsageError("factorize needs a state_space system");
    const StateSpace& ss = *doc.state_space;
    const FactoredSystem fs = left_coprime_factorization(ss);
    json report = to_json(fs);
    report["provenance"] = json{{"construction", "left_coprime_factorization"},
                                {"n", ss.n()},
                                {"observability_rank", observability_rank(ss)},
                                {"reachability_rank", reachability_rank(ss)},
                                {"left_prime", fs.coprime()},
                                {"degree", fs.degree()},
                                {"identity_holds", factorization_identity_holds(ss, fs)}};
    return {report};
}

inline Outcome onc(const Options& o) {
    const FieldHandle F = require_field(o);
    const std::size_t p = require(o.p, "p"), m = require(o.m, "m");
    const PolyMatrix M = o.hasse ? osculating_curve_hasse(p, m, F) : osculating_curve_classical(p, m, F);
    const auto zero = find_zero_maximal_minor(M);
    json report{{"field", F->to_string()},
                {"kind", "matrix"},
                {"M", to_json(M)},
                {"provenance", json{{"construction", "osculating_normal_curve"},
                                    {"derivative", o.hasse ? "hasse" : "classical"},
                                    {"p", p},
                                    {"m", m}}},
                {"zero_rows", zero_rows(M)},
                {"zero_minor", zero ? to_json(*zero) : json(nullptr)}};
    return {report};
}

inline Outcome monomial(const Options& o) {
    const SystemDocument doc = load_system(o);
    if (!doc.monomial) throw UsageError("monomial needs a monomial system");
    json report = to_json(*doc.monomial);
    report["degree"] = system_degree(doc.monomial->realized);
    report["left_prime"] = is_left_prime(doc.monomial->realized);
    return {report};
}

inline Outcome main_theorem(const Options& o) {
    const FieldHandle F = require_field(o);
    const std::size_t p = require(o.p, "p"), m = require(o.m, "m");
    const MonomialSystem sys = main_theorem_system(p, m, F, o.n);
    json report = to_json(sys);
    report["provenance"] = json{{"construction", "main_theorem_system"},
                                {"p", p},
                                {"m", m},
                                {"n", o.n.value_or(m * p)},
                                {"cauchy", to_json(sys.coefficients.column_range(p, m))}};
    report["degree"] = system_degree(sys.realized);
    report["left_prime"] = is_left_prime(sys.realized);
    return {report};
}

inline Outcome mds(const Options& o) {
    const SystemDocument doc = load_system(o);
    ConstMatrix M;
    if (doc.constant) {
        M = *doc.constant;
    } else if (doc.monomial) {
        M = doc.monomial->coefficients;
    } else {
        throw UsageError("mds-check needs a constant or monomial document");
    }
    return {json{{"field", doc.field->to_string()}, {"mds", mds_check(M)}, {"superregular", superregular_check(M)}}};
}

inline Outcome schubert(const Options& o) {
    // validate before building the object; a throw inside a json initializer list leaks
    const std::size_t m = require(o.m, "m"), p = require(o.p, "p");
    return {json{{"m", m}, {"p", p}, {"d", to_json(schubert_number(m, p))}}};
}

inline Outcome census_cmd(const Options& o) {
    const SystemDocument doc = load_system(o);
    CensusMode mode;
    if (o.mode == "affine") {
        mode = CensusMode::affine;
    } else if (o.mode == "projective") {
        mode = CensusMode::projective;
    } else {
        throw UsageError("--mode must be affine or projective");
    }
    const CensusReport r = census(doc.factored_system(), mode);
    std::ostringstream csv;
    csv << "fiber_size,count\n";
    for (const auto& [size, count] : r.histogram) csv << size << "," << count << "\n";
    return {to_json(r), 0, csv.str()};
}

inline Outcome fiber(const Options& o) {
    const SystemDocument doc = load_system(o);
    const FactoredSystem fs = doc.factored_system();
    if (o.target.empty()) throw UsageError("--target is required");
    std::vector<Scalar> coeffs;
    for (auto part : grasspole::detail::split(o.target, ',')) coeffs.push_back(Scalar::parse(fs.field(), part));
    return {to_json(fiber_solve_2x2(fs, Poly(fs.field(), std::move(coeffs))))};
}

inline Outcome verify_f2(const Options&) {
    const F2Report r = verify_f2_theorem();
    return {to_json(r), r.passed() ? 0 : 1};
}

inline Outcome identities(const Options& o) {
    const FieldHandle F = make_field(o.field.empty() ? std::string("7") : o.field);
    const SweepReport r = identity_sweeps(F, o.seed, o.count);
    json checks = json::object();
    for (const auto& [name, t] : r.checks) checks[name] = json{{"passed", t.passed}, {"total", t.total}};
    return {json{{"field", F->to_string()}, {"seed", o.seed}, {"count", o.count}, {"checks", checks}, {"pass", r.ok()}},
            r.ok() ? 0 : 1};
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact pole placement over finite fields and the rationals"};
    app.require_subcommand(1);
    Options o;

    using Handler = std::function<Outcome(const Options&)>;
    std::map<CLI::App*, Handler> handlers;
    auto add = [&](const std::string& name, const std::string& help, Handler h) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--field", o.field, "field spec: QQ, p, or p^k:modulus=c0,...,ck");
        sub->add_option("--out", o.out, "write the report to this path");
        sub->add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
        handlers[sub] = std::move(h);
        return sub;
    };
    auto system_opt = [&](CLI::App* sub) { sub->add_option("--system", o.system, "system JSON file"); };
    auto shape_opts = [&](CLI::App* sub) {
        sub->add_option("--m", o.m, "inputs");
        sub->add_option("--p", o.p, "outputs");
    };

    add("field-info", "describe a field", detail::field_info);
    system_opt(add("minors", "maximal minors of [N D]", detail::minors));
    {
        auto* sub = add("degeneracy", "degeneracy test", detail::degeneracy);
        system_opt(sub);
        sub->add_option("--method", o.method, "enumerate or exact");
        sub->add_option("--expect", o.expect, "degenerate or nondegenerate");
    }
    system_opt(add("factorize", "left coprime factorization of a state-space system", detail::factorize));
    {
        auto* sub = add("onc", "osculating normal curve", detail::onc);
        shape_opts(sub);
        sub->add_flag("--hasse", o.hasse, "use Hasse derivatives");
    }
    system_opt(add("monomial", "realize a monomial system", detail::monomial));
    {
        auto* sub = add("main-theorem-system", "nondegenerate monomial system from a Cauchy matrix", detail::main_theorem);
        shape_opts(sub);
        sub->add_option("--n", o.n, "degree (default m p)");
    }
    system_opt(add("mds-check", "MDS and superregularity of a constant matrix", detail::mds));
    shape_opts(add("schubert", "Schubert number d(m,p)", detail::schubert));
    {
        auto* sub = add("census", "image census of the pole placement map", detail::census_cmd);
        system_opt(sub);
        sub->add_option("--mode", o.mode, "affine or projective");
    }
    {
        auto* sub = add("fiber", "fiber of a target polynomial (m = p = 2, n = 4)", detail::fiber);
        system_opt(sub);
        sub->add_option("--target", o.target, "ascending coefficients, comma separated");
    }
    add("verify-f2", "no system over F_2 has an onto pole placement map", detail::verify_f2);
    {
        auto* sub = add("identities", "randomized determinant identity sweeps", detail::identities);
        sub->add_option("--seed", o.seed, "random seed");
        sub->add_option("--count", o.count, "number of random systems");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    CLI::App* chosen = app.get_subcommands().front();
    Outcome outcome;
    try {
        outcome = handlers.at(chosen)(o);
    } catch (const UsageError& e) {
        err << "usage: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        outcome = {json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}}, 1};
    }

    std::ostringstream text;
    if (o.format == "json") {
        text << outcome.report.dump(2) << "\n";
    } else if (o.format == "csv") {
        if (!outcome.csv || outcome.report.contains("error")) {
            err << "usage: csv output is available for minors and census only\n";
            return 2;
        }
        text << *outcome.csv;
    } else {
        detail::render_text(outcome.report, "", text);
    }

    if (o.out.empty()) {
        out << text.str();
    } else {
        std::ofstream file(o.out);
        if (!file) {
            err << "usage: cannot write " << o.out << "\n";
            return 2;
        }
        file << text.str();
    }
    return outcome.exit_code;
}

}  // namespace grasspole::cli

#endif  // GRASSPOLE_TOOLS_CLI_HPP
