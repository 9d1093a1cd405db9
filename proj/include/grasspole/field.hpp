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
 * @file field.hpp
 * @brief Exact arithmetic over the rationals and over finite fields F_{p^k}, k <= 4.
 *
 * Fields are described by a FieldSpec and interned by make_field(); the returned FieldHandle is a
 * cheap, comparable pointer that stays valid for the lifetime of the program. Scalars carry their
 * field handle and a canonical value:
 *
 * - rationals: a reduced boost::multiprecision fraction with positive denominator;
 * - F_{p^k}: the integer code sum c_i p^i of the coefficient vector (c_0, ..., c_{k-1}) of the
 *   residue class modulo the field's monic modulus. For k = 1 the code is just the residue in [0, p).
 *
 * Because every value is canonical, equality is structural.
 *
 * Field spec strings:  "QQ" | "<p>" | "<p>^<k>:modulus=c0,c1,...,ck"  (ascending, ck = 1).
 * Element strings:     rationals "a" or "a/b"; prime fields any integer (reduced mod p);
 *                      extension fields "(c0,c1,...)" or a plain integer (embedded from F_p).
 */

#ifndef GRASSPOLE_FIELD_HPP
#define GRASSPOLE_FIELD_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace grasspole {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % small == 0) return n == small;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Remainder of f modulo the monic g, coefficients in F_p, ascending.
inline std::vector<std::uint64_t> poly_rem_mod_p(std::vector<std::uint64_t> f, const std::vector<std::uint64_t>& g,
                                                 std::uint64_t p) {
    const std::size_t dg = g.size() - 1;
    while (f.size() > dg) {
        const std::uint64_t c = f.back();
        const std::size_t shift = f.size() - 1 - dg;
        if (c != 0) {
            for (std::size_t i = 0; i <= dg; ++i) {
                f[shift + i] = (f[shift + i] + p - mulmod(c, g[i], p)) % p;
            }
        }
        f.pop_back();
    }
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

// Exhaustive factor search: f (monic, degree k <= 4) is irreducible iff no monic g with
// 1 <= deg g <= k/2 divides it.
inline bool is_irreducible_mod_p(const std::vector<std::uint64_t>& f, std::uint64_t p) {
    const std::size_t k = f.size() - 1;
    for (std::size_t d = 1; d <= k / 2; ++d) {
        std::vector<std::uint64_t> g(d + 1, 0);
        g[d] = 1;
        while (true) {
            if (poly_rem_mod_p(f, g, p).empty()) return false;
            std::size_t i = 0;
            while (i < d && ++g[i] == p) g[i++] = 0;
            if (i == d) break;
        }
    }
    return true;
}

}  // namespace detail

enum class FieldKind { rationals, finite };

struct FieldSpec {
    FieldKind kind = FieldKind::rationals;
    std::uint64_t characteristic = 0;
    unsigned extension_degree = 1;
    std::vector<std::uint64_t> modulus;  // ascending and monic, length k + 1; empty when k == 1

    static FieldSpec rationals() { return {}; }

    static FieldSpec prime(std::uint64_t p) { return {FieldKind::finite, p, 1, {}}; }

    static FieldSpec extension(std::uint64_t p, std::vector<std::uint64_t> modulus) {
        if (modulus.size() < 2) fail(ErrorCode::InvalidArgument, "modulus must have degree >= 1");
        const auto k = static_cast<unsigned>(modulus.size() - 1);
        if (k == 1) return prime(p);
        return {FieldKind::finite, p, k, std::move(modulus)};
    }

    static FieldSpec parse(std::string_view text);

    std::string to_string() const {
        if (kind == FieldKind::rationals) return "QQ";
        if (extension_degree == 1) return std::to_string(characteristic);
        std::string s = std::to_string(characteristic) + "^" + std::to_string(extension_degree) + ":modulus=";
        for (std::size_t i = 0; i < modulus.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(modulus[i]);
        }
        return s;
    }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

namespace detail {

inline std::uint64_t parse_u64(std::string_view s, std::string_view what) {
    if (s.empty() || s.size() > 19 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        fail(ErrorCode::InvalidArgument, "malformed " + std::string(what) + ": '" + std::string(s) + "'");
    }
    return std::stoull(std::string(s));
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

}  // namespace detail

inline FieldSpec FieldSpec::parse(std::string_view text) {
    text = detail::trim(text);
    if (text.substr(0, 3) == "gf:") text.remove_prefix(3);
    if (text == "QQ" || text == "Q") return rationals();
    const auto caret = text.find('^');
    if (caret == std::string_view::npos) return prime(detail::parse_u64(text, "field characteristic"));

    const std::uint64_t p = detail::parse_u64(text.substr(0, caret), "field characteristic");
    std::string_view rest = text.substr(caret + 1);
    const auto colon = rest.find(':');
    const std::uint64_t k = detail::parse_u64(rest.substr(0, colon), "extension degree");
    if (k == 1 && colon == std::string_view::npos) return prime(p);
    if (colon == std::string_view::npos) fail(ErrorCode::InvalidArgument, "extension field spec needs ':modulus=...'");
    std::string_view mod = rest.substr(colon + 1);
    constexpr std::string_view key = "modulus=";
    if (mod.substr(0, key.size()) != key) fail(ErrorCode::InvalidArgument, "expected 'modulus=' in field spec");
    mod.remove_prefix(key.size());
    std::vector<std::uint64_t> coeffs;
    for (auto part : detail::split(mod, ',')) coeffs.push_back(detail::parse_u64(part, "modulus coefficient"));
    if (coeffs.size() != k + 1) fail(ErrorCode::InvalidArgument, "modulus length must be k + 1");
    return extension(p, std::move(coeffs));
}

class Field;

/// Interned, comparable reference to a Field. Handles never dangle.
class FieldHandle {
   public:
    FieldHandle() = default;
    explicit FieldHandle(const Field* field) : field_(field) {}

    const Field& operator*() const { return *field_; }
    const Field* operator->() const { return field_; }
    explicit operator bool() const { return field_ != nullptr; }

    friend bool operator==(FieldHandle, FieldHandle) = default;

   private:
    const Field* field_ = nullptr;
};

class Field {
   public:
    static constexpr unsigned max_extension_degree = 4;

    explicit Field(FieldSpec spec) : spec_(std::move(spec)) {
        if (spec_.kind == FieldKind::rationals) return;
        p_ = spec_.characteristic;
        k_ = spec_.extension_degree;
        if (!detail::is_prime(p_)) fail(ErrorCode::NonPrimeCharacteristic, std::to_string(p_) + " is not prime");
        if (p_ >= (1ull << 62)) fail(ErrorCode::InvalidArgument, "characteristic too large");
        if (k_ < 1 || k_ > max_extension_degree) fail(ErrorCode::InvalidArgument, "extension degree must be in 1..4");
        q_ = 1;
        for (unsigned i = 0; i < k_; ++i) {
            if (q_ > (1ull << 62) / p_) fail(ErrorCode::InvalidArgument, "field order exceeds 2^62");
            powers_.push_back(q_);
            q_ *= p_;
        }
        if (k_ > 1) {
            const auto& mod = spec_.modulus;
            if (mod.size() != k_ + 1 || mod.back() != 1) fail(ErrorCode::InvalidArgument, "modulus must be monic");
            if (std::any_of(mod.begin(), mod.end(), [&](std::uint64_t c) { return c >= p_; })) {
                fail(ErrorCode::InvalidArgument, "modulus coefficients must lie in [0, p)");
            }
            if (!detail::is_irreducible_mod_p(mod, p_)) {
                fail(ErrorCode::ReducibleModulus, spec_.to_string() + " has a reducible modulus");
            }
        }
    }

    const FieldSpec& spec() const noexcept { return spec_; }
    FieldKind kind() const noexcept { return spec_.kind; }
    bool is_finite() const noexcept { return spec_.kind == FieldKind::finite; }
    std::uint64_t characteristic() const noexcept { return p_; }
    unsigned extension_degree() const noexcept { return k_; }
    /// p^k for finite fields, 0 for the rationals.
    std::uint64_t order() const noexcept { return q_; }
    std::string to_string() const { return spec_.to_string(); }

    // Arithmetic on canonical codes of a finite field.

    std::array<std::uint64_t, max_extension_degree> digits(std::uint64_t code) const {
        std::array<std::uint64_t, max_extension_degree> d{};
        for (unsigned i = 0; i < k_; ++i) {
            d[i] = code % p_;
            code /= p_;
        }
        return d;
    }

    std::uint64_t from_digits(std::span<const std::uint64_t> d) const {
        std::uint64_t code = 0;
        for (unsigned i = 0; i < k_ && i < d.size(); ++i) code += (d[i] % p_) * powers_[i];
        return code;
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        if (k_ == 1) {
            const std::uint64_t s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        auto x = digits(a), y = digits(b);
        for (unsigned i = 0; i < k_; ++i) x[i] = (x[i] + y[i]) % p_;
        return from_digits(x);
    }

    std::uint64_t neg(std::uint64_t a) const {
        if (k_ == 1) return a == 0 ? 0 : p_ - a;
        auto x = digits(a);
        for (unsigned i = 0; i < k_; ++i) x[i] = x[i] == 0 ? 0 : p_ - x[i];
        return from_digits(x);
    }

    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        if (k_ == 1) return detail::mulmod(a, b, p_);
        const auto x = digits(a), y = digits(b);
        std::array<std::uint64_t, 2 * max_extension_degree - 1> r{};
        for (unsigned i = 0; i < k_; ++i) {
            if (x[i] == 0) continue;
            for (unsigned j = 0; j < k_; ++j) r[i + j] = (r[i + j] + detail::mulmod(x[i], y[j], p_)) % p_;
        }
        const auto& mod = spec_.modulus;
        for (unsigned d = 2 * k_ - 2; d >= k_; --d) {
            const std::uint64_t c = r[d];
            if (c == 0) continue;
            for (unsigned i = 0; i < k_; ++i) {
                r[d - k_ + i] = (r[d - k_ + i] + p_ - detail::mulmod(c, mod[i], p_)) % p_;
            }
            r[d] = 0;
        }
        return from_digits(std::span<const std::uint64_t>(r.data(), k_));
    }

    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1;
        while (e > 0) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    std::uint64_t inv(std::uint64_t a) const {
        if (a == 0) fail(ErrorCode::DivisionByZero, "inverse of zero in " + to_string());
        if (k_ == 1) return detail::powmod(a, p_ - 2, p_);
        return pow(a, q_ - 2);
    }

    std::uint64_t reduce(const BigInt& n) const {
        BigInt r = n % p_;
        if (r < 0) r += p_;
        return static_cast<std::uint64_t>(r);
    }

   private:
    FieldSpec spec_;
    std::uint64_t p_ = 0;
    unsigned k_ = 1;
    std::uint64_t q_ = 0;
    std::vector<std::uint64_t> powers_;
};

/// Validates the spec and returns the interned field. Throws NonPrimeCharacteristic / ReducibleModulus.
inline FieldHandle make_field(const FieldSpec& spec) {
    static std::mutex mutex;
    static std::map<std::string, std::unique_ptr<Field>> registry;
    const std::string key = spec.to_string();
    {
        std::lock_guard lock(mutex);
        if (auto it = registry.find(key); it != registry.end()) return FieldHandle(it->second.get());
    }
    auto field = std::make_unique<Field>(spec);
    std::lock_guard lock(mutex);
    auto [it, inserted] = registry.emplace(key, std::move(field));
    return FieldHandle(it->second.get());
}

inline FieldHandle make_field(std::string_view spec_text) { return make_field(FieldSpec::parse(spec_text)); }
inline FieldHandle rationals() { return make_field(FieldSpec::rationals()); }
inline FieldHandle gf(std::uint64_t p) { return make_field(FieldSpec::prime(p)); }

class Scalar {
   public:
    Scalar() = default;

    static Scalar zero(FieldHandle f) { return from_code_unchecked(f, 0); }
    static Scalar one(FieldHandle f) { return from_code_unchecked(f, 1); }

    /// Canonical image of an integer; a ring homomorphism from Z.
    static Scalar from_int(FieldHandle f, const BigInt& n) {
        require_field(f);
        if (f->is_finite()) return Scalar(f, f->reduce(n));
        return Scalar(f, Rational(n));
    }

    static Scalar from_rational(FieldHandle f, const Rational& r) {
        require_field(f);
        if (!f->is_finite()) return Scalar(f, r);
        return from_int(f, numerator(r)) / from_int(f, denominator(r));
    }

    static Scalar from_code(FieldHandle f, std::uint64_t code) {
        require_field(f);
        if (!f->is_finite()) fail(ErrorCode::InfiniteField, "codes exist only for finite fields");
        if (code >= f->order()) fail(ErrorCode::InvalidArgument, "code out of range");
        return Scalar(f, code);
    }

    static Scalar from_coefficients(FieldHandle f, std::span<const std::uint64_t> coeffs) {
        require_field(f);
        if (!f->is_finite()) fail(ErrorCode::InfiniteField, "coefficient vectors exist only for finite fields");
        if (coeffs.size() > f->extension_degree()) fail(ErrorCode::InvalidArgument, "too many coefficients");
        return Scalar(f, f->from_digits(coeffs));
    }

    static Scalar parse(FieldHandle f, std::string_view text);

    FieldHandle field() const noexcept { return field_; }
    bool bound() const noexcept { return static_cast<bool>(field_); }

    bool is_zero() const {
        if (auto c = std::get_if<std::uint64_t>(&value_)) return *c == 0;
        return std::get<Rational>(value_) == 0;
    }

    bool is_one() const {
        if (auto c = std::get_if<std::uint64_t>(&value_)) return *c == 1;
        return std::get<Rational>(value_) == 1;
    }

    std::uint64_t code() const {
        if (auto c = std::get_if<std::uint64_t>(&value_)) return *c;
        fail(ErrorCode::InfiniteField, "rational scalars have no code");
    }

    const Rational& rational() const {
        if (auto r = std::get_if<Rational>(&value_)) return *r;
        fail(ErrorCode::InvalidArgument, "finite-field scalar is not a rational");
    }

    /// Coefficient vector (length k) of a finite-field element.
    std::vector<std::uint64_t> coefficients() const {
        const auto d = field_->digits(code());
        return {d.begin(), d.begin() + field_->extension_degree()};
    }

    Scalar operator-() const {
        require_field(field_);
        if (auto c = std::get_if<std::uint64_t>(&value_)) return Scalar(field_, field_->neg(*c));
        return Scalar(field_, Rational(-std::get<Rational>(value_)));
    }

    Scalar inverse() const {
        require_field(field_);
        if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
        if (auto c = std::get_if<std::uint64_t>(&value_)) return Scalar(field_, field_->inv(*c));
        return Scalar(field_, Rational(1 / std::get<Rational>(value_)));
    }

    Scalar pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        Scalar result = one(field_), base = *this;
        auto n = static_cast<unsigned long long>(e);
        while (n > 0) {
            if (n & 1) result *= base;
            base *= base;
            n >>= 1;
        }
        return result;
    }

    Scalar& operator+=(const Scalar& rhs) {
        require_same(*this, rhs);
        if (auto c = std::get_if<std::uint64_t>(&value_)) {
            *c = field_->add(*c, std::get<std::uint64_t>(rhs.value_));
        } else {
            std::get<Rational>(value_) += std::get<Rational>(rhs.value_);
        }
        return *this;
    }

    Scalar& operator-=(const Scalar& rhs) {
        require_same(*this, rhs);
        if (auto c = std::get_if<std::uint64_t>(&value_)) {
            *c = field_->sub(*c, std::get<std::uint64_t>(rhs.value_));
        } else {
            std::get<Rational>(value_) -= std::get<Rational>(rhs.value_);
        }
        return *this;
    }

    Scalar& operator*=(const Scalar& rhs) {
        require_same(*this, rhs);
        if (auto c = std::get_if<std::uint64_t>(&value_)) {
            *c = field_->mul(*c, std::get<std::uint64_t>(rhs.value_));
        } else {
            std::get<Rational>(value_) *= std::get<Rational>(rhs.value_);
        }
        return *this;
    }

    Scalar& operator/=(const Scalar& rhs) {
        require_same(*this, rhs);
        if (rhs.is_zero()) fail(ErrorCode::DivisionByZero, "division by zero");
        if (auto c = std::get_if<std::uint64_t>(&value_)) {
            *c = field_->mul(*c, field_->inv(std::get<std::uint64_t>(rhs.value_)));
        } else {
            std::get<Rational>(value_) /= std::get<Rational>(rhs.value_);
        }
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.field_ == b.field_ && a.value_ == b.value_; }

    /// Total order within one field (code order, or numeric order on Q); used for canonical keys.
    friend bool operator<(const Scalar& a, const Scalar& b) {
        require_same(a, b);
        return a.value_ < b.value_;
    }

    std::string to_string() const {
        if (!field_) return "<unbound>";
        if (auto r = std::get_if<Rational>(&value_)) {
            if (denominator(*r) == 1) return numerator(*r).str();
            return numerator(*r).str() + "/" + denominator(*r).str();
        }
        if (field_->extension_degree() == 1) return std::to_string(code());
        std::string s = "(";
        const auto c = coefficients();
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(c[i]);
        }
        return s + ")";
    }

   private:
    Scalar(FieldHandle f, std::uint64_t code) : field_(f), value_(code) {}
    Scalar(FieldHandle f, Rational r) : field_(f), value_(std::move(r)) {}

    static Scalar from_code_unchecked(FieldHandle f, std::uint64_t code) {
        require_field(f);
        if (f->is_finite()) return Scalar(f, code);
        return Scalar(f, Rational(code));
    }

    static void require_field(FieldHandle f) {
        if (!f) fail(ErrorCode::FieldMismatch, "scalar is not bound to a field");
    }

    static void require_same(const Scalar& a, const Scalar& b) {
        require_field(a.field_);
        if (a.field_ != b.field_) {
            fail(ErrorCode::FieldMismatch,
                 a.field_->to_string() + " vs " + (b.field_ ? b.field_->to_string() : std::string("<unbound>")));
        }
    }

    FieldHandle field_;
    std::variant<std::uint64_t, Rational> value_;
};

inline Scalar Scalar::parse(FieldHandle f, std::string_view text) {
    require_field(f);
    text = detail::trim(text);
    if (text.empty()) fail(ErrorCode::InvalidArgument, "empty field element");
    auto parse_int = [](std::string_view s) -> BigInt {
        s = detail::trim(s);
        std::string_view digits = s;
        if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            fail(ErrorCode::InvalidArgument, "malformed integer '" + std::string(s) + "'");
        }
        BigInt v{std::string(digits)};
        return s.front() == '-' ? BigInt(-v) : v;
    };
    if (text.front() == '(') {
        if (text.back() != ')') fail(ErrorCode::InvalidArgument, "unterminated coefficient vector");
        if (!f->is_finite()) fail(ErrorCode::InvalidArgument, "coefficient vectors need a finite field");
        std::vector<std::uint64_t> coeffs;
        for (auto part : detail::split(text.substr(1, text.size() - 2), ',')) coeffs.push_back(f->reduce(parse_int(part)));
        return from_coefficients(f, coeffs);
    }
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const BigInt den = parse_int(text.substr(slash + 1));
        if (den == 0) fail(ErrorCode::DivisionByZero, "zero denominator");
        return from_rational(f, Rational(parse_int(text.substr(0, slash)), den));
    }
    return from_int(f, parse_int(text));
}

/// embed_int: the canonical image of n in the field.
inline Scalar embed_int(const BigInt& n, FieldHandle f) { return Scalar::from_int(f, n); }

/// All p^k elements in ascending code order (lex on coefficient vectors read from the top
/// coefficient down); the first element is 0.
inline std::vector<Scalar> enumerate_field(FieldHandle f) {
    if (!f->is_finite()) fail(ErrorCode::InfiniteField, "cannot enumerate " + f->to_string());
    if (f->order() > (1ull << 26)) fail(ErrorCode::InvalidArgument, "field too large to enumerate");
    std::vector<Scalar> elements;
    elements.reserve(f->order());
    for (std::uint64_t c = 0; c < f->order(); ++c) elements.push_back(Scalar::from_code(f, c));
    return elements;
}

inline Scalar random_scalar(FieldHandle f, std::mt19937_64& rng) {
    if (f->is_finite()) {
        std::uniform_int_distribution<std::uint64_t> dist(0, f->order() - 1);
        return Scalar::from_code(f, dist(rng));
    }
    std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
    return Scalar::from_rational(f, Rational(num(rng), den(rng)));
}

/// F_{q^2} together with the embedding of F_q.
struct QuadraticExtension {
    FieldHandle base;
    FieldHandle field;
    Scalar generator_image;  // image of the base field's generator x (or 1 for prime bases)

    Scalar embed(const Scalar& a) const {
        if (a.field() != base) fail(ErrorCode::FieldMismatch, "embedding expects an element of " + base->to_string());
        if (base->extension_degree() == 1) return Scalar::from_code(field, a.code());
        Scalar result = Scalar::zero(field), power = Scalar::one(field);
        for (auto c : a.coefficients()) {
            result += Scalar::from_int(field, c) * power;
            power *= generator_image;
        }
        return result;
    }
};

/**
 * Builds F_{q^2} over a finite base F_q. For a prime base the modulus is x^2 - a with a the least
 * quadratic non-residue (odd p) or x^2 + x + 1 (p = 2). For a base F_{p^2} the first irreducible
 * quartic over F_p (ascending code order) is used and the base generator is located as a root of
 * the base modulus.
 */
inline QuadraticExtension quadratic_extension(FieldHandle base) {
    if (!base->is_finite()) fail(ErrorCode::InfiniteField, "no quadratic extension of " + base->to_string());
    const std::uint64_t p = base->characteristic();
    const unsigned k = base->extension_degree();
    if (2 * k > Field::max_extension_degree) fail(ErrorCode::InvalidArgument, "extension degree cap exceeded");

    if (k == 1) {
        std::vector<std::uint64_t> modulus;
        if (p == 2) {
            modulus = {1, 1, 1};
        } else {
            std::uint64_t a = 2;
            while (detail::powmod(a, (p - 1) / 2, p) == 1) ++a;
            modulus = {p - a, 0, 1};
        }
        const FieldHandle ext = make_field(FieldSpec::extension(p, modulus));
        return {base, ext, Scalar::one(ext)};
    }

    std::vector<std::uint64_t> quartic(5, 0);
    quartic[4] = 1;
    while (!detail::is_irreducible_mod_p(quartic, p)) {
        std::size_t i = 0;
        while (i < 4 && ++quartic[i] == p) quartic[i++] = 0;
        if (i == 4) fail(ErrorCode::InvalidArgument, "no irreducible quartic found");
    }
    const FieldHandle ext = make_field(FieldSpec::extension(p, quartic));
    if (ext->order() > (1ull << 24)) fail(ErrorCode::InvalidArgument, "extension too large for root search");
    const auto& bm = base->spec().modulus;
    for (std::uint64_t c = 0; c < ext->order(); ++c) {
        const Scalar x = Scalar::from_code(ext, c);
        Scalar value = Scalar::zero(ext);
        for (auto it = bm.rbegin(); it != bm.rend(); ++it) value = value * x + Scalar::from_int(ext, *it);
        if (value.is_zero()) return {base, ext, x};
    }
    fail(ErrorCode::InvalidArgument, "base modulus has no root in the extension");
}

}  // namespace grasspole

#endif  // GRASSPOLE_FIELD_HPP
