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

#ifndef GRASSPOLE_POLY_HPP
#define GRASSPOLE_POLY_HPP

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "field.hpp"

namespace grasspole {

/// Degree of the zero polynomial.
inline constexpr int neg_inf_degree = std::numeric_limits<int>::min();

/// Dense univariate polynomial in s, ascending coefficients, no trailing zeros.
class Poly {
   public:
    Poly() = default;
    explicit Poly(FieldHandle f) : field_(f) {}

    Poly(FieldHandle f, std::vector<Scalar> coeffs) : field_(f), coeffs_(std::move(coeffs)) {
        for (const auto& c : coeffs_) {
            if (c.field() != field_) fail(ErrorCode::FieldMismatch, "coefficient outside the polynomial's field");
        }
        trim();
    }

    static Poly from_ints(FieldHandle f, std::initializer_list<long long> coeffs) {
        std::vector<Scalar> c;
        for (auto v : coeffs) c.push_back(Scalar::from_int(f, v));
        return Poly(f, std::move(c));
    }

    static Poly constant(const Scalar& c) { return Poly(c.field(), {c}); }

    static Poly monomial(const Scalar& c, std::size_t degree) {
        std::vector<Scalar> coeffs(degree + 1, Scalar::zero(c.field()));
        coeffs[degree] = c;
        return Poly(c.field(), std::move(coeffs));
    }

    /// The indeterminate s.
    static Poly s(FieldHandle f) { return monomial(Scalar::one(f), 1); }

    FieldHandle field() const noexcept { return field_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const noexcept { return coeffs_.empty() ? neg_inf_degree : static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }

    Scalar coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar::zero(field_); }

    Scalar leading_coefficient() const {
        if (is_zero()) fail(ErrorCode::ZeroPolynomial, "zero polynomial has no leading coefficient");
        return coeffs_.back();
    }

    bool is_constant() const noexcept { return coeffs_.size() <= 1; }

    bool is_monomial() const {
        if (is_zero()) return false;
        for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i) {
            if (!coeffs_[i].is_zero()) return false;
        }
        return true;
    }

    Scalar operator()(const Scalar& x) const {
        Scalar value = Scalar::zero(field_);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) value = value * x + *it;
        return value;
    }

    Poly operator-() const {
        Poly r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    Poly& operator+=(const Poly& rhs) {
        require_same(rhs);
        if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar::zero(field_));
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
        trim();
        return *this;
    }

    Poly& operator-=(const Poly& rhs) {
        require_same(rhs);
        if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar::zero(field_));
        for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
        trim();
        return *this;
    }

    Poly& operator*=(const Poly& rhs) {
        *this = *this * rhs;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.require_same(b);
        if (a.is_zero() || b.is_zero()) return Poly(a.field_);
        std::vector<Scalar> r(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar::zero(a.field_));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Poly(a.field_, std::move(r));
    }

    Poly scaled(const Scalar& c) const {
        std::vector<Scalar> r;
        r.reserve(coeffs_.size());
        for (const auto& x : coeffs_) r.push_back(x * c);
        return Poly(field_, std::move(r));
    }

    Poly monic() const {
        if (is_zero()) fail(ErrorCode::ZeroPolynomial, "cannot normalize the zero polynomial");
        return scaled(coeffs_.back().inverse());
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.coeffs_ == b.coeffs_; }

    std::string to_string(char var = 's') const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            const Scalar& c = coeffs_[i];
            if (c.is_zero()) continue;
            if (!out.empty()) out += " + ";
            const bool unit = c.is_one() && i > 0;
            if (!unit) out += c.to_string();
            if (i > 0) {
                if (!unit) out += "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

   private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    void require_same(const Poly& rhs) const {
        if (!field_ || field_ != rhs.field_) fail(ErrorCode::FieldMismatch, "polynomials over different fields");
    }

    FieldHandle field_;
    std::vector<Scalar> coeffs_;
};

/// Quotient and remainder; g must be nonzero.
inline std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
    if (g.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
    if (f.field() != g.field()) fail(ErrorCode::FieldMismatch, "polynomials over different fields");
    const FieldHandle F = f.field();
    std::vector<Scalar> rem = f.coefficients();
    const int dg = g.degree();
    if (f.degree() < dg) return {Poly(F), f};
    std::vector<Scalar> quot(static_cast<std::size_t>(f.degree() - dg + 1), Scalar::zero(F));
    const Scalar lead_inv = g.leading_coefficient().inverse();
    const auto& gc = g.coefficients();
    for (int d = f.degree(); d >= dg; --d) {
        const Scalar c = rem[static_cast<std::size_t>(d)] * lead_inv;
        quot[static_cast<std::size_t>(d - dg)] = c;
        if (c.is_zero()) continue;
        for (int i = 0; i <= dg; ++i) rem[static_cast<std::size_t>(d - dg + i)] -= c * gc[static_cast<std::size_t>(i)];
    }
    return {Poly(F, std::move(quot)), Poly(F, std::move(rem))};
}

inline Poly exact_divide(const Poly& f, const Poly& g) {
    auto [q, r] = divmod(f, g);
    if (!r.is_zero()) fail(ErrorCode::InvalidArgument, "inexact polynomial division");
    return q;
}

inline Scalar exact_divide(const Scalar& a, const Scalar& b) { return a / b; }

/// Monic gcd; gcd(0, 0) = 0.
inline Poly gcd(Poly f, Poly g) {
    while (!g.is_zero()) {
        Poly r = divmod(f, g).second;
        f = std::move(g);
        g = std::move(r);
    }
    return f.is_zero() ? f : f.monic();
}

inline BigInt binomial(unsigned long long n, unsigned long long k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (unsigned long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// j (j-1) ... (j-i+1), zero when i > j.
inline BigInt falling_factorial(unsigned long long j, unsigned long long i) {
    if (i > j) return 0;
    BigInt r = 1;
    for (unsigned long long t = 0; t < i; ++t) r *= (j - t);
    return r;
}

inline BigInt factorial(unsigned long long n) { return falling_factorial(n, n); }

/// Pascal triangle over Z, grown on demand. Not shared between threads.
class BinomialTable {
   public:
    const BigInt& get(std::size_t j, std::size_t i) {
        static const BigInt zero = 0;
        if (i > j) return zero;
        while (rows_.size() <= j) {
            const std::size_t n = rows_.size();
            std::vector<BigInt> row(n + 1, 1);
            for (std::size_t t = 1; t < n; ++t) row[t] = rows_[n - 1][t - 1] + rows_[n - 1][t];
            rows_.push_back(std::move(row));
        }
        return rows_[j][i];
    }

    Scalar in_field(std::size_t j, std::size_t i, FieldHandle f) { return Scalar::from_int(f, get(j, i)); }

   private:
    std::vector<std::vector<BigInt>> rows_;
};

/// C(j, i) computed over Z and then reduced into the field.
inline Scalar binomial_in_field(unsigned long long j, unsigned long long i, FieldHandle f) {
    return Scalar::from_int(f, binomial(j, i));
}

/// i-th Hasse derivative: coefficient j-i of the result is C(j, i) u_j.
inline Poly hasse_derivative(const Poly& u, std::size_t i) {
    const FieldHandle F = u.field();
    if (u.degree() < static_cast<int>(i)) return Poly(F);
    std::vector<Scalar> r;
    for (std::size_t j = i; j < u.coefficients().size(); ++j) r.push_back(binomial_in_field(j, i, F) * u.coefficients()[j]);
    return Poly(F, std::move(r));
}

/// i-th ordinary derivative: coefficient j-i is j (j-1) ... (j-i+1) u_j.
inline Poly classical_derivative(const Poly& u, std::size_t i) {
    const FieldHandle F = u.field();
    if (u.degree() < static_cast<int>(i)) return Poly(F);
    std::vector<Scalar> r;
    for (std::size_t j = i; j < u.coefficients().size(); ++j) {
        r.push_back(Scalar::from_int(F, falling_factorial(j, i)) * u.coefficients()[j]);
    }
    return Poly(F, std::move(r));
}

struct Root {
    Scalar value;
    unsigned multiplicity = 0;
};

/// Roots in a finite field by exhaustive evaluation; multiplicities by repeated division.
inline std::vector<Root> roots_in_field(const Poly& f) {
    const FieldHandle F = f.field();
    if (!F->is_finite()) fail(ErrorCode::InfiniteField, "root extraction needs a finite field");
    if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "every element is a root of the zero polynomial");
    std::vector<Root> roots;
    Poly rest = f;
    for (const Scalar& x : enumerate_field(F)) {
        if (rest.degree() <= 0) break;
        if (!rest(x).is_zero()) continue;
        const Poly linear(F, {-x, Scalar::one(F)});
        unsigned mult = 0;
        while (true) {
            auto [q, r] = divmod(rest, linear);
            if (!r.is_zero()) break;
            rest = std::move(q);
            ++mult;
        }
        roots.push_back({x, mult});
    }
    return roots;
}

inline Poly embed(const Poly& f, const QuadraticExtension& ext) {
    std::vector<Scalar> c;
    for (const auto& x : f.coefficients()) c.push_back(ext.embed(x));
    return Poly(ext.field, std::move(c));
}

inline Poly random_poly(FieldHandle f, int max_degree, std::mt19937_64& rng) {
    std::vector<Scalar> c;
    for (int i = 0; i <= max_degree; ++i) c.push_back(random_scalar(f, rng));
    return Poly(f, std::move(c));
}

}  // namespace grasspole

#endif  // GRASSPOLE_POLY_HPP
