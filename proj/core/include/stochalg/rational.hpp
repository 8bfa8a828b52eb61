/* Copyright 2026 The stochalg Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// Exact rational numbers of unbounded size.

#ifndef STOCHALG_RATIONAL_HPP
#define STOCHALG_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace stochalg {

/* A normalized fraction p/q with q > 0 and gcd(p, q) = 1.
 *
 * Values whose numerator and denominator both fit in 63 bits are held inline and
 * combined with 128-bit intermediates; anything larger is promoted to a shared,
 * immutable GMP rational. The two representations never hold the same value:
 * results are demoted back to the inline form whenever they fit. */
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value);  // NOLINT: implicit integer conversion is intended
    Rational(std::int64_t numerator, std::int64_t denominator);
    explicit Rational(const mpq_class& value);

    /// Parses "p", "-p", "p/q" or a terminating decimal such as "-0.25".
    static Rational parse(std::string_view text);

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const;
    int sign() const;

    mpq_class to_mpq() const;
    double to_double() const;
    std::string to_string() const;

    /// Exact square root when both numerator and denominator are perfect squares.
    std::optional<Rational> exact_sqrt() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& other);
    Rational& operator-=(const Rational& other);
    Rational& operator*=(const Rational& other);
    Rational& operator/=(const Rational& other);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    void assign_big(mpq_class value);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

/// Generalized binomial coefficient binom(alpha, k).
Rational binomial(const Rational& alpha, unsigned k);

Rational factorial(unsigned n);

}  // namespace stochalg

#endif  // STOCHALG_RATIONAL_HPP
