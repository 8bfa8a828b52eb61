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
// Polynomials in the formal time variable t with exact rational coefficients.

#ifndef STOCHALG_TPOLY_HPP
#define STOCHALG_TPOLY_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "stochalg/rational.hpp"

namespace stochalg {

/* sum_k c_k t^k stored densely by exponent; the top coefficient is never zero
 * and the zero polynomial has no coefficients at all. */
class TPoly {
public:
    TPoly() = default;
    TPoly(const Rational& constant);  // NOLINT: constants embed implicitly
    TPoly(std::int64_t constant) : TPoly(Rational(constant)) {}  // NOLINT

    static TPoly monomial(const Rational& c, std::size_t k);
    static TPoly t() { return monomial(Rational(1), 1); }

    bool is_zero() const { return c_.empty(); }
    /// Degree of a nonzero polynomial; 0 for the zero polynomial.
    std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
    Rational coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    const std::vector<Rational>& coefficients() const { return c_; }

    Rational evaluate(const Rational& t) const;
    double evaluate(double t) const;

    TPoly& operator+=(const TPoly& other);
    TPoly& operator-=(const TPoly& other);
    TPoly& operator*=(const TPoly& other);
    TPoly& operator*=(const Rational& c);
    TPoly operator-() const;
    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
    friend TPoly operator*(const TPoly& a, const TPoly& b);
    friend TPoly operator*(const Rational& c, TPoly p) { return p *= c; }
    friend bool operator==(const TPoly&, const TPoly&) = default;

    /// Adds c * t^k in place.
    void add_term(const Rational& c, std::size_t k);

    /// "c0 + c1*t + c2*t^2" with every coefficient printed, nonzero terms only, "0" for the zero polynomial.
    std::string to_string() const;

private:
    void trim();

    std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const TPoly& p);

}  // namespace stochalg

#endif  // STOCHALG_TPOLY_HPP
