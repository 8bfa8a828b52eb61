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

#include "stochalg/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace stochalg {

namespace {

__extension__ typedef __int128 i128;

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

bool fits(i128 v) { return v <= kMax && v >= -kMax; }

bool fits_small(const mpz_class& z) {
    return mpz_fits_slong_p(z.get_mpz_t()) && mpz_cmp_si(z.get_mpz_t(), -kMax) >= 0;
}

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

}  // namespace

Rational::Rational(std::int64_t value) : num_(value) {
    if (value == std::numeric_limits<std::int64_t>::min()) assign_big(mpq_class(mpz_class(value)));
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) throw std::domain_error("Rational: zero denominator");
    constexpr auto kMin = std::numeric_limits<std::int64_t>::min();
    if (numerator == kMin || denominator == kMin) {
        mpq_class q{mpz_class(numerator), mpz_class(denominator)};
        q.canonicalize();
        assign_big(std::move(q));
        return;
    }
    if (denominator < 0) {
        numerator = -numerator;
        denominator = -denominator;
    }
    const std::int64_t g = std::gcd(abs64(numerator), denominator);
    num_ = numerator / g;
    den_ = denominator / g;
}

Rational::Rational(const mpq_class& value) {
    mpq_class q(value);
    q.canonicalize();
    assign_big(std::move(q));
}

void Rational::assign_big(mpq_class value) {
    if (fits_small(value.get_num()) && fits_small(value.get_den())) {
        num_ = value.get_num().get_si();
        den_ = value.get_den().get_si();
        big_.reset();
        return;
    }
    num_ = 0;
    den_ = 1;
    big_ = std::make_shared<const mpq_class>(std::move(value));
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    const auto trim = [](std::string& v) {
        const auto b = v.find_first_not_of(" \t");
        const auto e = v.find_last_not_of(" \t");
        v = b == std::string::npos ? std::string() : v.substr(b, e - b + 1);
    };
    trim(s);
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty input");
    if (s.front() == '+') s.erase(0, 1);
    if (const auto dot = s.find('.'); dot != std::string::npos) {
        const std::string frac = s.substr(dot + 1);
        std::string digits = s.substr(0, dot) + frac;
        const bool neg = !digits.empty() && digits.front() == '-';
        const std::string body = neg ? digits.substr(1) : digits;
        if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("Rational::parse: malformed '" + s + "'");
        mpz_class num(body, 10);
        if (neg) num = -num;
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
        return Rational(mpq_class(num, den));
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational::parse: malformed '" + s + "'");
    if (q.get_den() == 0) throw std::domain_error("Rational::parse: zero denominator");
    return Rational(q);
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

double Rational::to_double() const {
    if (big_) return big_->get_d();
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
    if (big_) return big_->get_str(10);
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::optional<Rational> Rational::exact_sqrt() const {
    if (sign() < 0) return std::nullopt;
    const mpq_class q = to_mpq();
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
        return std::nullopt;
    mpz_class n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
    return Rational(mpq_class(n, d));
}

Rational Rational::operator-() const {
    Rational r;
    if (big_)
        r.assign_big(-*big_);
    else {
        r.num_ = -num_;
        r.den_ = den_;
    }
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (o.num_ == 0) return *this;
        if (num_ == 0) return *this = o;
        const std::int64_t g = std::gcd(den_, o.den_);
        if (g == 1) {
            const i128 n = static_cast<i128>(num_) * o.den_ + static_cast<i128>(o.num_) * den_;
            const i128 d = static_cast<i128>(den_) * o.den_;
            if (fits(n) && fits(d)) {
                num_ = static_cast<std::int64_t>(n);
                den_ = static_cast<std::int64_t>(d);
                return *this;
            }
        } else {
            const i128 t = static_cast<i128>(num_) * (o.den_ / g) + static_cast<i128>(o.num_) * (den_ / g);
            const std::int64_t r = static_cast<std::int64_t>(t % g);
            const std::int64_t g2 = std::gcd(abs64(r), g);
            const i128 n = t / g2;
            const i128 d = static_cast<i128>(den_ / g) * (o.den_ / g2);
            if (fits(n) && fits(d)) {
                num_ = static_cast<std::int64_t>(n);
                den_ = static_cast<std::int64_t>(d);
                if (num_ == 0) den_ = 1;
                return *this;
            }
        }
    }
    assign_big(to_mpq() + o.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (num_ == 0 || o.num_ == 0) {
            num_ = 0;
            den_ = 1;
            return *this;
        }
        const std::int64_t g1 = std::gcd(abs64(num_), o.den_);
        const std::int64_t g2 = std::gcd(abs64(o.num_), den_);
        const i128 n = static_cast<i128>(num_ / g1) * (o.num_ / g2);
        const i128 d = static_cast<i128>(den_ / g2) * (o.den_ / g1);
        if (fits(n) && fits(d)) {
            num_ = static_cast<std::int64_t>(n);
            den_ = static_cast<std::int64_t>(d);
            return *this;
        }
    }
    assign_big(to_mpq() * o.to_mpq());
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    if (!o.big_) {
        Rational inv;
        inv.num_ = o.num_ < 0 ? -o.den_ : o.den_;
        inv.den_ = abs64(o.num_);
        return *this *= inv;
    }
    assign_big(to_mpq() / o.to_mpq());
    return *this;
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // normalized: a big value is never representable inline
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        const i128 l = static_cast<i128>(a.num_) * b.den_;
        const i128 r = static_cast<i128>(b.num_) * a.den_;
        return l <=> r;
    }
    const int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

Rational binomial(const Rational& alpha, unsigned k) {
    Rational r(1);
    for (unsigned i = 0; i < k; ++i) {
        r *= alpha - Rational(static_cast<std::int64_t>(i));
        r /= Rational(static_cast<std::int64_t>(i + 1));
    }
    return r;
}

Rational factorial(unsigned n) {
    Rational r(1);
    for (unsigned i = 2; i <= n; ++i) r *= Rational(static_cast<std::int64_t>(i));
    return r;
}

}  // namespace stochalg
