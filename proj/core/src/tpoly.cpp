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

#include "stochalg/tpoly.hpp"

#include <ostream>

namespace stochalg {

TPoly::TPoly(const Rational& constant) {
    if (!constant.is_zero()) c_.push_back(constant);
}

TPoly TPoly::monomial(const Rational& c, std::size_t k) {
    TPoly p;
    p.add_term(c, k);
    return p;
}

void TPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void TPoly::add_term(const Rational& c, std::size_t k) {
    if (c.is_zero()) return;
    if (c_.size() <= k) c_.resize(k + 1);
    c_[k] += c;
    trim();
}

Rational TPoly::evaluate(const Rational& t) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

double TPoly::evaluate(double t) const {
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + it->to_double();
    return acc;
}

TPoly& TPoly::operator+=(const TPoly& other) {
    if (c_.size() < other.c_.size()) c_.resize(other.c_.size());
    for (std::size_t k = 0; k < other.c_.size(); ++k) c_[k] += other.c_[k];
    trim();
    return *this;
}

TPoly& TPoly::operator-=(const TPoly& other) {
    if (c_.size() < other.c_.size()) c_.resize(other.c_.size());
    for (std::size_t k = 0; k < other.c_.size(); ++k) c_[k] -= other.c_[k];
    trim();
    return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
    TPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.resize(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

TPoly& TPoly::operator*=(const TPoly& other) { return *this = *this * other; }

TPoly& TPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= c;
    return *this;
}

TPoly TPoly::operator-() const {
    TPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

std::string TPoly::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        const Rational& c = c_[k];
        if (c.is_zero()) continue;
        const bool neg = c.sign() < 0;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        const std::string mag = (neg ? -c : c).to_string();
        if (k == 0)
            out += mag;
        else
            out += mag + (k == 1 ? "*t" : "*t^" + std::to_string(k));
        first = false;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const TPoly& p) { return os << p.to_string(); }

}  // namespace stochalg
