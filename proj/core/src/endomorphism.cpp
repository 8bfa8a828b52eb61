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

#include "stochalg/endomorphism.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace stochalg {

// ------------------------------------------------------------------ Basis

Basis::Basis(std::size_t cap, Alphabet alphabet) : cap_(cap), alphabet_(alphabet) {
    if (cap > Word::kMaxLength) throw std::length_error("Basis: cap exceeds 16");
    for (std::size_t len = 0; len <= cap; ++len) {
        offsets_.push_back(words_.size());
        auto w = words_of_length(len, alphabet_);
        words_.insert(words_.end(), w.begin(), w.end());
    }
    offsets_.push_back(words_.size());
}

std::size_t Basis::index(const Word& w) const {
    if (w.size() > cap_) throw std::out_of_range("Basis: word '" + w.to_string() + "' longer than cap");
    const std::size_t q = alphabet_.size();
    const Letter lo = alphabet_.first();
    std::size_t idx = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        const Letter a = w[i];
        if (!alphabet_.contains(a))
            throw std::out_of_range("Basis: word '" + w.to_string() + "' outside alphabet " + alphabet_.to_string());
        idx = idx * q + (a - lo);
    }
    return offsets_[w.size()] + idx;
}

bool Basis::contains(const Word& w) const {
    if (w.size() > cap_) return false;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (!alphabet_.contains(w[i])) return false;
    return true;
}

// ------------------------------------------------------------- GradedEndo

GradedEndo::GradedEndo(BasisPtr basis) : basis_(std::move(basis)), images_(basis_->size()) {}

GradedEndo::GradedEndo(BasisPtr basis, std::vector<WordPoly> images)
    : basis_(std::move(basis)), images_(std::move(images)) {
    if (images_.size() != basis_->size()) throw std::invalid_argument("GradedEndo: image count != basis size");
    check_invariants();
}

GradedEndo GradedEndo::from_function(BasisPtr basis, const std::function<WordPoly(const Word&)>& f) {
    std::vector<WordPoly> images;
    images.reserve(basis->size());
    for (const auto& w : basis->words()) images.push_back(f(w));
    return GradedEndo(std::move(basis), std::move(images));
}

void GradedEndo::check_invariants() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
        const Word& w = basis_->word(i);
        for (const auto& [u, c] : images_[i]) {
            if (u.size() != w.size())
                throw std::invalid_argument("GradedEndo: image of '" + w.to_string() + "' is not grade-preserving");
            if (!basis_->contains(u))
                throw std::invalid_argument("GradedEndo: image of '" + w.to_string() + "' leaves the alphabet");
        }
    }
}

void GradedEndo::check_compatible(const GradedEndo& other) const {
    if (!(*basis_ == *other.basis_))
        throw std::invalid_argument("GradedEndo: cap/alphabet mismatch");
}

WordPoly GradedEndo::apply(const WordPoly& p) const {
    WordPolyBuilder b;
    for (const auto& [w, c] : p) b.add((*this)(w), c);
    return std::move(b).build();
}

Rational GradedEndo::empty_value() const { return images_[0].coefficient(Word()); }

GradedEndo& GradedEndo::operator+=(const GradedEndo& other) {
    check_compatible(other);
    for (std::size_t i = 0; i < images_.size(); ++i) images_[i] += other.images_[i];
    return *this;
}

GradedEndo& GradedEndo::operator-=(const GradedEndo& other) {
    check_compatible(other);
    for (std::size_t i = 0; i < images_.size(); ++i) images_[i] -= other.images_[i];
    return *this;
}

GradedEndo& GradedEndo::operator*=(const Rational& c) {
    for (auto& p : images_) p *= c;
    return *this;
}

bool operator==(const GradedEndo& a, const GradedEndo& b) {
    return *a.basis_ == *b.basis_ && a.images_ == b.images_;
}

std::string GradedEndo::serialize() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < images_.size(); ++i)
        os << basis_->word(i).to_string() << " -> " << images_[i].to_string() << '\n';
    return os.str();
}

GradedEndo GradedEndo::deserialize(BasisPtr basis, std::string_view text) {
    std::vector<WordPoly> images(basis->size());
    std::vector<bool> seen(basis->size(), false);
    std::istringstream is{std::string(text)};
    std::string line;
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto arrow = line.find("->");
        if (arrow == std::string::npos) throw std::invalid_argument("GradedEndo: missing '->' in '" + line + "'");
        std::string lhs = line.substr(0, arrow);
        lhs.erase(std::remove_if(lhs.begin(), lhs.end(), [](char c) { return c == ' ' || c == '\t'; }), lhs.end());
        std::string rhs = line.substr(arrow + 2);
        if (!rhs.empty() && rhs.back() == '\r') rhs.pop_back();
        const std::size_t i = basis->index(Word::parse(lhs));
        images[i] = WordPoly::parse(rhs);
        seen[i] = true;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        throw std::invalid_argument("GradedEndo: serialization does not cover every basis word");
    return GradedEndo(std::move(basis), std::move(images));
}

// -------------------------------------------------------- basic endomorphisms

GradedEndo identity_endo(const BasisPtr& basis) {
    return GradedEndo::from_function(basis, [](const Word& w) { return WordPoly(w); });
}

GradedEndo unit_endo(const BasisPtr& basis) {
    return GradedEndo::from_function(basis, [](const Word& w) { return w.empty() ? WordPoly(w) : WordPoly(); });
}

GradedEndo augmented_projector(const BasisPtr& basis) {
    return GradedEndo::from_function(basis, [](const Word& w) { return w.empty() ? WordPoly() : WordPoly(w); });
}

GradedEndo antipode_endo(const BasisPtr& basis) {
    return GradedEndo::from_function(basis, [](const Word& w) { return antipode(w); });
}

GradedEndo reverse_endo(const BasisPtr& basis) {
    return GradedEndo::from_function(basis, [](const Word& w) { return WordPoly(reverse(w)); });
}

GradedEndo sign_endo(const BasisPtr& basis) {
    return GradedEndo::from_function(basis, [](const Word& w) { return sign(w); });
}

GradedEndo projection(const BasisPtr& basis, const SubspaceSelector& s) {
    return GradedEndo::from_function(basis, [&s](const Word& w) { return s.contains(w.size()) ? WordPoly(w) : WordPoly(); });
}

GradedEndo compose(const GradedEndo& x, const GradedEndo& y) {
    if (!(*x.basis() == *y.basis())) throw std::invalid_argument("compose: cap/alphabet mismatch");
    std::vector<WordPoly> images;
    images.reserve(y.images().size());
    for (const auto& p : y.images()) images.push_back(x.apply(p));
    return GradedEndo(x.basis(), std::move(images));
}

// ------------------------------------------------------------ convolution

GradedEndo convolve(const GradedEndo& x, const GradedEndo& y) {
    if (!(*x.basis() == *y.basis())) throw std::invalid_argument("convolve: cap/alphabet mismatch");
    const Basis& basis = *x.basis();
    std::vector<WordPoly> images;
    images.reserve(basis.size());
    for (const auto& w : basis.words()) {
        WordPolyBuilder b;
        for (std::size_t i = 0; i <= w.size(); ++i) {
            const WordPoly& xu = x(w.prefix(i));
            if (xu.is_zero()) continue;
            const WordPoly& yv = y(w.suffix_from(i));
            for (const auto& [a, ca] : xu)
                for (const auto& [c, cc] : yv) shuffle_into(b, a, c, ca * cc);
        }
        images.push_back(std::move(b).build());
    }
    return GradedEndo(x.basis(), std::move(images));
}

GradedEndo conv_power(const GradedEndo& x, std::size_t k) {
    GradedEndo result = unit_endo(x.basis());
    for (std::size_t i = 0; i < k; ++i) result = i == 0 ? x : convolve(result, x);
    return result;
}

GradedEndo conv_inverse(const GradedEndo& x) {
    if (!(x.image(0) == WordPoly(Word())))
        throw std::invalid_argument("conv_inverse: X(e) != e, so X is not in the convolution group");
    return apply_series(ConvSeries::inverse(x.cap()), x);
}

ConvSeries ConvSeries::log(std::size_t order) {
    ConvSeries s{{Rational(0)}, Rational(1)};
    for (std::size_t k = 1; k <= order; ++k)
        s.coefficients.push_back(Rational(k % 2 == 1 ? 1 : -1, static_cast<std::int64_t>(k)));
    return s;
}

ConvSeries ConvSeries::exp(std::size_t order) {
    ConvSeries s{{}, Rational(0)};
    for (std::size_t k = 0; k <= order; ++k) s.coefficients.push_back(Rational(1) / factorial(static_cast<unsigned>(k)));
    return s;
}

ConvSeries ConvSeries::inverse(std::size_t order) {
    ConvSeries s{{}, Rational(1)};
    for (std::size_t k = 0; k <= order; ++k) s.coefficients.push_back(Rational(k % 2 == 0 ? 1 : -1));
    return s;
}

ConvSeries ConvSeries::sinhlog(std::size_t order) {
    ConvSeries s{{Rational(0)}, Rational(1)};
    for (std::size_t k = 1; k <= order; ++k)
        s.coefficients.push_back(k == 1 ? Rational(1) : Rational(k % 2 == 1 ? 1 : -1, 2));
    return s;
}

ConvSeries ConvSeries::coshlog(std::size_t order) {
    ConvSeries s{{Rational(1)}, Rational(1)};
    for (std::size_t k = 1; k <= order; ++k)
        s.coefficients.push_back(k == 1 ? Rational(0) : Rational(k % 2 == 0 ? 1 : -1, 2));
    return s;
}

ConvSeries ConvSeries::sqrt(std::size_t order) {
    ConvSeries s{{}, Rational(1)};
    for (std::size_t k = 0; k <= order; ++k) s.coefficients.push_back(binomial(Rational(1, 2), static_cast<unsigned>(k)));
    return s;
}

GradedEndo apply_series(const ConvSeries& s, const GradedEndo& x) {
    if (!(x.image(0) == WordPoly(Word(), s.center)))
        throw std::invalid_argument("apply_series: X(e) = " + x.image(0).to_string() +
                                    " does not match the series center " + s.center.to_string());
    const BasisPtr& basis = x.basis();
    GradedEndo z = x - s.center * unit_endo(basis);
    GradedEndo result(basis);
    GradedEndo power = unit_endo(basis);
    // Z(e) = 0, so Z^{*k} vanishes on every basis word once k > cap.
    const std::size_t top = std::min(s.coefficients.size(), x.cap() + 1);
    for (std::size_t k = 0; k < top; ++k) {
        if (k > 0) power = k == 1 ? z : convolve(power, z);
        if (!s.coefficients[k].is_zero()) result += s.coefficients[k] * power;
    }
    return result;
}

GradedEndo log_star(const GradedEndo& x) { return apply_series(ConvSeries::log(x.cap()), x); }
GradedEndo exp_star(const GradedEndo& x) { return apply_series(ConvSeries::exp(x.cap()), x); }

GradedEndo sinhlog(const GradedEndo& x) { return Rational(1, 2) * (x - conv_inverse(x)); }
GradedEndo coshlog(const GradedEndo& x) { return Rational(1, 2) * (x + conv_inverse(x)); }
GradedEndo sinhlog_endo(const BasisPtr& basis) { return sinhlog(identity_endo(basis)); }
GradedEndo coshlog_endo(const BasisPtr& basis) { return coshlog(identity_endo(basis)); }

GradedEndo f_epsilon(const GradedEndo& x, const Rational& eps) {
    return Rational(1, 2) * (x - eps * conv_inverse(x));
}

GradedEndo f_epsilon_endo(const Rational& eps, const BasisPtr& basis) {
    return f_epsilon(identity_endo(basis), eps);
}

GradedEndo conv_sqrt_shifted(const GradedEndo& z) {
    if (!z.empty_value().is_zero())
        throw std::invalid_argument("conv_sqrt_shifted: Z(e) must be 0");
    return apply_series(ConvSeries::sqrt(z.cap()), z + unit_endo(z.basis()));
}

GradedEndo h_star(const GradedEndo& x, const GradedEndo& y) {
    GradedEndo m = convolve(x, x) + y;
    const Rational c = m.empty_value();
    if (c.sign() <= 0)
        throw std::domain_error("h_star: (X^2 + Y)(e) = " + c.to_string() + " has no principal square root");
    const auto root = c.exact_sqrt();
    if (!root)
        throw std::domain_error("h_star: sqrt(" + c.to_string() + ") is irrational");
    GradedEndo z = (Rational(1) / c) * (m - c * unit_endo(x.basis()));
    return *root * conv_sqrt_shifted(z);
}

GradedEndo f_inverse(const GradedEndo& x, const Rational& eps) {
    return x + h_star(x, eps * unit_endo(x.basis()));
}

GradedEndo sinhlog_inverse(const GradedEndo& x) { return f_inverse(x, Rational(1)); }
GradedEndo coshlog_inverse(const GradedEndo& x) { return f_inverse(x, Rational(-1)); }

GradedEndo pre_remainder(const Rational& eps, std::size_t n, const BasisPtr& basis) {
    if (n < 1 || n >= basis->cap())
        throw std::invalid_argument("pre_remainder: need 1 <= n < cap");
    return compose(f_epsilon_endo(eps, basis), projection(basis, SubspaceSelector::at_least(n + 1)));
}

Remainder remainder_leading(const Rational& eps, std::size_t n, const BasisPtr& basis) {
    if (eps == Rational(-1))
        throw std::domain_error(
            "remainder_leading: eps = -1 (coshlog) is excluded; the inverse then involves J^{*-1}, "
            "which is not finite on the empty word, and the integrator suffers order reduction");
    if (eps < Rational(-1)) throw std::invalid_argument("remainder_leading: need eps > -1");
    if (n < 1 || n >= basis->cap())
        throw std::invalid_argument("remainder_leading: need 1 <= n < cap");
    const GradedEndo f = f_epsilon_endo(eps, basis);
    const GradedEndo truncated = compose(projection(basis, SubspaceSelector::at_most(n)), f);
    GradedEndo full = identity_endo(basis) - f_inverse(truncated, eps);
    const GradedEndo next = projection(basis, SubspaceSelector::exactly(n + 1));
    GradedEndo leading = compose(full, next);
    GradedEndo predicted = (Rational(2) / (Rational(1) + eps)) * compose(pre_remainder(eps, n, basis), next);
    const bool holds = leading == predicted;
    return {std::move(full), std::move(leading), std::move(predicted), holds};
}

GradedEndo random_endo(const BasisPtr& basis, std::mt19937_64& rng, std::size_t terms, bool in_group) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<std::size_t> count(0, terms);
    std::vector<WordPoly> images;
    images.reserve(basis->size());
    std::vector<std::vector<Word>> by_length(basis->cap() + 1);
    for (const auto& w : basis->words()) by_length[w.size()].push_back(w);
    for (const auto& w : basis->words()) {
        if (w.empty()) {
            images.emplace_back(w, in_group ? Rational(1) : Rational(coeff(rng)));
            continue;
        }
        const auto& pool = by_length[w.size()];
        std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
        std::vector<WordPoly::Term> t;
        const std::size_t k = count(rng);
        for (std::size_t i = 0; i < k; ++i) t.emplace_back(pool[pick(rng)], Rational(coeff(rng)));
        images.push_back(WordPoly::from_terms(std::move(t)));
    }
    return GradedEndo(basis, std::move(images));
}

}  // namespace stochalg
