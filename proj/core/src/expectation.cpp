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

#include "stochalg/expectation.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace stochalg {

TPoly expect_word(const Word& w) {
    std::size_t zeros = 0, pairs = 0;
    for (std::size_t i = 0; i < w.size();) {
        if (w[i] == 0) {
            ++zeros;
            ++i;
        } else if (i + 1 < w.size() && w[i + 1] == w[i]) {
            ++pairs;
            i += 2;
        } else {
            return TPoly();
        }
    }
    const std::size_t k = zeros + pairs;
    Rational denom = factorial(static_cast<unsigned>(k));
    for (std::size_t i = 0; i < pairs; ++i) denom *= Rational(2);
    return TPoly::monomial(Rational(1) / denom, k);
}

TPoly expect_poly(const WordPoly& p) {
    TPoly r;
    for (const auto& [w, c] : p) {
        const TPoly e = expect_word(w);
        if (!e.is_zero()) r += c * e;
    }
    return r;
}

namespace {

struct PairKey {
    std::uint64_t a, b;
    std::uint8_t la, lb;
    friend bool operator==(const PairKey&, const PairKey&) = default;
};

struct PairKeyHash {
    std::size_t operator()(const PairKey& k) const noexcept {
        WordHash h;
        const std::size_t x = h(Word::from_packed(k.a, k.la));
        const std::size_t y = h(Word::from_packed(k.b, k.lb));
        return x ^ (y + 0x9E3779B97F4A7C15ull + (x << 6) + (x >> 2));
    }
};

}  // namespace

const TPoly& expect_shuffle(const Word& a, const Word& b) {
    thread_local std::unordered_map<PairKey, TPoly, PairKeyHash> cache;
    const bool swap = b < a;
    const Word& x = swap ? b : a;
    const Word& y = swap ? a : b;
    const PairKey key{x.packed(), y.packed(), static_cast<std::uint8_t>(x.size()),
                      static_cast<std::uint8_t>(y.size())};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache.emplace(key, expect_poly(shuffle(x, y))).first->second;
}

// -------------------------------------------------------------- TWordPoly

TWordPoly::TWordPoly(const WordPoly& p) {
    terms_.reserve(p.size());
    for (const auto& [w, c] : p) terms_.emplace_back(w, TPoly(c));
}

TWordPoly TWordPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
    TWordPoly r;
    for (auto& t : terms) {
        if (!r.terms_.empty() && r.terms_.back().first == t.first)
            r.terms_.back().second += t.second;
        else
            r.terms_.push_back(std::move(t));
    }
    std::erase_if(r.terms_, [](const Term& t) { return t.second.is_zero(); });
    return r;
}

TPoly TWordPoly::coefficient(const Word& w) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                               [](const Term& t, const Word& x) { return t.first < x; });
    return it != terms_.end() && it->first == w ? it->second : TPoly();
}

TWordPoly& TWordPoly::operator+=(const TWordPoly& other) {
    std::vector<Term> all = terms_;
    all.insert(all.end(), other.terms_.begin(), other.terms_.end());
    return *this = from_terms(std::move(all));
}

TWordPoly& TWordPoly::operator-=(const TWordPoly& other) {
    std::vector<Term> all = terms_;
    for (const auto& [w, c] : other.terms_) all.emplace_back(w, -c);
    return *this = from_terms(std::move(all));
}

TWordPoly& TWordPoly::operator*=(const TPoly& c) {
    for (auto& t : terms_) t.second = c * t.second;
    std::erase_if(terms_, [](const Term& t) { return t.second.is_zero(); });
    return *this;
}

std::string TWordPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i > 0) out += " + ";
        out += "(" + terms_[i].second.to_string() + ")*" + terms_[i].first.to_string();
    }
    return out;
}

TPoly expect_poly(const TWordPoly& p) {
    TPoly r;
    for (const auto& [w, c] : p) {
        const TPoly e = expect_word(w);
        if (!e.is_zero()) r += c * e;
    }
    return r;
}

// ------------------------------------------------------------------ TEndo

TEndo::TEndo(BasisPtr basis) : basis_(std::move(basis)), images_(basis_->size()) {}

TEndo::TEndo(BasisPtr basis, std::vector<TWordPoly> images) : basis_(std::move(basis)), images_(std::move(images)) {
    if (images_.size() != basis_->size()) throw std::invalid_argument("TEndo: image count != basis size");
}

TWordPoly TEndo::apply(const TWordPoly& p) const {
    std::vector<TWordPoly::Term> all;
    for (const auto& [w, c] : p)
        for (const auto& [u, d] : (*this)(w)) all.emplace_back(u, c * d);
    return TWordPoly::from_terms(std::move(all));
}

TEndo& TEndo::operator+=(const TEndo& other) {
    if (!(*basis_ == *other.basis_)) throw std::invalid_argument("TEndo: cap/alphabet mismatch");
    for (std::size_t i = 0; i < images_.size(); ++i) images_[i] += other.images_[i];
    return *this;
}

TEndo& TEndo::operator-=(const TEndo& other) {
    if (!(*basis_ == *other.basis_)) throw std::invalid_argument("TEndo: cap/alphabet mismatch");
    for (std::size_t i = 0; i < images_.size(); ++i) images_[i] -= other.images_[i];
    return *this;
}

bool operator==(const TEndo& a, const TEndo& b) { return *a.basis_ == *b.basis_ && a.images_ == b.images_; }

TEndo lift(const GradedEndo& x) {
    std::vector<TWordPoly> images(x.images().begin(), x.images().end());
    return TEndo(x.basis(), std::move(images));
}

TEndo expectation_endo(const BasisPtr& basis) {
    std::vector<TWordPoly> images;
    images.reserve(basis->size());
    for (const auto& w : basis->words()) {
        const TPoly e = expect_word(w);
        images.push_back(e.is_zero() ? TWordPoly() : TWordPoly::from_terms({{Word(), e}}));
    }
    return TEndo(basis, std::move(images));
}

TEndo compose(const TEndo& x, const TEndo& y) {
    if (!(*x.basis() == *y.basis())) throw std::invalid_argument("compose: cap/alphabet mismatch");
    std::vector<TWordPoly> images;
    images.reserve(y.basis()->size());
    for (std::size_t i = 0; i < y.basis()->size(); ++i) images.push_back(x.apply(y.image(i)));
    return TEndo(x.basis(), std::move(images));
}

TEndo centered(const TEndo& x) { return x - compose(expectation_endo(x.basis()), x); }

// ------------------------------------------------------------- GramMatrix

std::vector<std::vector<Rational>> GramMatrix::evaluate(const Rational& t) const {
    const std::size_t n = size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = at(i, j).evaluate(t);
    return m;
}

GramMatrix gram(const SubspaceSelector& selector, const Alphabet& alphabet) {
    if (!selector.finite())
        throw std::invalid_argument("gram: subspace " + selector.to_string() + " is infinite");
    GramMatrix g{selector, alphabet, subspace_words(selector, alphabet), {}};
    const std::size_t n = g.words.size();
    g.entries.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            g.entries[i * n + j] = expect_poly(shuffle(g.words[i], g.words[j]));
            g.entries[j * n + i] = g.entries[i * n + j];
        }
    return g;
}

// ---------------------------------------------------------------- VWeight

VWeight::VWeight(std::vector<Word> words, std::vector<Rational> table, std::string label)
    : words_(std::move(words)), v_(std::move(table)), label_(std::move(label)) {
    const std::size_t n = words_.size();
    if (v_.size() != n * n) throw std::invalid_argument("VWeight: table is not square over the word list");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (!(v_[i * n + j] == v_[j * n + i])) throw std::invalid_argument("VWeight: table is not symmetric");
}

VWeight VWeight::identity(std::vector<Word> words) {
    const std::size_t n = words.size();
    std::vector<Rational> v(n * n);
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = Rational(1);
    return VWeight(std::move(words), std::move(v), "id");
}

VWeight VWeight::random_psd(std::vector<Word> words, std::uint64_t seed) {
    const std::size_t n = words.size();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> entry(-2, 2);
    std::vector<std::int64_t> b(n * n);
    for (auto& x : b) x = entry(rng);
    std::vector<Rational> v(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            std::int64_t s = i == j ? 1 : 0;
            for (std::size_t k = 0; k < n; ++k) s += b[k * n + i] * b[k * n + j];
            v[i * n + j] = v[j * n + i] = Rational(s);
        }
    return VWeight(std::move(words), std::move(v), std::to_string(seed));
}

// ------------------------------------------------------------ inner product

namespace {

void check_inner_args(const BasisPtr& basis, const SubspaceSelector& s, const VWeight& v) {
    if (!s.finite()) throw std::invalid_argument("inner: subspace " + s.to_string() + " is infinite");
    if (s.max_length() > basis->cap())
        throw std::invalid_argument("inner: subspace " + s.to_string() + " exceeds the cap " +
                                    std::to_string(basis->cap()));
    if (v.words() != subspace_words(s, basis->alphabet()))
        throw std::invalid_argument("inner: weight dimension " + std::to_string(v.size()) +
                                    " does not match the basis of " + s.to_string());
}

void accumulate(std::vector<Rational>& acc, const Rational& c, const TPoly& p) {
    if (acc.size() < p.coefficients().size()) acc.resize(p.coefficients().size());
    for (std::size_t k = 0; k < p.coefficients().size(); ++k)
        if (!p.coefficients()[k].is_zero()) acc[k] += c * p.coefficients()[k];
}

TPoly from_dense(const std::vector<Rational>& acc) {
    TPoly r;
    for (std::size_t k = 0; k < acc.size(); ++k) r.add_term(acc[k], k);
    return r;
}

}  // namespace

TPoly inner(const GradedEndo& x, const GradedEndo& y, const SubspaceSelector& selector, const VWeight& v,
            bool subtract_expectation) {
    if (!(*x.basis() == *y.basis())) throw std::invalid_argument("inner: cap/alphabet mismatch");
    check_inner_args(x.basis(), selector, v);
    const auto& words = v.words();
    const std::size_t n = words.size();
    std::vector<Rational> acc;
    for (std::size_t i = 0; i < n; ++i) {
        const WordPoly& xu = x(words[i]);
        if (xu.is_zero()) continue;
        WordPolyBuilder kb;
        for (std::size_t j = 0; j < n; ++j)
            if (!v.at(i, j).is_zero()) kb.add(y(words[j]), v.at(i, j));
        const WordPoly k = std::move(kb).build();
        for (const auto& [a, ca] : xu)
            for (const auto& [b, cb] : k) accumulate(acc, ca * cb, expect_shuffle(a, b));
    }
    TPoly r = from_dense(acc);
    if (subtract_expectation) {
        std::vector<TPoly> ex(n), ey(n);
        for (std::size_t i = 0; i < n; ++i) {
            ex[i] = expect_poly(x(words[i]));
            ey[i] = expect_poly(y(words[i]));
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (ex[i].is_zero()) continue;
            TPoly row;
            for (std::size_t j = 0; j < n; ++j)
                if (!ey[j].is_zero() && !v.at(i, j).is_zero()) row += v.at(i, j) * ey[j];
            r -= ex[i] * row;
        }
    }
    return r;
}

TPoly inner(const TEndo& x, const TEndo& y, const SubspaceSelector& selector, const VWeight& v) {
    if (!(*x.basis() == *y.basis())) throw std::invalid_argument("inner: cap/alphabet mismatch");
    check_inner_args(x.basis(), selector, v);
    const auto& words = v.words();
    const std::size_t n = words.size();
    TPoly r;
    for (std::size_t i = 0; i < n; ++i) {
        const TWordPoly& xu = x(words[i]);
        if (xu.is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (v.at(i, j).is_zero()) continue;
            const TWordPoly& yv = y(words[j]);
            TPoly cell;
            for (const auto& [a, ca] : xu)
                for (const auto& [b, cb] : yv) {
                    const TPoly& w = expect_shuffle(a, b);
                    if (!w.is_zero()) cell += ca * cb * w;
                }
            r += v.at(i, j) * cell;
        }
    }
    return r;
}

}  // namespace stochalg
