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
// The expectation map on words, the Gram table of shuffle expectations and the
// weighted inner product on endomorphisms restricted to a graded class subspace.

#ifndef STOCHALG_EXPECTATION_HPP
#define STOCHALG_EXPECTATION_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stochalg/endomorphism.hpp"
#include "stochalg/rational.hpp"
#include "stochalg/subspace.hpp"
#include "stochalg/tpoly.hpp"
#include "stochalg/words.hpp"

namespace stochalg {

/* Expectation of the Stratonovich integral J_w. The word is read left to right:
 * a 0 consumes one letter, a nonzero letter must be followed by the same letter
 * and consumes two. With z zeros and p pairs the value is
 * t^{z+p} / (2^p (z+p)!); a word that cannot be read this way gives 0. */
TPoly expect_word(const Word& w);
TPoly expect_poly(const WordPoly& p);

/// Ebar(a sh b), memoized per thread.
const TPoly& expect_shuffle(const Word& a, const Word& b);

/* Linear combination of words with TPoly coefficients: the value space of the
 * expectation endomorphism, which sends w to Ebar(w) times the empty word. */
class TWordPoly {
public:
    using Term = std::pair<Word, TPoly>;

    TWordPoly() = default;
    TWordPoly(const WordPoly& p);  // NOLINT: rational polynomials embed implicitly
    static TWordPoly from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }
    TPoly coefficient(const Word& w) const;

    TWordPoly& operator+=(const TWordPoly& other);
    TWordPoly& operator-=(const TWordPoly& other);
    TWordPoly& operator*=(const TPoly& c);
    friend TWordPoly operator+(TWordPoly a, const TWordPoly& b) { return a += b; }
    friend TWordPoly operator-(TWordPoly a, const TWordPoly& b) { return a -= b; }
    friend TWordPoly operator*(const TPoly& c, TWordPoly p) { return p *= c; }
    friend bool operator==(const TWordPoly&, const TWordPoly&) = default;

    std::string to_string() const;

private:
    std::vector<Term> terms_;
};

TPoly expect_poly(const TWordPoly& p);

/* Endomorphism with values in K[t] e + K<A>; not grade preserving in general. */
class TEndo {
public:
    explicit TEndo(BasisPtr basis);  // the zero map
    TEndo(BasisPtr basis, std::vector<TWordPoly> images);

    const BasisPtr& basis() const { return basis_; }
    const TWordPoly& operator()(const Word& w) const { return images_[basis_->index(w)]; }
    const TWordPoly& image(std::size_t i) const { return images_[i]; }
    TWordPoly apply(const TWordPoly& p) const;

    TEndo& operator+=(const TEndo& other);
    TEndo& operator-=(const TEndo& other);
    friend TEndo operator+(TEndo a, const TEndo& b) { return a += b; }
    friend TEndo operator-(TEndo a, const TEndo& b) { return a -= b; }
    friend bool operator==(const TEndo& a, const TEndo& b);

private:
    BasisPtr basis_;
    std::vector<TWordPoly> images_;
};

TEndo lift(const GradedEndo& x);
/// E: w -> Ebar(w) e.
TEndo expectation_endo(const BasisPtr& basis);
/// (X o Y)(w) = X(Y(w)).
TEndo compose(const TEndo& x, const TEndo& y);
/// (id - E) o X.
TEndo centered(const TEndo& x);

/* W_{u,v} = Ebar(u sh v) over the basis words of a finite subspace. */
struct GramMatrix {
    SubspaceSelector selector;
    Alphabet alphabet{1};
    std::vector<Word> words;
    std::vector<TPoly> entries;  // row major

    std::size_t size() const { return words.size(); }
    const TPoly& at(std::size_t i, std::size_t j) const { return entries[i * words.size() + j]; }
    std::vector<std::vector<Rational>> evaluate(const Rational& t) const;
};

/// Throws std::invalid_argument for an at-least selector.
GramMatrix gram(const SubspaceSelector& selector, const Alphabet& alphabet);

/* A concrete symmetric rational weight V_{u,v} on the basis words of a subspace. */
class VWeight {
public:
    static VWeight identity(std::vector<Word> words);
    /// B^T B + I with B uniform in {-2,...,2}, deterministic in the seed.
    static VWeight random_psd(std::vector<Word> words, std::uint64_t seed);
    VWeight(std::vector<Word> words, std::vector<Rational> table, std::string label);

    std::size_t size() const { return words_.size(); }
    const std::vector<Word>& words() const { return words_; }
    const Rational& at(std::size_t i, std::size_t j) const { return v_[i * words_.size() + j]; }
    /// "id" or the seed.
    const std::string& label() const { return label_; }

private:
    std::vector<Word> words_;
    std::vector<Rational> v_;
    std::string label_;
};

/* <X, Y> = sum_{u,v in S} V_{u,v} Ebar(X(u) sh Y(v)). With subtract_expectation
 * the maps are first composed with (id - E). Throws std::invalid_argument when
 * the selector is infinite, exceeds the cap, or does not match V. */
TPoly inner(const GradedEndo& x, const GradedEndo& y, const SubspaceSelector& selector, const VWeight& v,
            bool subtract_expectation = false);
TPoly inner(const TEndo& x, const TEndo& y, const SubspaceSelector& selector, const VWeight& v);

inline TPoly norm_squared(const GradedEndo& x, const SubspaceSelector& s, const VWeight& v,
                          bool subtract_expectation = false) {
    return inner(x, x, s, v, subtract_expectation);
}

}  // namespace stochalg

#endif  // STOCHALG_EXPECTATION_HPP
