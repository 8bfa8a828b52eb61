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
// Grade-preserving endomorphisms of the shuffle algebra, truncated at a maximal
// word length, together with the convolution product
//
//     (X * Y)(w) = sum_{w = uv} X(u) sh Y(v)
//
// and the convolution series built from it (inverse, log, exp, sinhlog,
// coshlog, the shifted square root, and the f(X; eps) family).

#ifndef STOCHALG_ENDOMORPHISM_HPP
#define STOCHALG_ENDOMORPHISM_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "stochalg/rational.hpp"
#include "stochalg/subspace.hpp"
#include "stochalg/words.hpp"

namespace stochalg {

/* All words of length <= cap over an alphabet, in canonical order, with O(1)
 * word -> index lookup. */
class Basis {
public:
    Basis(std::size_t cap, Alphabet alphabet);

    static std::shared_ptr<const Basis> make(std::size_t cap, const Alphabet& alphabet) {
        return std::make_shared<const Basis>(cap, alphabet);
    }

    std::size_t cap() const { return cap_; }
    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t size() const { return words_.size(); }
    const std::vector<Word>& words() const { return words_; }
    const Word& word(std::size_t i) const { return words_[i]; }
    /// Index of w; throws std::out_of_range if w is not in the basis.
    std::size_t index(const Word& w) const;
    bool contains(const Word& w) const;

    friend bool operator==(const Basis& a, const Basis& b) {
        return a.cap_ == b.cap_ && a.alphabet_ == b.alphabet_;
    }

private:
    std::size_t cap_;
    Alphabet alphabet_;
    std::vector<Word> words_;
    std::vector<std::size_t> offsets_;
};

using BasisPtr = std::shared_ptr<const Basis>;

/* A grade-preserving endomorphism stored by its image of every basis word.
 * Every term of image(w) has length |w| and letters from the basis alphabet. */
class GradedEndo {
public:
    explicit GradedEndo(BasisPtr basis);  // the zero map
    GradedEndo(BasisPtr basis, std::vector<WordPoly> images);

    static GradedEndo from_function(BasisPtr basis, const std::function<WordPoly(const Word&)>& f);

    const BasisPtr& basis() const { return basis_; }
    std::size_t cap() const { return basis_->cap(); }
    const Alphabet& alphabet() const { return basis_->alphabet(); }

    const WordPoly& operator()(const Word& w) const { return images_[basis_->index(w)]; }
    const WordPoly& image(std::size_t i) const { return images_[i]; }
    const std::vector<WordPoly>& images() const { return images_; }
    /// Linear extension to a polynomial.
    WordPoly apply(const WordPoly& p) const;

    /// Coefficient of the empty word in X(e); grade preservation makes X(e) a multiple of e.
    Rational empty_value() const;

    GradedEndo& operator+=(const GradedEndo& other);
    GradedEndo& operator-=(const GradedEndo& other);
    GradedEndo& operator*=(const Rational& c);
    friend GradedEndo operator+(GradedEndo a, const GradedEndo& b) { return a += b; }
    friend GradedEndo operator-(GradedEndo a, const GradedEndo& b) { return a -= b; }
    friend GradedEndo operator*(const Rational& c, GradedEndo x) { return x *= c; }
    friend bool operator==(const GradedEndo& a, const GradedEndo& b);

    /// One "w -> WordPoly" line per basis word, canonical order.
    std::string serialize() const;
    static GradedEndo deserialize(BasisPtr basis, std::string_view text);

private:
    void check_compatible(const GradedEndo& other) const;
    void check_invariants() const;

    BasisPtr basis_;
    std::vector<WordPoly> images_;
};

// Basic endomorphisms.
GradedEndo identity_endo(const BasisPtr& basis);
GradedEndo unit_endo(const BasisPtr& basis);             // nu: e -> e, others -> 0
GradedEndo augmented_projector(const BasisPtr& basis);   // J = id - nu
GradedEndo antipode_endo(const BasisPtr& basis);         // S
GradedEndo reverse_endo(const BasisPtr& basis);          // |S|
GradedEndo sign_endo(const BasisPtr& basis);             // D
GradedEndo projection(const BasisPtr& basis, const SubspaceSelector& s);

/// Map composition (X o Y)(w) = X(Y(w)).
GradedEndo compose(const GradedEndo& x, const GradedEndo& y);

GradedEndo convolve(const GradedEndo& x, const GradedEndo& y);
GradedEndo conv_power(const GradedEndo& x, std::size_t k);

/// Inverse in the group {X : X(e) = e}: sum_{k=0}^{cap} (nu - X)^{*k}.
GradedEndo conv_inverse(const GradedEndo& x);

/* f(X) = sum_k c_k (X - center nu)^{*k}. */
struct ConvSeries {
    std::vector<Rational> coefficients;
    Rational center;

    static ConvSeries log(std::size_t order);      // about nu: (-1)^{k+1}/k
    static ConvSeries exp(std::size_t order);      // about 0: 1/k!
    static ConvSeries inverse(std::size_t order);  // about nu: (-1)^k
    static ConvSeries sinhlog(std::size_t order);  // about nu
    static ConvSeries coshlog(std::size_t order);  // about nu
    static ConvSeries sqrt(std::size_t order);     // about nu: binom(1/2, k)
};

/// Throws std::invalid_argument unless X(e) = center * e.
GradedEndo apply_series(const ConvSeries& s, const GradedEndo& x);

GradedEndo log_star(const GradedEndo& x);  // series route, X(e) = e
GradedEndo exp_star(const GradedEndo& x);  // series route, X(e) = 0

/// sinhlog(X) = (X - X^{*-1}) / 2 and coshlog(X) = (X + X^{*-1}) / 2, X(e) = e.
GradedEndo sinhlog(const GradedEndo& x);
GradedEndo coshlog(const GradedEndo& x);
GradedEndo sinhlog_endo(const BasisPtr& basis);
GradedEndo coshlog_endo(const BasisPtr& basis);

/// f(X; eps) = (X - eps X^{*-1}) / 2.
GradedEndo f_epsilon(const GradedEndo& x, const Rational& eps);
GradedEndo f_epsilon_endo(const Rational& eps, const BasisPtr& basis);

/// (nu + Z)^{*1/2} by the binomial series; requires Z(e) = 0.
GradedEndo conv_sqrt_shifted(const GradedEndo& z);

/* h(X, Y) = (X^{*2} + Y)^{*1/2}. The empty-word value c of X^{*2} + Y must be a
 * positive rational square; the principal (positive) root is taken. */
GradedEndo h_star(const GradedEndo& x, const GradedEndo& y);

/// Compositional inverse of f(.; eps): X + h(X, eps nu).
GradedEndo f_inverse(const GradedEndo& x, const Rational& eps);
GradedEndo sinhlog_inverse(const GradedEndo& x);
GradedEndo coshlog_inverse(const GradedEndo& x);

/// Q = f(id; eps) o pi_{>= n+1}. Requires 1 <= n < cap.
GradedEndo pre_remainder(const Rational& eps, std::size_t n, const BasisPtr& basis);

struct Remainder {
    GradedEndo full;        // R = id - f^{-1}(pi_{<=n} o f(id; eps); eps)
    GradedEndo leading;     // R o pi_{n+1}
    GradedEndo predicted;   // 2/(1+eps) Q o pi_{n+1}
    bool leading_law_holds;
};

/// Exact remainder of the truncated-and-inverted f(.; eps) integrator. Throws
/// std::domain_error at eps = -1 and std::invalid_argument for eps < -1.
Remainder remainder_leading(const Rational& eps, std::size_t n, const BasisPtr& basis);

/// Random grade-preserving endomorphism: each image is a sum of up to
/// `terms` random same-length words with integer coefficients in [-3, 3].
GradedEndo random_endo(const BasisPtr& basis, std::mt19937_64& rng, std::size_t terms = 3,
                       bool in_group = false);

}  // namespace stochalg

#endif  // STOCHALG_ENDOMORPHISM_HPP
