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
// Words over the alphabet {0,1,...,d} and the shuffle / deconcatenation
// operations on them.

#ifndef STOCHALG_WORDS_HPP
#define STOCHALG_WORDS_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "stochalg/rational.hpp"

namespace stochalg {

using Letter = std::uint8_t;

/* The letter set {0,...,d} (with drift) or {1,...,d} (drift-free). Letter 0 is
 * the time integral W^0_t = t. d is capped at 9 so words print as digit strings. */
class Alphabet {
public:
    static constexpr int kMaxLetter = 9;

    explicit Alphabet(int d, bool with_drift = true);

    /// Parses a digit string: "012" is {0,1,2}, "12" is {1,2}. Must be contiguous.
    static Alphabet parse(std::string_view digits);

    int d() const { return d_; }
    bool has_drift() const { return with_drift_; }
    Letter first() const { return with_drift_ ? 0 : 1; }
    std::size_t size() const { return static_cast<std::size_t>(d_) + (with_drift_ ? 1 : 0); }
    bool contains(Letter a) const { return a >= first() && a <= d_; }
    std::vector<Letter> letters() const;
    std::string to_string() const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    int d_;
    bool with_drift_;
};

/* A word of at most 16 letters packed four bits per letter; the first letter
 * occupies the most significant used nibble, so for words of equal length the
 * packed integer order is lexicographic order. */
class Word {
public:
    static constexpr std::size_t kMaxLength = 16;

    Word() = default;
    Word(std::initializer_list<Letter> letters);
    explicit Word(const std::vector<Letter>& letters);

    /// Digit-string form; "e" (or "") is the empty word.
    static Word parse(std::string_view text);
    static Word letter(Letter a);
    /// Inverse of packed(); letters beyond len are ignored.
    static Word from_packed(std::uint64_t bits, std::size_t len);

    std::size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }
    Letter operator[](std::size_t i) const {
        return static_cast<Letter>((bits_ >> (4 * (len_ - 1 - i))) & 0xF);
    }
    std::uint64_t packed() const { return bits_; }

    Word prefix(std::size_t n) const;
    Word suffix_from(std::size_t start) const;
    Word reversed() const;
    Word appended(Letter a) const;
    std::vector<Letter> letters() const;
    std::string to_string() const;

    friend Word concat(const Word& u, const Word& v);
    friend bool operator==(const Word&, const Word&) = default;
    /// Canonical order: length first, then lexicographic.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
        if (auto c = a.len_ <=> b.len_; c != 0) return c;
        return a.bits_ <=> b.bits_;
    }

private:
    Word(std::uint64_t bits, std::uint8_t len) : bits_(bits), len_(len) {}

    std::uint64_t bits_ = 0;
    std::uint8_t len_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept {
        std::uint64_t x = w.packed() * 0x9E3779B97F4A7C15ull + w.size();
        x ^= x >> 31;
        x *= 0xBF58476D1CE4E5B9ull;
        return static_cast<std::size_t>(x ^ (x >> 29));
    }
};

/* Finite linear combination of words with rational coefficients, stored as a
 * vector of terms sorted in canonical word order with no zero coefficients. */
class WordPoly {
public:
    using Term = std::pair<Word, Rational>;

    WordPoly() = default;
    WordPoly(const Word& w);  // NOLINT: a word is the polynomial 1*w
    WordPoly(const Word& w, Rational c);

    /// Builds from arbitrary (possibly repeated, possibly zero) terms.
    static WordPoly from_terms(std::vector<Term> terms);
    /// Parses the text form produced by to_string; "0" is the zero polynomial.
    static WordPoly parse(std::string_view text);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    Rational coefficient(const Word& w) const;
    /// Sum of all coefficients.
    Rational mass() const;
    /// True when every term has length n.
    bool homogeneous(std::size_t n) const;

    WordPoly& operator+=(const WordPoly& other);
    WordPoly& operator-=(const WordPoly& other);
    WordPoly& operator*=(const Rational& c);
    WordPoly operator-() const;
    friend WordPoly operator+(WordPoly a, const WordPoly& b) { return a += b; }
    friend WordPoly operator-(WordPoly a, const WordPoly& b) { return a -= b; }
    friend WordPoly operator*(const Rational& c, WordPoly p) { return p *= c; }
    friend WordPoly operator*(WordPoly p, const Rational& c) { return p *= c; }

    friend bool operator==(const WordPoly&, const WordPoly&) = default;

    /// "c1*w1 + c2*w2 - c3*w3"; coefficients always printed, words as digit strings.
    std::string to_string() const;

private:
    std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const WordPoly& p);

/* Hash-map accumulator for building a WordPoly from many contributions. */
class WordPolyBuilder {
public:
    void add(const Word& w, const Rational& c);
    void add(const WordPoly& p, const Rational& scale = Rational(1));
    WordPoly build() &&;

private:
    std::vector<WordPoly::Term> terms_;
    std::unordered_map<Word, std::size_t, WordHash> index_;
};

/// Every order-preserving interleaving of u and v, with multiplicity.
WordPoly shuffle(const Word& u, const Word& v);
/// Bilinear extension of shuffle.
WordPoly shuffle_poly(const WordPoly& p, const WordPoly& q);
/// Adds scale * (u shuffle v) into the builder without materializing it.
void shuffle_into(WordPolyBuilder& out, const Word& u, const Word& v, const Rational& scale);

/// All |w|+1 splits w = uv, ordered by increasing |u|.
std::vector<std::pair<Word, Word>> deconcat(const Word& w);

/// S(a1...an) = (-1)^n an...a1.
WordPoly antipode(const Word& w);
/// |S|(a1...an) = an...a1.
Word reverse(const Word& w);
/// D(w) = (-1)^|w| w.
WordPoly sign(const Word& w);

/// All words of length n over the alphabet, lexicographic. Throws
/// std::length_error when the count exceeds max_count.
std::vector<Word> words_of_length(std::size_t n, const Alphabet& alphabet,
                                  std::size_t max_count = 1u << 22);

/// Lyndon words of length exactly n, lexicographic (Duval's successor iteration).
std::vector<Word> lyndon_words(std::size_t n, const Alphabet& alphabet);

/// Reference check: w is strictly smaller than every proper rotation.
bool is_lyndon(const Word& w);

}  // namespace stochalg

#endif  // STOCHALG_WORDS_HPP
