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

#include "stochalg/words.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace stochalg {

// ---------------------------------------------------------------- Alphabet

Alphabet::Alphabet(int d, bool with_drift) : d_(d), with_drift_(with_drift) {
    if (d < 1 || d > kMaxLetter)
        throw std::invalid_argument("Alphabet: d must lie in 1..9, got " + std::to_string(d));
}

Alphabet Alphabet::parse(std::string_view digits) {
    if (digits.empty()) throw std::invalid_argument("Alphabet: empty digit string");
    if (digits.size() > 10) throw std::invalid_argument("Alphabet: more than 10 letters");
    std::vector<int> v;
    for (char c : digits) {
        if (c < '0' || c > '9') throw std::invalid_argument("Alphabet: non-digit letter");
        v.push_back(c - '0');
    }
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] != v[i - 1] + 1)
            throw std::invalid_argument("Alphabet: letters must be contiguous and increasing");
    if (v.front() > 1) throw std::invalid_argument("Alphabet: must start at 0 or 1");
    return Alphabet(v.back(), v.front() == 0);
}

std::vector<Letter> Alphabet::letters() const {
    std::vector<Letter> out;
    for (int a = first(); a <= d_; ++a) out.push_back(static_cast<Letter>(a));
    return out;
}

std::string Alphabet::to_string() const {
    std::string s;
    for (Letter a : letters()) s.push_back(static_cast<char>('0' + a));
    return s;
}

// -------------------------------------------------------------------- Word

Word::Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}

Word::Word(const std::vector<Letter>& letters) {
    if (letters.size() > kMaxLength) throw std::length_error("Word: longer than 16 letters");
    for (Letter a : letters) {
        if (a > 15) throw std::invalid_argument("Word: letter out of range");
        bits_ = (bits_ << 4) | a;
    }
    len_ = static_cast<std::uint8_t>(letters.size());
}

Word Word::parse(std::string_view text) {
    if (text == "e" || text.empty()) return Word();
    std::vector<Letter> v;
    for (char c : text) {
        if (c < '0' || c > '9') throw std::invalid_argument("Word::parse: bad letter in '" + std::string(text) + "'");
        v.push_back(static_cast<Letter>(c - '0'));
    }
    return Word(v);
}

Word Word::letter(Letter a) { return Word(a, 1); }

Word Word::from_packed(std::uint64_t bits, std::size_t len) {
    if (len > kMaxLength) throw std::length_error("Word: longer than 16 letters");
    const std::uint64_t mask = len == 16 ? ~0ull : ((1ull << (4 * len)) - 1);
    return Word(bits & mask, static_cast<std::uint8_t>(len));
}

Word Word::prefix(std::size_t n) const {
    if (n >= len_) return *this;
    return Word(bits_ >> (4 * (len_ - n)), static_cast<std::uint8_t>(n));
}

Word Word::suffix_from(std::size_t start) const {
    if (start >= len_) return Word();
    const std::size_t n = len_ - start;
    const std::uint64_t mask = n == 16 ? ~0ull : ((1ull << (4 * n)) - 1);
    return Word(bits_ & mask, static_cast<std::uint8_t>(n));
}

Word Word::reversed() const {
    std::uint64_t r = 0;
    std::uint64_t b = bits_;
    for (std::size_t i = 0; i < len_; ++i) {
        r = (r << 4) | (b & 0xF);
        b >>= 4;
    }
    return Word(r, len_);
}

Word Word::appended(Letter a) const {
    if (len_ >= kMaxLength) throw std::length_error("Word: longer than 16 letters");
    return Word((bits_ << 4) | a, static_cast<std::uint8_t>(len_ + 1));
}

std::vector<Letter> Word::letters() const {
    std::vector<Letter> v(len_);
    for (std::size_t i = 0; i < len_; ++i) v[i] = (*this)[i];
    return v;
}

std::string Word::to_string() const {
    if (len_ == 0) return "e";
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i) s[i] = static_cast<char>('0' + (*this)[i]);
    return s;
}

Word concat(const Word& u, const Word& v) {
    if (u.len_ + v.len_ > Word::kMaxLength) throw std::length_error("Word: longer than 16 letters");
    return Word((u.bits_ << (4 * v.len_)) | v.bits_, static_cast<std::uint8_t>(u.len_ + v.len_));
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.to_string(); }

// ---------------------------------------------------------------- WordPoly

WordPoly::WordPoly(const Word& w) : terms_{{w, Rational(1)}} {}

WordPoly::WordPoly(const Word& w, Rational c) {
    if (!c.is_zero()) terms_.emplace_back(w, std::move(c));
}

WordPoly WordPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    WordPoly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == t.first)
            p.terms_.back().second += t.second;
        else
            p.terms_.push_back(std::move(t));
    }
    std::erase_if(p.terms_, [](const Term& t) { return t.second.is_zero(); });
    return p;
}

WordPoly WordPoly::parse(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\t'; }), s.end());
    if (s.empty() || s == "0") return WordPoly();
    std::vector<Term> terms;
    std::size_t pos = 0;
    while (pos < s.size()) {
        int sgn = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sgn = s[pos] == '-' ? -1 : 1;
            ++pos;
        }
        const std::size_t next = s.find_first_of("+-", pos);
        const std::string term = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        const auto star = term.find('*');
        if (star == std::string::npos || star + 1 == term.size())
            throw std::invalid_argument("WordPoly::parse: expected c*w in '" + term + "'");
        Rational c = Rational::parse(term.substr(0, star));
        if (sgn < 0) c = -c;
        terms.emplace_back(Word::parse(term.substr(star + 1)), std::move(c));
        pos = next == std::string::npos ? s.size() : next;
    }
    return from_terms(std::move(terms));
}

Rational WordPoly::coefficient(const Word& w) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                               [](const Term& t, const Word& key) { return t.first < key; });
    return (it != terms_.end() && it->first == w) ? it->second : Rational(0);
}

Rational WordPoly::mass() const {
    Rational m;
    for (const auto& [w, c] : terms_) m += c;
    return m;
}

bool WordPoly::homogeneous(std::size_t n) const {
    return std::all_of(terms_.begin(), terms_.end(), [n](const Term& t) { return t.first.size() == n; });
}

WordPoly& WordPoly::operator+=(const WordPoly& other) {
    if (other.terms_.empty()) return *this;
    std::vector<Term> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
        if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            merged.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->first < a->first) {
            merged.push_back(*b++);
        } else {
            Rational c = a->second + b->second;
            if (!c.is_zero()) merged.emplace_back(a->first, std::move(c));
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

WordPoly& WordPoly::operator-=(const WordPoly& other) { return *this += -other; }

WordPoly& WordPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
}

WordPoly WordPoly::operator-() const {
    WordPoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

std::string WordPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        const bool neg = c.sign() < 0;
        if (first)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        s += (neg ? -c : c).to_string();
        s += "*";
        s += w.to_string();
        first = false;
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const WordPoly& p) { return os << p.to_string(); }

void WordPolyBuilder::add(const Word& w, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = index_.try_emplace(w, terms_.size());
    if (inserted)
        terms_.emplace_back(w, c);
    else
        terms_[it->second].second += c;
}

void WordPolyBuilder::add(const WordPoly& p, const Rational& scale) {
    if (scale.is_zero()) return;
    for (const auto& [w, c] : p) add(w, scale.is_one() ? c : c * scale);
}

WordPoly WordPolyBuilder::build() && { return WordPoly::from_terms(std::move(terms_)); }

// --------------------------------------------------------------- shuffles

namespace {

// Packed words of every interleaving (with repetition), sorted.
std::vector<std::uint64_t> interleavings(const Word& u, const Word& v) {
    const std::size_t a = u.size();
    const std::size_t n = a + v.size();
    if (n > Word::kMaxLength) throw std::length_error("shuffle: result longer than 16 letters");
    std::vector<std::uint64_t> out;
    if (a == 0 || a == n) {
        out.push_back(a == 0 ? v.packed() : u.packed());
        return out;
    }
    // Gosper's hack over n-bit masks with a set bits; bit (n-1-i) set means
    // position i takes the next letter of u.
    std::uint64_t mask = (1ull << a) - 1;
    const std::uint64_t limit = 1ull << n;
    while (mask < limit) {
        std::uint64_t bits = 0;
        std::size_t iu = 0, iv = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const bool from_u = (mask >> (n - 1 - i)) & 1u;
            const Letter c = from_u ? u[iu++] : v[iv++];
            bits = (bits << 4) | c;
        }
        out.push_back(bits);
        const std::uint64_t low = mask & (~mask + 1);
        const std::uint64_t ripple = mask + low;
        mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

void shuffle_into(WordPolyBuilder& out, const Word& u, const Word& v, const Rational& scale) {
    const auto all = interleavings(u, v);
    const std::size_t n = u.size() + v.size();
    for (std::size_t i = 0; i < all.size();) {
        std::size_t j = i;
        while (j < all.size() && all[j] == all[i]) ++j;
        const Rational mult(static_cast<std::int64_t>(j - i));
        out.add(Word::from_packed(all[i], n), j - i == 1 ? scale : scale * mult);
        i = j;
    }
}

WordPoly shuffle(const Word& u, const Word& v) {
    WordPolyBuilder b;
    shuffle_into(b, u, v, Rational(1));
    return std::move(b).build();
}

WordPoly shuffle_poly(const WordPoly& p, const WordPoly& q) {
    WordPolyBuilder b;
    for (const auto& [u, cu] : p)
        for (const auto& [v, cv] : q) shuffle_into(b, u, v, cu * cv);
    return std::move(b).build();
}

std::vector<std::pair<Word, Word>> deconcat(const Word& w) {
    std::vector<std::pair<Word, Word>> out;
    out.reserve(w.size() + 1);
    for (std::size_t i = 0; i <= w.size(); ++i) out.emplace_back(w.prefix(i), w.suffix_from(i));
    return out;
}

WordPoly antipode(const Word& w) { return WordPoly(w.reversed(), Rational(w.size() % 2 == 0 ? 1 : -1)); }

Word reverse(const Word& w) { return w.reversed(); }

WordPoly sign(const Word& w) { return WordPoly(w, Rational(w.size() % 2 == 0 ? 1 : -1)); }

std::vector<Word> words_of_length(std::size_t n, const Alphabet& alphabet, std::size_t max_count) {
    if (n > Word::kMaxLength) throw std::length_error("words_of_length: longer than 16 letters");
    std::size_t count = 1;
    for (std::size_t i = 0; i < n; ++i) {
        count *= alphabet.size();
        if (count > max_count) throw std::length_error("words_of_length: basis exceeds budget");
    }
    const auto letters = alphabet.letters();
    std::vector<Word> out;
    out.reserve(count);
    std::vector<std::size_t> digits(n, 0);
    for (std::size_t k = 0; k < count; ++k) {
        std::vector<Letter> w(n);
        for (std::size_t i = 0; i < n; ++i) w[i] = letters[digits[i]];
        out.emplace_back(w);
        for (std::size_t i = n; i-- > 0;) {
            if (++digits[i] < letters.size()) break;
            digits[i] = 0;
        }
    }
    return out;
}

std::vector<Word> lyndon_words(std::size_t n, const Alphabet& alphabet) {
    if (n == 0) throw std::invalid_argument("lyndon_words: n must be at least 1");
    const int lo = alphabet.first();
    const int hi = alphabet.d();
    std::vector<Word> out;
    // Duval: successor of a prefix-of-Lyndon word w is obtained by repeating w
    // to length n, stripping trailing maximal letters and bumping the last one.
    std::vector<int> w{lo};
    while (!w.empty()) {
        if (w.size() == n) {
            std::vector<Letter> letters(w.begin(), w.end());
            out.emplace_back(letters);
        }
        const std::size_t m = w.size();
        while (w.size() < n) w.push_back(w[w.size() - m]);
        while (!w.empty() && w.back() == hi) w.pop_back();
        if (!w.empty()) ++w.back();
    }
    return out;
}

bool is_lyndon(const Word& w) {
    if (w.empty()) return false;
    const auto v = w.letters();
    for (std::size_t r = 1; r < v.size(); ++r) {
        std::vector<Letter> rot(v.begin() + static_cast<std::ptrdiff_t>(r), v.end());
        rot.insert(rot.end(), v.begin(), v.begin() + static_cast<std::ptrdiff_t>(r));
        if (!(v < rot)) return false;
    }
    return true;
}

}  // namespace stochalg
