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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "stochalg/words.hpp"

namespace stochalg {
namespace {

WordPoly P(const char* text) { return WordPoly::parse(text); }
Word W(const char* text) { return Word::parse(text); }

Word random_word(std::mt19937_64& rng, std::size_t len, int d) {
    std::uniform_int_distribution<int> letter(0, d);
    std::vector<Letter> out(len);
    for (auto& a : out) a = static_cast<Letter>(letter(rng));
    return Word(out);
}

TEST(Word, ParsesAndPrints) {
    EXPECT_EQ(W("120").to_string(), "120");
    EXPECT_TRUE(W("e").empty());
    EXPECT_TRUE(W("").empty());
    EXPECT_EQ(Word().to_string(), "e");
    EXPECT_THROW(W("1a"), std::invalid_argument);
    EXPECT_THROW(W("12345678901234567"), std::length_error);
    EXPECT_EQ(concat(W("12"), W("0")), W("120"));
    EXPECT_EQ(W("120").prefix(2), W("12"));
    EXPECT_EQ(W("120").suffix_from(1), W("20"));
}

TEST(Word, CanonicalOrderIsLengthThenLexicographic) {
    EXPECT_LT(W("2"), W("00"));
    EXPECT_LT(W("01"), W("10"));
    EXPECT_LT(W("e"), W("0"));
}

TEST(Alphabet, ParseAndLetters) {
    EXPECT_EQ(Alphabet::parse("012"), Alphabet(2, true));
    EXPECT_EQ(Alphabet::parse("12"), Alphabet(2, false));
    EXPECT_THROW(Alphabet::parse("13"), std::invalid_argument);
    EXPECT_THROW(Alphabet::parse("0"), std::invalid_argument);
    EXPECT_THROW(Alphabet(10), std::invalid_argument);
    EXPECT_EQ(Alphabet(2, false).size(), 2u);
}

TEST(Shuffle, Examples) {
    EXPECT_EQ(shuffle(W("1"), W("2")), P("1*12 + 1*21"));
    EXPECT_EQ(shuffle(W("1"), W("e")), P("1*1"));
    EXPECT_EQ(shuffle(W("12"), W("3")), P("1*123 + 1*132 + 1*312"));
    EXPECT_EQ(shuffle(W("1"), W("1")), P("2*11"));
}

TEST(Shuffle, PolyExamples) {
    EXPECT_EQ(shuffle_poly(WordPoly(W("1"), Rational(2)), P("1*2")), P("2*12 + 2*21"));
    const WordPoly p = P("1*12 - 1/2*0");
    EXPECT_EQ(shuffle_poly(P("1*e"), p), p);
    EXPECT_EQ(shuffle_poly(P("1*1 + 1*2"), P("1*0")), P("1*10 + 1*01 + 1*20 + 1*02"));
}

TEST(Shuffle, CommutativeAssociativeAndMassConserving) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::size_t> len(0, 3);
    for (int i = 0; i < 200; ++i) {
        const Word u = random_word(rng, len(rng), 2), v = random_word(rng, len(rng), 2), x = random_word(rng, len(rng), 2);
        if (u.size() + v.size() + x.size() > 8) continue;
        EXPECT_EQ(shuffle(u, v), shuffle(v, u));
        EXPECT_EQ(shuffle_poly(shuffle(u, v), x), shuffle_poly(u, shuffle(v, x)));
        EXPECT_EQ(shuffle(u, v).mass(), binomial(Rational(static_cast<std::int64_t>(u.size() + v.size())),
                                                 static_cast<unsigned>(u.size())));
        EXPECT_TRUE(shuffle(u, v).homogeneous(u.size() + v.size()));
    }
}

TEST(Shuffle, IntoMatchesMaterialized) {
    WordPolyBuilder b;
    shuffle_into(b, W("12"), W("01"), Rational(3));
    shuffle_into(b, W("01"), W("12"), Rational(-1));
    EXPECT_EQ(std::move(b).build(), Rational(2) * shuffle(W("12"), W("01")));
}

TEST(Deconcat, Splits) {
    const auto s = deconcat(W("12"));
    ASSERT_EQ(s.size(), 3u);
    EXPECT_EQ(s[0], std::make_pair(W("e"), W("12")));
    EXPECT_EQ(s[1], std::make_pair(W("1"), W("2")));
    EXPECT_EQ(s[2], std::make_pair(W("12"), W("e")));
    EXPECT_EQ(deconcat(W("e")).size(), 1u);
    EXPECT_EQ(deconcat(W("011")).size(), 4u);
}

TEST(WordMaps, AntipodeReverseSign) {
    EXPECT_EQ(antipode(W("12")), P("1*21"));
    EXPECT_EQ(antipode(W("1")), P("-1*1"));
    EXPECT_EQ(antipode(W("e")), P("1*e"));
    EXPECT_EQ(reverse(W("120")), W("021"));
    EXPECT_EQ(reverse(W("e")), W("e"));
    EXPECT_EQ(reverse(W("11")), W("11"));
    EXPECT_EQ(sign(W("12")), P("1*12"));
    EXPECT_EQ(sign(W("1")), P("-1*1"));
    const WordPoly once = sign(W("120"));
    WordPoly twice;
    for (const auto& [w, c] : once) twice += c * sign(w);
    EXPECT_EQ(twice, P("1*120"));
}

TEST(WordMaps, ReversalIsShuffleHomomorphism) {
    for (std::size_t a = 0; a <= 3; ++a)
        for (std::size_t b = 0; b <= 3; ++b)
            for (const auto& u : words_of_length(a, Alphabet(2)))
                for (const auto& v : words_of_length(b, Alphabet(2))) {
                    WordPoly lhs;
                    for (const auto& [w, c] : shuffle(u, v)) lhs += WordPoly(reverse(w), c);
                    ASSERT_EQ(lhs, shuffle(reverse(u), reverse(v))) << u << " " << v;
                }
}

TEST(WordsOfLength, Enumerates) {
    EXPECT_EQ(words_of_length(1, Alphabet(1)), (std::vector<Word>{W("0"), W("1")}));
    EXPECT_EQ(words_of_length(2, Alphabet(1)), (std::vector<Word>{W("00"), W("01"), W("10"), W("11")}));
    EXPECT_EQ(words_of_length(3, Alphabet(2)).size(), 27u);
    EXPECT_EQ(words_of_length(0, Alphabet(2)), (std::vector<Word>{Word()}));
    EXPECT_THROW(words_of_length(12, Alphabet(9), 1000), std::length_error);
}

std::size_t witt(std::size_t n, std::size_t q) {
    auto mobius = [](std::size_t k) {
        int m = 1;
        for (std::size_t p = 2; p * p <= k; ++p)
            if (k % p == 0) {
                k /= p;
                if (k % p == 0) return 0;
                m = -m;
            }
        return k > 1 ? -m : m;
    };
    long long sum = 0;
    for (std::size_t k = 1; k <= n; ++k)
        if (n % k == 0) {
            long long pw = 1;
            for (std::size_t i = 0; i < n / k; ++i) pw *= static_cast<long long>(q);
            sum += mobius(k) * pw;
        }
    return static_cast<std::size_t>(sum / static_cast<long long>(n));
}

TEST(Lyndon, Examples) {
    EXPECT_EQ(lyndon_words(1, Alphabet(1)), (std::vector<Word>{W("0"), W("1")}));
    EXPECT_EQ(lyndon_words(2, Alphabet(1)), (std::vector<Word>{W("01")}));
    EXPECT_EQ(lyndon_words(3, Alphabet(1)), (std::vector<Word>{W("001"), W("011")}));
}

TEST(Lyndon, BruteForceAndWittCount) {
    for (int d = 1; d <= 2; ++d)
        for (std::size_t n = 1; n <= 6; ++n) {
            const auto ly = lyndon_words(n, Alphabet(d));
            std::set<Word> brute;
            for (const auto& w : words_of_length(n, Alphabet(d)))
                if (is_lyndon(w)) brute.insert(w);
            EXPECT_EQ(std::set<Word>(ly.begin(), ly.end()), brute) << d << " " << n;
            EXPECT_EQ(ly.size(), witt(n, static_cast<std::size_t>(d) + 1)) << d << " " << n;
            EXPECT_TRUE(std::is_sorted(ly.begin(), ly.end()));
        }
}

TEST(WordPoly, ParseRoundTripAndArithmetic) {
    const WordPoly p = P("1/2*12 - 1/2*21 + 3*e");
    EXPECT_EQ(WordPoly::parse(p.to_string()), p);
    EXPECT_EQ(P("0"), WordPoly());
    EXPECT_EQ(P("1*12 + 1*12"), P("2*12"));
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ(p.coefficient(W("21")), Rational(-1, 2));
    EXPECT_EQ(p.coefficient(W("11")), Rational(0));
    EXPECT_THROW(P("1*"), std::invalid_argument);
}

}  // namespace
}  // namespace stochalg
