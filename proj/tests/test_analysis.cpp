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

#include "stochalg/analysis.hpp"

namespace stochalg {
namespace {

Word W(const char* text) { return Word::parse(text); }
const TPoly t = TPoly::t();

TPoly poly(std::initializer_list<Rational> c) {
    TPoly p;
    std::size_t k = 0;
    for (const auto& x : c) p.add_term(x, k++);
    return p;
}

TEST(Lemma, HypothesisValidation) {
    const Alphabet with0(2), no0(2, false);
    EXPECT_NO_THROW(validate_lemma_hypotheses(3, SubspaceSelector::exactly(2), with0));
    EXPECT_THROW(validate_lemma_hypotheses(3, SubspaceSelector::at_most(2), with0), std::invalid_argument);
    EXPECT_NO_THROW(validate_lemma_hypotheses(3, SubspaceSelector::at_most(2), no0));
    EXPECT_THROW(validate_lemma_hypotheses(8, SubspaceSelector::at_most(2), no0), std::invalid_argument);
    EXPECT_THROW(validate_lemma_hypotheses(1, SubspaceSelector::at_least(1), no0), std::invalid_argument);
    EXPECT_THROW(validate_lemma_hypotheses(0, SubspaceSelector::exactly(1), no0), std::invalid_argument);
    EXPECT_THROW(validate_lemma_hypotheses(9, SubspaceSelector::exactly(1), no0), std::invalid_argument);
    EXPECT_THROW(validate_lemma_hypotheses(1, SubspaceSelector::exactly(0), no0), std::invalid_argument);
}

TEST(Lemma, AllPropertiesOnEqualLengthClasses) {
    for (int d = 1; d <= 2; ++d)
        for (std::size_t n = 1; n <= 3; ++n) {
            const Alphabet a(d);
            const auto s = SubspaceSelector::exactly(n);
            for (const std::optional<std::uint64_t> seed : {std::optional<std::uint64_t>(), std::optional<std::uint64_t>(7)}) {
                const auto v = make_weight(s, a, seed);
                for (int p = 1; p <= kLemmaProperties; ++p) {
                    const auto r = check_lemma_property(p, s, a, v);
                    EXPECT_TRUE(r.pass) << "p=" << p << " n=" << n << " d=" << d << " " << r.witness;
                    EXPECT_TRUE(r.witness.empty());
                }
            }
        }
}

TEST(Lemma, ZeroFreeAlphabetOnTruncatedClass) {
    const Alphabet a(2, false);
    const auto s = SubspaceSelector::at_most(3);
    const auto v = make_weight(s, a, 5);
    for (int p = 1; p <= 7; ++p) EXPECT_TRUE(check_lemma_property(p, s, a, v).pass) << p;
}

TEST(Lemma, PropertyFourPythagoras) {
    const Alphabet a(1);
    const auto s = SubspaceSelector::exactly(1);
    const auto b = Basis::make(1, a);
    const auto v = make_weight(s, a, std::nullopt);
    EXPECT_EQ(norm_squared(identity_endo(b), s, v), t + t * t);
    EXPECT_EQ(norm_squared(sinhlog_endo(b), s, v) + norm_squared(coshlog_endo(b), s, v), t + t * t);
}

TEST(Excess, EpsilonOneClosedForm) {
    const Alphabet a(2);
    const auto v = make_weight(SubspaceSelector::exactly(2), a, std::nullopt);
    const auto r = efficiency_check(1, Rational(1), a, v);
    EXPECT_TRUE(r.match);
    EXPECT_TRUE(r.sign_ok);
    EXPECT_EQ(r.excess, poly({0, 0, Rational(3, 2), 1}));
    const auto neg = efficiency_check(1, Rational(-1, 2), a, v);
    EXPECT_TRUE(neg.match);
    EXPECT_TRUE(neg.sign_ok);
    EXPECT_EQ(neg.excess, poly({0, 0, -12, -8}));
    for (const auto& [tv, e] : neg.samples) EXPECT_LT(e.sign(), 0) << tv;
}

TEST(Excess, VanishesAtZero) {
    const Alphabet a(2);
    for (std::size_t n = 1; n <= 2; ++n) {
        const auto v = make_weight(SubspaceSelector::exactly(n + 1), a, 3);
        const auto r = efficiency_check(n, Rational(0), a, v);
        EXPECT_TRUE(r.excess.is_zero());
        EXPECT_TRUE(r.match);
        EXPECT_TRUE(r.sign_ok);
    }
}

TEST(Excess, RejectsCoshlogAndBelow) {
    const Alphabet a(1);
    const auto v = make_weight(SubspaceSelector::exactly(2), a, std::nullopt);
    EXPECT_THROW(efficiency_check(1, Rational(-1), a, v), std::domain_error);
    EXPECT_THROW(efficiency_check(1, Rational(-3, 2), a, v), std::invalid_argument);
    EXPECT_THROW(efficiency_check(0, Rational(1), a, v), std::invalid_argument);
}

TEST(Excess, ScanArgmaxAndReciprocalSymmetry) {
    const Alphabet a(2);
    const auto v = make_weight(SubspaceSelector::exactly(2), a, std::nullopt);
    const std::vector<Rational> grid{Rational(1, 4), Rational(1, 2), Rational(1), Rational(2), Rational(4)};
    const auto scan = epsilon_scan(1, a, grid, v);
    ASSERT_EQ(scan.size(), grid.size());
    for (const auto& r : scan) EXPECT_TRUE(r.match && r.sign_ok) << r.epsilon;
    EXPECT_EQ(scan[0].excess, poly({0, 0, Rational(24, 25), Rational(16, 25)}));
    EXPECT_EQ(scan[0].excess, scan[4].excess);
    EXPECT_TRUE(reciprocal_symmetry(scan));
    for (const auto& tv : default_excess_samples()) EXPECT_EQ(argmax_epsilon(scan, tv), Rational(1));
    const auto single = epsilon_scan(1, a, {Rational(1)}, v);
    EXPECT_EQ(argmax_epsilon(single, Rational(1)), Rational(1));
}

TEST(OddN, LinearTermVanishesForOddN) {
    for (int d = 1; d <= 2; ++d)
        for (const std::size_t n : {std::size_t(1), std::size_t(3)}) {
            const Alphabet a(d);
            const auto v = make_weight(SubspaceSelector::exactly(n + 1), a, 2);
            const auto r = odd_n_perturbation(n, a, v);
            EXPECT_TRUE(r.asserted);
            EXPECT_TRUE(r.consistent);
            EXPECT_TRUE(r.linear_term.is_zero()) << r.linear_term;
            EXPECT_TRUE(r.pass);
        }
}

TEST(OddN, EvenNIsReportedNotAsserted) {
    const Alphabet a(1);
    const auto v = make_weight(SubspaceSelector::exactly(3), a, std::nullopt);
    const auto r = odd_n_perturbation(2, a, v);
    EXPECT_FALSE(r.asserted);
    EXPECT_TRUE(r.consistent);
    EXPECT_EQ(r.linear_term, poly({0, 0, 0, 5, 2, 1}));
}

TEST(Probe, ShuffleHomomorphismConsistency) {
    ProbeParams p;
    p.paths = 2000;
    const auto stats =
        shuffle_homomorphism_probe({{W("1"), W("1")}, {W("1"), W("2")}, {W("e"), W("12")}, {W("01"), W("2")}}, p);
    ASSERT_EQ(stats.size(), 4u);
    for (const auto& s : stats) EXPECT_TRUE(s.consistent) << s.u << " " << s.v << " " << s.mean << " " << s.std_error;
    EXPECT_EQ(stats[2].mean, 0.0);
}

TEST(Probe, ExpectationsOfShortWords) {
    ProbeParams p;
    p.paths = 4000;
    const auto stats = integral_expectation_probe(2, p);
    EXPECT_EQ(stats.size(), 3u + 9u);
    for (const auto& s : stats) EXPECT_TRUE(s.consistent) << s.w << " " << s.mean << " vs " << s.expected;
}

}  // namespace
}  // namespace stochalg
