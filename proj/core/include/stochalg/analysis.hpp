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
// Exact checks of the inner-product lemma, the mean-square excess of the
// f(id; eps) integrators, and Monte Carlo probes of the word-to-integral map.

#ifndef STOCHALG_ANALYSIS_HPP
#define STOCHALG_ANALYSIS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stochalg/expectation.hpp"
#include "stochalg/sde.hpp"

namespace stochalg {

constexpr int kLemmaProperties = 8;

struct LemmaReport {
    int property = 0;
    SubspaceSelector subspace;
    Alphabet alphabet{1};
    std::string weight;  // "id" or the weight seed
    bool pass = false;
    std::string witness;  // first failing comparison, empty on pass
};

/* Throws std::invalid_argument when the property cannot be asserted on the
 * subspace: an alphabet containing 0 requires eq:n, property 8 always requires
 * eq:n, and ge:n is never finite. */
void validate_lemma_hypotheses(int property, const SubspaceSelector& s, const Alphabet& a);

/* Evaluates both sides of property 1..8 as exact polynomials in t:
 *   1  <X,Y> = <|S|X, |S|Y>                  5  <X, EY> = <EX, EY>
 *   2  <|S|,|S|> = <S,S> = <id,id>           6  <E id, E id> = <E|S|, E|S|> = <ES, ES>
 *   3  <sinhlog, coshlog> = 0                7  <E sinhlog, E coshlog> = 0
 *   4  |id|^2 = |sinhlog|^2 + |coshlog|^2    8  <|S|, J^{*n}> = <id, J^{*n}>
 * Properties 1 and 5 are checked on endo_pairs random (X, Y) drawn from endo_seed. */
LemmaReport check_lemma_property(int property, const SubspaceSelector& s, const Alphabet& a, const VWeight& v,
                                 std::uint64_t endo_seed = 0, std::size_t endo_pairs = 10);

/// Identity weight when seed is empty, otherwise VWeight::random_psd.
VWeight make_weight(const SubspaceSelector& s, const Alphabet& a, std::optional<std::uint64_t> seed);

struct ExcessReport {
    std::size_t n = 0;
    Rational epsilon;
    TPoly excess;       // |(id-E) id|^2 - |(id-E) R|^2 on S_{n+1}
    TPoly closed_form;  // 2 eps/(1+eps)^2 (|(id-E) id|^2 + <(id-E) id, (id-E) S>)
    bool match = false;
    std::vector<std::pair<Rational, Rational>> samples;  // (t, excess(t))
    bool sign_ok = false;  // excess(t) has the sign of eps at every sample
};

std::vector<Rational> default_excess_samples();  // 1/8, 1/4, 1/2, 1

/// Throws std::domain_error at eps = -1 and std::invalid_argument for eps < -1 or n < 1.
ExcessReport efficiency_check(std::size_t n, const Rational& eps, const Alphabet& a, const VWeight& v,
                              const std::vector<Rational>& t_samples = default_excess_samples());

std::vector<ExcessReport> epsilon_scan(std::size_t n, const Alphabet& a, const std::vector<Rational>& grid,
                                       const VWeight& v,
                                       const std::vector<Rational>& t_samples = default_excess_samples());

/// Grid value with the largest excess at t; ties resolve to the smallest eps.
Rational argmax_epsilon(const std::vector<ExcessReport>& scan, const Rational& t);

/// excess(eps) == excess(1/eps) exactly for every grid pair (eps, 1/eps).
bool reciprocal_symmetry(const std::vector<ExcessReport>& scan);

struct OddReport {
    std::size_t n = 0;
    TPoly linear_term;  // <(id-E)(id-S), (id-E) J^{*(n+1)}> on S_{n+1}
    TPoly cross_check;  // (|(id-E)Q_+|^2 - |(id-E)Q_-|^2) / 2, Q_+- = sinhlog +- J^{*(n+1)}
    bool consistent = false;
    bool asserted = false;  // true for odd n
    bool pass = false;      // consistent, and zero when asserted
};

OddReport odd_n_perturbation(std::size_t n, const Alphabet& a, const VWeight& v);

struct ProbeParams {
    int d = 2;
    double h = 1.0;
    std::size_t substeps = 100;
    std::size_t paths = 10000;
    std::uint64_t seed = 0;
};

struct ProbeStat {
    Word u, v;
    double mean = 0.0;  // of J_u J_v - J_{u sh v}
    double std_error = 0.0;
    double scale = 0.0;  // mean |J_u J_v|
    bool consistent = false;
};

/* Monte Carlo check that the word-to-integral map is a shuffle homomorphism:
 * |mean| <= 3 std_error + 1e-12 scale for every pair. */
std::vector<ProbeStat> shuffle_homomorphism_probe(const std::vector<std::pair<Word, Word>>& pairs,
                                                  const ProbeParams& params);

struct ExpectationStat {
    Word w;
    double mean = 0.0;
    double std_error = 0.0;
    double expected = 0.0;
    bool consistent = false;
};

/// MC mean of J_w against expect_word(w)(h), every word with 1 <= |w| <= max_len.
std::vector<ExpectationStat> integral_expectation_probe(std::size_t max_len, const ProbeParams& params);

}  // namespace stochalg

#endif  // STOCHALG_ANALYSIS_HPP
