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

#include "stochalg/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace stochalg {

void validate_lemma_hypotheses(int property, const SubspaceSelector& s, const Alphabet& a) {
    if (property < 1 || property > kLemmaProperties)
        throw std::invalid_argument("property must lie in 1.." + std::to_string(kLemmaProperties));
    if (!s.finite()) throw std::invalid_argument("subspace " + s.to_string() + " is infinite; use eq:n or le:n");
    if (s.n < 1) throw std::invalid_argument("subspace length must be at least 1");
    if (property == 8 && s.kind != SubspaceSelector::Kind::exactly)
        throw std::invalid_argument("property 8 holds on S_n = eq:n only, got " + s.to_string());
    if (a.has_drift() && s.kind != SubspaceSelector::Kind::exactly)
        throw std::invalid_argument("alphabet " + a.to_string() + " contains the letter 0: the lemma needs the " +
                                    "graded class subspace eq:" + std::to_string(s.n) + ", got " + s.to_string() +
                                    " (le:n is allowed only for a zero-free alphabet)");
}

VWeight make_weight(const SubspaceSelector& s, const Alphabet& a, std::optional<std::uint64_t> seed) {
    auto words = subspace_words(s, a);
    return seed ? VWeight::random_psd(std::move(words), *seed) : VWeight::identity(std::move(words));
}

LemmaReport check_lemma_property(int property, const SubspaceSelector& s, const Alphabet& a, const VWeight& v,
                                 std::uint64_t endo_seed, std::size_t endo_pairs) {
    validate_lemma_hypotheses(property, s, a);
    LemmaReport report{property, s, a, v.label(), true, {}};
    const auto basis = Basis::make(s.n, a);

    auto expect_equal = [&report](const TPoly& lhs, const TPoly& rhs, const std::string& what) {
        if (report.pass && !(lhs == rhs)) {
            report.pass = false;
            report.witness = what + ": lhs = " + lhs.to_string() + ", rhs = " + rhs.to_string();
        }
        return report.pass;
    };

    const GradedEndo id = identity_endo(basis);
    const GradedEndo rev = reverse_endo(basis);
    const GradedEndo anti = antipode_endo(basis);
    std::mt19937_64 rng(endo_seed);

    switch (property) {
        case 1:
            for (std::size_t k = 0; k < endo_pairs; ++k) {
                const GradedEndo x = random_endo(basis, rng);
                const GradedEndo y = random_endo(basis, rng);
                if (!expect_equal(inner(x, y, s, v), inner(compose(rev, x), compose(rev, y), s, v),
                                  "pair " + std::to_string(k) + " <X,Y> vs <|S|X,|S|Y>"))
                    break;
            }
            break;
        case 2: {
            const TPoly ii = inner(id, id, s, v);
            expect_equal(inner(rev, rev, s, v), ii, "<|S|,|S|> vs <id,id>") &&
                expect_equal(inner(anti, anti, s, v), ii, "<S,S> vs <id,id>");
            break;
        }
        case 3:
            expect_equal(inner(sinhlog_endo(basis), coshlog_endo(basis), s, v), TPoly(), "<sinhlog,coshlog> vs 0");
            break;
        case 4: {
            const GradedEndo sh = sinhlog_endo(basis);
            const GradedEndo ch = coshlog_endo(basis);
            expect_equal(inner(id, id, s, v), inner(sh, sh, s, v) + inner(ch, ch, s, v),
                         "|id|^2 vs |sinhlog|^2 + |coshlog|^2");
            break;
        }
        case 5: {
            const TEndo e = expectation_endo(basis);
            for (std::size_t k = 0; k < endo_pairs; ++k) {
                const TEndo x = lift(random_endo(basis, rng));
                const TEndo ey = compose(e, lift(random_endo(basis, rng)));
                if (!expect_equal(inner(x, ey, s, v), inner(compose(e, x), ey, s, v),
                                  "pair " + std::to_string(k) + " <X,EY> vs <EX,EY>"))
                    break;
            }
            break;
        }
        case 6: {
            const TEndo e = expectation_endo(basis);
            const TEndo ei = compose(e, lift(id));
            const TEndo er = compose(e, lift(rev));
            const TEndo es = compose(e, lift(anti));
            const TPoly base = inner(ei, ei, s, v);
            expect_equal(inner(er, er, s, v), base, "<E|S|,E|S|> vs <E id,E id>") &&
                expect_equal(inner(es, es, s, v), base, "<ES,ES> vs <E id,E id>");
            break;
        }
        case 7: {
            const TEndo e = expectation_endo(basis);
            expect_equal(inner(compose(e, lift(sinhlog_endo(basis))), compose(e, lift(coshlog_endo(basis))), s, v),
                         TPoly(), "<E sinhlog,E coshlog> vs 0");
            break;
        }
        case 8: {
            const GradedEndo jn = conv_power(augmented_projector(basis), s.n);
            expect_equal(inner(rev, jn, s, v), inner(id, jn, s, v), "<|S|,J^n> vs <id,J^n>");
            break;
        }
        default: break;
    }
    return report;
}

std::vector<Rational> default_excess_samples() {
    return {Rational(1, 8), Rational(1, 4), Rational(1, 2), Rational(1)};
}

ExcessReport efficiency_check(std::size_t n, const Rational& eps, const Alphabet& a, const VWeight& v,
                              const std::vector<Rational>& t_samples) {
    if (n < 1) throw std::invalid_argument("efficiency_check: need n >= 1");
    if (eps == Rational(-1))
        throw std::domain_error("efficiency_check: eps = -1 (coshlog) is excluded; the truncated inverse "
                                "degenerates and the integrator suffers order reduction");
    if (eps < Rational(-1)) throw std::invalid_argument("efficiency_check: need eps > -1");
    const auto basis = Basis::make(n + 1, a);
    const auto sel = SubspaceSelector::exactly(n + 1);
    const GradedEndo r = remainder_leading(eps, n, basis).full;
    const GradedEndo id = identity_endo(basis);
    const GradedEndo anti = antipode_endo(basis);

    ExcessReport rep;
    rep.n = n;
    rep.epsilon = eps;
    const TPoly na = inner(id, id, sel, v, true);
    const TPoly ab = inner(id, anti, sel, v, true);
    rep.excess = na - inner(r, r, sel, v, true);
    const Rational one_plus = Rational(1) + eps;
    rep.closed_form = (Rational(2) * eps / (one_plus * one_plus)) * (na + ab);
    rep.match = rep.excess == rep.closed_form;
    rep.sign_ok = true;
    for (const auto& t : t_samples) {
        const Rational val = rep.excess.evaluate(t);
        rep.samples.emplace_back(t, val);
        rep.sign_ok = rep.sign_ok && val.sign() == eps.sign();
    }
    return rep;
}

std::vector<ExcessReport> epsilon_scan(std::size_t n, const Alphabet& a, const std::vector<Rational>& grid,
                                       const VWeight& v, const std::vector<Rational>& t_samples) {
    std::vector<ExcessReport> out;
    out.reserve(grid.size());
    for (const auto& eps : grid) out.push_back(efficiency_check(n, eps, a, v, t_samples));
    return out;
}

Rational argmax_epsilon(const std::vector<ExcessReport>& scan, const Rational& t) {
    if (scan.empty()) throw std::invalid_argument("argmax_epsilon: empty scan");
    const ExcessReport* best = nullptr;
    Rational best_val;
    for (const auto& r : scan) {
        const Rational val = r.excess.evaluate(t);
        if (!best || val > best_val || (val == best_val && r.epsilon < best->epsilon)) {
            best = &r;
            best_val = val;
        }
    }
    return best->epsilon;
}

bool reciprocal_symmetry(const std::vector<ExcessReport>& scan) {
    for (const auto& r : scan) {
        if (r.epsilon.sign() <= 0) continue;
        const Rational inv = Rational(1) / r.epsilon;
        for (const auto& q : scan)
            if (q.epsilon == inv && !(q.excess == r.excess)) return false;
    }
    return true;
}

OddReport odd_n_perturbation(std::size_t n, const Alphabet& a, const VWeight& v) {
    if (n < 1) throw std::invalid_argument("odd_n_perturbation: need n >= 1");
    const auto basis = Basis::make(n + 1, a);
    const auto sel = SubspaceSelector::exactly(n + 1);
    const GradedEndo id = identity_endo(basis);
    const GradedEndo anti = antipode_endo(basis);
    const GradedEndo jn = conv_power(augmented_projector(basis), n + 1);
    const GradedEndo sh = sinhlog_endo(basis);

    OddReport rep;
    rep.n = n;
    rep.linear_term = inner(id - anti, jn, sel, v, true);
    const GradedEndo qp = sh + jn;
    const GradedEndo qm = sh - jn;
    rep.cross_check = Rational(1, 2) * (inner(qp, qp, sel, v, true) - inner(qm, qm, sel, v, true));
    rep.consistent = rep.linear_term == rep.cross_check;
    rep.asserted = n % 2 == 1;
    rep.pass = rep.consistent && (!rep.asserted || rep.linear_term.is_zero());
    return rep;
}

namespace {

struct Running {
    double s1 = 0.0, s2 = 0.0, sa = 0.0;
    void add(double x, double scale) {
        s1 += x;
        s2 += x * x;
        sa += scale;
    }
    double mean(std::size_t p) const { return s1 / static_cast<double>(p); }
    double std_error(std::size_t p) const {
        const double n = static_cast<double>(p);
        const double m = s1 / n;
        return std::sqrt(std::max(0.0, (s2 - n * m * m) / (n - 1.0)) / n);
    }
};

void check_probe(const ProbeParams& p) {
    if (p.paths < 2) throw std::invalid_argument("probe: need at least 2 paths");
    if (!(p.h > 0.0) || p.substeps < 1) throw std::invalid_argument("probe: need h > 0 and substeps >= 1");
}

}  // namespace

std::vector<ProbeStat> shuffle_homomorphism_probe(const std::vector<std::pair<Word, Word>>& pairs,
                                                  const ProbeParams& params) {
    check_probe(params);
    std::size_t grade = 1;
    for (const auto& [u, v] : pairs) grade = std::max(grade, u.size() + v.size());
    const IntegralOracle oracle(params.d, grade);
    std::vector<WordPoly> shuffles;
    for (const auto& [u, v] : pairs) shuffles.push_back(shuffle(u, v));
    std::vector<Running> acc(pairs.size());
    StepSample s;
    for (std::size_t p = 0; p < params.paths; ++p) {
        oracle.simulate(generate_segment(params.h, params.substeps, params.d, {params.seed, 0, p, 0}), s);
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            const double prod = s(pairs[k].first) * s(pairs[k].second);
            double mu = 0.0;
            for (const auto& [w, c] : shuffles[k]) mu += c.to_double() * s(w);
            acc[k].add(prod - mu, std::abs(prod));
        }
    }
    std::vector<ProbeStat> out;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        ProbeStat st{pairs[k].first, pairs[k].second, acc[k].mean(params.paths), acc[k].std_error(params.paths),
                     acc[k].sa / static_cast<double>(params.paths), false};
        st.consistent = std::abs(st.mean) <= 3.0 * st.std_error + 1e-12 * std::max(1.0, st.scale);
        out.push_back(st);
    }
    return out;
}

std::vector<ExpectationStat> integral_expectation_probe(std::size_t max_len, const ProbeParams& params) {
    check_probe(params);
    const IntegralOracle oracle(params.d, max_len);
    const auto& basis = *oracle.basis();
    std::vector<Running> acc(basis.size());
    StepSample s;
    for (std::size_t p = 0; p < params.paths; ++p) {
        oracle.simulate(generate_segment(params.h, params.substeps, params.d, {params.seed, 0, p, 0}), s);
        for (std::size_t i = 1; i < basis.size(); ++i) acc[i].add(s.values[i], 0.0);
    }
    std::vector<ExpectationStat> out;
    for (std::size_t i = 1; i < basis.size(); ++i) {
        ExpectationStat st{basis.word(i), acc[i].mean(params.paths), acc[i].std_error(params.paths),
                           expect_word(basis.word(i)).evaluate(params.h), false};
        st.consistent =
            std::abs(st.mean - st.expected) <= 3.0 * st.std_error + 1e-12 * std::max(1.0, std::abs(st.expected));
        out.push_back(st);
    }
    return out;
}

}  // namespace stochalg
