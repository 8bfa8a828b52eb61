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

// Acceptance suite: one PASS/FAIL line per criterion, detail lines indented.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "stochalg/analysis.hpp"
#include "stochalg/bench_config.hpp"
#include "stochalg/endomorphism.hpp"

using namespace stochalg;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::vector<std::string> detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail.push_back("failed: " + what);
        }
    }
    void note(const std::string& what) { detail.push_back(what); }
};

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Outcome antipode_suite() {
    Outcome o;
    for (int d = 1; d <= 2; ++d) {
        const auto b = Basis::make(6, Alphabet(d));
        const auto id = identity_endo(b), s = antipode_endo(b), nu = unit_endo(b);
        o.require(convolve(s, id) == nu, "S*id = nu, d=" + std::to_string(d));
        o.require(convolve(id, s) == nu, "id*S = nu, d=" + std::to_string(d));
        o.require(apply_series(ConvSeries::inverse(6), id) == s, "S series, d=" + std::to_string(d));
        o.require(apply_series(ConvSeries::sinhlog(6), id) == Rational(1, 2) * (id - s),
                  "sinhlog series, d=" + std::to_string(d));
        o.note("d=" + std::to_string(d) + ": " + std::to_string(b->size()) + " basis words");
    }
    return o;
}

Outcome lemma_suite() {
    Outcome o;
    std::size_t checks = 0;
    auto run = [&](const SubspaceSelector& s, const Alphabet& a, int max_property) {
        for (std::uint64_t k = 0; k <= 20; ++k) {
            const VWeight v = make_weight(s, a, k == 0 ? std::optional<std::uint64_t>() : k);
            for (int p = 1; p <= max_property; ++p) {
                const auto r = check_lemma_property(p, s, a, v);
                ++checks;
                o.require(r.pass, "property " + std::to_string(p) + " on " + s.to_string() + " alphabet " +
                                      a.to_string() + " weight " + v.label() + ": " + r.witness);
            }
        }
    };
    for (int d = 1; d <= 2; ++d)
        for (std::size_t n = 1; n <= 3; ++n) run(SubspaceSelector::exactly(n), Alphabet(d), 8);
    run(SubspaceSelector::at_most(3), Alphabet(2, false), 7);
    o.note(std::to_string(checks) + " exact checks");
    return o;
}

Outcome remainder_law() {
    Outcome o;
    for (int d = 1; d <= 2; ++d) {
        const auto b = Basis::make(4, Alphabet(d));
        for (const Rational eps : {Rational(1, 2), Rational(1), Rational(2)})
            for (std::size_t n = 1; n <= 2; ++n) {
                const auto r = remainder_leading(eps, n, b);
                o.require(r.leading == r.predicted && r.leading_law_holds,
                          "eps=" + eps.to_string() + " n=" + std::to_string(n) + " d=" + std::to_string(d));
            }
    }
    return o;
}

Outcome excess_formula() {
    Outcome o;
    const std::vector<Rational> grid{Rational(1, 4), Rational(1, 2), Rational(1), Rational(2), Rational(4)};
    const std::vector<Rational> negative{Rational(-3, 4), Rational(-1, 2), Rational(-1, 4)};
    for (int d = 1; d <= 2; ++d)
        for (std::size_t n = 1; n <= 2; ++n)
            for (std::uint64_t k = 0; k <= 3; ++k) {
                const Alphabet a(d);
                const auto sel = SubspaceSelector::exactly(n + 1);
                const VWeight v = make_weight(sel, a, k == 0 ? std::optional<std::uint64_t>() : k);
                const std::string where = "n=" + std::to_string(n) + " d=" + std::to_string(d) + " weight " + v.label();
                std::vector<Rational> all = grid;
                all.push_back(Rational(0));
                all.insert(all.end(), negative.begin(), negative.end());
                const auto scan = epsilon_scan(n, a, all, v);
                for (const auto& r : scan) {
                    o.require(r.match, "closed form at eps=" + r.epsilon.to_string() + " " + where);
                    o.require(r.sign_ok, "sign at eps=" + r.epsilon.to_string() + " " + where);
                    if (r.epsilon.is_zero()) o.require(r.excess.is_zero(), "zero excess at eps=0 " + where);
                }
                const auto positive = epsilon_scan(n, a, grid, v);
                for (const auto& t : default_excess_samples())
                    o.require(argmax_epsilon(positive, t) == Rational(1), "argmax at t=" + t.to_string() + " " + where);
                o.require(reciprocal_symmetry(positive), "eps <-> 1/eps symmetry " + where);
            }
    const auto one = efficiency_check(1, Rational(1), Alphabet(2),
                                      make_weight(SubspaceSelector::exactly(2), Alphabet(2), std::nullopt));
    o.note("eps=1 n=1 d=2 identity weight: excess = " + one.excess.to_string());
    return o;
}

Outcome odd_n() {
    Outcome o;
    for (int d = 1; d <= 2; ++d)
        for (const std::size_t n : {std::size_t(1), std::size_t(3)})
            for (std::uint64_t k = 0; k <= 20; ++k) {
                const Alphabet a(d);
                const VWeight v = make_weight(SubspaceSelector::exactly(n + 1), a,
                                              k == 0 ? std::optional<std::uint64_t>() : k);
                const auto r = odd_n_perturbation(n, a, v);
                o.require(r.pass && r.linear_term.is_zero(), "n=" + std::to_string(n) + " d=" + std::to_string(d) +
                                                                  " weight " + v.label() + ": " +
                                                                  r.linear_term.to_string());
            }
    return o;
}

Outcome eulerian() {
    Outcome o;
    for (int d = 1; d <= 2; ++d) {
        const auto b = Basis::make(4, Alphabet(d));
        const auto id = identity_endo(b);
        const auto lg = log_star(id);
        o.require(compose(lg, lg) == lg, "log(id) idempotent, d=" + std::to_string(d));
        o.require(exp_star(lg) == id, "exp(log(id)) = id, d=" + std::to_string(d));
    }
    return o;
}

Outcome integral_oracle() {
    Outcome o;
    ProbeParams p;
    p.d = 2;
    p.h = 1.0;
    p.substeps = 100;
    p.paths = 100000;
    p.seed = 0;
    const auto stats = integral_expectation_probe(3, p);
    double worst = 0.0;
    for (const auto& s : stats) {
        const double z = s.std_error > 0 ? std::abs(s.mean - s.expected) / s.std_error : 0.0;
        worst = std::max(worst, z);
        o.require(s.consistent, "E[J_" + s.w.to_string() + "] = " + fmt(s.mean) + " vs " + fmt(s.expected) +
                                    " (se " + fmt(s.std_error) + ")");
    }
    o.note(std::to_string(stats.size()) + " words, largest |mean - expected| / se = " + fmt(worst));

    double defect = 0.0, scale = 0.0;
    const IntegralOracle oracle(2, 2);
    StepSample s;
    const Word w1 = Word::parse("1"), w2 = Word::parse("2"), w12 = Word::parse("12"), w21 = Word::parse("21");
    for (std::uint64_t path = 0; path < 10000; ++path) {
        oracle.simulate(generate_segment(1.0, 100, 2, {0, 7, path, 0}), s);
        const double prod = s(w1) * s(w2);
        defect = std::max(defect, std::abs(prod - s(w12) - s(w21)));
        scale = std::max(scale, std::abs(prod));
    }
    o.require(defect <= 1e-12 * std::max(1.0, scale), "per-path J_1 J_2 = J_12 + J_21, defect " + fmt(defect));
    o.note("per-path shuffle defect max " + fmt(defect) + " over 10000 paths (max |J_1 J_2| " + fmt(scale) + ")");
    return o;
}

BenchConfig criterion_config(bool drift) {
    BenchConfig c;
    c.model.a.assign(3, Matrix::Zero(2, 2));
    if (drift) c.model.a[0] << -0.5, 1.0, 0.0, -1.0;
    c.model.a[1](0, 1) = 1.0;
    c.model.a[2](1, 0) = 1.0;
    c.model.y0 = Vector(2);
    c.model.y0 << 1.0, 0.5;
    c.T = 1.0;
    c.h_grid = {0.1, 0.05, 0.025};
    c.paths = 10000;
    c.fine_factor = 100;
    c.grades = {1, 2};
    c.methods = {Method::taylor, Method::sinhlog};
    c.seed = 0;
    c.validate();
    return c;
}

void assess_table(Outcome& o, const std::string& name, const ErrorTable& table, bool binding) {
    const auto check = efficiency_ordering(table);
    for (const auto& v : check.violations) {
        if (binding) o.require(false, name + ": " + v);
        else o.note(name + " (supplementary): " + v);
    }
    for (const double h : {0.1, 0.05, 0.025})
        for (const std::size_t g : {std::size_t(1), std::size_t(2)}) {
            const auto* s = table.find(Method::sinhlog, g, h);
            const auto* t = table.find(Method::taylor, g, h);
            if (!s || !t) continue;
            o.note(name + " grade " + std::to_string(g) + " h=" + fmt(h) + ": sinhlog " + fmt(s->rms_local) +
                   " taylor " + fmt(t->rms_local) + " allowance " +
                   fmt(2 * std::hypot(s->std_error_local, t->std_error_local)) +
                   (s->breakdowns ? " breakdowns " + std::to_string(s->breakdowns) : ""));
        }
    const double slope = strong_order_slope(table, Method::taylor, 2);
    if (binding) o.require(slope >= 0.8 && slope <= 1.2, name + ": grade-2 taylor slope " + fmt(slope));
    o.note(name + ": grade-2 taylor global slope " + fmt(slope));
}

Outcome efficiency_benchmark() {
    Outcome o;
    for (const bool drift : {false, true}) {
        const std::string name = drift ? "nilpotent pair with drift" : "nilpotent pair";
        assess_table(o, name, monte_carlo_compare(criterion_config(drift)), true);
    }
    for (const char* file : {"rotation.cfg", "generic.cfg"}) {
        try {
            auto c = load_bench_config(std::string(STOCHALG_CONFIG_DIR) + "/" + file);
            c.methods = {Method::taylor, Method::sinhlog};
            assess_table(o, file, monte_carlo_compare(c), false);
        } catch (const ConfigError& e) {
            o.note(std::string(file) + " skipped: " + e.what());
        }
    }
    return o;
}

Outcome determinism() {
    Outcome o;
    BenchConfig c = criterion_config(true);
    c.paths = 500;
    c.T = 0.5;
    c.methods = {Method::taylor, Method::sinhlog, Method::castell_gaines};
    const std::string first = monte_carlo_compare(c).to_csv();
    const std::string second = monte_carlo_compare(c).to_csv();
    o.require(first == second, "two runs with seed 0 differ");
    c.seed = 1;
    o.require(monte_carlo_compare(c).to_csv() != first, "seed has no effect");
    o.note(std::to_string(first.size()) + " CSV bytes compared");
    return o;
}

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "antipode and convolution series, cap 6, d <= 2", 30, antipode_suite},
        {2, "lemma properties 1-8, exact", 0, lemma_suite},
        {3, "remainder law R = 2/(1+eps) Q on S_{n+1}", 0, remainder_law},
        {4, "excess closed form, sign pattern, argmax at eps = 1", 0, excess_formula},
        {5, "odd-n linear term vanishes", 0, odd_n},
        {6, "Eulerian idempotent, cap 4", 0, eulerian},
        {7, "integral oracle expectations and shuffle identity", 120, integral_oracle},
        {8, "sinhlog vs taylor efficiency and strong order", 300, efficiency_benchmark},
        {9, "bit-identical error tables", 0, determinism},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double elapsed = seconds_since(t0);
        if (c.budget_seconds > 0)
            o.require(elapsed < c.budget_seconds, "runtime " + fmt(elapsed) + " s over " + fmt(c.budget_seconds) + " s");
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " (" << fmt(elapsed)
                  << " s)\n";
        for (const auto& d : o.detail) std::cout << "    " << d << "\n";
        std::cout.flush();
        failures += o.pass ? 0 : 1;
    }
    std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criterion failed") << "\n";
    return failures == 0 ? 0 : 1;
}
