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

#include "stochalg/sde.hpp"

#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

#include "stochalg/expectation.hpp"

namespace stochalg {

void LinearSDEModel::validate() const {
    if (a.size() < 2) throw std::invalid_argument("LinearSDEModel: need a drift and at least one diffusion matrix");
    if (a.size() > static_cast<std::size_t>(Alphabet::kMaxLetter) + 1)
        throw std::invalid_argument("LinearSDEModel: at most 9 Wiener processes");
    const auto n = y0.size();
    if (n == 0) throw std::invalid_argument("LinearSDEModel: empty initial state");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].rows() != n || a[i].cols() != n)
            throw std::invalid_argument("LinearSDEModel: matrix a" + std::to_string(i) + " is not " +
                                        std::to_string(n) + "x" + std::to_string(n));
}

Matrix LinearSDEModel::word_matrix(const Word& w) const {
    const auto n = y0.size();
    Matrix m = Matrix::Identity(n, n);
    for (std::size_t i = 0; i < w.size(); ++i) m = a.at(w[i]) * m;
    return m;
}

double BrownianSegment::total(int i) const {
    double s = 0.0;
    for (std::size_t j = 0; j < m; ++j) s += increment(j, i);
    return s;
}

BrownianSegment generate_segment(double h, std::size_t m, int d, const SeedLineage& lineage) {
    if (!(h > 0.0) || m == 0 || d < 1) throw std::invalid_argument("generate_segment: need h > 0, m >= 1, d >= 1");
    auto lo = [](std::uint64_t x) { return static_cast<std::uint32_t>(x); };
    auto hi = [](std::uint64_t x) { return static_cast<std::uint32_t>(x >> 32); };
    std::seed_seq seq{lo(lineage.seed), hi(lineage.seed), lo(lineage.stream), hi(lineage.stream),
                      lo(lineage.path), hi(lineage.path), lo(lineage.step), hi(lineage.step)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal(0.0, std::sqrt(h / static_cast<double>(m)));
    BrownianSegment seg{h, m, d, std::vector<double>(m * static_cast<std::size_t>(d)), lineage};
    for (auto& x : seg.dw) x = normal(rng);
    return seg;
}

// --------------------------------------------------------------- integrals

IntegralOracle::IntegralOracle(int d, std::size_t max_grade) {
    if (max_grade > kMaxGrade)
        throw std::invalid_argument("IntegralOracle: grade " + std::to_string(max_grade) + " exceeds the cap " +
                                    std::to_string(kMaxGrade));
    basis_ = Basis::make(max_grade, Alphabet(d, true));
    const std::size_t n = basis_->size();
    parent_.resize(n);
    last_.resize(n);
    zero_only_length_.resize(n);
    for (std::size_t i = 1; i < n; ++i) {
        const Word& w = basis_->word(i);
        parent_[i] = basis_->index(w.prefix(w.size() - 1));
        last_[i] = w[w.size() - 1];
        bool zeros = true;
        for (std::size_t k = 0; k < w.size(); ++k) zeros = zeros && w[k] == 0;
        zero_only_length_[i] = zeros ? w.size() : 0;
    }
}

void IntegralOracle::simulate(const BrownianSegment& seg, StepSample& out) const {
    if (seg.d != basis_->alphabet().d())
        throw std::invalid_argument("IntegralOracle: segment has d = " + std::to_string(seg.d) + ", oracle has d = " +
                                    std::to_string(basis_->alphabet().d()));
    const std::size_t n = basis_->size();
    out.basis = basis_;
    out.values.assign(n, 0.0);
    out.values[0] = 1.0;
    prev_.assign(n, 0.0);
    prev_[0] = 1.0;
    std::vector<double> fact(basis_->cap() + 1, 1.0);
    for (std::size_t k = 1; k < fact.size(); ++k) fact[k] = fact[k - 1] * static_cast<double>(k);
    const double dt = seg.h / static_cast<double>(seg.m);
    auto& cur = out.values;
    for (std::size_t j = 0; j < seg.m; ++j) {
        const double t = j + 1 == seg.m ? seg.h : seg.h * static_cast<double>(j + 1) / static_cast<double>(seg.m);
        for (std::size_t i = 1; i < n; ++i) {
            if (const std::size_t k = zero_only_length_[i]) {
                cur[i] = std::pow(t, static_cast<double>(k)) / fact[k];
                continue;
            }
            const Letter a = last_[i];
            const double delta = a == 0 ? dt : seg.increment(j, a);
            const std::size_t p = parent_[i];
            cur[i] = prev_[i] + 0.5 * (prev_[p] + cur[p]) * delta;
        }
        prev_ = cur;
    }
}

StepSample simulate_integrals(const BrownianSegment& seg, std::size_t max_grade, std::size_t min_substeps) {
    if (seg.m < min_substeps)
        throw std::invalid_argument("simulate_integrals: " + std::to_string(seg.m) + " sub-steps, need at least " +
                                    std::to_string(min_substeps));
    IntegralOracle oracle(seg.d, max_grade);
    StepSample s;
    oracle.simulate(seg, s);
    return s;
}

// ----------------------------------------------------------------- schemes

std::string to_string(Method m) {
    switch (m) {
        case Method::taylor: return "taylor";
        case Method::sinhlog: return "sinhlog";
        case Method::castell_gaines: return "castell-gaines";
    }
    return "?";
}

Method parse_method(std::string_view text) {
    if (text == "taylor") return Method::taylor;
    if (text == "sinhlog") return Method::sinhlog;
    if (text == "castell-gaines" || text == "castell_gaines") return Method::castell_gaines;
    if (text == "coshlog")
        throw std::invalid_argument(
            "method coshlog is refused: it is f(id; eps) at eps = -1, where the inverse is not defined on the "
            "empty word and the truncated scheme suffers order reduction; use eps > 0 (sinhlog)");
    throw std::invalid_argument("unknown method '" + std::string(text) + "'");
}

SchemePlan::SchemePlan(const LinearSDEModel& model, Method method, std::size_t grade, double h)
    : method_(method), grade_(grade), h_(h), d_(model.d()) {
    model.validate();
    if (grade < 1 || grade + 1 > IntegralOracle::kMaxGrade)
        throw std::invalid_argument("SchemePlan: grade must lie in 1.." + std::to_string(IntegralOracle::kMaxGrade - 1));
    const auto basis = Basis::make(grade + 1, Alphabet(model.d(), true));
    GradedEndo x(basis);
    switch (method) {
        case Method::taylor: x = identity_endo(basis); break;
        case Method::sinhlog: x = sinhlog_endo(basis); break;
        case Method::castell_gaines: x = log_star(identity_endo(basis)); break;
    }
    const auto n = static_cast<Eigen::Index>(model.dim());
    std::map<std::size_t, Matrix> acc;
    correction_ = Matrix::Zero(n, n);
    for (const auto& w : basis->words()) {
        if (w.empty()) continue;
        const WordPoly& img = x(w);
        if (img.is_zero()) continue;
        const Matrix aw = model.word_matrix(w);
        if (w.size() <= grade) {
            for (const auto& [u, c] : img) {
                auto [it, fresh] = acc.try_emplace(basis->index(u), Matrix::Zero(n, n));
                it->second += c.to_double() * aw;
            }
        } else {
            const double e = expect_poly(img).evaluate(h);
            if (e != 0.0) correction_ += e * aw;
        }
    }
    for (auto& [idx, b] : acc)
        if (!b.isZero(0.0)) terms_.push_back({basis->word(idx), idx, std::move(b)});
}

Matrix SchemePlan::generator(const StepSample& sample, std::size_t min_len, std::size_t max_len) const {
    if (!sample.basis || sample.basis->cap() < grade_ || sample.basis->alphabet() != Alphabet(d_, true))
        throw std::invalid_argument("SchemePlan: sample does not cover grade " + std::to_string(grade_));
    Matrix m = max_len > grade_ ? correction_ : Matrix::Zero(correction_.rows(), correction_.cols());
    for (const auto& t : terms_)
        if (t.word.size() >= min_len && t.word.size() <= max_len) m += sample.values[t.index] * t.b;
    return m;
}

Vector SchemePlan::step(const StepSample& sample, const Vector& y) const {
    const Matrix s = generator(sample);
    switch (method_) {
        case Method::taylor: return y + s * y;
        case Method::sinhlog: {
            const Matrix id = Matrix::Identity(s.rows(), s.cols());
            return (s + matrix_sqrt(id + s * s)) * y;
        }
        case Method::castell_gaines: return matrix_exp(s) * y;
    }
    return y;
}

namespace {
double step_size(const StepSample& sample) { return sample.values.at(1); }
}  // namespace

Vector taylor_step(const LinearSDEModel& model, const StepSample& sample, std::size_t n, const Vector& y) {
    return SchemePlan(model, Method::taylor, n, step_size(sample)).step(sample, y);
}

Vector sinhlog_step(const LinearSDEModel& model, const StepSample& sample, std::size_t n, const Vector& y) {
    return SchemePlan(model, Method::sinhlog, n, step_size(sample)).step(sample, y);
}

Vector castell_gaines_step(const LinearSDEModel& model, const StepSample& sample, std::size_t n, const Vector& y) {
    return SchemePlan(model, Method::castell_gaines, n, step_size(sample)).step(sample, y);
}

Vector reference_step(const LinearSDEModel& model, const BrownianSegment& seg, const Vector& y0) {
    const auto n = static_cast<Eigen::Index>(model.dim());
    const double dt = seg.h / static_cast<double>(seg.m);
    Vector y = y0, v1(n), v2(n);
    Matrix m(n, n);
    for (std::size_t j = 0; j < seg.m; ++j) {
        m.noalias() = dt * model.a[0];
        for (int i = 1; i <= seg.d; ++i) m.noalias() += seg.increment(j, i) * model.a[static_cast<std::size_t>(i)];
        v1.noalias() = m * y;
        v2.noalias() = m * v1;
        y += v1 + 0.5 * v2;
    }
    return y;
}

}  // namespace stochalg
