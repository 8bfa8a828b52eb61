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
// Strong integrators for linear Stratonovich systems
//
//     dy = A_0 y dt + sum_i A_i y o dW^i
//
// built from multiple Stratonovich integrals J_w sampled on a fine grid, and a
// Monte Carlo harness comparing them against a refined reference solution.

#ifndef STOCHALG_SDE_HPP
#define STOCHALG_SDE_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "stochalg/endomorphism.hpp"
#include "stochalg/matrix_functions.hpp"
#include "stochalg/words.hpp"

namespace stochalg {

struct LinearSDEModel {
    std::vector<Matrix> a;  // a[0] is the drift, a[1..d] the diffusion matrices
    Vector y0;

    std::size_t dim() const { return static_cast<std::size_t>(y0.size()); }
    int d() const { return static_cast<int>(a.size()) - 1; }
    /// Throws std::invalid_argument unless d >= 1 and all matrices are dim x dim.
    void validate() const;

    /* Matrix of the composed operator V_w = V_{a_1} ... V_{a_n} for linear
     * fields acting on y: A_{a_n} ... A_{a_1}. */
    Matrix word_matrix(const Word& w) const;
};

struct SeedLineage {
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;
    std::uint64_t path = 0;
    std::uint64_t step = 0;
};

/* Brownian increments on m equal sub-steps of a step of length h. */
struct BrownianSegment {
    double h = 0.0;
    std::size_t m = 0;
    int d = 0;
    std::vector<double> dw;  // dw[j * d + (i - 1)] for sub-step j and component i
    SeedLineage lineage;

    double increment(std::size_t j, int i) const { return dw[j * static_cast<std::size_t>(d) + (i - 1)]; }
    double total(int i) const;
};

/// N(0, h/m) increments from an mt19937_64 stream seeded by the lineage.
BrownianSegment generate_segment(double h, std::size_t m, int d, const SeedLineage& lineage);

/* Realized J_w over one step for every word of length <= grade, indexed like the
 * Basis over {0,...,d}. */
struct StepSample {
    BasisPtr basis;
    std::vector<double> values;

    double operator()(const Word& w) const { return values[basis->index(w)]; }
};

/* Fine-grid recursion J_{wa}(t_{j+1}) = J_{wa}(t_j) + (J_w(t_j) + J_w(t_{j+1})) dW^a_j / 2,
 * processed from short words to long. Words made only of 0 are set to t^k/k!. */
class IntegralOracle {
public:
    static constexpr std::size_t kMaxGrade = 6;

    IntegralOracle(int d, std::size_t max_grade);

    const BasisPtr& basis() const { return basis_; }
    std::size_t max_grade() const { return basis_->cap(); }
    /// Fills out (resized as needed). Throws std::invalid_argument on a d mismatch.
    void simulate(const BrownianSegment& seg, StepSample& out) const;

private:
    BasisPtr basis_;
    std::vector<std::size_t> parent_;
    std::vector<Letter> last_;
    std::vector<std::size_t> zero_only_length_;  // 0 when the word has a nonzero letter
    mutable std::vector<double> prev_;
};

/// Throws std::invalid_argument when max_grade exceeds IntegralOracle::kMaxGrade
/// or the segment has fewer than min_substeps sub-steps.
StepSample simulate_integrals(const BrownianSegment& seg, std::size_t max_grade, std::size_t min_substeps = 100);

enum class Method { taylor, sinhlog, castell_gaines };

std::string to_string(Method m);
/// "taylor", "sinhlog", "castell-gaines". The coshlog integrator is refused.
Method parse_method(std::string_view text);

/* One step y <- Phi(sigma) y of a scheme of grade n at step size h, where
 *     sigma = sum_{1 <= |w| <= n} J_{X(w)} A_w + sum_{|w| = n+1} Ebar(X(w))(h) A_w
 * and (X, Phi) is (id, I + .), (sinhlog(id), s + sqrt(I + s^2)) or (log(id), exp). */
class SchemePlan {
public:
    SchemePlan(const LinearSDEModel& model, Method method, std::size_t grade, double h);

    Method method() const { return method_; }
    std::size_t grade() const { return grade_; }
    double h() const { return h_; }

    struct Term {
        Word word;
        std::size_t index;  // position of J_word in a StepSample
        Matrix b;           // sum_w c_{w,word} A_w
    };
    const std::vector<Term>& terms() const { return terms_; }
    const Matrix& correction() const { return correction_; }

    /// sigma for this sample; terms whose word length lies outside [min_len, max_len] are skipped
    /// and the expectation correction is included only when max_len > grade.
    Matrix generator(const StepSample& sample, std::size_t min_len = 1, std::size_t max_len = 64) const;
    /// Throws MatrixSqrtError when the sinhlog inverse has no principal square root.
    Vector step(const StepSample& sample, const Vector& y) const;

private:
    Method method_;
    std::size_t grade_;
    double h_;
    int d_;
    std::vector<Term> terms_;
    Matrix correction_;
};

Vector taylor_step(const LinearSDEModel& model, const StepSample& sample, std::size_t n, const Vector& y);
Vector sinhlog_step(const LinearSDEModel& model, const StepSample& sample, std::size_t n, const Vector& y);
Vector castell_gaines_step(const LinearSDEModel& model, const StepSample& sample, std::size_t n, const Vector& y);

/// Stochastic Heun on the sub-steps of the segment: y <- y + M y + M^2 y / 2 with
/// M = A_0 dt + sum_i A_i dW^i_j.
Vector reference_step(const LinearSDEModel& model, const BrownianSegment& seg, const Vector& y);

}  // namespace stochalg

#endif  // STOCHALG_SDE_HPP
