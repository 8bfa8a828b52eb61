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
// Benchmark configuration ("key = value" text) and the Monte Carlo error table.

#ifndef STOCHALG_BENCH_CONFIG_HPP
#define STOCHALG_BENCH_CONFIG_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "stochalg/sde.hpp"

namespace stochalg {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct BenchConfig {
    LinearSDEModel model;
    double T = 1.0;
    std::vector<double> h_grid;
    std::size_t paths = 1000;
    std::size_t fine_factor = 100;  // sub-steps per step
    std::vector<std::size_t> grades{1, 2};
    std::vector<Method> methods{Method::taylor, Method::sinhlog, Method::castell_gaines};
    std::uint64_t seed = 0;

    /// Throws ConfigError.
    void validate() const;
};

/* Keys: dim, d, a0 ... ad (row-major, comma separated; a0 defaults to zero), y0,
 * T, h_grid, paths, fine_factor, grades, methods, seed. '#' starts a comment. */
BenchConfig parse_bench_config(std::string_view text);
BenchConfig load_bench_config(const std::string& path);

struct ErrorRow {
    Method method;
    std::size_t grade;
    double h;
    std::size_t paths;
    double rms_local;
    double rms_global;
    double std_error_local;
    double std_error_global;
    std::size_t breakdowns;  // sinhlog steps that fell back to the exponential
};

struct ErrorTable {
    std::vector<ErrorRow> rows;

    /// method,grade,h,paths,rms_local,rms_global,std_error_local,std_error_global
    std::string to_csv() const;
    const ErrorRow* find(Method m, std::size_t grade, double h) const;
};

/* Runs every (method, grade) on identical Brownian paths for each h in the grid.
 * rms_local is measured after the first step, rms_global at T, both against
 * reference_step on the same segments. Standard errors use the delta method. */
ErrorTable monte_carlo_compare(const BenchConfig& config);

struct OrderingCheck {
    bool holds = true;
    std::vector<std::string> violations;
};

/// rms_local(sinhlog) <= rms_local(taylor) + 2 sqrt(se_s^2 + se_t^2) on every (grade, h).
OrderingCheck efficiency_ordering(const ErrorTable& table);

/// Least-squares slope of log rms_global against log h.
double strong_order_slope(const ErrorTable& table, Method m, std::size_t grade);

}  // namespace stochalg

#endif  // STOCHALG_BENCH_CONFIG_HPP
