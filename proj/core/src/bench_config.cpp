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

#include "stochalg/bench_config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace stochalg {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> out;
    std::string item;
    for (char c : value + ",") {
        if (c == ',' || c == ' ' || c == '\t') {
            if (!item.empty()) out.push_back(item);
            item.clear();
        } else {
            item += c;
        }
    }
    return out;
}

double parse_double(const std::string& key, const std::string& text) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v))
        throw ConfigError("config: key '" + key + "': '" + text + "' is not a finite number");
    return v;
}

std::uint64_t parse_uint(const std::string& key, const std::string& text) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw ConfigError("config: key '" + key + "': '" + text + "' is not a nonnegative integer");
    return v;
}

std::vector<double> parse_doubles(const std::string& key, const std::string& value) {
    std::vector<double> out;
    for (const auto& item : split_list(value)) out.push_back(parse_double(key, item));
    return out;
}

std::string format_double(double x) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

std::size_t step_count(double T, double h) {
    const double r = T / h;
    const auto n = static_cast<std::size_t>(std::llround(r));
    if (n == 0 || std::abs(static_cast<double>(n) * h - T) > 1e-9 * T)
        throw ConfigError("config: T = " + format_double(T) + " is not a whole multiple of h = " + format_double(h));
    return n;
}

}  // namespace

void BenchConfig::validate() const {
    try {
        model.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    if (!(T > 0.0)) throw ConfigError("config: T must be positive");
    if (h_grid.empty()) throw ConfigError("config: h_grid is empty");
    for (double h : h_grid) {
        if (!(h > 0.0)) throw ConfigError("config: every h must be positive");
        step_count(T, h);
    }
    if (paths < 2) throw ConfigError("config: paths must be at least 2");
    if (fine_factor < 1) throw ConfigError("config: fine_factor must be at least 1");
    if (grades.empty()) throw ConfigError("config: grades is empty");
    for (auto g : grades)
        if (g < 1 || g + 1 > IntegralOracle::kMaxGrade)
            throw ConfigError("config: grade " + std::to_string(g) + " outside 1.." +
                              std::to_string(IntegralOracle::kMaxGrade - 1));
    if (methods.empty()) throw ConfigError("config: methods is empty");
}

BenchConfig parse_bench_config(std::string_view text) {
    std::map<std::string, std::string> kv;
    std::istringstream is{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (trim(line).empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected 'key = value'");
        const std::string key = trim(std::string_view(line).substr(0, eq));
        if (kv.count(key)) throw ConfigError("config line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
        kv[key] = trim(std::string_view(line).substr(eq + 1));
    }

    auto take = [&kv](const std::string& key) -> std::optional<std::string> {
        auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        std::string v = it->second;
        kv.erase(it);
        return v;
    };

    BenchConfig c;
    const auto dim_s = take("dim");
    const auto d_s = take("d");
    if (!dim_s || !d_s) throw ConfigError("config: 'dim' and 'd' are required");
    const auto dim = static_cast<Eigen::Index>(parse_uint("dim", *dim_s));
    const auto d = static_cast<int>(parse_uint("d", *d_s));
    if (dim < 1) throw ConfigError("config: dim must be at least 1");
    if (d < 1 || d > Alphabet::kMaxLetter) throw ConfigError("config: d must lie in 1..9");

    for (int i = 0; i <= d; ++i) {
        const std::string key = "a" + std::to_string(i);
        const auto v = take(key);
        if (!v) {
            if (i == 0) {
                c.model.a.push_back(Matrix::Zero(dim, dim));
                continue;
            }
            throw ConfigError("config: missing diffusion matrix '" + key + "'");
        }
        const auto entries = parse_doubles(key, *v);
        if (entries.size() != static_cast<std::size_t>(dim * dim))
            throw ConfigError("config: '" + key + "' has " + std::to_string(entries.size()) + " entries, expected " +
                              std::to_string(dim * dim));
        Matrix m(dim, dim);
        for (Eigen::Index r = 0; r < dim; ++r)
            for (Eigen::Index col = 0; col < dim; ++col) m(r, col) = entries[static_cast<std::size_t>(r * dim + col)];
        c.model.a.push_back(std::move(m));
    }

    const auto y0 = take("y0");
    if (!y0) throw ConfigError("config: 'y0' is required");
    const auto y = parse_doubles("y0", *y0);
    if (y.size() != static_cast<std::size_t>(dim))
        throw ConfigError("config: 'y0' has " + std::to_string(y.size()) + " entries, expected " + std::to_string(dim));
    c.model.y0 = Eigen::Map<const Vector>(y.data(), dim);

    if (auto v = take("T")) c.T = parse_double("T", *v);
    if (auto v = take("h_grid")) c.h_grid = parse_doubles("h_grid", *v);
    if (auto v = take("paths")) c.paths = parse_uint("paths", *v);
    if (auto v = take("fine_factor")) c.fine_factor = parse_uint("fine_factor", *v);
    if (auto v = take("grades")) {
        c.grades.clear();
        for (const auto& g : split_list(*v)) c.grades.push_back(parse_uint("grades", g));
    }
    if (auto v = take("methods")) {
        c.methods.clear();
        for (const auto& m : split_list(*v)) {
            try {
                c.methods.push_back(parse_method(m));
            } catch (const std::invalid_argument& e) {
                throw ConfigError(std::string("config: ") + e.what());
            }
        }
    }
    if (auto v = take("seed")) c.seed = parse_uint("seed", *v);
    if (!kv.empty()) throw ConfigError("config: unknown key '" + kv.begin()->first + "'");
    c.validate();
    return c;
}

BenchConfig load_bench_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_bench_config(ss.str());
}

std::string ErrorTable::to_csv() const {
    std::string out = "method,grade,h,paths,rms_local,rms_global,std_error_local,std_error_global\n";
    for (const auto& r : rows) {
        out += to_string(r.method) + "," + std::to_string(r.grade) + "," + format_double(r.h) + "," +
               std::to_string(r.paths) + "," + format_double(r.rms_local) + "," + format_double(r.rms_global) + "," +
               format_double(r.std_error_local) + "," + format_double(r.std_error_global) + "\n";
    }
    return out;
}

const ErrorRow* ErrorTable::find(Method m, std::size_t grade, double h) const {
    for (const auto& r : rows)
        if (r.method == m && r.grade == grade && r.h == h) return &r;
    return nullptr;
}

namespace {

struct Moments {
    double s1 = 0.0, s2 = 0.0;
    void add(double x) {
        s1 += x;
        s2 += x * x;
    }
    // rms and its delta-method standard error from P samples of the squared error.
    std::pair<double, double> rms(std::size_t p) const {
        const double n = static_cast<double>(p);
        const double mean = s1 / n;
        const double var = std::max(0.0, (s2 - n * mean * mean) / (n - 1.0));
        const double r = std::sqrt(mean);
        const double se = r > 0.0 ? std::sqrt(var / n) / (2.0 * r) : 0.0;
        return {r, se};
    }
};

}  // namespace

ErrorTable monte_carlo_compare(const BenchConfig& config) {
    config.validate();
    const auto& model = config.model;
    const int d = model.d();
    const std::size_t max_grade = *std::max_element(config.grades.begin(), config.grades.end());
    const IntegralOracle oracle(d, max_grade);

    struct Slot {
        Method method;
        std::size_t grade;
    };
    std::vector<Slot> slots;
    for (auto m : config.methods)
        for (auto g : config.grades) slots.push_back({m, g});

    ErrorTable table;
    std::vector<std::vector<ErrorRow>> by_slot(slots.size());
    StepSample sample;
    for (std::size_t hi = 0; hi < config.h_grid.size(); ++hi) {
        const double h = config.h_grid[hi];
        const std::size_t steps = step_count(config.T, h);
        std::vector<SchemePlan> plans, fallbacks;
        for (const auto& s : slots) {
            plans.emplace_back(model, s.method, s.grade, h);
            fallbacks.emplace_back(model, Method::castell_gaines, s.grade, h);
        }
        std::vector<Moments> local(slots.size()), global(slots.size());
        std::vector<std::size_t> breakdowns(slots.size(), 0);
        std::vector<Vector> ys(slots.size());
        for (std::size_t p = 0; p < config.paths; ++p) {
            Vector yref = model.y0;
            for (auto& y : ys) y = model.y0;
            for (std::size_t s = 0; s < steps; ++s) {
                const auto seg = generate_segment(h, config.fine_factor, d, {config.seed, hi, p, s});
                oracle.simulate(seg, sample);
                yref = reference_step(model, seg, yref);
                for (std::size_t k = 0; k < slots.size(); ++k) {
                    try {
                        ys[k] = plans[k].step(sample, ys[k]);
                    } catch (const MatrixSqrtError&) {
                        ys[k] = fallbacks[k].step(sample, ys[k]);
                        ++breakdowns[k];
                    }
                    if (s == 0) local[k].add((ys[k] - yref).squaredNorm());
                }
            }
            for (std::size_t k = 0; k < slots.size(); ++k) global[k].add((ys[k] - yref).squaredNorm());
        }
        for (std::size_t k = 0; k < slots.size(); ++k) {
            const auto [rl, sl] = local[k].rms(config.paths);
            const auto [rg, sg] = global[k].rms(config.paths);
            by_slot[k].push_back({slots[k].method, slots[k].grade, h, config.paths, rl, rg, sl, sg, breakdowns[k]});
        }
    }
    for (auto& rows : by_slot) table.rows.insert(table.rows.end(), rows.begin(), rows.end());
    return table;
}

OrderingCheck efficiency_ordering(const ErrorTable& table) {
    OrderingCheck c;
    for (const auto& t : table.rows) {
        if (t.method != Method::taylor) continue;
        const ErrorRow* s = table.find(Method::sinhlog, t.grade, t.h);
        if (!s) continue;
        const double combined = std::sqrt(s->std_error_local * s->std_error_local + t.std_error_local * t.std_error_local);
        if (!(s->rms_local <= t.rms_local + 2.0 * combined)) {
            c.holds = false;
            c.violations.push_back("grade=" + std::to_string(t.grade) + " h=" + format_double(t.h) +
                                   ": sinhlog " + format_double(s->rms_local) + " > taylor " +
                                   format_double(t.rms_local) + " + 2*" + format_double(combined));
        }
    }
    return c;
}

double strong_order_slope(const ErrorTable& table, Method m, std::size_t grade) {
    std::vector<double> xs, ys;
    for (const auto& r : table.rows)
        if (r.method == m && r.grade == grade && r.rms_global > 0.0) {
            xs.push_back(std::log(r.h));
            ys.push_back(std::log(r.rms_global));
        }
    if (xs.size() < 2) return std::nan("");
    const double n = static_cast<double>(xs.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i] / n;
        my += ys[i] / n;
    }
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    return sxy / sxx;
}

}  // namespace stochalg
