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

#include "cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stochalg/analysis.hpp"
#include "stochalg/bench_config.hpp"
#include "stochalg/endomorphism.hpp"
#include "stochalg/expectation.hpp"

namespace stochalg::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Common {
    std::size_t cap = 6;
    std::string alphabet;
    std::string d;
    std::uint64_t seed = 0;
    std::string output;
    std::string format = "text";
};

std::uint64_t parse_count(const std::string& what, const std::string& s) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw UsageError(what + ": '" + s + "' is not a nonnegative integer");
    return v;
}

/// "3", "1..3" or "1,3".
std::vector<std::size_t> parse_range(const std::string& what, const std::string& s) {
    std::vector<std::size_t> out;
    if (const auto dots = s.find(".."); dots != std::string::npos) {
        const auto lo = parse_count(what, s.substr(0, dots));
        const auto hi = parse_count(what, s.substr(dots + 2));
        if (lo > hi) throw UsageError(what + ": empty range '" + s + "'");
        for (auto k = lo; k <= hi; ++k) out.push_back(static_cast<std::size_t>(k));
        return out;
    }
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(static_cast<std::size_t>(parse_count(what, item)));
    if (out.empty()) throw UsageError(what + ": empty list");
    return out;
}

std::vector<Rational> parse_rationals(const std::string& what, const std::string& s) {
    std::vector<Rational> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(Rational::parse(item));
        } catch (const std::exception&) {
            throw UsageError(what + ": '" + item + "' is not a rational number");
        }
    }
    if (out.empty()) throw UsageError(what + ": empty list");
    return out;
}

std::vector<Alphabet> resolve_alphabets(const Common& c, const std::string& default_d) {
    if (!c.alphabet.empty() && !c.d.empty()) throw UsageError("--alphabet and --d are mutually exclusive");
    try {
        if (!c.alphabet.empty()) return {Alphabet::parse(c.alphabet)};
        std::vector<Alphabet> out;
        for (auto d : parse_range("--d", c.d.empty() ? default_d : c.d)) out.emplace_back(static_cast<int>(d), true);
        return out;
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

Alphabet single_alphabet(const Common& c) {
    const auto a = resolve_alphabets(c, "2");
    if (a.size() != 1) throw UsageError("this command takes a single alphabet");
    return a.front();
}

SubspaceSelector parse_subspace(const std::string& s) {
    try {
        return SubspaceSelector::parse(s);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw UsageError("cannot write '" + path + "'");
            out_ = file_.get();
        }
    }
    std::ostream& operator*() { return *out_; }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* out_;
};

// ------------------------------------------------------------------ verify

struct VerifyArgs {
    std::string property = "all";
    std::string n;
    std::string subspace;
    std::optional<std::uint64_t> vseed;
    std::size_t weights = 20;
};

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

int run_verify(const Common& c, const VerifyArgs& v, std::ostream& out, std::ostream& err) {
    if (c.format != "text" && c.format != "csv") throw UsageError("--format must be text or csv");
    const auto alphabets = resolve_alphabets(c, "1..2");
    std::vector<int> props;
    bool odd = false, odd_explicit = false;
    {
        std::stringstream ss(v.property);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item == "all") {
                for (int k = 1; k <= kLemmaProperties; ++k) props.push_back(k);
                odd = true;
            } else if (item == "odd") {
                odd = odd_explicit = true;
            } else {
                const auto k = parse_count("--property", item);
                if (k < 1 || k > static_cast<unsigned>(kLemmaProperties))
                    throw UsageError("--property: " + item + " is not in 1..8, odd or all");
                props.push_back(static_cast<int>(k));
            }
        }
    }
    if (!v.subspace.empty() && !v.n.empty()) throw UsageError("--subspace and --n are mutually exclusive");
    std::vector<SubspaceSelector> selectors;
    if (!v.subspace.empty()) {
        selectors.push_back(parse_subspace(v.subspace));
    } else {
        for (auto n : parse_range("--n", v.n.empty() ? "1..3" : v.n)) selectors.push_back(SubspaceSelector::exactly(n));
    }

    // Validate every requested combination before computing anything.
    for (const auto& a : alphabets)
        for (const auto& s : selectors) {
            for (int p : props) {
                try {
                    validate_lemma_hypotheses(p, s, a);
                } catch (const std::invalid_argument& e) {
                    throw UsageError("property " + std::to_string(p) + ": " + e.what());
                }
                if (s.n > c.cap) throw UsageError(s.to_string() + " exceeds --cap " + std::to_string(c.cap));
            }
            if (odd) {
                if (s.kind != SubspaceSelector::Kind::exactly)
                    throw UsageError("property odd works on S_{n+1} and takes eq:n, got " + s.to_string());
                if ((odd_explicit || s.n % 2 == 1) && s.n + 1 > c.cap)
                    throw UsageError("property odd at n = " + std::to_string(s.n) + " needs --cap >= " +
                                     std::to_string(s.n + 1));
            }
        }

    std::vector<std::optional<std::uint64_t>> seeds;
    if (v.vseed) {
        seeds.push_back(v.vseed);
    } else {
        seeds.push_back(std::nullopt);
        for (std::uint64_t k = 1; k <= v.weights; ++k) seeds.push_back(k);
    }

    const bool csv = c.format == "csv";
    if (csv) out << "property,n,d,alphabet,subspace,seed,verdict,detail\n";
    bool all_pass = true;
    auto emit = [&](const std::string& prop, const SubspaceSelector& s, const Alphabet& a, const std::string& seed,
                    bool pass, const std::string& detail) {
        all_pass = all_pass && pass;
        if (csv) {
            out << prop << "," << s.n << "," << a.d() << "," << a.to_string() << "," << s.to_string() << "," << seed
                << "," << (pass ? "pass" : "fail") << "," << csv_quote(detail) << "\n";
        } else {
            out << "property=" << prop << " n=" << s.n << " d=" << a.d() << " seed=" << seed
                << " verdict=" << (pass ? "pass" : "fail") << "\n";
            if (!pass && !detail.empty()) err << "  " << detail << "\n";
        }
    };

    for (const auto& a : alphabets)
        for (const auto& s : selectors) {
            for (const auto& seed : seeds) {
                const VWeight w = make_weight(s, a, seed);
                for (int p : props) {
                    const auto r = check_lemma_property(p, s, a, w, c.seed);
                    emit(std::to_string(p), s, a, w.label(), r.pass, r.witness);
                }
            }
            if (odd && (odd_explicit || s.n % 2 == 1)) {
                const auto s1 = SubspaceSelector::exactly(s.n + 1);
                for (const auto& seed : seeds) {
                    const VWeight w = make_weight(s1, a, seed);
                    const auto r = odd_n_perturbation(s.n, a, w);
                    std::string detail = "linear_term=" + r.linear_term.to_string();
                    if (!r.consistent) detail += " cross_check=" + r.cross_check.to_string();
                    if (!r.asserted) detail += " (even n: reported, not asserted)";
                    emit("odd", s, a, w.label(), r.pass, r.pass && r.asserted ? "" : detail);
                }
            }
        }
    return all_pass ? kExitOk : kExitViolation;
}

// ------------------------------------------------------------------ excess

struct ExcessArgs {
    std::size_t n = 1;
    std::string grid = "0.25,0.5,1,2,4";
    std::string t = "1/8,1/4,1/2,1";
    std::optional<std::uint64_t> vseed;
};

int run_excess(const Common& c, const ExcessArgs& x, std::ostream& out, std::ostream& err) {
    const Alphabet a = single_alphabet(c);
    const auto grid = parse_rationals("--grid", x.grid);
    const auto ts = parse_rationals("--t", x.t);
    if (x.n < 1) throw UsageError("--n must be at least 1");
    if (x.n + 1 > c.cap) throw UsageError("--n " + std::to_string(x.n) + " needs --cap >= " + std::to_string(x.n + 1));
    for (const auto& e : grid) {
        if (e == Rational(-1))
            throw UsageError("epsilon = -1 is the coshlog integrator: its inverse is undefined on the empty word "
                             "and the scheme suffers order reduction; choose epsilon > -1");
        if (e < Rational(-1)) throw UsageError("epsilon must exceed -1, got " + e.to_string());
    }
    for (const auto& t : ts)
        if (t.sign() <= 0) throw UsageError("--t values must be positive");

    const auto sel = SubspaceSelector::exactly(x.n + 1);
    const VWeight w = make_weight(sel, a, x.vseed);
    const auto scan = epsilon_scan(x.n, a, grid, w, ts);

    out << "epsilon,t,excess_value,closed_form_value\n";
    bool ok = true;
    for (const auto& r : scan) {
        for (const auto& t : ts)
            out << r.epsilon << "," << t << "," << r.excess.evaluate(t) << "," << r.closed_form.evaluate(t) << "\n";
        if (!r.match) err << "epsilon=" << r.epsilon << ": excess " << r.excess << " != closed form " << r.closed_form << "\n";
        if (!r.sign_ok) err << "epsilon=" << r.epsilon << ": excess has the wrong sign at a sampled t\n";
        ok = ok && r.match && r.sign_ok;
    }
    bool has_one = false;
    for (const auto& e : grid) has_one = has_one || e == Rational(1);
    for (const auto& t : ts) {
        const Rational best = argmax_epsilon(scan, t);
        err << "argmax t=" << t << " epsilon=" << best << "\n";
        if (has_one && !(best == Rational(1))) ok = false;
    }
    if (!reciprocal_symmetry(scan)) {
        err << "excess(eps) != excess(1/eps) on the grid\n";
        ok = false;
    }
    return ok ? kExitOk : kExitViolation;
}

// -------------------------------------------------------------------- gram

int run_gram(const Common& c, const std::string& subspace, std::ostream& out) {
    const Alphabet a = single_alphabet(c);
    const auto sel = parse_subspace(subspace);
    if (!sel.finite()) throw UsageError("gram: subspace " + sel.to_string() + " is infinite; use eq:n or le:n");
    if (sel.n > c.cap) throw UsageError(sel.to_string() + " exceeds --cap " + std::to_string(c.cap));
    const GramMatrix g = gram(sel, a);
    out << "row,col,value\n";
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            out << g.words[i] << "," << g.words[j] << "," << g.at(i, j) << "\n";
    return kExitOk;
}

// ------------------------------------------------------------------- bench

int run_bench(const std::string& config_path, std::ostream& out, std::ostream& err) {
    BenchConfig cfg;
    try {
        cfg = load_bench_config(config_path);
    } catch (const ConfigError& e) {
        throw UsageError(e.what());
    }
    const ErrorTable table = monte_carlo_compare(cfg);
    out << table.to_csv();
    for (const auto& r : table.rows)
        if (r.breakdowns > 0)
            err << "warning: " << to_string(r.method) << " grade " << r.grade << " h=" << r.h << ": " << r.breakdowns
                << " steps without a principal square root fell back to the exponential\n";
    for (auto g : cfg.grades) {
        const double slope = strong_order_slope(table, Method::taylor, g);
        if (slope == slope) err << "taylor grade " << g << " global strong-order slope " << slope << "\n";
    }
    const auto check = efficiency_ordering(table);
    for (const auto& v : check.violations) err << "efficiency ordering violated: " << v << "\n";
    return check.holds ? kExitOk : kExitViolation;
}

// -------------------------------------------------------------------- dump

GradedEndo named_endo(const std::string& name, const BasisPtr& basis) {
    auto parts = std::vector<std::string>{};
    {
        std::stringstream ss(name);
        std::string p;
        while (std::getline(ss, p, ':')) parts.push_back(p);
    }
    if (parts.empty()) throw UsageError("--endo is empty");
    const std::string& head = parts[0];
    auto eps_at = [&](std::size_t i) {
        if (parts.size() <= i) throw UsageError("--endo " + name + ": missing epsilon");
        try {
            return Rational::parse(parts[i]);
        } catch (const std::exception&) {
            throw UsageError("--endo " + name + ": bad epsilon '" + parts[i] + "'");
        }
    };
    auto n_at = [&](std::size_t i) {
        if (parts.size() <= i) throw UsageError("--endo " + name + ": missing n");
        return static_cast<std::size_t>(parse_count("--endo", parts[i]));
    };
    if (parts.size() == 1) {
        if (head == "id") return identity_endo(basis);
        if (head == "nu") return unit_endo(basis);
        if (head == "J") return augmented_projector(basis);
        if (head == "S") return antipode_endo(basis);
        if (head == "rev") return reverse_endo(basis);
        if (head == "D") return sign_endo(basis);
        if (head == "inverse") return conv_inverse(identity_endo(basis));
        if (head == "sinhlog") return sinhlog_endo(basis);
        if (head == "coshlog") return coshlog_endo(basis);
        if (head == "log") return log_star(identity_endo(basis));
        if (head == "explog") return exp_star(log_star(identity_endo(basis)));
    }
    try {
        if (head == "f" && parts.size() == 2) return f_epsilon_endo(eps_at(1), basis);
        if (head == "Q" && parts.size() == 3) return pre_remainder(eps_at(1), n_at(2), basis);
        if (head == "R" && parts.size() == 3) return remainder_leading(eps_at(1), n_at(2), basis).full;
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    }
    throw UsageError("--endo: unknown endomorphism '" + name +
                     "'; expected id, nu, J, S, rev, D, inverse, sinhlog, coshlog, log, explog, f:<eps>, "
                     "Q:<eps>:<n> or R:<eps>:<n>");
}

int run_dump(const Common& c, const std::string& endo, std::ostream& out) {
    const Alphabet a = single_alphabet(c);
    if (c.cap > Word::kMaxLength) throw UsageError("--cap exceeds 16");
    const auto basis = Basis::make(c.cap, a);
    out << named_endo(endo, basis).serialize();
    return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Convolution shuffle algebra checks and strong SDE integrator benchmarks", "stochalg"};
    app.require_subcommand(1);
    app.fallthrough();

    Common c;
    app.add_option("--cap", c.cap, "Maximal word length")->capture_default_str();
    app.add_option("--alphabet", c.alphabet, "Alphabet as a digit string, e.g. 012 or 12");
    app.add_option("--d", c.d, "Number of Wiener processes (verify also takes a range such as 1..2)");
    app.add_option("--seed", c.seed, "Seed for random endomorphisms")->capture_default_str();
    app.add_option("--output", c.output, "Write the report to this file instead of stdout");
    app.add_option("--format", c.format, "verify report format: text or csv")->capture_default_str();

    VerifyArgs va;
    std::uint64_t vseed = 0;
    auto* verify = app.add_subcommand("verify", "Exact checks of properties 1-8 and the odd-n perturbation");
    verify->add_option("--property", va.property, "all, odd, 1..8, or a comma list")->capture_default_str();
    verify->add_option("--n", va.n, "Word length, range or list (default 1..3)");
    verify->add_option("--subspace", va.subspace, "eq:n or le:n");
    auto* vseed_opt = verify->add_option("--vseed", vseed, "Use only this random weight seed");
    verify->add_option("--weights", va.weights, "Random weights besides the identity")->capture_default_str();

    ExcessArgs xa;
    std::uint64_t xvseed = 0;
    auto* excess = app.add_subcommand("excess", "Mean-square excess of f(id; eps) over a grid of eps");
    excess->add_option("--n", xa.n, "Truncation grade")->capture_default_str();
    excess->add_option("--grid", xa.grid, "Comma list of eps values")->capture_default_str();
    excess->add_option("--t", xa.t, "Comma list of sampled t values")->capture_default_str();
    auto* xvseed_opt = excess->add_option("--vseed", xvseed, "Random weight seed (identity weight if absent)");

    std::string subspace = "eq:1";
    auto* gramc = app.add_subcommand("gram", "Dump the Gram table Ebar(u sh v) as CSV");
    gramc->add_option("--subspace", subspace, "eq:n or le:n")->capture_default_str();

    std::string config;
    auto* bench = app.add_subcommand("bench", "Monte Carlo comparison of taylor, sinhlog and castell-gaines");
    bench->add_option("--config", config, "Benchmark configuration file")->required();

    std::string endo = "id";
    auto* dump = app.add_subcommand("dump", "Serialize a named endomorphism, one 'w -> image' line per word");
    dump->add_option("--endo", endo, "id, nu, J, S, rev, D, inverse, sinhlog, coshlog, log, explog, f:eps, Q:eps:n, R:eps:n")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    if (*vseed_opt) va.vseed = vseed;
    if (*xvseed_opt) xa.vseed = xvseed;

    try {
        Sink sink(c.output, out);
        if (*verify) return run_verify(c, va, *sink, err);
        if (*excess) return run_excess(c, xa, *sink, err);
        if (*gramc) return run_gram(c, subspace, *sink);
        if (*bench) return run_bench(config, *sink, err);
        if (*dump) return run_dump(c, endo, *sink);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitViolation;
    }
    return kExitUsage;
}

}  // namespace stochalg::cli
