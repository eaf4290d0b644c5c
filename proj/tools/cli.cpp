// Copyright 2026 The arrcc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "arrcc/arrangement.hpp"
#include "arrcc/boolfn.hpp"
#include "arrcc/conversions.hpp"
#include "arrcc/error.hpp"
#include "arrcc/json_io.hpp"
#include "arrcc/kremer.hpp"
#include "arrcc/protocols.hpp"
#include "arrcc/search.hpp"

namespace arrcc::cli {

namespace {

namespace fs = std::filesystem;

enum class Format { kJson, kCsv, kText };

// Thrown when an asserted check fails after the report has been written.
struct CheckFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    require(static_cast<bool>(in), ErrorCode::kInvalidInput, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool starts_with_brace(const std::string &s) {
    const auto pos = s.find_first_not_of(" \t\r\n");
    return pos != std::string::npos && s[pos] == '{';
}

/// A file (JSON or truth-table text) or a family expression such as EQ(2).
PartialBoolFn load_function(const std::string &spec) {
    if (fs::is_regular_file(spec)) {
        const std::string text = read_file(spec);
        return starts_with_brace(text) ? function_from_json(parse_json(text)) : parse_table(text);
    }
    return parse_family_expression(spec);
}

Arrangement load_arrangement(const std::string &path) { return arrangement_from_json(parse_json(read_file(path))); }

// Accepts a bare protocol document or the {"protocol": ...} wrapper that synth writes.
Protocol load_protocol(const std::string &path) {
    const Json j = parse_json(read_file(path));
    if (j.is_object() && j.contains("protocol")) return protocol_from_json(j["protocol"]);
    return protocol_from_json(j);
}

struct Env {
    std::ostream &out;
    std::ostream &err;
    Format format = Format::kJson;
};

void emit(const Env &env, const Json &j, const std::function<std::string()> &csv,
          const std::function<std::string()> &text) {
    switch (env.format) {
        case Format::kJson:
            env.out << dump_json(j);
            break;
        case Format::kCsv:
            env.out << csv();
            break;
        case Format::kText:
            env.out << text();
            break;
    }
}

std::string claims_text(const std::vector<ClaimRow> &rows) {
    std::ostringstream o;
    for (const auto &r : rows) {
        o << (r.pass ? "pass" : "FAIL") << (r.asserted ? "  " : "* ") << r.label << ": " << format_double(r.value);
        if (r.relation != "info") o << ' ' << r.relation << ' ' << format_double(r.bound);
        o << "  [" << r.source << "]\n";
    }
    o << "(* = reported, not asserted)\n";
    return o.str();
}

bool all_asserted(const std::vector<ClaimRow> &rows) {
    return std::all_of(rows.begin(), rows.end(), [](const ClaimRow &r) { return !r.asserted || r.pass; });
}

void fail_if_claims_fail(const std::vector<ClaimRow> &rows, std::ostream &err) {
    bool ok = true;
    for (const auto &r : rows)
        if (r.asserted && !r.pass) {
            err << "check failed: " << r.label << " (value " << format_double(r.value) << ", bound " << r.relation
                << ' ' << format_double(r.bound) << ")\n";
            ok = false;
        }
    if (!ok) throw CheckFailed("asserted checks failed");
}

std::string kv_csv(const std::vector<std::pair<std::string, std::string>> &kv) {
    std::vector<std::vector<std::string>> rows;
    for (const auto &[k, v] : kv) rows.push_back({k, v});
    return aligned_csv({"key", "value"}, rows);
}

std::string kv_text(const std::vector<std::pair<std::string, std::string>> &kv) {
    std::size_t w = 0;
    for (const auto &p : kv) w = std::max(w, p.first.size());
    std::ostringstream o;
    for (const auto &[k, v] : kv) o << k << std::string(w - k.size() + 2, ' ') << v << '\n';
    return o.str();
}

std::string profile_csv(const SuccessProfile &p, const PartialBoolFn &f) {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t x = 0; x < p.p_zero.size(); ++x)
        for (std::size_t y = 0; y < p.p_zero[x].size(); ++y) {
            const Entry e = f.at(x, y);
            rows.push_back({std::to_string(x), std::to_string(y), e == Entry::kZero ? "0" : e == Entry::kOne ? "1" : "*",
                            format_double(p.p_zero[x][y])});
        }
    return aligned_csv({"x", "y", "f", "p_zero"}, rows);
}

// ---------------------------------------------------------------------------

struct SearchFlags {
    int restarts = 16;
    int iters = 2000;
    double step = 2.0;
    std::uint64_t seed = 0;
    double tol = 1e-9;

    SearchConfig config(std::size_t dim) const {
        SearchConfig c;
        c.dim = dim;
        c.restarts = restarts;
        c.iters = iters;
        c.step = step;
        c.seed = seed;
        c.tol = tol;
        c.validate();
        return c;
    }
};

void add_search_flags(CLI::App *app, SearchFlags &s) {
    app->add_option("--restarts", s.restarts, "random restarts")->capture_default_str();
    app->add_option("--iters", s.iters, "iterations per restart")->capture_default_str();
    app->add_option("--step", s.step, "initial step size")->capture_default_str();
    app->add_option("--seed", s.seed, "RNG seed")->capture_default_str();
    app->add_option("--tol", s.tol, "strict realization tolerance (default from " + std::string(kToleranceEnv) + ")");
}

// ---------------------------------------------------------------------------

int cmd_fn_show(const Env &env, const std::string &spec) {
    const PartialBoolFn f = load_function(spec);
    Json j = function_to_json(f);
    j["x_size"] = f.x_size();
    j["y_size"] = f.y_size();
    j["defined"] = f.defined_count();
    emit(
        env, j,
        [&] {
            std::vector<std::vector<std::string>> rows;
            const auto r = f.rows();
            for (std::size_t x = 0; x < r.size(); ++x) rows.push_back({std::to_string(x), r[x]});
            return aligned_csv({"x", "row"}, rows);
        },
        [&] { return render(f); });
    return kExitPass;
}

int cmd_arr_check(const Env &env, const std::string &arr_path, const std::string &fn, double tol) {
    const Arrangement a = load_arrangement(arr_path);
    const PartialBoolFn f = load_function(fn);
    const RealizeVerdict v = realizes(a, f, tol);
    Json j{{"realizes", v.realizes}, {"margin", v.margin}, {"magnitude", v.magnitude}, {"tol", tol}};
    j["witness"] = v.witness ? Json::array({v.witness->first, v.witness->second}) : Json();
    std::vector<std::pair<std::string, std::string>> kv{{"realizes", v.realizes ? "yes" : "no"},
                                                        {"margin", format_double(v.margin)},
                                                        {"magnitude", format_double(v.magnitude)}};
    if (v.witness)
        kv.emplace_back("witness", "(" + std::to_string(v.witness->first) + ", " + std::to_string(v.witness->second) + ")");
    emit(env, j, [&] { return kv_csv(kv); }, [&] { return kv_text(kv); });
    if (!v.realizes) {
        env.err << "arrangement does not realize the function";
        if (v.witness) env.err << ": sign mismatch at (x=" << v.witness->first << ", y=" << v.witness->second << ")";
        env.err << '\n';
        return kExitCheckFailed;
    }
    return kExitPass;
}

int cmd_arr_search(const Env &env, const std::string &fn, std::size_t dim, const SearchFlags &s) {
    const PartialBoolFn f = load_function(fn);
    const SearchOutcome r = max_margin(f, s.config(dim));
    Json j{{"success", r.success()}, {"dim", dim}, {"margin", r.margin}, {"best_restart", r.best_restart}};
    j["certificate"] = r.certificate ? arrangement_to_json(*r.certificate) : Json();
    const std::vector<std::pair<std::string, std::string>> kv{{"success", r.success() ? "yes" : "no"},
                                                              {"dim", std::to_string(dim)},
                                                              {"margin", format_double(r.margin)},
                                                              {"best_restart", std::to_string(r.best_restart)}};
    emit(env, j, [&] { return kv_csv(kv); }, [&] { return kv_text(kv); });
    if (!r.success()) {
        env.err << "no realizing arrangement found in dimension " << dim << " (best margin " << format_double(r.margin)
                << ")\n";
        return kExitCheckFailed;
    }
    return kExitPass;
}

int cmd_arr_mindim(const Env &env, const std::string &fn, std::size_t max_dim, const SearchFlags &s) {
    const PartialBoolFn f = load_function(fn);
    const DimBound b = min_dim_upper(f, max_dim, s.config(1));
    const std::vector<std::pair<std::string, std::string>> kv{{"k_upper", std::to_string(b.k_upper)},
                                                              {"exact", b.exact ? "yes" : "no"},
                                                              {"margin", format_double(b.margin)}};
    emit(env, dim_bound_to_json(b), [&] { return kv_csv(kv); }, [&] { return kv_text(kv); });
    return kExitPass;
}

Protocol compile(const std::string &kind, const Arrangement &a, const PartialBoolFn &f) {
    if (kind == "classical-oneway") return arr_to_classical_oneway(a, f);
    if (kind == "quantum-oneway") return arr_to_quantum_oneway(a, f);
    if (kind == "quantum-smp") return arr_to_quantum_smp(a, f);
    if (kind == "classical-smp") return arr_to_classical_smp(a, f);
    if (kind == "two-way") return quantum_oneway_to_two_way(arr_to_quantum_oneway(a, f));
    fail(ErrorCode::kInvalidInput, "unknown protocol kind '" + kind + "'");
}

int cmd_synth(const Env &env, const std::string &kind, const std::string &arr_path, const std::string &fn) {
    const Arrangement a = load_arrangement(arr_path);
    const PartialBoolFn f = load_function(fn);
    const Protocol p = compile(kind, a, f);
    const SuccessProfile prof = success_profile(p, f);
    const Json j{{"protocol", protocol_to_json(p)}, {"profile", success_profile_to_json(prof)}};
    const std::vector<std::pair<std::string, std::string>> kv{
        {"kind", std::string(protocol_kind(p))},
        {"cost", std::to_string(prof.cost.amount) + " " + prof.cost.unit()},
        {"bias", format_double(prof.bias)},
        {"computes_f", prof.computes_f ? "yes" : "no"}};
    emit(env, j, [&] { return profile_csv(prof, f); }, [&] { return kv_text(kv); });
    if (!prof.computes_f) {
        env.err << "synthesized protocol does not compute the function\n";
        return kExitCheckFailed;
    }
    return kExitPass;
}

int cmd_extract(const Env &env, const std::string &protocol_path, const std::string &fn) {
    const Protocol p = load_protocol(protocol_path);
    const auto *tw = std::get_if<TwoWayQuantumProtocol>(&p);
    require(tw != nullptr, ErrorCode::kInvalidInput,
            "extract needs a two_way_quantum protocol, got " + std::string(protocol_kind(p)));
    const PartialBoolFn f = load_function(fn);
    const Extraction ex = extract_arrangement(*tw, f);
    const Json j{{"report", extraction_report_to_json(ex.report)},
                 {"raw", arrangement_to_json(ex.raw)},
                 {"normalized", arrangement_to_json(ex.normalized)}};
    const ExtractionReport &r = ex.report;
    const std::vector<std::pair<std::string, std::string>> kv{
        {"dimension", std::to_string(r.dimension)},
        {"margin_raw", format_double(r.margin_raw)},
        {"margin_normalized", format_double(r.margin_normalized)},
        {"magnitude_raw", format_double(r.magnitude_raw)},
        {"magnitude_violation", r.magnitude_violation ? "yes" : "no"},
        {"max_trace_identity_error", format_double(r.max_trace_identity_error)},
        {"protocol_bias", format_double(r.protocol_bias)}};
    emit(env, j, [&] { return kv_csv(kv); }, [&] { return kv_text(kv); });
    return kExitPass;
}

int cmd_bounds(const Env &env, const std::string &fn, std::size_t max_dim, const SearchFlags &s) {
    const PartialBoolFn f = load_function(fn);
    const DimBound bf = min_dim_upper(f, max_dim, s.config(1));
    const DimBound bt = min_dim_upper(transpose(f), max_dim, s.config(1));
    const BoundsReport r = bounds_report(bf, bt);
    emit(env, bounds_to_json(r), [&] { return claims_csv(r.rows); }, [&] { return claims_text(r.rows); });
    fail_if_claims_fail(r.rows, env.err);
    return kExitPass;
}

int cmd_ledger(const Env &env, int cost, double eps) {
    const CostLedger l = wucc_ledger(cost, eps);
    emit(
        env, ledger_to_json(l), [&] { return ledger_csv(l); },
        [&] {
            std::ostringstream o;
            o << "C_P = " << l.C_P << ", eps_P = " << format_double(l.eps_P) << ", ceil(log 1/eps_P) = "
              << l.log_inv_eps << ", D = " << l.dimension << "\n\n";
            std::vector<std::vector<std::string>> rows;
            for (const auto &e : l.entries)
                rows.push_back({e.model, std::to_string(e.cost) + " " + e.unit, format_double(e.bias),
                                std::to_string(e.weakly_unbounded_cost)});
            o << aligned_csv({"model", "cost", "bias", "weakly_unbounded_cost"}, rows) << '\n' << claims_text(l.claims);
            return o.str();
        });
    fail_if_claims_fail(l.claims, env.err);
    return kExitPass;
}

// ---------------------------------------------------------------------------
// verify: search -> four compilers -> exact evaluation -> two-way embedding ->
// extraction -> re-check.

double max_closed_form_error(const Protocol &p, const PartialBoolFn &f,
                             const std::function<double(std::size_t, std::size_t)> &closed) {
    double worst = 0.0;
    for (std::size_t x = 0; x < f.x_size(); ++x)
        for (std::size_t y = 0; y < f.y_size(); ++y)
            worst = std::max(worst, std::abs(probability_zero(p, x, y) - closed(x, y)));
    return worst;
}

int cmd_verify(const Env &env, const std::string &fn, std::size_t max_dim, const SearchFlags &s) {
    const PartialBoolFn f = load_function(fn);
    const DimBound b = min_dim_upper(f, max_dim, s.config(1));
    const Arrangement &a = b.certificate;
    const RealizeVerdict v = realizes(a, f);
    const double mu = v.margin;
    const double N = static_cast<double>(a.dim());
    std::vector<ClaimRow> claims;
    const auto claim = [&](std::string label, double value, std::string rel, double bound, std::string src,
                           bool asserted, double tol = 0.0) {
        claims.push_back(make_claim(std::move(label), value, std::move(rel), bound, std::move(src), asserted, tol));
    };
    claim("certificate realizes f", v.realizes ? 1 : 0, "==", 1, "construction", true);
    claim("certificate magnitude <= 1", v.magnitude, "<=", 1, "construction", true, default_tolerances().magnitude);

    Json protocols = Json::object();
    const auto record = [&](const std::string &name, const Protocol &p) {
        const SuccessProfile prof = success_profile(p, f);
        protocols[name] = Json{{"cost", prof.cost.amount},
                               {"unit", prof.cost.unit()},
                               {"bias", prof.bias},
                               {"computes_f", prof.computes_f}};
        claim(name + ": computes f", prof.computes_f ? 1 : 0, "==", 1, "construction", true);
        return prof;
    };

    {
        const Protocol p = arr_to_classical_oneway(a, f);
        const SuccessProfile prof = record("classical_oneway", p);
        claim("classical_oneway: cost <= ceil(log(N+1)) + 1", prof.cost.amount, "<=", ceil_log2(a.dim() + 1) + 1,
              "reference", true);
        claim("classical_oneway: bias >= mu/(2(sqrt N + 1))", prof.bias, ">=", mu / (2 * (std::sqrt(N) + 1)),
              "construction", true, 1e-12);
        claim("classical_oneway: bias >= mu/(2 sqrt(N+1))", prof.bias, ">=", mu / (2 * std::sqrt(N + 1)), "reference",
              false, 1e-12);
        claim("classical_oneway: closed form error", max_closed_form_error(p, f, [&](auto x, auto y) {
                  return classical_oneway_closed_form(a, x, y);
              }),
              "<=", 1e-12, "construction", true);
    }
    QuantumOneWayProtocol q1;
    {
        q1 = arr_to_quantum_oneway(a, f);
        const Protocol p = q1;
        const SuccessProfile prof = record("quantum_oneway", p);
        const int n = ceil_log2_sqrt(a.dim() + 1);
        const double alpha = (std::sqrt(2.0) - 1.0) / std::pow(2.0, n + 0.5);
        claim("quantum_oneway: qubits == ceil(log sqrt(d+1))", prof.cost.amount, "==", n, "reference", true);
        claim("quantum_oneway: bias >= alpha mu", prof.bias, ">=", alpha * mu, "reference", true, 1e-12);
        claim("quantum_oneway: bias >= mu/2^{n+1}", prof.bias, ">=", mu / std::ldexp(1.0, n + 1), "construction", true,
              1e-12);
        claim("quantum_oneway: closed form error", max_closed_form_error(p, f, [&](auto x, auto y) {
                  return quantum_oneway_closed_form(a, x, y);
              }),
              "<=", 1e-10, "construction", true);
    }
    {
        const QuantumSMPProtocol qs = arr_to_quantum_smp(a, f);
        const Protocol p = qs;
        const SuccessProfile prof = record("quantum_smp", p);
        const int n = ceil_log2_sqrt(a.dim() + 2);
        claim("quantum_smp: qubits == 2 ceil(log sqrt(d+2))", prof.cost.amount, "==", 2 * n, "reference", true);
        claim("quantum_smp: alpha", qs.mix_alpha, "==", fingerprint_alpha(std::size_t{1} << n), "reference", true);
        claim("quantum_smp: closed form error", max_closed_form_error(p, f, [&](auto x, auto y) {
                  return quantum_smp_closed_form(a, x, y);
              }),
              "<=", 1e-10, "reference", true);
    }
    {
        const Protocol p = arr_to_classical_smp(a, f);
        const SuccessProfile prof = record("classical_smp", p);
        claim("classical_smp: bits == 2(ceil(log(N+1)) + 1)", prof.cost.amount, "==",
              2 * (ceil_log2(a.dim() + 1) + 1), "construction", true);
        claim("classical_smp: bits <= ceil(log(k+1)) + ceil(log(k+2))", prof.cost.amount, "<=",
              ceil_log2(a.dim() + 1) + ceil_log2(a.dim() + 2), "reference", false);
        claim("classical_smp: closed form error", max_closed_form_error(p, f, [&](auto x, auto y) {
                  return classical_smp_closed_form(a, x, y);
              }),
              "<=", 1e-12, "construction", true);
    }

    // Round trip through the two-way model.
    const TwoWayQuantumProtocol tw = quantum_oneway_to_two_way(q1);
    double embed_err = 0.0;
    for (std::size_t x = 0; x < f.x_size(); ++x)
        for (std::size_t y = 0; y < f.y_size(); ++y)
            embed_err = std::max(embed_err, std::abs(simulate_two_way(tw, x, y).p_zero - eval_quantum_oneway(q1, x, y)));
    claim("two-way embedding matches one-way", embed_err, "<=", 1e-9, "construction", true);
    const EndToEndCheck e2e = end_to_end_check(tw, f);
    for (const auto &c : e2e.claims) claims.push_back(c);

    Json j{{"function", function_to_json(f)},
           {"certificate", dim_bound_to_json(b)},
           {"protocols", std::move(protocols)},
           {"two_way_rounds", tw.num_rounds()},
           {"extraction", extraction_report_to_json(e2e.extraction)},
           {"claims", claims_to_json(claims)},
           {"pass", all_asserted(claims)}};
    emit(env, j, [&] { return claims_csv(claims); },
         [&] {
             std::ostringstream o;
             o << "certificate: dimension " << b.k_upper << (b.exact ? " (exact)" : " (upper bound)") << ", margin "
               << format_double(b.margin) << "\n\n"
               << claims_text(claims);
             return o.str();
         });
    fail_if_claims_fail(claims, env.err);
    return kExitPass;
}

int exit_code_for(ErrorCode c) {
    switch (c) {
        case ErrorCode::kInvalidInput:
        case ErrorCode::kShapeMismatch:
        case ErrorCode::kOutOfRange:
        case ErrorCode::kCapExceeded:
            return kExitMalformed;
        case ErrorCode::kPrecondition:
        case ErrorCode::kNumerical:
        case ErrorCode::kSearchFailed:
            return kExitCheckFailed;
    }
    return kExitCheckFailed;
}

std::optional<double> env_tolerance() {
    const char *raw = std::getenv(kToleranceEnv);
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    char *end = nullptr;
    const double v = std::strtod(raw, &end);
    require(end != raw && *end == '\0' && std::isfinite(v) && v >= 0.0, ErrorCode::kInvalidInput,
            std::string(kToleranceEnv) + " must be a non-negative number, got '" + raw + "'");
    return v;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Unbounded-error communication complexity toolkit: arrangements, protocols, reports", "arrcc"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();

    std::string fn, arr_path, protocol_path, kind;
    std::size_t dim = 1, max_dim = 4;
    int ledger_cost = 0;
    double ledger_eps = 0.0;
    SearchFlags search;
    double check_tol = 0.0;

    auto *fn_cmd = app.add_subcommand("fn", "Boolean function utilities");
    fn_cmd->require_subcommand(1);
    auto *fn_show = fn_cmd->add_subcommand("show", "parse and print a function");
    fn_show->add_option("function", fn, "file or family expression, e.g. EQ(2)")->required();

    auto *arr_cmd = app.add_subcommand("arr", "arrangement utilities");
    arr_cmd->require_subcommand(1);
    auto *arr_check = arr_cmd->add_subcommand("check", "check that an arrangement realizes a function");
    arr_check->add_option("arrangement", arr_path)->required();
    arr_check->add_option("function", fn)->required();
    arr_check->add_option("--tol", check_tol, "strict realization tolerance");
    auto *arr_search = arr_cmd->add_subcommand("search", "max-margin search in a fixed dimension");
    arr_search->add_option("function", fn)->required();
    arr_search->add_option("--dim", dim, "arrangement dimension")->capture_default_str();
    add_search_flags(arr_search, search);
    auto *arr_mindim = arr_cmd->add_subcommand("mindim", "certified upper bound on the minimum dimension");
    arr_mindim->add_option("function", fn)->required();
    arr_mindim->add_option("--max-dim", max_dim, "largest dimension tried")->capture_default_str();
    add_search_flags(arr_mindim, search);

    auto *synth = app.add_subcommand("synth", "compile an arrangement into a protocol");
    synth->add_option("kind", kind, "protocol kind")
        ->required()
        ->check(CLI::IsMember({"classical-oneway", "quantum-oneway", "quantum-smp", "classical-smp", "two-way"}));
    synth->add_option("arrangement", arr_path)->required();
    synth->add_option("function", fn)->required();

    auto *extract = app.add_subcommand("extract", "extract an arrangement from a two-way protocol");
    extract->add_option("protocol", protocol_path)->required();
    extract->add_option("function", fn)->required();

    auto *bounds = app.add_subcommand("bounds", "evaluate the dimension formulas for f and its transpose");
    bounds->add_option("function", fn)->required();
    bounds->add_option("--max-dim", max_dim, "largest dimension tried")->capture_default_str();
    add_search_flags(bounds, search);

    auto *ledger = app.add_subcommand("ledger", "weakly unbounded-error cost ledger");
    ledger->add_option("--cost", ledger_cost, "two-way protocol cost C_P in qubits")->required();
    ledger->add_option("--eps", ledger_eps, "two-way protocol bias eps_P")->required();

    auto *verify = app.add_subcommand("verify", "full round trip: search, synthesize, simulate, extract, re-check");
    verify->add_option("function", fn)->required();
    verify->add_option("--max-dim", max_dim, "largest dimension tried")->capture_default_str();
    add_search_flags(verify, search);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitMalformed;
    }

    try {
        if (const auto t = env_tolerance()) {
            if (arr_check->count("--tol") == 0) check_tol = *t;
            for (auto *c : {arr_search, arr_mindim, bounds, verify})
                if (*c && c->count("--tol") == 0) search.tol = *t;
        }
        Env env{out, err, format == "csv" ? Format::kCsv : format == "text" ? Format::kText : Format::kJson};
        if (*fn_show) return cmd_fn_show(env, fn);
        if (*arr_check) return cmd_arr_check(env, arr_path, fn, check_tol);
        if (*arr_search) return cmd_arr_search(env, fn, dim, search);
        if (*arr_mindim) return cmd_arr_mindim(env, fn, max_dim, search);
        if (*synth) return cmd_synth(env, kind, arr_path, fn);
        if (*extract) return cmd_extract(env, protocol_path, fn);
        if (*bounds) return cmd_bounds(env, fn, max_dim, search);
        if (*ledger) return cmd_ledger(env, ledger_cost, ledger_eps);
        if (*verify) return cmd_verify(env, fn, max_dim, search);
        err << app.help();
        return kExitMalformed;
    } catch (const CheckFailed &) {
        return kExitCheckFailed;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitCheckFailed;
    }
}

}  // namespace arrcc::cli
