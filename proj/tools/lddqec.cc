// Copyright 2026 The lddqec Authors
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

// lddqec: command-line front end. Run `lddqec --help` for the subcommands.

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "lddqec/asymptotics.h"
#include "lddqec/code_io.h"
#include "lddqec/montecarlo.h"
#include "lddqec/sweep.h"

namespace {

using namespace lddqec;

constexpr int kExitViolation = 1;
constexpr int kExitMissing = 2;

struct Common {
    std::string code_path;
    std::string decoder_path;
    std::string dd_path;
    std::string out_path = "-";
    bool exact = false;
    unsigned threads = 0;
    uint64_t seed = 1;
};

std::string g_invocation;

std::string sha256_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FileMissing("cannot open " + path);
    }
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
    EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr);
    char buf[1 << 14];
    while (in) {
        in.read(buf, sizeof(buf));
        EVP_DigestUpdate(ctx.get(), buf, static_cast<size_t>(in.gcount()));
    }
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx.get(), md, &len);
    std::ostringstream os;
    for (unsigned i = 0; i < len; i++) {
        os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
    }
    return os.str();
}

std::vector<std::pair<std::string, std::string>> input_digests(const Common &c,
                                                               const std::vector<std::string> &extra = {}) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const std::string *p : {&c.code_path, &c.decoder_path, &c.dd_path}) {
        if (!p->empty()) {
            out.emplace_back(*p, sha256_file(*p));
        }
    }
    for (const auto &p : extra) {
        if (!p.empty()) {
            out.emplace_back(p, sha256_file(p));
        }
    }
    return out;
}

// Comment header for text outputs.
std::string comment_header(const std::vector<std::pair<std::string, std::string>> &digests) {
    std::string s = "# " + g_invocation + "\n";
    for (const auto &[path, hex] : digests) {
        s += "# sha256 " + hex + " " + path + "\n";
    }
    return s;
}

nlohmann::ordered_json provenance(const std::vector<std::pair<std::string, std::string>> &digests) {
    nlohmann::ordered_json j;
    j["invocation"] = g_invocation;
    nlohmann::ordered_json inputs = nlohmann::ordered_json::array();
    for (const auto &[path, hex] : digests) {
        inputs.push_back({{"path", path}, {"sha256", hex}});
    }
    j["inputs"] = inputs;
    return j;
}

void emit(const std::string &out_path, const std::string &text) {
    if (out_path == "-" || out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + out_path);
    }
    out << text;
}

StabilizerCode need_code(const Common &c) {
    if (c.code_path.empty()) {
        throw std::invalid_argument("--code is required");
    }
    return load_code(c.code_path);
}

DecouplingGroup need_dd(const Common &c, size_t n) {
    if (c.dd_path.empty()) {
        throw std::invalid_argument("--dd is required");
    }
    DecouplingGroup dd = load_dd(c.dd_path);
    if (dd.num_qubits() != n) {
        throw std::invalid_argument("decoupling group acts on " + std::to_string(dd.num_qubits()) +
                                    " qubits, code has " + std::to_string(n));
    }
    return dd;
}

// A code without checks has exactly one syndrome; its decoder is the identity.
DecoderMap need_decoder(const Common &c, const StabilizerCode &code) {
    if (!c.decoder_path.empty()) {
        return load_decoder(c.decoder_path, code);
    }
    if (code.num_checks() == 0) {
        return DecoderMap({PauliOperator(code.n)});
    }
    throw std::invalid_argument("--decoder is required for the qec setting");
}

std::vector<std::string> split_list(const std::vector<std::string> &items) {
    std::vector<std::string> out;
    for (const auto &item : items) {
        std::stringstream ss(item);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (!tok.empty()) {
                out.push_back(tok);
            }
        }
    }
    return out;
}

// Grid values of one parameter in exact mode.
std::vector<Rational> exact_axis(const std::string &text) {
    Axis a = parse_axis(text);
    if (a.points == 1 && text.find(':') == std::string::npos) {
        return {parse_rational(text)};
    }
    auto first = text.find(':');
    auto second = text.find(':', first + 1);
    return axis_values_exact(a, text.substr(0, first), text.substr(first + 1, second - first - 1));
}

void add_common(CLI::App *cmd, Common &c, bool decoder, bool dd) {
    cmd->add_option("--code", c.code_path, "Stabilizer code file");
    if (decoder) {
        cmd->add_option("--decoder", c.decoder_path, "Decoder table file");
    }
    if (dd) {
        cmd->add_option("--dd", c.dd_path, "Decoupling group file");
    }
    cmd->add_option("--out", c.out_path, "Output path ('-' for stdout)");
    cmd->add_option("--threads", c.threads, "Worker threads (0 = all cores)");
}

// ---- validate --------------------------------------------------------------

int run_validate(const Common &c) {
    // Missing files are checked first so the exit code distinguishes them.
    for (const std::string *p : {&c.code_path, &c.decoder_path, &c.dd_path}) {
        if (!p->empty() && !std::ifstream(*p)) {
            std::cerr << "missing file: " << *p << "\n";
            return kExitMissing;
        }
    }
    if (c.code_path.empty()) {
        std::cerr << "--code is required\n";
        return kExitViolation;
    }
    int status = 0;
    try {
        StabilizerCode code = load_code(c.code_path);
        std::cout << "code " << c.code_path << ": ok [[" << code.n << "," << code.k << "]]\n";
        if (!c.decoder_path.empty()) {
            load_decoder(c.decoder_path, code);
            std::cout << "decoder " << c.decoder_path << ": ok\n";
        }
        if (!c.dd_path.empty()) {
            DecouplingGroup dd = load_dd(c.dd_path);
            if (dd.num_qubits() != code.n) {
                std::cout << "dd " << c.dd_path << ": acts on " << dd.num_qubits() << " qubits, code has "
                          << code.n << "\n";
                return kExitViolation;
            }
            std::cout << "dd " << c.dd_path << ": ok (" << dd.generators().size() << " generators, rank "
                      << rank(dd.generators()) << ")\n";
        }
    } catch (const FileMissing &e) {
        std::cerr << e.what() << "\n";
        return kExitMissing;
    } catch (const std::exception &e) {
        std::cout << "violation: " << e.what() << "\n";
        status = kExitViolation;
    }
    return status;
}

// ---- wep -------------------------------------------------------------------

int run_wep(const Common &c, const std::string &setting) {
    StabilizerCode code = need_code(c);
    DecouplingGroup dd = need_dd(c, code.n);
    WepTable t;
    if (setting == "qec") {
        DecoderMap dec = need_decoder(c, code);
        t = compute_weps(code, dec, dd, c.threads);
    } else if (setting == "qed") {
        t = compute_qed_weps(code, dd, c.threads);
    } else {
        throw std::invalid_argument("--setting must be qec or qed");
    }
    auto violations = check_wep_identities(t);
    std::cerr << "identities: " << (violations.empty() ? "all hold" : std::to_string(violations.size()) + " violated")
              << "\n";
    for (const auto &v : violations) {
        std::cerr << "  " << v << "\n";
    }
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(wep_to_json(t));
    nlohmann::ordered_json out;
    out["provenance"] = provenance(input_digests(c));
    for (auto &[key, val] : j.items()) {
        out[key] = val;
    }
    emit(c.out_path, out.dump(2) + "\n");
    return violations.empty() ? 0 : kExitViolation;
}

// Tables needed by a strategy list.
struct Tables {
    std::optional<WepTable> qec;
    std::optional<WepTable> qed;
    const WepTable &for_strategy(Strategy s) const { return is_qed(s) ? *qed : *qec; }
};

Tables build_tables(const Common &c, const StabilizerCode &code, const std::vector<Strategy> &strategies) {
    Tables t;
    bool need_qec = false, need_qed = false;
    for (Strategy s : strategies) {
        (is_qed(s) ? need_qed : need_qec) = true;
    }
    DecouplingGroup dd = need_dd(c, code.n);
    if (need_qec) {
        DecoderMap dec = need_decoder(c, code);
        t.qec = compute_weps(code, dec, dd, c.threads);
    }
    if (need_qed) {
        t.qed = compute_qed_weps(code, dd, c.threads);
    }
    return t;
}

std::vector<Strategy> parse_strategies(const std::vector<std::string> &names) {
    std::vector<Strategy> out;
    for (const auto &s : split_list(names)) {
        out.push_back(parse_strategy(s));
    }
    if (out.empty()) {
        throw std::invalid_argument("no strategy given");
    }
    return out;
}

// ---- fidelity --------------------------------------------------------------

struct GridArgs {
    std::string p = "0.001";
    std::string p_dd = "1";
    std::string p_qec = "0";
    std::string p_qed = "0";
};

int run_fidelity(const Common &c, const std::vector<std::string> &strategy_names, const GridArgs &g) {
    StabilizerCode code = need_code(c);
    std::vector<Strategy> strategies = parse_strategies(strategy_names);
    Tables tables = build_tables(c, code, strategies);
    std::ostringstream os;
    os << comment_header(input_digests(c)) << fidelity_csv_header() << "\n";
    if (c.exact) {
        auto ps = exact_axis(g.p), dds = exact_axis(g.p_dd), qecs = exact_axis(g.p_qec), qeds = exact_axis(g.p_qed);
        for (Strategy s : strategies) {
            for (const auto &p : ps)
                for (const auto &d : dds)
                    for (const auto &q : qecs)
                        for (const auto &e : qeds) {
                            NoiseParams<Rational> np{p, d, q, e};
                            check_domain(np);
                            os << fidelity_csv_row(evaluate(tables.for_strategy(s), s, np), np) << "\n";
                        }
        }
    } else {
        auto ps = axis_values(parse_axis(g.p)), dds = axis_values(parse_axis(g.p_dd));
        auto qecs = axis_values(parse_axis(g.p_qec)), qeds = axis_values(parse_axis(g.p_qed));
        for (Strategy s : strategies) {
            for (double p : ps)
                for (double d : dds)
                    for (double q : qecs)
                        for (double e : qeds) {
                            NoiseParams<double> np{p, d, q, e};
                            check_domain(np);
                            os << fidelity_csv_row(evaluate(tables.for_strategy(s), s, np), np) << "\n";
                        }
        }
    }
    emit(c.out_path, os.str());
    return 0;
}

// ---- sweep -----------------------------------------------------------------

int run_sweep(const Common &c, const GridArgs &g, const std::string &comparator) {
    StabilizerCode code = need_code(c);
    Comparator comp = parse_comparator(comparator);
    Tables tables = build_tables(c, code, {Strategy::kHybrid});
    Axis pa = parse_axis(g.p);
    if (pa.points != 1) {
        throw std::invalid_argument("sweep takes a single --p value");
    }
    auto pts = sweep_relative_advantage(*tables.qec, pa.min, axis_values(parse_axis(g.p_dd)),
                                        axis_values(parse_axis(g.p_qec)), comp);
    std::ostringstream os;
    os << comment_header(input_digests(c)) << sweep_csv_header() << "\n";
    size_t degenerate = 0;
    for (const auto &pt : pts) {
        os << sweep_csv_row(pt, comp) << "\n";
        degenerate += pt.r.degenerate;
    }
    if (degenerate) {
        std::cerr << degenerate << " grid points had a non-positive infidelity (flagged)\n";
    }
    emit(c.out_path, os.str());
    return 0;
}

// ---- scan-ldd --------------------------------------------------------------

int run_scan(const Common &c, const GridArgs &g, const std::string &candidates_path) {
    StabilizerCode code = need_code(c);
    DecoderMap dec = need_decoder(c, code);
    std::vector<ScanCandidate> cands;
    if (!candidates_path.empty()) {
        std::ifstream in(candidates_path);
        if (!in) {
            throw FileMissing("cannot open " + candidates_path);
        }
        cands = read_candidates(in, code.n, candidates_path);
    } else {
        cands = dressing_candidates(code);
    }
    NoiseParams<double> np{parse_axis(g.p).min, parse_axis(g.p_dd).min, parse_axis(g.p_qec).min, 0.0};
    auto ranking = scan_ldd(code, dec, cands, np, c.threads);
    std::ostringstream os;
    os << comment_header(input_digests(c, {candidates_path}));
    os << "# candidates " << cands.size() << " p " << format_double(np.p) << " p_dd " << format_double(np.p_dd)
       << " p_qec " << format_double(np.p_qec) << "\n";
    os << scan_csv_header() << "\n";
    size_t ties = 0;
    for (size_t i = 0; i < ranking.size(); i++) {
        os << scan_csv_row(i + 1, ranking[i]) << "\n";
        ties += ranking[i].tie;
    }
    std::cerr << "scanned " << cands.size() << " groups; top tie family (" << ties << "):\n";
    for (size_t i = 0; i < ties; i++) {
        std::cerr << "  " << ranking[i].generators << "  " << format_double(ranking[i].objective) << "\n";
    }
    emit(c.out_path, os.str());
    return 0;
}

// ---- asymptotics / dress ---------------------------------------------------

int run_asymptotics(const Common &c) {
    StabilizerCode code = need_code(c);
    DecoderMap dec = need_decoder(c, code);
    DecouplingGroup dd = need_dd(c, code.n);
    AsymptoticsReport r = build_asymptotics_report(code, dec, dd, c.threads);
    nlohmann::ordered_json out;
    out["provenance"] = provenance(input_digests(c));
    nlohmann::ordered_json body = nlohmann::ordered_json::parse(asymptotics_to_json(r));
    for (auto &[key, val] : body.items()) {
        out[key] = val;
    }
    if (r.criteria.equal_weights) {
        WepTable t = compute_weps(code, dec, dd, c.threads);
        nlohmann::ordered_json th = nlohmann::ordered_json::array();
        for (auto pdd : {Rational(0), Rational(1, 2), Rational(9, 10)}) {
            ThresholdSearch s = find_advantage_threshold(t, pdd);
            th.push_back({{"p_dd", format_rational(pdd)},
                          {"certified", s.certified},
                          {"p0", s.p0},
                          {"holds_to_p_max", s.holds_everywhere}});
        }
        out["advantage_threshold"] = th;
    }
    emit(c.out_path, out.dump(2) + "\n");
    return 0;
}

int run_dress(const Common &c) {
    StabilizerCode code = need_code(c);
    DecoderMap dec = need_decoder(c, code);
    DecouplingGroup dd = need_dd(c, code.n);
    WepTable t = compute_weps(code, dec, dd, c.threads);
    auto d = find_dressing(code, dec, dd, t, c.threads);
    if (!d) {
        std::cerr << "no dressing exists: every minimum-weight uncorrectable error has a trivial syndrome\n";
        return kExitViolation;
    }
    std::cerr << "dressed generator " << d->generator_index << " by " << format_pauli(d->stabilizer)
              << " to suppress " << format_pauli(d->error) << "; beta " << suppressed_asymptotics(t).beta << " -> "
              << d->beta_after << " (alpha " << qec_asymptotics(t).alpha << ")\n";
    std::ostringstream os;
    os << comment_header(input_digests(c));
    write_dd(os, d->group);
    emit(c.out_path, os.str());
    return 0;
}

// ---- mc --------------------------------------------------------------------

int run_mc(const Common &c, const std::string &strategy, const GridArgs &g, uint64_t shots) {
    StabilizerCode code = need_code(c);
    McConfig cfg;
    cfg.strategy = parse_strategy(strategy);
    cfg.shots = shots;
    cfg.seed = c.seed;
    cfg.threads = c.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : c.threads;
    cfg.params = {parse_axis(g.p).min, parse_axis(g.p_dd).min, parse_axis(g.p_qec).min, parse_axis(g.p_qed).min};
    std::optional<DecoderMap> dec;
    if (!is_qed(cfg.strategy) && cfg.strategy != Strategy::kDdPhys) {
        dec = need_decoder(c, code);
    }
    DecouplingGroup dd = cfg.strategy == Strategy::kQecOnly || cfg.strategy == Strategy::kQedOnly ||
                                 cfg.strategy == Strategy::kDdPhys
                             ? (c.dd_path.empty() ? logical_group(code) : need_dd(c, code.n))
                             : need_dd(c, code.n);
    McEstimate e = estimate(cfg, code, dec ? &*dec : nullptr, dd);
    if (e.no_accepted) {
        std::cerr << "no shot was accepted\n";
    }
    std::ostringstream os;
    os << comment_header(input_digests(c)) << "# threads " << cfg.threads << "\n";
    os << mc_csv_header() << "\n" << mc_csv_row(cfg, e) << "\n";
    emit(c.out_path, os.str());
    return 0;
}

// ---- decoder ---------------------------------------------------------------

int run_decoder(const Common &c, const std::string &tie, const std::vector<std::string> &overrides) {
    StabilizerCode code = need_code(c);
    TieBreak tb;
    if (tie == "lex") {
        tb = TieBreak::kLexicographic;
    } else if (tie == "support-from-right") {
        tb = TieBreak::kSupportFromRight;
    } else {
        throw std::invalid_argument("--tie-break must be lex or support-from-right");
    }
    DecoderMap dec = min_weight_decoder(code, tb);
    for (const auto &o : split_list(overrides)) {
        dec.override_entry(code, parse_pauli(o));
    }
    auto problems = validate_decoder(code, dec);
    if (!problems.empty()) {
        throw std::invalid_argument(problems.front());
    }
    std::ostringstream os;
    os << comment_header(input_digests(c));
    write_decoder(os, code, dec);
    emit(c.out_path, os.str());
    return 0;
}

// Expands --config into flags placed right after the subcommand name. Keys already given
// on the command line are skipped, so explicit flags win. Returns the arguments without
// the program name.
std::vector<std::string> apply_config(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string path;
    for (size_t i = 0; i < args.size(); i++) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            path = args[i + 1];
            args.erase(args.begin() + static_cast<long>(i), args.begin() + static_cast<long>(i) + 2);
            break;
        }
        if (args[i].rfind("--config=", 0) == 0) {
            path = args[i].substr(9);
            args.erase(args.begin() + static_cast<long>(i));
            break;
        }
    }
    if (path.empty()) {
        return args;
    }
    std::ifstream in(path);
    if (!in) {
        throw FileMissing("cannot open config " + path);
    }
    auto given = [&](const std::string &flag) {
        for (const auto &a : args) {
            if (a == flag || a.rfind(flag + "=", 0) == 0) {
                return true;
            }
        }
        return false;
    };
    auto trim = [](std::string v) {
        auto b = v.find_first_not_of(" \t\r");
        auto e = v.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string() : v.substr(b, e - b + 1);
    };
    std::vector<std::string> extra;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        if (auto h = line.find('#'); h != std::string::npos) {
            line.resize(h);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": expected 'key = value'");
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        std::replace(key.begin(), key.end(), '_', '-');
        std::string flag = "--" + key;
        if (given(flag)) {
            continue;
        }
        if (key == "exact") {
            if (value == "true" || value == "1") {
                extra.push_back(flag);
            }
            continue;
        }
        extra.push_back(flag);
        extra.push_back(value);
    }
    auto sub = std::find_if(args.begin(), args.end(), [](const std::string &a) { return a.empty() || a[0] != '-'; });
    if (sub == args.end()) {
        throw std::invalid_argument("a subcommand is required");
    }
    args.insert(sub + 1, extra.begin(), extra.end());
    return args;
}

void add_grid(CLI::App *cmd, GridArgs &g, bool qed) {
    cmd->add_option("--p", g.p, "Physical error rate: value or min:max:points[:log]");
    cmd->add_option("--p-dd", g.p_dd, "DD suppression factor: value or axis");
    cmd->add_option("--p-qec", g.p_qec, "Recovery failure probability: value or axis");
    if (qed) {
        cmd->add_option("--p-qed", g.p_qed, "Syndrome readout error probability: value or axis");
    }
}

}  // namespace

int main(int argc, char **argv) {
    for (int i = 0; i < argc; i++) {
        g_invocation += (i ? " " : "") + std::string(i ? argv[i] : "lddqec");
    }
    CLI::App app{"lddqec: weight-enumerator fidelity analysis for LDD and QEC/QED memories"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "Config file of 'key = value' lines; command-line flags take precedence");

    Common c;
    GridArgs g;
    std::string setting = "qec";
    std::vector<std::string> strategies{"dd_phys,qec_only,ldd_only,hybrid"};
    std::string comparator = "qec";
    std::string candidates;
    std::string mc_strategy = "hybrid";
    uint64_t shots = 1000000;
    std::string tie = "lex";
    std::vector<std::string> overrides;

    auto *validate = app.add_subcommand("validate", "Load and validate code, decoder and DD files");
    add_common(validate, c, true, true);

    auto *wep = app.add_subcommand("wep", "Compute the weight-enumerator table (JSON)");
    add_common(wep, c, true, true);
    wep->add_option("--setting", setting, "qec or qed")->check(CLI::IsMember({"qec", "qed"}));

    auto *fidelity = app.add_subcommand("fidelity", "Evaluate strategies over a parameter grid (CSV)");
    add_common(fidelity, c, true, true);
    add_grid(fidelity, g, true);
    fidelity->add_option("--strategy", strategies, "Comma-separated strategy names");
    fidelity->add_flag("--exact", c.exact, "Exact rational arithmetic");

    auto *sweep = app.add_subcommand("sweep", "Relative advantage R over a (p_dd, p_qec) grid (CSV)");
    add_common(sweep, c, true, true);
    add_grid(sweep, g, false);
    sweep->add_option("--comparator", comparator, "dd, ldd or qec");

    auto *scan = app.add_subcommand("scan-ldd", "Rank LDD groups by hybrid infidelity (CSV)");
    add_common(scan, c, true, true);
    add_grid(scan, g, false);
    scan->add_option("--candidates", candidates, "Candidate list file (required for k > 1)");

    auto *asym = app.add_subcommand("asymptotics", "Small-p structure and criteria (JSON)");
    add_common(asym, c, true, true);

    auto *dress = app.add_subcommand("dress", "Dress a DD generator by a stabilizer (DD file)");
    add_common(dress, c, true, true);

    auto *mc = app.add_subcommand("mc", "Monte Carlo estimate of F and P_A (CSV)");
    add_common(mc, c, true, true);
    add_grid(mc, g, true);
    mc->add_option("--strategy", mc_strategy, "Strategy name");
    mc->add_option("--shots", shots, "Number of cycles")->check(CLI::PositiveNumber);
    mc->add_option("--seed", c.seed, "RNG seed");

    auto *decoder = app.add_subcommand("decoder", "Build a minimum-weight decoder table");
    add_common(decoder, c, false, false);
    decoder->add_option("--tie-break", tie, "lex or support-from-right");
    decoder->add_option("--override", overrides, "Recovery Paulis replacing the table entry of their syndrome");

    try {
        std::vector<std::string> args;
        try {
            args = apply_config(argc, argv);
        } catch (const FileMissing &e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitMissing;
        } catch (const std::exception &e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitViolation;
        }
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError &e) {
        return app.exit(e);
    }

    try {
        if (*validate) return run_validate(c);
        if (*wep) return run_wep(c, setting);
        if (*fidelity) return run_fidelity(c, strategies, g);
        if (*sweep) return run_sweep(c, g, comparator);
        if (*scan) return run_scan(c, g, candidates);
        if (*asym) return run_asymptotics(c);
        if (*dress) return run_dress(c);
        if (*mc) return run_mc(c, mc_strategy, g, shots);
        if (*decoder) return run_decoder(c, tie, overrides);
    } catch (const FileMissing &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMissing;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    }
    return 0;
}
