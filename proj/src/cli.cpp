// Copyright 2026 The icmforge Authors
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


#include "icmforge/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "icmforge/branch.hpp"
#include "icmforge/compiler.hpp"
#include "icmforge/depth.hpp"
#include "icmforge/gadgets.hpp"
#include "icmforge/resources.hpp"
#include "icmforge/text_format.hpp"

namespace icmforge {

namespace {

constexpr double kDefaultTol = 1e-10;

/// Usage-level failure: bad input, unknown name, unreadable file.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

double parse_real(std::string_view text, const char* what) {
    std::string s(text);
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
        throw UsageError(std::string("invalid ") + what + " '" + s + "'");
    }
    return v;
}

/// --tol beats ICMFORGE_TOL, which beats the built-in default.
double resolve_tol(const std::optional<double>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("ICMFORGE_TOL"); env != nullptr && *env != '\0') {
        return parse_real(env, "ICMFORGE_TOL");
    }
    return kDefaultTol;
}

struct LoadedCircuit {
    Circuit circuit;
    const GadgetSpec* gadget = nullptr;
};

/// Gadget names win; anything else is read as a circuit file.
LoadedCircuit load_circuit(const std::string& spec) {
    if (const auto* g = find_gadget(spec)) return {g->build(), g};
    return {parse_circuit(read_file(spec)), nullptr};
}

/// Fixed-point text with negative zero folded away.
std::string fixed(double v, int digits) {
    if (std::abs(v) < 0.5 * std::pow(10.0, -digits)) v = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string phase_text(Amplitude p) {
    const double im = std::abs(p.imag()) < 5e-7 ? 0.0 : p.imag();
    return fixed(p.real(), 6) + (im < 0 ? "-" : "+") + fixed(std::abs(im), 6) + "i";
}

std::string bits_text(const std::vector<std::uint8_t>& bits) {
    std::string s;
    for (auto b : bits) s.push_back(b ? '1' : '0');
    return s.empty() ? "-" : s;
}

void write_header(std::ostream& out, const std::string& label, const ResourceReport& r) {
    out << "# " << label << " ancillae=" << r.ancillae << " cnots=" << r.cnots << " czs=" << r.czs
        << " hs=" << r.hs << " measurements=" << r.measurements << '\n';
}

void write_depths(std::ostream& out, const ResourceReport& r) {
    out << "# depth clifford=" << r.clifford_depth << " measurement=" << r.measurement_depth
        << " total=" << r.clifford_depth + r.measurement_depth << '\n';
}

int report_equivalence(const EquivalenceResult& eq, const std::string& subject, const std::string& target,
                       double tol, bool json, std::ostream& out) {
    if (json) {
        auto branches = nlohmann::json::array();
        for (const auto& b : eq.reference_branches) {
            branches.push_back({{"outcomes", bits_text(b.outcomes)},
                                {"probability", std::stod(fixed(b.probability, 10))},
                                {"phase", phase_text(b.global_phase)}});
        }
        nlohmann::json j{{"subject", subject},
                         {"target", target},
                         {"tolerance", tol},
                         {"inputs", eq.inputs_checked},
                         {"branches", branches},
                         {"worst_overlap", std::stod(fixed(eq.worst_overlap, 12))},
                         {"failures", eq.failures},
                         {"verdict", eq.passed ? "PASS" : "FAIL"}};
        out << j.dump(2) << '\n';
    } else {
        out << "# verify " << subject << " target=" << target << '\n';
        out << "outcomes probability phase\n";
        for (const auto& b : eq.reference_branches) {
            out << bits_text(b.outcomes) << ' ' << fixed(b.probability, 10) << ' ' << phase_text(b.global_phase)
                << '\n';
        }
        out << "inputs=" << eq.inputs_checked << " branches=" << eq.branches_per_input
            << " worst_overlap=" << fixed(eq.worst_overlap, 12) << '\n';
        out << (eq.passed ? "PASS" : "FAIL") << '\n';
    }
    return eq.passed ? kExitOk : kExitVerifyFailed;
}

void warn_if_not_icm(const Circuit& c, std::ostream& err) {
    if (validate_icm(c, IcmOptions{true}).passed()) return;
    err << "warning: circuit is not in ICM form\n";
}

ResourceReport parse_legacy_t(const std::string& text) {
    std::vector<std::size_t> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        unsigned long long n = 0;
        try {
            n = std::stoull(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || item.empty()) throw UsageError("invalid --legacy-t '" + text + "'");
        v.push_back(n);
    }
    if (v.size() != 3) throw UsageError("--legacy-t expects ancillae,cnots,measurements");
    ResourceReport r;
    r.ancillae = v[0];
    r.cnots = v[1];
    r.measurements = v[2];
    return r;
}

struct Options {
    std::string subject;
    std::string target;
    std::optional<double> tol;
    bool json = false;
    std::string mode = "icm";
    std::string t_gadget = "compact";
    bool verify = false;
    long long n = 0;
    bool optimize = true;
    std::string suite = "paper";
    std::string legacy_t;
    std::size_t suite_n = 4;
};

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    const auto loaded = load_circuit(o.subject);
    const auto tol = resolve_tol(o.tol);
    const auto target = resolve_target(o.target, loaded.circuit.data_arity());
    warn_if_not_icm(loaded.circuit, err);
    const auto eq = channel_equiv(loaded.circuit, target, tol);
    for (const auto& f : eq.failures) err << "mismatch: " << f << '\n';
    return report_equivalence(eq, o.subject, o.target, tol, o.json, out);
}

int verify_conversion(const Circuit& input, const Circuit& output, double tol, std::ostream& err) {
    if (input.data_arity() > 3) throw UsageError("--verify supports data arity up to 3");
    const auto eq = channel_equiv(output, induced_unitary(input), tol);
    if (!eq.passed) {
        for (const auto& f : eq.failures) err << "mismatch: " << f << '\n';
        err << "verification FAILED\n";
        return kExitVerifyFailed;
    }
    err << "verification PASS (" << eq.inputs_checked << " inputs, " << eq.branches_per_input << " branches)\n";
    return kExitOk;
}

int cmd_convert(const Options& o, std::ostream& out, std::ostream& err) {
    const auto input = load_circuit(o.subject).circuit;
    const auto tol = resolve_tol(o.tol);
    Circuit converted;
    std::ostringstream header;
    if (o.mode == "icm") {
        converted = icm_convert(input);
        header << "# icmforge convert mode=icm t-gadget=" << o.t_gadget << '\n';
        const auto policy = o.t_gadget == "compact" ? TGadgetPolicy::Compact : TGadgetPolicy::LegacyCounts;
        if (policy == TGadgetPolicy::LegacyCounts) {
            write_header(header, "budget", icm_budget(input, policy, legacy_t_counts()));
        }
    } else {
        const auto form = time_optimal_transform(input);
        converted = form.circuit;
        header << "# icmforge convert mode=time-optimal\n";
        const auto in = count(input);
        const auto c = count(converted);
        header << "# t-count=" << form.t_count << " measurement-layers=" << form.measurement_layers.size() << '\n';
        if (form.t_count > 0) {
            const auto k = form.t_count;
            header << "# per-t ancillae=" << (c.ancillae - in.ancillae) / k
                   << " cnots=" << (c.cnots - in.cnots) / k << " measurements=" << c.measurements / k << '\n';
        }
    }
    const auto r = count(converted);
    write_header(header, "counts", r);
    write_depths(header, r);
    if (o.verify) {
        const int code = verify_conversion(input, converted, tol, err);
        if (code != kExitOk) return code;
    }
    out << header.str() << serialize_circuit(converted);
    return kExitOk;
}

int cmd_build_htn(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.n < 1) throw UsageError("--n must be at least 1");
    const auto n = static_cast<std::size_t>(o.n);
    const auto c = build_htn(n, o.optimize);
    const auto r = count(c);
    if (o.verify) {
        const auto eq = channel_equiv(c, unitaries::ht_power(n), resolve_tol(o.tol));
        if (!eq.passed) {
            for (const auto& f : eq.failures) err << "mismatch: " << f << '\n';
            err << "verification FAILED\n";
            return kExitVerifyFailed;
        }
        err << "verification PASS\n";
    }
    out << "# icmforge build-htn n=" << n << " optimize=" << (o.optimize ? "true" : "false") << '\n';
    write_header(out, "counts", r);
    write_depths(out, r);
    out << serialize_circuit(c);
    return kExitOk;
}

int cmd_report(const Options& o, std::ostream& out, std::ostream&) {
    SuiteOptions so;
    if (!o.legacy_t.empty()) so.legacy_t = parse_legacy_t(o.legacy_t);
    so.htn_n = o.suite_n;
    const auto suite = paper_reproduction_suite(so);
    out << (o.json ? format_suite_json(suite) : format_suite_text(suite));
    const bool all = std::all_of(suite.begin(), suite.end(), [](const SuiteEntry& e) { return e.passed; });
    return all ? kExitOk : kExitVerifyFailed;
}

}  // namespace

Matrix parse_matrix(std::string_view text) {
    std::vector<std::vector<Amplitude>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        std::vector<Amplitude> row;
        while (ls >> tok) {
            const auto comma = tok.find(',');
            try {
                if (comma == std::string::npos) {
                    row.emplace_back(parse_real(tok, "matrix entry"), 0.0);
                } else {
                    row.emplace_back(parse_real(std::string_view(tok).substr(0, comma), "matrix entry"),
                                     parse_real(std::string_view(tok).substr(comma + 1), "matrix entry"));
                }
            } catch (const UsageError& e) {
                throw std::invalid_argument(e.what());
            }
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    const auto d = rows.size();
    if (d == 0 || (d & (d - 1)) != 0) throw std::invalid_argument("matrix dimension must be a power of two");
    Matrix m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (std::size_t i = 0; i < d; ++i) {
        if (rows[i].size() != d) throw std::invalid_argument("matrix is not square");
        for (std::size_t j = 0; j < d; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
    }
    return m;
}

Matrix resolve_target(std::string_view spec, std::size_t arity) {
    if (spec == "t") return unitaries::t();
    if (spec == "tdag") return unitaries::tdag();
    if (spec == "s") return unitaries::s();
    if (spec == "h") return unitaries::h();
    if (spec == "x") return unitaries::single(GateKind::X);
    if (spec == "z") return unitaries::single(GateKind::Z);
    if (spec == "cv") return unitaries::controlled_sqrt_x();
    if (spec == "identity") return unitaries::identity(arity);
    if (spec.starts_with("identity:") || spec.starts_with("ht:")) {
        const auto arg = spec.substr(spec.find(':') + 1);
        const double v = parse_real(arg, "target argument");
        if (v < 1 || v != std::floor(v) || v > 64) throw UsageError("invalid target '" + std::string(spec) + "'");
        const auto k = static_cast<std::size_t>(v);
        return spec.starts_with("ht:") ? unitaries::ht_power(k) : unitaries::identity(k);
    }
    try {
        return parse_matrix(read_file(std::string(spec)));
    } catch (const UsageError&) {
        throw UsageError("unknown target '" + std::string(spec) + "'");
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"icmforge: compile Clifford+T circuits to ICM and time-optimal form and verify them", "icmforge"};
    app.require_subcommand(1);
    Options o;

    auto* verify = app.add_subcommand("verify", "Check a gadget or circuit file against a target unitary");
    verify->add_option("subject", o.subject, "Gadget name or circuit file")->required();
    verify->add_option("--target", o.target, "t, tdag, s, h, x, z, identity[:k], cv, ht:<n> or a matrix file")
        ->required();
    verify->add_option("--tol", o.tol, "Tolerance (default 1e-10, or ICMFORGE_TOL)");
    verify->add_flag("--json", o.json, "Structured output");

    auto* convert = app.add_subcommand("convert", "Lower a measurement-free Clifford+T circuit");
    convert->add_option("subject", o.subject, "Gadget name or circuit file")->required();
    convert->add_option("--mode", o.mode, "icm or time-optimal")
        ->check(CLI::IsMember({"icm", "time-optimal"}))
        ->capture_default_str();
    convert->add_option("--t-gadget", o.t_gadget, "T pricing for reporting: compact or legacy-counts")
        ->check(CLI::IsMember({"compact", "legacy-counts"}))
        ->capture_default_str();
    convert->add_flag("--verify", o.verify, "Check channel equivalence before emitting (arity <= 3)");
    convert->add_option("--tol", o.tol, "Tolerance (default 1e-10, or ICMFORGE_TOL)");

    auto* htn = app.add_subcommand("build-htn", "Emit the (HT)^n circuit");
    htn->add_option("--n", o.n, "Number of HT steps (>= 1)")->required();
    htn->add_option("--optimize", o.optimize, "Fold inter-gadget H into CZ (true/false)")->capture_default_str();
    htn->add_flag("--verify", o.verify, "Check channel equivalence against (HT)^n first");
    htn->add_option("--tol", o.tol, "Tolerance (default 1e-10, or ICMFORGE_TOL)");

    auto* report = app.add_subcommand("report", "Print the resource comparison suite");
    report->add_option("--suite", o.suite, "Suite name")->check(CLI::IsMember({"paper"}))->capture_default_str();
    report->add_flag("--json", o.json, "Structured output");
    report->add_option("--legacy-t", o.legacy_t, "Override the legacy T price as ancillae,cnots,measurements");
    report->add_option("--n", o.suite_n, "Steps for the (HT)^n comparison")
        ->check(CLI::Range(std::size_t{1}, std::size_t{100000}))
        ->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (verify->parsed()) return cmd_verify(o, out, err);
        if (convert->parsed()) return cmd_convert(o, out, err);
        if (htn->parsed()) return cmd_build_htn(o, out, err);
        return cmd_report(o, out, err);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
    } catch (const UnsupportedGate& e) {
        err << "unsupported: " << e.what() << '\n';
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
    }
    return kExitUsage;
}

}  // namespace icmforge
