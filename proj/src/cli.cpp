#include "extragrad/cli.hpp"

#include <fstream>
#include <future>
#include <ostream>
#include <sstream>

#include "extragrad/config_io.hpp"
#include "extragrad/diagnostics.hpp"
#include "extragrad/oracle.hpp"
#include "extragrad/schemes.hpp"

namespace extragrad {

namespace {

struct LoadedConfig {
    std::optional<ProblemConfig> config;
    int exit_code = kExitOk;
};

LoadedConfig load_config(const std::string& path, std::optional<std::uint64_t> seed_override,
                         std::ostream& err) {
    std::ifstream probe(path);
    if (!probe) {
        err << "error: cannot open config file '" << path << "'\n";
        return {std::nullopt, kExitIo};
    }
    std::ostringstream ss;
    ss << probe.rdbuf();
    auto parsed = parse_config(ss.str());
    if (!parsed.ok()) {
        for (const auto& e : parsed.errors) err << "config error: " << e << "\n";
        return {std::nullopt, kExitValidation};
    }
    if (seed_override) parsed.config->seed = *seed_override;
    return {std::move(parsed.config), kExitOk};
}

void print_witness(std::ostream& out, const AuditReport& r) {
    const auto render = [](const Vector& v) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.dim(); ++i) {
            if (i) s += ", ";
            s += format_real(v[i]);
        }
        return s + ")";
    };
    out << "  worst witness: x=" << render(r.worst_witness.first)
        << " y=" << render(r.worst_witness.second) << "\n";
}

}  // namespace

int cmd_run(const std::string& config_path, const std::string& out_path,
            std::optional<std::uint64_t> seed_override, std::ostream& out, std::ostream& err) {
    auto loaded = load_config(config_path, seed_override, err);
    if (!loaded.config) return loaded.exit_code;
    const ProblemConfig& cfg = *loaded.config;

    Trace trace;
    try {
        trace = run(cfg);
    } catch (const ContractViolation& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    }

    std::ofstream csv(out_path);
    if (!csv) {
        err << "error: cannot open output file '" << out_path << "'\n";
        return kExitIo;
    }
    write_trace_csv(trace, csv);
    csv.flush();
    if (!csv) {
        err << "error: failed writing '" << out_path << "'\n";
        return kExitIo;
    }

    const TraceRecord& last = trace.final_record();
    out << "scheme=" << to_string(cfg.scheme) << " terminal_reason=" << to_string(trace.terminal_reason)
        << " iterations=" << trace.iterations() << " final_resid_fix=" << format_real(last.resid_fix)
        << " final_resid_vi=" << format_real(last.resid_vi) << "\n";
    return trace.terminal_reason == TerminalReason::residual ? kExitOk : kExitNoConvergence;
}

int cmd_compare(const std::string& config_path, const std::vector<std::string>& scheme_names,
                const std::string& out_path, std::optional<std::uint64_t> seed_override,
                std::ostream& out, std::ostream& err) {
    if (scheme_names.empty()) {
        err << "error: no schemes\n";
        return kExitValidation;
    }
    auto loaded = load_config(config_path, seed_override, err);
    if (!loaded.config) return loaded.exit_code;
    const ProblemConfig& cfg = *loaded.config;

    struct Entry {
        std::string name;
        std::optional<SchemeKind> kind;
        std::vector<std::string> violations;
        std::future<Trace> pending;
    };
    std::vector<Entry> entries;
    entries.reserve(scheme_names.size());
    for (const auto& name : scheme_names) {
        Entry e;
        e.name = name;
        e.kind = scheme_from_string(name);
        if (!e.kind) {
            e.violations.push_back("unknown scheme '" + name + "'");
        } else {
            e.violations = validate_problem(cfg, *e.kind);
        }
        if (e.kind && e.violations.empty()) {
            const SchemeKind k = *e.kind;
            e.pending = std::async(std::launch::async, [&cfg, k] { return run(cfg, k); });
        }
        entries.push_back(std::move(e));
    }

    std::ostringstream table;
    table << "scheme,iterations,final_resid_fix,final_resid_vi,terminal_reason\n";
    bool any_invalid = false;
    bool all_converged = true;
    for (auto& e : entries) {
        if (!e.pending.valid()) {
            any_invalid = true;
            table << e.name << ",,,,invalid_config\n";
            for (const auto& v : e.violations) err << e.name << ": " << v << "\n";
            continue;
        }
        const Trace trace = e.pending.get();
        const TraceRecord& last = trace.final_record();
        table << e.name << ',' << trace.iterations() << ',' << format_real(last.resid_fix) << ','
              << format_real(last.resid_vi) << ',' << to_string(trace.terminal_reason) << "\n";
        if (trace.terminal_reason != TerminalReason::residual) all_converged = false;
    }

    std::ofstream csv(out_path);
    if (!csv) {
        err << "error: cannot open output file '" << out_path << "'\n";
        return kExitIo;
    }
    csv << table.str();
    csv.flush();
    if (!csv) {
        err << "error: failed writing '" << out_path << "'\n";
        return kExitIo;
    }
    out << table.str();
    if (any_invalid) return kExitValidation;
    return all_converged ? kExitOk : kExitNoConvergence;
}

int cmd_audit(const std::string& config_path, std::optional<std::uint64_t> seed_override,
              long sample_count, std::ostream& out, std::ostream& err) {
    auto loaded = load_config(config_path, seed_override, err);
    if (!loaded.config) return loaded.exit_code;
    const ProblemConfig& cfg = *loaded.config;

    std::vector<AuditReport> reports;
    if (cfg.set) {
        for (auto& r : audit_projection(*cfg.set, sample_count, cfg.seed)) reports.push_back(r);
    }
    if (cfg.operator_A) {
        for (auto& r : audit_ism(*cfg.operator_A, cfg.dimension, sample_count, cfg.seed + 1))
            reports.push_back(r);
    }
    if (cfg.map_T)
        reports.push_back(
            audit_nonexpansive(*cfg.map_T, cfg.dimension, sample_count, cfg.seed + 2));
    if (cfg.map_S)
        reports.push_back(audit_strict_pseudocontraction(*cfg.map_S, cfg.dimension, sample_count,
                                                         cfg.seed + 3));

    bool all_ok = true;
    for (const auto& r : reports) {
        out << describe(r) << "\n";
        if (!r.passed) {
            print_witness(out, r);
            all_ok = false;
        }
    }
    if (reports.empty()) {
        err << "error: config has no auditable slots\n";
        return kExitValidation;
    }
    return all_ok ? kExitOk : kExitValidation;
}

int cmd_oracle(const std::string& config_path, std::optional<std::uint64_t> seed_override,
               long sample_count, std::ostream& out, std::ostream& err) {
    auto loaded = load_config(config_path, seed_override, err);
    if (!loaded.config) return loaded.exit_code;
    const ProblemConfig& cfg = *loaded.config;

    if (!cfg.set || !cfg.operator_A) {
        err << "error: oracle requires set and operator_A\n";
        return kExitValidation;
    }

    const auto sol = solve_vi_reference(*cfg.set, *cfg.operator_A, cfg.stop.residual_threshold);
    out << "reference solution:";
    for (double v : sol.x) out << ' ' << format_real(v);
    out << "\nconverged=" << (sol.converged ? "true" : "false") << " iterations=" << sol.iterations
        << " residual=" << format_real(sol.residual) << "\n";
    if (!sol.converged) {
        err << "error: reference solver exhausted its budget\n";
        return kExitNoConvergence;
    }

    const auto cert = verify_vi_certificate(*cfg.set, *cfg.operator_A, sol.x, sample_count, cfg.seed);
    out << "certificate: feasible=" << (cert.feasible ? "true" : "false")
        << " worst_violation=" << format_real(cert.worst_violation) << " samples=" << cert.samples
        << " passed=" << (cert.passed ? "true" : "false") << "\n";
    return cert.passed ? kExitOk : kExitValidation;
}

}  // namespace extragrad
