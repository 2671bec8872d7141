#include "loopfinder/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace loopfinder::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct FileResult {
    std::string path;
    bool parse_ok = false;
    std::string parse_message;
    Verdict verdict;
    const Trs* trs = nullptr;  // only valid while the Trs object lives
};

UnfoldBudget budget_of(const RunConfig& c) {
    UnfoldBudget b;
    b.wall_seconds = c.timeout_seconds;
    b.max_iterations = c.max_iterations;
    b.max_generated = c.max_generated;
    return b;
}

ProveOptions prove_options_of(const RunConfig& c, std::ostream* trace_log) {
    ProveOptions p;
    p.test = c.test;
    p.cycle_limits = CycleLimits{c.max_cycles, c.max_cycle_len};
    p.trace_log = trace_log;
    return p;
}

json subst_json(const Substitution& s, const VarNames& names) {
    json out = json::object();
    for (const auto& [v, t] : s)
        out[names.name_of(v)] = term_to_string(t, &names);
    return out;
}

json verdict_json(const std::string& path, const Verdict& v, const VarNames& names) {
    json out;
    out["file"] = path;
    out["verdict"] = verdict_token(v.kind);
    out["iterations"] = v.stats.iterations;
    out["loops"] = v.stats.generated;
    out["time_ms"] = v.stats.elapsed.count();
    if (v.witness) {
        const LoopWitness& w = *v.witness;
        out["witness"] = term_to_string(w.witness_term, &names);
        out["theta1"] = subst_json(w.theta1, names);
        out["theta2"] = subst_json(w.theta2, names);
        out["rule"] = rule_to_string(w.compressed, &names);
        if (w.trace) {
            json steps = json::array();
            Term current = w.trace->start;
            for (const RewriteStep& s : w.trace->steps) {
                json step;
                step["from"] = term_to_string(current, &names);
                step["rule"] = s.rule_index + 1;
                step["position"] = position_to_string(s.pos);
                step["to"] = term_to_string(s.result, &names);
                steps.push_back(std::move(step));
                current = s.result;
            }
            out["certificate"] = std::move(steps);
            out["closes_at"] = position_to_string(w.trace->closing_pos);
            out["closing_subst"] = subst_json(w.trace->closing_subst, names);
        } else {
            out["certificate"] = nullptr;
        }
    }
    return out;
}

void print_plain(std::ostream& out, const Verdict& v, const VarNames& names) {
    out << verdict_token(v.kind) << '\n';
    if (v.witness) {
        const LoopWitness& w = *v.witness;
        out << "witness: " << term_to_string(w.witness_term, &names) << '\n';
        out << "theta1: " << subst_to_string(w.theta1, &names) << '\n';
        out << "theta2: " << subst_to_string(w.theta2, &names) << '\n';
        out << "rule: " << rule_to_string(w.compressed, &names) << '\n';
    }
    out << "iterations: " << v.stats.iterations << '\n';
    out << "loops: " << v.stats.generated << '\n';
    out << "time: " << v.stats.elapsed.count() << " ms\n";
    if (v.witness) {
        if (v.witness->trace) {
            out << "certificate:\n" << trace_to_string(*v.witness->trace, &names);
        } else {
            out << "certificate: UNVERIFIED\n";
        }
    }
}

int exit_code(VerdictKind k) {
    switch (k) {
        case VerdictKind::No:
            return 0;
        case VerdictKind::DontKnow:
            return 1;
        case VerdictKind::Timeout:
            return 2;
    }
    return 3;
}

std::optional<std::string> read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int run_single(const RunConfig& config, const fs::path& path, std::ostream& out,
               std::ostream& err) {
    auto text = read_file(path);
    if (!text) {
        err << path.string() << ": cannot read file\n";
        return 3;
    }
    ParseOutcome parsed = parse_trs(*text);
    if (!parsed.ok()) {
        for (const ParseError& e : parsed.errors)
            err << path.string() << ":" << e.to_string() << '\n';
        return 3;
    }
    const Trs& trs = *parsed.trs;
    if (config.dump_graph && config.format == OutputFormat::Plain) {
        DepGraph g = build_graph(trs);
        out << "graph:\n" << g.edge_list();
    }
    Verdict v = prove(trs, config.strategy, budget_of(config),
                      VerifyBounds{config.verify_depth, config.verify_nodes},
                      prove_options_of(config, config.verbose ? &err : nullptr));
    if (config.format == OutputFormat::Json)
        out << verdict_json(path.string(), v, trs.var_names).dump(2) << '\n';
    else
        print_plain(out, v, trs.var_names);
    return exit_code(v.kind);
}

int run_batch(const RunConfig& config, const fs::path& dir, std::ostream& out,
              std::ostream& err) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::recursive_directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".trs")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    int counts[3] = {0, 0, 0};
    int errors = 0;
    std::uint64_t total_loops = 0;
    std::int64_t total_ms = 0;
    json all = json::array();

    for (const fs::path& path : files) {
        auto text = read_file(path);
        if (!text) {
            err << path.string() << ": cannot read file\n";
            ++errors;
            continue;
        }
        ParseOutcome parsed = parse_trs(*text);
        if (!parsed.ok()) {
            for (const ParseError& e : parsed.errors)
                err << path.string() << ":" << e.to_string() << '\n';
            ++errors;
            continue;
        }
        const Trs& trs = *parsed.trs;
        Verdict v = prove(trs, config.strategy, budget_of(config),
                          VerifyBounds{config.verify_depth, config.verify_nodes},
                          prove_options_of(config, config.verbose ? &err : nullptr));
        ++counts[static_cast<int>(v.kind)];
        total_loops += v.stats.generated;
        total_ms += v.stats.elapsed.count();
        if (config.format == OutputFormat::Json) {
            all.push_back(verdict_json(path.string(), v, trs.var_names));
        } else {
            std::ostringstream line;
            line << path.string() << ": " << verdict_token(v.kind)
                 << " (iterations=" << v.stats.iterations << ", loops=" << v.stats.generated
                 << ", time=" << v.stats.elapsed.count() << " ms)\n";
            out << line.str();
        }
    }
    if (config.format == OutputFormat::Json) {
        out << all.dump(2) << '\n';
    } else {
        out << "summary: files=" << files.size() << " NO=" << counts[0]
            << " DONT_KNOW=" << counts[1] << " TIMEOUT=" << counts[2] << " errors=" << errors
            << " loops=" << total_loops << '\n';
        out << "time: " << total_ms << " ms\n";
    }
    return errors > 0 ? 3 : 0;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    fs::path path(config.input_path);
    std::error_code ec;
    if (fs::is_directory(path, ec))
        return run_batch(config, path, out, err);
    if (fs::is_regular_file(path, ec))
        return run_single(config, path, out, err);
    err << config.input_path << ": no such file or directory\n";
    return 3;
}

}  // namespace loopfinder::cli
