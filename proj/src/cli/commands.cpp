#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "stepenum/anothersol.hpp"
#include "stepenum/cli.hpp"
#include "stepenum/errors.hpp"
#include "stepenum/horn.hpp"
#include "stepenum/instrument.hpp"
#include "stepenum/random_instances.hpp"
#include "stepenum/regularize.hpp"
#include "stepenum/synthetic.hpp"
#include "stepenum/vertex_cover.hpp"

namespace stepenum::cli {

namespace {

struct ProblemArgs {
    std::string problem;
    std::string graph;
    std::string cnf;
    std::string spec;
    std::size_t k = 0;
};

struct OutputArgs {
    std::string solutions;
    std::string trace;
    std::string report;
    std::optional<Cost> cap;
};

struct LoadedProblem {
    const ProblemDescriptor* descriptor;
    Instance instance;
    EnumeratorFactory factory;
    EnumeratorBoundDecl declared;
    std::optional<SyntheticSpec> synthetic;
};

void add_problem_options(CLI::App& cmd, ProblemArgs& p) {
    cmd.add_option("--problem", p.problem, "vertex-cover | horn-sat | synthetic")
        ->required()
        ->check(CLI::IsMember({"vertex-cover", "horn-sat", "synthetic"}));
    cmd.add_option("--graph", p.graph, "edge list: 'V E' then E lines 'u v'");
    cmd.add_option("--k", p.k, "vertex-cover size bound");
    cmd.add_option("--cnf", p.cnf, "DIMACS CNF file (Horn clauses only)");
    cmd.add_option("--spec", p.spec, "synthetic spec JSON");
}

void add_output_options(CLI::App& cmd, OutputArgs& o) {
    cmd.add_option("--solutions", o.solutions, "solutions file (default: stdout)");
    cmd.add_option("--trace", o.trace, "delay trace CSV");
    cmd.add_option("--report", o.report, "report JSON");
    cmd.add_option("--cap", o.cap, "global cost cap in ticks (overrides ENUM_COST_CAP)");
}

Cost resolve_cap(const std::optional<Cost>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("ENUM_COST_CAP")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("ENUM_COST_CAP is not a natural number");
        }
    }
    return kDefaultCostCap;
}

LoadedProblem load_problem(const ProblemArgs& p) {
    if (p.problem == "vertex-cover") {
        if (p.graph.empty()) throw std::invalid_argument("--graph is required for vertex-cover");
        const GraphInstance g = parse_edge_list(read_file(p.graph), p.k);
        const auto& d = vertex_cover_problem();
        return {&d, Instance(d, g.encode()),
                [](const Instance& x) { return vertex_cover_enum(GraphInstance::decode(x.raw())); },
                vertex_cover_bound(), std::nullopt};
    }
    if (p.problem == "horn-sat") {
        if (p.cnf.empty()) throw std::invalid_argument("--cnf is required for horn-sat");
        const HornFormula f = parse_dimacs(read_file(p.cnf));
        const auto& d = horn_sat_problem();
        return {&d, Instance(d, f.encode()),
                [](const Instance& x) { return horn_sat_enum(HornFormula::decode(x.raw())); },
                horn_sat_bound(), std::nullopt};
    }
    if (p.spec.empty()) throw std::invalid_argument("--spec is required for synthetic");
    const SyntheticSpec s = SyntheticSpec::from_json(nlohmann::json::parse(read_file(p.spec)));
    const auto& d = synthetic_problem();
    return {&d, Instance(d, synthetic_instance_bytes(s)),
            [](const Instance& x) {
                return synthetic_enum(SyntheticSpec::from_json(nlohmann::json::parse(x.raw())));
            },
            synthetic_cap_schedule(s), s};
}

void emit_solutions(const OutputArgs& o, const std::vector<Solution>& sols, std::ostream& out) {
    std::ostringstream ss;
    write_solutions(ss, sols);
    if (o.solutions.empty()) out << ss.str();
    else write_file_atomic(o.solutions, ss.str());
}

void emit_trace(const OutputArgs& o, const DelayTrace& trace) {
    if (o.trace.empty()) return;
    std::ostringstream ss;
    write_trace_csv(ss, trace);
    write_file_atomic(o.trace, ss.str());
}

void emit_report(const OutputArgs& o, const RunRecord& rec) {
    if (o.report.empty()) return;
    const RunRecord runs[] = {rec};
    write_file_atomic(o.report, report(runs).dump(2) + "\n");
}

RunRecord base_record(const LoadedProblem& lp, const OutputArgs& o) {
    RunRecord r;
    r.problem = lp.descriptor->name;
    r.instance_digest = instance_digest(lp.instance.raw());
    r.n = lp.instance.size();
    r.k = lp.instance.param();
    r.trace_csv_path = o.trace;
    return r;
}

void add_fit(RunRecord& r, const DelayTrace& trace) {
    try {
        r.fits.push_back(fit_exponent(trace));
    } catch (const InsufficientData&) {
    } catch (const DegenerateTrace&) {
    }
}

int cmd_enumerate(const ProblemArgs& pa, const OutputArgs& o, std::ostream& out) {
    const LoadedProblem lp = load_problem(pa);
    SteppedEnumerator e = lp.factory(lp.instance);
    const RunResult run = run_to_completion(e, resolve_cap(o.cap));

    RunRecord rec = base_record(lp, o);
    rec.solutions_count = run.solutions.size();
    add_fit(rec, run.trace);
    const auto& decl = lp.declared;
    rec.bounds.push_back(check_cap_bound(run.trace, decl.scale(rec.k, rec.n), 1, decl.exponent));
    if (lp.synthetic && lp.synthetic->profile == SyntheticProfile::Structured) {
        // emission i+1 follows emission i by s (i+1)^a <= 2^a s i^a
        const unsigned a = lp.synthetic->a;
        rec.bounds.push_back(check_delay_bound(run.trace, sat_mul(lp.synthetic->scale(), sat_pow(2, a)), 1, a));
    }

    emit_solutions(o, run.solutions, out);
    emit_trace(o, run.trace);
    emit_report(o, rec);
    return rec.pass() ? kSuccess : kViolation;
}

int cmd_regularize(const ProblemArgs& pa, const OutputArgs& o, const std::string& schedule_path,
                   const std::string& queue_path, bool fallback, std::ostream& out) {
    const LoadedProblem lp = load_problem(pa);
    const BudgetSchedule schedule =
        schedule_path.empty() ? lp.declared
                              : BudgetSchedule::from_json(nlohmann::json::parse(read_file(schedule_path)));
    const std::uint64_t k = lp.instance.param();
    const std::uint64_t n = lp.instance.size();

    RegularizerOptions opts;
    opts.continue_on_violation = fallback;
    Regularized reg = cap_to_inc(lp.factory(lp.instance), schedule, k, n, opts);
    RunRecord rec = base_record(lp, o);

    RunResult run;
    try {
        run = run_to_completion(reg.enumerator, resolve_cap(o.cap));
    } catch (const BoundViolation& v) {
        rec.violation = v.index();
        emit_report(o, rec);
        throw;
    }

    rec.solutions_count = run.solutions.size();
    rec.late_emissions = reg.profile->violations;
    add_fit(rec, run.trace);
    // B(i+1) - B(i) <= scale (2^e - 1) i^(e-1) for i >= 1, plus the output tick allowance
    const Cost scale = schedule.scale(k, n);
    const Cost per_delay = sat_add(sat_mul(scale, sat_pow(2, schedule.exponent) - 1), 4 * kSyntheticWidth);
    rec.bounds.push_back(check_delay_bound(run.trace, per_delay, 1, schedule.exponent - 1));
    const MemoryProfile mem = memory_profile(*reg.profile);
    rec.memory = mem;

    emit_solutions(o, run.solutions, out);
    emit_trace(o, run.trace);
    if (!queue_path.empty()) {
        std::ostringstream ss;
        write_queue_csv(ss, mem);
        write_file_atomic(queue_path, ss.str());
    }
    emit_report(o, rec);
    return rec.late_emissions.empty() && rec.pass() ? kSuccess : kViolation;
}

int cmd_roundtrip(const ProblemArgs& pa, const OutputArgs& o, std::ostream& out) {
    const LoadedProblem lp = load_problem(pa);
    const RoundtripVerdict v =
        roundtrip(*lp.descriptor, lp.instance, lp.factory, lp.declared, resolve_cap(o.cap));
    out << v.to_json(instance_digest(lp.instance.raw())).dump() << '\n';
    if (!o.solutions.empty()) emit_solutions(o, v.solutions, out);
    return v.pass ? kSuccess : kViolation;
}

int cmd_compare(const ProblemArgs& pa, const OutputArgs& o, std::ostream& out) {
    const LoadedProblem lp = load_problem(pa);
    const Cost cap = resolve_cap(o.cap);
    SteppedEnumerator e = lp.factory(lp.instance);
    const RunResult run = run_to_completion(e, cap);
    const auto truth = brute_force_enum(*lp.descriptor, lp.instance, cap);
    const Verdict verdict = verify_solutions(*lp.descriptor, lp.instance, run.solutions);
    const bool equal = verdict.pass && sorted(run.solutions) == truth;
    out << nlohmann::json{{"instance", instance_digest(lp.instance.raw())},
                          {"equal", equal},
                          {"enumerated", run.solutions.size()},
                          {"brute_force", truth.size()},
                          {"verify", to_string(verdict.reason)}}
               .dump()
        << '\n';
    return equal ? kSuccess : kViolation;
}

int cmd_fit(const std::string& trace_path, const std::vector<std::size_t>& window, std::ostream& out) {
    std::istringstream in(read_file(trace_path));
    const DelayTrace trace = read_trace_csv(in);
    const FitResult f = window.size() == 2 ? fit_exponent(trace, window[0], window[1]) : fit_exponent(trace);
    out << f.to_json().dump() << '\n';
    return kSuccess;
}

int cmd_report(const std::vector<std::string>& inputs, const std::string& out_path, std::ostream& out) {
    std::vector<nlohmann::json> docs;
    for (const auto& p : inputs) docs.push_back(nlohmann::json::parse(read_file(p)));
    const auto merged = merge_reports(docs);
    const std::string text = merged.dump(2) + "\n";
    if (out_path.empty()) out << text;
    else write_file_atomic(out_path, text);
    return merged.at("overall_pass").get<bool>() ? kSuccess : kViolation;
}

int cmd_generate(const std::string& problem, std::uint64_t seed, std::size_t size, std::uint64_t max_m,
                 const std::string& out_path, std::ostream& out) {
    Rng rng(seed);
    std::string text;
    if (problem == "vertex-cover") {
        const GraphInstance g = random_graph(rng, size);
        text = std::to_string(g.vertices) + " " + std::to_string(g.edges.size()) + "\n";
        for (auto [u, v] : g.edges) text += std::to_string(u) + " " + std::to_string(v) + "\n";
    } else if (problem == "horn-sat") {
        const HornFormula f = random_horn(rng, size, 20);
        text = "p cnf " + std::to_string(f.variable_count) + " " + std::to_string(f.clauses.size()) + "\n";
        for (const auto& c : f.clauses) {
            for (int lit : c) text += std::to_string(lit) + " ";
            text += "0\n";
        }
    } else {
        text = random_synthetic(rng, max_m).to_json().dump() + "\n";
    }
    if (out_path.empty()) out << text;
    else write_file_atomic(out_path, text);
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Parametrised enumeration runner", "stepenum"};
    app.require_subcommand(1);

    ProblemArgs pa;
    OutputArgs oa;

    auto* enumerate = app.add_subcommand("enumerate", "run an enumerator and record its delays");
    add_problem_options(*enumerate, pa);
    add_output_options(*enumerate, oa);

    std::string schedule_path, queue_path;
    bool fallback = false;
    auto* regularize = app.add_subcommand("regularize", "pace an enumerator through the priority-queue regularizer");
    add_problem_options(*regularize, pa);
    add_output_options(*regularize, oa);
    regularize->add_option("--schedule", schedule_path, "schedule JSON {t_const|t_table|t_formula, p_coeffs, exponent}");
    regularize->add_option("--queue", queue_path, "queue-size CSV");
    regularize->add_flag("--fallback", fallback, "emit late instead of failing on a bound violation");

    auto* rt = app.add_subcommand("roundtrip", "enumerate through the AnotherSol oracle built from the enumerator");
    add_problem_options(*rt, pa);
    add_output_options(*rt, oa);

    auto* compare = app.add_subcommand("compare", "compare the enumerator with brute force");
    add_problem_options(*compare, pa);
    add_output_options(*compare, oa);

    std::string trace_path;
    std::vector<std::size_t> window;
    auto* fit = app.add_subcommand("fit", "fit the delay exponent of a trace CSV");
    fit->add_option("--trace", trace_path, "delay trace CSV")->required();
    fit->add_option("--window", window, "i_min i_max")->expected(2);

    std::vector<std::string> inputs;
    std::string report_out;
    auto* rep = app.add_subcommand("report", "merge run reports");
    rep->add_option("--input", inputs, "report JSON (repeatable)")->required();
    rep->add_option("--out", report_out, "merged report (default: stdout)");

    std::string gen_problem, gen_out;
    std::uint64_t seed = 0, max_m = 100;
    std::size_t gen_size = 6;
    auto* gen = app.add_subcommand("generate", "write a seeded random instance");
    gen->add_option("--problem", gen_problem)->required()->check(CLI::IsMember({"vertex-cover", "horn-sat", "synthetic"}));
    gen->add_option("--seed", seed, "RNG seed");
    gen->add_option("--size", gen_size, "max vertices / variables");
    gen->add_option("--max-m", max_m, "max synthetic solution count");
    gen->add_option("--out", gen_out, "instance file (default: stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    try {
        if (*enumerate) return cmd_enumerate(pa, oa, out);
        if (*regularize) return cmd_regularize(pa, oa, schedule_path, queue_path, fallback, out);
        if (*rt) return cmd_roundtrip(pa, oa, out);
        if (*compare) return cmd_compare(pa, oa, out);
        if (*fit) return cmd_fit(trace_path, window, out);
        if (*rep) return cmd_report(inputs, report_out, out);
        if (*gen) return cmd_generate(gen_problem, seed, gen_size, max_m, gen_out, out);
    } catch (const BoundViolation& e) {
        err << "bound violation: " << e.what() << '\n';
        return kViolation;
    } catch (const DuplicateEmission& e) {
        err << "contract violation: " << e.what() << '\n';
        return kViolation;
    } catch (const CostAccountingViolation& e) {
        err << "contract violation: " << e.what() << '\n';
        return kViolation;
    } catch (const OracleContractViolation& e) {
        err << "contract violation: " << e.what() << '\n';
        return kViolation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

}  // namespace stepenum::cli
