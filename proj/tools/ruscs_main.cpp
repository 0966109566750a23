// ruscs: approximate one-qubit special unitaries by two-qubit Clifford+CS
// repeat-until-success circuits, with exact ring-arithmetic verification.

#include "ruscs/four_squares.hpp"
#include "ruscs/json_io.hpp"
#include "ruscs/pipeline.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <fstream>
#include <sstream>

namespace {

using ruscs::Config;
using ruscs::Rational;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitUsage = 1;
constexpr int kExitExhaustion = 2;

std::string now_iso8601()
{
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&t));
    return buf;
}

std::string read_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open '" + path + "'");
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Rational parse_rational_flag(const std::string &text, const char *flag)
{
    try {
        return Rational::from_decimal(text);
    }
    catch (const std::exception &) {
        throw std::invalid_argument(std::string(flag) + ": malformed decimal '" + text + "'");
    }
}

struct ApproximateArgs {
    std::string target;
    std::string epsilon;
    std::string p_fail;
    int n_start = 2;
    int n_max = 20;
    std::uint64_t seed = 1;
    std::int64_t budget = 400000;
    std::string select = "min_cs";
    std::string format = "json";
    int rounds = 0;
    int candidates = 16;
    int norm_solutions = 4;
    int lookahead = 1;
    int threads = 1;
    bool deterministic = false;
    bool cs_as_gate = false;
    bool wrapper = false;
};

Config make_config(const ApproximateArgs &args)
{
    Config cfg;
    cfg.epsilon = parse_rational_flag(args.epsilon, "--epsilon");
    cfg.p_fail = parse_rational_flag(args.p_fail, "--p-fail");
    cfg.n_start = args.n_start;
    cfg.n_max = args.n_max;
    cfg.seed = args.seed;
    cfg.search_budget = args.budget;
    cfg.selection = ruscs::selection_from_name(args.select);
    cfg.candidates_per_n = args.candidates;
    cfg.norm_solutions_per_candidate = args.norm_solutions;
    cfg.n_lookahead = args.lookahead;
    cfg.threads = args.threads;
    cfg.validate();
    return cfg;
}

int run_approximate(const ApproximateArgs &args)
{
    ruscs::TargetUnitary target = ruscs::parse_target(args.target);
    Config cfg = make_config(args);

    ruscs::ResultDocument doc;
    doc.target_spec = args.target;
    doc.target_u = target.u;
    doc.config = cfg;
    try {
        doc.result = ruscs::approximate(target, cfg);
    }
    catch (const ruscs::ExhaustionError &e) {
        std::cerr << "exhaustion: " << e.what() << "\n";
        for (const auto &a : e.attempts.per_n) {
            std::cerr << "  N=" << a.n << ": points=" << a.points << " plans=" << a.plans
                      << " synth_ok=" << a.synth_ok << " synth_fail=" << a.synth_fail << "\n";
        }
        return kExitExhaustion;
    }

    // Optional failure-branch follow-up rounds over U R1^dag.
    ruscs::TargetUnitary round_target = target;
    ruscs::ResultDocument *parent = &doc;
    for (int r = 0; r < args.rounds; ++r) {
        if (parent->result.plan.recovery_unreachable()) {
            std::cerr << "rounds: recovery unreachable after round " << r
                      << " (u1 = 0); stopping\n";
            break;
        }
        round_target = ruscs::failure_followup(round_target, parent->result.plan);
        ruscs::ResultDocument next;
        next.target_spec = "followup:" + round_target.to_string();
        next.target_u = round_target.u;
        next.config = cfg;
        try {
            next.result = ruscs::approximate(round_target, cfg);
        }
        catch (const ruscs::ExhaustionError &e) {
            std::cerr << "exhaustion in follow-up round " << (r + 1) << ": " << e.what() << "\n";
            return kExitExhaustion;
        }
        parent->followups.push_back(std::move(next));
        parent = &parent->followups.back();
    }

    if (args.format == "qasm") {
        ruscs::QasmOptions qopts;
        qopts.cs_as_gate = args.cs_as_gate;
        qopts.rus_wrapper = args.wrapper;
        std::cout << ruscs::export_qasm(doc.result.circuit, qopts);
    }
    else {
        std::cout << ruscs::result_to_json(doc, args.deterministic ? "" : now_iso8601());
    }
    std::cerr << "n=" << doc.result.plan.n
              << " success_prob=" << doc.result.plan.success_prob.to_fraction_string()
              << " error=" << doc.result.plan.error_bound
              << " gates=" << doc.result.circuit.stats().total
              << " cs=" << doc.result.circuit.stats().cs << "\n";
    return 0;
}

int run_verify(const std::string &input)
{
    ruscs::ResultDocument doc = ruscs::result_from_json(read_file(input));
    ruscs::TargetUnitary target;
    target.u = doc.target_u;
    ruscs::VerifyReport report =
        ruscs::verify(doc.result.circuit, doc.result.plan, target, doc.config);

    ordered_json j;
    j["exact_match"] = report.exact_match;
    j["phase_exp"] = report.phase_exp;
    j["success_prob"] = report.success_prob.to_fraction_string();
    j["success_prob_ok"] = report.success_prob_ok;
    j["error_bound"] = report.error_bound;
    j["error_ok"] = report.error_ok;
    j["all_ok"] = report.all_ok();
    std::cout << j.dump(2) << "\n";
    return report.all_ok() ? 0 : kExitExhaustion;
}

int run_synth_isometry(const std::string &input, std::int64_t budget)
{
    ruscs::RMat4x2 w = ruscs::wprime_from_json(read_file(input));
    ruscs::SynthOutcome outcome = ruscs::synthesize(w, budget);
    if (!outcome.ok) {
        std::cerr << "synthesis budget exhausted after " << outcome.nodes_expanded
                  << " nodes\n";
        return kExitExhaustion;
    }
    ordered_json j;
    j["phase_exp"] = outcome.phase_exp;
    j["nodes_expanded"] = outcome.nodes_expanded;
    ordered_json gates = ordered_json::array();
    for (const auto &g : outcome.circuit.gates) {
        ordered_json jg;
        jg["kind"] = ruscs::gate_kind_name(g.kind);
        jg["qubits"] = g.q1 >= 0 ? ordered_json{g.q0, g.q1} : ordered_json{g.q0};
        gates.push_back(jg);
    }
    j["gates"] = gates;
    ruscs::GateCounts counts = outcome.circuit.stats();
    j["counts"] = {{"total", counts.total}, {"cs", counts.cs}, {"depth", counts.depth}};
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_four_squares(const std::string &m_text, int count, std::uint64_t seed)
{
    if (m_text.empty() || m_text.find_first_not_of("0123456789") != std::string::npos) {
        throw std::invalid_argument("M must be a nonnegative integer, got '" + m_text + "'");
    }
    ruscs::Integer m(m_text);
    ruscs::Rng rng(seed);
    std::vector<ruscs::FourSquares> sols = ruscs::four_squares_multi(m, count, rng);
    ordered_json j;
    j["m"] = m.str();
    ordered_json arr = ordered_json::array();
    for (const auto &s : sols) {
        arr.push_back({s.a.str(), s.b.str(), s.c.str(), s.d.str()});
        if (s.sum_of_squares() != m) {
            throw std::logic_error("four-squares: self-check failed");
        }
    }
    j["solutions"] = arr;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_enumerate(const std::string &target_spec, const std::string &eps, const std::string &p,
                  int n, std::int64_t budget)
{
    ruscs::TargetUnitary target = ruscs::parse_target(target_spec);
    Rational epsilon = parse_rational_flag(eps, "--epsilon");
    Rational p_fail = parse_rational_flag(p, "--p-fail");
    std::vector<ruscs::QuatVec> points =
        ruscs::solve_point_enumeration(target, epsilon, p_fail, n, budget);
    ordered_json j;
    j["n"] = n;
    ordered_json arr = ordered_json::array();
    for (const auto &q : points) {
        arr.push_back({q.uI.str(), q.uX.str(), q.uY.str(), q.uZ.str()});
    }
    j["points"] = arr;
    j["count"] = points.size();
    std::cout << j.dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Repeat-until-success Clifford+CS approximation of one-qubit unitaries"};
    app.require_subcommand(1);

    ApproximateArgs aargs;
    auto *approx = app.add_subcommand("approximate", "Run the full approximation pipeline");
    approx->add_option("--target", aargs.target, "Target: coeffs:a,b,c,d | axis:<axis>:<theta> | matrix:...")
        ->required();
    approx->add_option("--epsilon", aargs.epsilon, "Accuracy in (0,2)")->required();
    approx->add_option("--p-fail", aargs.p_fail, "Maximum failure probability in (0,1)")->required();
    approx->add_option("--n-start", aargs.n_start, "Initial denominator exponent");
    approx->add_option("--n-max", aargs.n_max, "Largest denominator exponent to try");
    approx->add_option("--seed", aargs.seed, "Random seed");
    approx->add_option("--budget", aargs.budget, "Search budget (expanded nodes per candidate)");
    approx->add_option("--select", aargs.select, "Selection: min_cs | min_total | first");
    approx->add_option("--format", aargs.format, "Output: json | qasm")
        ->check(CLI::IsMember({"json", "qasm"}));
    approx->add_option("--rounds", aargs.rounds, "Failure-branch follow-up rounds");
    approx->add_option("--candidates-per-n", aargs.candidates, "Enumeration budget per N");
    approx->add_option("--norm-solutions", aargs.norm_solutions, "Norm-equation solutions per point");
    approx->add_option("--lookahead", aargs.lookahead, "Extra N levels after the first success");
    approx->add_option("--threads", aargs.threads, "Worker threads (capped by RUS_SYNTH_THREADS)");
    approx->add_flag("--deterministic", aargs.deterministic, "Suppress the timestamp field");
    approx->add_flag("--cs-as-gate", aargs.cs_as_gate, "QASM: emit cs/csdg as named gates");
    approx->add_flag("--wrapper", aargs.wrapper, "QASM: measurement/reset scaffolding");

    std::string verify_input;
    auto *ver = app.add_subcommand("verify", "Re-verify a result JSON from the circuit alone");
    ver->add_option("--input", verify_input, "result.json path")->required();

    std::string synth_input;
    std::int64_t synth_budget = 5000000;
    auto *synth = app.add_subcommand("synth-isometry", "Exact synthesis of a 4x2 ring isometry");
    synth->add_option("--input", synth_input, "wprime.json path")->required();
    synth->add_option("--budget", synth_budget, "Expanded-node limit");

    std::string fs_m;
    int fs_count = 1;
    std::uint64_t fs_seed = 1;
    auto *fs = app.add_subcommand("four-squares", "Decompose M as a sum of four squares");
    fs->add_option("M", fs_m, "Nonnegative integer")->required();
    fs->add_option("--count", fs_count, "Number of distinct solutions");
    fs->add_option("--seed", fs_seed, "Random seed");

    std::string en_target, en_eps, en_p;
    int en_n = 2;
    std::int64_t en_budget = 1000000;
    auto *en = app.add_subcommand("enumerate", "Enumerate candidate integer points for one N");
    en->add_option("--target", en_target, "Target spec")->required();
    en->add_option("--epsilon", en_eps, "Accuracy in (0,2)")->required();
    en->add_option("--p-fail", en_p, "Maximum failure probability in (0,1)")->required();
    en->add_option("--n", en_n, "Denominator exponent N")->required();
    en->add_option("--budget", en_budget, "Maximum points to collect");

    try {
        app.parse(argc, argv);
        if (*approx) {
            return run_approximate(aargs);
        }
        if (*ver) {
            return run_verify(verify_input);
        }
        if (*synth) {
            return run_synth_isometry(synth_input, synth_budget);
        }
        if (*fs) {
            return run_four_squares(fs_m, fs_count, fs_seed);
        }
        if (*en) {
            return run_enumerate(en_target, en_eps, en_p, en_n, en_budget);
        }
    }
    catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }
    catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
