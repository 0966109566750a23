#include "ruscs/pipeline.hpp"

#include "ruscs/four_squares.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace ruscs {

std::string selection_name(Selection s)
{
    switch (s) {
    case Selection::MinCs:
        return "min_cs";
    case Selection::MinTotal:
        return "min_total";
    case Selection::First:
        return "first";
    }
    throw std::invalid_argument("unknown selection");
}

Selection selection_from_name(const std::string &name)
{
    if (name == "min_cs") {
        return Selection::MinCs;
    }
    if (name == "min_total") {
        return Selection::MinTotal;
    }
    if (name == "first") {
        return Selection::First;
    }
    throw std::invalid_argument("selection must be min_cs, min_total or first");
}

Config Config::from_doubles(double epsilon, double p_fail)
{
    Config cfg;
    cfg.epsilon = Rational::from_double(epsilon);
    cfg.p_fail = Rational::from_double(p_fail);
    return cfg;
}

void Config::validate() const
{
    if (!(epsilon > Rational(0) && epsilon < Rational(2))) {
        throw std::invalid_argument("config: epsilon must lie in (0,2)");
    }
    if (!(p_fail > Rational(0) && p_fail < Rational(1))) {
        throw std::invalid_argument("config: p-fail must lie in (0,1)");
    }
    if (n_start < 0 || n_start > n_max) {
        throw std::invalid_argument("config: need 0 <= n-start <= n-max");
    }
    if (candidates_per_n < 1 || norm_solutions_per_candidate < 1 || search_budget < 1 ||
        n_lookahead < 0 || threads < 1) {
        throw std::invalid_argument("config: counts and budgets must be positive");
    }
}

namespace {

int effective_threads(const Config &cfg)
{
    int threads = cfg.threads;
    if (const char *env = std::getenv("RUS_SYNTH_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) {
            threads = std::min(threads, cap);
        }
    }
    return std::max(1, threads);
}

struct Candidate {
    QuatVec u0;
    QuatVec u1;
    RUSPlan plan;
};

// Deterministic ranking of norm-equation solutions: prefer balanced
// decompositions (smaller largest component), then lexicographic.
bool spread_less(const FourSquares &a, const FourSquares &b)
{
    if (a.a != b.a) {
        return a.a < b.a;
    }
    if (a.b != b.b) {
        return a.b < b.b;
    }
    if (a.c != b.c) {
        return a.c < b.c;
    }
    return a.d < b.d;
}

} // namespace

VerifyReport verify(const Circuit &circuit, const RUSPlan &plan, const TargetUnitary &target,
                    const Config &cfg)
{
    VerifyReport report;
    // Rebuild W' from (N, u0, u1) and evaluate the circuit from scratch.
    RUSPlan rebuilt = build_plan(plan.n, plan.u0, plan.u1, target);
    PhasedMatrix product = evaluate(circuit);
    auto k = match_columns_up_to_phase(product, rebuilt.w_prime);
    report.exact_match = k.has_value();
    report.phase_exp = k.value_or(0);

    report.success_prob = Rational(norm_sq(plan.u0), Integer(1) << plan.n);
    report.success_prob_ok = report.success_prob >= Rational(1) - cfg.p_fail;

    report.error_bound = approx_error(plan.u0, target);
    report.error_ok = report.error_bound <= cfg.epsilon.to_double() + 1e-12;
    return report;
}

TargetUnitary failure_followup(const TargetUnitary &target, const RUSPlan &plan)
{
    if (plan.r1_norm_sq == 0) {
        throw std::invalid_argument(
            "failure_followup: recovery is unreachable (u1 = 0, failure probability zero)");
    }
    Vec4 prod = quat_mul(target.u, quat_conj(plan.u1));
    return target_from_coeffs(prod);
}

SynthesisResult approximate(const TargetUnitary &target, const Config &cfg)
{
    cfg.validate();
    Rng rng(cfg.seed);
    const int threads = effective_threads(cfg);

    Attempts attempts;
    std::vector<SynthesisResult> successes;
    int first_success_n = -1;

    for (int n = cfg.n_start; n <= cfg.n_max; ++n) {
        if (first_success_n >= 0 && n > first_success_n + cfg.n_lookahead) {
            break;
        }
        AttemptsPerN per_n;
        per_n.n = n;

        std::vector<QuatVec> points =
            solve_point_enumeration(target, cfg.epsilon, cfg.p_fail, n, cfg.candidates_per_n);
        per_n.points = static_cast<int>(points.size());

        // Stage 1 (sequential, owns the rng): norm equations and plans.
        std::vector<Candidate> candidates;
        for (const QuatVec &u0 : points) {
            Integer deficit = (Integer(1) << n) - norm_sq(u0);
            std::vector<FourSquares> sols =
                four_squares_multi(deficit, cfg.norm_solutions_per_candidate, rng);
            std::stable_sort(sols.begin(), sols.end(), spread_less);
            for (const FourSquares &s : sols) {
                QuatVec u1{s.a, s.b, s.c, s.d};
                candidates.push_back(Candidate{u0, u1, build_plan(n, u0, u1, target)});
            }
        }
        per_n.plans = static_cast<int>(candidates.size());

        // Stage 2 (parallel-safe): synthesize each candidate independently.
        std::vector<SynthOutcome> outcomes(candidates.size());
        SynthOptions opts;
        opts.budget = cfg.search_budget;
        if (threads <= 1 || candidates.size() <= 1) {
            for (std::size_t i = 0; i < candidates.size(); ++i) {
                outcomes[i] = synthesize(candidates[i].plan.w_prime, opts);
            }
        }
        else {
            std::atomic<std::size_t> next{0};
            auto worker = [&] {
                while (true) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= candidates.size()) {
                        return;
                    }
                    outcomes[i] = synthesize(candidates[i].plan.w_prime, opts);
                }
            };
            std::vector<std::thread> pool;
            for (int t = 0; t < threads; ++t) {
                pool.emplace_back(worker);
            }
            for (auto &th : pool) {
                th.join();
            }
        }

        // Stage 3 (sequential): verify and collect in candidate order.
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            attempts.nodes_expanded += outcomes[i].nodes_expanded;
            if (!outcomes[i].ok) {
                ++per_n.synth_fail;
                continue;
            }
            ++per_n.synth_ok;
            SynthesisResult result;
            result.circuit = std::move(outcomes[i].circuit);
            result.circuit.name = "rus_round";
            result.circuit.seed = cfg.seed;
            result.circuit.params["epsilon"] = cfg.epsilon.to_fraction_string();
            result.circuit.params["p_fail"] = cfg.p_fail.to_fraction_string();
            result.circuit.params["n"] = std::to_string(n);
            result.plan = candidates[i].plan;
            result.phase_exp = outcomes[i].phase_exp;
            result.verification = verify(result.circuit, result.plan, target, cfg);
            if (!result.verification.all_ok()) {
                // A synthesized candidate that fails re-verification would be
                // a bug, not a search miss; never return it.
                throw std::logic_error("approximate: candidate failed re-verification");
            }
            successes.push_back(std::move(result));
        }
        attempts.per_n.push_back(per_n);

        if (!successes.empty() && first_success_n < 0) {
            first_success_n = n;
        }
    }

    if (successes.empty()) {
        throw ExhaustionError("no synthesizable candidate up to n-max=" +
                                  std::to_string(cfg.n_max),
                              attempts);
    }

    // Selection: optimal under cfg.selection; ties prefer higher success
    // probability, then smaller N, then production order.
    auto better = [&](std::size_t a, std::size_t b) {
        const SynthesisResult &ra = successes[a];
        const SynthesisResult &rb = successes[b];
        if (cfg.selection != Selection::First) {
            GateCounts ca = ra.circuit.stats();
            GateCounts cb = rb.circuit.stats();
            std::size_t pa = cfg.selection == Selection::MinCs ? ca.cs : ca.total;
            std::size_t pb = cfg.selection == Selection::MinCs ? cb.cs : cb.total;
            if (pa != pb) {
                return pa < pb;
            }
            std::size_t sa = cfg.selection == Selection::MinCs ? ca.total : ca.cs;
            std::size_t sb = cfg.selection == Selection::MinCs ? cb.total : cb.cs;
            if (sa != sb) {
                return sa < sb;
            }
            if (ra.plan.success_prob != rb.plan.success_prob) {
                return rb.plan.success_prob < ra.plan.success_prob;
            }
            if (ra.plan.n != rb.plan.n) {
                return ra.plan.n < rb.plan.n;
            }
        }
        return a < b;
    };
    std::size_t best = 0;
    for (std::size_t i = 1; i < successes.size(); ++i) {
        if (better(i, best)) {
            best = i;
        }
    }
    SynthesisResult result = std::move(successes[best]);
    result.attempts = std::move(attempts);
    return result;
}

} // namespace ruscs
