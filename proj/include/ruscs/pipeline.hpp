#pragma once

#include "ruscs/circuit.hpp"
#include "ruscs/plan.hpp"
#include "ruscs/point_enum.hpp"
#include "ruscs/synth.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ruscs {

enum class Selection { MinCs, MinTotal, First };

std::string selection_name(Selection s);
Selection selection_from_name(const std::string &name);

/**
 * Config: pipeline parameters. epsilon and p_fail are carried as exact
 * rationals so the probability bound can be compared exactly.
 */
struct Config {
    Rational epsilon;
    Rational p_fail;
    int n_start = 2;
    int n_max = 20;
    int candidates_per_n = 16;
    int norm_solutions_per_candidate = 4;
    std::int64_t search_budget = 400000;
    std::uint64_t seed = 1;
    Selection selection = Selection::MinCs;
    // After the first N that synthesizes, also try this many further levels
    // and pick the best result across them.
    int n_lookahead = 1;
    // Worker threads for candidate synthesis; capped by RUS_SYNTH_THREADS.
    int threads = 1;

    static Config from_doubles(double epsilon, double p_fail);

    void validate() const;
};

struct VerifyReport {
    bool exact_match = false;
    int phase_exp = 0;
    bool success_prob_ok = false;
    bool error_ok = false;
    Rational success_prob;
    double error_bound = 0.0;

    bool all_ok() const { return exact_match && success_prob_ok && error_ok; }
};

struct AttemptsPerN {
    int n = 0;
    int points = 0;
    int plans = 0;
    int synth_ok = 0;
    int synth_fail = 0;
};

struct Attempts {
    std::vector<AttemptsPerN> per_n;
    std::int64_t nodes_expanded = 0;
};

struct SynthesisResult {
    Circuit circuit;
    RUSPlan plan;
    int phase_exp = 0;
    VerifyReport verification;
    Attempts attempts;
};

/// Thrown when n_max is reached without a synthesizable candidate.
class ExhaustionError : public std::runtime_error {
  public:
    ExhaustionError(std::string message, Attempts attempts)
        : std::runtime_error(std::move(message)), attempts(std::move(attempts))
    {
    }

    Attempts attempts;
};

/**
 * The full pipeline: for increasing N, enumerate u0 candidates, solve the
 * norm equation for u1, build plans, synthesize, verify, and return the
 * candidate optimal under cfg.selection. Deterministic for a fixed seed and
 * config. Throws ExhaustionError when nothing synthesizes by n_max.
 */
SynthesisResult approximate(const TargetUnitary &target, const Config &cfg);

/**
 * Recompute everything from the circuit alone: exact evaluation and column
 * match against W' rebuilt from (N, u0, u1), exact success probability
 * versus 1-p, and the approximation error versus epsilon (1e-12 guard).
 */
VerifyReport verify(const Circuit &circuit, const RUSPlan &plan, const TargetUnitary &target,
                    const Config &cfg);

/**
 * Failure branch: the unit vector of U R1^dag, computed by quaternion
 * multiplication with the conjugate of u1. Requires <u1,u1> > 0.
 */
TargetUnitary failure_followup(const TargetUnitary &target, const RUSPlan &plan);

} // namespace ruscs
