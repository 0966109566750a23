#pragma once

#include "ruscs/circuit.hpp"
#include "ruscs/plan.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ruscs {

/**
 * SynthState: a node of the exact-synthesis search. The columns stay exactly
 * orthonormal (every move is unitary); the represented isometry is
 * zeta8^phase_exp * cols. `path` records the gates whose inverses were
 * applied so far.
 */
struct SynthState {
    RMat4x2 cols;
    int phase_exp = 0;
    std::vector<Gate> path;
};

/// One entry of the generating set.
struct Generator {
    Gate gate;
    PhasedMatrix matrix;
    Gate inverse;
};

/// The Clifford+CS generating set: H, S, X on both qubits, CZ, both CNOT
/// orientations, SWAP, CS and CSdg, with exact matrices and inverses.
const std::vector<Generator> &generators();

/**
 * Denominator-exponent heuristic: sum of sde over the 8 entries divided by
 * w, the largest single-generator sde reduction (default 8). Zero exactly on
 * goal states.
 */
double heuristic(const SynthState &s, double w = 8.0);

/**
 * Completion of a goal state: all entries are Gaussian integers, so each
 * column is a unit vector with a single nonzero entry in {1,i,-1,-i}.
 * Returns gates t_1..t_j (permutation part from X/CNOT/SWAP, then an S/Z
 * diagonal) such that applying their inverse matrices in order maps cols
 * exactly to the first two identity columns times a power of i. Throws
 * std::invalid_argument if an entry has sde > 0.
 */
std::vector<Gate> finalize_monomial(const SynthState &s);

struct SynthOptions {
    std::int64_t budget = 5000000; // expanded-node limit
    double heuristic_w = 8.0;      // divisor in the admissible heuristic
    double weight = 8.0;           // weighted-A* multiplier on h
};

struct SynthOutcome {
    bool ok = false;
    Circuit circuit;
    int phase_exp = 0; // k with evaluate(circuit) columns = zeta8^k W'
    std::int64_t nodes_expanded = 0;
};

/**
 * A* exact synthesis: find a Clifford+CS circuit whose unitary has
 * zeta8^k * W' as its first two columns. The search applies inverse
 * generators on the left until every entry has sde 0, finishes with
 * finalize_monomial, and emits the reversed path. Every result is
 * re-verified through evaluate() before being returned; a failed budget
 * leaves ok = false.
 */
SynthOutcome synthesize(const RMat4x2 &w_prime, const SynthOptions &opts = {});

SynthOutcome synthesize(const RMat4x2 &w_prime, std::int64_t budget);

/// First two columns of a 4x4 phased matrix, ring entries only.
RMat4x2 first_two_columns(const PhasedMatrix &m);

/**
 * The exponent k such that the unitary represented by `product` has its
 * first two columns equal to zeta8^k * W', or nullopt when no power of the
 * phase makes them match. Exact ring comparison.
 */
std::optional<int> match_columns_up_to_phase(const PhasedMatrix &product, const RMat4x2 &w_prime);

} // namespace ruscs
