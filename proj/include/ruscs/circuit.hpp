#pragma once

#include "ruscs/ring.hpp"

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ruscs {

enum class GateKind { H, S, Sdg, X, Z, CZ, CNOT, SWAP, CS, CSdg };

bool is_two_qubit(GateKind kind);
std::string gate_kind_name(GateKind kind);
GateKind gate_kind_from_name(const std::string &name);

/**
 * Gate: a named two-qubit Clifford+CS gate. Qubit 0 is the measured ancilla
 * and the most significant index (basis state = 2*q0 + q1). For one-qubit
 * kinds only q0 is used; for CNOT q0 is the control.
 */
struct Gate {
    GateKind kind;
    int q0 = 0;
    int q1 = -1;

    bool operator==(const Gate &o) const { return kind == o.kind && q0 == o.q0 && q1 == o.q1; }

    std::string to_string() const;
};

Gate g1(GateKind kind, int q);
Gate g2(GateKind kind, int q0, int q1);
Gate inverse_gate(const Gate &g);

/// 4x4 matrix over Z[i, 1/(1+i)], row-major.
using RMat4 = std::array<std::array<RingElem, 4>, 4>;

/**
 * PhasedMatrix: a 4x4 ring matrix together with a global phase exponent; the
 * represented unitary is zeta8^phase_exp * mat. The phase keeps Hadamard
 * representable: H is stored as zeta8^-1 times a matrix with entries in
 * Z[i, 1/(1+i)].
 */
struct PhasedMatrix {
    RMat4 mat;
    int phase_exp = 0; // mod 8

    static PhasedMatrix identity();

    PhasedMatrix operator*(const PhasedMatrix &o) const;
    PhasedMatrix dagger() const;

    bool operator==(const PhasedMatrix &o) const
    {
        return phase_exp == o.phase_exp && mat == o.mat;
    }

    /// Exact unitarity: mat^dag * mat = I.
    bool is_unitary() const;

    /// Fold the unit i^j making the first nonzero entry lie in the quadrant
    /// re > 0, im >= 0; phase_exp absorbs -2j. Normalizes representations of
    /// equal unitaries that differ by a power of i in the entries.
    void canonicalize();

    std::array<std::array<std::complex<double>, 4>, 4> to_complex() const;
};

/// Exact phased matrix of a gate; entries of non-H gates are Gaussian
/// integers with phase_exp = 0, H carries phase_exp = 7.
PhasedMatrix gate_matrix(const Gate &g);

struct GateCounts {
    std::size_t total = 0;
    std::size_t cs = 0;    // CS + CSdg, the non-Clifford cost
    std::size_t depth = 0; // greedy layering on 2 qubits
};

/**
 * Circuit: ordered gate sequence (first gate acts first) with metadata
 * carried through serialization.
 */
struct Circuit {
    std::vector<Gate> gates;
    std::string name;
    std::uint64_t seed = 0;
    std::map<std::string, std::string> params;

    GateCounts stats() const;
};

/// Ordered product of gate matrices (first gate acts first), canonicalized;
/// exact unitarity is asserted.
PhasedMatrix evaluate(const Circuit &c);

struct QasmOptions {
    bool cs_as_gate = false;  // emit a named cs/csdg gate instead of expanding
    bool rus_wrapper = false; // measurement/reset scaffolding for one round
};

/// OpenQASM 2.0 text; the global phase is dropped.
std::string export_qasm(const Circuit &c, const QasmOptions &opts = {});

/// Lossless JSON gate list with metadata; parse(export(c)) == c and
/// export(parse(s)) is byte-identical to s.
std::string export_json(const Circuit &c);
Circuit circuit_from_json(const std::string &text);

} // namespace ruscs
