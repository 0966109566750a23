#include "ruscs/circuit.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ruscs {

using ordered_json = nlohmann::ordered_json;

bool is_two_qubit(GateKind kind)
{
    switch (kind) {
    case GateKind::CZ:
    case GateKind::CNOT:
    case GateKind::SWAP:
    case GateKind::CS:
    case GateKind::CSdg:
        return true;
    default:
        return false;
    }
}

std::string gate_kind_name(GateKind kind)
{
    switch (kind) {
    case GateKind::H:
        return "H";
    case GateKind::S:
        return "S";
    case GateKind::Sdg:
        return "Sdg";
    case GateKind::X:
        return "X";
    case GateKind::Z:
        return "Z";
    case GateKind::CZ:
        return "CZ";
    case GateKind::CNOT:
        return "CNOT";
    case GateKind::SWAP:
        return "SWAP";
    case GateKind::CS:
        return "CS";
    case GateKind::CSdg:
        return "CSdg";
    }
    throw std::invalid_argument("unknown gate kind");
}

GateKind gate_kind_from_name(const std::string &name)
{
    for (GateKind k : {GateKind::H, GateKind::S, GateKind::Sdg, GateKind::X, GateKind::Z,
                       GateKind::CZ, GateKind::CNOT, GateKind::SWAP, GateKind::CS, GateKind::CSdg}) {
        if (gate_kind_name(k) == name) {
            return k;
        }
    }
    throw std::invalid_argument("unknown gate kind '" + name + "'");
}

std::string Gate::to_string() const
{
    std::ostringstream os;
    os << gate_kind_name(kind) << "[" << q0;
    if (q1 >= 0) {
        os << "," << q1;
    }
    os << "]";
    return os.str();
}

Gate g1(GateKind kind, int q)
{
    if (is_two_qubit(kind)) {
        throw std::invalid_argument("gate: " + gate_kind_name(kind) + " needs two qubits");
    }
    if (q != 0 && q != 1) {
        throw std::invalid_argument("gate: qubit index must be 0 or 1");
    }
    return Gate{kind, q, -1};
}

Gate g2(GateKind kind, int q0, int q1)
{
    if (!is_two_qubit(kind)) {
        throw std::invalid_argument("gate: " + gate_kind_name(kind) + " takes one qubit");
    }
    if (q0 == q1 || q0 < 0 || q0 > 1 || q1 < 0 || q1 > 1) {
        throw std::invalid_argument("gate: two-qubit kinds need distinct qubits in {0,1}");
    }
    return Gate{kind, q0, q1};
}

Gate inverse_gate(const Gate &g)
{
    switch (g.kind) {
    case GateKind::S:
        return Gate{GateKind::Sdg, g.q0, g.q1};
    case GateKind::Sdg:
        return Gate{GateKind::S, g.q0, g.q1};
    case GateKind::CS:
        return Gate{GateKind::CSdg, g.q0, g.q1};
    case GateKind::CSdg:
        return Gate{GateKind::CS, g.q0, g.q1};
    default:
        return g; // H, X, Z, CZ, CNOT, SWAP are involutions
    }
}

PhasedMatrix PhasedMatrix::identity()
{
    PhasedMatrix m;
    for (int i = 0; i < 4; ++i) {
        m.mat[i][i] = RingElem(1);
    }
    return m;
}

PhasedMatrix PhasedMatrix::operator*(const PhasedMatrix &o) const
{
    PhasedMatrix out;
    out.phase_exp = (phase_exp + o.phase_exp) % 8;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            RingElem acc;
            for (int k = 0; k < 4; ++k) {
                if (!mat[i][k].is_zero() && !o.mat[k][j].is_zero()) {
                    acc = acc + mat[i][k] * o.mat[k][j];
                }
            }
            out.mat[i][j] = acc;
        }
    }
    return out;
}

PhasedMatrix PhasedMatrix::dagger() const
{
    PhasedMatrix out;
    out.phase_exp = ((-phase_exp) % 8 + 8) % 8;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            out.mat[i][j] = mat[j][i].conj();
        }
    }
    return out;
}

bool PhasedMatrix::is_unitary() const
{
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            RingElem acc;
            for (int r = 0; r < 4; ++r) {
                acc = acc + mat[r][i].conj() * mat[r][j];
            }
            if (acc != RingElem(i == j ? 1 : 0)) {
                return false;
            }
        }
    }
    return true;
}

void PhasedMatrix::canonicalize()
{
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (mat[i][j].is_zero()) {
                continue;
            }
            const GaussianInt &num = mat[i][j].num();
            for (int rot = 0; rot < 4; ++rot) {
                GaussianInt probe = num.times_i_pow(rot);
                if (probe.re() > 0 && probe.im() >= 0) {
                    if (rot != 0) {
                        for (auto &row : mat) {
                            for (auto &e : row) {
                                e = e.times_i_pow(rot);
                            }
                        }
                        phase_exp = ((phase_exp - 2 * rot) % 8 + 8) % 8;
                    }
                    return;
                }
            }
            throw std::logic_error("canonicalize: no unit rotation found (impossible)");
        }
    }
}

std::array<std::array<std::complex<double>, 4>, 4> PhasedMatrix::to_complex() const
{
    const std::complex<double> zeta8 = std::polar(1.0, std::acos(-1.0) / 4);
    std::complex<double> ph = std::pow(zeta8, phase_exp);
    std::array<std::array<std::complex<double>, 4>, 4> out;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            out[i][j] = ph * mat[i][j].to_complex();
        }
    }
    return out;
}

namespace {

// One-qubit ring matrices lifted to two qubits (qubit 0 = most significant).
RMat4 lift_one_qubit(const std::array<std::array<RingElem, 2>, 2> &m, int qubit)
{
    RMat4 out;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            int rb = qubit == 0 ? (r >> 1) : (r & 1);
            int cb = qubit == 0 ? (c >> 1) : (c & 1);
            int ro = qubit == 0 ? (r & 1) : (r >> 1);
            int co = qubit == 0 ? (c & 1) : (c >> 1);
            out[r][c] = ro == co ? m[rb][cb] : RingElem(0);
        }
    }
    return out;
}

RMat4 diag(const RingElem &a, const RingElem &b, const RingElem &c, const RingElem &d)
{
    RMat4 out;
    out[0][0] = a;
    out[1][1] = b;
    out[2][2] = c;
    out[3][3] = d;
    return out;
}

RMat4 permutation(int p0, int p1, int p2, int p3)
{
    // Row r has a 1 in column p_r: basis state p_r maps to r.
    RMat4 out;
    const int p[4] = {p0, p1, p2, p3};
    for (int r = 0; r < 4; ++r) {
        out[r][p[r]] = RingElem(1);
    }
    return out;
}

const RingElem kOne{1};
const RingElem kI{GaussianInt{0, 1}, 0};
const RingElem kMinusOne{-1};
const RingElem kMinusI{GaussianInt{0, -1}, 0};

} // namespace

PhasedMatrix gate_matrix(const Gate &g)
{
    PhasedMatrix out;
    switch (g.kind) {
    case GateKind::H: {
        // zeta8 * H has entries (1+i)/2 = i/(1+i); compensate with phase -1.
        RingElem mu{GaussianInt{0, 1}, 1};
        std::array<std::array<RingElem, 2>, 2> h{{{mu, mu}, {mu, -mu}}};
        out.mat = lift_one_qubit(h, g.q0);
        out.phase_exp = 7;
        return out;
    }
    case GateKind::S: {
        std::array<std::array<RingElem, 2>, 2> m{{{kOne, RingElem(0)}, {RingElem(0), kI}}};
        out.mat = lift_one_qubit(m, g.q0);
        return out;
    }
    case GateKind::Sdg: {
        std::array<std::array<RingElem, 2>, 2> m{{{kOne, RingElem(0)}, {RingElem(0), kMinusI}}};
        out.mat = lift_one_qubit(m, g.q0);
        return out;
    }
    case GateKind::X: {
        std::array<std::array<RingElem, 2>, 2> m{{{RingElem(0), kOne}, {kOne, RingElem(0)}}};
        out.mat = lift_one_qubit(m, g.q0);
        return out;
    }
    case GateKind::Z: {
        std::array<std::array<RingElem, 2>, 2> m{{{kOne, RingElem(0)}, {RingElem(0), kMinusOne}}};
        out.mat = lift_one_qubit(m, g.q0);
        return out;
    }
    case GateKind::CZ:
        out.mat = diag(kOne, kOne, kOne, kMinusOne);
        return out;
    case GateKind::CS:
        out.mat = diag(kOne, kOne, kOne, kI);
        return out;
    case GateKind::CSdg:
        out.mat = diag(kOne, kOne, kOne, kMinusI);
        return out;
    case GateKind::CNOT:
        // Control q0 flips the other bit on basis states where q0 = 1.
        if (g.q0 == 0) {
            return PhasedMatrix{permutation(0, 1, 3, 2), 0};
        }
        return PhasedMatrix{permutation(0, 3, 2, 1), 0};
    case GateKind::SWAP:
        return PhasedMatrix{permutation(0, 2, 1, 3), 0};
    }
    throw std::invalid_argument("gate_matrix: unknown gate kind");
}

PhasedMatrix evaluate(const Circuit &c)
{
    PhasedMatrix acc = PhasedMatrix::identity();
    for (const Gate &g : c.gates) {
        acc = gate_matrix(g) * acc; // first gate acts first
    }
    acc.canonicalize();
    if (!acc.is_unitary()) {
        throw std::logic_error("evaluate: product is not exactly unitary (internal error)");
    }
    return acc;
}

GateCounts Circuit::stats() const
{
    GateCounts counts;
    counts.total = gates.size();
    std::array<std::size_t, 2> free_layer{0, 0};
    for (const Gate &g : gates) {
        if (g.kind == GateKind::CS || g.kind == GateKind::CSdg) {
            ++counts.cs;
        }
        std::size_t layer;
        if (is_two_qubit(g.kind)) {
            layer = std::max(free_layer[0], free_layer[1]);
            free_layer[0] = free_layer[1] = layer + 1;
        }
        else {
            layer = free_layer[g.q0];
            free_layer[g.q0] = layer + 1;
        }
        counts.depth = std::max(counts.depth, layer + 1);
    }
    return counts;
}

namespace {

void emit_qasm_gate(std::ostringstream &os, const Gate &g, const QasmOptions &opts)
{
    auto q = [](int i) { return "q[" + std::to_string(i) + "]"; };
    switch (g.kind) {
    case GateKind::H:
        os << "h " << q(g.q0) << ";\n";
        return;
    case GateKind::S:
        os << "s " << q(g.q0) << ";\n";
        return;
    case GateKind::Sdg:
        os << "sdg " << q(g.q0) << ";\n";
        return;
    case GateKind::X:
        os << "x " << q(g.q0) << ";\n";
        return;
    case GateKind::Z:
        os << "z " << q(g.q0) << ";\n";
        return;
    case GateKind::CZ:
        os << "cz " << q(g.q0) << "," << q(g.q1) << ";\n";
        return;
    case GateKind::CNOT:
        os << "cx " << q(g.q0) << "," << q(g.q1) << ";\n";
        return;
    case GateKind::SWAP:
        os << "swap " << q(g.q0) << "," << q(g.q1) << ";\n";
        return;
    case GateKind::CS:
        if (opts.cs_as_gate) {
            os << "cs " << q(g.q0) << "," << q(g.q1) << ";\n";
        }
        else {
            os << "t " << q(g.q0) << ";\n";
            os << "cx " << q(g.q0) << "," << q(g.q1) << ";\n";
            os << "tdg " << q(g.q1) << ";\n";
            os << "cx " << q(g.q0) << "," << q(g.q1) << ";\n";
            os << "t " << q(g.q1) << ";\n";
        }
        return;
    case GateKind::CSdg:
        if (opts.cs_as_gate) {
            os << "csdg " << q(g.q0) << "," << q(g.q1) << ";\n";
        }
        else {
            os << "tdg " << q(g.q0) << ";\n";
            os << "cx " << q(g.q0) << "," << q(g.q1) << ";\n";
            os << "t " << q(g.q1) << ";\n";
            os << "cx " << q(g.q0) << "," << q(g.q1) << ";\n";
            os << "tdg " << q(g.q1) << ";\n";
        }
        return;
    }
}

} // namespace

std::string export_qasm(const Circuit &c, const QasmOptions &opts)
{
    std::ostringstream os;
    os << "OPENQASM 2.0;\n";
    os << "include \"qelib1.inc\";\n";
    if (opts.cs_as_gate) {
        os << "gate cs a,b { t a; cx a,b; tdg b; cx a,b; t b; }\n";
        os << "gate csdg a,b { tdg a; cx a,b; t b; cx a,b; tdg b; }\n";
    }
    os << "qreg q[2];\n";
    os << "creg c[1];\n";
    if (opts.rus_wrapper) {
        os << "// ancilla q[0], target q[1]; repeat until c[0] == 0, applying\n";
        os << "// the recovery unitary before each retry\n";
        os << "reset q[0];\n";
    }
    for (const Gate &g : c.gates) {
        emit_qasm_gate(os, g, opts);
    }
    if (opts.rus_wrapper) {
        os << "measure q[0] -> c[0];\n";
    }
    return os.str();
}

std::string export_json(const Circuit &c)
{
    ordered_json j;
    j["name"] = c.name;
    j["seed"] = c.seed;
    if (!c.params.empty()) {
        ordered_json jp;
        for (const auto &[key, value] : c.params) {
            jp[key] = value;
        }
        j["params"] = jp;
    }
    ordered_json gates = ordered_json::array();
    for (const Gate &g : c.gates) {
        ordered_json jg;
        jg["kind"] = gate_kind_name(g.kind);
        if (g.q1 >= 0) {
            jg["qubits"] = {g.q0, g.q1};
        }
        else {
            jg["qubits"] = {g.q0};
        }
        gates.push_back(jg);
    }
    j["gates"] = gates;
    return j.dump(2) + "\n";
}

Circuit circuit_from_json(const std::string &text)
{
    ordered_json j = ordered_json::parse(text);
    Circuit c;
    c.name = j.value("name", "");
    c.seed = j.value("seed", std::uint64_t{0});
    if (j.contains("params")) {
        for (const auto &[key, value] : j.at("params").items()) {
            c.params[key] = value.get<std::string>();
        }
    }
    for (const auto &jg : j.at("gates")) {
        GateKind kind = gate_kind_from_name(jg.at("kind").get<std::string>());
        auto qubits = jg.at("qubits").get<std::vector<int>>();
        if (is_two_qubit(kind)) {
            if (qubits.size() != 2) {
                throw std::invalid_argument("circuit json: " + gate_kind_name(kind) +
                                            " needs two qubits");
            }
            c.gates.push_back(g2(kind, qubits[0], qubits[1]));
        }
        else {
            if (qubits.size() != 1) {
                throw std::invalid_argument("circuit json: " + gate_kind_name(kind) +
                                            " needs one qubit");
            }
            c.gates.push_back(g1(kind, qubits[0]));
        }
    }
    return c;
}

} // namespace ruscs
