#include "ruscs/circuit.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace ruscs;

TEST_CASE("gate matrices")
{
    PhasedMatrix cs = gate_matrix(g2(GateKind::CS, 0, 1));
    CHECK(cs.phase_exp == 0);
    CHECK(cs.mat[0][0] == RingElem(1));
    CHECK(cs.mat[3][3] == RingElem(GaussianInt{0, 1}, 0));
    CHECK(cs.mat[0][1].is_zero());

    // X on qubit 0 permutes {0,1} <-> {2,3}.
    PhasedMatrix x0 = gate_matrix(g1(GateKind::X, 0));
    CHECK(x0.mat[0][2] == RingElem(1));
    CHECK(x0.mat[2][0] == RingElem(1));
    CHECK(x0.mat[1][3] == RingElem(1));
    CHECK(x0.mat[3][1] == RingElem(1));
    CHECK(x0.mat[0][0].is_zero());

    // H on qubit 1: entries i/(1+i) in the acted block, phase -1 mod 8.
    PhasedMatrix h1 = gate_matrix(g1(GateKind::H, 1));
    CHECK(h1.phase_exp == 7);
    RingElem mu{GaussianInt{0, 1}, 1};
    CHECK(h1.mat[0][0] == mu);
    CHECK(h1.mat[0][1] == mu);
    CHECK(h1.mat[1][0] == mu);
    CHECK(h1.mat[1][1] == -mu);
    CHECK(h1.mat[0][2].is_zero());
    CHECK(h1.mat[2][2] == mu);
}

TEST_CASE("gate matrices match their complex counterparts")
{
    std::mt19937_64 rng(47);
    for (int t = 0; t < 60; ++t) {
        Gate g = oracles::random_gate(rng);
        auto exact = gate_matrix(g).to_complex();
        auto expect = oracles::complex_gate(g);
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                CHECK(std::abs(exact[i][j] - expect[i][j]) <= 1e-12);
            }
        }
    }
}

TEST_CASE("evaluation examples")
{
    Circuit empty;
    PhasedMatrix id = evaluate(empty);
    CHECK(id == PhasedMatrix::identity());

    Circuit inverse_pair;
    inverse_pair.gates = {g2(GateKind::CS, 0, 1), g2(GateKind::CSdg, 0, 1)};
    CHECK(evaluate(inverse_pair) == PhasedMatrix::identity());

    // H twice is the identity with phase 0 after canonicalization.
    Circuit hh;
    hh.gates = {g1(GateKind::H, 1), g1(GateKind::H, 1)};
    PhasedMatrix m = evaluate(hh);
    CHECK(m == PhasedMatrix::identity());
    CHECK(m.phase_exp == 0);
}

TEST_CASE("exact unitarity and complex consistency on random circuits")
{
    std::mt19937_64 rng(53);
    for (int t = 0; t < 100; ++t) {
        Circuit c = oracles::random_circuit(rng, 1 + static_cast<int>(rng() % 50));
        PhasedMatrix m = evaluate(c);
        CHECK(m.is_unitary());
        auto exact = m.to_complex();
        auto expect = oracles::complex_evaluate(c);
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                CHECK(std::abs(exact[i][j] - expect[i][j]) <= 1e-10);
            }
        }
    }
}

TEST_CASE("stats")
{
    Circuit c;
    CHECK(c.stats().total == 0);
    CHECK(c.stats().cs == 0);
    CHECK(c.stats().depth == 0);

    c.gates = {g2(GateKind::CS, 0, 1)};
    CHECK(c.stats().total == 1);
    CHECK(c.stats().cs == 1);
    CHECK(c.stats().depth == 1);

    c.gates = {g1(GateKind::H, 0), g2(GateKind::CS, 0, 1), g1(GateKind::H, 0)};
    CHECK(c.stats().total == 3);
    CHECK(c.stats().cs == 1);
    CHECK(c.stats().depth == 3);

    // Parallel one-qubit gates share a layer.
    c.gates = {g1(GateKind::H, 0), g1(GateKind::S, 1)};
    CHECK(c.stats().depth == 1);

    // CS count is invariant under inserting Clifford identity pairs.
    Circuit padded;
    padded.gates = {g1(GateKind::H, 0), g1(GateKind::H, 0), g2(GateKind::CS, 0, 1),
                    g2(GateKind::CZ, 0, 1), g2(GateKind::CZ, 0, 1)};
    CHECK(padded.stats().cs == 1);
}

TEST_CASE("json export round-trips byte-identically")
{
    std::mt19937_64 rng(59);
    Circuit c = oracles::random_circuit(rng, 20);
    c.name = "roundtrip";
    c.seed = 59;
    c.params["epsilon"] = "1/10";
    std::string text = export_json(c);
    Circuit back = circuit_from_json(text);
    CHECK(back.gates == c.gates);
    CHECK(back.name == c.name);
    CHECK(back.seed == c.seed);
    CHECK(back.params == c.params);
    CHECK(export_json(back) == text);

    Circuit single;
    single.gates = {g2(GateKind::CS, 0, 1)};
    std::string js = export_json(single);
    CHECK(js.find("\"kind\": \"CS\"") != std::string::npos);
    CHECK(js.find("\"qubits\": [\n        0,\n        1\n      ]") != std::string::npos);
}

TEST_CASE("qasm export")
{
    Circuit empty;
    std::string header = export_qasm(empty);
    CHECK(header.find("OPENQASM 2.0;") == 0);
    CHECK(header.find("qreg q[2];") != std::string::npos);
    CHECK(header.find("creg c[1];") != std::string::npos);

    Circuit c;
    c.gates = {g1(GateKind::H, 0), g2(GateKind::CS, 0, 1), g2(GateKind::CNOT, 1, 0),
               g2(GateKind::SWAP, 0, 1), g1(GateKind::Sdg, 1)};
    std::string expanded = export_qasm(c);
    CHECK(expanded.find("h q[0];") != std::string::npos);
    // CS expands into cx/t/tdg by default.
    CHECK(expanded.find("t q[0];") != std::string::npos);
    CHECK(expanded.find("cx q[0],q[1];") != std::string::npos);
    CHECK(expanded.find("cs ") == std::string::npos);

    QasmOptions named;
    named.cs_as_gate = true;
    std::string with_gate = export_qasm(c, named);
    CHECK(with_gate.find("gate cs a,b") != std::string::npos);
    CHECK(with_gate.find("cs q[0],q[1];") != std::string::npos);

    QasmOptions wrapped;
    wrapped.rus_wrapper = true;
    std::string wrapper = export_qasm(c, wrapped);
    CHECK(wrapper.find("reset q[0];") != std::string::npos);
    CHECK(wrapper.find("measure q[0] -> c[0];") != std::string::npos);
}

TEST_CASE("the qasm cs expansion is exactly controlled-S")
{
    // The emitted pattern is: t control; cx; tdg target; cx; t target.
    // The controls commute to a diagonal phase zeta8^(c - (t^c) + t) per
    // basis state (c, t); check it equals diag(1,1,1,i).
    using C = std::complex<double>;
    const C zeta8 = std::polar(1.0, M_PI / 4);
    const std::array<C, 4> expect{C{1, 0}, C{1, 0}, C{1, 0}, C{0, 1}};
    for (int s = 0; s < 4; ++s) {
        int c = s >> 1;
        int t = s & 1;
        C phase = std::pow(zeta8, c - (t ^ c) + t);
        CHECK(std::abs(phase - expect[s]) < 1e-12);
    }
}
