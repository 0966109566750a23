#!/usr/bin/env python3
"""Smoke tests for the ruscs python package."""

import sys

import ruscs


def check(cond, message):
    if not cond:
        print("FAIL:", message)
        sys.exit(1)


def main():
    check(ruscs.__version__, "version string present")

    sols = ruscs.four_squares("7")
    check(len(sols) == 1, "four_squares returns one solution by default")
    check(sum(int(x) ** 2 for x in sols[0]) == 7, "four_squares(7) sums correctly")

    many = ruscs.four_squares("9", count=5)
    check(len(many) == 2, "four_squares(9) has two solutions")

    pts = ruscs.enumerate_points("coeffs:1,0,0,0", 0.1, 0.5, 2)
    check(pts == [["2", "0", "0", "0"]], "enumerate_points identity N=2")

    doc = ruscs.approximate("coeffs:1,0,0,0", "0.1", "0.5")
    check(doc["success_prob"] == "1/1", "approximate identity success_prob")
    check(doc["n"] == 2, "approximate identity N")
    check(doc["verification"]["exact_match"], "approximate identity verified")

    report = ruscs.verify(doc)
    check(report["all_ok"], "verify of emitted document passes")

    circuit = ruscs.synthesize_circuit(1, [1, 0, 0, 0], [0, 1, 0, 0])
    check(len(circuit["gates"]) >= 1, "synthesize_circuit returns gates")

    try:
        ruscs.approximate("coeffs:0,0,0,0", "0.1", "0.5")
        check(False, "zero target must raise")
    except ValueError:
        pass
    except Exception as e:  # pybind translates std::invalid_argument to ValueError
        check(False, f"unexpected exception type: {type(e)}")

    print("all python smoke tests passed")


if __name__ == "__main__":
    main()
