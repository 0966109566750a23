#include "ruscs/four_squares.hpp"
#include "ruscs/json_io.hpp"
#include "ruscs/pipeline.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;

namespace {

std::vector<std::array<std::string, 4>> py_four_squares(const std::string &m, int count,
                                                        std::uint64_t seed)
{
    ruscs::Integer M(m);
    ruscs::Rng rng(seed);
    std::vector<std::array<std::string, 4>> out;
    for (const auto &s : ruscs::four_squares_multi(M, count, rng)) {
        out.push_back({s.a.str(), s.b.str(), s.c.str(), s.d.str()});
    }
    return out;
}

std::vector<std::array<std::string, 4>> py_enumerate(const std::string &target, double epsilon,
                                                     double p_fail, int n, std::int64_t budget)
{
    ruscs::TargetUnitary t = ruscs::parse_target(target);
    std::vector<std::array<std::string, 4>> out;
    for (const auto &q : ruscs::solve_point_enumeration(t, epsilon, p_fail, n, budget)) {
        out.push_back({q.uI.str(), q.uX.str(), q.uY.str(), q.uZ.str()});
    }
    return out;
}

std::string py_approximate(const std::string &target, const std::string &epsilon,
                           const std::string &p_fail, std::uint64_t seed, int n_max,
                           std::int64_t budget, const std::string &selection)
{
    ruscs::TargetUnitary t = ruscs::parse_target(target);
    ruscs::Config cfg;
    cfg.epsilon = ruscs::Rational::from_decimal(epsilon);
    cfg.p_fail = ruscs::Rational::from_decimal(p_fail);
    cfg.seed = seed;
    cfg.n_max = n_max;
    cfg.search_budget = budget;
    cfg.selection = ruscs::selection_from_name(selection);

    ruscs::ResultDocument doc;
    doc.target_spec = target;
    doc.target_u = t.u;
    doc.config = cfg;
    doc.result = ruscs::approximate(t, cfg);
    return ruscs::result_to_json(doc);
}

std::string py_verify(const std::string &result_json)
{
    ruscs::ResultDocument doc = ruscs::result_from_json(result_json);
    ruscs::TargetUnitary target;
    target.u = doc.target_u;
    ruscs::VerifyReport report =
        ruscs::verify(doc.result.circuit, doc.result.plan, target, doc.config);
    std::string prob = report.success_prob.to_fraction_string();
    return std::string("{\"exact_match\": ") + (report.exact_match ? "true" : "false") +
           ", \"success_prob\": \"" + prob + "\"" +
           ", \"success_prob_ok\": " + (report.success_prob_ok ? "true" : "false") +
           ", \"error_ok\": " + (report.error_ok ? "true" : "false") +
           ", \"all_ok\": " + (report.all_ok() ? "true" : "false") + "}";
}

std::string py_synthesize(int n, const std::array<std::string, 4> &u0,
                          const std::array<std::string, 4> &u1, std::int64_t budget)
{
    ruscs::QuatVec q0{ruscs::Integer(u0[0]), ruscs::Integer(u0[1]), ruscs::Integer(u0[2]),
                      ruscs::Integer(u0[3])};
    ruscs::QuatVec q1{ruscs::Integer(u1[0]), ruscs::Integer(u1[1]), ruscs::Integer(u1[2]),
                      ruscs::Integer(u1[3])};
    ruscs::RUSPlan plan = ruscs::build_plan(n, q0, q1);
    ruscs::SynthOutcome outcome = ruscs::synthesize(plan.w_prime, budget);
    if (!outcome.ok) {
        throw std::runtime_error("synthesis budget exhausted");
    }
    return ruscs::export_json(outcome.circuit);
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Clifford+CS repeat-until-success synthesis core";

    m.def("four_squares", &py_four_squares, py::arg("m"), py::arg("count") = 1,
          py::arg("seed") = 1,
          "Decompositions of m (decimal string) as sums of four squares.");
    m.def("enumerate_points", &py_enumerate, py::arg("target"), py::arg("epsilon"),
          py::arg("p_fail"), py::arg("n"), py::arg("budget") = 1000000,
          "Integer 4-vectors solving the point-enumeration problem for one N.");
    m.def("approximate_json", &py_approximate, py::arg("target"), py::arg("epsilon"),
          py::arg("p_fail"), py::arg("seed") = 1, py::arg("n_max") = 20,
          py::arg("budget") = 400000, py::arg("selection") = "min_cs",
          "Run the pipeline; returns the result JSON document.");
    m.def("verify_json", &py_verify, py::arg("result_json"),
          "Re-verify a result document; returns a JSON report.");
    m.def("synthesize_circuit_json", &py_synthesize, py::arg("n"), py::arg("u0"), py::arg("u1"),
          py::arg("budget") = 5000000,
          "Exact synthesis for the isometry built from (n, u0, u1).");

    m.attr("__version__") = "0.1.0";
}
