#include "ruscs/json_io.hpp"

#include <json.hpp>

#include <stdexcept>

namespace ruscs {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json quat_to_json(const QuatVec &q)
{
    return ordered_json::array({q.uI.str(), q.uX.str(), q.uY.str(), q.uZ.str()});
}

QuatVec quat_from_json(const ordered_json &j)
{
    if (!j.is_array() || j.size() != 4) {
        throw std::invalid_argument("json: integer 4-vector expected");
    }
    QuatVec q;
    q.uI = Integer(j[0].get<std::string>());
    q.uX = Integer(j[1].get<std::string>());
    q.uY = Integer(j[2].get<std::string>());
    q.uZ = Integer(j[3].get<std::string>());
    return q;
}

ordered_json gates_to_json(const Circuit &c)
{
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
    return gates;
}

Circuit gates_from_json(const ordered_json &j)
{
    Circuit c;
    for (const auto &jg : j) {
        GateKind kind = gate_kind_from_name(jg.at("kind").get<std::string>());
        auto qubits = jg.at("qubits").get<std::vector<int>>();
        if (is_two_qubit(kind)) {
            c.gates.push_back(g2(kind, qubits.at(0), qubits.at(1)));
        }
        else {
            c.gates.push_back(g1(kind, qubits.at(0)));
        }
    }
    return c;
}

ordered_json document_to_json(const ResultDocument &doc)
{
    ordered_json j;
    j["target"] = ordered_json();
    j["target"]["spec"] = doc.target_spec;
    j["target"]["u"] = doc.target_u;

    const Config &cfg = doc.config;
    ordered_json jc;
    jc["epsilon"] = cfg.epsilon.to_fraction_string();
    jc["p_fail"] = cfg.p_fail.to_fraction_string();
    jc["n_start"] = cfg.n_start;
    jc["n_max"] = cfg.n_max;
    jc["candidates_per_n"] = cfg.candidates_per_n;
    jc["norm_solutions_per_candidate"] = cfg.norm_solutions_per_candidate;
    jc["search_budget"] = cfg.search_budget;
    jc["seed"] = cfg.seed;
    jc["selection"] = selection_name(cfg.selection);
    jc["n_lookahead"] = cfg.n_lookahead;
    j["config"] = jc;

    const SynthesisResult &r = doc.result;
    j["n"] = r.plan.n;
    j["u0"] = quat_to_json(r.plan.u0);
    j["u1"] = quat_to_json(r.plan.u1);
    j["success_prob"] = r.plan.success_prob.to_fraction_string();
    j["error_bound"] = r.plan.error_bound;
    j["phase_exp"] = r.phase_exp;
    j["gates"] = gates_to_json(r.circuit);

    GateCounts counts = r.circuit.stats();
    ordered_json jcounts;
    jcounts["total"] = counts.total;
    jcounts["cs"] = counts.cs;
    jcounts["depth"] = counts.depth;
    j["counts"] = jcounts;

    ordered_json jv;
    jv["exact_match"] = r.verification.exact_match;
    jv["phase_exp"] = r.verification.phase_exp;
    jv["success_prob_ok"] = r.verification.success_prob_ok;
    jv["error_ok"] = r.verification.error_ok;
    j["verification"] = jv;

    ordered_json per_n = ordered_json::array();
    for (const AttemptsPerN &a : r.attempts.per_n) {
        ordered_json ja;
        ja["n"] = a.n;
        ja["points"] = a.points;
        ja["plans"] = a.plans;
        ja["synth_ok"] = a.synth_ok;
        ja["synth_fail"] = a.synth_fail;
        per_n.push_back(ja);
    }
    ordered_json jat;
    jat["per_n"] = per_n;
    jat["nodes_expanded"] = r.attempts.nodes_expanded;
    j["attempts"] = jat;

    if (!doc.followups.empty()) {
        ordered_json jf = ordered_json::array();
        for (const ResultDocument &f : doc.followups) {
            jf.push_back(document_to_json(f));
        }
        j["followups"] = jf;
    }
    return j;
}

ResultDocument document_from_json(const ordered_json &j)
{
    ResultDocument doc;
    doc.target_spec = j.at("target").at("spec").get<std::string>();
    auto u = j.at("target").at("u").get<std::vector<double>>();
    if (u.size() != 4) {
        throw std::invalid_argument("json: target.u must have 4 components");
    }
    std::copy(u.begin(), u.end(), doc.target_u.begin());

    const auto &jc = j.at("config");
    Config &cfg = doc.config;
    auto fraction = [](const std::string &s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) {
            return Rational(Integer(s), 1);
        }
        return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
    };
    cfg.epsilon = fraction(jc.at("epsilon").get<std::string>());
    cfg.p_fail = fraction(jc.at("p_fail").get<std::string>());
    cfg.n_start = jc.at("n_start").get<int>();
    cfg.n_max = jc.at("n_max").get<int>();
    cfg.candidates_per_n = jc.at("candidates_per_n").get<int>();
    cfg.norm_solutions_per_candidate = jc.at("norm_solutions_per_candidate").get<int>();
    cfg.search_budget = jc.at("search_budget").get<std::int64_t>();
    cfg.seed = jc.at("seed").get<std::uint64_t>();
    cfg.selection = selection_from_name(jc.at("selection").get<std::string>());
    cfg.n_lookahead = jc.at("n_lookahead").get<int>();

    SynthesisResult &r = doc.result;
    int n = j.at("n").get<int>();
    QuatVec u0 = quat_from_json(j.at("u0"));
    QuatVec u1 = quat_from_json(j.at("u1"));
    TargetUnitary target;
    target.u = doc.target_u;
    r.plan = build_plan(n, u0, u1, target);
    r.phase_exp = j.at("phase_exp").get<int>();
    r.circuit = gates_from_json(j.at("gates"));
    r.verification.exact_match = j.at("verification").at("exact_match").get<bool>();
    r.verification.phase_exp = j.at("verification").at("phase_exp").get<int>();
    r.verification.success_prob_ok = j.at("verification").at("success_prob_ok").get<bool>();
    r.verification.error_ok = j.at("verification").at("error_ok").get<bool>();

    if (j.contains("followups")) {
        for (const auto &jf : j.at("followups")) {
            doc.followups.push_back(document_from_json(jf));
        }
    }
    return doc;
}

} // namespace

std::string result_to_json(const ResultDocument &doc, const std::string &timestamp)
{
    ordered_json j;
    j["tool"] = "ruscs";
    if (!timestamp.empty()) {
        j["timestamp"] = timestamp;
    }
    j.update(document_to_json(doc));
    return j.dump(2) + "\n";
}

ResultDocument result_from_json(const std::string &text)
{
    return document_from_json(ordered_json::parse(text));
}

std::string wprime_to_json(const RMat4x2 &w)
{
    ordered_json rows = ordered_json::array();
    for (const auto &row : w) {
        ordered_json jrow = ordered_json::array();
        for (const auto &e : row) {
            ordered_json je;
            je["re"] = e.num().re().str();
            je["im"] = e.num().im().str();
            je["k"] = e.k();
            jrow.push_back(je);
        }
        rows.push_back(jrow);
    }
    ordered_json j;
    j["wprime"] = rows;
    return j.dump(2) + "\n";
}

RMat4x2 wprime_from_json(const std::string &text)
{
    ordered_json j = ordered_json::parse(text);
    if (j.contains("wprime")) {
        const auto &rows = j.at("wprime");
        if (!rows.is_array() || rows.size() != 4) {
            throw std::invalid_argument("wprime json: 4 rows expected");
        }
        RMat4x2 w;
        for (int r = 0; r < 4; ++r) {
            const auto &row = rows[r];
            if (!row.is_array() || row.size() != 2) {
                throw std::invalid_argument("wprime json: 2 columns expected");
            }
            for (int c = 0; c < 2; ++c) {
                const auto &je = row[c];
                GaussianInt num{Integer(je.at("re").get<std::string>()),
                                Integer(je.at("im").get<std::string>())};
                w[r][c] = RingElem(num, je.at("k").get<int>());
            }
        }
        return w;
    }
    if (j.contains("u0")) {
        int n = j.at("n").get<int>();
        QuatVec u0 = quat_from_json(j.at("u0"));
        QuatVec u1 = quat_from_json(j.at("u1"));
        return build_plan(n, u0, u1).w_prime;
    }
    throw std::invalid_argument("wprime json: expected 'wprime' entries or 'n'/'u0'/'u1'");
}

} // namespace ruscs
