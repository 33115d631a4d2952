#include "vir/json_io.hpp"

namespace vir {

Json rat_to_json(const Rat& r) { return to_string(r); }

Rat rat_from_json(const Json& j) {
    auto r = rat_from_string(j.get<std::string>());
    if (!r) throw std::invalid_argument("bad rational: " + j.get<std::string>());
    return *r;
}

Json poly_to_json(const MultiPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json term;
        term["coeff"] = rat_to_json(c);
        term["exponents"] = e;
        terms.push_back(std::move(term));
    }
    Json j;
    j["terms"] = std::move(terms);
    j["vars"] = p.vars();
    return j;
}

MultiPoly poly_from_json(const Json& j) {
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    MultiPoly::TermMap terms;
    for (const auto& term : j.at("terms"))
        terms[term.at("exponents").get<MultiPoly::Exps>()] =
            rat_from_json(term.at("coeff"));
    return MultiPoly::make(vars, std::move(terms));
}

Json ratfunc_to_json(const RatFunc& f) {
    Json j;
    j["num"] = poly_to_json(f.num());
    j["den"] = poly_to_json(f.den());
    return j;
}

RatFunc ratfunc_from_json(const Json& j) {
    return RatFunc(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

Json gram_to_json(int level, const Matrix<MultiPoly>& gram,
                  const Factorization& det_factored) {
    Json j;
    j["level"] = level;
    Json basis = Json::array();
    for (const auto& w : vacuum_basis(level)) basis.push_back(w);
    j["basis"] = std::move(basis);
    Json entries = Json::array();
    for (size_t i = 0; i < gram.rows(); ++i) {
        Json row = Json::array();
        for (size_t k = 0; k < gram.cols(); ++k)
            row.push_back(poly_to_json(gram(i, k)));
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    j["det"] = poly_to_json(det_factored.expand());
    Json factors = Json::array();
    for (const auto& [f, mult] : det_factored.factors) {
        Json fj;
        fj["poly"] = poly_to_json(f);
        fj["mult"] = mult;
        factors.push_back(std::move(fj));
    }
    j["factors"] = std::move(factors);
    j["constant"] = rat_to_json(det_factored.unit);
    return j;
}

Matrix<MultiPoly> gram_entries_from_json(const Json& j) {
    const Json& entries = j.at("entries");
    size_t n = entries.size();
    Matrix<MultiPoly> m(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) m(i, k) = poly_from_json(entries[i][k]);
    return m;
}

Json casimir_to_json(const CasimirSolution& sol) {
    Json j;
    j["weight"] = rat_to_json(sol.weight);
    j["level"] = sol.level;
    Json terms = Json::array();
    for (const auto& [word, coeff] : sol.vector.terms) {
        Json t;
        t["parts"] = word;
        t["coeff_num"] = poly_to_json(coeff.num());
        t["coeff_den"] = poly_to_json(coeff.den());
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    Json poles = Json::array();
    for (const auto& p : sol.poles) poles.push_back(rat_to_json(p));
    j["poles"] = std::move(poles);
    j["assumptions"] = sol.assumptions;
    return j;
}

Json derived_to_json(const DerivedForm& form) {
    Json j;
    j["name"] = form.name;
    j["num"] = poly_to_json(form.value.num());
    j["den"] = poly_to_json(form.value.den());
    return j;
}

Json constraint_system_to_json(const ConstraintSystem& sys) {
    Json j;
    j["weight"] = sys.weight;
    j["unknowns"] = sys.unknowns;
    Json eqs = Json::array();
    for (const auto& eq : sys.equations) {
        Json e;
        Json lhs;
        for (const auto& [name, coeff] : eq.lhs) lhs[name] = ratfunc_to_json(coeff);
        e["lhs"] = std::move(lhs);
        e["rhs"] = ratfunc_to_json(eq.rhs);
        e["provenance"] = eq.provenance;
        eqs.push_back(std::move(e));
    }
    j["equations"] = std::move(eqs);
    return j;
}

Json audit_to_json(const AuditReport& report) {
    Json j;
    j["table"] = report.table;
    Json cells = Json::array();
    for (const auto& c : report.cells) {
        Json cj;
        cj["claim"] = c.claim;
        cj["computed"] = c.computed;
        cj["status"] = c.pass ? "pass" : "fail";
        cells.push_back(std::move(cj));
    }
    j["cells"] = std::move(cells);
    j["pass"] = report.pass;
    return j;
}

Json enumeration_to_json(const EnumerationResult& result) {
    auto rows = [](const std::vector<std::pair<Rat, Int>>& list) {
        Json out = Json::array();
        for (const auto& [C, d] : list) {
            Json row;
            row["C"] = rat_to_json(C);
            row["d"] = d.get_str();
            out.push_back(std::move(row));
        }
        return out;
    };
    Json j;
    j["weight"] = result.weight;
    j["solutions"] = rows(result.solutions);
    j["flagged"] = rows(result.flagged);
    Json audit;
    for (const auto& [k, v] : result.method_audit) audit[k] = v;
    j["method_audit"] = std::move(audit);
    return j;
}

std::string json_dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace vir
