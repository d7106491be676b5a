#include "quartic/json_io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace quartic {

using nlohmann::json;

FormPair form_pair_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("A") || !doc.contains("B"))
        throw PreconditionError("system JSON must be an object with \"A\" and \"B\" arrays");
    FormPair pair;
    try {
        pair.A = doc.at("A").get<std::vector<i64>>();
        pair.B = doc.at("B").get<std::vector<i64>>();
    } catch (const json::exception& e) {
        throw PreconditionError(std::string("malformed system JSON: ") + e.what());
    }
    validate(pair);
    return pair;
}

FormPair load_form_pair(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::stringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    } else if (!path.empty() && path.front() == '{') {
        text = path;  // inline JSON
    } else {
        std::ifstream in(path);
        if (!in) throw PreconditionError("cannot open system file: " + path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    }
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw PreconditionError("system file is not valid JSON");
    return form_pair_from_json(doc);
}

json to_json(const FormPair& pair) { return json{{"A", pair.A}, {"B", pair.B}}; }

json to_json(const IndexClassification& cls) {
    json classes = json::array();
    for (const auto& members : cls.classes) {
        json one_based = json::array();
        for (int j : members) one_based.push_back(j + 1);
        classes.push_back(one_based);
    }
    return json{{"classes", classes}, {"profile", cls.profile}, {"n", cls.n}, {"m", cls.m},
                {"l", cls.l},         {"t", cls.t},             {"q0", cls.q0}};
}

json to_json(const NormalizedSystem& sys) {
    json permutation = json::array();
    for (int j : sys.permutation) permutation.push_back(j + 1);
    return json{{"a", sys.a},
                {"b", sys.b},
                {"c", sys.c},
                {"d", sys.d},
                {"permutation", permutation},
                {"transform", sys.transform},
                {"transform_det", sys.transform_det()}};
}

json to_json(const MomentValue& moment, double surrogate_delta) {
    return json{{"P", moment.P},
                {"R", moment.R},
                {"t", moment.t},
                {"moment", moment.value},
                {"surrogate_delta", surrogate_delta}};
}

std::string conclusion_label(HasseConclusion conclusion) {
    switch (conclusion) {
        case HasseConclusion::HassePrincipleEvidence:
            return "hasse-principle-evidence";
        case HasseConclusion::CounterexampleConfirmedAtScale:
            return "counterexample-confirmed-at-scale";
        case HasseConclusion::Inconclusive:
            return "inconclusive";
    }
    return "inconclusive";
}

json to_json(const SolubilityReport& report) {
    json local = json::array();
    for (const auto& verdict : report.local_verdicts) {
        json entry{{"p", verdict.p},
                   {"soluble", verdict.soluble},
                   {"precision", verdict.precision},
                   {"jacobian_full_rank", verdict.jacobian_full_rank}};
        if (!verdict.point.empty()) entry["point"] = verdict.point;
        if (!verdict.detail.empty()) entry["detail"] = verdict.detail;
        local.push_back(entry);
    }
    json real{{"soluble", report.real_verdict.soluble},
              {"residuals", {report.real_verdict.residual1, report.real_verdict.residual2}}};
    if (!report.real_verdict.witness.empty()) real["witness"] = report.real_verdict.witness;
    return json{{"system", report.system},
                {"real", real},
                {"local", local},
                {"prime_bound", report.prime_bound},
                {"search_bound", report.search_bound},
                {"integer_solutions", report.integer_solutions},
                {"conclusion", conclusion_label(report.conclusion)},
                {"note", report.note}};
}

json to_json(const SingularSeriesPartial& series) {
    return json{{"X", series.X},
                {"partial_sum", series.partial_sum},
                {"dagger_tail", series.dagger_tail},
                {"convergence_regime", series.convergence_regime},
                {"terms", series.terms},
                {"dagger_terms", series.dagger_terms}};
}

json to_json(const SingularIntegralPartial& integral) {
    return json{{"P", integral.P},
                {"X", integral.X},
                {"value", integral.value},
                {"error_estimate", integral.error_estimate}};
}

json to_json(const CountReport& report) {
    json doc{{"P", report.P}, {"N", report.N}};
    if (report.X) doc["X"] = *report.X;
    if (report.prediction) doc["prediction"] = *report.prediction;
    if (report.ratio)
        doc["ratio"] = *report.ratio;
    else if (report.prediction)
        doc["ratio"] = nullptr;  // prediction vanished, ratio undefined
    if (report.in_theorem_regime) doc["in_theorem_regime"] = *report.in_theorem_regime;
    return doc;
}

}  // namespace quartic
