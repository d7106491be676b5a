#include "quartic/cli.hpp"

#include <cmath>
#include <iostream>
#include <sstream>

#include "quartic/arcs.hpp"
#include "quartic/counting.hpp"
#include "quartic/entangled.hpp"
#include "quartic/forms.hpp"
#include "quartic/json_io.hpp"
#include "quartic/local.hpp"
#include "quartic/parallel.hpp"
#include "quartic/smooth.hpp"

namespace quartic {

using nlohmann::json;

namespace {

i64 require(const std::optional<i64>& value, const char* flag) {
    if (!value) throw PreconditionError(std::string("missing required flag --") + flag);
    return *value;
}

FormPair require_system(const RunConfig& config) {
    if (config.system_path.empty())
        throw PreconditionError("this subcommand needs --system <file|->");
    return load_form_pair(config.system_path);
}

EntangledSpec parse_entangled(const std::string& text) {
    EntangledSpec spec;
    char comma1 = 0, comma2 = 0, comma3 = 0;
    std::istringstream in(text);
    in >> spec.a >> comma1 >> spec.b >> comma2 >> spec.c >> comma3 >> spec.d;
    if (!in || comma1 != ',' || comma2 != ',' || comma3 != ',')
        throw PreconditionError("--entangled expects four comma-separated integers");
    return spec;
}

json run_analyze(const RunConfig& config) {
    FormPair pair = require_system(config);
    IndexClassification cls = classify(pair);
    json doc = to_json(cls);
    doc["s"] = pair.size();
    doc["q0_minimization"] = q0_by_minimization(pair);
    json forms = json::array();
    for (const LinearForm& form : linear_forms(pair))
        forms.push_back({form.c_alpha, form.c_beta});
    doc["linear_forms"] = forms;
    if (cls.t >= 2) {
        doc["normal_form"] = to_json(normalize(pair));
    } else {
        doc["normal_form"] = nullptr;
        std::cerr << "note: single proportionality class, no two-block normal form\n";
    }
    return doc;
}

json run_moments(const RunConfig& config) {
    i64 P = require(config.P, "P");
    i64 R = config.R.value_or(P);
    SmoothSet S = smooth_set(P, R);

    if (config.entangled) {
        EntangledSpec spec = parse_entangled(*config.entangled);
        RepresentationTable table = psi_table(S, config.budget);
        u64 moment = entangled_moment(spec, table);
        return json{{"a", spec.a},
                    {"b", spec.b},
                    {"c", spec.c},
                    {"d", spec.d},
                    {"P", P},
                    {"R", R},
                    {"I", moment},
                    {"bound_3_sum_psi3", 3 * sum_psi_cubed(table)}};
    }

    std::vector<int> ts = config.t_values;
    if (ts.empty()) ts = {2, 4, 6};
    json records = json::array();
    for (int t : ts) {
        MomentValue moment = even_moment(S, t, config.budget);
        json record;
        if (P >= 2) {
            record = to_json(moment, std::log(static_cast<double>(moment.value)) /
                                             std::log(static_cast<double>(P)) -
                                         (t - 4));
        } else {
            record = to_json(moment, 0.0);
            record["surrogate_delta"] = nullptr;
        }
        records.push_back(record);
    }
    return records.size() == 1 ? records.front() : records;
}

json run_local(const RunConfig& config) {
    FormPair pair = require_system(config);
    i64 primes = config.prime_bound.value_or(50);
    i64 bound = config.search_bound.value_or(12);

    bool b_zero = true, a_zero = true;
    for (i64 v : pair.B) b_zero = b_zero && v == 0;
    for (i64 v : pair.A) a_zero = a_zero && v == 0;
    if (b_zero || a_zero) {
        const auto& coeffs = b_zero ? pair.A : pair.B;
        return to_json(analyze_diagonal_form(coeffs, primes, bound, 6, 10, config.budget));
    }

    // The one genuine pair with a built-in pipeline: the Hasse failure system.
    FormPair reference = counterexample_system(std::max(pair.size(), 9));
    if (pair.size() >= 9 && pair.A == reference.A && pair.B == reference.B)
        return to_json(verify_counterexample(pair.size(), bound, primes, 6, 10, config.budget));

    throw PreconditionError(
        "local place analysis covers single diagonal forms (one zero row) and the built-in "
        "failing pair; use `counterexample` for the latter");
}

json run_counterexample(const RunConfig& config) {
    int s = static_cast<int>(config.s.value_or(9));
    i64 bound = config.search_bound.value_or(12);
    i64 primes = config.prime_bound.value_or(50);
    return to_json(verify_counterexample(s, bound, primes, 6, 10, config.budget));
}

json run_series(const RunConfig& config) {
    FormPair pair = require_system(config);
    i64 X = static_cast<i64>(config.X.value_or(64.0));
    SingularSeriesPartial series = singular_series(pair, X, config.budget);
    if (!series.convergence_regime)
        std::cerr << "warning: outside the convergence regime (wants s >= 16 and q0 >= 12); "
                     "computing anyway\n";
    return to_json(series);
}

json run_integral(const RunConfig& config) {
    FormPair pair = require_system(config);
    i64 P = require(config.P, "P");
    double X = config.X.value_or(8.0);
    return to_json(singular_integral(pair, P, X));
}

json run_predict(const RunConfig& config) {
    FormPair pair = require_system(config);
    i64 P = require(config.P, "P");
    double X = config.X.value_or(8.0);
    SingularSeriesPartial series = singular_series(pair, static_cast<i64>(X), config.budget);
    SingularIntegralPartial integral = singular_integral(pair, P, X);
    return json{{"P", P},
                {"X", X},
                {"singular_series", series.partial_sum},
                {"singular_integral", integral.value},
                {"prediction", series.partial_sum * integral.value},
                {"convergence_regime", series.convergence_regime}};
}

json run_count(const RunConfig& config) {
    FormPair pair = require_system(config);
    i64 P = require(config.P, "P");
    CountReport report;
    if (config.predict_X) {
        report = compare_prediction(pair, P, *config.predict_X, config.budget);
    } else {
        report = count_solutions(pair, P, config.budget);
    }
    std::cerr << "count finished in " << report.seconds << " s\n";
    return to_json(report);
}

}  // namespace

DispatchResult dispatch(const RunConfig& config) {
    DispatchResult result;
    set_thread_count(config.threads);
    try {
        if (config.tau && (*config.tau <= 0.0 || *config.tau >= 1e-4))
            throw PreconditionError("--tau must lie in (0, 1e-4)");

        if (config.subcommand == "analyze")
            result.document = run_analyze(config);
        else if (config.subcommand == "moments")
            result.document = run_moments(config);
        else if (config.subcommand == "local")
            result.document = run_local(config);
        else if (config.subcommand == "counterexample")
            result.document = run_counterexample(config);
        else if (config.subcommand == "series")
            result.document = run_series(config);
        else if (config.subcommand == "integral")
            result.document = run_integral(config);
        else if (config.subcommand == "predict")
            result.document = run_predict(config);
        else if (config.subcommand == "count")
            result.document = run_count(config);
        else
            throw PreconditionError("unknown subcommand: " + config.subcommand);
        result.has_document = true;
        result.status = 0;
    } catch (const PreconditionError& e) {
        result.status = 2;
        result.error = e.what();
    } catch (const BudgetExceeded& e) {
        result.status = 3;
        result.error = e.what();
    } catch (const TheoremViolation& e) {
        result.status = 4;
        result.error = e.what();
    }
    return result;
}

}  // namespace quartic
