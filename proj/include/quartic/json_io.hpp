#pragma once

#include <string>

#include "json.hpp"
#include "quartic/arcs.hpp"
#include "quartic/counting.hpp"
#include "quartic/forms.hpp"
#include "quartic/local.hpp"
#include "quartic/smooth.hpp"

namespace quartic {

/// Parses {"A": [ints], "B": [ints]} and validates the pair.
FormPair form_pair_from_json(const nlohmann::json& doc);

/// Reads the pair from a file path, or from standard input when path is "-".
FormPair load_form_pair(const std::string& path);

nlohmann::json to_json(const FormPair& pair);
nlohmann::json to_json(const IndexClassification& cls);
nlohmann::json to_json(const NormalizedSystem& sys);
nlohmann::json to_json(const MomentValue& moment, double surrogate_delta);
nlohmann::json to_json(const SolubilityReport& report);
nlohmann::json to_json(const SingularSeriesPartial& series);
nlohmann::json to_json(const SingularIntegralPartial& integral);
nlohmann::json to_json(const CountReport& report);

std::string conclusion_label(HasseConclusion conclusion);

}  // namespace quartic
