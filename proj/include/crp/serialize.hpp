#pragma once

#include <json.hpp>

#include "crp/twisted.hpp"

namespace crp {

// One witness per JSON object; words in text notation, certificates in identity-file form.
nlohmann::json witness_to_json(const MainWitness& mw);
MainWitness witness_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const VerificationReport& rep);

}  // namespace crp
