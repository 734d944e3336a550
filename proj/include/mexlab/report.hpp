#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "mexlab/eta.hpp"
#include "mexlab/verdict.hpp"

namespace mexlab {

// {claim, status: "pass"|"fail", checked, counterexample: {n, value} | null};
// values are decimal strings.
nlohmann::ordered_json to_json(const Verdict& v);

std::string rational_string(const mpq_class& q);

nlohmann::ordered_json to_json(const EtaQuotient& e);
nlohmann::ordered_json to_json(const HolomorphyReport& r);
nlohmann::ordered_json to_json(const STableRow& r);

}  // namespace mexlab
