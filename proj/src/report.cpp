#include "mexlab/report.hpp"

namespace mexlab {

using json = nlohmann::ordered_json;

json to_json(const Verdict& v) {
  json j;
  j["claim"] = v.claim;
  j["status"] = v.pass ? "pass" : "fail";
  j["checked"] = v.checked;
  if (v.counterexample) {
    j["counterexample"] = {{"n", v.counterexample->n}, {"value", v.counterexample->value.get_str()}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j;
}

std::string rational_string(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

json to_json(const EtaQuotient& e) {
  json ex = json::object();
  for (const auto& [d, r] : e.exponents) ex[std::to_string(d)] = r;
  return {{"level", e.level}, {"exponents", ex}};
}

json to_json(const HolomorphyReport& r) {
  json j;
  j["ok"] = r.ok;
  j["weight"] = rational_string(r.weight);
  j["level"] = r.level;
  j["character"] = r.character_descriptor;
  j["sum_delta_r"] = r.conditions.sum_a.get_str();
  j["sum_N_over_delta_r"] = r.conditions.sum_b.get_str();
  j["conditions_ok"] = r.conditions.ok;
  j["failing_cusp"] = r.failing_cusp ? json(*r.failing_cusp) : json(nullptr);
  return j;
}

json to_json(const STableRow& r) {
  return {{"d", r.d},
          {"gcd_d_12", r.gcd12},
          {"gcd_d_24", r.gcd24},
          {"S", r.s.get_str()},
          {"cusp_order", rational_string(r.cusp_order)}};
}

}  // namespace mexlab
