#include "bkl/json_io.hpp"

namespace bkl {

nlohmann::ordered_json to_json(const Lcf& f) {
  nlohmann::ordered_json j;
  j["n"] = f.n;
  j["inf"] = f.inf;
  j["sup"] = f.sup();
  auto factors = nlohmann::ordered_json::array();
  for (const auto& a : f.factors) factors.push_back(a.blocks());
  j["factors"] = std::move(factors);
  return j;
}

Lcf lcf_from_json(const nlohmann::json& j) {
  try {
    Lcf f{j.at("n").get<int>(), j.at("inf").get<int>(), {}};
    for (const auto& blocks : j.at("factors")) f.factors.push_back(Factor::from_blocks(f.n, blocks.get<Blocks>()));
    if (j.contains("sup") && j["sup"].get<int>() != f.sup()) throw DomainError("LCF JSON: sup does not match factor count");
    if (!is_valid_lcf(f)) throw DomainError("LCF JSON: factors are not left-weighted");
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("LCF JSON: ") + e.what());
  }
}

nlohmann::ordered_json to_json(const NbReport& r) {
  nlohmann::ordered_json j;
  j["lower"] = r.lower;
  j["upper"] = r.upper;
  j["exact"] = r.exact ? nlohmann::ordered_json(*r.exact) : nlohmann::ordered_json(nullptr);
  j["witness"] = to_string(r.witness);
  if (r.averaged_bound) j["averaged_bound"] = {{"num", r.averaged_bound->num}, {"den", r.averaged_bound->den}};
  return j;
}

nlohmann::ordered_json to_json(const LnReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["mfw_bound"] = r.mfw_bound;
  j["d_plus"] = r.d_plus;
  j["d_minus"] = r.d_minus;
  j["chi"] = r.chi;
  j["chi_bennequin_word"] = r.chi_bennequin_word;
  j["chi_after_stabilization"] = r.chi_after_stabilization;
  j["degree_span"] = r.degree_span;
  j["alexander_at_zero"] = r.alexander_at_zero;
  j["det_B"] = r.det_B;
  j["burau_agrees"] = r.burau_agrees ? nlohmann::ordered_json(*r.burau_agrees) : nlohmann::ordered_json(nullptr);
  j["sl"] = r.sl;
  j["defect"] = r.defect;
  j["nb_word"] = r.nb_word;
  j["nb_upper"] = r.nb_upper;
  j["nb_lower"] = r.nb_lower;
  j["nb_gap"] = r.nb_gap;
  j["verdicts"] = r.verdicts;
  j["conditional"] = r.conditional;
  j["all_ok"] = r.all_ok();
  return j;
}

}  // namespace bkl
