#pragma once

#include <json.hpp>

#include "bkl/lcf.hpp"
#include "bkl/link_invariants.hpp"
#include "bkl/positivity.hpp"

namespace bkl {

/// {"n":4,"inf":-1,"sup":1,"factors":[[[1,3],[2],[4]], ...]}
nlohmann::ordered_json to_json(const Lcf& f);
Lcf lcf_from_json(const nlohmann::json& j);

/// {"lower":1,"upper":1,"exact":1,"witness":"B3: A(1,2) a(1,3)"}; "exact" is
/// null when unknown, "averaged_bound" appears only when defined.
nlohmann::ordered_json to_json(const NbReport& r);

nlohmann::ordered_json to_json(const LnReport& r);

}  // namespace bkl
