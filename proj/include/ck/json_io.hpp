#pragma once

#include <json.hpp>

#include "ck/character.hpp"
#include "ck/claims.hpp"
#include "ck/lax.hpp"
#include "ck/lie.hpp"

namespace ck {

using Json = nlohmann::ordered_json;

Json laurent_to_json(const LaurentElement& a);
LaurentElement laurent_from_json(const Json& j, Window win);

/// {"schema":"1","kind":"character","degree_cap":...,"window":[lo,hi],
///  "values":{"<tree encoding>":[[exp,"poly"],...], ...}}
Json character_to_json(const Character& phi);
Json infchar_to_json(const InfChar& z);
Character character_from_json(std::shared_ptr<const HopfContext> ctx, const Json& j);
InfChar infchar_from_json(std::shared_ptr<const HopfContext> ctx, const Json& j);

/// {"schema":"1","basis":[...],"degrees":[...],"brackets":[[a,b,c,"coeff"],...]}
/// with 1-based basis indices.
Json liedata_to_json(const LieData& g);

Json trajectory_to_json(const FlowTrajectory& traj);

/// Canonical verify-all report: stable key order, no wall-clock fields, so a
/// fixed config + seed reproduces it byte for byte.
Json verification_report_json(const RunConfig& config,
                              const std::vector<VerificationReport>& reports);

}  // namespace ck
