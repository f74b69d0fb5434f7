#pragma once

#include <json.hpp>

#include "spinflux/forms.hpp"
#include "spinflux/linalg.hpp"

namespace spinflux {

using Json = nlohmann::ordered_json;

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

Json matrix_to_json(const Matrix& m, const std::vector<std::string>& variables = {});
Matrix matrix_from_json(const Json& j);

Json space_to_json(const AffineSolutionSpace& space);
AffineSolutionSpace space_from_json(const Json& j);

Json form_to_json(const ExteriorForm& w);
ExteriorForm form_from_json(const Json& j);

}  // namespace spinflux

#include "spinflux/killing.hpp"

namespace spinflux {

/// Assembled system with right-hand side and per-row provenance
/// (frame direction and spinor slot).
Json killing_system_to_json(const KillingSystem& sys);

/// Generator matrices as plain integer matrices, for audit.
Json generators_to_json(const CliffordRep& rep);

}  // namespace spinflux
