#pragma once

#include "weylforge/dixmier.hpp"
#include "weylforge/matrixalg.hpp"
#include "weylforge/morphism.hpp"
#include "weylforge/systems.hpp"

#include <json.hpp>

namespace weylforge {

using Json = nlohmann::ordered_json;

Json to_json(const NCPoly& f);
Json to_json(const NCMatrix& m);
Json to_json(const UnknownCatalog& catalog, const EqSystem& sys);
Json to_json(const SolveResult& result);
Json to_json(const IdentityBattery& battery);
Json to_json(const SkewLinearSystem& sys);
Json to_json(const Endomorphism& e);

}  // namespace weylforge
