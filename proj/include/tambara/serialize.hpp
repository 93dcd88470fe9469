#pragma once

#include "tambara/spectra.hpp"

#include <json.hpp>
#include <string>

namespace tambara {

using Json = nlohmann::ordered_json;

Json to_json(const TransferSystem& ts);
Json to_json(const CompatiblePair& pr);
Json to_json(const Algebra& a);
Json to_json(const Submodule& s);
Json to_json(const TambaraIdeal& I);
// levels, algebras, visible pair; maps are summarized by their edges
Json to_json(const LewisDiagram& T);
Json to_json(const SpectrumTable& t);

// families as nodes, inclusions as edges drawn bottom to top
std::string to_dot(const SpectrumTable& t);

} // namespace tambara
