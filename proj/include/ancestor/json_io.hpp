#pragma once

#include <json.hpp>

#include "ancestor/closure.hpp"
#include "ancestor/hfcomb.hpp"
#include "ancestor/related.hpp"
#include "ancestor/waring.hpp"

namespace anc::io {

using Json = nlohmann::ordered_json;

Json toJson(const BinaryForm& f);
Json toJson(const FormSpace& v);
Json toJson(const GradedIdeal& ideal);
Json toJson(const Partition& p);
Json toJson(const StratumReport& report);
Json toJson(const BuildTrace& trace);
Json toJson(const Gad& decomposition, int tauDeltaValue, int muValue);
Json toJson(const RelatedClass& cls);
Json toJson(const HasseDiagram& diagram);

BinaryForm formFromJson(const Json& j, const Field& field);
/// Reads the field from the document; the basis is brought to reduced row echelon form.
FormSpace spaceFromJson(const Json& j);
GradedIdeal idealFromJson(const Json& j);

}  // namespace anc::io
