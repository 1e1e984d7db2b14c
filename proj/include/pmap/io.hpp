#pragma once

#include <string>

#include <json.hpp>

#include "pmap/degree.hpp"
#include "pmap/forest.hpp"
#include "pmap/map.hpp"
#include "pmap/sampler.hpp"
#include "pmap/stats.hpp"

namespace pmap {

using Json = nlohmann::json;

// All serializers use integer JSON values and nlohmann's sorted-key objects,
// so output bytes are stable across runs.

Json to_json(const DegreeSequence& ds);
DegreeSequence degree_sequence_from_json(const Json& j);

Json to_json(const FaceDegreeSequence& fds);
FaceDegreeSequence face_sequence_from_json(const Json& j);

Json to_json(const Forest& f);
Forest forest_from_json(const Json& j);

Json to_json(const LabelledForest& lf);
LabelledForest labelled_forest_from_json(const Json& j);

Json to_json(const LukasiewiczPath& w);

Json to_json(const PlanarMap& m);
PlanarMap map_from_json(const Json& j);

Json to_json(const TailCheckReport& rep);
std::string to_csv(const TailCheckReport& rep);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace pmap
