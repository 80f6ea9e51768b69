#pragma once

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "hopftwist/group.hpp"
#include "hopftwist/hopf.hpp"
#include "hopftwist/repcat.hpp"
#include "hopftwist/report.hpp"

// JSON codecs for every on-disk schema. Scalars are {"n": N, "c": ["p/q", ...]}
// with phi(N) rational strings in lowest terms; all emitted documents are
// deterministic (sorted sparse indices, insertion-ordered keys).
namespace hopftwist::io {

using json = nlohmann::ordered_json;

json scalarToJson(const Cyc& v);
Cyc scalarFromJson(const json& j, const std::string& where);

json groupToJson(const Group& g);
Group groupFromJson(const json& j);

json hopfToJson(const HopfAlgebra& h);
HopfAlgebra hopfFromJson(const json& j, long conductorOverride = 0);

/// Element file; a nonempty host string adds the twist-file "host" reference.
json elementToJson(const Element& e, const std::string& host = "");
Element elementFromJson(const json& j, long conductorOverride = 0);

json moduleToJson(const Module& m);
/// Returns (host dimension, dense action matrices); verification happens in
/// moduleFromAction against a concrete algebra.
std::pair<Index, std::vector<Mat>> moduleFromJson(const json& j, long conductorOverride = 0);

json charTableToJson(const std::vector<Vec>& rows, const std::string& groupRef);
std::pair<std::string, std::vector<Vec>> charTableFromJson(const json& j,
                                                           long conductorOverride = 0);

struct BicharSpec {
  std::vector<int> subgroup;
  Mat beta;
};
BicharSpec bicharFromJson(const json& j, long conductorOverride = 0);

json reportToJson(const Report& r);

json loadFile(const std::string& path);
void saveFile(const std::string& path, const json& j);
std::string dump(const json& j);

}  // namespace hopftwist::io
