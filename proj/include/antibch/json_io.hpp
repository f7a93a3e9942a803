#pragma once

#include <string>

#include <json.hpp>

#include "antibch/bch.hpp"
#include "antibch/cosets.hpp"
#include "antibch/distance.hpp"
#include "antibch/esp.hpp"

namespace antibch {

using Json = nlohmann::json;  // keys sorted, so dumps are deterministic

Json to_json(const Poly& f);
Json to_json(const CosetReport& r);
Json to_json(const BchCode& c);
Json to_json(const Witness& w);
Json to_json(const DistanceCertificate& c);
Json to_json(const BlockSet& b);
Json to_json(const ZetterbergCounts& z);

// One block per row, exponents ascending.
std::string blocks_csv(const BlockSet& b);

// Views derived from a JSON document: "path: value" lines, or
// "path,value" rows. Arrays of scalars are joined by spaces.
std::string render_table(const Json& j);
std::string render_csv(const Json& j);

}  // namespace antibch
