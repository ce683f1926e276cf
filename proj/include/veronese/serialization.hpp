#pragma once

#include "veronese/characters.hpp"
#include "veronese/constructions.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace veronese {

using Json = nlohmann::ordered_json;

Json to_json(const Partition& lambda);
/// {"n", "degree", "terms": [{"lambda": [...], "mult": "<decimal>"}], "N", "c"}
Json to_json(const SchurExpansion& e);
Json to_json(const RatioTable& t);
Json to_json(const PatternReport& r);
Json to_json(const CheckReport& r);

/// RFC 4180 field quoting: quoted when the field holds a comma, quote or line break.
std::string csv_field(const std::string& s);
std::string csv_row(const std::vector<std::string>& fields);

/// "term,lambda,mult" rows followed by "N" and "c" summary rows.
std::string expansion_csv(const SchurExpansion& e);
/// One "(3,1) : 1" line per term, then "N = .. c = ..".
std::string expansion_pretty(const SchurExpansion& e);

}  // namespace veronese
