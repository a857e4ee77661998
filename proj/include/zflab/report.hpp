#pragma once

// JSON shapes of the report files and the family file format.

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "zflab/construction.hpp"
#include "zflab/oracle.hpp"
#include "zflab/orders.hpp"

namespace zflab {

using Json = nlohmann::ordered_json;

// { "carrier": "<hfs>", "pairs": [["<hfs>","<hfs>"], ...] }
Json relation_to_json(const Relation& r);
Relation relation_from_json(const Json& j);

// Flat record; the optional counts are null when a step was skipped.
Json pipeline_to_json(const PipelineReport& r);
Json verdict_to_json(const oracle::EquivalenceVerdict& v);

struct LoadedFamily {
  Family family;
  std::vector<std::string> warnings;
};

// { "family": ["<hfs>", ...] }. Duplicates merge. Throws ParseError or
// EmptyFamily; IoError when the file cannot be read.
LoadedFamily parse_family_json(const std::string& text);
LoadedFamily load_family(const std::filesystem::path& path);

// "key: value" lines with dotted paths, for --format text.
std::string render_text(const Json& j);

}  // namespace zflab
