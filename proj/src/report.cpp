#include "zflab/report.hpp"

#include <fstream>
#include <sstream>

namespace zflab {

Json relation_to_json(const Relation& r) {
  Json pairs = Json::array();
  for (const auto& p : r.pairs().members()) {
    const auto v = unpair(p);
    pairs.push_back({v.first.to_string(), v.second.to_string()});
  }
  return Json{{"carrier", r.carrier().to_string()}, {"pairs", pairs}};
}

Relation relation_from_json(const Json& j) {
  try {
    std::vector<HfSet> pairs;
    for (const auto& p : j.at("pairs")) {
      pairs.push_back(ordered_pair(parse_hfs(p.at(0).get<std::string>()),
                                   parse_hfs(p.at(1).get<std::string>())));
    }
    return Relation::over(parse_hfs(j.at("carrier").get<std::string>()), make_set(std::move(pairs)));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed relation record: ") + e.what(), 0);
  }
}

namespace {

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json pipeline_to_json(const PipelineReport& r) {
  return Json{
      {"variant", std::string(to_string(r.variant))},
      {"kind", std::string(to_string(r.kind))},
      {"family", r.family},
      {"has_empty_member", r.has_empty_member},
      {"a_u_size", r.a_u_size},
      {"u1_size", optional_json(r.u1_size)},
      {"u2_base_size", optional_json(r.u2_base_size)},
      {"q_s_size", r.q_s_size},
      {"f_c_size", r.f_c_size},
      {"q_s_empty", r.q_s_empty},
      {"f_c_all_valid", r.f_c_all_valid},
      {"q_s_filter_agrees", optional_json(r.q_s_filter_agrees)},
      {"f_c_routes_agree", optional_json(r.f_c_routes_agree)},
      {"f_c_verbatim_size", optional_json(r.f_c_verbatim_size)},
      {"capped_steps", r.capped_steps},
      {"witnesses", r.witnesses},
  };
}

Json verdict_to_json(const oracle::EquivalenceVerdict& v) {
  return Json{{"fingerprint", v.fingerprint},
              {"has_choice", v.has_choice},
              {"all_members_have_pol", v.all_members_have_pol},
              {"agree", v.agree}};
}

LoadedFamily parse_family_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("family file is not JSON: ") + e.what(), e.byte);
  }
  if (!j.is_object() || !j.contains("family") || !j["family"].is_array()) {
    throw ParseError("family file needs a \"family\" array", 0);
  }
  std::vector<HfSet> members;
  for (const auto& m : j["family"]) {
    if (!m.is_string()) throw ParseError("family members must be set literals", 0);
    members.push_back(parse_hfs(m.get<std::string>()));
  }
  LoadedFamily out{Family(make_set(std::move(members))), {}};
  if (out.family.has_empty_member()) out.warnings.push_back("family has an empty member");
  return out;
}

LoadedFamily load_family(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_family_json(buf.str());
}

namespace {

void flatten(const Json& j, const std::string& prefix, std::string& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && !j.empty()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out += prefix + ": " + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
  }
}

}  // namespace

std::string render_text(const Json& j) {
  std::string out;
  flatten(j, "", out);
  return out;
}

}  // namespace zflab
