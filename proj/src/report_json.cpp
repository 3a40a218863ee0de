#include "ekr/report_json.hpp"

#include <algorithm>
#include <sstream>

namespace ekr {

Json family_to_json(const SetFamily& f) {
  Json arr = Json::array();
  for (VertexSet s : f) arr.push_back(s.hex());
  return arr;
}

Json report_to_json(const EkrReport& rep, bool timing) {
  Json j;
  j["r"] = rep.r;
  j["star_size"] = rep.star_size;
  j["star_center_label"] = rep.star_center ? Json(rep.star_center_label) : Json(nullptr);
  j["max_family_size"] = rep.max_family_size;
  j["is_ekr"] = rep.is_ekr ? Json(*rep.is_ekr) : Json(nullptr);
  j["is_strict"] = rep.is_strict ? Json(*rep.is_strict) : Json(nullptr);
  j["witness"] = family_to_json(rep.witness);
  j["nodes"] = rep.nodes;
  if (timing) j["millis"] = rep.millis;
  j["exact"] = rep.exact;
  j["certificate"] = rep.certificate;
  return j;
}

Json scan_to_json(const ScanResult& res, std::size_t unexpected, bool timing) {
  Json j;
  j["scan"] = res.scan;
  j["space"] = res.space;
  j["checked"] = res.checked;
  j["skipped"] = res.skipped;
  j["skipped_instances"] = res.skipped_specs;
  j["violation_count"] = res.violations.size();
  j["unexpected"] = unexpected;
  Json vs = Json::array();
  for (const auto& v : res.violations) {
    Json o;
    o["spec"] = v.spec;
    o["r"] = v.r;
    for (const auto& [k, val] : v.details) o[k] = val;
    o["note"] = v.note;
    vs.push_back(std::move(o));
  }
  j["violations"] = std::move(vs);
  if (timing) j["millis"] = res.millis;
  return j;
}

Json with_spec(const std::string& spec, const Json& body) {
  Json j;
  j["spec"] = spec;
  for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
  return j;
}

namespace {

std::string scalar(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void render_rows(std::ostringstream& out, const Json& rows) {
  std::vector<std::string> cols;
  for (const auto& row : rows)
    for (auto it = row.begin(); it != row.end(); ++it)
      if (std::find(cols.begin(), cols.end(), it.key()) == cols.end()) cols.push_back(it.key());
  std::vector<std::size_t> width(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    width[c] = cols[c].size();
    for (const auto& row : rows)
      if (row.contains(cols[c])) width[c] = std::max(width[c], scalar(row[cols[c]]).size());
  }
  auto line = [&](auto cell) {
    out << " ";
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const std::string s = cell(c);
      out << " " << s << std::string(width[c] - s.size(), ' ');
    }
    out << "\n";
  };
  line([&](std::size_t c) { return cols[c]; });
  for (const auto& row : rows) line([&](std::size_t c) { return row.contains(cols[c]) ? scalar(row[cols[c]]) : std::string(); });
}

}  // namespace

std::string render_table(const Json& j) {
  std::ostringstream out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    if (v.is_array() && !v.empty() && v.front().is_object()) {
      out << it.key() << ":\n";
      render_rows(out, v);
    } else if (v.is_array()) {
      out << it.key() << ":";
      for (const auto& e : v) out << " " << scalar(e);
      out << "\n";
    } else {
      out << it.key() << ": " << scalar(v) << "\n";
    }
  }
  return out.str();
}

}  // namespace ekr
