#pragma once

// JSON encodings of every result type, plus CSV and plain renderers over those encodings.
// Big integers and exact rationals are always decimal strings.

#include <kostant/asymptotics.hpp>
#include <kostant/cells.hpp>
#include <kostant/census.hpp>
#include <kostant/montecarlo.hpp>
#include <kostant/patterns.hpp>
#include <kostant/permutation.hpp>
#include <kostant/sequences.hpp>

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace kostant {

using Json = nlohmann::ordered_json;

inline Json to_json(const Occurrence& occ) {
  return Json{{"start", occ.start}, {"kind", std::string(to_string(occ.kind))}, {"witness", occ.witness}};
}

inline Json to_json(const StandardTableau& t) { return Json(t.rows()); }

inline Json to_json(const KostantVerdict& v) {
  Json j{{"tag", v.negative() ? "negative" : "no-certificate"}};
  if (v.witness) j["witness"] = Json{{"member", to_string(v.witness->member)}, {"occurrence", to_json(v.witness->occurrence)}};
  return j;
}

inline Json to_json(const CountParams& p) {
  Json j = Json::object();
  if (!p.blocks.empty()) j["blocks"] = p.blocks;
  if (p.k) j["k"] = *p.k;
  if (p.case_id) j["case"] = *p.case_id;
  return j;
}

inline Json to_json(const ExactCount& c) {
  return Json{{"kind", std::string(to_string(c.kind))}, {"n", c.n}, {"params", to_json(c.params)}, {"value", to_decimal(c.value)}};
}

inline Json to_json(const CaseReport& r) {
  Json list = Json::array();
  for (const auto& w : r.violator_list) list.push_back(to_string(w));
  return Json{{"case", r.case_id}, {"intersection", r.intersection}, {"total", r.total}, {"violators", r.violators}, {"violator_list", list}};
}

inline Json to_json(const QStats& s) {
  Json events = Json::array();
  for (const auto& p : s.p_event) events.push_back(to_decimal(p));
  Json conditional = Json::array();
  for (const auto& per_block : s.conditional()) {
    Json m = Json::object();
    for (const auto& [c, p] : per_block) m[std::to_string(c)] = to_decimal(p);
    conditional.push_back(m);
  }
  Json profiles = Json::array();
  for (const auto& p : s.profiles) {
    profiles.push_back(Json{{"intersections", p.intersections}, {"count", p.count}, {"avoiders", p.avoiders}, {"joint_avoiders", p.joint_avoiders}});
  }
  return Json{{"n", s.n},
              {"k", s.k},
              {"involutions", to_decimal(s.involutions)},
              {"q_size", to_decimal(s.q_size)},
              {"p_event", events},
              {"p_joint", to_decimal(s.p_joint)},
              {"product_of_events", to_decimal(s.product_of_events())},
              {"independent", s.independent()},
              {"conditionally_independent", s.conditionally_independent()},
              {"conditional", conditional},
              {"profiles", profiles}};
}

inline Json to_json(const Estimate& e) {
  Json j{{"quantity", std::string(to_string(e.quantity))}, {"n", e.n}};
  if (e.k) j["k"] = *e.k;
  j["trials"] = e.trials;
  j["seed"] = e.seed;
  j["workers"] = e.workers;
  j["successes"] = e.successes;
  j["p_hat"] = e.p_hat;
  j["ci95"] = Json{{"low", e.ci95.low}, {"high", e.ci95.high}};
  return j;
}

inline Json to_json(const SequenceTable& t) {
  Json rows = Json::array();
  for (std::size_t n = 0; n < t.values.size(); ++n) rows.push_back(Json{{"n", n}, {"value", to_decimal(t.values[n])}});
  return Json{{"name", t.name == SequenceName::Involutions ? "inv" : "motzkin"}, {"rows", rows}};
}

inline Json to_json(const std::vector<AsymptoticsRow>& table) {
  Json rows = Json::array();
  for (const auto& r : table) {
    rows.push_back(Json{{"n", r.n},
                        {"i_n", to_decimal(r.involutions)},
                        {"M_n", to_decimal(r.motzkin)},
                        {"r(n)", r.ratio},
                        {"lemma6_bound", r.lemma6 ? Json(*r.lemma6) : Json(nullptr)}});
  }
  Json j{{"rows", rows}};
  if (!table.empty()) j["empirical_limit"] = table.back().ratio;
  return j;
}

// ---------------------------------------------------------------------------
// Rendering.

namespace detail {

inline std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline void flatten(const Json& v, const std::string& path, std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object()) {
    if (v.empty()) out.emplace_back(path, "");
    for (auto it = v.begin(); it != v.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
  } else if (v.is_array()) {
    if (v.empty()) out.emplace_back(path, "");
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "." + std::to_string(i), out);
  } else {
    out.emplace_back(path, scalar_text(v));
  }
}

inline bool is_row_table(const Json& j) {
  return j.is_object() && j.contains("rows") && j["rows"].is_array() && !j["rows"].empty() && j["rows"][0].is_object();
}

}  // namespace detail

inline std::string render_json(const Json& j) { return j.dump(2) + "\n"; }

/// Row tables become one CSV row per entry with a header; anything else becomes key,value lines.
inline std::string render_csv(const Json& j) {
  std::ostringstream out;
  if (detail::is_row_table(j)) {
    const auto& rows = j["rows"];
    bool first = true;
    for (auto it = rows[0].begin(); it != rows[0].end(); ++it) {
      out << (first ? "" : ",") << detail::csv_field(it.key());
      first = false;
    }
    out << "\n";
    for (const auto& row : rows) {
      first = true;
      for (auto it = row.begin(); it != row.end(); ++it) {
        out << (first ? "" : ",") << detail::csv_field(detail::scalar_text(it.value()));
        first = false;
      }
      out << "\n";
    }
    return out.str();
  }
  std::vector<std::pair<std::string, std::string>> flat;
  detail::flatten(j, "", flat);
  out << "key,value\n";
  for (const auto& [k, v] : flat) out << detail::csv_field(k) << "," << detail::csv_field(v) << "\n";
  return out.str();
}

inline std::string render_plain(const Json& j) {
  std::ostringstream out;
  if (detail::is_row_table(j)) {
    const auto& rows = j["rows"];
    std::vector<std::string> keys;
    for (auto it = rows[0].begin(); it != rows[0].end(); ++it) keys.push_back(it.key());
    std::vector<std::size_t> width(keys.size());
    for (std::size_t c = 0; c < keys.size(); ++c) width[c] = keys[c].size();
    for (const auto& row : rows) {
      for (std::size_t c = 0; c < keys.size(); ++c) width[c] = std::max(width[c], detail::scalar_text(row[keys[c]]).size());
    }
    auto line = [&](auto&& cell) {
      for (std::size_t c = 0; c < keys.size(); ++c) {
        const std::string text = cell(c);
        out << (c ? "  " : "") << std::string(width[c] - text.size(), ' ') << text;
      }
      out << "\n";
    };
    line([&](std::size_t c) { return keys[c]; });
    for (const auto& row : rows) line([&](std::size_t c) { return detail::scalar_text(row[keys[c]]); });
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.key() != "rows") out << it.key() << ": " << detail::scalar_text(it.value()) << "\n";
    }
    return out.str();
  }
  std::vector<std::pair<std::string, std::string>> flat;
  detail::flatten(j, "", flat);
  std::size_t w = 0;
  for (const auto& kv : flat) w = std::max(w, kv.first.size());
  for (const auto& [k, v] : flat) out << k << std::string(w - k.size(), ' ') << "  " << v << "\n";
  return out.str();
}

}  // namespace kostant
