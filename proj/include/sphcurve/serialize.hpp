#pragma once

// JSON and CSV views of the core types. Words serialize as arrays of signed
// integers; invariant rows keep one fixed column order so emitted tables are
// byte-stable.

#include <string>
#include <vector>

#include <json.hpp>

#include "sphcurve/corpus.hpp"
#include "sphcurve/embedding.hpp"
#include "sphcurve/invariants.hpp"
#include "sphcurve/moves.hpp"
#include "sphcurve/word.hpp"

namespace sphcurve {

using json = nlohmann::json;

inline json word_to_json(const Word& w) {
  json arr = json::array();
  for (const Token& t : w.tokens()) arr.push_back(t.role == Role::head ? t.chord : -t.chord);
  return arr;
}

inline Word word_from_json(const json& arr) {
  std::vector<Token> toks;
  for (const auto& v : arr) {
    const int value = v.get<int>();
    if (value == 0) throw ParseError("zero is not a valid token");
    toks.push_back(Token{value > 0 ? value : -value, value > 0 ? Role::head : Role::tail});
  }
  return Word(std::move(toks));
}

inline const std::vector<std::string>& invariant_columns() {
  static const std::vector<std::string> cols = {"name",  "n",      "u",      "b",
                                                "lr",    "x",      "s",      "kappa",
                                                "inv_s3", "inv_s2", "inv_w3", "mu"};
  return cols;
}

inline json invariants_to_json(const InvariantVector& v, const std::string& name,
                               bool debug = false) {
  json j = {{"name", name},     {"n", v.n},           {"u", v.u},
            {"b", v.b},         {"lr", v.lr},         {"x", v.x},
            {"s", v.s},         {"kappa", v.kappa},   {"inv_s3", v.inv_s3},
            {"inv_s2", v.inv_s2}, {"inv_w3", v.inv_w3}, {"mu", v.mu},
            {"realizable", v.realizable}};
  if (debug) {
    j["l"] = v.l;
    j["r"] = v.r;
  }
  return j;
}

inline std::string csv_header(bool debug = false) {
  std::string line;
  for (const std::string& c : invariant_columns()) {
    if (!line.empty()) line += ',';
    line += c;
  }
  if (debug) line += ",l,r";
  return line;
}

inline std::string csv_row(const InvariantVector& v, const std::string& name,
                           bool debug = false) {
  std::string line = name;
  const auto add = [&line](long value) { line += ',' + std::to_string(value); };
  add(v.n);
  add(v.u);
  add(v.b);
  add(v.lr);
  add(v.x);
  add(v.s);
  add(v.kappa);
  add(v.inv_s3);
  add(v.inv_s2);
  add(v.inv_w3);
  add(v.mu);
  if (debug) {
    add(v.l);
    add(v.r);
  }
  return line;
}

inline json face_to_json(const Face& f) {
  json arcs = json::array();
  for (int a : f.arcs) arcs.push_back(a);
  json forward = json::array();
  for (bool b : f.with_curve) forward.push_back(b);
  json corners = json::array();
  for (int c : f.corners) corners.push_back(c);
  return {{"arcs", arcs},
          {"degree", f.degree()},
          {"coherent", f.coherent()},
          {"with_curve", forward},
          {"corners", corners}};
}

inline json move_to_json(const MoveInstance& m) {
  return {{"kind", kind_name(m.kind)},
          {"label", m.label},
          {"site", m.site},
          {"result", m.result.str()},
          {"result_tokens", word_to_json(m.result)}};
}

inline json class_to_json(const CurveClass& c) {
  json j = invariants_to_json(c.inv, c.name);
  j["word"] = c.key.str();
  j["tokens"] = word_to_json(c.key);
  j["prime"] = c.prime;
  j["reduced"] = c.reduced;
  j["name_certain"] = c.name_certain;
  return j;
}

inline json search_to_json(const SearchResult& r) {
  json j;
  switch (r.status) {
    case SearchStatus::found: j["status"] = "found"; break;
    case SearchStatus::separated: j["status"] = "impossible"; break;
    case SearchStatus::exhausted: j["status"] = "exhausted"; break;
  }
  if (r.status == SearchStatus::found) {
    json steps = json::array();
    for (const SearchStep& s : r.path)
      steps.push_back({{"move", s.label}, {"word", s.word.str()}});
    j["steps"] = steps;
    j["length"] = r.path.size();
  } else if (r.status == SearchStatus::separated) {
    j["certificate"] = {{"invariant", r.separating_invariant},
                        {"source_value", r.source_value},
                        {"target_value", r.target_value}};
  } else {
    j["explored"] = r.explored;
    j["frontier_exhausted"] = r.frontier_exhausted;
  }
  return j;
}

inline json error_to_json(const std::string& type, const std::string& message) {
  return {{"error", {{"type", type}, {"message", message}}}};
}

}  // namespace sphcurve
