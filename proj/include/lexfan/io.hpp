#pragma once

#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "lexfan/admissible.hpp"
#include "lexfan/fiber_report.hpp"
#include "lexfan/models.hpp"

namespace lexfan::io {

using json = nlohmann::ordered_json;

namespace detail {

inline std::string at(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
inline std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

inline const json& field(const json& j, const std::string& path, const std::string& key) {
  if (!j.is_object()) throw ParseError(path.empty() ? "(document)" : path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(at(path, key), "missing field");
  return *it;
}

inline const json& array(const json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected an array");
  return j;
}

inline std::size_t count(const json& j, const std::string& path, std::size_t min) {
  if (!j.is_number_integer()) throw ParseError(path, "expected an integer");
  const auto v = j.get<std::int64_t>();
  if (v < static_cast<std::int64_t>(min)) throw ParseError(path, "must be at least " + std::to_string(min));
  return static_cast<std::size_t>(v);
}

}  // namespace detail

inline Rational read_rational(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_number_float()) throw ParseError(path, "floating-point value; write rationals as \"p/q\"");
  if (!j.is_string()) throw ParseError(path, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(path, e.what());
  }
}

inline LexVec read_lexvec(const json& j, const std::string& path, std::optional<std::size_t> k = std::nullopt) {
  detail::array(j, path);
  if (k && j.size() != *k)
    throw DimensionMismatch(path + ": expected " + std::to_string(*k) + " entries, got " + std::to_string(j.size()));
  if (j.empty()) throw ParseError(path, "empty value vector");
  std::vector<Rational> xs;
  for (std::size_t i = 0; i < j.size(); ++i) xs.push_back(read_rational(j[i], detail::at(path, i)));
  return LexVec(std::move(xs));
}

inline LatticeVec read_lattice(const json& j, const std::string& path, std::optional<std::size_t> n = std::nullopt) {
  detail::array(j, path);
  if (n && j.size() != *n)
    throw DimensionMismatch(path + ": expected " + std::to_string(*n) + " entries, got " + std::to_string(j.size()));
  LatticeVec u;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) throw ParseError(detail::at(path, i), "expected an integer");
    u.push_back(j[i].get<std::int64_t>());
  }
  return u;
}

inline Halfspace read_halfspace(const json& j, const std::string& path, std::size_t n, std::size_t k) {
  return {read_lattice(detail::field(j, path, "u"), detail::at(path, "u"), n),
          read_lexvec(detail::field(j, path, "gamma"), detail::at(path, "gamma"), k)};
}

inline std::vector<Halfspace> read_halfspaces(const json& j, const std::string& path, std::size_t n, std::size_t k) {
  detail::array(j, path);
  std::vector<Halfspace> hs;
  for (std::size_t i = 0; i < j.size(); ++i) hs.push_back(read_halfspace(j[i], detail::at(path, i), n, k));
  return hs;
}

inline std::pair<std::size_t, std::size_t> read_shape(const json& j) {
  return {detail::count(detail::field(j, "", "n"), "n", 0), detail::count(detail::field(j, "", "k"), "k", 1)};
}

inline Point read_point(const json& j, const std::string& path, std::size_t n, std::size_t k) {
  detail::array(j, path);
  if (j.size() != n)
    throw DimensionMismatch(path + ": expected " + std::to_string(n) + " rows, got " + std::to_string(j.size()));
  std::vector<LexVec> rows;
  for (std::size_t i = 0; i < n; ++i) rows.push_back(read_lexvec(j[i], detail::at(path, i), k));
  return Point(std::move(rows), k);
}

inline Polyhedron read_polyhedron(const json& j) {
  const auto [n, k] = read_shape(j);
  return Polyhedron(n, k, read_halfspaces(detail::field(j, "", "halfspaces"), "halfspaces", n, k));
}

struct ComplexDoc {
  PolyComplex complex;
  std::optional<std::vector<std::pair<std::size_t, std::size_t>>> expected_incidences;
};

struct FanDoc {
  AdmissibleFan fan;
  std::optional<std::vector<PolyComplex>> expected_rec;  // one complex per level
};

inline std::vector<Polyhedron> read_cells(const json& j, const std::string& path, std::size_t n, std::size_t k) {
  detail::array(j, path);
  std::vector<Polyhedron> cells;
  for (std::size_t i = 0; i < j.size(); ++i) cells.emplace_back(n, k, read_halfspaces(j[i], detail::at(path, i), n, k));
  return cells;
}

inline ComplexDoc read_complex(const json& j) {
  const auto [n, k] = read_shape(j);
  ComplexDoc doc{PolyComplex(n, k, read_cells(detail::field(j, "", "cells"), "cells", n, k)), std::nullopt};
  if (auto it = j.find("expected_incidences"); it != j.end()) {
    detail::array(*it, "expected_incidences");
    doc.expected_incidences.emplace();
    for (std::size_t i = 0; i < it->size(); ++i) {
      const auto p = detail::at("expected_incidences", i);
      const auto pair = read_lattice((*it)[i], p, 2);
      for (std::size_t e = 0; e < 2; ++e)
        if (pair[e] < 0 || static_cast<std::size_t>(pair[e]) >= doc.complex.size())
          throw ParseError(detail::at(p, e), "cell index out of range");
      doc.expected_incidences->emplace_back(pair[0], pair[1]);
    }
  }
  return doc;
}

inline FanDoc read_fan(const json& j) {
  const auto [n, k] = read_shape(j);
  const auto& cj = detail::array(detail::field(j, "", "cones"), "cones");
  std::vector<AdmissibleCone> cones;
  for (std::size_t i = 0; i < cj.size(); ++i)
    cones.emplace_back(n, k, read_halfspaces(cj[i], detail::at("cones", i), n, k));
  FanDoc doc{AdmissibleFan(n, k, std::move(cones)), std::nullopt};
  if (auto it = j.find("expected_rec"); it != j.end()) {
    detail::array(*it, "expected_rec");
    if (it->size() != k + 1)
      throw DimensionMismatch("expected_rec: expected " + std::to_string(k + 1) + " levels, got " +
                              std::to_string(it->size()));
    doc.expected_rec.emplace();
    for (std::size_t i = 0; i < it->size(); ++i)
      doc.expected_rec->emplace_back(n, k, read_cells((*it)[i], detail::at("expected_rec", i), n, k));
  }
  return doc;
}

inline ValuedMonomial read_monomial(const json& j, const std::string& path, std::optional<std::size_t> n,
                                    std::optional<std::size_t> k) {
  return {read_lattice(detail::field(j, path, "u"), detail::at(path, "u"), n),
          read_lexvec(detail::field(j, path, "val"), detail::at(path, "val"), k)};
}

/// {"terms": [{"u": [...], "val": [...]}]}; shapes are checked against n and k when given.
inline FormalLaurent read_laurent(const json& j, std::optional<std::size_t> n = std::nullopt,
                                  std::optional<std::size_t> k = std::nullopt) {
  const auto& tj = detail::array(detail::field(j, "", "terms"), "terms");
  std::vector<ValuedMonomial> terms;
  for (std::size_t i = 0; i < tj.size(); ++i) {
    terms.push_back(read_monomial(tj[i], detail::at("terms", i), n, k));
    n = terms.back().u.size();
    k = terms.back().val.k();
  }
  try {
    return FormalLaurent(std::move(terms));
  } catch (const InvalidArgument& e) {
    throw ParseError("terms", e.what());
  }
}

using Document = std::variant<Polyhedron, ComplexDoc, FanDoc>;

/// Kind is told apart by the key holding the data: "halfspaces", "cells" or "cones".
inline Document read_document(const json& j) {
  if (!j.is_object()) throw ParseError("(document)", "expected an object");
  const bool h = j.contains("halfspaces"), c = j.contains("cells"), f = j.contains("cones");
  if (h + c + f != 1) throw ParseError("(document)", "expected exactly one of \"halfspaces\", \"cells\", \"cones\"");
  if (h) return read_polyhedron(j);
  if (c) return read_complex(j);
  return read_fan(j);
}

/// Parses JSON text; syntax errors are reported as "source:line:column".
inline json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    if (auto pos = msg.find("syntax error"); pos != std::string::npos) msg = msg.substr(pos);
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col), msg);
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json load_json(const std::string& path) { return parse_json(read_file(path), path); }

// Writers. Every rational is emitted as "p/q".

inline json to_json(const LexVec& g) {
  json a = json::array();
  for (const auto& x : g.entries()) a.push_back(format_rational(x));
  return a;
}

inline json to_json(const LatticeVec& u) {
  json a = json::array();
  for (auto x : u) a.push_back(x);
  return a;
}

inline json to_json(const Point& p) {
  json a = json::array();
  for (const auto& r : p.rows()) a.push_back(to_json(r));
  return a;
}

inline json to_json(const Halfspace& h) { return json{{"u", to_json(h.u)}, {"gamma", to_json(h.gamma)}}; }

inline json to_json(const std::vector<Halfspace>& hs) {
  json a = json::array();
  for (const auto& h : hs) a.push_back(to_json(h));
  return a;
}

inline json to_json(const Polyhedron& p) {
  return json{{"n", p.n()}, {"k", p.k()}, {"halfspaces", to_json(p.halfspaces())}};
}

inline json cells_json(const PolyComplex& c) {
  json a = json::array();
  for (const auto& p : c.cells()) a.push_back(to_json(p.halfspaces()));
  return a;
}

inline json to_json(const PolyComplex& c) { return json{{"n", c.n()}, {"k", c.k()}, {"cells", cells_json(c)}}; }

inline json to_json(const AdmissibleFan& f) {
  json cones = json::array();
  for (const auto& c : f.cones()) cones.push_back(to_json(c.constraints()));
  return json{{"n", f.n()}, {"k", f.k()}, {"cones", cones}};
}

inline json to_json(const ValuedMonomial& m) { return json{{"u", to_json(m.u)}, {"val", to_json(m.val)}}; }

inline json to_json(const FormalLaurent& f) {
  json terms = json::array();
  for (const auto& t : f.terms()) terms.push_back(to_json(t));
  return json{{"terms", terms}};
}

inline json to_json(const RationalCone& c) {
  json rays = json::array();
  for (const auto& r : c.rays()) rays.push_back(to_json(r));
  return json{{"rays", rays}, {"dim", c.dim()}};
}

inline json to_json(const RationalFan& f) {
  json cones = json::array();
  for (const auto& c : f.cones()) cones.push_back(to_json(c));
  return json{{"n", f.n()}, {"cones", cones}};
}

inline json to_json(const StarData& s) {
  json maximal = json::array();
  for (std::size_t i = 0; i < s.maximal.size(); ++i) {
    json hb = json::array();
    for (const auto& u : s.hilbert[i]) hb.push_back(to_json(u));
    maximal.push_back(json{{"rays", to_json(s.maximal[i])["rays"]}, {"hilbert_basis", hb}});
  }
  return json{{"vertex", to_json(s.vertex)}, {"fan", to_json(s.fan)}, {"maximal_cones", maximal}, {"complete", s.complete}};
}

inline json to_json(const LevelReport& r) {
  json verts = json::array(), stars = json::array(), adj = json::array();
  for (const auto& v : r.vertices) verts.push_back(to_json(v));
  for (const auto& s : r.stars) stars.push_back(to_json(s));
  for (const auto& [a, b] : r.adjacency) adj.push_back(json::array({a, b}));
  json out{{"level", r.level},       {"components", r.components()}, {"vertices", verts},
           {"cells", cells_json(r.complex)}, {"stars", stars},                {"adjacency", adj}};
  if (r.fan) out["fan"] = to_json(*r.fan);
  if (r.complete) out["complete"] = *r.complete;
  return out;
}

inline json to_json(const FiberReport& rep) {
  json levels = json::array(), counts = json::array();
  for (const auto& l : rep.levels) {
    levels.push_back(to_json(l));
    counts.push_back(l.components());
  }
  return json{{"n", rep.n}, {"k", rep.k}, {"component_counts", counts}, {"levels", levels}};
}

}  // namespace lexfan::io
