#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lexfan/io.hpp"
#include "lexfan/svg.hpp"

namespace lexfan::cli {

enum class Format { Text, Machine };

struct JobSpec {
  std::string command;
  std::string input;
  std::optional<std::size_t> level;
  std::optional<std::string> vertex;  // "0,1" per row, rows separated by ';'
  std::optional<std::string> u;       // "1,0"
  std::optional<std::string> val;     // "0,1"
  std::optional<std::string> terms;   // path of a FormalLaurent document
  std::optional<std::string> output;
  Format format = Format::Text;
};

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"validate", "recession", "vertices", "faces",     "star", "fiber-report",
                                              "weight",   "member",    "generators", "cone-over", "plot"};
  return names;
}

/// Bad command line: unknown command, missing or inconsistent options. Exit status 2.
class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(what) {}
};

namespace detail {

using io::json;

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

inline LatticeVec parse_lattice_arg(const std::string& s, const std::string& flag, std::size_t n) {
  LatticeVec u;
  for (const auto& part : split(s, ',')) {
    Rational q;
    try {
      q = parse_rational(part);
    } catch (const ParseError& e) {
      throw ParseError(flag, e.what());
    }
    if (q.get_den() != 1) throw ParseError(flag, "expected integers, got '" + part + "'");
    u.push_back(to_int64(q.get_num()));
  }
  if (u.size() != n) throw DimensionMismatch(flag + ": expected " + std::to_string(n) + " entries, got " + std::to_string(u.size()));
  return u;
}

inline LexVec parse_lexvec_arg(const std::string& s, const std::string& flag, std::size_t k) {
  std::vector<Rational> xs;
  for (const auto& part : split(s, ',')) {
    try {
      xs.push_back(parse_rational(part));
    } catch (const ParseError& e) {
      throw ParseError(flag, e.what());
    }
  }
  if (xs.size() != k) throw DimensionMismatch(flag + ": expected " + std::to_string(k) + " entries, got " + std::to_string(xs.size()));
  return LexVec(std::move(xs));
}

inline Point parse_point_arg(const std::string& s, std::size_t n, std::size_t k) {
  std::vector<LexVec> rows;
  if (n > 0)
    for (const auto& r : split(s, ';')) rows.push_back(parse_lexvec_arg(r, "--vertex", k));
  if (rows.size() != n) throw DimensionMismatch("--vertex: expected " + std::to_string(n) + " rows, got " + std::to_string(rows.size()));
  return Point(std::move(rows), k);
}

// Text rendering.

inline std::string text(const LatticeVec& u) { return "(" + [&] {
  std::string s;
  for (std::size_t i = 0; i < u.size(); ++i) s += (i ? "," : "") + std::to_string(u[i]);
  return s;
}() + ")"; }

inline std::string text(const Halfspace& h) { return "<" + text(h.u) + ", v> >= " + h.gamma.str(); }

inline std::string text(const Polyhedron& p) {
  if (p.halfspaces().empty()) return "everything";
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? " and " : "") + text(p.halfspaces()[i]);
  return s;
}

inline std::string text(const RationalCone& c) {
  std::string s = "cone{";
  for (std::size_t i = 0; i < c.rays().size(); ++i) s += (i ? ", " : "") + text(c.rays()[i]);
  return s + "}";
}

inline std::string text_list(const std::vector<LatticeVec>& us) {
  std::string s = "[";
  for (std::size_t i = 0; i < us.size(); ++i) s += (i ? ", " : "") + text(us[i]);
  return s + "]";
}

inline void write_complex_text(std::ostream& out, const PolyComplex& c) {
  for (std::size_t i = 0; i < c.size(); ++i) out << "  cell " << i << ": " << text(c.cells()[i]) << "\n";
  out << "  vertices:";
  for (const auto& v : vertices(c)) out << " " << v.str();
  out << "\n";
}

inline void write_fan_text(std::ostream& out, const RationalFan& f, const std::string& indent) {
  for (const auto& c : f.cones()) out << indent << text(c) << "\n";
}

inline void write_star_text(std::ostream& out, const StarData& s, const std::string& indent) {
  out << indent << "vertex " << s.vertex.str() << ": star of " << s.fan.cones().size() << " cones, "
      << (s.complete ? "complete" : "not complete") << "\n";
  for (std::size_t i = 0; i < s.maximal.size(); ++i)
    out << indent << "  maximal " << text(s.maximal[i]) << " dual Hilbert basis " << text_list(s.hilbert[i]) << "\n";
}

inline void write_report_text(std::ostream& out, const FiberReport& rep) {
  for (const auto& l : rep.levels) {
    out << "level " << l.level << ": " << l.components() << (l.components() == 1 ? " component" : " components") << "\n";
    for (const auto& s : l.stars) write_star_text(out, s, "  ");
    out << "  adjacency:";
    if (l.adjacency.empty()) out << " none";
    for (const auto& [a, b] : l.adjacency) out << " " << a << "-" << b;
    out << "\n";
    if (l.fan) {
      out << "  fan (" << (*l.complete ? "complete" : "not complete") << "):\n";
      write_fan_text(out, *l.fan, "    ");
    }
  }
  out << "component counts:";
  for (auto c : rep.component_counts()) out << " " << c;
  out << "\n";
}

/// Compares complexes as collections of point sets.
inline bool same_cells(const PolyComplex& a, const PolyComplex& b) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& p : a.cells()) {
    const auto kp = set_key(p);
    bool found = false;
    for (std::size_t j = 0; j < b.size() && !found; ++j)
      if (!used[j] && same_points(p, kp, b.cells()[j], set_key(b.cells()[j]))) found = used[j] = true;
    if (!found) return false;
  }
  return true;
}

struct Loaded {
  io::Document doc;
  std::size_t n, k;
};

inline Loaded load(const std::string& path) {
  auto doc = io::read_document(io::load_json(path));
  std::size_t n = 0, k = 1;
  std::visit(
      [&](const auto& d) {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, Polyhedron>) {
          n = d.n();
          k = d.k();
        } else if constexpr (std::is_same_v<T, io::ComplexDoc>) {
          n = d.complex.n();
          k = d.complex.k();
        } else {
          n = d.fan.n();
          k = d.fan.k();
        }
      },
      doc);
  return {std::move(doc), n, k};
}

inline const Polyhedron& need_polyhedron(const Loaded& l, const std::string& cmd) {
  if (auto p = std::get_if<Polyhedron>(&l.doc)) return *p;
  throw UsageError(cmd + " expects a polyhedron document (with \"halfspaces\")");
}

/// A fan document, or the cone over a complex document.
inline AdmissibleFan need_fan(const Loaded& l, const std::string& cmd) {
  if (auto f = std::get_if<io::FanDoc>(&l.doc)) return f->fan;
  if (auto c = std::get_if<io::ComplexDoc>(&l.doc)) return cone_over_complex(c->complex);
  throw UsageError(cmd + " expects a complex or fan document");
}

/// The complex itself, or the level-i recession complex of a fan.
inline PolyComplex need_complex(const Loaded& l, const JobSpec& job) {
  if (auto c = std::get_if<io::ComplexDoc>(&l.doc)) {
    if (job.level) return recession(cone_over_complex(c->complex), *job.level);
    return c->complex;
  }
  if (auto f = std::get_if<io::FanDoc>(&l.doc)) return recession(f->fan, job.level.value_or(0));
  throw UsageError(job.command + " expects a complex or fan document");
}

struct Outcome {
  int status = 0;
  std::string body;
};

inline Outcome emit(const JobSpec& job, const json& machine, const std::string& txt, int status = 0) {
  return {status, job.format == Format::Machine ? machine.dump(2) + "\n" : txt};
}

inline Outcome do_validate(const JobSpec& job, const Loaded& l) {
  std::ostringstream t;
  json j;
  bool ok = true;
  if (auto p = std::get_if<Polyhedron>(&l.doc)) {
    const auto lat = face_lattice(*p);
    j = {{"kind", "polyhedron"}, {"valid", true}, {"empty", lat.empty()}, {"pointed", is_pointed(*p)}};
    if (!lat.empty()) j["dimension"] = lat.dimension();
    t << "valid polyhedron: " << (lat.empty() ? "empty" : "nonempty") << ", " << (is_pointed(*p) ? "pointed" : "has lineality");
    if (!lat.empty()) t << ", dimension " << lat.dimension();
    t << "\n";
  } else if (auto c = std::get_if<io::ComplexDoc>(&l.doc)) {
    const auto check = validate_complex(c->complex);
    json vs = json::array();
    for (const auto& v : check.violations) vs.push_back(v.message);
    ok = check.valid;
    if (c->expected_incidences) {
      auto want = *c->expected_incidences;
      std::sort(want.begin(), want.end());
      if (want != incidences(c->complex)) {
        ok = false;
        vs.push_back("incidences differ from expected_incidences");
      }
    }
    j = {{"kind", "complex"}, {"valid", ok}, {"violations", vs}};
    t << (ok ? "valid complex" : "invalid complex") << " (" << c->complex.size() << " cells)\n";
    for (const auto& v : vs) t << "  " << v.get<std::string>() << "\n";
  } else {
    const auto& f = std::get<io::FanDoc>(l.doc);
    const auto check = validate_fan(f.fan);
    json vs = json::array();
    for (const auto& v : check.violations) vs.push_back(v);
    ok = check.valid;
    if (f.expected_rec)
      for (std::size_t i = 0; i < f.expected_rec->size(); ++i)
        if (!same_cells(recession(f.fan, i), (*f.expected_rec)[i])) {
          ok = false;
          vs.push_back("level " + std::to_string(i) + ": recession complex differs from expected_rec");
        }
    j = {{"kind", "fan"}, {"valid", ok}, {"violations", vs}};
    t << (ok ? "valid fan" : "invalid fan") << " (" << f.fan.size() << " cones)\n";
    for (const auto& v : vs) t << "  " << v.get<std::string>() << "\n";
  }
  return emit(job, j, t.str(), ok ? 0 : 1);
}

inline Outcome do_recession(const JobSpec& job, const Loaded& l) {
  if (!job.level) throw UsageError("recession needs --level");
  const auto fan = need_fan(l, job.command);
  const auto c = recession(fan, *job.level);
  json j = io::to_json(c);
  json vs = json::array();
  for (const auto& v : vertices(c)) vs.push_back(io::to_json(v));
  j["level"] = *job.level;
  j["vertices"] = vs;
  std::ostringstream t;
  t << "level " << *job.level << ": " << c.size() << " cells\n";
  write_complex_text(t, c);
  if (*job.level == fan.k()) {
    const auto f = recession_fan(fan);
    const bool complete = is_complete_fan(f);
    j["fan"] = io::to_json(f);
    j["complete"] = complete;
    t << "  fan (" << (complete ? "complete" : "not complete") << "):\n";
    write_fan_text(t, f, "    ");
  }
  return emit(job, j, t.str());
}

inline Outcome do_vertices(const JobSpec& job, const Loaded& l) {
  std::vector<Point> vs;
  if (auto p = std::get_if<Polyhedron>(&l.doc)) {
    if (job.level) throw UsageError("--level does not apply to a polyhedron");
    vs = vertices(*p);
  } else {
    vs = vertices(need_complex(l, job));
  }
  json a = json::array();
  std::ostringstream t;
  for (const auto& v : vs) {
    a.push_back(io::to_json(v));
    t << v.str() << "\n";
  }
  return emit(job, json{{"vertices", a}}, t.str());
}

inline Outcome do_faces(const JobSpec& job, const Loaded& l) {
  const auto& p = need_polyhedron(l, job.command);
  const auto lat = face_lattice(p);
  json a = json::array();
  std::ostringstream t;
  for (std::size_t f = 0; f < lat.faces.size(); ++f) {
    json tight = json::array();
    for (auto i : lat.faces[f].tight) tight.push_back(i);
    a.push_back(json{{"tight", tight}, {"dimension", lat.dims[f]}, {"witness", io::to_json(lat.faces[f].witness)}});
    t << "face " << f << ": dimension " << lat.dims[f] << ", tight {";
    for (std::size_t i = 0; i < lat.faces[f].tight.size(); ++i) t << (i ? "," : "") << lat.faces[f].tight[i];
    t << "}, contains " << lat.faces[f].witness.str() << "\n";
  }
  return emit(job, json{{"faces", a}}, t.str());
}

inline Outcome do_star(const JobSpec& job, const Loaded& l) {
  if (!job.vertex) throw UsageError("star needs --vertex");
  const auto c = need_complex(l, job);
  const auto s = star_data(c, parse_point_arg(*job.vertex, l.n, l.k));
  std::ostringstream t;
  write_star_text(t, s, "");
  write_fan_text(t, s.fan, "  ");
  return emit(job, io::to_json(s), t.str());
}

inline Outcome do_fiber_report(const JobSpec& job, const Loaded& l) {
  const auto rep = fiber_report(need_fan(l, job.command));
  std::ostringstream t;
  write_report_text(t, rep);
  return emit(job, io::to_json(rep), t.str());
}

inline Outcome do_weight(const JobSpec& job, const Loaded& l) {
  if (!job.terms) throw UsageError("weight needs --terms");
  const auto& p = need_polyhedron(l, job.command);
  const auto f = io::read_laurent(io::load_json(*job.terms), p.n(), p.k());
  const auto w = weight(p, f);
  return emit(job, json{{"weight", io::to_json(w)}}, w.str() + "\n");
}

inline Outcome do_member(const JobSpec& job, const Loaded& l) {
  if (!job.u || !job.val) throw UsageError("member needs --u and --val");
  const auto& p = need_polyhedron(l, job.command);
  const ValuedMonomial m{parse_lattice_arg(*job.u, "--u", p.n()), parse_lexvec_arg(*job.val, "--val", p.k())};
  const bool in = is_member(p, m);
  return emit(job, json{{"member", in}}, in ? "true\n" : "false\n");
}

inline Outcome do_generators(const JobSpec& job, const Loaded& l) {
  const auto gens = tilted_generators(need_polyhedron(l, job.command));
  json a = json::array();
  std::ostringstream t;
  for (const auto& g : gens) {
    a.push_back(io::to_json(g));
    t << "u=" << text(g.u) << " val=" << g.val.str() << "\n";
  }
  return emit(job, json{{"generators", a}}, t.str());
}

inline Outcome do_cone_over(const JobSpec& job, const Loaded& l) {
  AdmissibleFan fan;
  if (auto p = std::get_if<Polyhedron>(&l.doc)) {
    fan = close_under_faces(AdmissibleFan(p->n(), p->k(), {cone_over_cell(*p)}));
  } else if (auto c = std::get_if<io::ComplexDoc>(&l.doc)) {
    fan = cone_over_complex(c->complex);
  } else {
    throw UsageError("cone-over expects a polyhedron or complex document");
  }
  std::ostringstream t;
  t << fan.size() << " cones\n";
  for (std::size_t i = 0; i < fan.size(); ++i) {
    t << "  cone " << i << ":";
    for (const auto& c : fan.cones()[i].constraints()) t << " <" << text(c.u) << ", v> + phi" << c.gamma.str() << " >= 0;";
    t << "\n";
  }
  return emit(job, io::to_json(fan), t.str());
}

inline Outcome do_plot(const JobSpec& job, const Loaded& l) {
  if (auto p = std::get_if<Polyhedron>(&l.doc)) {
    if (job.level) throw UsageError("--level does not apply to a polyhedron");
    std::vector<Polyhedron> cells;
    for (const auto& f : enumerate_faces(*p)) cells.push_back(face_polyhedron(*p, f.tight));
    return {0, plot(PolyComplex(p->n(), p->k(), cells))};
  }
  return {0, plot(need_complex(l, job))};
}

}  // namespace detail

/// Runs one job. The document goes to job.output (or `out`); diagnostics go to `err`.
/// Exit status: 0 success, 1 validation failure or domain error, 2 malformed input or usage.
inline int run(const JobSpec& job, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  try {
    const auto& cmds = commands();
    if (std::find(cmds.begin(), cmds.end(), job.command) == cmds.end())
      throw UsageError("unknown command '" + job.command + "'");
    static const std::vector<std::string> with_level{"recession", "vertices", "star", "plot"};
    if (job.level && std::find(with_level.begin(), with_level.end(), job.command) == with_level.end())
      throw UsageError("--level does not apply to " + job.command);
    if (job.vertex && job.command != "star") throw UsageError("--vertex only applies to star");
    if ((job.u || job.val) && job.command != "member") throw UsageError("--u and --val only apply to member");
    if (job.terms && job.command != "weight") throw UsageError("--terms only applies to weight");
    if (job.format == Format::Machine && job.command == "plot") throw UsageError("plot always emits SVG");

    const auto loaded = detail::load(job.input);
    detail::Outcome o;
    const auto& c = job.command;
    if (c == "validate") o = detail::do_validate(job, loaded);
    else if (c == "recession") o = detail::do_recession(job, loaded);
    else if (c == "vertices") o = detail::do_vertices(job, loaded);
    else if (c == "faces") o = detail::do_faces(job, loaded);
    else if (c == "star") o = detail::do_star(job, loaded);
    else if (c == "fiber-report") o = detail::do_fiber_report(job, loaded);
    else if (c == "weight") o = detail::do_weight(job, loaded);
    else if (c == "member") o = detail::do_member(job, loaded);
    else if (c == "generators") o = detail::do_generators(job, loaded);
    else if (c == "cone-over") o = detail::do_cone_over(job, loaded);
    else o = detail::do_plot(job, loaded);

    if (job.output) {
      std::ofstream f(*job.output, std::ios::binary);
      if (!f) throw UsageError("cannot write " + *job.output);
      f << o.body;
    } else {
      out << o.body;
    }
    return o.status;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DimensionMismatch& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace lexfan::cli
