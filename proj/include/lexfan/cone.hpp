#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "lexfan/faces.hpp"
#include "lexfan/lattice.hpp"
#include "lexfan/lineality.hpp"

namespace lexfan {

namespace detail {

/// Calls f on every size-r subset of {0..m-1}, in lexicographic order.
template <class F>
void for_each_subset(std::size_t m, std::size_t r, F&& f) {
  if (r > m) return;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == m - r + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline std::vector<LatticeVec> primitive_unique(std::vector<LatticeVec> vs) {
  std::vector<LatticeVec> out;
  for (auto& v : vs)
    if (!is_zero(v)) out.push_back(primitive(std::move(v)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool satisfies_all(const std::vector<LatticeVec>& rows, const LatticeVec& d) {
  return std::all_of(rows.begin(), rows.end(), [&](const LatticeVec& u) { return dot(u, d) >= 0; });
}

}  // namespace detail

/// Extreme rays of the pointed cone {d : rows d >= 0}, primitive and sorted.
inline std::vector<LatticeVec> extreme_rays(const std::vector<LatticeVec>& rows, std::size_t n) {
  if (lattice_rank(rows, n) != n) throw NotPointed("cone has lineality");
  std::set<LatticeVec> rays;
  if (n == 0) return {};
  detail::for_each_subset(rows.size(), n - 1, [&](const std::vector<std::size_t>& idx) {
    std::vector<LatticeVec> sub;
    for (auto i : idx) sub.push_back(rows[i]);
    const auto ker = integer_kernel(sub, n);
    if (ker.size() != 1) return;
    for (const auto& z : {ker[0], negated(ker[0])})
      if (detail::satisfies_all(rows, z)) rays.insert(primitive(z));
  });
  return {rays.begin(), rays.end()};
}

/// A pointed rational cone in N_Q, kept both as inequalities and as extreme rays.
class RationalCone {
 public:
  RationalCone() = default;

  static RationalCone from_inequalities(std::size_t n, const std::vector<LatticeVec>& rows) {
    for (const auto& u : rows)
      if (u.size() != n) throw DimensionMismatch("cone inequality of rank " + std::to_string(u.size()));
    RationalCone c;
    c.n_ = n;
    c.rows_ = detail::primitive_unique(rows);
    c.rays_ = extreme_rays(c.rows_, n);
    return c;
  }

  /// The cone generated by `gens`; it must be pointed.
  static RationalCone from_rays(std::size_t n, const std::vector<LatticeVec>& gens) {
    for (const auto& g : gens)
      if (g.size() != n) throw DimensionMismatch("cone generator of rank " + std::to_string(g.size()));
    const auto gs = detail::primitive_unique(gens);
    // Inequalities: the dual cone's lineality (both signs) and the rays of its pointed part.
    BasisMap map(gs, n);
    std::vector<LatticeVec> rows;
    for (const auto& z : map.kernel_basis()) {
      rows.push_back(z);
      rows.push_back(negated(z));
    }
    std::vector<LatticeVec> h;
    for (const auto& g : gs) h.push_back(map.to_quotient(g));
    for (const auto& y : extreme_rays(h, map.rank())) rows.push_back(map.lift(y));
    auto c = from_inequalities(n, rows);
    if (c.rays_ != gs) {
      // Redundant generators are dropped; anything else means the input was not pointed.
      for (const auto& r : c.rays_)
        if (!std::binary_search(gs.begin(), gs.end(), r)) throw NotPointed("generators span a line");
    }
    return c;
  }

  static RationalCone origin(std::size_t n) {
    std::vector<LatticeVec> rows;
    for (std::size_t j = 0; j < n; ++j) {
      LatticeVec e(n, 0);
      e[j] = 1;
      rows.push_back(e);
      rows.push_back(negated(e));
    }
    return from_inequalities(n, rows);
  }

  std::size_t n() const noexcept { return n_; }
  const std::vector<LatticeVec>& inequalities() const noexcept { return rows_; }
  const std::vector<LatticeVec>& rays() const noexcept { return rays_; }
  std::size_t dim() const { return lattice_rank(rays_, n_); }

  bool contains(const LatticeVec& d) const { return detail::satisfies_all(rows_, d); }

  std::vector<Halfspace> halfspaces() const {
    std::vector<Halfspace> hs;
    for (const auto& u : rows_) hs.push_back({u, LexVec(1)});
    return hs;
  }

  /// All faces, each as the cone spanned by the rays on it.
  std::vector<RationalCone> faces() const {
    const auto hs = halfspaces();
    const auto lat = face_lattice(n_, 1, hs);
    std::vector<RationalCone> out;
    for (const auto& f : lat.faces) {
      RationalCone c;
      c.n_ = n_;
      c.rows_ = rows_;
      for (auto l : f.tight) {
        c.rows_.push_back(negated(rows_[l]));
      }
      c.rows_ = detail::primitive_unique(c.rows_);
      for (const auto& r : rays_)
        if (std::all_of(f.tight.begin(), f.tight.end(), [&](std::size_t l) { return dot(rows_[l], r) == 0; }))
          c.rays_.push_back(r);
      out.push_back(std::move(c));
    }
    return out;
  }

  bool is_face_of(const RationalCone& other) const {
    const auto fs = other.faces();
    return std::any_of(fs.begin(), fs.end(), [&](const RationalCone& f) { return f == *this; });
  }

  /// Pointed cones are equal iff they have the same rays.
  friend bool operator==(const RationalCone& a, const RationalCone& b) { return a.n_ == b.n_ && a.rays_ == b.rays_; }
  friend bool operator<(const RationalCone& a, const RationalCone& b) {
    if (a.rays_.size() != b.rays_.size()) return a.rays_.size() < b.rays_.size();
    return a.rays_ < b.rays_;
  }

  std::string str() const {
    std::string s = "cone{";
    for (std::size_t i = 0; i < rays_.size(); ++i) s += (i ? " " : "") + lattice_str(rays_[i]);
    return s + "}";
  }

 private:
  std::size_t n_ = 0;
  std::vector<LatticeVec> rows_;
  std::vector<LatticeVec> rays_;
};

inline RationalCone intersect(const RationalCone& a, const RationalCone& b) {
  if (a.n() != b.n()) throw DimensionMismatch("intersecting cones of different rank");
  auto rows = a.inequalities();
  rows.insert(rows.end(), b.inequalities().begin(), b.inequalities().end());
  return RationalCone::from_inequalities(a.n(), rows);
}

/// A finite collection of pointed cones, kept sorted and without duplicates.
class RationalFan {
 public:
  RationalFan() = default;
  RationalFan(std::size_t n, std::vector<RationalCone> cones) : n_(n), cones_(std::move(cones)) {
    for (const auto& c : cones_)
      if (c.n() != n) throw DimensionMismatch("fan cone of rank " + std::to_string(c.n()));
    std::sort(cones_.begin(), cones_.end());
    cones_.erase(std::unique(cones_.begin(), cones_.end()), cones_.end());
  }

  std::size_t n() const noexcept { return n_; }
  const std::vector<RationalCone>& cones() const noexcept { return cones_; }
  bool has(const RationalCone& c) const { return std::binary_search(cones_.begin(), cones_.end(), c); }

  /// The fan together with all faces of its cones.
  RationalFan face_closure() const {
    std::vector<RationalCone> all;
    for (const auto& c : cones_)
      for (auto& f : c.faces()) all.push_back(std::move(f));
    return RationalFan(n_, all);
  }

  /// Cones not properly contained in another cone of the fan.
  std::vector<RationalCone> maximal_cones() const {
    std::vector<RationalCone> out;
    for (const auto& c : cones_) {
      bool maximal = true;
      for (const auto& d : cones_)
        if (!(d == c) && std::includes(d.rays().begin(), d.rays().end(), c.rays().begin(), c.rays().end()) &&
            c.is_face_of(d)) {
          maximal = false;
          break;
        }
      if (maximal) out.push_back(c);
    }
    return out;
  }

 private:
  std::size_t n_ = 0;
  std::vector<RationalCone> cones_;
};

struct FanCheck {
  bool valid = true;
  std::vector<std::string> violations;
};

/// Fan axioms: faces present, pairwise intersections faces of both.
inline FanCheck validate(const RationalFan& fan) {
  FanCheck out;
  const auto& cs = fan.cones();
  for (const auto& c : cs)
    for (const auto& f : c.faces())
      if (!fan.has(f)) out.violations.push_back("face " + f.str() + " of " + c.str() + " missing");
  for (std::size_t a = 0; a < cs.size(); ++a)
    for (std::size_t b = a + 1; b < cs.size(); ++b) {
      const auto x = intersect(cs[a], cs[b]);
      if (!x.is_face_of(cs[a]) || !x.is_face_of(cs[b]))
        out.violations.push_back("intersection of " + cs[a].str() + " and " + cs[b].str() + " is not a face of both");
    }
  out.valid = out.violations.empty();
  return out;
}

/// Support equals N_Q. Decided by purity plus facet pairing.
inline bool is_complete_fan(const RationalFan& fan) {
  const auto check = validate(fan);
  if (!check.valid) throw InvalidArgument("not a fan: " + check.violations.front());
  const std::size_t n = fan.n();
  if (fan.cones().empty()) return false;
  std::vector<RationalCone> top;
  for (const auto& c : fan.cones())
    if (c.dim() == n) top.push_back(c);
  if (top.empty()) return false;
  for (const auto& c : fan.cones())
    if (std::none_of(top.begin(), top.end(), [&](const RationalCone& t) { return c.is_face_of(t); })) return false;
  if (n == 0) return true;
  std::map<std::vector<LatticeVec>, int> facet_count;
  for (const auto& t : top)
    for (const auto& f : t.faces())
      if (f.dim() + 1 == n) ++facet_count[f.rays()];
  return std::all_of(facet_count.begin(), facet_count.end(), [](const auto& e) { return e.second == 2; });
}

}  // namespace lexfan
