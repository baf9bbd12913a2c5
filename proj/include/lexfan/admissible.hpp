#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lexfan/complex.hpp"
#include "lexfan/multiplier.hpp"

namespace lexfan {

/// {(v, phi) : <u, v> + phi(gamma) >= 0 for every constraint (u, gamma)}, kept formally.
class AdmissibleCone {
 public:
  AdmissibleCone() = default;
  AdmissibleCone(std::size_t n, std::size_t k, const std::vector<Halfspace>& constraints) : n_(n), k_(k) {
    if (k == 0) throw InvalidArgument("value group length k must be positive");
    for (const auto& c0 : constraints) {
      if (c0.u.size() != n) throw DimensionMismatch("cone constraint of rank " + std::to_string(c0.u.size()) +
                                                    " in fan of rank " + std::to_string(n));
      if (c0.gamma.k() != k) throw DimensionMismatch("cone constant of length " + std::to_string(c0.gamma.k()) +
                                                     ", expected " + std::to_string(k));
      Halfspace c = normalize(c0);
      // 0 + phi(gamma) >= 0 holds for every monotone phi exactly when gamma >= 0.
      if (is_zero(c.u) && c.gamma.sign() >= 0) continue;
      if (std::find(constraints_.begin(), constraints_.end(), c) == constraints_.end()) constraints_.push_back(c);
    }
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t levels() const noexcept { return k_ + 1; }
  const std::vector<Halfspace>& constraints() const noexcept { return constraints_; }

  /// The polyhedron {v : <u, v> >= -phi(gamma)} for phi = epsilon_i.
  Polyhedron slice(std::size_t i) const {
    if (i > k_) throw InvalidArgument("level " + std::to_string(i) + " out of range 0.." + std::to_string(k_));
    std::vector<Halfspace> hs;
    for (const auto& c : constraints_) hs.push_back({c.u, -truncate(c.gamma, i)});
    return Polyhedron(n_, k_, hs);
  }

  friend bool operator==(const AdmissibleCone&, const AdmissibleCone&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t k_ = 1;
  std::vector<Halfspace> constraints_;
};

inline Polyhedron recession(const AdmissibleCone& sigma, std::size_t i) { return sigma.slice(i); }

inline AdmissibleCone cone_over_cell(const Polyhedron& p) {
  std::vector<Halfspace> cs;
  for (const auto& h : p.halfspaces()) cs.push_back({h.u, -h.gamma});
  return AdmissibleCone(p.n(), p.k(), cs);
}

/// No line of N x {0}: the normals span M_Q.
inline bool is_admissible(const AdmissibleCone& sigma) {
  std::vector<LatticeVec> us;
  for (const auto& c : sigma.constraints()) us.push_back(c.u);
  return lattice_rank(us, sigma.n()) == sigma.n();
}

/// Point-set data of every slice; two formal cones are identified when all slices agree.
class SliceSignature {
 public:
  explicit SliceSignature(const AdmissibleCone& sigma) {
    for (std::size_t i = 0; i < sigma.levels(); ++i) {
      slices_.push_back(sigma.slice(i));
      const bool nonempty = !is_empty(slices_.back());
      nonempty_.push_back(nonempty);
      keys_.push_back(nonempty ? set_key(slices_.back()) : std::nullopt);
    }
  }

  std::size_t levels() const noexcept { return slices_.size(); }
  bool nonempty(std::size_t i) const { return nonempty_[i]; }
  const Polyhedron& slice(std::size_t i) const { return slices_[i]; }
  const std::optional<PolyKey>& key(std::size_t i) const { return keys_[i]; }
  /// Keys at every nonempty level exist (all nonempty slices pointed).
  bool keyed() const {
    for (std::size_t i = 0; i < levels(); ++i)
      if (nonempty_[i] && !keys_[i]) return false;
    return true;
  }

  friend bool operator==(const SliceSignature& a, const SliceSignature& b) {
    if (a.levels() != b.levels()) return false;
    for (std::size_t i = 0; i < a.levels(); ++i) {
      if (a.nonempty_[i] != b.nonempty_[i]) return false;
      if (a.nonempty_[i] && !same_points(a.slices_[i], a.keys_[i], b.slices_[i], b.keys_[i])) return false;
    }
    return true;
  }

 private:
  std::vector<Polyhedron> slices_;
  std::vector<bool> nonempty_;
  std::vector<std::optional<PolyKey>> keys_;
};

/// The constraints of sigma followed by the implicit ones phi(e_t) >= 0, t = 0..k-1.
/// Making phi(e_t) = 0 tight restricts phi to the strata that kill e_t.
inline std::vector<Halfspace> extended_constraints(const AdmissibleCone& sigma) {
  auto ext = sigma.constraints();
  for (std::size_t t = 0; t < sigma.k(); ++t) ext.push_back({LatticeVec(sigma.n(), 0), unit_lexvec(sigma.k(), t)});
  return ext;
}

/// Sigma with the listed extended constraints turned into equalities.
inline AdmissibleCone formal_face(const AdmissibleCone& sigma, const TightSet& tight) {
  const auto ext = extended_constraints(sigma);
  auto cs = sigma.constraints();
  for (auto l : tight) cs.push_back(ext.at(l).negated());
  return AdmissibleCone(sigma.n(), sigma.k(), cs);
}

/// Extended constraints forced to equality at every level where the face is nonempty.
/// The slice at the last level always contains 0, so some level contributes.
inline TightSet formal_closure(const AdmissibleCone& sigma, const TightSet& tight) {
  const auto ext = extended_constraints(sigma);
  std::optional<TightSet> common;
  for (std::size_t i = 0; i < sigma.levels(); ++i) {
    std::vector<Halfspace> hs;
    for (const auto& c : ext) hs.push_back({c.u, -truncate(c.gamma, i)});
    auto f = close_tight_set(sigma.n(), sigma.k(), hs, tight);
    if (!f) continue;
    if (!common) {
      common = f->tight;
    } else {
      TightSet both;
      std::set_intersection(common->begin(), common->end(), f->tight.begin(), f->tight.end(), std::back_inserter(both));
      common = std::move(both);
    }
  }
  return *common;
}

/// Every formal face of sigma, sigma included, as closed sets of extended-constraint indices.
inline std::vector<TightSet> formal_face_sets(const AdmissibleCone& sigma) {
  const std::size_t m = sigma.constraints().size() + sigma.k();
  const auto top = formal_closure(sigma, {});
  std::set<TightSet> seen{top};
  std::deque<TightSet> queue{top};
  std::vector<TightSet> out;
  while (!queue.empty()) {
    auto t = std::move(queue.front());
    queue.pop_front();
    for (std::size_t l = 0; l < m; ++l) {
      if (std::binary_search(t.begin(), t.end(), l)) continue;
      auto s = t;
      s.insert(std::upper_bound(s.begin(), s.end(), l), l);
      auto c = formal_closure(sigma, s);
      if (seen.insert(c).second) queue.push_back(std::move(c));
    }
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<AdmissibleCone> formal_faces(const AdmissibleCone& sigma) {
  std::vector<AdmissibleCone> out;
  for (const auto& t : formal_face_sets(sigma)) out.push_back(formal_face(sigma, t));
  return out;
}

class AdmissibleFan {
 public:
  AdmissibleFan() = default;
  AdmissibleFan(std::size_t n, std::size_t k, std::vector<AdmissibleCone> cones) : n_(n), k_(k), cones_(std::move(cones)) {
    for (const auto& c : cones_)
      if (c.n() != n || c.k() != k) throw DimensionMismatch("cone shape differs from fan shape");
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t levels() const noexcept { return k_ + 1; }
  const std::vector<AdmissibleCone>& cones() const noexcept { return cones_; }
  std::size_t size() const noexcept { return cones_.size(); }

 private:
  std::size_t n_ = 0;
  std::size_t k_ = 1;
  std::vector<AdmissibleCone> cones_;
};

namespace detail {

inline bool contains_signature(const std::vector<SliceSignature>& sigs, const SliceSignature& s) {
  return std::any_of(sigs.begin(), sigs.end(), [&](const SliceSignature& t) { return t == s; });
}

}  // namespace detail

/// Adds every formal face of every cone, identifying cones with equal slices.
/// Cones of the input keep their positions; new faces follow in discovery order.
inline AdmissibleFan close_under_faces(const AdmissibleFan& fan) {
  std::vector<AdmissibleCone> cones;
  std::vector<SliceSignature> sigs;
  auto add = [&](const AdmissibleCone& c) {
    SliceSignature s(c);
    if (detail::contains_signature(sigs, s)) return;
    sigs.push_back(std::move(s));
    cones.push_back(c);
  };
  for (const auto& c : fan.cones()) add(c);
  for (const auto& c : fan.cones())
    for (const auto& f : formal_faces(c)) add(f);
  return AdmissibleFan(fan.n(), fan.k(), std::move(cones));
}

/// The complex of nonempty level-i slices, without repeats, ordered by dimension then by key.
inline PolyComplex recession(const AdmissibleFan& fan, std::size_t i) {
  if (i > fan.k()) throw InvalidArgument("level " + std::to_string(i) + " out of range 0.." + std::to_string(fan.k()));
  struct Entry {
    Polyhedron p;
    std::optional<PolyKey> key;
    std::size_t dim;
  };
  std::vector<Entry> entries;
  for (const auto& c : fan.cones()) {
    auto p = c.slice(i);
    const auto lat = face_lattice(p);
    if (lat.empty()) continue;
    auto key = set_key(p);
    bool dup = std::any_of(entries.begin(), entries.end(),
                           [&](const Entry& e) { return same_points(e.p, e.key, p, key); });
    if (!dup) entries.push_back({std::move(p), std::move(key), lat.dimension()});
  }
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.key && b.key) return *a.key < *b.key;
    return false;
  });
  std::vector<Polyhedron> cells;
  for (auto& e : entries) cells.push_back(std::move(e.p));
  return PolyComplex(fan.n(), fan.k(), std::move(cells));
}

/// The final slice as an ordinary fan. Throws NotPointed when some cell has lineality.
inline RationalFan recession_fan(const AdmissibleFan& fan) {
  const auto c = recession(fan, fan.k());
  std::vector<RationalCone> cones;
  for (const auto& p : c.cells()) cones.push_back(recession_cone(p));
  return RationalFan(fan.n(), cones);
}

/// Throws when C is not a valid complex.
inline AdmissibleFan cone_over_complex(const PolyComplex& c) {
  const auto check = validate_complex(c);
  if (!check.valid) throw InvalidArgument("invalid complex: " + check.violations.front().message);
  std::vector<AdmissibleCone> cones;
  for (const auto& p : c.cells()) cones.push_back(cone_over_cell(p));
  return close_under_faces(AdmissibleFan(c.n(), c.k(), std::move(cones)));
}

/// Formal face closure, admissibility, pairwise intersections, valid slices at every level,
/// and a fan of pointed cones at the last level.
inline FanCheck validate_fan(const AdmissibleFan& fan) {
  FanCheck out;
  auto report = [&](std::string s) { out.violations.push_back(std::move(s)); };
  const auto& cones = fan.cones();
  std::vector<SliceSignature> sigs;
  for (const auto& c : cones) sigs.emplace_back(c);

  for (std::size_t a = 0; a < cones.size(); ++a)
    if (!is_admissible(cones[a])) report("cone " + std::to_string(a) + " is not admissible");

  std::vector<std::vector<SliceSignature>> face_sigs(cones.size());
  for (std::size_t a = 0; a < cones.size(); ++a)
    for (const auto& f : formal_faces(cones[a])) {
      face_sigs[a].emplace_back(f);
      if (!detail::contains_signature(sigs, face_sigs[a].back()))
        report("a formal face of cone " + std::to_string(a) + " is missing");
    }

  for (std::size_t a = 0; a < cones.size(); ++a)
    for (std::size_t b = a + 1; b < cones.size(); ++b) {
      auto cs = cones[a].constraints();
      cs.insert(cs.end(), cones[b].constraints().begin(), cones[b].constraints().end());
      const SliceSignature x(AdmissibleCone(fan.n(), fan.k(), cs));
      if (!detail::contains_signature(face_sigs[a], x) || !detail::contains_signature(face_sigs[b], x))
        report("cones " + std::to_string(a) + " and " + std::to_string(b) + " do not meet in a common face");
    }

  for (std::size_t i = 0; i < fan.levels(); ++i) {
    const auto check = validate_complex(recession(fan, i));
    for (const auto& v : check.violations) report("level " + std::to_string(i) + ": " + v.message);
  }

  const auto last = recession(fan, fan.k());
  bool pointed = true;
  for (std::size_t c = 0; c < last.size(); ++c)
    if (!is_pointed(last.cells()[c])) {
      pointed = false;
      report("level " + std::to_string(fan.k()) + ": cell " + std::to_string(c) + " has lineality");
    }
  if (pointed) {
    const auto check = validate(recession_fan(fan));
    for (const auto& v : check.violations) report("level " + std::to_string(fan.k()) + " fan: " + v);
  }
  out.valid = out.violations.empty();
  return out;
}

}  // namespace lexfan
