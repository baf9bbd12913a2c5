#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lexfan/lexvec.hpp"

namespace lexfan {

/// A coordinatewise multiplier r, acting on Q^(k) by (s_1,...,s_k) -> (r_1 s_1,...,r_k s_k).
class Multiplier {
 public:
  Multiplier() = default;
  explicit Multiplier(std::vector<Rational> entries) : r_(std::move(entries)) {}
  Multiplier(std::initializer_list<Rational> entries) : r_(entries) {}

  static Multiplier identity(std::size_t k) { return Multiplier(std::vector<Rational>(k, Rational(1))); }

  std::size_t k() const noexcept { return r_.size(); }
  const Rational& operator[](std::size_t i) const { return r_[i]; }
  const std::vector<Rational>& entries() const noexcept { return r_; }

  friend bool operator==(const Multiplier&, const Multiplier&) = default;

 private:
  std::vector<Rational> r_;
};

inline LexVec apply_multiplier(const Multiplier& r, const LexVec& g) {
  if (r.k() != g.k())
    throw DimensionMismatch("multiplier of length " + std::to_string(r.k()) + " applied to value of length " +
                            std::to_string(g.k()));
  LexVec out(g.k());
  for (std::size_t i = 0; i < g.k(); ++i) out[i] = r[i] * g[i];
  return out;
}

/// Componentwise product; corresponds to composing the induced maps.
inline Multiplier compose(const Multiplier& a, const Multiplier& b) {
  if (a.k() != b.k()) throw DimensionMismatch("composing multipliers of different length");
  std::vector<Rational> out(a.k());
  for (std::size_t i = 0; i < a.k(); ++i) out[i] = a[i] * b[i];
  return Multiplier(std::move(out));
}

struct MonotonicityCheck {
  bool monotone = false;
  /// When not monotone: some s >= 0 whose image is negative.
  std::optional<LexVec> witness;
};

/// The map is order-preserving exactly when the entries form a positive prefix followed by
/// zeros: r = (r_1,...,r_m,0,...,0) with r_1,...,r_m > 0 (m = 0 gives the zero map).
inline MonotonicityCheck is_monotone_multiplier(const Multiplier& r) {
  const std::size_t k = r.k();
  std::size_t t = 0;
  while (t < k && r[t] > 0) ++t;
  if (t == k) return {true, std::nullopt};
  if (r[t] < 0) return {false, unit_lexvec(k, t)};
  // r[t] == 0: any later nonzero entry breaks monotonicity.
  for (std::size_t p = t + 1; p < k; ++p) {
    if (r[p] != 0) {
      LexVec s = unit_lexvec(k, t);
      s[p] = r[p] > 0 ? -1 : 1;
      return {false, s};
    }
  }
  return {true, std::nullopt};
}

/// The tower of convex subgroups of the value group. Only the full tower of Q^(k) is
/// supported: n = k and j_i = i.
class TowerProfile {
 public:
  TowerProfile(std::size_t k, std::size_t n, std::vector<std::size_t> j) : k_(k) {
    if (k == 0) throw InvalidArgument("value group length k must be positive");
    if (n != k || j.size() != n + 1)
      throw InvalidArgument("only the full tower n = k, j_i = i is supported for Q^(" + std::to_string(k) + ")");
    for (std::size_t i = 0; i <= n; ++i)
      if (j[i] != i) throw InvalidArgument("only the full tower j_i = i is supported");
  }

  static TowerProfile full(std::size_t k) {
    std::vector<std::size_t> j(k + 1);
    for (std::size_t i = 0; i <= k; ++i) j[i] = i;
    return TowerProfile(k, k, std::move(j));
  }

  std::size_t k() const noexcept { return k_; }
  std::size_t rank() const noexcept { return k_; }
  std::size_t j(std::size_t i) const {
    if (i > k_) throw InvalidArgument("tower level " + std::to_string(i) + " out of range");
    return i;
  }

 private:
  std::size_t k_;
};

/// The truncation keeping the leading k - j_i coordinates.
inline Multiplier epsilon(const TowerProfile& profile, std::size_t i) {
  if (i > profile.rank())
    throw InvalidArgument("level " + std::to_string(i) + " out of range 0.." + std::to_string(profile.rank()));
  const std::size_t keep = profile.k() - profile.j(i);
  std::vector<Rational> r(profile.k(), Rational(0));
  for (std::size_t c = 0; c < keep; ++c) r[c] = 1;
  return Multiplier(std::move(r));
}

/// Shorthand for epsilon(TowerProfile::full(g.k()), i) applied to g.
inline LexVec truncate(const LexVec& g, std::size_t i) {
  if (i > g.k()) throw InvalidArgument("level " + std::to_string(i) + " out of range 0.." + std::to_string(g.k()));
  LexVec out = g;
  for (std::size_t c = g.k() - i; c < g.k(); ++c) out[c] = 0;
  return out;
}

/// Membership in the i-th member of the flag: monotone and vanishing on the trailing j_i coordinates,
/// i.e. factoring through the i-th truncation.
inline bool in_flag_level(const Multiplier& r, const TowerProfile& profile, std::size_t i) {
  if (r.k() != profile.k()) throw DimensionMismatch("multiplier length differs from tower");
  if (!is_monotone_multiplier(r).monotone) return false;
  for (std::size_t c = profile.k() - profile.j(i); c < profile.k(); ++c)
    if (r[c] != 0) return false;
  return true;
}

}  // namespace lexfan
