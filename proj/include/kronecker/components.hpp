#pragma once

// Regular components of K_n at the level of dimension vectors.
//
// A component is described by a quasi-simple dimension vector X (the seed).
// node(i, r) is the module of quasi-length r whose quasi-top is tau^i X, so
//
//   dim node(i, r) = sum_{l=0}^{r-1} dim tau^{i+l} X.
//
// The modules X_r built from the quasi-socle X by alternating irreducible
// monos and epis sit at node(-floor(r/2), r); in particular X_2 = node(-1, 2).
//
// Orbit lengths L_i = |X Phi^i| satisfy L_{i+1} + L_{i-1} = (n^2-2) L_i, so
// while they stay positive they are strictly convex in i. Every scan below
// walks outward from the orbit minimum and stops once the length exceeds the
// target and is still growing; a step cap turns any surprise into an error.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kronecker/errors.hpp"
#include "kronecker/roots.hpp"
#include "kronecker/sequences.hpp"

namespace kronecker {

struct ComponentSeed {
  int n = 3;
  DimVector qs_dim;

  ComponentSeed(int arrows, DimVector dim) : n(arrows), qs_dim(std::move(dim)) {
    require_wild(n);
    if (!is_imaginary(n, qs_dim))
      throw InvalidParameter("component seed must be an imaginary root, got " + to_string(qs_dim));
  }
};

struct NodeCoord {
  long long i = 0;  // tau-shift of the quasi-top
  long long r = 1;  // quasi-length

  friend bool operator==(const NodeCoord&, const NodeCoord&) = default;
  /// Canonical order: by quasi-length, then shift.
  friend bool operator<(const NodeCoord& x, const NodeCoord& y) {
    return x.r < y.r || (x.r == y.r && x.i < y.i);
  }
};

inline std::string to_string(const NodeCoord& c) {
  return "(" + std::to_string(c.i) + "," + std::to_string(c.r) + ")";
}

/// Coordinates of X_r for the quasi-simple X = tau^shift(seed).
inline NodeCoord layer_coord(long long r, long long shift = 0) { return {shift - r / 2, r}; }

inline constexpr std::size_t kScanCap = 4096;

/// Lazily extended Phi-orbit {v Phi^i : i in Z}.
class Orbit {
 public:
  Orbit(int n, DimVector v) : n_(n) { forward_.push_back(std::move(v)); }

  int n() const { return n_; }

  const DimVector& at(long long i) {
    if (i >= 0) {
      const auto k = static_cast<std::size_t>(i);
      while (forward_.size() <= k) forward_.push_back(detail::phi(n_, forward_.back()));
      return forward_[k];
    }
    const auto k = static_cast<std::size_t>(-i - 1);
    while (backward_.size() <= k)
      backward_.push_back(detail::phi_inverse(n_, backward_.empty() ? forward_.front() : backward_.back()));
    return backward_[k];
  }

  Integer length(long long i) { return at(i).length(); }

 private:
  int n_;
  std::vector<DimVector> forward_;   // i = 0, 1, 2, ...
  std::vector<DimVector> backward_;  // i = -1, -2, ...
};

inline DimVector node_dim(const ComponentSeed& seed, const NodeCoord& coord) {
  if (coord.r < 1) throw InvalidParameter("quasi-length must be >= 1");
  DimVector term = coxeter_apply(seed.n, seed.qs_dim, coord.i);
  DimVector total = term;
  for (long long l = 1; l < coord.r; ++l) {
    term = detail::phi(seed.n, term);
    total += term;
  }
  return total;
}

struct OrbitMinimum {
  long long shift = 0;
  DimVector dim;
};

namespace detail {

inline OrbitMinimum orbit_minimum(Orbit& orbit) {
  long long i = 0;
  long long dir = orbit.length(1) < orbit.length(0) ? 1 : (orbit.length(-1) < orbit.length(0) ? -1 : 0);
  std::size_t steps = 0;
  if (dir != 0)
    while (orbit.length(i + dir) < orbit.length(i)) {
      i += dir;
      if (++steps > kScanCap) throw TheoremViolation("orbit minimum scan exceeded its cap");
    }
  // At most two adjacent minima; keep the lexicographically smaller vector.
  OrbitMinimum best{i, orbit.at(i)};
  for (long long j : {i - 1, i + 1})
    if (orbit.length(j) == orbit.length(i) && orbit.at(j) < best.dim) best = {j, orbit.at(j)};
  return best;
}

/// Smallest closed shift interval containing every orbit index with L_i <= bound.
/// Empty (lo > hi) when even the minimum exceeds the bound.
struct ShiftWindow {
  long long lo = 0;
  long long hi = -1;
};

inline ShiftWindow window_upto(Orbit& orbit, long long center, const Integer& bound) {
  ShiftWindow w{center, center - 1};
  if (orbit.length(center) > bound) return w;
  auto walk = [&](long long dir) {
    long long i = center;
    std::size_t steps = 0;
    // Stop only once past the bound and still growing.
    while (!(orbit.length(i + dir) > bound && orbit.length(i + 2 * dir) > orbit.length(i + dir))) {
      i += dir;
      if (++steps > kScanCap) throw TheoremViolation("orbit window scan exceeded its cap");
    }
    return i;
  };
  w.hi = walk(1);
  w.lo = walk(-1);
  // The walks may step over an element above the bound only if growth stalls,
  // which convexity rules out; trim to be exact anyway.
  while (w.lo <= w.hi && orbit.length(w.lo) > bound) ++w.lo;
  while (w.hi >= w.lo && orbit.length(w.hi) > bound) --w.hi;
  return w;
}

}  // namespace detail

/// Orbit element of minimal length (ties: lexicographically smallest vector).
inline OrbitMinimum min_orbit_length(int n, const DimVector& v) {
  require_wild(n);
  if (!is_imaginary(n, v)) throw InvalidParameter("min_orbit_length needs an imaginary root, got " + to_string(v));
  Orbit orbit(n, v);
  return detail::orbit_minimum(orbit);
}

struct CensusHit {
  NodeCoord coord;
  DimVector dim;
  friend bool operator==(const CensusHit&, const CensusHit&) = default;
};

struct CensusResult {
  Integer length;
  std::vector<CensusHit> hits;  // sorted by (r, i)
  std::size_t count = 0;
};

/// Every node of length at most `max_length`, grouped by length.
inline std::map<Integer, std::vector<CensusHit>> length_census_upto(const ComponentSeed& seed,
                                                                     const Integer& max_length) {
  Orbit orbit(seed.n, seed.qs_dim);
  const OrbitMinimum minimum = detail::orbit_minimum(orbit);
  const detail::ShiftWindow w = detail::window_upto(orbit, minimum.shift, max_length);
  std::map<Integer, std::vector<CensusHit>> out;
  if (w.lo > w.hi) return out;
  const Integer m0 = minimum.dim.length();
  const long long r_max = (max_length / m0).convert_to<long long>();
  for (long long r = 1; r <= r_max; ++r)
    for (long long i = w.lo; i + r - 1 <= w.hi; ++i) {
      DimVector total;
      for (long long l = 0; l < r; ++l) total += orbit.at(i + l);
      const Integer len = total.length();
      if (len <= max_length) out[len].push_back({{i, r}, total});
    }
  for (auto& [len, hits] : out) {
    std::sort(hits.begin(), hits.end(), [](const CensusHit& x, const CensusHit& y) { return x.coord < y.coord; });
    if (hits.size() > 2)
      throw TheoremViolation(std::to_string(hits.size()) + " nodes of length " + len.str() + " in the component of " +
                             to_string(seed.qs_dim));
  }
  return out;
}

/// All nodes of length exactly d. More than two hits is a TheoremViolation.
inline CensusResult length_census(const ComponentSeed& seed, const Integer& d) {
  if (d < 1) throw InvalidParameter("census length must be >= 1");
  auto all = length_census_upto(seed, d);
  CensusResult out;
  out.length = d;
  if (auto it = all.find(d); it != all.end()) out.hits = std::move(it->second);
  out.count = out.hits.size();
  return out;
}

struct SameLengthWitness {
  long long i = 0;
  DimVector seed;  // quasi-simple X
  NodeCoord node_s;  // X_s
  DimVector dim_s;
  NodeCoord node_r;  // (tau^i X)_r
  DimVector dim_r;
  Integer length;
  /// Whether the closed-form sufficient window for i holds (only defined for
  /// r odd and s odd or even; nullopt otherwise).
  std::optional<bool> inequality_window;
};

namespace detail {

// |X_r| as u c + v d for the quasi-simple X = (c, d) Phi^shift.
inline std::pair<Integer, Integer> layer_length_coeffs(int n, std::size_t r, long long shift) {
  auto& seq = thread_cache(n);
  // (a, b) = (c, d) Phi^shift as linear forms in (c, d).
  Integer ac = 1, ad = 0, bc = 0, bd = 1;
  if (shift > 0) {
    const auto k = static_cast<std::size_t>(2 * shift);
    ac = seq.a(k + 1);
    ad = -seq.a(k);
    bc = seq.a(k);
    bd = -seq.a(k - 1);
  } else if (shift < 0) {
    throw InvalidParameter("layer_length_coeffs: negative shift");
  }
  const Integer ar = seq.a(r);
  if (r % 2 == 1) return {ar * (ac + bc), ar * (ad + bd)};
  // A_r (b + n b - a)
  return {ar * ((n + 1) * bc - ac), ar * ((n + 1) * bd - ad)};
}

inline std::optional<bool> samelength_window(int n, std::size_t r, std::size_t s, long long i) {
  if (r % 2 == 0) return std::nullopt;
  auto& seq = thread_cache(n);
  const auto k = static_cast<std::size_t>(2 * i);
  const Integer ar = seq.a(r), as = seq.a(s);
  const Integer lower = seq.a(k) - seq.a(k - 2);
  const Integer upper = seq.a(k + 2) - seq.a(k);
  if (s % 2 == 1)  // A_{2i} - A_{2i-2} <= n A_s / A_r <= A_{2i+2} - A_{2i}
    return lower * ar <= n * as && n * as <= upper * ar;
  // (n^2-2) A_s / A_r >= A_{2i} - A_{2i-2} and 2 A_s / A_r <= A_{2i+2} - A_{2i}
  return (n * n - 2) * as >= lower * ar && 2 * as <= upper * ar;
}

}  // namespace detail

/// Searches i = 1..max_i for quasi-simples X with |X_s| = |(tau^i X)_r|.
/// For each i the length equation is linear in dim X = (c, d); its positive
/// primitive solution is taken as the seed. Witnesses are kept only after an
/// independent recomputation of both node dimensions.
inline std::vector<SameLengthWitness> samelength_pair_search(int n, std::size_t r, std::size_t s,
                                                             long long max_i) {
  require_wild(n);
  if (r < 1 || s < 1) throw InvalidParameter("quasi-lengths must be >= 1");
  std::vector<SameLengthWitness> out;
  const auto [u1, v1] = detail::layer_length_coeffs(n, s, 0);
  for (long long i = 1; i <= max_i; ++i) {
    const auto [u2, v2] = detail::layer_length_coeffs(n, r, i);
    // u1 c + v1 d = u2 c + v2 d  =>  (c, d) ~ (v1 - v2, u2 - u1)
    Integer c = v1 - v2, d = u2 - u1;
    if (c <= 0 && d <= 0) {
      c = -c;
      d = -d;
    }
    if (c <= 0 || d <= 0) continue;
    const Integer g = gcd(c, d);
    c /= g;
    d /= g;
    const DimVector seed_dim{c, d};
    if (!is_imaginary(n, seed_dim)) continue;
    const ComponentSeed seed(n, seed_dim);
    SameLengthWitness w;
    w.i = i;
    w.seed = seed_dim;
    w.node_s = layer_coord(static_cast<long long>(s));
    w.node_r = layer_coord(static_cast<long long>(r), i);
    w.dim_s = node_dim(seed, w.node_s);
    w.dim_r = node_dim(seed, w.node_r);
    if (w.dim_s.length() != w.dim_r.length() || w.node_s == w.node_r) continue;
    w.length = w.dim_s.length();
    w.inequality_window = detail::samelength_window(n, r, s, i);
    out.push_back(std::move(w));
  }
  return out;
}

enum class SymmetricShape { Square, TopHeavy, BottomHeavy };  // (m,m), (m,(n-1)m), ((n-1)m,m)

struct SymmetricQuasiSimple {
  long long shift = 0;
  DimVector dim;
  SymmetricShape shape;
};

inline std::optional<SymmetricShape> symmetric_shape(int n, const DimVector& v) {
  if (v.a == v.b) return SymmetricShape::Square;
  if (v.b == (n - 1) * v.a) return SymmetricShape::TopHeavy;
  if (v.a == (n - 1) * v.b) return SymmetricShape::BottomHeavy;
  return std::nullopt;
}

/// First shift in 0, -1, 1, -2, 2, ..., +-window whose orbit element has shape
/// (m,m), (m,(n-1)m) or ((n-1)m,m). The last two always occur together at
/// adjacent shifts: ((n-1)m, m) Phi^-1 = (m, (n-1)m).
inline std::optional<SymmetricQuasiSimple> find_symmetric_quasisimple(const ComponentSeed& seed, long long window) {
  Orbit orbit(seed.n, seed.qs_dim);
  for (long long k = 0; k <= window; ++k)
    for (long long i : {-k, k}) {
      if (auto shape = symmetric_shape(seed.n, orbit.at(i))) return SymmetricQuasiSimple{i, orbit.at(i), *shape};
      if (k == 0) break;
    }
  return std::nullopt;
}

struct OrbitPair {
  NodeCoord first;
  NodeCoord second;
  Integer length;
};

/// All pairs of distinct nodes with the same quasi-length r <= max_r, quasi-top
/// shifts in [-window, window], and equal lengths. Ordered by (r, i, j), i < j.
inline std::vector<OrbitPair> same_orbit_samelength(const ComponentSeed& seed, long long window, long long max_r) {
  Orbit orbit(seed.n, seed.qs_dim);
  std::vector<OrbitPair> out;
  for (long long r = 1; r <= max_r; ++r) {
    std::vector<Integer> lengths;
    for (long long i = -window; i <= window; ++i) {
      Integer len = 0;
      for (long long l = 0; l < r; ++l) len += orbit.length(i + l);
      lengths.push_back(std::move(len));
    }
    for (std::size_t x = 0; x < lengths.size(); ++x)
      for (std::size_t y = x + 1; y < lengths.size(); ++y)
        if (lengths[x] == lengths[y])
          out.push_back({{static_cast<long long>(x) - window, r}, {static_cast<long long>(y) - window, r}, lengths[x]});
  }
  return out;
}

struct SymmetricLayer {
  DimVector quasi_top;
  Integer m;
};

/// Quasi-top b (B_{2r-1}, B_{2r+1}) and m = b A_{r+1}: the [r+1]-node on this
/// quasi-top has dimension (m, m).
inline SymmetricLayer symmetric_layer_dim(int n, std::size_t r, const Integer& b) {
  require_wild(n);
  if (r < 1 || b < 1) throw InvalidParameter("symmetric_layer_dim needs r >= 1 and b >= 1");
  auto& seq = thread_cache(n);
  return {b * DimVector{seq.b(2 * r - 1), seq.b(2 * r + 1)}, b * seq.a(r + 1)};
}

/// Quasi-top b (B_{2r-3}, B_{2r-1}) ((b, b) for r = 1) and m = b A_{r+1}: the
/// [r+1]-node on this quasi-top has dimension (m (n-1), m).
inline SymmetricLayer skew_layer_dim(int n, std::size_t r, const Integer& b) {
  require_wild(n);
  if (r < 1 || b < 1) throw InvalidParameter("skew_layer_dim needs r >= 1 and b >= 1");
  auto& seq = thread_cache(n);
  DimVector top = r == 1 ? DimVector{1, 1} : DimVector{seq.b(2 * r - 3), seq.b(2 * r - 1)};
  return {b * top, b * seq.a(r + 1)};
}

/// Whether the two components have the same set of dimension vectors, i.e.
/// whether seed_d lies on the Phi-orbit of seed_c.
inline bool dimset_equal(const ComponentSeed& seed_c, const ComponentSeed& seed_d) {
  if (seed_c.n != seed_d.n) throw InvalidParameter("dimset_equal: seeds for different quivers");
  Orbit orbit(seed_c.n, seed_c.qs_dim);
  const OrbitMinimum minimum = detail::orbit_minimum(orbit);
  const Integer target = seed_d.qs_dim.length();
  const detail::ShiftWindow w = detail::window_upto(orbit, minimum.shift, target);
  for (long long i = w.lo; i <= w.hi; ++i)
    if (orbit.at(i) == seed_d.qs_dim) return true;
  return false;
}

}  // namespace kronecker
