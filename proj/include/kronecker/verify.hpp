#pragma once

// Verification suites behind `kronecker verify`. Each returns a Report whose
// failures list the exact inputs of every broken case in scan order.

#include <chrono>
#include <cstddef>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "kronecker/bricks.hpp"
#include "kronecker/components.hpp"
#include "kronecker/report.hpp"
#include "kronecker/reps.hpp"
#include "kronecker/roots.hpp"
#include "kronecker/sequences.hpp"

namespace kronecker {

struct VerifyBounds {
  int n_lo = 3;
  int n_hi = 3;
  std::size_t upto = 25;         // sequence index bound
  std::size_t tuple_bound = 8;   // index bound of the 5-tuple ratio scan
  long long sum_bound = 40;      // a+b bound for bricks and root scans
  long long ql_sum_bound = 60;   // a+b bound for the quasi-length round trip
  long long functor_sum_bound = 20;  // a+b bound for reflection-functor checks
  std::size_t ar_samples = 50;   // sampled brick pairs for the AR formula
  long long seed_bound = 8;      // entry bound for component seeds
  long long length_bound = 200;  // census length bound
  long long max_i = 6;           // samelength search depth
  long long max_ql = 4;          // quasi-lengths r, s scanned by the pairs suite
  long long window = 6;          // tau-shift window for orbit scans
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"identities", "inequalities", "bricks", "beta", "pairs", "dimset"};
  return names;
}

namespace detail {

inline std::string nv(int n, const DimVector& v) { return "n=" + std::to_string(n) + " v=" + to_string(v); }

/// Imaginary roots with 2 <= a+b <= bound, ordered by a+b then a.
inline std::vector<DimVector> imaginary_roots_upto(int n, long long bound) {
  std::vector<DimVector> out;
  for (long long s = 2; s <= bound; ++s)
    for (long long a = 1; a < s; ++a) {
      DimVector v{a, s - a};
      if (is_imaginary(n, v)) out.push_back(std::move(v));
    }
  return out;
}

inline std::vector<DimVector> imaginary_seeds(int n, long long entry_bound) {
  std::vector<DimVector> out;
  for (long long a = 1; a <= entry_bound; ++a)
    for (long long b = 1; b <= entry_bound; ++b) {
      DimVector v{a, b};
      if (is_imaginary(n, v)) out.push_back(std::move(v));
    }
  return out;
}

inline Report timed(const std::string& suite, const std::function<void(Report&)>& body) {
  Report report;
  report.suite = suite;
  const auto start = std::chrono::steady_clock::now();
  body(report);
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace detail

inline Report verify_identities_suite(const VerifyBounds& bounds) {
  return detail::timed("identities", [&](Report& report) {
    report.merge(verify_identities(bounds.n_lo, bounds.n_hi, bounds.upto));
  });
}

/// Sequence inequalities, the ratio comparisons along a Coxeter orbit, and
/// the equal-length shift lemma |(a,b)Phi| = |(c,d)Phi^-1|.
inline Report verify_inequalities_suite(const VerifyBounds& bounds) {
  return detail::timed("inequalities", [&](Report& report) {
    report.merge(verify_inequalities(bounds.n_lo, bounds.n_hi, bounds.upto, bounds.tuple_bound));
    std::size_t shift_instances = 0;
    for (int n = bounds.n_lo; n <= bounds.n_hi; ++n) {
      for (const auto& v : detail::imaginary_roots_upto(n, bounds.sum_bound)) {
        report.check(compare_ratios_hold(n, v), "d/c > (nb-a)/b > b/a for (c,d) = (a,b)Phi^-1", detail::nv(n, v));
        // b/a < (dim X_2)_2/(dim X_2)_1 < (dim tau^-1 X)_2/(dim tau^-1 X)_1
        const DimVector x2 = v + detail::phi_inverse(n, v);
        const DimVector up = detail::phi_inverse(n, v);
        report.check(x2.b * v.a > v.b * x2.a && up.b * x2.a > x2.b * up.a, "slopes of X, X_2, tau^-1 X increase",
                     detail::nv(n, v), "increasing", to_string(v) + " " + to_string(x2) + " " + to_string(up));
      }
      // Equal-length pairs on one orbit, as they occur in components.
      for (const auto& seed : detail::imaginary_seeds(n, bounds.seed_bound)) {
        Orbit orbit(n, seed);
        for (long long i = -bounds.window; i <= bounds.window; ++i)
          for (long long j = i + 1; j <= bounds.window; ++j)
            if (orbit.length(i) == orbit.length(j)) {
              ++shift_instances;
              report.check(shifted_sums_agree(n, orbit.at(i), j - i), "a'+b' = c'+d' for equal-length orbit pair",
                           detail::nv(n, orbit.at(i)) + " power=" + std::to_string(j - i));
            }
      }
      // The lemma needs no positivity: scan small integer vectors as well.
      for (long long a = -bounds.seed_bound; a <= bounds.seed_bound; ++a)
        for (long long b = -bounds.seed_bound; b <= bounds.seed_bound; ++b)
          for (long long p = 1; p <= 4; ++p) {
            const DimVector v{a, b};
            if (coxeter_apply(n, v, p).length() != v.length()) continue;
            ++shift_instances;
            report.check(shifted_sums_agree(n, v, p), "a'+b' = c'+d' for (c,d) = (a,b)Phi^i",
                         detail::nv(n, v) + " power=" + std::to_string(p));
          }
    }
    report.stats["equal_length_shift_instances"] = std::to_string(shift_instances);
  });
}

/// Brick construction for every imaginary root up to the sum bound, the
/// quasi-length round trip, and the reflection-functor contract.
inline Report verify_bricks_suite(const VerifyBounds& bounds) {
  return detail::timed("bricks", [&](Report& report) {
    std::size_t built = 0, image_checks_skipped = 0;
    for (int n = bounds.n_lo; n <= bounds.n_hi; ++n) {
      std::vector<BrickCertificate> small;
      std::set<DimVector> built_roots;
      for (const auto& v : detail::imaginary_roots_upto(n, bounds.sum_bound)) {
        try {
          BrickCertificate cert = construct_brick(n, v);
          ++built;
          built_roots.insert(v);
          const std::size_t e = end_dim(cert.rep);
          report.check(cert.rep.dim() == v && e == 1, "construct_brick gives a brick of the requested dimension",
                       detail::nv(n, v), "dim " + to_string(v) + " end_dim 1",
                       "dim " + to_string(cert.rep.dim()) + " end_dim " + std::to_string(e));
          if (v.length() <= bounds.functor_sum_bound) small.push_back(std::move(cert));
        } catch (const ConstructionError& e) {
          report.check(false, "construct_brick", detail::nv(n, v), "brick", e.what());
        }
      }

      for (const auto& root : detail::imaginary_roots_upto(n, bounds.ql_sum_bound))
        for (std::size_t r : quasi_length_options(n, root)) {
          const QuasiLengthLayer layer = indecomposable_dim_for_quasilength(n, root, r);
          const std::string in = detail::nv(n, root) + " r=" + std::to_string(r);
          report.check(is_imaginary(n, layer.seed), "stripped seed is imaginary", in, "Imaginary",
                       to_string(classify(n, layer.seed).tag));
          const ComponentSeed realizing(n, layer.realizing_seed);
          report.check(node_dim(realizing, layer_coord(static_cast<long long>(r))) == root,
                       "X_r over the realizing seed has dimension root", in, to_string(root),
                       to_string(node_dim(realizing, layer_coord(static_cast<long long>(r)))));
          const ComponentSeed stripped(n, layer.seed);
          report.check(node_dim(stripped, layer_coord(static_cast<long long>(r))) == layer.layer_dim,
                       "layer formula matches the orbit sum", in, to_string(layer.layer_dim),
                       to_string(node_dim(stripped, layer_coord(static_cast<long long>(r)))));
          if (r % 2 == 1)
            report.check(layer.layer_dim == root, "odd quasi-length layer reproduces the root", in, to_string(root),
                         to_string(layer.layer_dim));
          if (built_roots.contains(layer.seed)) continue;
          try {
            report.check(construct_brick(n, layer.seed).end_dim == 1, "brick on the stripped seed", in);
          } catch (const ConstructionError& e) {
            report.check(false, "brick on the stripped seed", in, "brick", e.what());
          }
          built_roots.insert(layer.seed);
        }

      for (const auto& cert : small) {
        const std::string in = detail::nv(n, cert.root);
        try {
          const Rep up = coxeter_plus(cert.rep);
          report.check(up.dim() == detail::phi(n, cert.root), "dim coxeter_plus B = dim B Phi", in,
                       to_string(detail::phi(n, cert.root)), to_string(up.dim()));
          const Rep back = coxeter_minus(up);
          report.check(back.dim() == cert.root, "coxeter_minus undoes coxeter_plus on dimensions", in,
                       to_string(cert.root), to_string(back.dim()));
          const std::size_t e = end_dim(back), h = hom_dim(back, cert.rep).dimension;
          report.check(e == 1 && h == 1, "coxeter_minus(coxeter_plus B) is a brick isomorphic to B", in,
                       "end 1 hom 1", "end " + std::to_string(e) + " hom " + std::to_string(h));
          try {
            report.check(end_dim(up) == 1, "coxeter_plus B is a brick", in);
          } catch (const ResourceLimit&) {
            ++image_checks_skipped;
          }
        } catch (const DimensionContractError& e) {
          report.check(false, "reflection functor dimension contract", in, "", e.what());
        }
      }

      // hom(M,N) - <dim M, dim N> = hom(N, tau M) on sampled brick pairs.
      if (!small.empty()) {
        std::mt19937_64 rng(0x6b726f6eULL + static_cast<unsigned>(n));
        std::uniform_int_distribution<std::size_t> pick(0, small.size() - 1);
        for (std::size_t k = 0; k < bounds.ar_samples; ++k) {
          const auto& m = small[pick(rng)];
          const auto& x = small[pick(rng)];
          const std::string in = detail::nv(n, m.root) + " w=" + to_string(x.root);
          const Integer lhs = Integer(hom_dim(m.rep, x.rep).dimension) - euler_form(n, m.root, x.root);
          const Integer rhs = Integer(hom_dim(x.rep, coxeter_plus(m.rep)).dimension);
          report.check(lhs == rhs, "hom(M,N) - <M,N> = hom(N, tau M)", in, rhs.str(), lhs.str());
        }
      }
    }
    report.stats["bricks_built"] = std::to_string(built);
    report.stats["tau_image_brick_checks_over_budget"] = std::to_string(image_checks_skipped);
  });
}

/// Length census over all small seeds: at most two nodes of any length, with
/// the equal-length shift lemma on every same-orbit hit pair.
inline Report verify_beta_suite(const VerifyBounds& bounds) {
  return detail::timed("beta", [&](Report& report) {
    std::size_t max_count = 0;
    std::size_t twos = 0;
    for (int n = bounds.n_lo; n <= bounds.n_hi; ++n)
      for (const auto& v : detail::imaginary_seeds(n, bounds.seed_bound)) {
        const ComponentSeed seed(n, v);
        try {
          const auto census = length_census_upto(seed, bounds.length_bound);
          for (const auto& [len, hits] : census) {
            report.check(hits.size() <= 2, "at most two nodes of each length", detail::nv(n, v) + " d=" + len.str(),
                         "<= 2", std::to_string(hits.size()));
            max_count = std::max(max_count, hits.size());
            if (hits.size() == 2) {
              ++twos;
              if (hits[0].coord.r == hits[1].coord.r)
                report.check(shifted_sums_agree(n, hits[0].dim, hits[1].coord.i - hits[0].coord.i),
                             "a'+b' = c'+d' on a same-orbit census pair", detail::nv(n, v) + " d=" + len.str());
            }
          }
        } catch (const TheoremViolation& e) {
          report.check(false, "at most two nodes of each length", detail::nv(n, v), "<= 2", e.what());
        }
      }
    if (bounds.n_lo <= 3 && 3 <= bounds.n_hi && bounds.length_bound >= 60) {
      const auto hit = length_census(ComponentSeed(3, {8, 7}), 60);
      report.check(hit.count == 2, "count 2 exhibited at seed (8,7), d=60", "n=3 seed=(8,7) d=60", "2",
                   std::to_string(hit.count));
    }
    report.stats["max_count"] = std::to_string(max_count);
    report.stats["lengths_with_two_nodes"] = std::to_string(twos);
  });
}

/// Same-length pairs across quasi-lengths, same-orbit pairs versus symmetric
/// quasi-simples, and the (m,m) / (m(n-1),m) layer formulas.
inline Report verify_pairs_suite(const VerifyBounds& bounds) {
  return detail::timed("pairs", [&](Report& report) {
    std::size_t witnesses = 0;
    for (int n = bounds.n_lo; n <= bounds.n_hi; ++n) {
      for (long long r = 1; r <= bounds.max_ql; ++r)
        for (long long s = r; s <= bounds.max_ql; ++s) {
          const auto found = samelength_pair_search(n, static_cast<std::size_t>(r), static_cast<std::size_t>(s),
                                                    bounds.max_i);
          const std::string in = "n=" + std::to_string(n) + " r=" + std::to_string(r) + " s=" + std::to_string(s);
          report.check(!found.empty(), "some component has same-length nodes of quasi-lengths r and s", in,
                       "witness with i <= " + std::to_string(bounds.max_i), "none");
          for (const auto& w : found) {
            ++witnesses;
            const ComponentSeed seed(n, w.seed);
            const bool ok = node_dim(seed, w.node_s) == w.dim_s && node_dim(seed, w.node_r) == w.dim_r &&
                            w.dim_s.length() == w.dim_r.length() && is_imaginary(n, w.seed);
            report.check(ok, "samelength witness recomputes", in + " i=" + std::to_string(w.i));
          }
        }

      for (const auto& v : detail::imaginary_seeds(n, bounds.seed_bound)) {
        const ComponentSeed seed(n, v);
        const auto sym = find_symmetric_quasisimple(seed, bounds.window);
        const auto pairs = same_orbit_samelength(seed, bounds.window + 1, bounds.max_ql);
        if (sym)
          report.check(!pairs.empty(), "symmetric quasi-simple gives an equal-length pair", detail::nv(n, v),
                       "pair", "none");
        for (const auto& p : pairs) {
          // Equal lengths in one tau-orbit force the reflection centre
          // (i + j + r - 1) / 2 of the orbit to carry a symmetric vector.
          const long long twice = p.first.i + p.second.i + p.first.r - 1;
          const long long lo = twice >= 0 ? twice / 2 : -((1 - twice) / 2);
          const long long hi = lo + (twice - 2 * lo);
          Orbit orbit(n, v);
          const bool centred = symmetric_shape(n, orbit.at(lo)) || symmetric_shape(n, orbit.at(hi));
          report.check(centred, "equal-length pair is centred on a symmetric quasi-simple",
                       detail::nv(n, v) + " pair " + to_string(p.first) + " " + to_string(p.second));
        }
      }

      for (std::size_t r = 1; r <= 6; ++r)
        for (long long b = 1; b <= 3; ++b) {
          const auto sym = symmetric_layer_dim(n, r, b);
          const std::string in = "n=" + std::to_string(n) + " r=" + std::to_string(r) + " b=" + std::to_string(b);
          const DimVector mm{sym.m, sym.m};
          const DimVector got = node_dim(ComponentSeed(n, sym.quasi_top), {0, static_cast<long long>(r) + 1});
          report.check(got == mm, "[r+1]-node on b(B_{2r-1},B_{2r+1}) has dimension (m,m)", in, to_string(mm),
                       to_string(got));
          const auto skew = skew_layer_dim(n, r, b);
          const DimVector target{skew.m * (n - 1), skew.m};
          const DimVector got2 = node_dim(ComponentSeed(n, skew.quasi_top), {0, static_cast<long long>(r) + 1});
          report.check(got2 == target, "[r+1]-node on b(B_{2r-3},B_{2r-1}) has dimension (m(n-1),m)", in,
                       to_string(target), to_string(got2));
        }
    }
    report.stats["samelength_witnesses"] = std::to_string(witnesses);
  });
}

/// Dimension-set comparison against the orbit-minimum oracle, mesh additivity,
/// and injectivity of quasi-simple -> X_r at equal quasi-length.
inline Report verify_dimset_suite(const VerifyBounds& bounds) {
  return detail::timed("dimset", [&](Report& report) {
    for (int n = bounds.n_lo; n <= bounds.n_hi; ++n) {
      const auto seeds = detail::imaginary_seeds(n, bounds.seed_bound);
      for (const auto& c : seeds)
        for (const auto& d : seeds) {
          const bool fast = dimset_equal(ComponentSeed(n, c), ComponentSeed(n, d));
          const bool oracle = min_orbit_length(n, c).dim == min_orbit_length(n, d).dim;
          report.check(fast == oracle, "dimset_equal agrees with orbit minima", detail::nv(n, c) + " w=" + to_string(d),
                       oracle ? "true" : "false", fast ? "true" : "false");
        }
      for (const auto& v : seeds) {
        const ComponentSeed seed(n, v);
        for (long long i = -bounds.window; i <= bounds.window; ++i)
          for (long long r = 1; r <= bounds.max_ql; ++r) {
            const DimVector lhs = node_dim(seed, {i, r}) + node_dim(seed, {i + 1, r});
            const DimVector rhs = node_dim(seed, {i, r + 1}) + (r > 1 ? node_dim(seed, {i + 1, r - 1}) : DimVector{});
            report.check(lhs == rhs, "mesh additivity", detail::nv(n, v) + " node=(" + std::to_string(i) + "," +
                         std::to_string(r) + ")", to_string(lhs), to_string(rhs));
          }
      }
      // Equal X_r dimensions at equal quasi-length force equal quasi-simples.
      for (long long r = 1; r <= bounds.max_ql; ++r)
        for (std::size_t x = 0; x < seeds.size(); ++x)
          for (std::size_t y = x + 1; y < seeds.size(); ++y) {
            const DimVector dx = node_dim(ComponentSeed(n, seeds[x]), layer_coord(r));
            const DimVector dy = node_dim(ComponentSeed(n, seeds[y]), layer_coord(r));
            report.check(dx != dy, "X_r determines X", detail::nv(n, seeds[x]) + " w=" + to_string(seeds[y]) +
                         " r=" + std::to_string(r));
          }
      if (n == 3) {
        report.check(dimset_equal(ComponentSeed(3, {8, 7}), ComponentSeed(3, {43, 17})), "dimset (8,7) ~ (43,17)",
                     "n=3", "true", "false");
        report.check(!dimset_equal(ComponentSeed(3, {8, 7}), ComponentSeed(3, {7, 8})), "dimset (8,7) !~ (7,8)",
                     "n=3", "false", "true");
      }
    }
  });
}

inline Report run_suite(const std::string& name, const VerifyBounds& bounds) {
  if (name == "identities") return verify_identities_suite(bounds);
  if (name == "inequalities") return verify_inequalities_suite(bounds);
  if (name == "bricks") return verify_bricks_suite(bounds);
  if (name == "beta") return verify_beta_suite(bounds);
  if (name == "pairs") return verify_pairs_suite(bounds);
  if (name == "dimset") return verify_dimset_suite(bounds);
  throw InvalidParameter("unknown suite '" + name + "'");
}

}  // namespace kronecker
