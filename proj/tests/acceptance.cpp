// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "kronecker/kronecker.hpp"

using namespace kronecker;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

void fail(Outcome& o, const std::string& what) {
  if (o.ok) o.detail = what;
  o.ok = false;
}

void take(Outcome& o, const Report& r) {
  if (!r.ok()) {
    const auto& f = r.failures.front();
    fail(o, r.suite + ": " + std::to_string(r.failures.size()) + " failures, first " + f.check + " [" + f.inputs + "]");
  }
}

int criterion(int id, const std::string& name, double limit_seconds, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    fail(o, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (o.ok && secs > limit_seconds) fail(o, "over time limit " + std::to_string(limit_seconds) + " s");
  std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << id << ": " << name << " (" << std::fixed
            << std::setprecision(2) << secs << " s)";
  if (!o.ok) std::cout << " -- " << o.detail;
  std::cout << std::endl;
  return o.ok ? 0 : 1;
}

Outcome worked_example() {
  Outcome o;
  const auto w = samelength_pair_search(3, 1, 2, 2);
  if (w.size() != 2) {
    fail(o, "expected 2 witnesses, got " + std::to_string(w.size()));
    return o;
  }
  struct Want {
    long long i;
    DimVector seed, dim_s, dim_r;
    long long length;
  };
  const Want want[] = {{1, {8, 7}, {21, 39}, {43, 17}, 60}, {2, {41, 79}, {237, 588}, {596, 229}, 825}};
  for (std::size_t k = 0; k < 2; ++k) {
    const auto& got = w[k];
    const auto& x = want[k];
    if (got.i != x.i || got.seed != x.seed || got.dim_s != x.dim_s || got.dim_r != x.dim_r || got.length != x.length)
      fail(o, "witness i=" + std::to_string(x.i) + " got seed " + to_string(got.seed) + " dims " +
                  to_string(got.dim_s) + " " + to_string(got.dim_r) + " length " + got.length.str());
  }
  return o;
}

Outcome sequence_ground_truth() {
  Outcome o;
  // Fibonacci by plain iteration.
  std::vector<Integer> fib{0, 1};
  while (fib.size() <= 31) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
  for (std::size_t i = 0; i <= 15; ++i)
    if (a_seq(3, i) != fib[2 * i]) fail(o, "A_" + std::to_string(i) + " != F_" + std::to_string(2 * i));
  for (int n = 3; n <= 8; ++n) {
    const Integer m = n;
    const Integer table[] = {0, 1, 1, m - 1, m, m * m - m - 1, m * m - 1, m * m * m - m * m - 2 * m + 1};
    for (std::size_t i = 0; i < 8; ++i)
      if (b_seq(n, i) != table[i]) fail(o, "B_" + std::to_string(i) + " at n=" + std::to_string(n));
  }
  return o;
}

Outcome brick_suite() {
  Outcome o;
  std::size_t count = 0;
  for (const auto& [n, bound] : {std::pair{3, 40LL}, std::pair{4, 30LL}, std::pair{5, 30LL}})
    for (long long s = 2; s <= bound; ++s)
      for (long long a = 1; a < s; ++a) {
        const DimVector v{a, s - a};
        if (!is_imaginary(n, v)) continue;
        const auto cert = construct_brick(n, v);
        const auto check = detail::rational_nullspace(detail::hom_system(cert.rep, cert.rep), false);
        ++count;
        if (cert.rep.dim() != v || check.nullity != 1)
          fail(o, "n=" + std::to_string(n) + " v=" + to_string(v) + " end_dim " + std::to_string(check.nullity));
      }
  if (count == 0) fail(o, "no roots scanned");
  return o;
}

Outcome beta_bound() {
  Outcome o;
  VerifyBounds b;
  b.seed_bound = 8;
  b.length_bound = 200;
  const Report r = verify_beta_suite(b);
  take(o, r);
  if (r.stats.at("max_count") != "2") fail(o, "max_count " + r.stats.at("max_count"));
  const auto c = length_census(ComponentSeed(3, {8, 7}), 60);
  if (c.count != 2) fail(o, "seed (8,7), d=60 gives count " + std::to_string(c.count));
  return o;
}

Outcome ql_round_trip() {
  Outcome o;
  std::size_t layers = 0;
  for (long long s = 2; s <= 60; ++s)
    for (long long a = 1; a < s; ++a) {
      const DimVector v{a, s - a};
      if (!is_imaginary(3, v)) continue;
      for (std::size_t r : quasi_length_options(3, v)) {
        ++layers;
        const auto l = indecomposable_dim_for_quasilength(3, v, r);
        const std::string in = to_string(v) + " r=" + std::to_string(r);
        if (!is_imaginary(3, l.seed)) fail(o, in + " stripped seed not imaginary");
        if (construct_brick(3, l.seed).end_dim != 1) fail(o, in + " no brick on stripped seed");
        // X_r = A_r X for odd r, A_r (b, nb - a) for even r, X = stripped seed.
        const Integer ar = a_seq(3, r);
        const DimVector expected =
            r % 2 ? ar * l.seed : ar * DimVector{l.seed.b, 3 * l.seed.b - l.seed.a};
        if (l.layer_dim != expected) fail(o, in + " layer " + to_string(l.layer_dim));
        if (node_dim(ComponentSeed(3, l.seed), layer_coord(static_cast<long long>(r))) != expected)
          fail(o, in + " orbit sum disagrees with layer formula");
        if (r % 2 == 1 && l.layer_dim != v) fail(o, in + " odd layer does not reproduce the root");
        if (node_dim(ComponentSeed(3, l.realizing_seed), layer_coord(static_cast<long long>(r))) != v)
          fail(o, in + " realizing seed misses the root");
      }
    }
  if (layers == 0) fail(o, "no layers");
  return o;
}

Outcome identities() {
  Outcome o;
  VerifyBounds b;
  b.n_lo = 3;
  b.n_hi = 8;
  b.upto = 30;
  b.tuple_bound = 8;
  take(o, verify_identities_suite(b));
  take(o, verify_inequalities_suite(b));
  return o;
}

Outcome functor_contract() {
  Outcome o;
  VerifyBounds b;
  b.n_lo = 3;
  b.n_hi = 3;
  b.sum_bound = 20;
  b.ql_sum_bound = 2;
  b.functor_sum_bound = 20;
  b.ar_samples = 50;
  const Report r = verify_bricks_suite(b);
  take(o, r);
  return o;
}

Outcome dimset() {
  Outcome o;
  if (!dimset_equal(ComponentSeed(3, {8, 7}), ComponentSeed(3, {43, 17}))) fail(o, "(8,7) ~ (43,17) false");
  if (dimset_equal(ComponentSeed(3, {8, 7}), ComponentSeed(3, {7, 8}))) fail(o, "(8,7) ~ (7,8) true");
  VerifyBounds b;
  b.n_lo = 3;
  b.n_hi = 5;
  take(o, verify_dimset_suite(b));
  // mesh: (i,r) + (i+1,r) = (i,r+1) + (i+1,r-1) over a window.
  for (int n = 3; n <= 5; ++n)
    for (const auto& v : detail::imaginary_seeds(n, 6)) {
      const ComponentSeed seed(n, v);
      for (long long i = -6; i <= 6; ++i)
        for (long long r = 1; r <= 6; ++r) {
          const DimVector lower = r > 1 ? node_dim(seed, {i + 1, r - 1}) : DimVector{};
          if (node_dim(seed, {i, r}) + node_dim(seed, {i + 1, r}) != node_dim(seed, {i, r + 1}) + lower)
            fail(o, "mesh at n=" + std::to_string(n) + " seed " + to_string(v) + " node " +
                        to_string(NodeCoord{i, r}));
        }
    }
  return o;
}

}  // namespace

int main() {
  int failures = 0;
  failures += criterion(1, "worked example pairs --n 3 --r 1 --s 2 --max-i 2", 1, worked_example);
  failures += criterion(2, "A_i = F_2i and the B table", 1, sequence_ground_truth);
  failures += criterion(3, "bricks for all imaginary roots (n=3 a+b<=40, n=4,5 a+b<=30)", 300, brick_suite);
  failures += criterion(4, "at most two nodes of each length, seeds <= 8, d <= 200", 120, beta_bound);
  failures += criterion(5, "quasi-length round trip a+b <= 60", 60, ql_round_trip);
  failures += criterion(6, "identity and inequality suites n=3..8", 120, identities);
  failures += criterion(7, "reflection functor contract and AR formula", 120, functor_contract);
  failures += criterion(8, "dimension-set decision and mesh additivity", 10, dimset);
  std::cout << (failures ? "FAIL" : "PASS") << " acceptance: " << 8 - failures << "/8" << std::endl;
  return failures ? 1 : 0;
}
