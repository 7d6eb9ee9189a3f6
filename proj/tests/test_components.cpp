#include <catch_amalgamated.hpp>

#include <map>
#include <set>

#include "kronecker/components.hpp"

using namespace kronecker;

namespace {

// Every node with shift in [-window, window] and r <= max_r, by explicit
// Phi powers, no window reasoning.
std::map<Integer, std::set<std::pair<long long, long long>>> brute_census(int n, const DimVector& v, long long window,
                                                                          long long max_r, const Integer& bound) {
  std::map<Integer, std::set<std::pair<long long, long long>>> out;
  for (long long i = -window; i <= window; ++i)
    for (long long r = 1; r <= max_r; ++r) {
      DimVector total;
      for (long long l = 0; l < r; ++l) total = total + coxeter_apply(n, v, i + l);
      if (total.length() <= bound) out[total.length()].insert({i, r});
    }
  return out;
}

}  // namespace

TEST_CASE("node dimensions") {
  const ComponentSeed s(3, {8, 7});
  CHECK(node_dim(s, {-1, 2}) == DimVector{21, 39});
  CHECK(node_dim(s, {1, 1}) == DimVector{43, 17});
  CHECK(node_dim(s, {0, 1}) == DimVector{8, 7});
  CHECK(node_dim(s, layer_coord(2)) == DimVector{21, 39});
  CHECK(node_dim(ComponentSeed(3, {41, 79}), layer_coord(2)) == DimVector{237, 588});
  CHECK(node_dim(ComponentSeed(3, {41, 79}), layer_coord(1, 2)) == DimVector{596, 229});
  CHECK_THROWS_AS(node_dim(s, {0, 0}), InvalidParameter);
  CHECK_THROWS_AS(ComponentSeed(3, {3, 8}), InvalidParameter);
}

TEST_CASE("layer formula: X_r = A_r X (r odd), A_r (b, nb-a) (r even)") {
  for (int n = 3; n <= 5; ++n)
    for (long long a = 1; a <= 9; ++a)
      for (long long b = 1; b <= 9; ++b) {
        if (!is_imaginary(n, {a, b})) continue;
        const ComponentSeed s(n, {a, b});
        for (long long r = 1; r <= 7; ++r) {
          const Integer ar = a_seq(n, static_cast<std::size_t>(r));
          const DimVector expected = r % 2 ? ar * DimVector{a, b} : ar * DimVector{b, n * b - a};
          CHECK(node_dim(s, layer_coord(r)) == expected);
        }
      }
}

TEST_CASE("mesh additivity") {
  const ComponentSeed s(3, {8, 7});
  CHECK(node_dim(s, {0, 2}) == DimVector{51, 24});
  CHECK(node_dim(s, {1, 2}) == DimVector{336, 129});
  CHECK(DimVector{51, 24} + DimVector{336, 129} == node_dim(s, {0, 3}) + node_dim(s, {1, 1}));
  for (int n = 3; n <= 5; ++n)
    for (const DimVector v : {DimVector{1, 1}, DimVector{8, 7}, DimVector{2, 5}, DimVector{4, 3}}) {
      if (!is_imaginary(n, v)) continue;
      const ComponentSeed seed(n, v);
      for (long long i = -5; i <= 5; ++i)
        for (long long r = 1; r <= 5; ++r) {
          const DimVector lower = r > 1 ? node_dim(seed, {i + 1, r - 1}) : DimVector{};
          CHECK(node_dim(seed, {i, r}) + node_dim(seed, {i + 1, r}) == node_dim(seed, {i, r + 1}) + lower);
        }
    }
}

TEST_CASE("orbit minimum") {
  auto m = min_orbit_length(3, {43, 17});
  CHECK(m.shift == -1);
  CHECK(m.dim == DimVector{8, 7});
  m = min_orbit_length(3, {1, 1});
  CHECK(m.shift == 0);
  CHECK(m.dim == DimVector{1, 1});
  m = min_orbit_length(3, {13, 32});
  CHECK(m.shift == 1);
  CHECK(m.dim == DimVector{8, 7});
  // Tie between (1,2) and (2,1): the smaller vector wins from either side.
  CHECK(min_orbit_length(3, {2, 1}).dim == DimVector{1, 2});
  CHECK(min_orbit_length(3, {1, 2}).dim == DimVector{1, 2});
  CHECK(min_orbit_length(3, {2, 1}).shift == -1);
}

TEST_CASE("census examples") {
  auto c = length_census(ComponentSeed(3, {8, 7}), 60);
  REQUIRE(c.count == 2);
  CHECK(c.hits[0].coord == NodeCoord{1, 1});
  CHECK(c.hits[0].dim == DimVector{43, 17});
  CHECK(c.hits[1].coord == NodeCoord{-1, 2});
  CHECK(c.hits[1].dim == DimVector{21, 39});

  c = length_census(ComponentSeed(3, {8, 7}), 15);
  REQUIRE(c.count == 1);
  CHECK(c.hits[0].coord == NodeCoord{0, 1});

  c = length_census(ComponentSeed(3, {1, 1}), 7);
  REQUIRE(c.count == 2);
  CHECK(c.hits[0].coord == NodeCoord{-1, 1});
  CHECK(c.hits[0].dim == DimVector{2, 5});
  CHECK(c.hits[1].coord == NodeCoord{1, 1});
  CHECK(c.hits[1].dim == DimVector{5, 2});

  CHECK(length_census(ComponentSeed(3, {8, 7}), 14).count == 0);
  CHECK_THROWS_AS(length_census(ComponentSeed(3, {8, 7}), 0), InvalidParameter);
}

TEST_CASE("census matches brute force on small seeds") {
  const Integer bound = 120;
  for (long long a = 1; a <= 6; ++a)
    for (long long b = 1; b <= 6; ++b) {
      if (!is_imaginary(3, {a, b})) continue;
      const auto fast = length_census_upto(ComponentSeed(3, {a, b}), bound);
      const auto slow = brute_census(3, {a, b}, 12, 60, bound);
      REQUIRE(fast.size() == slow.size());
      for (const auto& [len, coords] : slow) {
        REQUIRE(fast.count(len) == 1);
        std::set<std::pair<long long, long long>> got;
        for (const auto& h : fast.at(len)) got.insert({h.coord.i, h.coord.r});
        CHECK(got == coords);
        CHECK(coords.size() <= 2);
      }
    }
}

TEST_CASE("at most two nodes of any length, n = 3..5") {
  std::size_t twos = 0;
  for (int n = 3; n <= 5; ++n)
    for (long long a = 1; a <= 8; ++a)
      for (long long b = 1; b <= 8; ++b) {
        if (!is_imaginary(n, {a, b})) continue;
        for (const auto& [len, hits] : length_census_upto(ComponentSeed(n, {a, b}), 400)) {
          CHECK(hits.size() <= 2);
          twos += hits.size() == 2;
        }
      }
  CHECK(twos > 0);
}

TEST_CASE("samelength: worked example") {
  const auto w = samelength_pair_search(3, 1, 2, 2);
  REQUIRE(w.size() == 2);
  CHECK(w[0].i == 1);
  CHECK(w[0].seed == DimVector{8, 7});
  CHECK(w[0].dim_s == DimVector{21, 39});
  CHECK(w[0].dim_r == DimVector{43, 17});
  CHECK(w[0].length == 60);
  CHECK(w[1].i == 2);
  CHECK(w[1].seed == DimVector{41, 79});
  CHECK(w[1].dim_s == DimVector{237, 588});
  CHECK(w[1].dim_r == DimVector{596, 229});
  CHECK(w[1].length == 825);
  // Both satisfy the sufficient window (n^2-2) A_s / A_r >= A_{2i} - A_{2i-2}.
  CHECK(w[0].inequality_window == std::optional<bool>(true));
  CHECK(w[1].inequality_window == std::optional<bool>(true));
}

TEST_CASE("samelength: r = s = 1 around the symmetric seed (1,1)") {
  const auto w = samelength_pair_search(3, 1, 1, 2);
  REQUIRE(w.size() == 2);
  // i = 2: seed (2,5) = (1,1) Phi^-1, so the nodes are (1,1) Phi^-1 and (1,1) Phi.
  CHECK(w[1].seed == DimVector{2, 5});
  CHECK(coxeter_apply(3, {1, 1}, -1) == w[1].seed);
  CHECK(w[1].dim_s == DimVector{2, 5});
  CHECK(w[1].dim_r == DimVector{5, 2});
  CHECK(w[1].length == 7);
  CHECK(w[0].seed == DimVector{1, 2});
  CHECK(w[0].length == 3);
}

TEST_CASE("samelength witnesses recompute for all small parities") {
  for (int n = 3; n <= 5; ++n)
    for (std::size_t r = 1; r <= 5; ++r)
      for (std::size_t s = r; s <= 5; ++s) {
        const auto found = samelength_pair_search(n, r, s, 6);
        CHECK(!found.empty());
        for (const auto& w : found) {
          const ComponentSeed seed(n, w.seed);
          CHECK(node_dim(seed, w.node_s).length() == node_dim(seed, w.node_r).length());
          CHECK(w.node_s.r == static_cast<long long>(s));
          CHECK(w.node_r.r == static_cast<long long>(r));
          CHECK(gcd(w.seed.a, w.seed.b) == 1);
        }
      }
}

TEST_CASE("symmetric quasi-simples") {
  auto f = find_symmetric_quasisimple(ComponentSeed(3, {1, 1}), 4);
  REQUIRE(f);
  CHECK(f->shift == 0);
  CHECK(f->shape == SymmetricShape::Square);
  f = find_symmetric_quasisimple(ComponentSeed(3, {2, 1}), 4);
  REQUIRE(f);
  CHECK(f->shift == 0);
  CHECK(f->dim == DimVector{2, 1});
  f = find_symmetric_quasisimple(ComponentSeed(3, {13, 32}), 4);
  CHECK(!f);
  f = find_symmetric_quasisimple(ComponentSeed(3, {5, 2}), 4);
  REQUIRE(f);
  CHECK(f->shift == -1);
  CHECK(!find_symmetric_quasisimple(ComponentSeed(3, {8, 7}), 6));
}

TEST_CASE("same-orbit equal lengths") {
  auto p = same_orbit_samelength(ComponentSeed(3, {1, 1}), 2, 1);
  REQUIRE(p.size() == 2);
  CHECK(p[0].first == NodeCoord{-2, 1});
  CHECK(p[0].second == NodeCoord{2, 1});
  CHECK(p[1].first == NodeCoord{-1, 1});
  CHECK(p[1].second == NodeCoord{1, 1});
  CHECK(p[1].length == 7);
  CHECK(same_orbit_samelength(ComponentSeed(3, {8, 7}), 4, 4).empty());
  p = same_orbit_samelength(ComponentSeed(3, {2, 1}), 1, 1);
  REQUIRE(p.size() == 1);
  CHECK(p[0].first == NodeCoord{-1, 1});
  CHECK(p[0].second == NodeCoord{0, 1});
  CHECK(p[0].length == 3);
}

TEST_CASE("pairs in a window iff a symmetric quasi-simple") {
  for (int n = 3; n <= 4; ++n)
    for (long long a = 1; a <= 10; ++a)
      for (long long b = 1; b <= 10; ++b) {
        if (!is_imaginary(n, {a, b})) continue;
        const ComponentSeed seed(n, {a, b});
        const bool sym = find_symmetric_quasisimple(seed, 5).has_value();
        const bool pairs = !same_orbit_samelength(seed, 6, 3).empty();
        if (sym) CHECK(pairs);
        // Pairs inside |i| <= 5 put the reflection centre inside |c| <= 5.
        if (!same_orbit_samelength(seed, 5, 1).empty()) CHECK(find_symmetric_quasisimple(seed, 5).has_value());
      }
}

TEST_CASE("(m,m) and (m(n-1),m) layers") {
  auto l = symmetric_layer_dim(3, 1, 1);
  CHECK(l.quasi_top == DimVector{1, 2});
  CHECK(l.m == 3);
  CHECK(node_dim(ComponentSeed(3, l.quasi_top), {0, 2}) == DimVector{3, 3});
  for (int n = 3; n <= 8; ++n) CHECK(symmetric_layer_dim(n, 1, 1).quasi_top == DimVector{1, n - 1});
  l = symmetric_layer_dim(3, 2, 1);
  CHECK(l.quasi_top == DimVector{2, 5});
  CHECK(l.m == 8);
  CHECK(node_dim(ComponentSeed(3, l.quasi_top), {0, 3}) == DimVector{8, 8});
  for (int n = 3; n <= 6; ++n)
    for (std::size_t r = 1; r <= 6; ++r)
      for (long long b = 1; b <= 3; ++b) {
        const auto sym = symmetric_layer_dim(n, r, b);
        CHECK(node_dim(ComponentSeed(n, sym.quasi_top), {0, static_cast<long long>(r) + 1}) ==
              DimVector{sym.m, sym.m});
        const auto skew = skew_layer_dim(n, r, b);
        CHECK(node_dim(ComponentSeed(n, skew.quasi_top), {0, static_cast<long long>(r) + 1}) ==
              DimVector{skew.m * (n - 1), skew.m});
      }
}

TEST_CASE("dimension sets of components") {
  CHECK(dimset_equal(ComponentSeed(3, {8, 7}), ComponentSeed(3, {43, 17})));
  CHECK(dimset_equal(ComponentSeed(3, {8, 7}), ComponentSeed(3, {8, 7})));
  CHECK(!dimset_equal(ComponentSeed(3, {8, 7}), ComponentSeed(3, {7, 8})));
  CHECK(dimset_equal(ComponentSeed(3, {43, 17}), ComponentSeed(3, {13, 32})));
  CHECK_THROWS_AS(dimset_equal(ComponentSeed(3, {8, 7}), ComponentSeed(4, {8, 7})), InvalidParameter);
  for (long long a = 1; a <= 9; ++a)
    for (long long b = 1; b <= 9; ++b)
      for (long long c = 1; c <= 9; ++c)
        for (long long d = 1; d <= 9; ++d) {
          if (!is_imaginary(3, {a, b}) || !is_imaginary(3, {c, d})) continue;
          CHECK(dimset_equal(ComponentSeed(3, {a, b}), ComponentSeed(3, {c, d})) ==
                (min_orbit_length(3, {a, b}).dim == min_orbit_length(3, {c, d}).dim));
        }
}

TEST_CASE("huge seeds stay exact") {
  const DimVector far = coxeter_apply(3, {8, 7}, 40);
  CHECK(far.a.str().size() > 30);
  CHECK(min_orbit_length(3, far).dim == DimVector{8, 7});
  CHECK(min_orbit_length(3, far).shift == -40);
  CHECK(dimset_equal(ComponentSeed(3, {8, 7}), ComponentSeed(3, far)));
}
