#include <catch_amalgamated.hpp>

#include <random>

#include "kronecker/bricks.hpp"
#include "kronecker/reps.hpp"

using namespace kronecker;

namespace {

// dim Hom(M, N) from the dense system M_i h = g N_i, ranked by rational
// elimination of the full matrix.
std::size_t dense_hom_dim(const Rep& m, const Rep& n) {
  const std::size_t a = m.source_dim(), b = m.sink_dim(), a2 = n.source_dim(), b2 = n.sink_dim();
  const std::size_t cols = a * a2 + b * b2;
  ExactMatrix sys(static_cast<std::size_t>(m.arrows()) * a * b2, cols);
  std::size_t row = 0;
  for (int i = 0; i < m.arrows(); ++i) {
    const auto& mi = m.mat(static_cast<std::size_t>(i));
    const auto& ni = n.mat(static_cast<std::size_t>(i));
    for (std::size_t p = 0; p < a; ++p)
      for (std::size_t q = 0; q < b2; ++q, ++row) {
        for (std::size_t k = 0; k < b; ++k) sys(row, a * a2 + k * b2 + q) += mi(p, k);
        for (std::size_t l = 0; l < a2; ++l) sys(row, p * a2 + l) -= ni(l, q);
      }
  }
  return cols - rank(sys);
}

Rep random_rep(std::mt19937_64& rng, int arrows, std::size_t a, std::size_t b, int density) {
  std::uniform_int_distribution<int> d(-2, 2), coin(0, 9);
  std::vector<ExactMatrix> mats;
  for (int i = 0; i < arrows; ++i) {
    ExactMatrix x(a, b);
    for (std::size_t r = 0; r < a; ++r)
      for (std::size_t c = 0; c < b; ++c)
        if (coin(rng) < density) x(r, c) = d(rng);
    mats.push_back(std::move(x));
  }
  return Rep(arrows, a, b, std::move(mats));
}

Rep simple_sink(int n) { return Rep::zero(n, 0, 1); }

Rep projective_p2(int n) {
  // Source k, sink k^n, arrow i picks coordinate i.
  std::vector<ExactMatrix> mats;
  for (int i = 0; i < n; ++i) {
    ExactMatrix x(1, static_cast<std::size_t>(n));
    x(0, static_cast<std::size_t>(i)) = 1;
    mats.push_back(std::move(x));
  }
  return Rep(n, 1, static_cast<std::size_t>(n), std::move(mats));
}

}  // namespace

TEST_CASE("Rep validates shapes") {
  CHECK_THROWS_AS(Rep(3, 2, 2, {ExactMatrix(2, 2), ExactMatrix(2, 2)}), InvalidParameter);
  CHECK_THROWS_AS(Rep(2, 2, 2, {ExactMatrix(2, 2), ExactMatrix(2, 1)}), InvalidParameter);
  const Rep z = Rep::zero(3, 0, 2);
  CHECK(z.dim() == DimVector{0, 2});
  CHECK(z.mat(0).rows() == 0);
}

TEST_CASE("hom_dim examples") {
  CHECK(hom_dim(simple_sink(3), simple_sink(3)).dimension == 1);
  CHECK(hom_dim(simple_sink(3), projective_p2(3)).dimension == 3);
  CHECK(euler_form(3, {0, 1}, {1, 3}) == 3);
  const Rep b11(3, 1, 1, {ExactMatrix{{0}}, ExactMatrix{{1}}, ExactMatrix{{0}}});
  CHECK(end_dim(b11) == 1);
  CHECK(is_brick(b11));
  CHECK(end_dim(direct_sum(simple_sink(3), simple_sink(3))) == 4);
  CHECK_THROWS_AS(hom_dim(simple_sink(3), simple_sink(4)), InvalidParameter);
}

TEST_CASE("hom basis satisfies the intertwining equations") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    const Rep m = random_rep(rng, 3, 1 + t % 3, 1 + (t / 3) % 3, 3);
    const Rep n = random_rep(rng, 3, 1 + (t / 2) % 3, 1 + t % 2, 3);
    const HomSolution sol = hom_dim(m, n, true);
    REQUIRE(sol.basis.has_value());
    CHECK(sol.basis->size() == sol.dimension);
    for (const auto& [g, h] : *sol.basis)
      for (int i = 0; i < 3; ++i)
        CHECK((m.mat(static_cast<std::size_t>(i)) * h) == (g * n.mat(static_cast<std::size_t>(i))));
  }
}

TEST_CASE("hom_dim agrees with dense rational elimination") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 80; ++t) {
    const int arrows = 3 + t % 3;
    const Rep m = random_rep(rng, arrows, t % 4, 1 + (t / 4) % 4, 1 + t % 6);
    const Rep n = random_rep(rng, arrows, 1 + (t / 3) % 4, t % 3, 1 + (t / 5) % 6);
    CHECK(hom_dim(m, n).dimension == dense_hom_dim(m, n));
    // dim Ext^1 = hom - <m, n> is never negative.
    CHECK(Integer(hom_dim(m, n).dimension) - euler_form(arrows, m.dim(), n.dim()) >= 0);
  }
}

TEST_CASE("hom_dim of constructed bricks agrees with dense elimination") {
  for (const DimVector v : {DimVector{1, 1}, DimVector{2, 1}, DimVector{5, 3}, DimVector{7, 3}, DimVector{4, 5}})
    CHECK(dense_hom_dim(construct_brick(3, v).rep, construct_brick(3, v).rep) == 1);
}

TEST_CASE("dual is an involution and reverses Hom") {
  std::mt19937_64 rng(13);
  const Rep x = random_rep(rng, 3, 5, 3, 5);
  CHECK(dual(x).dim() == DimVector{3, 5});
  CHECK(dual(dual(x)) == x);
  for (int t = 0; t < 20; ++t) {
    const Rep m = random_rep(rng, 3, 1 + t % 3, 1 + t % 4, 4);
    const Rep n = random_rep(rng, 3, 1 + t % 2, 2, 4);
    CHECK(hom_dim(dual(n), dual(m)).dimension == hom_dim(m, n).dimension);
  }
  const Rep b = construct_brick(3, {3, 2}).rep;
  CHECK(end_dim(dual(b)) == 1);
}

TEST_CASE("row_shift_F") {
  CHECK(row_shift_F(ExactMatrix{{1, 0}, {0, 1}, {0, 0}}) == ExactMatrix{{0, 0}, {1, 0}, {0, 1}});
  CHECK(row_shift_F(ExactMatrix{{0, 0}}) == ExactMatrix{{0, 0}});
  CHECK_THROWS_AS(row_shift_F(ExactMatrix(0, 2)), InvalidParameter);
  // Case 2 with s = 1: F(alpha_1) = alpha_2.
  const Rep b = construct_brick(3, {4, 3}).rep;
  CHECK(row_shift_F(b.mat(0)) == b.mat(1));
  CHECK(b.mat(2) == b.mat(1));
}

TEST_CASE("Coxeter functors on bricks") {
  CHECK(coxeter_plus(construct_brick(3, {8, 7}).rep).dim() == DimVector{43, 17});
  CHECK(coxeter_plus(construct_brick(3, {2, 3}).rep).dim() == DimVector{7, 3});
  const Rep b = construct_brick(3, {1, 1}).rep;
  const Rep back = coxeter_minus(coxeter_plus(b));
  CHECK(back.dim() == DimVector{1, 1});
  CHECK(end_dim(back) == 1);
  CHECK(hom_dim(back, b).dimension == 1);
  CHECK(hom_dim(b, back).dimension == 1);
}

TEST_CASE("Coxeter functors reject projective and injective summands") {
  CHECK_THROWS_AS(coxeter_plus(simple_sink(3)), DimensionContractError);
  CHECK_THROWS_AS(coxeter_minus(Rep::zero(3, 1, 0)), DimensionContractError);
}

TEST_CASE("AR formula on small bricks") {
  std::vector<Rep> bricks;
  for (const DimVector v : {DimVector{1, 1}, DimVector{2, 1}, DimVector{1, 2}, DimVector{3, 2}, DimVector{2, 3},
                            DimVector{2, 2}, DimVector{5, 3}})
    bricks.push_back(construct_brick(3, v).rep);
  for (const auto& m : bricks)
    for (const auto& n : bricks) {
      const Integer lhs = Integer(hom_dim(m, n).dimension) - euler_form(3, m.dim(), n.dim());
      CHECK(lhs == Integer(hom_dim(n, coxeter_plus(m)).dimension));
    }
}

TEST_CASE("embedding K_{n-1} into K_n") {
  const Rep k2(2, 1, 1, {ExactMatrix{{1}}, ExactMatrix{{0}}});
  const Rep e = embed(k2, 2);
  CHECK(e.arrows() == 3);
  CHECK(e.mat(0) == ExactMatrix{{1}});
  CHECK(e.mat(2).is_zero());
  CHECK_THROWS_AS(embed(k2, 3), InvalidParameter);

  const EmbeddingCheck c = embedding_check(4, {2, 3});
  CHECK(c.class_small == RootTag::Imaginary);
  CHECK(c.class_large == RootTag::Imaginary);
  CHECK(c.imaginary_preserved);

  const EmbeddingCheck d = embedding_check(4, {1, 1});
  CHECK(d.shifted == DimVector{11, 3});
  CHECK(detail::quadratic_form(3, d.shifted) == 31);
  CHECK(d.shifted_class_small == RootTag::NonRoot);
  CHECK(d.shift_leaves_roots);

  for (int n = 4; n <= 7; ++n)
    for (long long a = 1; a <= 25; ++a)
      for (long long b = 1; b <= 25; ++b) {
        const EmbeddingCheck x = embedding_check(n, {a, b});
        CHECK(x.imaginary_preserved);
        CHECK(x.shift_leaves_roots);
      }
}

TEST_CASE("embedded bricks stay bricks") {
  // A K_3 brick viewed in K_4 keeps End = k.
  for (const DimVector v : {DimVector{1, 1}, DimVector{3, 2}, DimVector{5, 3}}) {
    const Rep b = construct_brick(3, v).rep;
    for (std::size_t slot = 0; slot <= 3; ++slot) CHECK(end_dim(embed(b, slot)) == 1);
  }
}
