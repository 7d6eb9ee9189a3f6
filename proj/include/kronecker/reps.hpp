#pragma once

// Representations of K_n over Q.
//
// A Rep with dimension vector (a,b) has a source space k^a (vertex 2), a sink
// space k^b (vertex 1) and one a x b matrix per arrow. Vectors are rows:
// arrow i sends x to x * mats[i].

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kronecker/errors.hpp"
#include "kronecker/exact_matrix.hpp"
#include "kronecker/linear_system.hpp"
#include "kronecker/roots.hpp"

namespace kronecker {

class Rep {
 public:
  Rep(int arrows, std::size_t source_dim, std::size_t sink_dim, std::vector<ExactMatrix> mats)
      : arrows_(arrows), source_dim_(source_dim), sink_dim_(sink_dim), mats_(std::move(mats)) {
    if (arrows_ < 1) throw InvalidParameter("a representation needs at least one arrow");
    if (mats_.size() != static_cast<std::size_t>(arrows_))
      throw InvalidParameter("expected " + std::to_string(arrows_) + " arrow matrices, got " +
                             std::to_string(mats_.size()));
    for (const auto& m : mats_)
      if (m.rows() != source_dim_ || m.cols() != sink_dim_)
        throw InvalidParameter("arrow matrix has shape " + std::to_string(m.rows()) + "x" +
                               std::to_string(m.cols()) + ", expected " + std::to_string(source_dim_) +
                               "x" + std::to_string(sink_dim_));
  }

  static Rep zero(int arrows, std::size_t source_dim, std::size_t sink_dim) {
    return Rep(arrows, source_dim, sink_dim,
               std::vector<ExactMatrix>(static_cast<std::size_t>(std::max(arrows, 0)),
                                        ExactMatrix(source_dim, sink_dim)));
  }

  int arrows() const { return arrows_; }
  std::size_t source_dim() const { return source_dim_; }
  std::size_t sink_dim() const { return sink_dim_; }
  DimVector dim() const {
    return {static_cast<long long>(source_dim_), static_cast<long long>(sink_dim_)};
  }
  const std::vector<ExactMatrix>& mats() const { return mats_; }
  const ExactMatrix& mat(std::size_t i) const { return mats_.at(i); }

  friend bool operator==(const Rep&, const Rep&) = default;

 private:
  int arrows_;
  std::size_t source_dim_;
  std::size_t sink_dim_;
  std::vector<ExactMatrix> mats_;
};

/// Representation of the opposite quiver 1 => 2, the intermediate stage of a
/// Coxeter functor. Arrow i sends a vertex-1 row vector y to y * mats[i].
struct OppositeRep {
  int arrows = 0;
  std::size_t vertex1_dim = 0;
  std::size_t vertex2_dim = 0;
  std::vector<ExactMatrix> mats;  // each vertex1_dim x vertex2_dim
};

/// Direct sum of two representations over the same quiver.
inline Rep direct_sum(const Rep& x, const Rep& y) {
  if (x.arrows() != y.arrows()) throw InvalidParameter("direct_sum: arrow count mismatch");
  const std::size_t a = x.source_dim() + y.source_dim(), b = x.sink_dim() + y.sink_dim();
  std::vector<ExactMatrix> mats;
  for (int i = 0; i < x.arrows(); ++i) {
    ExactMatrix m(a, b);
    const auto& mx = x.mat(static_cast<std::size_t>(i));
    const auto& my = y.mat(static_cast<std::size_t>(i));
    for (std::size_t r = 0; r < mx.rows(); ++r)
      for (std::size_t c = 0; c < mx.cols(); ++c) m(r, c) = mx(r, c);
    for (std::size_t r = 0; r < my.rows(); ++r)
      for (std::size_t c = 0; c < my.cols(); ++c) m(x.source_dim() + r, x.sink_dim() + c) = my(r, c);
    mats.push_back(std::move(m));
  }
  return Rep(x.arrows(), a, b, std::move(mats));
}

struct HomSolution {
  std::size_t dimension = 0;
  /// Pairs (g, h) with g: a x a' on the source spaces and h: b x b' on the
  /// sink spaces, satisfying M.mats[i] * h = g * N.mats[i] for every arrow.
  std::optional<std::vector<std::pair<ExactMatrix, ExactMatrix>>> basis;
};

namespace detail {

/// Linear system for Hom(m, n) in the unknowns (g, h): g is stored first,
/// row-major, followed by h. One equation per arrow and entry of the a x b'
/// product M_i h - g N_i. Rows are scaled to integers.
inline SparseSystem hom_system(const Rep& m, const Rep& n) {
  const std::size_t a = m.source_dim(), b = m.sink_dim();
  const std::size_t a2 = n.source_dim(), b2 = n.sink_dim();
  SparseSystem sys;
  sys.cols = a * a2 + b * b2;
  const std::size_t h_offset = a * a2;
  std::vector<std::pair<std::size_t, Rational>> row;
  for (int arrow = 0; arrow < m.arrows(); ++arrow) {
    const auto& mi = m.mat(static_cast<std::size_t>(arrow));
    const auto& ni = n.mat(static_cast<std::size_t>(arrow));
    for (std::size_t p = 0; p < a; ++p)
      for (std::size_t q = 0; q < b2; ++q) {
        row.clear();
        // sum_k M_i[p,k] h[k,q]
        for (std::size_t k = 0; k < b; ++k)
          if (mi(p, k) != 0) row.emplace_back(h_offset + k * b2 + q, mi(p, k));
        // - sum_l g[p,l] N_i[l,q]
        for (std::size_t l = 0; l < a2; ++l)
          if (ni(l, q) != 0) row.emplace_back(p * a2 + l, -ni(l, q));
        if (row.empty()) continue;
        Integer den = 1;
        for (const auto& [c, v] : row) den = lcm(den, denominator(v));
        std::vector<std::pair<std::size_t, Integer>> int_row;
        int_row.reserve(row.size());
        for (const auto& [c, v] : row) int_row.emplace_back(c, numerator(v) * (den / denominator(v)));
        sys.rows.push_back(std::move(int_row));
      }
  }
  return sys;
}

}  // namespace detail

/// dim Hom(m, n) over Q, exact. The rank certificate is described in
/// linear_system.hpp; `with_basis` also returns the morphisms.
inline HomSolution hom_dim(const Rep& m, const Rep& n, bool with_basis = false) {
  if (m.arrows() != n.arrows())
    throw InvalidParameter("hom_dim: arrow counts differ (" + std::to_string(m.arrows()) + " vs " +
                           std::to_string(n.arrows()) + ")");
  const SparseSystem sys = detail::hom_system(m, n);
  NullspaceResult ns = certified_nullspace(sys, with_basis);
  HomSolution out;
  out.dimension = ns.nullity;
  if (with_basis) {
    const std::size_t a = m.source_dim(), b = m.sink_dim();
    const std::size_t a2 = n.source_dim(), b2 = n.sink_dim();
    std::vector<std::pair<ExactMatrix, ExactMatrix>> basis;
    for (const auto& v : ns.basis) {
      ExactMatrix g(a, a2), h(b, b2);
      for (std::size_t p = 0; p < a; ++p)
        for (std::size_t l = 0; l < a2; ++l) g(p, l) = v[p * a2 + l];
      for (std::size_t k = 0; k < b; ++k)
        for (std::size_t q = 0; q < b2; ++q) h(k, q) = v[a * a2 + k * b2 + q];
      basis.emplace_back(std::move(g), std::move(h));
    }
    out.basis = std::move(basis);
  }
  return out;
}

inline std::size_t end_dim(const Rep& m) { return hom_dim(m, m).dimension; }

inline bool is_brick(const Rep& m) { return end_dim(m) == 1; }

/// k-dual, read back as a K_n representation: the spaces swap roles and every
/// arrow matrix is transposed.
inline Rep dual(const Rep& m) {
  std::vector<ExactMatrix> mats;
  mats.reserve(m.mats().size());
  for (const auto& x : m.mats()) mats.push_back(x.transposed());
  return Rep(m.arrows(), m.sink_dim(), m.source_dim(), std::move(mats));
}

/// Drops the last row and inserts a zero row on top.
inline ExactMatrix row_shift_F(const ExactMatrix& m) {
  if (m.rows() == 0) throw InvalidParameter("row_shift_F needs at least one row");
  ExactMatrix out(m.rows(), m.cols());
  for (std::size_t r = 1; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r - 1, c);
  return out;
}

namespace detail {

struct Bipartite {
  std::size_t src = 0;
  std::size_t tgt = 0;
  std::vector<ExactMatrix> mats;  // src x tgt
};

// Reflection at the sink: the sink is replaced by the kernel W of
// (x_1..x_n) -> sum x_i M_i, and W becomes a source mapping to the old source
// via the coordinate projections. Result: src = dim W, tgt = old src.
inline Bipartite sink_reflection(const Bipartite& in) {
  const ExactMatrix stacked = vstack(in.mats, in.tgt);  // (n src) x tgt
  const ExactMatrix kernel = left_nullspace(stacked);   // w x (n src)
  Bipartite out;
  out.src = kernel.rows();
  out.tgt = in.src;
  for (std::size_t i = 0; i < in.mats.size(); ++i) out.mats.push_back(kernel.col_block(i * in.src, in.src));
  return out;
}

// Reflection at the source: the source is replaced by the cokernel C of
// x -> (x M_1, ..., x M_n), realized through a basis Q of the annihilator of
// the image (R Q = 0 for R = [M_1 | ... | M_n]). C becomes a sink fed by the
// old sink. Result: src = old tgt, tgt = dim C.
inline Bipartite source_reflection(const Bipartite& in) {
  const ExactMatrix joined = hstack(in.mats, in.src);  // src x (n tgt)
  const ExactMatrix coker = right_nullspace(joined);   // (n tgt) x c
  Bipartite out;
  out.src = in.tgt;
  out.tgt = coker.cols();
  for (std::size_t i = 0; i < in.mats.size(); ++i) out.mats.push_back(coker.row_block(i * in.tgt, in.tgt));
  return out;
}

inline Bipartite as_bipartite(const Rep& m) { return {m.source_dim(), m.sink_dim(), m.mats()}; }
inline Bipartite as_bipartite(const OppositeRep& m) { return {m.vertex1_dim, m.vertex2_dim, m.mats}; }

inline OppositeRep to_opposite(int arrows, Bipartite b) {
  return OppositeRep{arrows, b.src, b.tgt, std::move(b.mats)};
}

inline Rep to_rep(int arrows, Bipartite b) { return Rep(arrows, b.src, b.tgt, std::move(b.mats)); }

}  // namespace detail

/// Reflection at the sink vertex 1 of K_n.
inline OppositeRep reflect_at_sink(const Rep& m) {
  return detail::to_opposite(m.arrows(), detail::sink_reflection(detail::as_bipartite(m)));
}

/// Reflection at vertex 2, the sink of the opposite quiver.
inline Rep reflect_at_sink(const OppositeRep& m) {
  return detail::to_rep(m.arrows, detail::sink_reflection(detail::as_bipartite(m)));
}

/// Reflection at the source vertex 2 of K_n.
inline OppositeRep reflect_at_source(const Rep& m) {
  return detail::to_opposite(m.arrows(), detail::source_reflection(detail::as_bipartite(m)));
}

/// Reflection at vertex 1, the source of the opposite quiver.
inline Rep reflect_at_source(const OppositeRep& m) {
  return detail::to_rep(m.arrows, detail::source_reflection(detail::as_bipartite(m)));
}

namespace detail {

inline DimVector phi_for(int arrows, const DimVector& v, bool forward) {
  return forward ? phi(arrows, v) : phi_inverse(arrows, v);
}

}  // namespace detail

/// tau = C^+: reflect at the sink, then at vertex 2. Requires no projective
/// summand; a dimension vector other than dim(M) Phi raises.
inline Rep coxeter_plus(const Rep& m) {
  Rep out = reflect_at_sink(reflect_at_sink(m));
  const DimVector expected = detail::phi_for(m.arrows(), m.dim(), true);
  if (out.dim() != expected)
    throw DimensionContractError("coxeter_plus of " + to_string(m.dim()) + " gave " + to_string(out.dim()) +
                                 ", expected " + to_string(expected) + " (projective summand?)");
  return out;
}

/// tau^-1 = C^-: reflect at the source, then at vertex 1. Requires no
/// injective summand.
inline Rep coxeter_minus(const Rep& m) {
  Rep out = reflect_at_source(reflect_at_source(m));
  const DimVector expected = detail::phi_for(m.arrows(), m.dim(), false);
  if (out.dim() != expected)
    throw DimensionContractError("coxeter_minus of " + to_string(m.dim()) + " gave " + to_string(out.dim()) +
                                 ", expected " + to_string(expected) + " (injective summand?)");
  return out;
}

/// Views a K_{n-1} representation as a K_n representation by inserting a
/// zero arrow at position `slot` (0-based, 0..n-1).
inline Rep embed(const Rep& m, std::size_t slot) {
  const auto target_arrows = static_cast<std::size_t>(m.arrows()) + 1;
  if (slot >= target_arrows)
    throw InvalidParameter("embed: slot " + std::to_string(slot) + " out of range for " +
                           std::to_string(target_arrows) + " arrows");
  std::vector<ExactMatrix> mats = m.mats();
  mats.insert(mats.begin() + static_cast<std::ptrdiff_t>(slot), ExactMatrix(m.source_dim(), m.sink_dim()));
  return Rep(m.arrows() + 1, m.source_dim(), m.sink_dim(), std::move(mats));
}

/// Dimension-level facts about the embedding K_{n-1} -> K_n for a vector (c,d).
struct EmbeddingCheck {
  RootTag class_small;  // as a K_{n-1} vector
  RootTag class_large;  // as a K_n vector
  DimVector shifted;    // (c,d) Phi_n
  RootTag shifted_class_small;
  /// q_{n-1}(c,d) < 0 implies q_n(c,d) < 0.
  bool imaginary_preserved;
  /// (c,d) imaginary for K_{n-1} implies (c,d) Phi_n is not a K_{n-1} root.
  bool shift_leaves_roots;
};

inline EmbeddingCheck embedding_check(int n, const DimVector& v) {
  if (n < 2) throw InvalidParameter("embedding_check needs n >= 2");
  const Integer q_small = detail::quadratic_form(n - 1, v);
  const Integer q_large = detail::quadratic_form(n, v);
  EmbeddingCheck out;
  out.class_small = detail::tag_of(q_small);
  out.class_large = detail::tag_of(q_large);
  out.shifted = detail::phi(n, v);
  const bool shifted_positive = out.shifted.nonnegative() && !out.shifted.is_zero();
  out.shifted_class_small =
      shifted_positive ? detail::tag_of(detail::quadratic_form(n - 1, out.shifted)) : RootTag::NonRoot;
  const bool small_imaginary = out.class_small == RootTag::Imaginary;
  out.imaginary_preserved = !small_imaginary || out.class_large == RootTag::Imaginary;
  out.shift_leaves_roots = !small_imaginary || out.shifted_class_small == RootTag::NonRoot;
  return out;
}

}  // namespace kronecker
