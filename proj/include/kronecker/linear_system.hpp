#pragma once

// Exact nullity of sparse integer systems.
//
// The nullity over Q is computed as follows:
//   1. Gauss-Jordan elimination modulo a 31-bit prime p gives rank_p <= rank_Q
//      (a nonzero minor mod p is a nonzero integer minor), hence an upper bound
//      on the rational nullity.
//   2. The modular kernel basis (one vector per free column, normalized to a
//      unit in that column) is lifted to Q by CRT over further primes and
//      rational reconstruction. Every lifted vector is then checked exactly
//      against the integer system. The lifted vectors are independent because
//      each carries the identity pattern on the free columns.
//   3. Verified lifts prove nullity_Q >= nullity_p, so the two agree.
// If no certificate is found within the prime budget the solver falls back to
// elimination over Q.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kronecker/exact_matrix.hpp"
#include "kronecker/numeric.hpp"

namespace kronecker {

/// Homogeneous system A x = 0 with integer coefficients stored by row.
struct SparseSystem {
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::size_t, Integer>>> rows;
};

struct NullspaceResult {
  std::size_t nullity = 0;
  std::vector<std::vector<Rational>> basis;  // empty unless requested
  std::size_t primes_used = 0;
  bool rational_fallback = false;
};

namespace detail {

inline bool is_prime_u32(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t d = 2; d * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

inline const std::vector<std::uint64_t>& elimination_primes() {
  static const std::vector<std::uint64_t> primes = [] {
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = (1ULL << 31) - 1; out.size() < 64; x -= 2)
      if (is_prime_u32(x)) out.push_back(x);
    return out;
  }();
  return primes;
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

inline std::uint64_t reduce_mod(const Integer& x, std::uint64_t p) {
  Integer r = x % Integer(p);
  if (r < 0) r += p;
  return r.convert_to<std::uint64_t>();
}

// 3 * 10^8 residues, 1.2 GB per elimination.
inline constexpr std::size_t kMaxDenseEntries = 300'000'000;

struct ModularRref {
  std::uint64_t prime = 0;
  std::vector<std::size_t> pivot_cols;
  // Row k holds the reduced pivot row whose pivot is pivot_cols[k].
  std::vector<std::vector<std::uint32_t>> pivot_rows;
};

/// Gauss-Jordan mod p. Only rows with a nonzero in the pivot column are
/// touched, and only at the nonzero positions of the pivot row.
inline ModularRref rref_mod(const SparseSystem& sys, std::uint64_t p) {
  const std::size_t cols = sys.cols;
  std::size_t nonzero_rows = 0;
  for (const auto& row : sys.rows) nonzero_rows += !row.empty();
  if (cols != 0 && nonzero_rows > kMaxDenseEntries / cols)
    throw ResourceLimit("dense elimination of a " + std::to_string(nonzero_rows) + " x " + std::to_string(cols) +
                        " system exceeds the entry budget");
  std::vector<std::vector<std::uint32_t>> m;
  m.reserve(nonzero_rows);
  for (const auto& row : sys.rows) {
    std::vector<std::uint32_t> dense(cols, 0);
    bool any = false;
    for (const auto& [c, v] : row) {
      dense[c] = static_cast<std::uint32_t>((dense[c] + reduce_mod(v, p)) % p);
      any = any || dense[c] != 0;
    }
    if (any) m.push_back(std::move(dense));
  }
  ModularRref out;
  out.prime = p;
  std::size_t rank = 0;
  std::vector<std::size_t> nz;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    auto& prow = m[rank];
    const std::uint64_t inv = pow_mod(prow[c], p - 2, p);
    nz.clear();
    for (std::size_t j = c; j < cols; ++j)
      if (prow[j] != 0) {
        prow[j] = static_cast<std::uint32_t>(prow[j] * inv % p);
        nz.push_back(j);
      }
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank) continue;
      auto& row = m[r];
      const std::uint64_t x = row[c];
      if (x == 0) continue;
      const std::uint64_t f = p - x;
      for (std::size_t j : nz) row[j] = static_cast<std::uint32_t>((row[j] + f * prow[j]) % p);
    }
    out.pivot_cols.push_back(c);
    ++rank;
  }
  m.resize(rank);
  out.pivot_rows = std::move(m);
  return out;
}

inline std::vector<std::size_t> free_columns(std::size_t cols, const std::vector<std::size_t>& pivots) {
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) out.push_back(c);
  return out;
}

/// Wang's rational reconstruction: x/y with |x|,|y| <= sqrt(m/2) and x = u y (mod m).
inline std::optional<Rational> rational_reconstruct(const Integer& u, const Integer& m) {
  const Integer bound = sqrt(m / 2);
  Integer r0 = m, r1 = u % m;
  if (r1 < 0) r1 += m;
  Integer t0 = 0, t1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1 == 0 || abs(t1) > bound || gcd(r1, t1) != 1) return std::nullopt;
  return Rational(r1, t1);
}

inline bool in_kernel(const SparseSystem& sys, const std::vector<Rational>& v) {
  Integer den = 1;
  for (const auto& x : v)
    if (x != 0) den = lcm(den, denominator(x));
  std::vector<Integer> w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) w[i] = numerator(v[i]) * (den / denominator(v[i]));
  Integer acc;
  for (const auto& row : sys.rows) {
    acc = 0;
    for (const auto& [c, coeff] : row)
      if (w[c] != 0) acc += coeff * w[c];
    if (acc != 0) return false;
  }
  return true;
}

inline NullspaceResult rational_nullspace(const SparseSystem& sys, bool want_basis) {
  if (sys.cols != 0 && sys.rows.size() > kMaxDenseEntries / 16 / sys.cols)
    throw ResourceLimit("rational elimination of a " + std::to_string(sys.rows.size()) + " x " +
                        std::to_string(sys.cols) + " system exceeds the entry budget");
  ExactMatrix m(sys.rows.size(), sys.cols);
  for (std::size_t r = 0; r < sys.rows.size(); ++r)
    for (const auto& [c, v] : sys.rows[r]) m(r, c) += v;
  NullspaceResult out;
  out.rational_fallback = true;
  ExactMatrix k = right_nullspace(m);
  out.nullity = k.cols();
  if (want_basis)
    for (std::size_t j = 0; j < k.cols(); ++j) {
      std::vector<Rational> v(sys.cols);
      for (std::size_t i = 0; i < sys.cols; ++i) v[i] = k(i, j);
      out.basis.push_back(std::move(v));
    }
  return out;
}

}  // namespace detail

/// Certified exact nullspace of `sys` over Q (see the file comment).
inline NullspaceResult certified_nullspace(const SparseSystem& sys, bool want_basis = false,
                                           std::size_t prime_budget = 48) {
  using namespace detail;
  const auto& primes = elimination_primes();
  prime_budget = std::min(prime_budget, primes.size());
  NullspaceResult out;

  ModularRref base = rref_mod(sys, primes[0]);
  out.primes_used = 1;
  std::vector<std::size_t> free = free_columns(sys.cols, base.pivot_cols);
  if (free.empty()) {
    out.nullity = 0;
    return out;
  }
  // residues[k][r]: coordinate pivot_cols[r] of kernel vector k, modulo `modulus`.
  auto init_residues = [&](const ModularRref& rr) {
    std::vector<std::vector<Integer>> res(free.size(), std::vector<Integer>(rr.pivot_cols.size()));
    for (std::size_t k = 0; k < free.size(); ++k)
      for (std::size_t r = 0; r < rr.pivot_cols.size(); ++r) {
        const std::uint64_t x = rr.pivot_rows[r][free[k]];
        res[k][r] = x == 0 ? 0 : rr.prime - x;
      }
    return res;
  };
  std::vector<std::vector<Integer>> residues = init_residues(base);
  Integer modulus = base.prime;

  for (std::size_t next = 1;; ++next) {
    // Attempt reconstruction and exact verification.
    std::vector<std::vector<Rational>> lifted;
    bool reconstructed = true;
    for (std::size_t k = 0; k < free.size() && reconstructed; ++k) {
      std::vector<Rational> v(sys.cols);
      v[free[k]] = 1;
      for (std::size_t r = 0; r < base.pivot_cols.size(); ++r) {
        auto q = rational_reconstruct(residues[k][r], modulus);
        if (!q) {
          reconstructed = false;
          break;
        }
        v[base.pivot_cols[r]] = *q;
      }
      if (reconstructed) lifted.push_back(std::move(v));
    }
    if (reconstructed &&
        std::all_of(lifted.begin(), lifted.end(), [&](const auto& v) { return in_kernel(sys, v); })) {
      out.nullity = free.size();
      if (want_basis) out.basis = std::move(lifted);
      return out;
    }
    if (next >= prime_budget) break;

    ModularRref more = rref_mod(sys, primes[next]);
    ++out.primes_used;
    const bool better = more.pivot_cols.size() > base.pivot_cols.size() ||
                        (more.pivot_cols.size() == base.pivot_cols.size() &&
                         more.pivot_cols < base.pivot_cols);
    if (better) {
      // The earlier primes were unlucky; restart from this one.
      base = std::move(more);
      free = free_columns(sys.cols, base.pivot_cols);
      if (free.empty()) {
        out.nullity = 0;
        return out;
      }
      residues = init_residues(base);
      modulus = base.prime;
      continue;
    }
    if (more.pivot_cols != base.pivot_cols) continue;  // unlucky prime, skip
    const Integer p(more.prime);
    const Integer inv = Integer(pow_mod(reduce_mod(modulus, more.prime), more.prime - 2, more.prime));
    for (std::size_t k = 0; k < free.size(); ++k)
      for (std::size_t r = 0; r < base.pivot_cols.size(); ++r) {
        const std::uint64_t x = more.pivot_rows[r][free[k]];
        const Integer target = x == 0 ? Integer(0) : Integer(more.prime - x);
        // CRT: new = old + modulus * ((target - old) * inv mod p)
        Integer t = ((target - residues[k][r]) % p + p) % p;
        t = t * inv % p;
        residues[k][r] += modulus * t;
      }
    modulus *= p;
  }

  NullspaceResult fallback = rational_nullspace(sys, want_basis);
  fallback.primes_used = out.primes_used;
  return fallback;
}

}  // namespace kronecker
