#pragma once

// Coordinate sequences of the wild Kronecker quiver K_n.
//
//   A_0 = 0, A_1 = 1, A_{i+2} = n A_{i+1} - A_i   (dim P_i = (A_{i-1}, A_i))
//   B_{2i} = A_i, B_{2i+1} = B_{2i+2} - B_{2i}
//   s_r = A_r - A_{r-2} + ... +- A_1              (r odd), n s_r = A_{r+1}

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "kronecker/errors.hpp"
#include "kronecker/numeric.hpp"
#include "kronecker/report.hpp"

namespace kronecker {

inline void require_wild(int n) {
  if (n < 3) throw InvalidParameter("n must be at least 3, got " + std::to_string(n));
}

/// Memoized A-values for one n. Growth mutates the cache, so a single
/// instance must not be grown from several threads at once; the free
/// functions below use one cache per thread.
class SeqCache {
 public:
  explicit SeqCache(int n) : n_(n), a_vals_{Integer(0), Integer(1)} { require_wild(n); }

  int n() const { return n_; }

  Integer a(std::size_t i) {
    while (a_vals_.size() <= i) {
      const std::size_t k = a_vals_.size();
      a_vals_.push_back(n_ * a_vals_[k - 1] - a_vals_[k - 2]);
    }
    return a_vals_[i];
  }

  Integer b(std::size_t i) {
    if (i % 2 == 0) return a(i / 2);
    return a(i / 2 + 1) - a(i / 2);
  }

  Integer s(std::size_t r) {
    if (r % 2 == 0) throw InvalidParameter("s_r requires odd r, got " + std::to_string(r));
    Integer total = 0;
    int sign = 1;
    for (std::size_t k = r;; k -= 2) {
      total += sign * a(k);
      sign = -sign;
      if (k == 1) break;
    }
    return total;
  }

  std::size_t cached() const { return a_vals_.size(); }

 private:
  int n_;
  std::vector<Integer> a_vals_;
};

inline SeqCache& thread_cache(int n) {
  require_wild(n);
  thread_local std::map<int, SeqCache> caches;
  auto it = caches.find(n);
  if (it == caches.end()) it = caches.emplace(n, SeqCache(n)).first;
  return it->second;
}

inline Integer a_seq(int n, std::size_t i) { return thread_cache(n).a(i); }
inline Integer b_seq(int n, std::size_t i) { return thread_cache(n).b(i); }
inline Integer s_r(int n, std::size_t r) { return thread_cache(n).s(r); }

namespace detail {

inline std::string idx(std::initializer_list<std::pair<const char*, long long>> items) {
  std::string out;
  for (const auto& [name, value] : items) {
    if (!out.empty()) out += ' ';
    out += name;
    out += '=';
    out += std::to_string(value);
  }
  return out;
}

}  // namespace detail

/// Exact check of the A/B/s identities for every n in [n_lo, n_hi] with
/// indices up to `upto`:
///   (1) A_{i+2} = n A_{i+1} - A_i
///   (2) A_i^2 + A_{i+1}^2 - n A_i A_{i+1} = 1
///   (3) A_{i+1}^2 - A_{i+2} A_i = 1
///   (4) (A_{i+2}+A_{i+1})^2 - (A_{i+1}+A_i)(A_{i+2}+A_{i+3}) = n + 2
///   (5) A_i A_{j+k} - A_j A_{i+k} = A_{i-j} A_k        (i >= j, k >= 0)
/// plus n s_r = A_{r+1}, B_{2s+2t} = B_{2s}B_{2t+1} + B_{2s-1}B_{2t},
/// B_{2i-1} + (n-2)B_{2i} = B_{2i+1}, strict growth of B, and the odd-index
/// instance B_7 = B_3B_5 + B_2B_4 that must hold for n = 3 and fail for n >= 4.
inline Report verify_identities(int n_lo, int n_hi, std::size_t upto) {
  using detail::idx;
  Report report;
  report.suite = "identities";
  if (upto < 1) throw InvalidParameter("index bound must be >= 1");
  for (int n = n_lo; n <= n_hi; ++n) {
    SeqCache seq(n);
    const long long ln = n;
    const Integer nn(n);
    if (seq.a(0) != 0 || seq.a(1) != 1)
      report.check(false, "initial values", idx({{"n", ln}}), "0 1",
                   seq.a(0).str() + " " + seq.a(1).str());
    for (std::size_t i = 1; i <= upto; ++i) {
      const auto li = static_cast<long long>(i);
      Integer a0 = seq.a(i);
      Integer a1 = seq.a(i + 1), a2 = seq.a(i + 2), a3 = seq.a(i + 3);
      report.check(a2 == nn * a1 - a0, "recurrence A_{i+2}=nA_{i+1}-A_i", idx({{"n", ln}, {"i", li}}),
                   (nn * a1 - a0).str(), a2.str());
      Integer q = a0 * a0 + a1 * a1 - nn * a0 * a1;
      report.check(q == 1, "A_i^2+A_{i+1}^2-nA_iA_{i+1}=1",
                   idx({{"n", ln}, {"i", li}}), "1", q.str());
      Integer c = a1 * a1 - a2 * a0;
      report.check(c == 1, "A_{i+1}^2-A_{i+2}A_i=1", idx({{"n", ln}, {"i", li}}), "1",
                   c.str());
      Integer d = (a2 + a1) * (a2 + a1) - (a1 + a0) * (a2 + a3);
      report.check(d == nn + 2, "(A_{i+2}+A_{i+1})^2-(A_{i+1}+A_i)(A_{i+2}+A_{i+3})=n+2", idx({{"n", ln}, {"i", li}}), (nn + 2).str(),
                   d.str());
    }
    for (std::size_t i = 1; i <= upto; ++i)
      for (std::size_t j = 0; j <= i; ++j)
        for (std::size_t k = 0; k <= upto; ++k) {
          Integer lhs = seq.a(i) * seq.a(j + k) - seq.a(j) * seq.a(i + k);
          Integer rhs = seq.a(i - j) * seq.a(k);
          report.check(lhs == rhs, "A_iA_{j+k}-A_jA_{i+k}=A_{i-j}A_k",
                       idx({{"n", ln},
                            {"i", static_cast<long long>(i)},
                            {"j", static_cast<long long>(j)},
                            {"k", static_cast<long long>(k)}}),
                       rhs.str(), lhs.str());
        }
    for (std::size_t r = 1; r <= upto; r += 2) {
      Integer lhs = nn * seq.s(r);
      report.check(lhs == seq.a(r + 1), "n*s_r = A_{r+1}",
                   idx({{"n", ln}, {"r", static_cast<long long>(r)}}), seq.a(r + 1).str(),
                   lhs.str());
    }
    for (std::size_t s = 1; s <= upto; ++s)
      for (std::size_t t = 1; s + t <= upto; ++t) {
        Integer lhs = seq.b(2 * s + 2 * t);
        Integer rhs = seq.b(2 * s) * seq.b(2 * t + 1) + seq.b(2 * s - 1) * seq.b(2 * t);
        report.check(lhs == rhs, "B_{2s+2t} = B_{2s}B_{2t+1} + B_{2s-1}B_{2t}",
                     idx({{"n", ln},
                          {"s", static_cast<long long>(s)},
                          {"t", static_cast<long long>(t)}}),
                     lhs.str(), rhs.str());
      }
    for (std::size_t i = 1; i <= upto; ++i) {
      Integer lhs = seq.b(2 * i - 1) + (nn - 2) * seq.b(2 * i);
      report.check(lhs == seq.b(2 * i + 1), "B_{2i-1}+(n-2)B_{2i}=B_{2i+1}",
                   idx({{"n", ln}, {"i", static_cast<long long>(i)}}), seq.b(2 * i + 1).str(),
                   lhs.str());
    }
    // Strict from i = 2 on; B_1 = B_2 = 1.
    report.check(seq.b(1) == 1 && seq.b(2) == 1, "B_1 = B_2 = 1", idx({{"n", ln}}));
    for (std::size_t i = 2; i < 2 * upto; ++i)
      report.check(seq.b(i) < seq.b(i + 1), "B_i < B_{i+1}",
                   idx({{"n", ln}, {"i", static_cast<long long>(i)}}),
                   "<" + seq.b(i + 1).str(), seq.b(i).str());
    // Odd-index instance of the B product formula.
    Integer b7 = seq.b(7);
    Integer odd_rhs = seq.b(3) * seq.b(5) + seq.b(2) * seq.b(4);
    if (n == 3)
      report.check(b7 == odd_rhs, "odd-index B formula holds for n=3", idx({{"n", ln}}),
                   b7.str(), odd_rhs.str());
    else
      report.check(b7 != odd_rhs, "odd-index B formula fails for n>=4", idx({{"n", ln}}),
                   "!= " + b7.str(), odd_rhs.str());
  }
  return report;
}

namespace detail {

// p1/q1 > p2/q2 for positive denominators.
inline bool frac_greater(const Integer& p1, const Integer& q1, const Integer& p2,
                         const Integer& q2) {
  return p1 * q2 > p2 * q1;
}

}  // namespace detail

/// Exhaustive exact check of the ratio (in)equalities for n in [n_lo, n_hi]:
///  - A_{r+1}^2 > A_r A_{r+2} for 1 <= r <= upto,
///  - n = A_2/A_1 > A_{t+1}/A_t > A_{r+1}/A_r > n-1 for 2 <= t < r <= upto,
///  - A_{j+k}/A_j > A_{s+t}/A_s whenever k > t, or k = t and j < s,
///  - A_i/A_j = A_r/A_s (i > j, r > s) only for i = r and j = s,
///  - no i,j,r,s,t in [1, tuple_bound] with A_{i+j}/A_s = A_i/A_t + A_j/A_r.
inline Report verify_inequalities(int n_lo, int n_hi, std::size_t upto,
                                  std::size_t tuple_bound) {
  using detail::frac_greater;
  using detail::idx;
  Report report;
  report.suite = "inequalities";
  std::size_t equal_tuples = 0;
  for (int n = n_lo; n <= n_hi; ++n) {
    SeqCache seq(n);
    const long long ln = n;
    const Integer nn(n);
    for (std::size_t r = 1; r <= upto; ++r) {
      Integer lhs = seq.a(r + 1) * seq.a(r + 1);
      Integer rhs = seq.a(r) * seq.a(r + 2);
      report.check(lhs > rhs, "A_{r+1}^2 > A_rA_{r+2}",
                   idx({{"n", ln}, {"r", static_cast<long long>(r)}}), ">" + rhs.str(),
                   lhs.str());
    }
    for (std::size_t t = 2; t <= upto; ++t)
      for (std::size_t r = t + 1; r <= upto; ++r) {
        const auto in = idx({{"n", ln},
                             {"t", static_cast<long long>(t)},
                             {"r", static_cast<long long>(r)}});
        report.check(frac_greater(seq.a(2), seq.a(1), seq.a(t + 1), seq.a(t)),
                     "A_2/A_1 > A_{t+1}/A_t", in);
        report.check(frac_greater(seq.a(t + 1), seq.a(t), seq.a(r + 1), seq.a(r)),
                     "A_{t+1}/A_t > A_{r+1}/A_r", in);
        report.check(frac_greater(seq.a(r + 1), seq.a(r), nn - 1, Integer(1)),
                     "A_{r+1}/A_r > n-1", in);
      }
    for (std::size_t j = 1; j <= upto; ++j)
      for (std::size_t k = 1; j + k <= upto; ++k)
        for (std::size_t s = 1; s <= upto; ++s)
          for (std::size_t t = 1; s + t <= upto; ++t) {
            const bool strict = k > t || (k == t && j < s);
            if (!strict) continue;
            report.check(frac_greater(seq.a(j + k), seq.a(j), seq.a(s + t), seq.a(s)),
                         "A_{j+k}/A_j > A_{s+t}/A_s",
                         idx({{"n", ln},
                              {"j", static_cast<long long>(j)},
                              {"k", static_cast<long long>(k)},
                              {"s", static_cast<long long>(s)},
                              {"t", static_cast<long long>(t)}}));
          }
    for (std::size_t i = 2; i <= upto; ++i)
      for (std::size_t j = 1; j < i; ++j)
        for (std::size_t r = 2; r <= upto; ++r)
          for (std::size_t s = 1; s < r; ++s) {
            const bool equal = seq.a(i) * seq.a(s) == seq.a(r) * seq.a(j);
            report.check(equal == (i == r && j == s), "A_i/A_j = A_r/A_s iff i=r, j=s",
                         idx({{"n", ln},
                              {"i", static_cast<long long>(i)},
                              {"j", static_cast<long long>(j)},
                              {"r", static_cast<long long>(r)},
                              {"s", static_cast<long long>(s)}}),
                         (i == r && j == s) ? "equal" : "distinct",
                         equal ? "equal" : "distinct");
          }
    const std::size_t b = tuple_bound;
    for (std::size_t i = 1; i <= b; ++i)
      for (std::size_t j = 1; j <= b; ++j)
        for (std::size_t r = 1; r <= b; ++r)
          for (std::size_t s = 1; s <= b; ++s)
            for (std::size_t t = 1; t <= b; ++t) {
              // A_{i+j}/A_s = A_i/A_t + A_j/A_r  <=>  A_{i+j} A_t A_r = A_s (A_i A_r + A_j A_t)
              const bool equal = seq.a(i + j) * seq.a(t) * seq.a(r) ==
                                 seq.a(s) * (seq.a(i) * seq.a(r) + seq.a(j) * seq.a(t));
              if (equal) ++equal_tuples;
              report.check(!equal, "A_{i+j}/A_s != A_i/A_t + A_j/A_r",
                           idx({{"n", ln},
                                {"i", static_cast<long long>(i)},
                                {"j", static_cast<long long>(j)},
                                {"r", static_cast<long long>(r)},
                                {"s", static_cast<long long>(s)},
                                {"t", static_cast<long long>(t)}}));
            }
  }
  report.stats["ratio_sum_equal_tuples"] = std::to_string(equal_tuples);
  return report;
}

}  // namespace kronecker
