#pragma once

// Dimension-vector calculus for K_n.
//
// A DimVector is (dim at the source vertex 2, dim at the sink vertex 1), so
// dim P_1 = (0,1), dim P_2 = (1,n), dim I_0 = (1,0). The Coxeter matrix acts
// on row vectors from the right:
//
//   Phi    = ( n^2-1   n )      Phi^-1 = ( -1    -n    )
//            (  -n    -1 )               (  n   n^2-1  )

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include "kronecker/errors.hpp"
#include "kronecker/numeric.hpp"
#include "kronecker/sequences.hpp"

namespace kronecker {

struct DimVector {
  Integer a;  // source vertex 2
  Integer b;  // sink vertex 1

  DimVector() = default;
  DimVector(Integer source, Integer sink) : a(std::move(source)), b(std::move(sink)) {}
  DimVector(long long source, long long sink) : a(source), b(sink) {}

  Integer length() const { return a + b; }
  bool is_zero() const { return a == 0 && b == 0; }
  bool nonnegative() const { return a >= 0 && b >= 0; }

  friend bool operator==(const DimVector&, const DimVector&) = default;
  friend bool operator<(const DimVector& x, const DimVector& y) {
    return x.a < y.a || (x.a == y.a && x.b < y.b);
  }
  friend DimVector operator+(const DimVector& x, const DimVector& y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend DimVector operator-(const DimVector& x, const DimVector& y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend DimVector operator*(const Integer& k, const DimVector& v) { return {k * v.a, k * v.b}; }
  DimVector& operator+=(const DimVector& o) {
    a += o.a;
    b += o.b;
    return *this;
  }
};

inline std::string to_string(const DimVector& v) {
  return "(" + v.a.str() + "," + v.b.str() + ")";
}

inline std::ostream& operator<<(std::ostream& os, const DimVector& v) { return os << to_string(v); }

/// Parses "a,b" (optionally parenthesised) into a DimVector.
inline DimVector parse_dim_vector(std::string_view text) {
  std::string_view body = text;
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')')
    body = body.substr(1, body.size() - 2);
  auto comma = body.find(',');
  if (comma == std::string_view::npos || body.find(',', comma + 1) != std::string_view::npos)
    throw InvalidParameter("expected a vector 'a,b', got '" + std::string(text) + "'");
  return {parse_integer(body.substr(0, comma)), parse_integer(body.substr(comma + 1))};
}

enum class RootTag { Real, Imaginary, NonRoot };

inline const char* to_string(RootTag tag) {
  switch (tag) {
    case RootTag::Real: return "Real";
    case RootTag::Imaginary: return "Imaginary";
    case RootTag::NonRoot: return "NonRoot";
  }
  return "?";
}

struct RootClass {
  RootTag tag;
  Integer q_value;
};

namespace detail {

// Unchecked forms; valid for any arrow count, used for K_{n-1} comparisons.
inline Integer quadratic_form(int n, const DimVector& v) { return v.a * v.a + v.b * v.b - n * v.a * v.b; }

inline RootTag tag_of(const Integer& q) {
  if (q == 1) return RootTag::Real;
  if (q < 0) return RootTag::Imaginary;
  return RootTag::NonRoot;
}

inline DimVector phi(int n, const DimVector& v) {
  const Integer nn(n);
  return {(nn * nn - 1) * v.a - nn * v.b, nn * v.a - v.b};
}

inline DimVector phi_inverse(int n, const DimVector& v) {
  const Integer nn(n);
  return {nn * v.b - v.a, (nn * nn - 1) * v.b - nn * v.a};
}

}  // namespace detail

/// q(a,b) = a^2 + b^2 - n a b.
inline Integer quadratic_form(int n, const DimVector& v) {
  require_wild(n);
  return detail::quadratic_form(n, v);
}

/// <v,w> = v.a w.a + v.b w.b - n v.a w.b.
inline Integer euler_form(int n, const DimVector& v, const DimVector& w) {
  require_wild(n);
  return v.a * w.a + v.b * w.b - n * v.a * w.b;
}

inline RootClass classify(int n, const DimVector& v) {
  require_wild(n);
  if (!v.nonnegative()) throw InvalidParameter("classify expects a nonnegative vector, got " + to_string(v));
  if (v.is_zero()) throw InvalidParameter("classify expects a nonzero vector");
  Integer q = detail::quadratic_form(n, v);
  return {detail::tag_of(q), q};
}

inline bool is_imaginary(int n, const DimVector& v) {
  return v.nonnegative() && !v.is_zero() && detail::quadratic_form(n, v) < 0;
}

/// v * Phi^power. Negative powers use Phi^-1; no positivity assumed.
inline DimVector coxeter_apply(int n, DimVector v, long long power) {
  require_wild(n);
  for (; power > 0; --power) v = detail::phi(n, v);
  for (; power < 0; ++power) v = detail::phi_inverse(n, v);
  return v;
}

/// dim tau^i X = (A_{2i+1} a - A_{2i} b, A_{2i} a - A_{2i-1} b), i >= 1.
inline DimVector tau_power_dim(int n, const DimVector& v, long long i) {
  require_wild(n);
  if (i < 1) throw InvalidParameter("tau_power_dim requires i >= 1");
  auto& seq = thread_cache(n);
  const auto k = static_cast<std::size_t>(2 * i);
  Integer a_hi = seq.a(k + 1), a_mid = seq.a(k), a_lo = seq.a(k - 1);
  return {a_hi * v.a - a_mid * v.b, a_mid * v.a - a_lo * v.b};
}

/// dim P_i = (A_{i-1}, A_i), i >= 1.
inline DimVector preprojective_dim(int n, long long i) {
  require_wild(n);
  if (i < 1) throw InvalidParameter("preprojective index must be >= 1");
  const auto k = static_cast<std::size_t>(i);
  return {a_seq(n, k - 1), a_seq(n, k)};
}

/// dim I_j = (A_{j+1}, A_j), j >= 0.
inline DimVector preinjective_dim(int n, long long j) {
  require_wild(n);
  if (j < 0) throw InvalidParameter("preinjective index must be >= 0");
  const auto k = static_cast<std::size_t>(j);
  return {a_seq(n, k + 1), a_seq(n, k)};
}

/// For an imaginary (a,b) with (c,d) = (a,b) Phi^-1 = (nb-a, (n^2-1)b-na):
/// d/c > (nb-a)/b > b/a, compared by cross-multiplication.
inline bool compare_ratios_hold(int n, const DimVector& v) {
  DimVector w = coxeter_apply(n, v, -1);
  const Integer nb_a = n * v.b - v.a;
  // d/c > (nb-a)/b  and  (nb-a)/b > b/a, all denominators positive.
  return w.b * v.b > nb_a * w.a && nb_a * v.a > v.b * v.b;
}

/// (a,b) and (c,d) = (a,b) Phi^i with equal lengths: |(a,b)Phi| = |(c,d)Phi^-1|.
/// Needs i >= 1: at i = 0 the hypothesis is empty and the conclusion fails,
/// e.g. (-12,-8) at n = 3 gives (-72,-28) against (-12,-28).
inline bool shifted_sums_agree(int n, const DimVector& v, long long i) {
  if (i < 1) throw InvalidParameter("shifted_sums_agree needs a shift i >= 1");
  DimVector w = coxeter_apply(n, v, i);
  if (w.length() != v.length()) return true;  // hypothesis not met
  return coxeter_apply(n, v, 1).length() == coxeter_apply(n, w, -1).length();
}

}  // namespace kronecker
