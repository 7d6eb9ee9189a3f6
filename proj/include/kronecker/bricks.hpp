#pragma once

// Explicit bricks for every imaginary root of K_n, and the quasi-length
// criterion that rests on them.
//
// Write the root as d = (r b + s, b) with 0 <= s < b and dispatch:
//   case 1  r = 1, s = 0          alpha = J, I, J'
//   case 2  r = 1, 0 < s < b      alpha = (I;0_s), (0_s;I), F(alpha_1)
//   case 3  2 <= r <= n-1, s = 0  identity blocks 1..r, then F(alpha_1)
//   case 4  2 <= r <= n-2, s > 0  identity blocks 1..r, (0;..;0;I), F(alpha_1)
//   case 5  a < b, dual of cases 1-4
//   case 6  r = n-1, s > 0        shift by Phi^-1 until a case 1-5 root
//                                 appears, build that, apply tau back
//   case 7  a < b, dual of case 6
// Arrows not mentioned carry zero matrices.

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "kronecker/errors.hpp"
#include "kronecker/reps.hpp"
#include "kronecker/roots.hpp"
#include "kronecker/sequences.hpp"

namespace kronecker {

enum class StepKind { Case, CoxeterShift, Dual, Tau };

struct TraceStep {
  StepKind kind;
  int case_id = 0;  // 1..7 for StepKind::Case
  DimVector dim;    // root handled at this step
  std::string note;
};

inline std::string to_string(const TraceStep& step) {
  switch (step.kind) {
    case StepKind::Case: return "case " + std::to_string(step.case_id) + " " + to_string(step.dim) +
                                (step.note.empty() ? "" : " " + step.note);
    case StepKind::CoxeterShift: return "Phi^-1 -> " + to_string(step.dim);
    case StepKind::Dual: return "dual -> " + to_string(step.dim);
    case StepKind::Tau: return "tau -> " + to_string(step.dim);
  }
  return "?";
}

inline std::string render_trace(const std::vector<TraceStep>& trace) {
  std::string out;
  for (const auto& step : trace) {
    if (!out.empty()) out += "; ";
    out += to_string(step);
  }
  return out;
}

struct BrickCertificate {
  Rep rep;
  DimVector root;
  std::vector<TraceStep> case_trace;
  std::size_t end_dim = 0;
  bool verified = false;

  /// Case id of the first dispatch decision (1..7).
  int top_case() const {
    for (const auto& s : case_trace)
      if (s.kind == StepKind::Case) return s.case_id;
    return 0;
  }
};

namespace detail {

inline ExactMatrix identity_block(std::size_t rows, std::size_t b, std::size_t first_row) {
  ExactMatrix m(rows, b);
  for (std::size_t k = 0; k < b; ++k) m(first_row + k, k) = 1;
  return m;
}

// Cases 1-4: a = r b + s >= b with r <= n-2, or s = 0 and r <= n-1.
inline Rep direct_case(int n, std::size_t a, std::size_t b, std::vector<TraceStep>& trace) {
  const std::size_t r = a / b, s = a % b;
  const auto arrows = static_cast<std::size_t>(n);
  std::vector<ExactMatrix> mats(arrows, ExactMatrix(a, b));
  const DimVector dim{static_cast<long long>(a), static_cast<long long>(b)};
  const std::string params = "r=" + std::to_string(r) + " s=" + std::to_string(s);
  if (r == 1 && s == 0) {
    ExactMatrix jordan(b, b);
    for (std::size_t k = 0; k + 1 < b; ++k) jordan(k, k + 1) = 1;
    mats[0] = jordan;
    mats[1] = ExactMatrix::identity(b);
    mats[2] = jordan.transposed();
    trace.push_back({StepKind::Case, 1, dim, params});
  } else if (r == 1) {
    mats[0] = identity_block(a, b, 0);
    mats[1] = identity_block(a, b, s);
    mats[2] = row_shift_F(mats[0]);
    trace.push_back({StepKind::Case, 2, dim, params});
  } else if (s == 0) {
    if (r > arrows - 1) throw InvalidParameter("direct_case: r out of range");
    for (std::size_t i = 0; i < r; ++i) mats[i] = identity_block(a, b, i * b);
    mats[r] = row_shift_F(mats[0]);
    trace.push_back({StepKind::Case, 3, dim, params});
  } else {
    if (r > arrows - 2) throw InvalidParameter("direct_case: r out of range");
    for (std::size_t i = 0; i < r; ++i) mats[i] = identity_block(a, b, i * b);
    mats[r] = identity_block(a, b, s + (r - 1) * b);
    mats[r + 1] = row_shift_F(mats[0]);
    trace.push_back({StepKind::Case, 4, dim, params});
  }
  return Rep(n, a, b, std::move(mats));
}

inline bool needs_shift(int n, std::size_t a, std::size_t b) {
  return a > b && a / b == static_cast<std::size_t>(n - 1) && a % b != 0;
}

inline Rep build_brick(int n, std::size_t a, std::size_t b, std::vector<TraceStep>& trace);

// Case 6: iterate Phi^-1 until the root leaves the r = n-1, s > 0 region,
// then build there and translate back with tau.
inline Rep shifted_case(int n, std::size_t a, std::size_t b, std::vector<TraceStep>& trace) {
  const DimVector start{static_cast<long long>(a), static_cast<long long>(b)};
  trace.push_back({StepKind::Case, 6, start, "r=" + std::to_string(a / b) + " s=" + std::to_string(a % b)});
  const std::size_t cap = a + b;
  DimVector cur = start;
  std::size_t shifts = 0;
  for (;;) {
    cur = phi_inverse(n, cur);
    ++shifts;
    trace.push_back({StepKind::CoxeterShift, 0, cur, {}});
    if (!is_imaginary(n, cur))
      throw ConstructionError("Phi^-1 left the imaginary cone at " + to_string(cur), render_trace(trace));
    const std::size_t ca = to_size(cur.a, "dimension"), cb = to_size(cur.b, "dimension");
    if (!needs_shift(n, ca, cb)) {
      Rep rep = build_brick(n, ca, cb, trace);
      for (std::size_t k = 0; k < shifts; ++k) {
        rep = coxeter_plus(rep);
        trace.push_back({StepKind::Tau, 0, rep.dim(), {}});
      }
      return rep;
    }
    if (shifts >= cap)
      throw ConstructionError("case 6 did not terminate within " + std::to_string(cap) + " shifts",
                              render_trace(trace));
  }
}

inline Rep build_brick(int n, std::size_t a, std::size_t b, std::vector<TraceStep>& trace) {
  if (a >= b) {
    if (needs_shift(n, a, b)) return shifted_case(n, a, b, trace);
    return direct_case(n, a, b, trace);
  }
  // a < b: the dual root (b, a) has r >= 1.
  const DimVector dim{static_cast<long long>(a), static_cast<long long>(b)};
  const bool via_case6 = needs_shift(n, b, a);
  trace.push_back({StepKind::Case, via_case6 ? 7 : 5, dim, "dual of (" + std::to_string(b) + "," + std::to_string(a) + ")"});
  Rep swapped = build_brick(n, b, a, trace);
  Rep out = dual(swapped);
  trace.push_back({StepKind::Dual, 0, out.dim(), {}});
  return out;
}

}  // namespace detail

/// Builds a brick with dimension vector `root`. The endomorphism dimension is
/// recomputed from scratch; anything other than a verified brick of the
/// requested dimension raises ConstructionError.
inline BrickCertificate construct_brick(int n, const DimVector& root) {
  require_wild(n);
  if (!is_imaginary(n, root))
    throw InvalidParameter("construct_brick needs an imaginary root, got " + to_string(root));
  const std::size_t a = to_size(root.a, "dimension"), b = to_size(root.b, "dimension");
  std::vector<TraceStep> trace;
  Rep rep = [&] {
    try {
      return detail::build_brick(n, a, b, trace);
    } catch (const DimensionContractError& e) {
      throw ConstructionError(e.what(), render_trace(trace));
    }
  }();
  if (rep.dim() != root)
    throw ConstructionError("constructed dimension " + to_string(rep.dim()) + " != " + to_string(root),
                            render_trace(trace));
  const std::size_t e = end_dim(rep);
  if (e != 1)
    throw ConstructionError("end_dim = " + std::to_string(e) + " for " + to_string(root), render_trace(trace));
  return BrickCertificate{std::move(rep), root, std::move(trace), e, true};
}

/// All r >= 1 such that A_r divides both entries of the imaginary root.
inline std::vector<std::size_t> quasi_length_options(int n, const DimVector& root) {
  require_wild(n);
  if (!is_imaginary(n, root))
    throw InvalidParameter("quasi_length_options needs an imaginary root, got " + to_string(root));
  const Integer bound = root.a < root.b ? root.a : root.b;
  std::vector<std::size_t> out;
  auto& seq = thread_cache(n);
  for (std::size_t r = 1;; ++r) {
    const Integer ar = seq.a(r);
    if (ar > bound) break;
    if (root.a % ar == 0 && root.b % ar == 0) out.push_back(r);
  }
  return out;
}

struct QuasiLengthLayer {
  std::size_t r = 0;
  DimVector seed;       // root / A_r, the quasi-simple X
  DimVector layer_dim;  // dim X_r: A_r seed (r odd), A_r (b', n b' - a') (r even)
  /// Quasi-simple whose X_r has dimension exactly `root`: the seed itself for
  /// odd r, (n a' - b', a') for even r.
  DimVector realizing_seed;
};

inline QuasiLengthLayer indecomposable_dim_for_quasilength(int n, const DimVector& root, std::size_t r) {
  const auto options = quasi_length_options(n, root);
  if (std::find(options.begin(), options.end(), r) == options.end())
    throw InvalidParameter("quasi-length " + std::to_string(r) + " is not admissible for " + to_string(root));
  const Integer ar = a_seq(n, r);
  QuasiLengthLayer out;
  out.r = r;
  out.seed = {root.a / ar, root.b / ar};
  if (r % 2 == 1) {
    out.layer_dim = ar * out.seed;
    out.realizing_seed = out.seed;
  } else {
    out.layer_dim = ar * DimVector{out.seed.b, n * out.seed.b - out.seed.a};
    out.realizing_seed = {n * out.seed.a - out.seed.b, out.seed.a};
  }
  return out;
}

}  // namespace kronecker
