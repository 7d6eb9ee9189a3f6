#pragma once

// The `kronecker` command line. run() is the whole program; main() only
// forwards argv, so tests drive the CLI in-process.
//
// Exit codes: 0 ok, 2 usage, 3 theorem violation (including failing verify
// suites), 4 construction failure, 1 anything else.

#include <algorithm>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kronecker/bricks.hpp"
#include "kronecker/components.hpp"
#include "kronecker/rep_json.hpp"
#include "kronecker/roots.hpp"
#include "kronecker/sequences.hpp"
#include "kronecker/verify.hpp"

namespace kronecker::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2, kTheorem = 3, kConstruction = 4 };

struct IntRange {
  long long lo = 0;
  long long hi = 0;
};

/// "lo..hi" or a single integer.
inline IntRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const long long x = std::stoll(text);
      return {x, x};
    }
    std::size_t used = 0;
    const long long lo = std::stoll(text.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument(text);
    const std::string rest = text.substr(dots + 2);
    const long long hi = std::stoll(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    if (lo > hi) throw InvalidParameter("empty range '" + text + "'");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw InvalidParameter("expected an integer or a range lo..hi, got '" + text + "'");
  }
}

inline Json report_json(const Report& r, bool timing) {
  Json failures = Json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"check", f.check}, {"inputs", f.inputs}, {"expected", f.expected}, {"actual", f.actual}});
  Json out;
  out["suite"] = r.suite;
  out["cases"] = r.cases;
  out["failures"] = std::move(failures);
  out["stats"] = Json(r.stats);
  if (timing) out["wall_seconds"] = r.wall_seconds;
  return out;
}

inline void print_report(std::ostream& out, const Report& r, bool timing) {
  out << "suite " << r.suite << ": " << r.cases << " cases, " << r.failures.size() << " failures";
  if (timing) out << ", " << r.wall_seconds << " s";
  out << '\n';
  for (const auto& [key, value] : r.stats) out << "  " << key << " = " << value << '\n';
  for (std::size_t k = 0; k < std::min<std::size_t>(r.failures.size(), 20); ++k) {
    const auto& f = r.failures[k];
    out << "  FAIL " << f.check << " [" << f.inputs << "]";
    if (!f.expected.empty() || !f.actual.empty()) out << " expected " << f.expected << " got " << f.actual;
    out << '\n';
  }
  if (r.failures.size() > 20) out << "  ... " << r.failures.size() - 20 << " more\n";
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kronecker quiver representations: sequences, roots, bricks and regular components"};
  app.name("kronecker");
  app.require_subcommand(1);

  int n = 3;
  std::string vec, kind = "A", range_text, seed_a, seed_b, rep1, rep2, out_path, suite, n_text = "3";
  long long upto = 10, length = 1, r = 1, s = 1, max_i = 4;
  bool json = false, verify_flag = false, timing = false;
  VerifyBounds bounds;

  auto* seq = app.add_subcommand("seq", "print A_i, B_i (i = 0..K) or s_r (odd r <= K)");
  seq->add_option("--n", n, "number of arrows")->required();
  seq->add_option("--kind", kind, "A, B or s")->check(CLI::IsMember({"A", "B", "s"}));
  seq->add_option("--upto", upto, "largest index")->required()->check(CLI::NonNegativeNumber);

  auto* root = app.add_subcommand("root", "root-system queries");
  root->require_subcommand(1);
  auto* classify_cmd = root->add_subcommand("classify", "Real, Imaginary or NonRoot, with q(a,b)");
  classify_cmd->add_option("--n", n)->required();
  classify_cmd->add_option("--vec", vec, "a,b")->required();

  auto* orbit = app.add_subcommand("orbit", "v Phi^i for i in a range");
  orbit->add_option("--n", n)->required();
  orbit->add_option("--vec", vec, "a,b")->required();
  orbit->add_option("--range", range_text, "lo..hi")->required();

  auto* brick = app.add_subcommand("brick", "construct a brick for an imaginary root");
  brick->add_option("--n", n)->required();
  brick->add_option("--vec", vec, "a,b")->required();
  brick->add_option("--out", out_path, "write the representation as JSON");
  brick->add_flag("--verify", verify_flag, "recheck End = k by rational elimination");
  brick->add_flag("--json", json, "print the certificate as JSON");

  auto* homdim = app.add_subcommand("homdim", "dim Hom between two representations in JSON files");
  homdim->add_option("--rep1", rep1)->required();
  homdim->add_option("--rep2", rep2)->required();

  auto* ql = app.add_subcommand("ql", "admissible quasi-lengths of an imaginary root");
  ql->add_option("--n", n)->required();
  ql->add_option("--vec", vec, "a,b")->required();

  auto* census = app.add_subcommand("census", "all nodes of a given length in a regular component");
  census->add_option("--n", n)->required();
  census->add_option("--seed", seed_a, "quasi-simple a,b")->required();
  census->add_option("--length", length)->required()->check(CLI::PositiveNumber);
  census->add_flag("--json", json);

  auto* pairs = app.add_subcommand("pairs", "quasi-simples X with |X_s| = |(tau^i X)_r|");
  pairs->add_option("--n", n)->required();
  pairs->add_option("--r", r)->required()->check(CLI::PositiveNumber);
  pairs->add_option("--s", s)->required()->check(CLI::PositiveNumber);
  pairs->add_option("--max-i", max_i)->required()->check(CLI::NonNegativeNumber);
  pairs->add_flag("--json", json);

  auto* dimset = app.add_subcommand("dimset", "do two components have the same dimension vectors");
  dimset->add_option("--n", n)->required();
  dimset->add_option("--seedA", seed_a, "a,b")->required();
  dimset->add_option("--seedB", seed_b, "c,d")->required();

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "identities, inequalities, bricks, beta, pairs, dimset or all")->required();
  verify->add_option("--n", n_text, "n or lo..hi");
  verify->add_option("--upto", bounds.upto);
  verify->add_option("--tuple-bound", bounds.tuple_bound);
  verify->add_option("--sum-bound", bounds.sum_bound);
  verify->add_option("--ql-sum-bound", bounds.ql_sum_bound);
  verify->add_option("--functor-sum-bound", bounds.functor_sum_bound);
  verify->add_option("--ar-samples", bounds.ar_samples);
  verify->add_option("--seed-bound", bounds.seed_bound);
  verify->add_option("--length-bound", bounds.length_bound);
  verify->add_option("--max-i", bounds.max_i);
  verify->add_option("--max-ql", bounds.max_ql);
  verify->add_option("--window", bounds.window);
  verify->add_flag("--json", json);
  verify->add_flag("--timing", timing, "include wall time (makes output run-dependent)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*seq) {
      require_wild(n);
      const auto k = static_cast<std::size_t>(upto);
      std::vector<std::string> values;
      if (kind == "s") {
        for (std::size_t i = 1; i <= k; i += 2) values.push_back(s_r(n, i).str());
      } else {
        for (std::size_t i = 0; i <= k; ++i) values.push_back((kind == "A" ? a_seq(n, i) : b_seq(n, i)).str());
      }
      for (std::size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << values[i];
      out << '\n';
    } else if (*classify_cmd) {
      const RootClass c = classify(n, parse_dim_vector(vec));
      out << to_string(c.tag) << " q=" << c.q_value << '\n';
    } else if (*orbit) {
      require_wild(n);
      const DimVector v = parse_dim_vector(vec);
      const IntRange range = parse_range(range_text);
      for (long long i = range.lo; i <= range.hi; ++i) {
        const DimVector w = coxeter_apply(n, v, i);
        out << i << ' ' << w << ' ' << w.length() << '\n';
      }
    } else if (*brick) {
      const BrickCertificate cert = construct_brick(n, parse_dim_vector(vec));
      if (verify_flag) {
        const auto check = detail::rational_nullspace(detail::hom_system(cert.rep, cert.rep), false);
        if (check.nullity != 1)
          throw ConstructionError("rational recheck gave end_dim " + std::to_string(check.nullity),
                                  render_trace(cert.case_trace));
      }
      if (!out_path.empty()) write_json(out_path, to_json(cert.rep));
      if (json) {
        out << certificate_json(cert).dump(1) << '\n';
      } else {
        out << "root " << cert.root << '\n';
        for (const auto& step : cert.case_trace) out << "  " << to_string(step) << '\n';
        out << "end_dim " << cert.end_dim << '\n';
        if (verify_flag) out << "verified by rational elimination\n";
      }
    } else if (*homdim) {
      out << hom_dim(read_rep(rep1), read_rep(rep2)).dimension << '\n';
    } else if (*ql) {
      const DimVector v = parse_dim_vector(vec);
      for (std::size_t q : quasi_length_options(n, v)) {
        const QuasiLengthLayer layer = indecomposable_dim_for_quasilength(n, v, q);
        out << "r=" << q << " seed " << layer.seed << " layer " << layer.layer_dim << " realizing_seed "
            << layer.realizing_seed << '\n';
      }
    } else if (*census) {
      const ComponentSeed seed(n, parse_dim_vector(seed_a));
      const CensusResult c = length_census(seed, Integer(length));
      if (json) {
        Json hits = Json::array();
        for (const auto& h : c.hits) hits.push_back({{"i", h.coord.i}, {"r", h.coord.r}, {"dim", to_json(h.dim)}});
        Json j;
        j["n"] = n;
        j["seed"] = to_json(seed.qs_dim);
        j["length"] = c.length.str();
        j["count"] = c.count;
        j["hits"] = std::move(hits);
        out << j.dump(1) << '\n';
      } else {
        out << "length " << c.length << " count " << c.count << '\n';
        for (const auto& h : c.hits) out << "  " << to_string(h.coord) << ' ' << h.dim << '\n';
      }
    } else if (*pairs) {
      const auto found =
          samelength_pair_search(n, static_cast<std::size_t>(r), static_cast<std::size_t>(s), max_i);
      if (json) {
        Json list = Json::array();
        for (const auto& w : found) {
          Json j;
          j["i"] = w.i;
          j["seed"] = to_json(w.seed);
          j["node_s"] = {w.node_s.i, w.node_s.r};
          j["dim_s"] = to_json(w.dim_s);
          j["node_r"] = {w.node_r.i, w.node_r.r};
          j["dim_r"] = to_json(w.dim_r);
          j["length"] = w.length.str();
          if (w.inequality_window) j["inequality_window"] = *w.inequality_window;
          list.push_back(std::move(j));
        }
        out << list.dump(1) << '\n';
      } else {
        for (const auto& w : found)
          out << "i=" << w.i << " seed " << w.seed << " X_" << s << " " << to_string(w.node_s) << ' ' << w.dim_s
              << " (tau^" << w.i << " X)_" << r << " " << to_string(w.node_r) << ' ' << w.dim_r << " length "
              << w.length << '\n';
        if (found.empty()) out << "no witness with i <= " << max_i << '\n';
      }
    } else if (*dimset) {
      const ComponentSeed c(n, parse_dim_vector(seed_a)), d(n, parse_dim_vector(seed_b));
      out << (dimset_equal(c, d) ? "true" : "false") << '\n';
    } else if (*verify) {
      const IntRange nr = parse_range(n_text);
      bounds.n_lo = static_cast<int>(nr.lo);
      bounds.n_hi = static_cast<int>(nr.hi);
      require_wild(bounds.n_lo);
      std::vector<std::string> names;
      if (suite == "all") {
        names = suite_names();
      } else {
        if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
          throw InvalidParameter("unknown suite '" + suite + "'");
        names.push_back(suite);
      }
      bool ok = true;
      Json all = Json::array();
      for (const auto& name : names) {
        const Report rep = run_suite(name, bounds);
        ok = ok && rep.ok();
        if (json) all.push_back(report_json(rep, timing));
        else print_report(out, rep, timing);
        if (!timing) err << "suite " << name << " took " << rep.wall_seconds << " s\n";
      }
      if (json) out << (all.size() == 1 ? all[0] : all).dump(1) << '\n';
      return ok ? kOk : kTheorem;
    }
  } catch (const InvalidParameter& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const TheoremViolation& e) {
    err << "theorem violation: " << e.what() << '\n';
    return kTheorem;
  } catch (const ConstructionError& e) {
    err << "construction failure: " << e.what() << '\n';
    return kConstruction;
  } catch (const DimensionContractError& e) {
    err << "construction failure: " << e.what() << '\n';
    return kConstruction;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}

}  // namespace kronecker::cli
