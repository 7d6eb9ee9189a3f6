#pragma once

// JSON forms of representations and brick certificates.
//
//   Rep:         {"n": 3, "dim": [a, b], "mats": [[["1", "0"], ...], ...]}
//   Certificate: {"root": [a, b], "case_trace": ["case 2 (5,3) r=1 s=2", ...], "end_dim": 1}
//
// Entries and dimensions that may exceed machine range are decimal strings.

#include <fstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "kronecker/bricks.hpp"
#include "kronecker/errors.hpp"
#include "kronecker/reps.hpp"

namespace kronecker {

using Json = nlohmann::ordered_json;

inline Json to_json(const DimVector& v) { return Json::array({v.a.str(), v.b.str()}); }

inline Json to_json(const Rep& m) {
  Json mats = Json::array();
  for (const auto& x : m.mats()) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < x.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < x.cols(); ++c) row.push_back(to_string(x(r, c)));
      rows.push_back(std::move(row));
    }
    mats.push_back(std::move(rows));
  }
  Json out;
  out["n"] = m.arrows();
  out["dim"] = Json::array({m.source_dim(), m.sink_dim()});
  out["mats"] = std::move(mats);
  return out;
}

inline Json certificate_json(const BrickCertificate& cert) {
  Json trace = Json::array();
  for (const auto& step : cert.case_trace) trace.push_back(to_string(step));
  Json out;
  out["root"] = to_json(cert.root);
  out["case_trace"] = std::move(trace);
  out["end_dim"] = cert.end_dim;
  return out;
}

namespace detail {

inline std::size_t json_size(const Json& j, const char* what) {
  if (j.is_number_unsigned()) return j.get<std::size_t>();
  if (j.is_number_integer() && j.get<long long>() >= 0) return static_cast<std::size_t>(j.get<long long>());
  if (j.is_string()) return to_size(parse_integer(j.get<std::string>()), what);
  throw InvalidParameter(std::string("Rep JSON: ") + what + " must be a nonnegative integer");
}

inline Rational json_entry(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw InvalidParameter("Rep JSON: matrix entries must be decimal strings or integers");
}

}  // namespace detail

inline Rep rep_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("dim") || !j.contains("mats"))
    throw InvalidParameter("Rep JSON needs keys n, dim, mats");
  const auto n = static_cast<int>(detail::json_size(j.at("n"), "n"));
  const Json& dim = j.at("dim");
  if (!dim.is_array() || dim.size() != 2) throw InvalidParameter("Rep JSON: dim must be [a, b]");
  const std::size_t a = detail::json_size(dim[0], "dim"), b = detail::json_size(dim[1], "dim");
  const Json& mats = j.at("mats");
  if (!mats.is_array()) throw InvalidParameter("Rep JSON: mats must be an array");
  std::vector<ExactMatrix> out;
  for (const auto& m : mats) {
    if (!m.is_array() || m.size() != a) throw InvalidParameter("Rep JSON: matrix must have " + std::to_string(a) + " rows");
    ExactMatrix x(a, b);
    for (std::size_t r = 0; r < a; ++r) {
      if (!m[r].is_array() || m[r].size() != b)
        throw InvalidParameter("Rep JSON: matrix rows must have " + std::to_string(b) + " entries");
      for (std::size_t c = 0; c < b; ++c) x(r, c) = detail::json_entry(m[r][c]);
    }
    out.push_back(std::move(x));
  }
  return Rep(n, a, b, std::move(out));
}

inline Rep read_rep(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidParameter("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidParameter(path + ": " + e.what());
  }
  return rep_from_json(j);
}

inline void write_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidParameter("cannot write " + path);
  out << j.dump(1) << '\n';
}

}  // namespace kronecker
