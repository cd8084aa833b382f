#include "quantion/io.hpp"

#include <cmath>
#include <fstream>

namespace quantion::io {

namespace {

std::vector<double> numbers(const json& j, std::size_t count, const char* what) {
  if (!j.is_array() || j.size() != count)
    throw ParseError(std::string(what) + ": expected a JSON array of " + std::to_string(count) + " numbers");
  std::vector<double> out;
  out.reserve(count);
  for (const json& v : j) {
    if (!v.is_number()) throw ParseError(std::string(what) + ": non-numeric entry " + v.dump());
    const double x = v.get<double>();
    if (!std::isfinite(x)) throw ParseError(std::string(what) + ": non-finite entry");
    out.push_back(x);
  }
  return out;
}

}  // namespace

json to_json(const Quantion& q) {
  return json::array({q.a.real(), q.a.imag(), q.b.real(), q.b.imag(), q.c.real(), q.c.imag(), q.d.real(),
                      q.d.imag()});
}

json to_json(const FourVector& p) { return json::array({p.p0, p.p1, p.p2, p.p3}); }

json to_json(const QuantionicState& psi) {
  json out = json::array();
  for (Eigen::Index k = 0; k < psi.size(); ++k) {
    out.push_back(psi(k).real());
    out.push_back(psi(k).imag());
  }
  return out;
}

json to_json(const VerificationReport& r) {
  return {{"algebra", r.algebra},   {"identity", r.identity},         {"samples", r.samples},
          {"seed", r.seed},         {"tol", r.tol},                   {"max_residual", r.max_residual},
          {"verdict", r.pass() ? "pass" : "fail"}};
}

json to_json(const std::vector<VerificationReport>& reports) {
  json out = json::array();
  for (const auto& r : reports) out.push_back(to_json(r));
  return out;
}

json to_json(const ZovkoCurrent& j) { return {{"j", to_json(j.j)}, {"class", std::string(causal_class_name(j.cls))}}; }

json to_json(const BasisTable& t) {
  json cells = json::array();
  for (int r = 0; r < 4; ++r) {
    json row = json::array();
    for (int c = 0; c < 4; ++c)
      row.push_back({{"label", entry_label(t, t.entries[r][c])}, {"value", to_json(t.entries[r][c])}});
    cells.push_back(std::move(row));
  }
  return {{"basis", std::string(basis_name(t.name))}, {"labels", t.labels}, {"cells", std::move(cells)}};
}

Quantion quantion_from_json(const json& j) {
  const auto v = numbers(j, 8, "quantion");
  return {{v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}, {v[6], v[7]}};
}

FourVector four_vector_from_json(const json& j) {
  const auto v = numbers(j, 4, "four-vector");
  return {v[0], v[1], v[2], v[3]};
}

QuantionicState state_from_json(const json& j) {
  const auto v = numbers(j, 8, "state");
  QuantionicState psi;
  for (int k = 0; k < 4; ++k) psi(k) = {v[2 * k], v[2 * k + 1]};
  return psi;
}

VerificationReport report_from_json(const json& j) {
  try {
    VerificationReport r;
    r.algebra = j.at("algebra").get<std::string>();
    r.identity = j.at("identity").get<std::string>();
    r.samples = j.at("samples").get<std::uint64_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.tol = j.at("tol").get<double>();
    r.max_residual = j.at("max_residual").get<double>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace quantion::io
