#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "quantion/quantion.hpp"
#include "quantion/representations.hpp"
#include "quantion/suite.hpp"
#include "quantion/tables.hpp"

namespace quantion::io {

using nlohmann::json;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// [Re a, Im a, Re b, Im b, Re c, Im c, Re d, Im d]
json to_json(const Quantion& q);
/// [p0, p1, p2, p3]
json to_json(const FourVector& p);
/// 4 complex entries, interleaved re/im
json to_json(const QuantionicState& psi);
/// {algebra, identity, samples, seed, tol, max_residual, verdict}
json to_json(const VerificationReport& r);
json to_json(const std::vector<VerificationReport>& reports);
json to_json(const ZovkoCurrent& j);
json to_json(const BasisTable& t);

/// Throw ParseError on wrong shape, non-numbers or non-finite values.
Quantion quantion_from_json(const json& j);
FourVector four_vector_from_json(const json& j);
QuantionicState state_from_json(const json& j);
VerificationReport report_from_json(const json& j);

/// Reads and parses a file; ParseError on I/O or syntax problems.
json read_json_file(const std::string& path);

}  // namespace quantion::io
