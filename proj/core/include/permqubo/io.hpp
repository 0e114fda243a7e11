#pragma once

#include <string>

#include <json.hpp>

#include "permqubo/encodings.hpp"
#include "permqubo/solve.hpp"
#include "permqubo/verify.hpp"

namespace permqubo {

using nlohmann::json;

// Canonical JSON instance: keys sorted, integer coefficients, bus positions
// with constants written as -1 (zero bit) and -2 (one bit).
json instance_to_json(const Encoding& e);
json meta_to_json(const EncodingMeta& m);
EncodingMeta meta_from_json(const json& j);

// Polynomial part of an instance file.
QuadPoly poly_from_json(const json& j);

// Rebuilds the encoding from the embedded metadata and checks that the
// result reproduces the file exactly.
Encoding encoding_from_instance(const json& j);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

// qbsolv-style text: "p qubo 0 maxNodes nDiagonals nElements" with the
// constant offset in a leading comment.
std::string to_qubo_text(const QuadPoly& p);
QuadPoly parse_qubo_text(const std::string& text);

// Ising form via x = (1 + s) / 2.  Quarter-integer coefficients are kept
// exact: h4 = 4h, j4 = 4J, offset4 = 4 offset.
struct IsingModel {
  long long offset4 = 0;
  std::map<VarId, long long> h4;
  std::map<std::pair<VarId, VarId>, long long> j4;
};

IsingModel to_ising(const QuadPoly& p);
std::string ising_to_text(const IsingModel& m);

json report_to_json(const VerifyReport& r);
json stats_to_json(const SampleStats& s);

}  // namespace permqubo
