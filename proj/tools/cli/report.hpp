#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "curvefol/poly.hpp"
#include "curvefol/rational.hpp"

namespace curvefol::cli {

using Json = nlohmann::json;

/// A number when it fits in int64, otherwise its decimal string.
Json integer_json(const Integer& value);
/// Canonical "p/q" string, or "p" for integers.
Json rational_json(const Rational& value);
/// A number, or "inf" for an infinite order.
Json order_json(const AxisOrder& order);
Json poly_json(const MultiPoly& p);
Json polys_json(std::span<const MultiPoly> ps);

std::string sha256_hex(const std::string& bytes);

struct Report {
  std::string command;
  Json options = Json::object();
  std::string digest;
  Json results = Json::object();
  std::vector<std::string> warnings;
  int exit_code = 0;

  Json to_json() const;
};

/// Keys are sorted (nlohmann::json stores objects in a std::map), so the
/// output depends on the report's content only.
std::string render_json(const Report& report);
std::string render_text(const Report& report);

}  // namespace curvefol::cli
