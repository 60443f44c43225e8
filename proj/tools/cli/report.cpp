#include "cli/report.hpp"

#include <array>
#include <sstream>

#include <openssl/evp.h>

#include "curvefol/errors.hpp"

namespace curvefol::cli {

Json integer_json(const Integer& value) {
  if (value.fits_slong_p()) return Json(static_cast<std::int64_t>(value.get_si()));
  return Json(value.get_str());
}

Json rational_json(const Rational& value) { return Json(to_string(value)); }

Json order_json(const AxisOrder& order) {
  if (order.is_infinite()) return Json("inf");
  return Json(order.value());
}

Json poly_json(const MultiPoly& p) { return Json(p.to_string()); }

Json polys_json(std::span<const MultiPoly> ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(poly_json(p));
  return out;
}

std::string sha256_hex(const std::string& bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 digest failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 0xf];
  }
  return out;
}

Json Report::to_json() const {
  return Json{{"command", command},
              {"options", options},
              {"input_sha256", digest},
              {"results", results},
              {"warnings", warnings},
              {"exit_code", exit_code}};
}

std::string render_json(const Report& report) { return report.to_json().dump(2) + "\n"; }

namespace {

bool is_flat(const Json& j) {
  if (j.is_array()) {
    for (const auto& e : j)
      if (e.is_structured()) return false;
    return true;
  }
  return !j.is_object();
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::string out = "[";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + scalar_text(j[i]);
    return out + "]";
  }
  return j.dump();
}

void write_text(std::ostringstream& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_flat(value)) {
        out << pad << key << ": " << scalar_text(value) << "\n";
      } else {
        out << pad << key << ":\n";
        write_text(out, value, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (is_flat(e)) {
        out << pad << "- " << scalar_text(e) << "\n";
      } else {
        out << pad << "-\n";
        write_text(out, e, indent + 2);
      }
    }
  } else {
    out << pad << scalar_text(j) << "\n";
  }
}

}  // namespace

std::string render_text(const Report& report) {
  std::ostringstream out;
  out << report.command << " (input sha256 " << report.digest << ")\n";
  if (!report.options.empty()) write_text(out, Json{{"options", report.options}}, 0);
  write_text(out, report.results, 0);
  for (const auto& w : report.warnings) out << "warning: " << w << "\n";
  return out.str();
}

}  // namespace curvefol::cli
