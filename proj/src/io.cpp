#include "eigconf/io.hpp"

#include <fstream>
#include <sstream>

#include "eigconf/errors.hpp"

namespace eigconf {

namespace {

Rational entry_from_json(const nlohmann::json& v) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Rational::parse(std::to_string(v.get<std::uint64_t>()));
    return Rational(static_cast<long long>(v.get<std::int64_t>()));
  }
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  throw ParseError("matrix entry must be an integer or a rational string, got " + v.dump());
}

}  // namespace

SymmetricMatrix matrix_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("matrix document must be a JSON object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer()) throw ParseError("matrix needs an integer \"dim\"");
  if (!doc.contains("entries") || !doc["entries"].is_array()) throw ParseError("matrix needs an \"entries\" array");
  const auto dim = doc["dim"].get<std::int64_t>();
  if (dim < 1) throw ParseError("matrix \"dim\" must be >= 1");
  const auto& rows = doc["entries"];
  if (rows.size() != static_cast<std::size_t>(dim)) {
    throw ParseError("\"entries\" has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(dim));
  }
  const auto n = static_cast<std::size_t>(dim);
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.size() != n) {
      throw ParseError("row " + std::to_string(i) + " must be an array of " + std::to_string(n) + " entries");
    }
    for (std::size_t j = 0; j < n; ++j) m(i, j) = entry_from_json(row[j]);
  }
  try {
    return SymmetricMatrix(std::move(m));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

SymmetricMatrix parse_matrix_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return matrix_from_json(doc);
}

SymmetricMatrix read_matrix_file(const std::filesystem::path& path) {
  try {
    return parse_matrix_json(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

nlohmann::json matrix_to_json(const SymmetricMatrix& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < a.dimension(); ++j) row.push_back(a(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return {{"dim", a.dimension()}, {"entries", std::move(rows)}};
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace eigconf
