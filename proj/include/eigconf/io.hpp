#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "eigconf/matrix.hpp"

namespace eigconf {

/// {"dim": n, "entries": [[...], ...]}; entries are JSON integers or rational
/// literal strings. Throws ParseError on malformed input, including an
/// asymmetric matrix.
SymmetricMatrix matrix_from_json(const nlohmann::json& doc);
SymmetricMatrix parse_matrix_json(std::string_view text);
SymmetricMatrix read_matrix_file(const std::filesystem::path& path);

/// Entries are always written as strings.
nlohmann::json matrix_to_json(const SymmetricMatrix& a);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace eigconf
