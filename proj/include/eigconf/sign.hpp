#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eigconf/rational.hpp"

namespace eigconf {

using SignSequence = std::vector<Sign>;

char to_char(Sign s);

/// Maps '-', '0', '+' to a Sign; throws ParseError otherwise.
Sign sign_from_char(char c);

std::string to_string(std::span<const Sign> signs);
SignSequence parse_signs(std::string_view text);

/// Number of adjacent opposite-sign pairs once zeros are deleted.
int variation_count(std::span<const Sign> signs);

/// Length of the all-zero prefix.
int leading_zero_count(std::span<const Sign> signs);

/// Signs of a coefficient list with an implicit trailing `+` (the monic
/// leading coefficient) appended.
SignSequence with_plus(std::span<const Sign> signs);

}  // namespace eigconf
