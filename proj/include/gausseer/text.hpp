#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace gausseer::text {

/// Replaces every ill-formed UTF-8 sequence with U+FFFD.
std::string sanitize_utf8(std::string_view bytes);

std::string_view trim(std::string_view s);
std::string to_lower(std::string_view s);
bool iequals(std::string_view a, std::string_view b);

/// Splits on runs of ASCII whitespace; never yields empty pieces.
std::vector<std::string_view> split_ws(std::string_view s);

/// Splits on `sep`, ignoring separators nested inside parentheses.
std::vector<std::string> split_top_level(std::string_view s, char sep);

/// Splits into lines on '\n', dropping a trailing '\r' from each.
std::vector<std::string_view> lines(std::string_view s);

/// True for a line made only of '-' characters (at least three) plus blanks.
bool is_dashed_rule(std::string_view line);

}  // namespace gausseer::text
