#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace gausseer::elements {

inline constexpr int kMaxAtomicNumber = 118;

/// Symbol for atomic number 1..118, empty view otherwise.
std::string_view symbol(int atomic_number);

/// 1..118 for a canonical symbol, 0 when unknown.
int atomic_number(std::string_view canonical_symbol);

/// Case-insensitive lookup returning the canonical capitalization ("fe" -> "Fe").
std::optional<std::string> canonicalize(std::string_view raw);

}  // namespace gausseer::elements
