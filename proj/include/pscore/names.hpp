#pragma once

#include <string>
#include <string_view>

namespace pscore {

/// Trims leading/trailing whitespace and collapses internal whitespace runs
/// to a single space. Casing is preserved.
std::string normalize_name(std::string_view raw);

/// Comparison key: normalize_name() followed by ASCII case folding. Bytes
/// outside ASCII are left untouched.
std::string fold_key(std::string_view raw);

/// Strict weak order on case-folded keys, ties broken by the raw bytes.
bool folded_less(std::string_view a, std::string_view b);

}  // namespace pscore
