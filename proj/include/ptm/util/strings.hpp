#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ptm::util {

/// Canonical text normalization used across the toolkit: strip leading and
/// trailing whitespace, collapse internal whitespace runs to a single space.
/// Case is preserved.
std::string normalize_ws(std::string_view text);

/// ASCII lowercase copy (non-ASCII bytes pass through unchanged).
std::string lower_ascii(std::string_view text);

/// Split on whitespace runs; no empty tokens.
std::vector<std::string> split_words(std::string_view text);

/// Split into alphanumeric tokens, ASCII-lowercased. Everything else is a
/// delimiter. Used by the hashing encoder and lexical-overlap checks.
std::vector<std::string> tokenize(std::string_view text);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

bool starts_with_icase(std::string_view text, std::string_view prefix);

/// Case-insensitive substring search; npos when absent.
std::size_t find_icase(std::string_view haystack, std::string_view needle);

}  // namespace ptm::util
