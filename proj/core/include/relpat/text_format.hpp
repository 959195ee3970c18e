#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "relpat/core.hpp"

namespace relpat {

/// Reads the key = value pattern file format:
///
///   # comment
///   alphabet = a b
///   relation = len
///   pattern = x1 x2 ab^2 y1
///   pairs = (x1,x2) (y1,x2)
///
/// Tokens made only of alphabet symbols, each optionally followed by ^n,
/// are terminal runs; other identifiers are variables. Errors are
/// ParseError with a 1-based line and column.
RelationalPattern parse_pattern_file(std::string_view text);

/// Inverse of parse_pattern_file. Terminal runs of 3 or more use ^n.
std::string serialize_pattern_file(const RelationalPattern& rp);

/// Expands "ab^3a" to "abbba". With an alphabet, every symbol must be in it.
Word parse_word(std::string_view text,
                const std::optional<Alphabet>& alphabet = std::nullopt);

/// Compact form of a word: runs of 3 or more as s^n.
std::string format_word(const Word& w);

}  // namespace relpat
