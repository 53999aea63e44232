#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace hufftok::unicode {

constexpr char32_t kReplacement = 0xFFFD;

// Decodes one UTF-8 scalar starting at `pos`; advances `pos` past it.
// Malformed bytes decode as one replacement character per byte.
char32_t decode(std::string_view text, size_t& pos);

// Appends the UTF-8 encoding of `cp` to `out`. Surrogates and values past
// U+10FFFF encode as U+FFFD.
void append(std::string& out, char32_t cp);

std::string to_utf8(char32_t cp);

// Number of scalars in a (possibly malformed) UTF-8 string.
size_t length(std::string_view text);

bool is_space(char32_t cp);

// General categories P* and S*.
bool is_punct_or_symbol(char32_t cp);

char32_t to_lower(char32_t cp);

// Scalar-wise simple lowercasing.
std::string lowercased(std::string_view word);

}  // namespace hufftok::unicode
