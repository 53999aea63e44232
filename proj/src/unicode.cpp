#include "hufftok/unicode.hpp"

#include <algorithm>
#include <iterator>

namespace hufftok::unicode {

namespace {

struct CpRange {
  uint32_t lo;
  uint32_t hi;
};

struct CpPair {
  uint32_t cp;
  uint32_t lower;
};

#include "unicode_tables.inc"

template <size_t N>
bool in_ranges(const CpRange (&ranges)[N], char32_t cp) {
  auto it = std::upper_bound(std::begin(ranges), std::end(ranges), uint32_t(cp),
                             [](uint32_t v, const CpRange& r) { return v < r.lo; });
  return it != std::begin(ranges) && std::prev(it)->hi >= uint32_t(cp);
}

}  // namespace

char32_t decode(std::string_view text, size_t& pos) {
  const auto byte = [&](size_t i) { return static_cast<uint8_t>(text[i]); };
  const uint8_t b0 = byte(pos);
  if (b0 < 0x80) {
    ++pos;
    return b0;
  }
  size_t need = 0;
  char32_t cp = 0;
  if ((b0 >> 5) == 0x6) {
    need = 1;
    cp = b0 & 0x1F;
  } else if ((b0 >> 4) == 0xE) {
    need = 2;
    cp = b0 & 0x0F;
  } else if ((b0 >> 3) == 0x1E) {
    need = 3;
    cp = b0 & 0x07;
  } else {
    ++pos;
    return kReplacement;
  }
  if (pos + need >= text.size()) {
    ++pos;
    return kReplacement;
  }
  for (size_t i = 1; i <= need; ++i) {
    const uint8_t b = byte(pos + i);
    if ((b >> 6) != 0x2) {
      ++pos;
      return kReplacement;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  pos += need + 1;
  if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return kReplacement;
  return cp;
}

void append(std::string& out, char32_t cp) {
  if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) cp = kReplacement;
  if (cp <= 0x7F) {
    out.push_back(static_cast<char>(cp));
  } else if (cp <= 0x7FF) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp <= 0xFFFF) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string to_utf8(char32_t cp) {
  std::string s;
  append(s, cp);
  return s;
}

size_t length(std::string_view text) {
  size_t n = 0;
  for (size_t pos = 0; pos < text.size(); ++n) decode(text, pos);
  return n;
}

bool is_space(char32_t cp) { return in_ranges(kSpaceRanges, cp); }

bool is_punct_or_symbol(char32_t cp) { return in_ranges(kPunctSymbolRanges, cp); }

char32_t to_lower(char32_t cp) {
  auto it = std::lower_bound(std::begin(kLowerPairs), std::end(kLowerPairs), uint32_t(cp),
                             [](const CpPair& p, uint32_t v) { return p.cp < v; });
  if (it != std::end(kLowerPairs) && it->cp == uint32_t(cp)) return it->lower;
  return cp;
}

std::string lowercased(std::string_view word) {
  std::string out;
  out.reserve(word.size());
  size_t pos = 0;
  while (pos < word.size()) append(out, to_lower(decode(word, pos)));
  return out;
}

}  // namespace hufftok::unicode
