#!/usr/bin/env python3
"""Regenerates src/unicode_tables.inc from the Python unicodedata module.

Emits three tables:
  - punct_symbol_ranges: inclusive codepoint ranges with general category P* or S*
  - space_ranges:        inclusive ranges of whitespace (Z* plus ASCII controls)
  - lower_pairs:         (codepoint, lowercase) pairs where a 1:1 simple lowering exists
"""

import sys
import unicodedata

MAX_CP = 0x110000


def ranges_of(pred):
    out = []
    start = None
    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF:
            ok = False
        else:
            ok = pred(chr(cp))
        if ok and start is None:
            start = cp
        elif not ok and start is not None:
            out.append((start, cp - 1))
            start = None
    if start is not None:
        out.append((start, MAX_CP - 1))
    return out


def is_punct_symbol(ch):
    return unicodedata.category(ch)[0] in ("P", "S")


def is_space(ch):
    cp = ord(ch)
    if cp in (0x09, 0x0A, 0x0B, 0x0C, 0x0D, 0x85):
        return True
    return unicodedata.category(ch)[0] == "Z"


def lower_pairs():
    pairs = []
    for cp in range(MAX_CP):
        if 0xD800 <= cp <= 0xDFFF:
            continue
        lo = chr(cp).lower()
        if len(lo) == 1 and ord(lo) != cp:
            pairs.append((cp, ord(lo)))
    return pairs


def emit(file):
    w = file.write
    w("// Generated by scripts/gen_unicode_tables.py (unicodedata %s). Do not edit.\n\n"
      % unicodedata.unidata_version)

    ps = ranges_of(is_punct_symbol)
    w("inline constexpr CpRange kPunctSymbolRanges[] = {\n")
    for a, b in ps:
        w("    {0x%X, 0x%X},\n" % (a, b))
    w("};\n\n")

    sp = ranges_of(is_space)
    w("inline constexpr CpRange kSpaceRanges[] = {\n")
    for a, b in sp:
        w("    {0x%X, 0x%X},\n" % (a, b))
    w("};\n\n")

    lp = lower_pairs()
    w("inline constexpr CpPair kLowerPairs[] = {\n")
    for a, b in lp:
        w("    {0x%X, 0x%X},\n" % (a, b))
    w("};\n")


if __name__ == "__main__":
    out = sys.argv[1] if len(sys.argv) > 1 else "src/unicode_tables.inc"
    with open(out, "w") as f:
        emit(f)
    print("wrote", out)
