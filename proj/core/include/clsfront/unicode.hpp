#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace clsfront {

struct DecodedCodepoint {
  char32_t value;
  std::size_t offset;  // byte offset of the first code unit
  std::size_t length;  // number of code units
};

// Strict UTF-8 decoding: rejects overlong forms, surrogates and values past
// U+10FFFF. Throws Errc::invalid_utf8 carrying the offending byte offset.
std::vector<DecodedCodepoint> decode_utf8(std::string_view text);

void append_utf8(std::string& out, char32_t cp);
std::string encode_utf8(std::u32string_view cps);

// NFC with ZWJ/ZWNJ removed. Idempotent. Base+nukta pairs that NFC excludes
// from composition (e.g. U+095C) come out as two codepoints.
std::string normalize_text(std::string_view raw);

bool is_whitespace(char32_t cp);
bool is_punctuation(char32_t cp);

}  // namespace clsfront
