#include "clsfront/unicode.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include "clsfront/errors.hpp"

namespace clsfront {

namespace {

constexpr char32_t kZeroWidthNonJoiner = 0x200C;
constexpr char32_t kZeroWidthJoiner = 0x200D;

[[noreturn]] void bad_utf8(std::size_t offset) {
  throw Error(Errc::invalid_utf8,
              "invalid UTF-8 sequence at byte " + std::to_string(offset),
              offset);
}

}  // namespace

std::vector<DecodedCodepoint> decode_utf8(std::string_view text) {
  std::vector<DecodedCodepoint> out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const auto lead = static_cast<unsigned char>(text[i]);
    std::size_t len = 0;
    char32_t cp = 0;
    char32_t min = 0;
    if (lead < 0x80) {
      len = 1, cp = lead;
    } else if ((lead & 0xE0) == 0xC0) {
      len = 2, cp = lead & 0x1F, min = 0x80;
    } else if ((lead & 0xF0) == 0xE0) {
      len = 3, cp = lead & 0x0F, min = 0x800;
    } else if ((lead & 0xF8) == 0xF0) {
      len = 4, cp = lead & 0x07, min = 0x10000;
    } else {
      bad_utf8(i);
    }
    if (i + len > text.size()) bad_utf8(i);
    for (std::size_t k = 1; k < len; ++k) {
      const auto cont = static_cast<unsigned char>(text[i + k]);
      if ((cont & 0xC0) != 0x80) bad_utf8(i);
      cp = (cp << 6) | (cont & 0x3F);
    }
    if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      bad_utf8(i);
    }
    out.push_back({cp, i, len});
    i += len;
  }
  return out;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
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

std::string encode_utf8(std::u32string_view cps) {
  std::string out;
  out.reserve(cps.size() * 3);
  for (char32_t cp : cps) append_utf8(out, cp);
  return out;
}

std::string normalize_text(std::string_view raw) {
  std::string stripped;
  stripped.reserve(raw.size());
  for (const auto& cp : decode_utf8(raw)) {
    if (cp.value == kZeroWidthJoiner || cp.value == kZeroWidthNonJoiner) {
      continue;
    }
    stripped.append(raw.substr(cp.offset, cp.length));
  }

  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) {
    throw Error(Errc::io_error,
                std::string("ICU NFC unavailable: ") + u_errorName(status));
  }
  const auto source = icu::UnicodeString::fromUTF8(stripped);
  if (nfc->isNormalized(source, status) && U_SUCCESS(status)) {
    return stripped;
  }
  status = U_ZERO_ERROR;
  const icu::UnicodeString composed = nfc->normalize(source, status);
  if (U_FAILURE(status)) {
    throw Error(Errc::io_error,
                std::string("NFC normalization failed: ") + u_errorName(status));
  }
  std::string out;
  composed.toUTF8String(out);
  return out;
}

bool is_whitespace(char32_t cp) {
  return u_isUWhiteSpace(static_cast<UChar32>(cp));
}

bool is_punctuation(char32_t cp) {
  return u_ispunct(static_cast<UChar32>(cp));
}

}  // namespace clsfront
