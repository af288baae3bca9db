#pragma once

// UTF-8 text folding used for phrase matching and hashtag normalization.
//
// normalize_text applies, in order: compatibility folding (a bounded NFKC
// subset), removal of zero-width/format characters, lowercasing, and collapse
// of whitespace runs to one ASCII space with the ends trimmed.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace botscope::text {

inline constexpr char32_t kReplacement = 0xFFFD;

/// Decodes UTF-8; malformed sequences become U+FFFD, one per bad byte.
inline std::u32string decode_utf8(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    auto c = static_cast<unsigned char>(s[i]);
    int len = c < 0x80 ? 1 : (c >> 5) == 0x6 ? 2 : (c >> 4) == 0xE ? 3 : (c >> 3) == 0x1E ? 4 : 0;
    if (len == 0 || i + len > s.size()) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    char32_t cp = len == 1 ? c : len == 2 ? (c & 0x1F) : len == 3 ? (c & 0x0F) : (c & 0x07);
    bool ok = true;
    for (int k = 1; k < len; ++k) {
      auto cc = static_cast<unsigned char>(s[i + k]);
      if ((cc & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (cc & 0x3F);
    }
    constexpr char32_t kMin[] = {0, 0, 0x80, 0x800, 0x10000};
    if (!ok || cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

inline void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

inline std::string encode_utf8(std::u32string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char32_t cp : s) append_utf8(out, cp);
  return out;
}

inline bool is_space(char32_t cp) {
  switch (cp) {
    case U' ': case U'\t': case U'\n': case U'\v': case U'\f': case U'\r':
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

/// Zero-width and invisible format characters that are dropped outright.
inline bool is_zero_width(char32_t cp) {
  switch (cp) {
    case 0xAD: case 0x034F: case 0x061C: case 0x180E:
    case 0x200B: case 0x200C: case 0x200D: case 0x200E: case 0x200F:
    case 0x2060: case 0x2061: case 0x2062: case 0x2063: case 0x2064:
    case 0xFEFF:
      return true;
    default:
      return (cp >= 0x202A && cp <= 0x202E) || (cp >= 0x2066 && cp <= 0x2069) ||
             (cp >= 0xFE00 && cp <= 0xFE0F);
  }
}

/// Compatibility decomposition for the characters that realistically show up
/// in scraped social text. Returns an empty view when cp maps to itself.
inline std::u32string_view compat_fold(char32_t cp) {
  switch (cp) {
    case 0xFB00: return U"ff";
    case 0xFB01: return U"fi";
    case 0xFB02: return U"fl";
    case 0xFB03: return U"ffi";
    case 0xFB04: return U"ffl";
    case 0xFB05: case 0xFB06: return U"st";
    case 0x2026: return U"...";
    case 0x2024: return U".";
    case 0x2025: return U"..";
    case 0x2033: return U"′′";
    case 0x00B2: return U"2";
    case 0x00B3: return U"3";
    case 0x00B9: return U"1";
    case 0x00BC: return U"1⁄4";
    case 0x00BD: return U"1⁄2";
    case 0x00BE: return U"3⁄4";
    case 0x2122: return U"TM";
    case 0x2116: return U"No";
    case 0x0132: return U"IJ";
    case 0x0133: return U"ij";
    case 0x017F: return U"s";
    case 0x2160: return U"I";
    default: return {};
  }
}

inline char32_t to_lower(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 32;
  if (cp < 0xC0) return cp;
  if ((cp >= 0xC0 && cp <= 0xDE && cp != 0xD7)) return cp + 32;  // Latin-1
  if (cp >= 0x100 && cp <= 0x17F) {                               // Latin Extended-A
    if ((cp >= 0x139 && cp <= 0x148) || (cp >= 0x179 && cp <= 0x17E))
      return (cp % 2 == 1) ? cp + 1 : cp;
    if (cp == 0x130) return U'i';
    if (cp == 0x178) return 0xFF;
    return (cp % 2 == 0 && cp != 0x138 && cp != 0x149) ? cp + 1 : cp;
  }
  if (cp >= 0x391 && cp <= 0x3AB && cp != 0x3A2) return cp + 32;  // Greek
  if (cp >= 0x410 && cp <= 0x42F) return cp + 32;                 // Cyrillic
  if (cp >= 0x400 && cp <= 0x40F) return cp + 80;
  if (cp >= 0xFF21 && cp <= 0xFF3A) return cp + 32;               // fullwidth
  return cp;
}

namespace detail {

inline void fold_into(std::u32string& out, char32_t cp) {
  if (cp >= 0xFF01 && cp <= 0xFF5E) cp -= 0xFEE0;  // fullwidth ASCII
  if (auto f = compat_fold(cp); !f.empty()) {
    for (char32_t c : f) fold_into(out, c);
    return;
  }
  if (cp >= 0x1D400 && cp <= 0x1D6A3) {  // mathematical alphanumerics (bold, italic...)
    char32_t off = (cp - 0x1D400) % 52;
    cp = off < 26 ? U'A' + off : U'a' + (off - 26);
  }
  out.push_back(cp);
}

}  // namespace detail

/// Full matching pipeline on code points.
inline std::u32string normalize_codepoints(std::string_view s) {
  std::u32string folded;
  for (char32_t cp : decode_utf8(s)) {
    if (is_zero_width(cp)) continue;
    detail::fold_into(folded, cp);
  }
  std::u32string out;
  out.reserve(folded.size());
  bool pending_space = false;
  for (char32_t cp : folded) {
    if (is_space(cp)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(U' ');
    pending_space = false;
    out.push_back(to_lower(cp));
  }
  return out;
}

inline std::string normalize_text(std::string_view s) { return encode_utf8(normalize_codepoints(s)); }

/// Lowercase only (no folding, no whitespace handling).
inline std::string lowercase(std::string_view s) {
  std::u32string cps = decode_utf8(s);
  for (auto& cp : cps) cp = to_lower(cp);
  return encode_utf8(cps);
}

/// Collapses whitespace runs to a single space and trims both ends.
inline std::string collapse_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending = false;
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f') {
      pending = !out.empty();
      continue;
    }
    if (pending) out += ' ';
    pending = false;
    out += c;
  }
  return out;
}

inline std::size_t codepoint_count(std::string_view s) {
  std::size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80;
  return n;
}

}  // namespace botscope::text
