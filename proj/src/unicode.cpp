#include "translit/unicode.hpp"

#include <stdexcept>
#include <unordered_map>

namespace translit {

std::u32string decode_utf8(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  size_t i = 0;
  while (i < s.size()) {
    unsigned char b0 = static_cast<unsigned char>(s[i]);
    char32_t cp = 0;
    int extra = 0;
    if (b0 < 0x80) {
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1F;
      extra = 1;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0F;
      extra = 2;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07;
      extra = 3;
    } else {
      throw std::runtime_error("invalid UTF-8 lead byte at offset " + std::to_string(i));
    }
    if (i + extra >= s.size())
      throw std::runtime_error("truncated UTF-8 sequence at offset " + std::to_string(i));
    for (int k = 1; k <= extra; ++k) {
      unsigned char b = static_cast<unsigned char>(s[i + k]);
      if ((b & 0xC0) != 0x80)
        throw std::runtime_error("invalid UTF-8 continuation byte at offset " +
                                 std::to_string(i + k));
      cp = (cp << 6) | (b & 0x3F);
    }
    // Reject overlong forms and surrogates.
    if ((extra == 1 && cp < 0x80) || (extra == 2 && cp < 0x800) ||
        (extra == 3 && cp < 0x10000) || (cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF)
      throw std::runtime_error("invalid UTF-8 scalar at offset " + std::to_string(i));
    out.push_back(cp);
    i += extra + 1;
  }
  return out;
}

std::string encode_utf8(std::u32string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char32_t cp : s) {
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
  return out;
}

bool has_utf8_bom(std::string_view s) {
  return s.size() >= 3 && static_cast<unsigned char>(s[0]) == 0xEF &&
         static_cast<unsigned char>(s[1]) == 0xBB && static_cast<unsigned char>(s[2]) == 0xBF;
}

char32_t to_lower(char32_t c) {
  // ASCII
  if (c >= U'A' && c <= U'Z') return c + 32;
  // Latin-1 supplement (except the multiplication sign)
  if (c >= 0xC0 && c <= 0xDE && c != 0xD7) return c + 32;
  // Latin Extended-A: cased pairs alternate even/odd
  if (c >= 0x100 && c <= 0x177 && (c % 2) == 0) return c + 1;
  if (c >= 0x179 && c <= 0x17E && (c % 2) == 1) return c + 1;
  // Greek
  if (c >= 0x391 && c <= 0x3A9 && c != 0x3A2) return c + 32;
  if (c >= 0x386 && c <= 0x38F) {
    switch (c) {
      case 0x386: return 0x3AC;
      case 0x388: return 0x3AD;
      case 0x389: return 0x3AE;
      case 0x38A: return 0x3AF;
      case 0x38C: return 0x3CC;
      case 0x38E: return 0x3CD;
      case 0x38F: return 0x3CE;
      default: return c;
    }
  }
  // Cyrillic
  if (c >= 0x410 && c <= 0x42F) return c + 32;
  if (c >= 0x400 && c <= 0x40F) return c + 80;
  // Armenian
  if (c >= 0x531 && c <= 0x556) return c + 48;
  return c;
}

namespace {

struct PairHash {
  size_t operator()(const std::pair<char32_t, char32_t>& p) const {
    return (static_cast<size_t>(p.first) << 21) ^ p.second;
  }
};

// base letter + combining mark -> precomposed scalar.
const std::unordered_map<std::pair<char32_t, char32_t>, char32_t, PairHash>& composition_table() {
  static const auto* table = [] {
    auto* t = new std::unordered_map<std::pair<char32_t, char32_t>, char32_t, PairHash>;
    struct Row {
      char32_t mark;
      const char32_t* bases;
      const char32_t* composed;
    };
    static const char32_t grave_b[] = U"aeiouAEIOU";
    static const char32_t grave_c[] = U"àèìòùÀÈÌÒÙ";
    static const char32_t acute_b[] = U"aeiouycnszAEIOUYCNSZ";
    static const char32_t acute_c[] = U"áéíóúýćńśźÁÉÍÓÚÝĆŃŚŹ";
    static const char32_t circ_b[] = U"aeiouAEIOU";
    static const char32_t circ_c[] = U"âêîôûÂÊÎÔÛ";
    static const char32_t tilde_b[] = U"anoANO";
    static const char32_t tilde_c[] = U"ãñõÃÑÕ";
    static const char32_t diaer_b[] = U"aeiouyAEIOUе";
    static const char32_t diaer_c[] = U"äëïöüÿÄËÏÖÜё";
    static const char32_t ring_b[] = U"aAuU";
    static const char32_t ring_c[] = U"åÅůŮ";
    static const char32_t caron_b[] = U"cszrdetnCSZRDETN";
    static const char32_t caron_c[] = U"čšžřďěťňČŠŽŘĎĚŤŇ";
    static const char32_t breve_b[] = U"agиAGИ";
    static const char32_t breve_c[] = U"ăğйĂĞЙ";
    static const char32_t ced_b[] = U"csCS";
    static const char32_t ced_c[] = U"çşÇŞ";
    static const Row rows[] = {
        {0x300, grave_b, grave_c}, {0x301, acute_b, acute_c}, {0x302, circ_b, circ_c},
        {0x303, tilde_b, tilde_c}, {0x308, diaer_b, diaer_c}, {0x30A, ring_b, ring_c},
        {0x30C, caron_b, caron_c}, {0x306, breve_b, breve_c}, {0x327, ced_b, ced_c},
    };
    for (const Row& r : rows)
      for (size_t i = 0; r.bases[i]; ++i) (*t)[{r.bases[i], r.mark}] = r.composed[i];
    return t;
  }();
  return *table;
}

} // namespace

std::u32string compose(std::u32string_view s) {
  const auto& table = composition_table();
  std::u32string out;
  out.reserve(s.size());
  for (char32_t c : s) {
    if (!out.empty() && c >= 0x300 && c <= 0x36F) {
      auto it = table.find({out.back(), c});
      if (it != table.end()) {
        out.back() = it->second;
        continue;
      }
    }
    out.push_back(c);
  }
  return out;
}

} // namespace translit
