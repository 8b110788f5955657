#ifndef TRANSLIT_UNICODE_HPP
#define TRANSLIT_UNICODE_HPP

#include <string>
#include <string_view>

namespace translit {

// All strings cross the API as UTF-8; internally we work on sequences of
// Unicode scalars (char32_t). Invalid UTF-8 raises std::runtime_error.
std::u32string decode_utf8(std::string_view s);
std::string encode_utf8(std::u32string_view s);

// True if `s` starts with a UTF-8 byte order mark.
bool has_utf8_bom(std::string_view s);

char32_t to_lower(char32_t c);

// Compose combining-mark sequences (base + U+03xx mark) into precomposed
// scalars where a precomposed form exists in the built-in table. Covers the
// Latin and Cyrillic sequences that occur in name corpora; everything else
// passes through unchanged.
std::u32string compose(std::u32string_view s);

} // namespace translit

#endif
