#ifndef VERBFILL_UTF8_HPP
#define VERBFILL_UTF8_HPP

#include <string>
#include <string_view>

namespace verbfill {

// Strict UTF-8 decode (rejects overlong forms, surrogates, > U+10FFFF).
// Throws Utf8Error with the byte offset of the first bad unit.
std::u32string decode_utf8(std::string_view bytes);

std::string encode_utf8(std::u32string_view code_points);
std::string encode_utf8(char32_t code_point);

bool is_space_cp(char32_t cp);

}  // namespace verbfill

#endif  // VERBFILL_UTF8_HPP
