#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace besent::utf8 {

// Minimal UTF-8 layer: decode, encode, classification and lowercasing over the
// letter blocks that matter for chat text (Latin incl. extended, Greek,
// Cyrillic, Arabic, Hebrew, common CJK, Hangul, kana). Invalid bytes decode to
// U+FFFD one byte at a time, so every input round-trips to something stable.

std::vector<char32_t> decode(const std::string& s);
void encode(char32_t cp, std::string& out);
std::string encode(const std::vector<char32_t>& cps);

bool is_space(char32_t cp);
bool is_digit(char32_t cp);
bool is_letter(char32_t cp);
inline bool is_word(char32_t cp) { return is_letter(cp) || is_digit(cp); }

char32_t to_lower(char32_t cp);

// Number of codepoints in a UTF-8 string.
std::size_t length(const std::string& s);

}  // namespace besent::utf8
