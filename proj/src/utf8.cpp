#include "besent/utf8.hpp"

namespace besent::utf8 {

namespace {

constexpr char32_t kReplacement = 0xFFFD;

bool is_continuation(unsigned char c) { return (c & 0xC0) == 0x80; }

}  // namespace

std::vector<char32_t> decode(const std::string& s) {
    std::vector<char32_t> out;
    out.reserve(s.size());
    std::size_t i = 0;
    const std::size_t n = s.size();
    while (i < n) {
        const unsigned char c0 = static_cast<unsigned char>(s[i]);
        if (c0 < 0x80) {
            out.push_back(c0);
            ++i;
        } else if ((c0 & 0xE0) == 0xC0 && i + 1 < n && is_continuation(s[i + 1])) {
            char32_t cp = (static_cast<char32_t>(c0 & 0x1F) << 6) |
                          (static_cast<unsigned char>(s[i + 1]) & 0x3F);
            out.push_back(cp >= 0x80 ? cp : kReplacement);
            i += 2;
        } else if ((c0 & 0xF0) == 0xE0 && i + 2 < n && is_continuation(s[i + 1]) &&
                   is_continuation(s[i + 2])) {
            char32_t cp = (static_cast<char32_t>(c0 & 0x0F) << 12) |
                          ((static_cast<unsigned char>(s[i + 1]) & 0x3F) << 6) |
                          (static_cast<unsigned char>(s[i + 2]) & 0x3F);
            out.push_back(cp >= 0x800 ? cp : kReplacement);
            i += 3;
        } else if ((c0 & 0xF8) == 0xF0 && i + 3 < n && is_continuation(s[i + 1]) &&
                   is_continuation(s[i + 2]) && is_continuation(s[i + 3])) {
            char32_t cp = (static_cast<char32_t>(c0 & 0x07) << 18) |
                          ((static_cast<unsigned char>(s[i + 1]) & 0x3F) << 12) |
                          ((static_cast<unsigned char>(s[i + 2]) & 0x3F) << 6) |
                          (static_cast<unsigned char>(s[i + 3]) & 0x3F);
            out.push_back((cp >= 0x10000 && cp <= 0x10FFFF) ? cp : kReplacement);
            i += 4;
        } else {
            out.push_back(kReplacement);
            ++i;
        }
    }
    return out;
}

void encode(char32_t cp, std::string& out) {
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

std::string encode(const std::vector<char32_t>& cps) {
    std::string out;
    out.reserve(cps.size());
    for (char32_t cp : cps) encode(cp, out);
    return out;
}

bool is_space(char32_t cp) {
    switch (cp) {
        case U' ':
        case U'\t':
        case U'\n':
        case U'\r':
        case 0x0B:
        case 0x0C:
        case 0x85:    // NEL
        case 0xA0:    // NBSP
        case 0x1680:  // ogham space
        case 0x2028:
        case 0x2029:
        case 0x202F:
        case 0x205F:
        case 0x3000:
            return true;
        default:
            return cp >= 0x2000 && cp <= 0x200A;  // en quad .. hair space
    }
}

bool is_digit(char32_t cp) {
    return (cp >= U'0' && cp <= U'9') ||
           (cp >= 0x0660 && cp <= 0x0669) ||  // Arabic-Indic
           (cp >= 0x06F0 && cp <= 0x06F9) ||  // extended Arabic-Indic
           (cp >= 0x0966 && cp <= 0x096F);    // Devanagari
}

bool is_letter(char32_t cp) {
    if (cp < 0x80) {
        return (cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z');
    }
    // Letter-block whitelist; everything else (punctuation, symbols, emoji)
    // counts as non-letter and is stripped by the punctuation filter.
    if (cp >= 0xC0 && cp <= 0x24F) return cp != 0xD7 && cp != 0xF7;  // Latin-1 + ext A/B
    if (cp >= 0x250 && cp <= 0x2AF) return true;                     // IPA
    if (cp >= 0x386 && cp <= 0x3FF) return cp != 0x387;              // Greek
    if (cp >= 0x400 && cp <= 0x4FF) return true;                     // Cyrillic
    if (cp >= 0x531 && cp <= 0x58F) return cp < 0x559 || cp >= 0x561;  // Armenian
    if (cp >= 0x5D0 && cp <= 0x5EA) return true;                     // Hebrew
    if (cp >= 0x620 && cp <= 0x64A) return true;                     // Arabic
    if (cp >= 0x905 && cp <= 0x939) return true;                     // Devanagari
    if (cp >= 0xE01 && cp <= 0xE2E) return true;                     // Thai
    if (cp >= 0x3041 && cp <= 0x3096) return true;                   // hiragana
    if (cp >= 0x30A1 && cp <= 0x30FA) return true;                   // katakana
    if (cp >= 0x4E00 && cp <= 0x9FFF) return true;                   // CJK unified
    if (cp >= 0xAC00 && cp <= 0xD7A3) return true;                   // Hangul syllables
    return false;
}

char32_t to_lower(char32_t cp) {
    if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;  // Latin-1
    if (cp >= 0x100 && cp <= 0x177) return (cp % 2 == 0) ? cp + 1 : cp;  // Latin ext-A pairs
    if (cp >= 0x179 && cp <= 0x17E) return (cp % 2 == 1) ? cp + 1 : cp;
    if (cp >= 0x391 && cp <= 0x3A9 && cp != 0x3A2) return cp + 0x20;  // Greek
    if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;                 // Cyrillic
    if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;
    return cp;
}

std::size_t length(const std::string& s) { return decode(s).size(); }

}  // namespace besent::utf8
