#include "besent/preprocess.hpp"

#include <fstream>
#include <sstream>

#include "besent/error.hpp"
#include "besent/utf8.hpp"

namespace besent {

namespace {

bool is_scheme_char(char32_t cp) {
    return (cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z') ||
           (cp >= U'0' && cp <= U'9') || cp == U'+' || cp == U'-' || cp == U'.';
}

bool is_scheme_start(char32_t cp) {
    return (cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z');
}

// Blanks out every maximal scheme://non-space run.
void blank_urls(std::vector<char32_t>& cps) {
    const std::size_t n = cps.size();
    std::size_t i = 0;
    while (i + 2 < n) {
        if (cps[i] == U':' && cps[i + 1] == U'/' && cps[i + 2] == U'/') {
            // Walk back over the scheme.
            std::size_t start = i;
            while (start > 0 && is_scheme_char(cps[start - 1])) --start;
            while (start < i && !is_scheme_start(cps[start])) ++start;
            if (start < i) {
                std::size_t end = i + 3;
                while (end < n && !utf8::is_space(cps[end])) ++end;
                for (std::size_t k = start; k < end; ++k) cps[k] = U' ';
                i = end;
                continue;
            }
        }
        ++i;
    }
}

}  // namespace

std::string normalize(const std::string& text, const PreprocessConfig& config) {
    auto cps = utf8::decode(text);
    if (config.lowercase) {
        for (auto& cp : cps) cp = utf8::to_lower(cp);
    }
    if (config.strip_urls) blank_urls(cps);
    if (config.strip_punct) {
        for (auto& cp : cps) {
            if (!utf8::is_word(cp) && !utf8::is_space(cp)) cp = U' ';
        }
    }
    // Collapse whitespace runs and trim.
    std::vector<char32_t> out;
    out.reserve(cps.size());
    bool pending_space = false;
    for (char32_t cp : cps) {
        if (utf8::is_space(cp)) {
            pending_space = !out.empty();
        } else {
            if (pending_space) out.push_back(U' ');
            pending_space = false;
            out.push_back(cp);
        }
    }
    return utf8::encode(out);
}

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> tokens;
    const auto cps = utf8::decode(text);
    std::vector<char32_t> current;
    for (char32_t cp : cps) {
        if (utf8::is_space(cp)) {
            if (!current.empty()) {
                tokens.push_back(utf8::encode(current));
                current.clear();
            }
        } else {
            current.push_back(cp);
        }
    }
    if (!current.empty()) tokens.push_back(utf8::encode(current));
    return tokens;
}

std::vector<std::string> filter_tokens(const std::vector<std::string>& tokens,
                                       const PreprocessConfig& config,
                                       const std::unordered_set<std::string>& stopwords) {
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const auto& token : tokens) {
        if (utf8::length(token) < config.min_token_len) continue;
        if (stopwords.count(token)) continue;
        out.push_back(token);
    }
    return out;
}

const std::vector<std::string>& builtin_stopwords() {
    // Indonesian and English function words.
    static const std::vector<std::string> words = {
        // Indonesian
        "yang", "di", "ke", "dari", "dan", "atau", "ini", "itu", "untuk", "pada",
        "dengan", "tidak", "ada", "saya", "aku", "kamu", "dia", "kami", "kita",
        "mereka", "akan", "sudah", "telah", "bisa", "juga", "karena", "jika",
        "kalau", "apa", "siapa", "ya", "nya", "lah", "kah", "pun", "para", "oleh",
        "dalam", "adalah", "sebagai", "saat", "agar", "lagi", "masih", "hanya",
        // English
        "the", "a", "an", "and", "or", "of", "to", "in", "is", "are", "was",
        "were", "be", "been", "it", "this", "that", "for", "on", "with", "as",
        "at", "by", "from", "not", "no", "do", "does", "did", "have", "has",
        "had", "i", "you", "he", "she", "we", "they",
    };
    return words;
}

std::unordered_set<std::string> load_stopwords(const PreprocessConfig& config) {
    std::vector<std::string> raw;
    if (!config.stopword_path.has_value()) {
        raw = builtin_stopwords();
    } else if (config.stopword_path->empty()) {
        return {};
    } else {
        std::ifstream in(*config.stopword_path, std::ios::binary);
        if (!in) {
            throw ConfigError("cannot read stopword file '" + *config.stopword_path + "'");
        }
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            line = trim_whitespace(line);
            if (line.empty() || line[0] == '#') continue;
            raw.push_back(line);
        }
    }
    // Stopwords are matched against normalized tokens, so normalize them the
    // same way.
    std::unordered_set<std::string> out;
    for (const auto& word : raw) {
        for (const auto& token : tokenize(normalize(word, config))) out.insert(token);
    }
    return out;
}

Preprocessor::Preprocessor(PreprocessConfig config)
    : config_(std::move(config)), stopwords_(load_stopwords(config_)) {}

Preprocessor::Preprocessor(PreprocessConfig config, std::unordered_set<std::string> stopwords)
    : config_(std::move(config)), stopwords_(std::move(stopwords)) {}

std::vector<std::string> Preprocessor::run(const std::string& text) const {
    return filter_tokens(tokenize(normalize(text, config_)), config_, stopwords_);
}

TokenizedDoc Preprocessor::run(const Chat& chat) const {
    return {chat.id, run(chat.text)};
}

std::vector<TokenizedDoc> Preprocessor::run(const std::vector<LabeledChat>& chats) const {
    std::vector<TokenizedDoc> docs;
    docs.reserve(chats.size());
    for (const auto& lc : chats) docs.push_back(run(lc.chat));
    return docs;
}

}  // namespace besent
