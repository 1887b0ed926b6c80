#pragma once

#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "besent/chat.hpp"

namespace besent {

struct PreprocessConfig {
    bool lowercase = true;
    bool strip_urls = true;
    bool strip_punct = true;
    std::size_t min_token_len = 2;
    // Unset: the built-in Indonesian/English function-word list applies.
    // Set to a path: that file replaces it (UTF-8, one token per line, '#'
    // comment lines). Set to "": stopword filtering is disabled.
    std::optional<std::string> stopword_path;

    bool operator==(const PreprocessConfig&) const = default;
};

struct TokenizedDoc {
    std::string chat_id;
    std::vector<std::string> tokens;

    bool operator==(const TokenizedDoc&) const = default;
};

// Lowercase (Unicode-aware), drop scheme://non-space URL substrings, replace
// every non letter/digit/whitespace codepoint with a space, collapse runs of
// whitespace, trim. Each step is gated by its config flag.
std::string normalize(const std::string& text, const PreprocessConfig& config);

// Whitespace split of normalized text; no empty tokens.
std::vector<std::string> tokenize(const std::string& text);

// Drops tokens shorter than min_token_len codepoints and tokens in the
// stopword set; order preserved.
std::vector<std::string> filter_tokens(const std::vector<std::string>& tokens,
                                       const PreprocessConfig& config,
                                       const std::unordered_set<std::string>& stopwords);

// Resolves the config's stopword source (built-in list, file, or none) with
// each entry normalized under the same config. Throws ConfigError when the
// file cannot be read.
std::unordered_set<std::string> load_stopwords(const PreprocessConfig& config);

const std::vector<std::string>& builtin_stopwords();

// Bundles config + resolved stopword set so the pipeline resolves them once.
class Preprocessor {
public:
    explicit Preprocessor(PreprocessConfig config);
    Preprocessor(PreprocessConfig config, std::unordered_set<std::string> stopwords);

    std::vector<std::string> run(const std::string& text) const;
    TokenizedDoc run(const Chat& chat) const;
    std::vector<TokenizedDoc> run(const std::vector<LabeledChat>& chats) const;

    const PreprocessConfig& config() const { return config_; }
    const std::unordered_set<std::string>& stopwords() const { return stopwords_; }

private:
    PreprocessConfig config_;
    std::unordered_set<std::string> stopwords_;
};

}  // namespace besent
