#include "besent/labels.hpp"

namespace besent {

namespace {

const std::array<std::string, kSentimentCount> kSentimentNames = {
    "positive", "neutral", "negative"};
const std::array<std::string, kBloomCount> kBloomNames = {
    "remembering", "understanding", "applying", "analyzing", "evaluating", "creating"};
const std::array<std::string, kSentimentCount> kSentimentCodes = {
    "positif", "netral", "negatif"};
const std::array<std::string, kBloomCount> kBloomCodes = {
    "rem", "und", "app", "ana", "eva", "cre"};

}  // namespace

const std::string& to_string(Sentiment s) {
    return kSentimentNames[static_cast<std::size_t>(s)];
}

const std::string& to_string(Bloom b) {
    return kBloomNames[static_cast<std::size_t>(b)];
}

std::optional<Sentiment> parse_sentiment(const std::string& name) {
    for (int i = 0; i < kSentimentCount; ++i) {
        if (kSentimentNames[static_cast<std::size_t>(i)] == name) {
            return static_cast<Sentiment>(i);
        }
    }
    return std::nullopt;
}

std::optional<Bloom> parse_bloom(const std::string& name) {
    for (int i = 0; i < kBloomCount; ++i) {
        if (kBloomNames[static_cast<std::size_t>(i)] == name) {
            return static_cast<Bloom>(i);
        }
    }
    return std::nullopt;
}

const std::string& presentation_code(Sentiment s) {
    return kSentimentCodes[static_cast<std::size_t>(s)];
}

const std::string& presentation_code(Bloom b) {
    return kBloomCodes[static_cast<std::size_t>(b)];
}

}  // namespace besent
