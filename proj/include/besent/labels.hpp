#pragma once

#include <array>
#include <optional>
#include <string>

namespace besent {

// Ordinal codes are fixed; they are used for tie-breaking and joint encoding.
enum class Sentiment : int { positive = 0, neutral = 1, negative = 2 };
enum class Bloom : int {
    remembering = 0,
    understanding = 1,
    applying = 2,
    analyzing = 3,
    evaluating = 4,
    creating = 5,
};

inline constexpr int kSentimentCount = 3;
inline constexpr int kBloomCount = 6;
inline constexpr int kJointCount = kSentimentCount * kBloomCount;

inline constexpr std::array<Sentiment, kSentimentCount> kAllSentiments = {
    Sentiment::positive, Sentiment::neutral, Sentiment::negative};
inline constexpr std::array<Bloom, kBloomCount> kAllBlooms = {
    Bloom::remembering, Bloom::understanding, Bloom::applying,
    Bloom::analyzing,   Bloom::evaluating,    Bloom::creating};

// Lowercase English names; these are the canonical spellings in data files.
const std::string& to_string(Sentiment s);
const std::string& to_string(Bloom b);

std::optional<Sentiment> parse_sentiment(const std::string& name);
std::optional<Bloom> parse_bloom(const std::string& name);

// Short Indonesian presentation codes used by report rendering:
// positif / netral / negatif and rem / und / app / ana / eva / cre.
const std::string& presentation_code(Sentiment s);
const std::string& presentation_code(Bloom b);

inline int sentiment_id(Sentiment s) { return static_cast<int>(s); }
inline int bloom_id(Bloom b) { return static_cast<int>(b); }

}  // namespace besent
