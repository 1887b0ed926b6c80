#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "besent/labels.hpp"

namespace besent {

enum class ForumType { main, reply };

const std::string& to_string(ForumType t);
std::optional<ForumType> parse_forum_type(const std::string& name);

// One forum message. Optional string fields are either absent or non-empty;
// an empty string in a file is read back as absent.
struct Chat {
    std::string id;
    ForumType forum_type = ForumType::main;
    std::optional<std::string> parent_id;
    std::optional<std::string> author_id;
    std::optional<std::string> subject_id;
    std::string text;
    std::optional<std::string> timestamp;

    bool operator==(const Chat&) const = default;
};

struct LabeledChat {
    Chat chat;
    Sentiment sentiment = Sentiment::neutral;
    Bloom bloom = Bloom::understanding;

    bool operator==(const LabeledChat&) const = default;
};

// A dataset row: a chat plus whatever gold labels the file carried.
struct ChatRecord {
    Chat chat;
    std::optional<Sentiment> sentiment;
    std::optional<Bloom> bloom;

    bool labeled() const { return sentiment.has_value() && bloom.has_value(); }
    bool operator==(const ChatRecord&) const = default;
};

// Records with both labels, in input order.
std::vector<LabeledChat> labeled_only(const std::vector<ChatRecord>& records);

struct Annotation {
    std::string chat_id;
    std::string annotator_id;
    Sentiment sentiment = Sentiment::neutral;
    Bloom bloom = Bloom::understanding;

    bool operator==(const Annotation&) const = default;
};

struct AnnotationSet {
    std::vector<Annotation> annotations;
    std::vector<std::string> annotator_ids;  // ordered, first appearance

    // Enforces (chat_id, annotator_id) uniqueness and membership of every
    // annotator in annotator_ids; with chats given, every referenced chat
    // must exist there. Throws ValidationError.
    void validate(const std::vector<Chat>* chats = nullptr) const;
};

struct DatasetStats {
    std::optional<std::size_t> n_videos;  // distinct subject ids, when any present
    std::size_t n_main = 0;
    std::size_t n_reply = 0;
    std::size_t n_chats = 0;
    std::size_t n_words = 0;  // whitespace tokens of raw text
    std::map<Sentiment, std::size_t> sentiment_counts;
    std::map<Bloom, std::size_t> bloom_counts;

    // Per-class shares in percent, rounded to 2 decimals.
    std::map<Sentiment, double> sentiment_percent() const;
    std::map<Bloom, double> bloom_percent() const;
};

DatasetStats dataset_stats(const std::vector<LabeledChat>& chats);

// Structural checks over a whole dataset: non-empty unique ids, text non-empty
// after Unicode whitespace trimming, reply <=> parent_id present, and every
// parent_id names a main chat in the same dataset. Throws ValidationError with
// the offending record index (0-based, reported 1-based as a record number).
void validate_chats(const std::vector<ChatRecord>& records);

// Whitespace-trimmed copy (Unicode-aware: ASCII whitespace plus NBSP and the
// common Unicode space block).
std::string trim_whitespace(const std::string& text);

}  // namespace besent
