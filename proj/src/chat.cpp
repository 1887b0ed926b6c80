#include "besent/chat.hpp"

#include <cmath>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "besent/error.hpp"
#include "besent/utf8.hpp"

namespace besent {

namespace {

const std::string kMainName = "main";
const std::string kReplyName = "reply";

double round2(double x) { return std::round(x * 100.0) / 100.0; }

std::size_t whitespace_token_count(const std::string& text) {
    const auto cps = utf8::decode(text);
    std::size_t count = 0;
    bool in_token = false;
    for (char32_t cp : cps) {
        if (utf8::is_space(cp)) {
            in_token = false;
        } else if (!in_token) {
            in_token = true;
            ++count;
        }
    }
    return count;
}

}  // namespace

const std::string& to_string(ForumType t) {
    return t == ForumType::main ? kMainName : kReplyName;
}

std::optional<ForumType> parse_forum_type(const std::string& name) {
    if (name == kMainName) return ForumType::main;
    if (name == kReplyName) return ForumType::reply;
    return std::nullopt;
}

std::string trim_whitespace(const std::string& text) {
    const auto cps = utf8::decode(text);
    std::size_t begin = 0;
    std::size_t end = cps.size();
    while (begin < end && utf8::is_space(cps[begin])) ++begin;
    while (end > begin && utf8::is_space(cps[end - 1])) --end;
    return utf8::encode(std::vector<char32_t>(cps.begin() + static_cast<std::ptrdiff_t>(begin),
                                              cps.begin() + static_cast<std::ptrdiff_t>(end)));
}

std::vector<LabeledChat> labeled_only(const std::vector<ChatRecord>& records) {
    std::vector<LabeledChat> out;
    for (const auto& r : records) {
        if (r.labeled()) out.push_back({r.chat, *r.sentiment, *r.bloom});
    }
    return out;
}

void AnnotationSet::validate(const std::vector<Chat>* chats) const {
    std::unordered_set<std::string> known_annotators(annotator_ids.begin(), annotator_ids.end());
    std::unordered_set<std::string> known_chats;
    if (chats != nullptr) {
        for (const auto& c : *chats) known_chats.insert(c.id);
    }
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& a : annotations) {
        if (!known_annotators.count(a.annotator_id)) {
            throw ValidationError("annotation by unknown annotator '" + a.annotator_id + "'");
        }
        if (chats != nullptr && !known_chats.count(a.chat_id)) {
            throw ValidationError("annotation references unknown chat '" + a.chat_id + "'");
        }
        if (!seen.insert({a.chat_id, a.annotator_id}).second) {
            throw ValidationError("duplicate annotation for chat '" + a.chat_id +
                                  "' by annotator '" + a.annotator_id + "'");
        }
    }
}

std::map<Sentiment, double> DatasetStats::sentiment_percent() const {
    std::map<Sentiment, double> out;
    std::size_t total = 0;
    for (const auto& [label, count] : sentiment_counts) total += count;
    for (const auto& [label, count] : sentiment_counts) {
        out[label] = total == 0 ? 0.0
                                : round2(100.0 * static_cast<double>(count) /
                                         static_cast<double>(total));
    }
    return out;
}

std::map<Bloom, double> DatasetStats::bloom_percent() const {
    std::map<Bloom, double> out;
    std::size_t total = 0;
    for (const auto& [label, count] : bloom_counts) total += count;
    for (const auto& [label, count] : bloom_counts) {
        out[label] = total == 0 ? 0.0
                                : round2(100.0 * static_cast<double>(count) /
                                         static_cast<double>(total));
    }
    return out;
}

DatasetStats dataset_stats(const std::vector<LabeledChat>& chats) {
    DatasetStats stats;
    for (Sentiment s : kAllSentiments) stats.sentiment_counts[s] = 0;
    for (Bloom b : kAllBlooms) stats.bloom_counts[b] = 0;
    std::unordered_set<std::string> subjects;
    for (const auto& lc : chats) {
        if (lc.chat.forum_type == ForumType::main) {
            ++stats.n_main;
        } else {
            ++stats.n_reply;
        }
        stats.n_words += whitespace_token_count(lc.chat.text);
        ++stats.sentiment_counts[lc.sentiment];
        ++stats.bloom_counts[lc.bloom];
        if (lc.chat.subject_id) subjects.insert(*lc.chat.subject_id);
    }
    stats.n_chats = stats.n_main + stats.n_reply;
    if (!subjects.empty()) stats.n_videos = subjects.size();
    return stats;
}

void validate_chats(const std::vector<ChatRecord>& records) {
    std::unordered_map<std::string, ForumType> by_id;
    by_id.reserve(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
        const Chat& c = records[i].chat;
        const std::string where = "record " + std::to_string(i + 1);
        if (c.id.empty()) {
            throw ValidationError(where + ": field 'id' is empty");
        }
        if (!by_id.emplace(c.id, c.forum_type).second) {
            throw ValidationError(where + ": duplicate id '" + c.id + "'");
        }
        if (trim_whitespace(c.text).empty()) {
            throw ValidationError(where + ": field 'text' is empty after trimming");
        }
        if (c.forum_type == ForumType::reply && !c.parent_id) {
            throw ValidationError(where + ": reply without field 'parent_id'");
        }
        if (c.forum_type == ForumType::main && c.parent_id) {
            throw ValidationError(where + ": main chat must not carry field 'parent_id'");
        }
    }
    for (std::size_t i = 0; i < records.size(); ++i) {
        const Chat& c = records[i].chat;
        if (!c.parent_id) continue;
        auto it = by_id.find(*c.parent_id);
        if (it == by_id.end()) {
            throw ValidationError("record " + std::to_string(i + 1) + ": parent_id '" +
                                  *c.parent_id + "' names no chat in this dataset");
        }
        if (it->second != ForumType::main) {
            throw ValidationError("record " + std::to_string(i + 1) + ": parent_id '" +
                                  *c.parent_id + "' does not name a main chat");
        }
    }
}

}  // namespace besent
