#include "besent/agreement.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "besent/error.hpp"

namespace besent {

namespace {

const std::string kFacetNames[3] = {"sentiment", "bloom", "pair"};

int facet_category_count(AgreementFacet f) {
    switch (f) {
        case AgreementFacet::sentiment: return kSentimentCount;
        case AgreementFacet::bloom: return kBloomCount;
        case AgreementFacet::pair: return kJointCount;
    }
    return 0;
}

int facet_category(const Annotation& a, AgreementFacet f) {
    switch (f) {
        case AgreementFacet::sentiment: return sentiment_id(a.sentiment);
        case AgreementFacet::bloom: return bloom_id(a.bloom);
        case AgreementFacet::pair:
            return sentiment_id(a.sentiment) * kBloomCount + bloom_id(a.bloom);
    }
    return 0;
}

}  // namespace

std::optional<AgreementFacet> parse_agreement_facet(const std::string& name) {
    for (int i = 0; i < 3; ++i) {
        if (kFacetNames[i] == name) return static_cast<AgreementFacet>(i);
    }
    return std::nullopt;
}

const std::string& to_string(AgreementFacet f) {
    return kFacetNames[static_cast<int>(f)];
}

double compute_fleiss_kappa(const AnnotationSet& set, AgreementFacet facet) {
    set.validate();
    const std::size_t n_raters = set.annotator_ids.size();
    if (n_raters < 2) throw ValidationError("Fleiss' kappa needs at least 2 annotators");

    const int n_categories = facet_category_count(facet);
    // Per-item category counts, items keyed by chat id in first-appearance order.
    std::vector<std::string> item_order;
    std::unordered_map<std::string, std::vector<std::size_t>> table;
    std::unordered_map<std::string, std::size_t> raters_per_item;
    for (const auto& a : set.annotations) {
        auto [it, inserted] = table.try_emplace(a.chat_id,
                                                std::vector<std::size_t>(n_categories, 0));
        if (inserted) item_order.push_back(a.chat_id);
        ++it->second[static_cast<std::size_t>(facet_category(a, facet))];
        ++raters_per_item[a.chat_id];
    }
    if (item_order.size() < 2) throw ValidationError("Fleiss' kappa needs at least 2 items");

    std::vector<std::string> incomplete;
    for (const auto& id : item_order) {
        if (raters_per_item[id] != n_raters) incomplete.push_back(id);
    }
    if (!incomplete.empty()) {
        std::string msg = "items not rated by all annotators:";
        for (const auto& id : incomplete) msg += " " + id;
        throw ValidationError(msg);
    }

    const double n = static_cast<double>(n_raters);
    const double N = static_cast<double>(item_order.size());
    double p_bar = 0.0;
    std::vector<double> category_share(n_categories, 0.0);
    for (const auto& id : item_order) {
        const auto& counts = table[id];
        double sum_sq = 0.0;
        for (int j = 0; j < n_categories; ++j) {
            const double c = static_cast<double>(counts[static_cast<std::size_t>(j)]);
            sum_sq += c * c;
            category_share[static_cast<std::size_t>(j)] += c;
        }
        p_bar += (sum_sq - n) / (n * (n - 1.0));
    }
    p_bar /= N;
    double p_e = 0.0;
    for (double share : category_share) {
        const double p_j = share / (N * n);
        p_e += p_j * p_j;
    }
    if (p_e >= 1.0) return 1.0;  // one category everywhere => all agree
    return (p_bar - p_e) / (1.0 - p_e);
}

std::optional<TiePolicy> parse_tie_policy(const std::string& name) {
    if (name == "drop") return TiePolicy::drop;
    if (name == "first_annotator") return TiePolicy::first_annotator;
    return std::nullopt;
}

MergeResult merge_gold_labels(const std::vector<Chat>& chats, const AnnotationSet& set,
                              TiePolicy tie_policy) {
    set.validate(&chats);
    std::unordered_map<std::string, std::size_t> annotator_rank;
    for (std::size_t i = 0; i < set.annotator_ids.size(); ++i) {
        annotator_rank[set.annotator_ids[i]] = i;
    }
    std::unordered_map<std::string, std::vector<const Annotation*>> by_chat;
    for (const auto& a : set.annotations) by_chat[a.chat_id].push_back(&a);

    MergeResult result;
    for (const auto& chat : chats) {
        auto it = by_chat.find(chat.id);
        if (it == by_chat.end() || it->second.empty()) {
            throw ValidationError("chat '" + chat.id + "' has no annotations");
        }
        auto votes = it->second;
        std::sort(votes.begin(), votes.end(), [&](const Annotation* a, const Annotation* b) {
            return annotator_rank[a->annotator_id] < annotator_rank[b->annotator_id];
        });

        // Unique plurality per facet; -1 means tie.
        auto majority = [&](auto facet_of) -> int {
            std::map<int, std::size_t> counts;
            for (const auto* a : votes) ++counts[facet_of(*a)];
            int best = -1;
            std::size_t best_count = 0;
            bool unique = false;
            for (const auto& [value, count] : counts) {
                if (count > best_count) {
                    best = value;
                    best_count = count;
                    unique = true;
                } else if (count == best_count) {
                    unique = false;
                }
            }
            return unique ? best : -1;
        };
        int sentiment = majority([](const Annotation& a) { return sentiment_id(a.sentiment); });
        int bloom = majority([](const Annotation& a) { return bloom_id(a.bloom); });

        if ((sentiment < 0 || bloom < 0) && tie_policy == TiePolicy::drop) {
            result.unresolved.push_back(chat.id);
            continue;
        }
        if (sentiment < 0) sentiment = sentiment_id(votes.front()->sentiment);
        if (bloom < 0) bloom = bloom_id(votes.front()->bloom);
        result.labeled.push_back(
            {chat, static_cast<Sentiment>(sentiment), static_cast<Bloom>(bloom)});
    }
    return result;
}

}  // namespace besent
