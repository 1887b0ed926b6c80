#include "besent/features.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "besent/error.hpp"

namespace besent {

namespace {

const std::string kPadName = "<PAD>";
const std::string kUnkName = "<UNK>";

std::uint64_t fnv1a_update(std::uint64_t h, const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

Vocabulary::Vocabulary(std::vector<std::string> terms, std::vector<std::size_t> doc_freq,
                       std::size_t n_docs)
    : terms_(std::move(terms)), doc_freq_(std::move(doc_freq)), n_docs_(n_docs) {
    if (terms_.size() != doc_freq_.size()) {
        throw ValidationError("vocabulary terms and doc_freq sizes differ");
    }
    index_.reserve(terms_.size());
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        index_[terms_[i]] = static_cast<std::uint32_t>(i) + kFirstTermId;
    }
}

std::uint32_t Vocabulary::id_of(const std::string& term) const {
    auto it = index_.find(term);
    return it == index_.end() ? kUnkId : it->second;
}

const std::string& Vocabulary::term_for_id(std::uint32_t id) const {
    if (id == kPadId) return kPadName;
    if (id == kUnkId) return kUnkName;
    return terms_.at(id - kFirstTermId);
}

std::size_t Vocabulary::doc_freq_for_id(std::uint32_t id) const {
    if (id < kFirstTermId) return 0;
    return doc_freq_.at(id - kFirstTermId);
}

std::string Vocabulary::fingerprint() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    const std::uint64_t docs = n_docs_;
    h = fnv1a_update(h, &docs, sizeof docs);
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        h = fnv1a_update(h, terms_[i].data(), terms_[i].size());
        const std::uint64_t df = doc_freq_[i];
        h = fnv1a_update(h, &df, sizeof df);
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Vocabulary build_vocabulary(const std::vector<TokenizedDoc>& docs, std::size_t min_df,
                            std::size_t max_size) {
    if (docs.empty()) throw ValidationError("cannot build a vocabulary from an empty corpus");
    if (min_df < 1 || max_size < 1) {
        throw ValidationError("build_vocabulary requires min_df >= 1 and max_size >= 1");
    }
    std::map<std::string, std::size_t> df;  // ordered map keeps ties deterministic
    for (const auto& doc : docs) {
        std::vector<std::string> uniq(doc.tokens.begin(), doc.tokens.end());
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (auto& t : uniq) ++df[t];
    }
    std::vector<std::pair<std::string, std::size_t>> entries;
    entries.reserve(df.size());
    for (const auto& [term, count] : df) {
        if (count >= min_df) entries.emplace_back(term, count);
    }
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    if (entries.size() > max_size) entries.resize(max_size);

    std::vector<std::string> terms;
    std::vector<std::size_t> freq;
    terms.reserve(entries.size());
    freq.reserve(entries.size());
    for (auto& [term, count] : entries) {
        terms.push_back(std::move(term));
        freq.push_back(count);
    }
    return Vocabulary(std::move(terms), std::move(freq), docs.size());
}

double FeatureVector::at(std::uint32_t id) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), id,
                               [](const auto& e, std::uint32_t v) { return e.first < v; });
    if (it != entries.end() && it->first == id) return it->second;
    return 0.0;
}

double FeatureVector::l2_norm() const {
    double sum = 0.0;
    for (const auto& [id, w] : entries) sum += w * w;
    return std::sqrt(sum);
}

double squared_distance(const FeatureVector& a, const FeatureVector& b) {
    double sum = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.entries.size() || j < b.entries.size()) {
        if (j >= b.entries.size() ||
            (i < a.entries.size() && a.entries[i].first < b.entries[j].first)) {
            sum += a.entries[i].second * a.entries[i].second;
            ++i;
        } else if (i >= a.entries.size() || b.entries[j].first < a.entries[i].first) {
            sum += b.entries[j].second * b.entries[j].second;
            ++j;
        } else {
            const double d = a.entries[i].second - b.entries[j].second;
            sum += d * d;
            ++i;
            ++j;
        }
    }
    return sum;
}

FeatureVector vectorize_tfidf(const TokenizedDoc& doc, const Vocabulary& vocab) {
    std::map<std::uint32_t, double> tf;
    for (const auto& token : doc.tokens) {
        auto id = vocab.id_of(token);
        if (id >= kFirstTermId) tf[id] += 1.0;
    }
    FeatureVector vec;
    vec.dim = static_cast<std::uint32_t>(vocab.size());
    vec.entries.reserve(tf.size());
    const double n_docs = static_cast<double>(vocab.n_docs());
    double norm_sq = 0.0;
    for (const auto& [id, count] : tf) {
        const double df = static_cast<double>(vocab.doc_freq_for_id(id));
        const double idf = std::log((1.0 + n_docs) / (1.0 + df)) + 1.0;
        const double w = count * idf;
        vec.entries.emplace_back(id, w);
        norm_sq += w * w;
    }
    if (norm_sq > 0.0) {
        const double inv = 1.0 / std::sqrt(norm_sq);
        for (auto& [id, w] : vec.entries) w *= inv;
    }
    return vec;
}

TokenSequence encode_sequence(const TokenizedDoc& doc, const Vocabulary& vocab,
                              std::size_t length) {
    if (length < 1) throw ValidationError("sequence length must be >= 1");
    TokenSequence seq;
    seq.ids.assign(length, kPadId);
    seq.true_len = std::min(doc.tokens.size(), length);
    for (std::size_t i = 0; i < seq.true_len; ++i) {
        seq.ids[i] = vocab.id_of(doc.tokens[i]);
    }
    return seq;
}

EmbeddingMatrix random_embeddings(const Vocabulary& vocab, std::size_t dim, Rng& rng) {
    EmbeddingMatrix emb;
    emb.vectors = Matrix(vocab.size(), dim);
    for (std::size_t r = kUnkId; r < emb.vectors.rows; ++r) {  // UNK onward, PAD stays zero
        for (std::size_t c = 0; c < dim; ++c) {
            emb.vectors.at(r, c) = rng.next_uniform(-0.05, 0.05);
        }
    }
    return emb;
}

EmbeddingMatrix load_embeddings(const std::string& path, const Vocabulary& vocab,
                                std::size_t dim, Rng& rng) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open embedding file '" + path + "'");

    EmbeddingMatrix emb;
    emb.vectors = Matrix(vocab.size(), dim);
    std::vector<bool> covered(vocab.size(), false);

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string token;
        ls >> token;
        std::vector<double> values;
        values.reserve(dim);
        double v;
        while (ls >> v) values.push_back(v);
        if (!ls.eof()) {
            throw FormatError(path + ": line " + std::to_string(lineno) +
                              ": malformed number");
        }
        if (values.size() != dim) {
            throw FormatError(path + ": line " + std::to_string(lineno) + ": expected " +
                              std::to_string(dim) + " values, found " +
                              std::to_string(values.size()));
        }
        if (!vocab.contains(token)) continue;
        const std::uint32_t id = vocab.id_of(token);
        for (std::size_t c = 0; c < dim; ++c) emb.vectors.at(id, c) = values[c];
        covered[id] = true;
    }
    // Uncovered rows (UNK included) are random-initialized; PAD stays zero.
    for (std::size_t r = kUnkId; r < emb.vectors.rows; ++r) {
        if (covered[r]) continue;
        for (std::size_t c = 0; c < dim; ++c) {
            emb.vectors.at(r, c) = rng.next_uniform(-0.05, 0.05);
        }
    }
    return emb;
}

}  // namespace besent
