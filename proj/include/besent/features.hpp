#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "besent/matrix.hpp"
#include "besent/preprocess.hpp"
#include "besent/rng.hpp"

namespace besent {

inline constexpr std::uint32_t kPadId = 0;
inline constexpr std::uint32_t kUnkId = 1;
inline constexpr std::uint32_t kFirstTermId = 2;

// Term index over a training corpus. Terms are ordered by descending document
// frequency with lexicographic tie-break, so ids are deterministic; real terms
// occupy ids 2.. after the PAD/UNK reserves.
class Vocabulary {
public:
    Vocabulary() = default;
    Vocabulary(std::vector<std::string> terms, std::vector<std::size_t> doc_freq,
               std::size_t n_docs);

    std::size_t size() const { return terms_.size() + kFirstTermId; }  // incl. PAD/UNK
    std::size_t term_count() const { return terms_.size(); }
    std::size_t n_docs() const { return n_docs_; }

    // Sequence/feature id of a term (>= 2), or UNK when absent.
    std::uint32_t id_of(const std::string& term) const;
    bool contains(const std::string& term) const { return index_.count(term) != 0; }

    const std::string& term_for_id(std::uint32_t id) const;
    std::size_t doc_freq_for_id(std::uint32_t id) const;

    const std::vector<std::string>& terms() const { return terms_; }
    const std::vector<std::size_t>& doc_freq() const { return doc_freq_; }

    // Content hash; models record it and refuse to mix vocabularies.
    std::string fingerprint() const;

private:
    std::vector<std::string> terms_;      // ordered; id = position + kFirstTermId
    std::vector<std::size_t> doc_freq_;   // aligned with terms_
    std::unordered_map<std::string, std::uint32_t> index_;
    std::size_t n_docs_ = 0;
};

// Keeps terms with document frequency >= min_df, truncated to the max_size
// most frequent after the ordering rule. Errors on an empty corpus.
Vocabulary build_vocabulary(const std::vector<TokenizedDoc>& docs, std::size_t min_df,
                            std::size_t max_size);

// Sparse L2-normalized tf-idf vector. Entry ids are vocabulary ids (>= 2);
// dim equals the vocabulary size including the PAD/UNK reserves.
struct FeatureVector {
    std::vector<std::pair<std::uint32_t, double>> entries;  // ascending by id
    std::uint32_t dim = 0;

    double at(std::uint32_t id) const;
    double l2_norm() const;
    bool operator==(const FeatureVector&) const = default;
};

double squared_distance(const FeatureVector& a, const FeatureVector& b);

// weight(t) = tf(t) * (ln((1 + n_docs) / (1 + df(t))) + 1), then L2-normalized
// (the zero vector stays zero). Out-of-vocabulary tokens are ignored.
FeatureVector vectorize_tfidf(const TokenizedDoc& doc, const Vocabulary& vocab);

// Fixed-length id sequence for the recurrent path.
struct TokenSequence {
    std::vector<std::uint32_t> ids;  // length L; PAD-filled past true_len
    std::size_t true_len = 0;

    bool operator==(const TokenSequence&) const = default;
};

// First L tokens mapped to ids (UNK for out-of-vocabulary), right-padded.
TokenSequence encode_sequence(const TokenizedDoc& doc, const Vocabulary& vocab, std::size_t length);

// Embedding rows aligned with vocabulary ids; PAD row all zeros.
struct EmbeddingMatrix {
    Matrix vectors;  // vocab.size() x dim

    std::size_t dim() const { return vectors.cols; }
};

// Fresh U(-0.05, 0.05) embeddings, PAD row zeroed.
EmbeddingMatrix random_embeddings(const Vocabulary& vocab, std::size_t dim, Rng& rng);

// Word-vector text file: token then `dim` reals per line. Rows for covered
// vocabulary terms are copied; missing terms are random-initialized from the
// given RNG; PAD stays zero. Dimension mismatches name the line.
EmbeddingMatrix load_embeddings(const std::string& path, const Vocabulary& vocab,
                                std::size_t dim, Rng& rng);

}  // namespace besent
