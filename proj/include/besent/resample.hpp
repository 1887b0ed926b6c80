#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "besent/features.hpp"

namespace besent {

struct ResamplePlan {
    std::size_t k_neighbors = 5;
    // Unset: every class is topped up to the majority count. Set: explicit
    // per-class target (classes already above it are left alone).
    std::optional<std::size_t> target_count;
    std::uint64_t seed = 0;
};

// Linear interpolation x_i + u * (x_nn - x_i) on the sparse union of entries.
FeatureVector smote_interpolate(const FeatureVector& a, const FeatureVector& b, double u);

struct SmoteResult {
    std::vector<FeatureVector> features;  // originals first, synthetics after
    std::vector<int> labels;
};

// Classic SMOTE on real-valued vectors: for each minority class, synthesize
// points between a random member and one of its k nearest same-class
// neighbors (Euclidean; k clamped to n-1 for tiny classes, single-member
// classes duplicate). Deterministic for a fixed seed.
SmoteResult smote(const std::vector<FeatureVector>& features, const std::vector<int>& labels,
                  const ResamplePlan& plan);

struct OversampleResult {
    std::vector<TokenSequence> sequences;  // originals first, duplicates after
    std::vector<int> labels;
};

// Duplication oversampling for token sequences (interpolation is undefined on
// discrete ids): minority classes are topped up by uniform sampling with
// replacement. Deterministic for a fixed seed.
OversampleResult random_oversample(const std::vector<TokenSequence>& sequences,
                                   const std::vector<int>& labels, const ResamplePlan& plan);

}  // namespace besent
