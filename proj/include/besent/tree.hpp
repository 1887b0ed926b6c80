#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "besent/features.hpp"
#include "besent/rng.hpp"

namespace besent {

// G = 1 - sum_c p_c^2 over the class counts; total must be >= 1.
double gini_impurity(const std::vector<std::size_t>& class_counts);

struct TreeNode {
    double gini = 0.0;
    std::size_t n_samples = 0;

    // Internal node (left/right set): split x[feature_id] <= threshold.
    std::uint32_t feature_id = 0;
    double threshold = 0.0;
    std::unique_ptr<TreeNode> left;
    std::unique_ptr<TreeNode> right;

    // Leaf: counts aligned with the owning model's class list; prediction is
    // the argmax index (smallest index on ties).
    std::vector<std::size_t> class_counts;
    std::size_t prediction = 0;

    bool is_leaf() const { return left == nullptr; }
};

struct TreeGrowthParams {
    std::size_t max_depth = 32;
    std::size_t min_samples_leaf = 1;
    std::size_t mtry = 0;  // 0 = floor(sqrt(F)), clamped to [1, F]
};

// Candidate features drawn per node; returned ascending.
using FeatureSampler =
    std::function<std::vector<std::uint32_t>(std::size_t n_features, std::size_t mtry, Rng&)>;

std::vector<std::uint32_t> uniform_feature_sampler(std::size_t n_features, std::size_t mtry,
                                                   Rng& rng);

// CART growth with Gini decrease: per node draw mtry features, thresholds are
// midpoints between consecutive distinct values, best (feature, threshold) by
// largest decrease with (smaller feature, smaller threshold) tie-break; stops
// on max depth, purity, n < 2*min_samples_leaf, or no positive decrease.
// `rows` may repeat pointers (bootstrap duplicates); labels are indices into
// a class list of size n_classes.
std::unique_ptr<TreeNode> grow_tree(const std::vector<const FeatureVector*>& rows,
                                    const std::vector<std::size_t>& labels,
                                    std::size_t n_classes, const TreeGrowthParams& params,
                                    Rng& rng, const FeatureSampler& sampler);

struct DecisionTree {
    std::unique_ptr<TreeNode> root;
    std::vector<int> classes;  // ascending; leaf indices point here
};

DecisionTree fit_decision_tree(const std::vector<FeatureVector>& features,
                               const std::vector<int>& labels, const TreeGrowthParams& params,
                               Rng& rng, const FeatureSampler& sampler = uniform_feature_sampler);

// Leaf reached by x; never null for a trained tree.
const TreeNode* tree_leaf(const TreeNode& root, const FeatureVector& x);

int tree_predict(const DecisionTree& tree, const FeatureVector& x);

// Pre-order branch listing down to max_depth (inclusive): one line per node
// with level, Root/Left/Right, the split term and threshold (or the leaf
// class), and the node Gini to 3 decimals.
std::string export_tree_text(const TreeNode& root, const Vocabulary& vocab,
                             std::size_t max_depth,
                             const std::function<std::string(std::size_t)>& class_name);

}  // namespace besent
