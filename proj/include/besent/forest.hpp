#pragma once

#include <map>

#include <json.hpp>

#include "besent/tree.hpp"

namespace besent {

struct ForestParams {
    std::size_t n_trees = 100;
    std::size_t max_depth = 32;
    std::size_t min_samples_leaf = 1;
    std::size_t mtry = 0;  // 0 = floor(sqrt(F))
    bool bootstrap = true;
    std::uint64_t seed = 0;

    bool operator==(const ForestParams&) const = default;
};

struct ForestModel {
    std::vector<std::unique_ptr<TreeNode>> trees;
    ForestParams params;
    std::vector<int> classes;  // ascending
    std::string vocab_fingerprint;
    std::uint32_t feature_dim = 0;
};

// Bagged Gini trees; tree t draws its bootstrap sample and feature subsets
// from an RNG stream derived from (seed, t), so results are independent of
// any cross-tree scheduling. jobs > 1 trains trees on that many threads.
ForestModel fit_random_forest(const std::vector<FeatureVector>& features,
                              const std::vector<int>& labels, const ForestParams& params,
                              std::size_t jobs = 1);

struct ForestVote {
    int predicted = 0;
    std::map<int, std::size_t> votes;  // sums to n_trees
};

// Plurality over tree predictions; ties go to the smallest class id.
ForestVote forest_predict(const ForestModel& model, const FeatureVector& x);

// Versioned JSON round trip (format_version 1, kind "forest").
nlohmann::ordered_json forest_to_json(const ForestModel& model);
ForestModel forest_from_json(const nlohmann::json& doc);

// Branch listing of one tree; the vocabulary must match the model fingerprint.
std::string export_forest_tree(const ForestModel& model, std::size_t tree_index,
                               const Vocabulary& vocab, std::size_t max_depth,
                               const std::function<std::string(std::size_t)>& class_name);

}  // namespace besent
