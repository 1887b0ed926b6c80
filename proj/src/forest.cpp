#include "besent/forest.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "besent/error.hpp"

namespace besent {

namespace {

using ordered_json = nlohmann::ordered_json;

std::unique_ptr<TreeNode> train_one_tree(const std::vector<FeatureVector>& features,
                                         const std::vector<std::size_t>& labels,
                                         std::size_t n_classes, const ForestParams& params,
                                         std::size_t tree_index) {
    Rng rng(Rng::derive(params.seed, tree_index));
    const std::size_t n = features.size();
    std::vector<const FeatureVector*> rows;
    std::vector<std::size_t> row_labels;
    rows.reserve(n);
    row_labels.reserve(n);
    if (params.bootstrap) {
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t pick = rng.next_index(n);
            rows.push_back(&features[pick]);
            row_labels.push_back(labels[pick]);
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            rows.push_back(&features[i]);
            row_labels.push_back(labels[i]);
        }
    }
    TreeGrowthParams growth{params.max_depth, params.min_samples_leaf, params.mtry};
    return grow_tree(rows, row_labels, n_classes, growth, rng, uniform_feature_sampler);
}

ordered_json node_to_json(const TreeNode& node) {
    ordered_json obj;
    obj["gini"] = node.gini;
    obj["n"] = node.n_samples;
    if (node.is_leaf()) {
        obj["counts"] = node.class_counts;
        obj["prediction"] = node.prediction;
    } else {
        obj["feature"] = node.feature_id;
        obj["threshold"] = node.threshold;
        obj["left"] = node_to_json(*node.left);
        obj["right"] = node_to_json(*node.right);
    }
    return obj;
}

std::unique_ptr<TreeNode> node_from_json(const nlohmann::json& obj) {
    auto node = std::make_unique<TreeNode>();
    node->gini = obj.at("gini").get<double>();
    node->n_samples = obj.at("n").get<std::size_t>();
    if (obj.contains("left")) {
        node->feature_id = obj.at("feature").get<std::uint32_t>();
        node->threshold = obj.at("threshold").get<double>();
        node->left = node_from_json(obj.at("left"));
        node->right = node_from_json(obj.at("right"));
    } else {
        node->class_counts = obj.at("counts").get<std::vector<std::size_t>>();
        node->prediction = obj.at("prediction").get<std::size_t>();
    }
    return node;
}

}  // namespace

ForestModel fit_random_forest(const std::vector<FeatureVector>& features,
                              const std::vector<int>& labels, const ForestParams& params,
                              std::size_t jobs) {
    if (features.size() < 2) {
        throw ValidationError("fit_random_forest: need at least 2 samples");
    }
    if (features.size() != labels.size()) {
        throw ValidationError("fit_random_forest: features and labels sizes differ");
    }
    if (params.n_trees < 1) throw ValidationError("fit_random_forest: n_trees must be >= 1");

    ForestModel model;
    model.params = params;
    model.feature_dim = features.front().dim;
    std::set<int> distinct(labels.begin(), labels.end());
    model.classes.assign(distinct.begin(), distinct.end());
    std::vector<std::size_t> internal(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        internal[i] = static_cast<std::size_t>(
            std::lower_bound(model.classes.begin(), model.classes.end(), labels[i]) -
            model.classes.begin());
    }

    model.trees.resize(params.n_trees);
    if (jobs <= 1) {
        for (std::size_t t = 0; t < params.n_trees; ++t) {
            model.trees[t] =
                train_one_tree(features, internal, model.classes.size(), params, t);
        }
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                const std::size_t t = next.fetch_add(1);
                if (t >= params.n_trees) return;
                model.trees[t] =
                    train_one_tree(features, internal, model.classes.size(), params, t);
            }
        };
        std::vector<std::thread> pool;
        const std::size_t n_workers = std::min<std::size_t>(jobs, params.n_trees);
        pool.reserve(n_workers);
        for (std::size_t w = 0; w < n_workers; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return model;
}

ForestVote forest_predict(const ForestModel& model, const FeatureVector& x) {
    if (x.dim != model.feature_dim) {
        throw ValidationError("forest_predict: feature dimension mismatch (" +
                              std::to_string(x.dim) + " vs " +
                              std::to_string(model.feature_dim) + ")");
    }
    std::vector<std::size_t> tally(model.classes.size(), 0);
    for (const auto& tree : model.trees) {
        ++tally[tree_leaf(*tree, x)->prediction];
    }
    ForestVote vote;
    std::size_t best = 0;
    for (std::size_t c = 0; c < tally.size(); ++c) {
        vote.votes[model.classes[c]] = tally[c];
        if (tally[c] > tally[best]) best = c;
    }
    vote.predicted = model.classes[best];
    return vote;
}

nlohmann::ordered_json forest_to_json(const ForestModel& model) {
    ordered_json doc;
    doc["format_version"] = 1;
    doc["kind"] = "forest";
    doc["classes"] = model.classes;
    doc["vocab_fingerprint"] = model.vocab_fingerprint;
    doc["feature_dim"] = model.feature_dim;
    ordered_json params;
    params["n_trees"] = model.params.n_trees;
    params["max_depth"] = model.params.max_depth;
    params["min_samples_leaf"] = model.params.min_samples_leaf;
    params["mtry"] = model.params.mtry;
    params["bootstrap"] = model.params.bootstrap;
    params["seed"] = model.params.seed;
    doc["params"] = params;
    ordered_json trees = ordered_json::array();
    for (const auto& tree : model.trees) trees.push_back(node_to_json(*tree));
    doc["trees"] = std::move(trees);
    return doc;
}

ForestModel forest_from_json(const nlohmann::json& doc) {
    if (!doc.contains("format_version") || doc.at("format_version").get<int>() != 1) {
        throw FormatError("forest model: unsupported format_version");
    }
    if (doc.at("kind").get<std::string>() != "forest") {
        throw FormatError("forest model: kind mismatch");
    }
    ForestModel model;
    model.classes = doc.at("classes").get<std::vector<int>>();
    model.vocab_fingerprint = doc.at("vocab_fingerprint").get<std::string>();
    model.feature_dim = doc.at("feature_dim").get<std::uint32_t>();
    const auto& params = doc.at("params");
    model.params.n_trees = params.at("n_trees").get<std::size_t>();
    model.params.max_depth = params.at("max_depth").get<std::size_t>();
    model.params.min_samples_leaf = params.at("min_samples_leaf").get<std::size_t>();
    model.params.mtry = params.at("mtry").get<std::size_t>();
    model.params.bootstrap = params.at("bootstrap").get<bool>();
    model.params.seed = params.at("seed").get<std::uint64_t>();
    for (const auto& tree : doc.at("trees")) {
        model.trees.push_back(node_from_json(tree));
    }
    return model;
}

std::string export_forest_tree(const ForestModel& model, std::size_t tree_index,
                               const Vocabulary& vocab, std::size_t max_depth,
                               const std::function<std::string(std::size_t)>& class_name) {
    if (model.vocab_fingerprint != vocab.fingerprint()) {
        throw ValidationError("export: vocabulary fingerprint mismatch");
    }
    if (tree_index >= model.trees.size()) {
        throw ValidationError("export: tree index out of range");
    }
    std::function<std::string(std::size_t)> namer = class_name;
    if (!namer) {
        namer = [&model](std::size_t c) { return "class " + std::to_string(model.classes[c]); };
    }
    return export_tree_text(*model.trees[tree_index], vocab, max_depth, namer);
}

}  // namespace besent
