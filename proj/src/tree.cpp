#include "besent/tree.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "besent/error.hpp"

namespace besent {

double gini_impurity(const std::vector<std::size_t>& class_counts) {
    std::size_t total = 0;
    for (std::size_t c : class_counts) total += c;
    if (total == 0) throw ValidationError("gini_impurity: empty node");
    const double n = static_cast<double>(total);
    double sum_sq = 0.0;
    for (std::size_t c : class_counts) {
        const double p = static_cast<double>(c) / n;
        sum_sq += p * p;
    }
    return 1.0 - sum_sq;
}

std::vector<std::uint32_t> uniform_feature_sampler(std::size_t n_features, std::size_t mtry,
                                                   Rng& rng) {
    auto picked = rng.sample_without_replacement(n_features, mtry);
    std::vector<std::uint32_t> out;
    out.reserve(picked.size());
    for (std::size_t i : picked) out.push_back(static_cast<std::uint32_t>(i));
    return out;
}

namespace {

// Per-tree training state: a column store over the (possibly resampled) rows
// plus scratch marks for node membership.
struct TreeBuilder {
    const std::vector<const FeatureVector*>& rows;
    const std::vector<std::size_t>& labels;
    std::size_t n_classes;
    const TreeGrowthParams& params;
    Rng& rng;
    const FeatureSampler& sampler;
    std::size_t n_features;
    std::size_t mtry;

    // columns[f] = (row, value) pairs, ascending row, nonzeros only.
    std::vector<std::vector<std::pair<std::size_t, double>>> columns;
    std::vector<std::size_t> node_mark;
    std::size_t current_mark = 0;

    TreeBuilder(const std::vector<const FeatureVector*>& rows_,
                const std::vector<std::size_t>& labels_, std::size_t n_classes_,
                const TreeGrowthParams& params_, Rng& rng_, const FeatureSampler& sampler_)
        : rows(rows_),
          labels(labels_),
          n_classes(n_classes_),
          params(params_),
          rng(rng_),
          sampler(sampler_) {
        n_features = rows.front()->dim;
        mtry = params.mtry == 0
                   ? static_cast<std::size_t>(std::sqrt(static_cast<double>(n_features)))
                   : params.mtry;
        mtry = std::clamp<std::size_t>(mtry, 1, n_features);
        columns.resize(n_features);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            for (const auto& [id, v] : rows[r]->entries) {
                if (v != 0.0) columns[id].emplace_back(r, v);
            }
        }
        node_mark.assign(rows.size(), 0);
    }

    struct Split {
        double decrease = 0.0;
        std::uint32_t feature = 0;
        double threshold = 0.0;
        bool found = false;
    };

    std::vector<std::size_t> count_classes(const std::vector<std::size_t>& node_rows) const {
        std::vector<std::size_t> counts(n_classes, 0);
        for (std::size_t r : node_rows) ++counts[labels[r]];
        return counts;
    }

    // Scans one feature for the best midpoint threshold at this node. Node
    // membership is encoded in node_mark == current_mark.
    void scan_feature(std::uint32_t feature, const std::vector<std::size_t>& node_counts,
                      std::size_t node_size, double node_gini, Split& best) const {
        std::vector<std::pair<double, std::size_t>> present;  // (value, class)
        std::vector<std::size_t> nonzero_counts(n_classes, 0);
        for (const auto& [r, v] : columns[feature]) {
            if (node_mark[r] == current_mark) {
                present.emplace_back(v, labels[r]);
                ++nonzero_counts[labels[r]];
            }
        }
        const std::size_t n_zero = node_size - present.size();
        if (n_zero > 0) {
            // Zero rows form one value group; splice it in sorted position.
            for (std::size_t c = 0; c < n_classes; ++c) {
                const std::size_t z = node_counts[c] - nonzero_counts[c];
                for (std::size_t k = 0; k < z; ++k) present.emplace_back(0.0, c);
            }
        }
        if (present.size() < 2) return;
        std::sort(present.begin(), present.end());
        if (present.front().first == present.back().first) return;  // constant feature

        const double n = static_cast<double>(node_size);
        std::vector<std::size_t> left(n_classes, 0);
        std::vector<std::size_t> right = node_counts;
        std::size_t n_left = 0;
        for (std::size_t i = 0; i + 1 < present.size(); ++i) {
            ++left[present[i].second];
            --right[present[i].second];
            ++n_left;
            if (present[i].first == present[i + 1].first) continue;  // same value group
            const std::size_t n_right = node_size - n_left;
            if (n_left < params.min_samples_leaf || n_right < params.min_samples_leaf) continue;
            const double threshold = (present[i].first + present[i + 1].first) / 2.0;
            const double decrease =
                node_gini - (static_cast<double>(n_left) / n) * gini_impurity(left) -
                (static_cast<double>(n_right) / n) * gini_impurity(right);
            if (decrease > 0.0 && (!best.found || decrease > best.decrease)) {
                best = {decrease, feature, threshold, true};
            }
        }
    }

    std::unique_ptr<TreeNode> make_leaf(const std::vector<std::size_t>& counts,
                                        std::size_t node_size, double gini) const {
        auto node = std::make_unique<TreeNode>();
        node->gini = gini;
        node->n_samples = node_size;
        node->class_counts = counts;
        node->prediction = static_cast<std::size_t>(
            std::max_element(counts.begin(), counts.end()) - counts.begin());
        return node;
    }

    std::unique_ptr<TreeNode> grow(std::vector<std::size_t> node_rows, std::size_t depth) {
        const auto counts = count_classes(node_rows);
        const double node_gini = gini_impurity(counts);
        const std::size_t node_size = node_rows.size();

        const bool pure = node_gini == 0.0;
        if (depth >= params.max_depth || pure || node_size < 2 * params.min_samples_leaf) {
            return make_leaf(counts, node_size, node_gini);
        }

        ++current_mark;
        for (std::size_t r : node_rows) node_mark[r] = current_mark;

        Split best;
        for (std::uint32_t f : sampler(n_features, mtry, rng)) {
            scan_feature(f, counts, node_size, node_gini, best);
        }
        if (!best.found) return make_leaf(counts, node_size, node_gini);

        std::vector<std::size_t> left_rows, right_rows;
        left_rows.reserve(node_size);
        right_rows.reserve(node_size);
        // Nonzero values of the split feature for this node; other rows are 0.
        ++current_mark;
        for (std::size_t r : node_rows) node_mark[r] = current_mark;
        std::vector<std::pair<std::size_t, double>> nonzero;
        for (const auto& [r, v] : columns[best.feature]) {
            if (node_mark[r] == current_mark) nonzero.emplace_back(r, v);
        }
        std::sort(nonzero.begin(), nonzero.end());
        for (std::size_t r : node_rows) {
            double v = 0.0;
            auto it = std::lower_bound(nonzero.begin(), nonzero.end(), r,
                                       [](const auto& p, std::size_t key) { return p.first < key; });
            if (it != nonzero.end() && it->first == r) v = it->second;
            (v <= best.threshold ? left_rows : right_rows).push_back(r);
        }

        auto node = std::make_unique<TreeNode>();
        node->gini = node_gini;
        node->n_samples = node_size;
        node->feature_id = best.feature;
        node->threshold = best.threshold;
        node->class_counts = counts;
        node_rows.clear();
        node_rows.shrink_to_fit();
        node->left = grow(std::move(left_rows), depth + 1);
        node->right = grow(std::move(right_rows), depth + 1);
        return node;
    }
};

}  // namespace

std::unique_ptr<TreeNode> grow_tree(const std::vector<const FeatureVector*>& rows,
                                    const std::vector<std::size_t>& labels,
                                    std::size_t n_classes, const TreeGrowthParams& params,
                                    Rng& rng, const FeatureSampler& sampler) {
    if (rows.empty()) throw ValidationError("cannot grow a tree from empty data");
    if (rows.size() != labels.size()) {
        throw ValidationError("tree training: rows and labels sizes differ");
    }
    TreeBuilder builder(rows, labels, n_classes, params, rng, sampler);
    std::vector<std::size_t> all(rows.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return builder.grow(std::move(all), 0);
}

DecisionTree fit_decision_tree(const std::vector<FeatureVector>& features,
                               const std::vector<int>& labels, const TreeGrowthParams& params,
                               Rng& rng, const FeatureSampler& sampler) {
    if (features.empty()) throw ValidationError("cannot fit a tree on empty data");
    if (features.size() != labels.size()) {
        throw ValidationError("tree training: features and labels sizes differ");
    }
    DecisionTree tree;
    std::set<int> distinct(labels.begin(), labels.end());
    tree.classes.assign(distinct.begin(), distinct.end());
    std::vector<std::size_t> internal(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
        internal[i] = static_cast<std::size_t>(
            std::lower_bound(tree.classes.begin(), tree.classes.end(), labels[i]) -
            tree.classes.begin());
    }
    std::vector<const FeatureVector*> rows(features.size());
    for (std::size_t i = 0; i < features.size(); ++i) rows[i] = &features[i];
    tree.root = grow_tree(rows, internal, tree.classes.size(), params, rng, sampler);
    return tree;
}

const TreeNode* tree_leaf(const TreeNode& root, const FeatureVector& x) {
    const TreeNode* node = &root;
    while (!node->is_leaf()) {
        node = x.at(node->feature_id) <= node->threshold ? node->left.get() : node->right.get();
    }
    return node;
}

int tree_predict(const DecisionTree& tree, const FeatureVector& x) {
    return tree.classes[tree_leaf(*tree.root, x)->prediction];
}

namespace {

void export_node(const TreeNode& node, const Vocabulary& vocab, std::size_t level,
                 std::size_t max_depth, const char* branch,
                 const std::function<std::string(std::size_t)>& class_name,
                 std::ostringstream& out) {
    if (level > max_depth) return;
    char gini[16];
    std::snprintf(gini, sizeof gini, "%.3f", node.gini);
    out << level << '\t' << branch << '\t';
    if (node.is_leaf()) {
        out << "-> " << class_name(node.prediction);
    } else {
        char threshold[32];
        std::snprintf(threshold, sizeof threshold, "%.6g", node.threshold);
        out << vocab.term_for_id(node.feature_id) << " <= " << threshold;
    }
    out << '\t' << gini << '\n';
    if (!node.is_leaf()) {
        export_node(*node.left, vocab, level + 1, max_depth, "Left", class_name, out);
        export_node(*node.right, vocab, level + 1, max_depth, "Right", class_name, out);
    }
}

}  // namespace

std::string export_tree_text(const TreeNode& root, const Vocabulary& vocab,
                             std::size_t max_depth,
                             const std::function<std::string(std::size_t)>& class_name) {
    std::ostringstream out;
    out << "Level\tBranch\tSplit\tGini\n";
    export_node(root, vocab, 0, max_depth, "Root", class_name, out);
    return out.str();
}

}  // namespace besent
