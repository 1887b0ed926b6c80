#include "besent/resample.hpp"

#include <algorithm>
#include <map>

#include "besent/error.hpp"
#include "besent/rng.hpp"

namespace besent {

namespace {

std::map<int, std::vector<std::size_t>> group_by_class(const std::vector<int>& labels) {
    std::map<int, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < labels.size(); ++i) groups[labels[i]].push_back(i);
    return groups;
}

std::size_t resolve_target(const std::map<int, std::vector<std::size_t>>& groups,
                           const ResamplePlan& plan) {
    if (plan.target_count) return *plan.target_count;
    std::size_t majority = 0;
    for (const auto& [cls, members] : groups) majority = std::max(majority, members.size());
    return majority;
}

}  // namespace

FeatureVector smote_interpolate(const FeatureVector& a, const FeatureVector& b, double u) {
    FeatureVector out;
    out.dim = a.dim;
    std::size_t i = 0, j = 0;
    while (i < a.entries.size() || j < b.entries.size()) {
        std::uint32_t id;
        double va = 0.0, vb = 0.0;
        if (j >= b.entries.size() ||
            (i < a.entries.size() && a.entries[i].first < b.entries[j].first)) {
            id = a.entries[i].first;
            va = a.entries[i].second;
            ++i;
        } else if (i >= a.entries.size() || b.entries[j].first < a.entries[i].first) {
            id = b.entries[j].first;
            vb = b.entries[j].second;
            ++j;
        } else {
            id = a.entries[i].first;
            va = a.entries[i].second;
            vb = b.entries[j].second;
            ++i;
            ++j;
        }
        out.entries.emplace_back(id, va + u * (vb - va));
    }
    return out;
}

SmoteResult smote(const std::vector<FeatureVector>& features, const std::vector<int>& labels,
                  const ResamplePlan& plan) {
    if (features.empty()) throw ValidationError("smote: empty input");
    if (features.size() != labels.size()) {
        throw ValidationError("smote: features and labels sizes differ");
    }
    if (plan.k_neighbors < 1) throw ValidationError("smote: k_neighbors must be >= 1");
    const std::uint32_t dim = features.front().dim;
    for (const auto& f : features) {
        if (f.dim != dim) throw ValidationError("smote: inconsistent vector dimensions");
    }

    SmoteResult result{features, labels};
    auto groups = group_by_class(labels);
    const std::size_t target = resolve_target(groups, plan);
    Rng rng(plan.seed);

    for (const auto& [cls, members] : groups) {  // ascending class id
        const std::size_t n = members.size();
        if (n >= target) continue;
        std::size_t needed = target - n;

        if (n == 1) {
            // No neighbor to interpolate toward; duplicate.
            for (std::size_t s = 0; s < needed; ++s) {
                result.features.push_back(features[members[0]]);
                result.labels.push_back(cls);
            }
            continue;
        }

        const std::size_t k = std::min(plan.k_neighbors, n - 1);
        // k nearest same-class neighbors per member, ties by smaller index.
        std::vector<std::vector<std::size_t>> neighbors(n);
        for (std::size_t a = 0; a < n; ++a) {
            std::vector<std::pair<double, std::size_t>> dists;
            dists.reserve(n - 1);
            for (std::size_t b = 0; b < n; ++b) {
                if (b == a) continue;
                dists.emplace_back(squared_distance(features[members[a]], features[members[b]]),
                                   b);
            }
            std::partial_sort(dists.begin(), dists.begin() + static_cast<std::ptrdiff_t>(k),
                              dists.end());
            neighbors[a].reserve(k);
            for (std::size_t t = 0; t < k; ++t) neighbors[a].push_back(dists[t].second);
        }

        for (std::size_t s = 0; s < needed; ++s) {
            const std::size_t a = rng.next_index(n);
            const std::size_t b = neighbors[a][rng.next_index(k)];
            const double u = rng.next_unit();
            result.features.push_back(
                smote_interpolate(features[members[a]], features[members[b]], u));
            result.labels.push_back(cls);
        }
    }
    return result;
}

OversampleResult random_oversample(const std::vector<TokenSequence>& sequences,
                                   const std::vector<int>& labels, const ResamplePlan& plan) {
    if (sequences.empty()) throw ValidationError("random_oversample: empty input");
    if (sequences.size() != labels.size()) {
        throw ValidationError("random_oversample: sequences and labels sizes differ");
    }
    OversampleResult result{sequences, labels};
    auto groups = group_by_class(labels);
    const std::size_t target = resolve_target(groups, plan);
    Rng rng(plan.seed);

    for (const auto& [cls, members] : groups) {
        const std::size_t n = members.size();
        for (std::size_t s = n; s < target; ++s) {
            result.sequences.push_back(sequences[members[rng.next_index(n)]]);
            result.labels.push_back(cls);
        }
    }
    return result;
}

}  // namespace besent
