#pragma once

#include <string>
#include <vector>

#include "besent/chat.hpp"

namespace besent {

enum class AgreementFacet { sentiment, bloom, pair };

std::optional<AgreementFacet> parse_agreement_facet(const std::string& name);
const std::string& to_string(AgreementFacet f);

// Fleiss' kappa over the chosen facet. Requires >=2 annotators, >=2 items and
// every item rated by every annotator; facet=pair treats each
// (sentiment, bloom) combination as one of 18 categories. Returns exactly 1
// when expected chance agreement is 1 (single category everywhere).
double compute_fleiss_kappa(const AnnotationSet& set, AgreementFacet facet);

enum class TiePolicy { drop, first_annotator };

std::optional<TiePolicy> parse_tie_policy(const std::string& name);

struct MergeResult {
    std::vector<LabeledChat> labeled;
    std::vector<std::string> unresolved;  // chat ids dropped on a facet tie
};

// Per-facet majority vote (unique plurality). A facet with no unique winner is
// a tie: under drop the chat goes to `unresolved`; under first_annotator the
// rating of the earliest annotator in set.annotator_ids wins. Every chat must
// carry at least one annotation.
MergeResult merge_gold_labels(const std::vector<Chat>& chats, const AnnotationSet& set,
                              TiePolicy tie_policy);

}  // namespace besent
