#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "fusionrank/associations.hpp"
#include "fusionrank/corpus.hpp"
#include "fusionrank/ranked_list.hpp"
#include "fusionrank/scoring.hpp"

namespace fusionrank {

/// Document scores ordered by the tie-break rule.
using DocScoreList = std::vector<ScoredEntry>;

/// Raw sums score(d,q)*w(d,o) over the retained documents; ReciprocalRank
/// replaces score(d,q) with 1/rank(d), rank counted from 1 within the
/// retained list (the voting variant).
enum class ScoreTransform { Raw, ReciprocalRank };

const char* to_string(ScoreTransform transform);
ScoreTransform score_transform_from_string(const std::string& name);

inline constexpr std::size_t kUnboundedTopK = std::numeric_limits<std::size_t>::max();

struct AggregationSpec {
    ScoreTransform transform = ScoreTransform::Raw;
    std::size_t top_k = 1000;  // kUnboundedTopK disables the cutoff
    AssociationMode mode = AssociationMode::Binary;
};

/// Scores every document containing at least one query term. LM scores
/// are query likelihoods in probability space (exp of the summed log
/// scores), so they are non-negative and aggregate additively; BM25
/// scores aggregate raw. Query terms with document frequency 0 are
/// skipped. Empty result when nothing matches.
DocScoreList score_documents(const DocumentIndex& index, const std::vector<Term>& query,
                             RetrievalModel model, const ModelParams& params);

/// Restricts the document list to the top-K entries and sums each
/// object's weighted evidence. Candidates are objects with a
/// nonzero-weight edge to at least one retained document.
RankedList aggregate_objects(const DocScoreList& docs, const AssociationTable& table,
                             const AggregationSpec& spec);

/// score_documents + aggregate_objects, truncated to cutoff. Throws
/// std::invalid_argument on an empty query.
RankedList rank_objects_late(const DocumentIndex& index, const AssociationTable& table,
                             const std::vector<Term>& query, RetrievalModel model,
                             const ModelParams& params, const AggregationSpec& spec,
                             std::size_t cutoff);

}  // namespace fusionrank
