#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fusionrank/associations.hpp"
#include "fusionrank/corpus.hpp"
#include "fusionrank/early_fusion.hpp"
#include "fusionrank/evaluation.hpp"
#include "fusionrank/io.hpp"
#include "fusionrank/late_fusion.hpp"
#include "fusionrank/ranked_list.hpp"
#include "fusionrank/scoring.hpp"

namespace fusionrank {

enum class FusionStrategy { Early, Late };

const char* to_string(FusionStrategy fusion);
FusionStrategy fusion_strategy_from_string(const std::string& name);

/// One retrieval configuration: fusion strategy x retrieval model x
/// association mode, plus model parameters and output shape.
struct RunConfig {
    FusionStrategy fusion = FusionStrategy::Early;
    RetrievalModel model = RetrievalModel::LM;
    AssociationMode assoc = AssociationMode::Binary;
    ModelParams params;
    ScoreTransform transform = ScoreTransform::Raw;  // late fusion only
    std::size_t top_k_docs = 1000;  // late fusion only; kUnboundedTopK disables
    std::size_t output_depth = 1000;
    std::string run_tag = "fusionrank";
};

struct RankRunResult {
    /// Non-empty rankings in query input order.
    std::vector<std::pair<std::string, RankedList>> rankings;
    /// Queries that tokenized to nothing or matched no candidate.
    std::vector<std::string> skipped_queries;
    /// Zero-length objects excluded by the early-fusion build.
    std::vector<std::string> excluded_objects;
};

/// Ranks every query under one configuration. Queries are processed in
/// input order; output is deterministic for identical inputs.
RankRunResult run_rank(const DocumentIndex& index, const AssociationTable& table,
                       const std::vector<QueryRecord>& queries, const RunConfig& config);

/// Concatenated TREC run lines for all ranked queries at output_depth.
std::string format_run_file(const RankRunResult& result, const RunConfig& config);

/// Metric columns reported per task family.
enum class GridTask { Expert, Blog, Vertical };

const char* to_string(GridTask task);
GridTask grid_task_from_string(const std::string& name);

struct GridRow {
    FusionStrategy fusion;
    RetrievalModel model;
    AssociationMode assoc;
    std::vector<double> values;  // aligned with GridResult::metric_columns
};

struct GridResult {
    std::vector<std::string> metric_columns;
    std::vector<GridRow> rows;  // the 8 default configurations, fixed order
};

/// Runs all 8 default configurations (early/late x lm/bm25 x
/// binary/uniform) and evaluates each against the qrels. Expert and Blog
/// report MAP, MRR, P@10; Vertical reports nDCG@20, MAP, P@5.
GridResult run_grid(const DocumentIndex& index, const AssociationTable& table,
                    const std::vector<QueryRecord>& queries, const Qrels& qrels,
                    GridTask task);

/// Tab-separated table, one row per configuration, per-column maxima
/// marked with '*'.
std::string format_grid(const GridResult& grid);

}  // namespace fusionrank
