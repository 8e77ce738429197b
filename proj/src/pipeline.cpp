#include "fusionrank/pipeline.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace fusionrank {

const char* to_string(FusionStrategy fusion) {
    switch (fusion) {
        case FusionStrategy::Early: return "early";
        case FusionStrategy::Late: return "late";
    }
    return "?";
}

FusionStrategy fusion_strategy_from_string(const std::string& name) {
    if (name == "early") return FusionStrategy::Early;
    if (name == "late") return FusionStrategy::Late;
    throw std::invalid_argument("unknown fusion strategy '" + name + "'");
}

const char* to_string(GridTask task) {
    switch (task) {
        case GridTask::Expert: return "expert";
        case GridTask::Blog: return "blog";
        case GridTask::Vertical: return "vertical";
    }
    return "?";
}

GridTask grid_task_from_string(const std::string& name) {
    if (name == "expert") return GridTask::Expert;
    if (name == "blog") return GridTask::Blog;
    if (name == "vertical") return GridTask::Vertical;
    throw std::invalid_argument("unknown task '" + name + "'");
}

RankRunResult run_rank(const DocumentIndex& index, const AssociationTable& table,
                       const std::vector<QueryRecord>& queries, const RunConfig& config) {
    RankRunResult result;

    ObjectIndex obj_index;
    if (config.fusion == FusionStrategy::Early) {
        obj_index = build_object_index(index, table, config.assoc);
        result.excluded_objects = obj_index.excluded_objects;
    }
    const AggregationSpec spec{config.transform, config.top_k_docs, config.assoc};

    for (const QueryRecord& record : queries) {
        const std::vector<Term> query = tokenize(record.text);
        if (query.empty()) {
            result.skipped_queries.push_back(record.query_id);
            continue;
        }
        RankedList ranking =
            config.fusion == FusionStrategy::Early
                ? rank_objects_early(obj_index, query, config.model, config.params,
                                     config.output_depth)
                : rank_objects_late(index, table, query, config.model, config.params, spec,
                                    config.output_depth);
        if (ranking.empty()) {
            result.skipped_queries.push_back(record.query_id);
            continue;
        }
        result.rankings.emplace_back(record.query_id, std::move(ranking));
    }
    return result;
}

std::string format_run_file(const RankRunResult& result, const RunConfig& config) {
    std::string out;
    for (const auto& [query_id, ranking] : result.rankings) {
        out += format_run_lines(query_id, ranking, config.run_tag, config.output_depth);
    }
    return out;
}

GridResult run_grid(const DocumentIndex& index, const AssociationTable& table,
                    const std::vector<QueryRecord>& queries, const Qrels& qrels,
                    GridTask task) {
    GridResult grid;
    EvalConfig eval_config;
    if (task == GridTask::Vertical) {
        eval_config.precision_k = 5;
        grid.metric_columns = {"ndcg@20", "map", "p@5"};
    } else {
        grid.metric_columns = {"map", "mrr", "p@10"};
    }

    for (FusionStrategy fusion : {FusionStrategy::Early, FusionStrategy::Late}) {
        for (RetrievalModel model : {RetrievalModel::LM, RetrievalModel::BM25}) {
            for (AssociationMode assoc : {AssociationMode::Binary, AssociationMode::Uniform}) {
                RunConfig config;
                config.fusion = fusion;
                config.model = model;
                config.assoc = assoc;
                const RankRunResult ranked = run_rank(index, table, queries, config);
                std::map<std::string, RankedList> run(ranked.rankings.begin(),
                                                      ranked.rankings.end());
                const MetricReport report = evaluate_run(run, qrels, eval_config);
                GridRow row{fusion, model, assoc, {}};
                row.values.reserve(grid.metric_columns.size());
                for (const std::string& column : grid.metric_columns) {
                    row.values.push_back(report.means.at(column));
                }
                grid.rows.push_back(std::move(row));
            }
        }
    }
    return grid;
}

std::string format_grid(const GridResult& grid) {
    std::string out = "fusion\tmodel\tassoc";
    for (const std::string& column : grid.metric_columns) {
        out += '\t';
        out += column;
    }
    out += '\n';

    std::vector<double> maxima(grid.metric_columns.size(),
                               -std::numeric_limits<double>::infinity());
    for (const GridRow& row : grid.rows) {
        for (std::size_t c = 0; c < row.values.size(); ++c) {
            maxima[c] = std::max(maxima[c], row.values[c]);
        }
    }
    for (const GridRow& row : grid.rows) {
        out += to_string(row.fusion);
        out += '\t';
        out += to_string(row.model);
        out += '\t';
        out += to_string(row.assoc);
        for (std::size_t c = 0; c < row.values.size(); ++c) {
            out += '\t';
            out += format_fixed(row.values[c], 4);
            if (row.values[c] == maxima[c]) {
                out += '*';
            }
        }
        out += '\n';
    }
    return out;
}

}  // namespace fusionrank
