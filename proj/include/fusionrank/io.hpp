#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fusionrank/associations.hpp"
#include "fusionrank/corpus.hpp"
#include "fusionrank/evaluation.hpp"
#include "fusionrank/ranked_list.hpp"

namespace fusionrank {

struct QueryRecord {
    std::string query_id;
    std::string text;
};

/// Fixed-decimal formatting; the determinism anchor for all emitted
/// numbers (scores: 6 decimals, metric values: 4).
std::string format_fixed(double value, int decimals);

// All readers accept UTF-8 text files, skip blank lines and lines
// beginning with '#', and throw DataError naming the path and line
// number on malformed input.

/// `doc_id<TAB>document text` per line.
std::vector<CorpusRecord> read_corpus_file(const std::string& path);

/// `doc_id<TAB>object_id[<TAB>weight]` per line.
std::vector<AssociationRecord> read_associations_file(const std::string& path);

/// `query_id<TAB>query text` per line.
std::vector<QueryRecord> read_queries_file(const std::string& path);

/// One stopword per line.
StopwordList read_stopwords_file(const std::string& path);

/// Standard TREC qrels: `query_id 0 object_id grade`, whitespace-delimited.
Qrels read_qrels_file(const std::string& path);

/// TREC run lines `query_id Q0 object_id rank score run_tag`. Queries keep
/// their order of first appearance; entries are ordered by the rank field.
std::vector<std::pair<std::string, RankedList>> read_run_file(const std::string& path);

/// `query_id Q0 object_id rank score run_tag` lines, rank from 1, score
/// with 6 decimals, at most depth lines.
std::string format_run_lines(const std::string& query_id, const RankedList& ranking,
                             const std::string& run_tag, std::size_t depth);

/// Tab-separated `metric<TAB>query_id<TAB>value` lines per metric (query
/// ids ascending) followed by `metric<TAB>all<TAB>mean`, 4 decimals.
std::string format_metric_report(const MetricReport& report);

}  // namespace fusionrank
