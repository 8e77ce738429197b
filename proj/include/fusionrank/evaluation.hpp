#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "fusionrank/ranked_list.hpp"

namespace fusionrank {

/// Graded relevance judgments: query id -> object id -> grade >= 0.
/// An object is relevant iff its grade is positive.
struct Qrels {
    std::map<std::string, std::map<std::string, int>> judgments;
};

/// nDCG gain: Exponential = 2^grade - 1, Linear = grade. Both use the
/// log2(i+1) discount.
enum class GainVariant { Exponential, Linear };

struct EvalConfig {
    std::int64_t precision_k = 10;
    std::int64_t ndcg_k = 20;
    GainVariant gain = GainVariant::Exponential;
};

/// |relevant among first k| / k; the denominator stays k even when fewer
/// results were returned.
double precision_at_k(const std::vector<std::string>& ranking,
                      const std::set<std::string>& relevant, std::int64_t k);

/// 1 / (1-based position of the first relevant result); 0 if none.
double reciprocal_rank(const std::vector<std::string>& ranking,
                       const std::set<std::string>& relevant);

/// (1/R) * sum of precision_at_r over ranks r holding a relevant result;
/// unretrieved relevant objects contribute 0. Throws std::domain_error
/// when R = 0 (callers exclude such queries from means).
double average_precision(const std::vector<std::string>& ranking,
                         const std::set<std::string>& relevant);

/// DCG@k / IDCG@k with gain per the variant and log2(i+1) discount.
/// Throws std::domain_error when no positive grade exists.
double ndcg_at_k(const std::vector<std::string>& ranking,
                 const std::map<std::string, int>& grades, std::int64_t k,
                 GainVariant gain = GainVariant::Exponential);

struct MetricReport {
    std::vector<std::string> metric_names;  // fixed column order
    std::map<std::string, std::map<std::string, double>> per_query;  // qid -> metric -> value
    std::map<std::string, double> means;  // arithmetic means over evaluated queries
    std::int64_t num_evaluated = 0;       // judged queries with >= 1 relevant object
    std::int64_t num_excluded = 0;        // judged queries with no relevant object
    std::int64_t num_unjudged = 0;        // run queries absent from the qrels, ignored
};

/// Per-query MAP/MRR/P@k/nDCG@k plus their means. Judged queries missing
/// from the run score 0 on every metric; judged queries without relevant
/// objects are excluded from the means and counted. Throws DataError when
/// the run and qrels share no query id.
MetricReport evaluate_run(const std::map<std::string, RankedList>& run, const Qrels& qrels,
                          const EvalConfig& config);

}  // namespace fusionrank
