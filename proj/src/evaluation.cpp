#include "fusionrank/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fusionrank/error.hpp"

namespace fusionrank {

double precision_at_k(const std::vector<std::string>& ranking,
                      const std::set<std::string>& relevant, std::int64_t k) {
    if (k < 1) {
        throw std::invalid_argument("precision cutoff must be >= 1");
    }
    const std::size_t depth = std::min(ranking.size(), static_cast<std::size_t>(k));
    std::int64_t hits = 0;
    for (std::size_t i = 0; i < depth; ++i) {
        if (relevant.count(ranking[i]) != 0) {
            ++hits;
        }
    }
    return static_cast<double>(hits) / static_cast<double>(k);
}

double reciprocal_rank(const std::vector<std::string>& ranking,
                       const std::set<std::string>& relevant) {
    for (std::size_t i = 0; i < ranking.size(); ++i) {
        if (relevant.count(ranking[i]) != 0) {
            return 1.0 / static_cast<double>(i + 1);
        }
    }
    return 0.0;
}

double average_precision(const std::vector<std::string>& ranking,
                         const std::set<std::string>& relevant) {
    if (relevant.empty()) {
        throw std::domain_error("no relevant objects");
    }
    std::int64_t hits = 0;
    double sum = 0.0;
    for (std::size_t i = 0; i < ranking.size(); ++i) {
        if (relevant.count(ranking[i]) != 0) {
            ++hits;
            sum += static_cast<double>(hits) / static_cast<double>(i + 1);
        }
    }
    return sum / static_cast<double>(relevant.size());
}

namespace {

double gain_of(int grade, GainVariant gain) {
    if (gain == GainVariant::Linear) {
        return static_cast<double>(grade);
    }
    return std::pow(2.0, static_cast<double>(grade)) - 1.0;
}

}  // namespace

double ndcg_at_k(const std::vector<std::string>& ranking,
                 const std::map<std::string, int>& grades, std::int64_t k, GainVariant gain) {
    if (k < 1) {
        throw std::invalid_argument("ndcg cutoff must be >= 1");
    }
    std::vector<int> ideal;
    ideal.reserve(grades.size());
    for (const auto& [object_id, grade] : grades) {
        if (grade > 0) {
            ideal.push_back(grade);
        }
    }
    if (ideal.empty()) {
        throw std::domain_error("no relevant objects");
    }
    std::sort(ideal.begin(), ideal.end(), std::greater<int>());

    const auto discounted = [gain](int grade, std::size_t rank_zero_based) {
        return gain_of(grade, gain) / std::log2(static_cast<double>(rank_zero_based) + 2.0);
    };
    double dcg = 0.0;
    const std::size_t depth = std::min(ranking.size(), static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < depth; ++i) {
        auto it = grades.find(ranking[i]);
        if (it != grades.end()) {
            dcg += discounted(it->second, i);
        }
    }
    double idcg = 0.0;
    const std::size_t ideal_depth = std::min(ideal.size(), static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < ideal_depth; ++i) {
        idcg += discounted(ideal[i], i);
    }
    return dcg / idcg;
}

MetricReport evaluate_run(const std::map<std::string, RankedList>& run, const Qrels& qrels,
                          const EvalConfig& config) {
    bool shared = false;
    for (const auto& [query_id, ranking] : run) {
        if (qrels.judgments.count(query_id) != 0) {
            shared = true;
            break;
        }
    }
    if (!shared) {
        throw DataError("run and qrels share no query id");
    }

    MetricReport report;
    report.metric_names = {"map", "mrr", "p@" + std::to_string(config.precision_k),
                           "ndcg@" + std::to_string(config.ndcg_k)};
    for (const auto& [query_id, ranking] : run) {
        if (qrels.judgments.count(query_id) == 0) {
            ++report.num_unjudged;
        }
    }

    std::map<std::string, double> sums;
    for (const auto& [query_id, grades] : qrels.judgments) {
        std::set<std::string> relevant;
        for (const auto& [object_id, grade] : grades) {
            if (grade > 0) {
                relevant.insert(object_id);
            }
        }
        if (relevant.empty()) {
            ++report.num_excluded;
            continue;
        }

        std::vector<std::string> ranking;  // judged query missing from the run: empty = all zeros
        auto run_it = run.find(query_id);
        if (run_it != run.end()) {
            ranking.reserve(run_it->second.size());
            for (const ScoredEntry& entry : run_it->second) {
                ranking.push_back(entry.id);
            }
        }

        std::map<std::string, double>& row = report.per_query[query_id];
        row[report.metric_names[0]] = average_precision(ranking, relevant);
        row[report.metric_names[1]] = reciprocal_rank(ranking, relevant);
        row[report.metric_names[2]] = precision_at_k(ranking, relevant, config.precision_k);
        row[report.metric_names[3]] = ndcg_at_k(ranking, grades, config.ndcg_k, config.gain);
        for (const auto& [metric, value] : row) {
            sums[metric] += value;
        }
        ++report.num_evaluated;
    }

    if (report.num_evaluated == 0) {
        throw DataError("qrels hold no relevant objects for any judged query");
    }
    for (const auto& [metric, total] : sums) {
        report.means[metric] = total / static_cast<double>(report.num_evaluated);
    }
    return report;
}

}  // namespace fusionrank
