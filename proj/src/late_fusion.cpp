#include "fusionrank/late_fusion.hpp"

#include <cmath>
#include <map>
#include <set>

namespace fusionrank {

const char* to_string(ScoreTransform transform) {
    switch (transform) {
        case ScoreTransform::Raw: return "raw";
        case ScoreTransform::ReciprocalRank: return "rr";
    }
    return "?";
}

ScoreTransform score_transform_from_string(const std::string& name) {
    if (name == "raw") return ScoreTransform::Raw;
    if (name == "rr" || name == "reciprocal-rank") return ScoreTransform::ReciprocalRank;
    throw std::invalid_argument("unknown score transform '" + name + "'");
}

DocScoreList score_documents(const DocumentIndex& index, const std::vector<Term>& query,
                             RetrievalModel model, const ModelParams& params) {
    // Candidates: documents containing at least one query term.
    std::set<std::string> candidates;
    {
        const std::set<Term> query_terms(query.begin(), query.end());
        for (const Term& t : query_terms) {
            auto it = index.postings.find(t);
            if (it != index.postings.end()) {
                candidates.insert(it->second.begin(), it->second.end());
            }
        }
    }

    DocScoreList scored;
    scored.reserve(candidates.size());
    for (const std::string& doc_id : candidates) {
        const Document& doc = index.docs.at(doc_id);
        double total = 0.0;
        for (const Term& t : query) {
            auto freq_it = doc.freqs.find(t);
            const double freq = freq_it == doc.freqs.end()
                                    ? 0.0
                                    : static_cast<double>(freq_it->second);
            if (model == RetrievalModel::LM) {
                const double p = background_prob(index.stats, t);
                if (p <= 0.0) {
                    continue;  // term absent from the whole collection
                }
                total += lm_term_score(freq, static_cast<double>(doc.length), p, params.lambda);
            } else {
                auto df_it = index.stats.doc_freq.find(t);
                if (df_it == index.stats.doc_freq.end() || df_it->second == 0) {
                    continue;
                }
                total += bm25_term_score(freq, static_cast<double>(doc.length),
                                         index.stats.avg_doc_length,
                                         idf(index.stats.num_docs, df_it->second), params.k1,
                                         params.b);
            }
        }
        // LM aggregates in probability space: exp of the summed log scores
        // is the query likelihood, non-negative by construction.
        scored.push_back({doc_id, model == RetrievalModel::LM ? std::exp(total) : total});
    }
    sort_ranked(scored);
    return scored;
}

RankedList aggregate_objects(const DocScoreList& docs, const AssociationTable& table,
                             const AggregationSpec& spec) {
    const std::size_t retained =
        spec.top_k == kUnboundedTopK ? docs.size() : std::min(docs.size(), spec.top_k);

    std::map<std::string, double> accumulated;
    for (std::size_t i = 0; i < retained; ++i) {
        const ScoredEntry& entry = docs[i];
        const double evidence = spec.transform == ScoreTransform::Raw
                                    ? entry.score
                                    : 1.0 / static_cast<double>(i + 1);
        auto obj_it = table.objects_of.find(entry.id);
        if (obj_it == table.objects_of.end()) {
            continue;
        }
        for (const std::string& object_id : obj_it->second) {
            const double w = association_weight(table, spec.mode, entry.id, object_id);
            if (w == 0.0) {
                continue;  // zero-weight edges never create candidates
            }
            accumulated[object_id] += evidence * w;
        }
    }

    RankedList ranked;
    ranked.reserve(accumulated.size());
    for (const auto& [object_id, score] : accumulated) {
        ranked.push_back({object_id, score});
    }
    sort_ranked(ranked);
    return ranked;
}

RankedList rank_objects_late(const DocumentIndex& index, const AssociationTable& table,
                             const std::vector<Term>& query, RetrievalModel model,
                             const ModelParams& params, const AggregationSpec& spec,
                             std::size_t cutoff) {
    if (query.empty()) {
        throw std::invalid_argument("empty query");
    }
    RankedList ranked = aggregate_objects(score_documents(index, query, model, params), table,
                                          spec);
    if (ranked.size() > cutoff) {
        ranked.resize(cutoff);
    }
    return ranked;
}

}  // namespace fusionrank
