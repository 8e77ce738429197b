#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fusionrank {

/// Free parameters of the retrieval models.
struct ModelParams {
    double lambda = 0.1;  // Jelinek-Mercer smoothing
    double k1 = 1.2;
    double b = 0.75;
};

enum class RetrievalModel { LM, BM25 };

inline const char* to_string(RetrievalModel model) {
    return model == RetrievalModel::LM ? "lm" : "bm25";
}

inline RetrievalModel retrieval_model_from_string(const std::string& name) {
    if (name == "lm") return RetrievalModel::LM;
    if (name == "bm25") return RetrievalModel::BM25;
    throw std::invalid_argument("unknown retrieval model '" + name + "'");
}

/// Jelinek-Mercer smoothed log score of one term against one unit
/// (document or pseudo-object):
///   ln((1-lambda) * freq/unit_length + lambda * p_background).
/// Frequencies are real-valued; uniform associations produce fractional
/// pseudo-frequencies. Throws std::domain_error when the smoothed
/// probability is 0 (term unseen in both unit and collection); callers
/// skip such terms.
inline double lm_term_score(double freq, double unit_length, double p_background,
                            double lambda) {
    const double smoothed = (1.0 - lambda) * freq / unit_length + lambda * p_background;
    if (!(smoothed > 0.0)) {
        throw std::domain_error("unsmoothable term: zero probability in unit and collection");
    }
    return std::log(smoothed);
}

/// One term's BM25 contribution:
///   idf * freq*(k1+1) / (freq + k1*(1 - b + b*unit_length/avg_length)).
/// A zero frequency scores 0. avg_length must be positive.
inline double bm25_term_score(double freq, double unit_length, double avg_length,
                              double idf, double k1, double b) {
    if (!(avg_length > 0.0)) {
        throw std::invalid_argument("bm25_term_score: avg_length must be positive");
    }
    if (freq <= 0.0) {
        return 0.0;
    }
    return idf * freq * (k1 + 1.0) / (freq + k1 * (1.0 - b + b * unit_length / avg_length));
}

/// ln(num_units / unit_freq), over whichever units the caller indexes
/// (documents or pseudo-objects). Throws std::domain_error for
/// unit_freq = 0; callers skip such query terms.
inline double idf(std::int64_t num_units, std::int64_t unit_freq) {
    if (unit_freq <= 0) {
        throw std::domain_error("undefined idf: term occurs in no unit");
    }
    return std::log(static_cast<double>(num_units) / static_cast<double>(unit_freq));
}

}  // namespace fusionrank
