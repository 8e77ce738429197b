#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace fusionrank {

/// A normalized token: lowercase, non-empty, no whitespace.
using Term = std::string;

using StopwordList = std::unordered_set<std::string>;

struct CorpusRecord {
    std::string doc_id;
    std::string text;
};

struct Document {
    std::string id;
    std::map<Term, std::int64_t> freqs;  // only positive counts are stored
    std::int64_t length = 0;             // sum of all counts
};

/// Collection-wide statistics, consistent with the documents they were
/// computed from. avg_doc_length counts zero-length documents.
struct CollectionStats {
    std::int64_t total_tokens = 0;
    std::int64_t num_docs = 0;
    double avg_doc_length = 0.0;
    std::map<Term, std::int64_t> collection_freq;
    std::map<Term, std::int64_t> doc_freq;
};

/// Immutable after ingestion; concurrent reads are safe.
struct DocumentIndex {
    std::map<std::string, Document> docs;
    std::map<Term, std::vector<std::string>> postings;  // ascending doc ids
    CollectionStats stats;

    bool contains(const std::string& doc_id) const { return docs.count(doc_id) > 0; }
};

/// Lowercases and splits on every non-alphanumeric byte (ASCII semantics).
/// No stemming; stopwords are removed only when a list is supplied.
/// Order and multiplicity of the input tokens are preserved.
std::vector<Term> tokenize(std::string_view text, const StopwordList* stopwords = nullptr);

/// Builds the index in one exclusive pass. Documents whose text tokenizes
/// to nothing are kept with length 0. Throws DataError on a duplicate doc
/// id or an empty record stream.
DocumentIndex ingest_corpus(const std::vector<CorpusRecord>& records,
                            const StopwordList* stopwords = nullptr);

/// Collection language model P(t) = collection_freq(t) / total_tokens;
/// 0 for unseen terms. Requires total_tokens > 0.
double background_prob(const CollectionStats& stats, const Term& t);

}  // namespace fusionrank
