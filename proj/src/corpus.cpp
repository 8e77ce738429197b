#include "fusionrank/corpus.hpp"

#include "fusionrank/error.hpp"

namespace fusionrank {

namespace {

inline bool is_token_byte(unsigned char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

inline char lower_byte(unsigned char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : static_cast<char>(c);
}

}  // namespace

std::vector<Term> tokenize(std::string_view text, const StopwordList* stopwords) {
    std::vector<Term> terms;
    std::string current;
    auto flush = [&] {
        if (!current.empty()) {
            if (stopwords == nullptr || stopwords->count(current) == 0) {
                terms.push_back(current);
            }
            current.clear();
        }
    };
    for (unsigned char c : text) {
        if (is_token_byte(c)) {
            current.push_back(lower_byte(c));
        } else {
            flush();
        }
    }
    flush();
    return terms;
}

DocumentIndex ingest_corpus(const std::vector<CorpusRecord>& records,
                            const StopwordList* stopwords) {
    if (records.empty()) {
        throw DataError("empty corpus");
    }
    DocumentIndex index;
    for (const CorpusRecord& record : records) {
        if (index.docs.count(record.doc_id) > 0) {
            throw DataError("duplicate doc id '" + record.doc_id + "'");
        }
        Document doc;
        doc.id = record.doc_id;
        for (const Term& t : tokenize(record.text, stopwords)) {
            ++doc.freqs[t];
        }
        for (const auto& [term, count] : doc.freqs) {
            doc.length += count;
        }
        index.docs.emplace(record.doc_id, std::move(doc));
    }

    // Statistics in one pass at the end of ingestion.
    CollectionStats& stats = index.stats;
    stats.num_docs = static_cast<std::int64_t>(index.docs.size());
    for (const auto& [id, doc] : index.docs) {
        stats.total_tokens += doc.length;
        for (const auto& [term, count] : doc.freqs) {
            stats.collection_freq[term] += count;
            stats.doc_freq[term] += 1;
            index.postings[term].push_back(id);  // docs map is ordered, so ids arrive ascending
        }
    }
    stats.avg_doc_length =
        static_cast<double>(stats.total_tokens) / static_cast<double>(stats.num_docs);
    return index;
}

double background_prob(const CollectionStats& stats, const Term& t) {
    if (stats.total_tokens <= 0) {
        throw std::invalid_argument("background_prob: empty collection");
    }
    auto it = stats.collection_freq.find(t);
    if (it == stats.collection_freq.end()) {
        return 0.0;
    }
    return static_cast<double>(it->second) / static_cast<double>(stats.total_tokens);
}

}  // namespace fusionrank
