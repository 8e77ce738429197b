#include <doctest.h>

#include <algorithm>

#include "fusionrank/corpus.hpp"
#include "fusionrank/error.hpp"
#include "support/toy.hpp"

using namespace fusionrank;
using testsupport::toy_corpus_records;

TEST_CASE("tokenize lowercases and splits on every non-alphanumeric") {
    CHECK(tokenize("The cat, the CAT sat.") ==
          std::vector<Term>{"the", "cat", "the", "cat", "sat"});
    CHECK(tokenize("").empty());
    CHECK(tokenize("BM25-ready") == std::vector<Term>{"bm25", "ready"});
    CHECK(tokenize("...---...").empty());
}

TEST_CASE("tokenize output is already normalized") {
    for (const Term& t : tokenize("The cat, the CAT sat on BM25-ready mats!")) {
        CHECK(tokenize(t) == std::vector<Term>{t});
    }
}

TEST_CASE("tokenize removes stopwords only when a list is supplied") {
    const StopwordList stop{"the"};
    CHECK(tokenize("The cat the mat", &stop) == std::vector<Term>{"cat", "mat"});
    CHECK(tokenize("The cat the mat") == std::vector<Term>{"the", "cat", "the", "mat"});
}

TEST_CASE("ingest_corpus reproduces the toy counts") {
    const DocumentIndex index = ingest_corpus(toy_corpus_records());
    CHECK(index.stats.num_docs == 3);
    CHECK(index.stats.total_tokens == 9);
    CHECK(index.stats.avg_doc_length == doctest::Approx(3.0));
    CHECK(index.docs.at("d1").freqs.at("a") == 2);
    CHECK(index.docs.at("d2").freqs.at("b") == 1);
    CHECK(index.docs.at("d3").freqs.at("c") == 3);
    CHECK(index.docs.at("d1").length == 3);
    CHECK(index.docs.at("d3").length == 4);
}

TEST_CASE("ingest_corpus fails fast on degenerate input") {
    CHECK_THROWS_WITH_AS(ingest_corpus({}), "empty corpus", DataError);
    CHECK_THROWS_WITH_AS(ingest_corpus({{"d1", "a"}, {"d1", "b"}}), "duplicate doc id 'd1'",
                         DataError);
}

TEST_CASE("documents that tokenize to nothing are kept with length zero") {
    const DocumentIndex index = ingest_corpus({{"d1", "a"}, {"d2", "?!"}});
    CHECK(index.stats.num_docs == 2);
    CHECK(index.docs.at("d2").length == 0);
    CHECK(index.docs.at("d2").freqs.empty());
    CHECK(index.stats.avg_doc_length == doctest::Approx(0.5));
}

TEST_CASE("background_prob matches hand counts and is 0 for unseen terms") {
    const DocumentIndex index = ingest_corpus(toy_corpus_records());
    CHECK(background_prob(index.stats, "a") == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(background_prob(index.stats, "c") == doctest::Approx(4.0 / 9.0).epsilon(1e-12));
    CHECK(background_prob(index.stats, "zzz") == 0.0);
}

TEST_CASE("background probabilities sum to one over the vocabulary") {
    const DocumentIndex index = ingest_corpus(toy_corpus_records());
    double total = 0.0;
    for (const auto& [term, cf] : index.stats.collection_freq) {
        total += background_prob(index.stats, term);
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("background_prob rejects an empty collection") {
    CollectionStats empty;
    CHECK_THROWS_AS(background_prob(empty, "a"), std::invalid_argument);
}

TEST_CASE("postings are consistent with stored frequencies") {
    const DocumentIndex index = ingest_corpus(toy_corpus_records());
    for (const auto& [term, doc_ids] : index.postings) {
        CHECK(std::is_sorted(doc_ids.begin(), doc_ids.end()));
        CHECK(index.stats.doc_freq.at(term) == static_cast<std::int64_t>(doc_ids.size()));
        CHECK(index.stats.doc_freq.at(term) >= 1);
        for (const std::string& id : doc_ids) {
            CHECK(index.docs.at(id).freqs.at(term) > 0);
        }
    }
    for (const auto& [id, doc] : index.docs) {
        for (const auto& [term, count] : doc.freqs) {
            const auto& doc_ids = index.postings.at(term);
            CHECK(std::binary_search(doc_ids.begin(), doc_ids.end(), id));
        }
    }
}

TEST_CASE("re-ingesting the same records reproduces identical statistics") {
    const DocumentIndex a = ingest_corpus(toy_corpus_records());
    const DocumentIndex b = ingest_corpus(toy_corpus_records());
    CHECK(a.stats.total_tokens == b.stats.total_tokens);
    CHECK(a.stats.num_docs == b.stats.num_docs);
    CHECK(a.stats.avg_doc_length == b.stats.avg_doc_length);
    CHECK(a.stats.collection_freq == b.stats.collection_freq);
    CHECK(a.stats.doc_freq == b.stats.doc_freq);
    CHECK(a.postings == b.postings);
}
