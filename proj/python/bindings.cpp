// Python bindings for the fusionrank core. The surface mirrors the C++
// headers one-to-one: free functions over plain data, with the same
// names, defaults, and error behavior (DataError maps to
// fusionrank.DataError, std::invalid_argument / std::domain_error to
// ValueError).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "fusionrank/associations.hpp"
#include "fusionrank/corpus.hpp"
#include "fusionrank/early_fusion.hpp"
#include "fusionrank/error.hpp"
#include "fusionrank/evaluation.hpp"
#include "fusionrank/io.hpp"
#include "fusionrank/late_fusion.hpp"
#include "fusionrank/pipeline.hpp"
#include "fusionrank/ranked_list.hpp"
#include "fusionrank/scoring.hpp"

namespace py = pybind11;
using namespace fusionrank;

namespace {

std::string repr_scored_entry(const ScoredEntry& e) {
    std::ostringstream out;
    out << "ScoredEntry(id='" << e.id << "', score=" << format_fixed(e.score, 6) << ")";
    return out.str();
}

StopwordList to_stopwords(const std::optional<std::vector<std::string>>& words) {
    StopwordList list;
    if (words) {
        list.insert(words->begin(), words->end());
    }
    return list;
}

}  // namespace

PYBIND11_MODULE(_fusionrank, m) {
    m.doc() = "Object retrieval by early or late fusion of document evidence, "
              "plus TREC-style evaluation.";

    py::register_exception<DataError>(m, "DataError", PyExc_RuntimeError);

    // --- enums ----------------------------------------------------------
    py::enum_<RetrievalModel>(m, "RetrievalModel")
        .value("LM", RetrievalModel::LM)
        .value("BM25", RetrievalModel::BM25);
    py::enum_<AssociationMode>(m, "AssociationMode")
        .value("BINARY", AssociationMode::Binary)
        .value("UNIFORM", AssociationMode::Uniform)
        .value("EXPLICIT", AssociationMode::Explicit);
    py::enum_<ScoreTransform>(m, "ScoreTransform")
        .value("RAW", ScoreTransform::Raw)
        .value("RECIPROCAL_RANK", ScoreTransform::ReciprocalRank);
    py::enum_<FusionStrategy>(m, "FusionStrategy")
        .value("EARLY", FusionStrategy::Early)
        .value("LATE", FusionStrategy::Late);
    py::enum_<GridTask>(m, "GridTask")
        .value("EXPERT", GridTask::Expert)
        .value("BLOG", GridTask::Blog)
        .value("VERTICAL", GridTask::Vertical);
    py::enum_<GainVariant>(m, "GainVariant")
        .value("EXPONENTIAL", GainVariant::Exponential)
        .value("LINEAR", GainVariant::Linear);

    // --- records and parameters -----------------------------------------
    py::class_<CorpusRecord>(m, "CorpusRecord")
        .def(py::init<std::string, std::string>(), py::arg("doc_id"), py::arg("text"))
        .def_readonly("doc_id", &CorpusRecord::doc_id)
        .def_readonly("text", &CorpusRecord::text);

    py::class_<AssociationRecord>(m, "AssociationRecord")
        .def(py::init([](std::string doc_id, std::string object_id,
                         std::optional<double> weight) {
                 return AssociationRecord{std::move(doc_id), std::move(object_id), weight};
             }),
             py::arg("doc_id"), py::arg("object_id"), py::arg("weight") = py::none())
        .def_readonly("doc_id", &AssociationRecord::doc_id)
        .def_readonly("object_id", &AssociationRecord::object_id)
        .def_readonly("weight", &AssociationRecord::weight);

    py::class_<QueryRecord>(m, "QueryRecord")
        .def(py::init<std::string, std::string>(), py::arg("query_id"), py::arg("text"))
        .def_readonly("query_id", &QueryRecord::query_id)
        .def_readonly("text", &QueryRecord::text);

    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init([](double lambda, double k1, double b) {
                 ModelParams p;
                 p.lambda = lambda;
                 p.k1 = k1;
                 p.b = b;
                 return p;
             }),
             py::arg("lambda_") = 0.1, py::arg("k1") = 1.2, py::arg("b") = 0.75)
        .def_readwrite("lambda_", &ModelParams::lambda)
        .def_readwrite("k1", &ModelParams::k1)
        .def_readwrite("b", &ModelParams::b);

    py::class_<ScoredEntry>(m, "ScoredEntry")
        .def(py::init<std::string, double>(), py::arg("id"), py::arg("score"))
        .def_readonly("id", &ScoredEntry::id)
        .def_readonly("score", &ScoredEntry::score)
        .def("__repr__", &repr_scored_entry)
        .def("__eq__",
             [](const ScoredEntry& a, const ScoredEntry& b) { return a == b; });

    // --- corpus -----------------------------------------------------------
    py::class_<CollectionStats>(m, "CollectionStats")
        .def_readonly("total_tokens", &CollectionStats::total_tokens)
        .def_readonly("num_docs", &CollectionStats::num_docs)
        .def_readonly("avg_doc_length", &CollectionStats::avg_doc_length)
        .def_readonly("collection_freq", &CollectionStats::collection_freq)
        .def_readonly("doc_freq", &CollectionStats::doc_freq);

    py::class_<DocumentIndex>(m, "DocumentIndex")
        .def_readonly("stats", &DocumentIndex::stats)
        .def("contains", &DocumentIndex::contains, py::arg("doc_id"))
        .def_property_readonly("doc_ids", [](const DocumentIndex& index) {
            std::vector<std::string> ids;
            ids.reserve(index.docs.size());
            for (const auto& [id, doc] : index.docs) {
                ids.push_back(id);
            }
            return ids;
        });

    m.def(
        "tokenize",
        [](const std::string& text, const std::optional<std::vector<std::string>>& stopwords) {
            if (!stopwords) {
                return tokenize(text);
            }
            const StopwordList list = to_stopwords(stopwords);
            return tokenize(text, &list);
        },
        py::arg("text"), py::arg("stopwords") = py::none(),
        "Lowercase and split on non-alphanumeric bytes; optionally drop stopwords.");

    m.def(
        "ingest_corpus",
        [](const std::vector<CorpusRecord>& records,
           const std::optional<std::vector<std::string>>& stopwords) {
            if (!stopwords) {
                return ingest_corpus(records);
            }
            const StopwordList list = to_stopwords(stopwords);
            return ingest_corpus(records, &list);
        },
        py::arg("records"), py::arg("stopwords") = py::none(),
        "Build the document index from (doc_id, text) records.");

    m.def("background_prob", &background_prob, py::arg("stats"), py::arg("term"),
          "Collection language model P(t).");

    // --- associations -----------------------------------------------------
    py::class_<AssociationTable>(m, "AssociationTable")
        .def_readonly("dropped_edges", &AssociationTable::dropped_edges)
        .def("has_object", &AssociationTable::has_object, py::arg("object_id"))
        .def("has_edge", &AssociationTable::has_edge, py::arg("doc_id"), py::arg("object_id"))
        .def("len_of", &AssociationTable::len_of, py::arg("object_id"))
        .def_property_readonly("object_ids", [](const AssociationTable& table) {
            std::vector<std::string> ids;
            ids.reserve(table.docs_of.size());
            for (const auto& [id, docs] : table.docs_of) {
                ids.push_back(id);
            }
            return ids;
        })
        .def("docs_of", [](const AssociationTable& table, const std::string& object_id) {
            auto it = table.docs_of.find(object_id);
            return it == table.docs_of.end() ? std::vector<std::string>{} : it->second;
        });

    m.def("load_associations", &load_associations, py::arg("records"), py::arg("index"),
          py::arg("lenient") = false,
          "Build the document-object graph; unknown doc ids fail (or are dropped "
          "and counted when lenient).");
    m.def("association_weight", &association_weight, py::arg("table"), py::arg("mode"),
          py::arg("doc_id"), py::arg("object_id"), "w(d,o) under the given mode.");

    // --- scoring kernels ---------------------------------------------------
    m.def("lm_term_score", &lm_term_score, py::arg("freq"), py::arg("unit_length"),
          py::arg("p_background"), py::arg("lambda_"));
    m.def("bm25_term_score", &bm25_term_score, py::arg("freq"), py::arg("unit_length"),
          py::arg("avg_length"), py::arg("idf"), py::arg("k1"), py::arg("b"));
    m.def("idf", &idf, py::arg("num_units"), py::arg("unit_freq"));

    // --- early fusion -------------------------------------------------------
    py::class_<ObjectIndex>(m, "ObjectIndex")
        .def_readonly("num_objects", &ObjectIndex::num_objects)
        .def_readonly("avg_object_length", &ObjectIndex::avg_object_length)
        .def_readonly("excluded_objects", &ObjectIndex::excluded_objects)
        .def_readonly("object_doc_freq", &ObjectIndex::object_doc_freq)
        .def_property_readonly("object_ids", [](const ObjectIndex& obj_index) {
            std::vector<std::string> ids;
            ids.reserve(obj_index.objects.size());
            for (const auto& [id, obj] : obj_index.objects) {
                ids.push_back(id);
            }
            return ids;
        })
        .def("pseudo_freqs",
             [](const ObjectIndex& obj_index, const std::string& object_id) {
                 auto it = obj_index.objects.find(object_id);
                 if (it == obj_index.objects.end()) {
                     throw std::invalid_argument("unknown object id '" + object_id + "'");
                 }
                 return it->second.pseudo_freqs;
             })
        .def("pseudo_length", [](const ObjectIndex& obj_index, const std::string& object_id) {
            auto it = obj_index.objects.find(object_id);
            if (it == obj_index.objects.end()) {
                throw std::invalid_argument("unknown object id '" + object_id + "'");
            }
            return it->second.length;
        });

    m.def("build_object_index", &build_object_index, py::arg("index"), py::arg("table"),
          py::arg("mode"), "Materialize pseudo-object term profiles.");
    m.def("score_object_early", &score_object_early, py::arg("obj_index"),
          py::arg("object_id"), py::arg("query"), py::arg("model"),
          py::arg("params") = ModelParams{});
    m.def("rank_objects_early", &rank_objects_early, py::arg("obj_index"), py::arg("query"),
          py::arg("model"), py::arg("params") = ModelParams{}, py::arg("cutoff") = 1000);
    m.def("save_object_index", &save_object_index, py::arg("obj_index"), py::arg("path"));
    m.def("load_object_index", &load_object_index, py::arg("path"));

    // --- late fusion ----------------------------------------------------------
    py::class_<AggregationSpec>(m, "AggregationSpec")
        .def(py::init([](ScoreTransform transform, std::size_t top_k, AssociationMode mode) {
                 return AggregationSpec{transform, top_k, mode};
             }),
             py::arg("transform") = ScoreTransform::Raw, py::arg("top_k") = 1000,
             py::arg("mode") = AssociationMode::Binary)
        .def_readwrite("transform", &AggregationSpec::transform)
        .def_readwrite("top_k", &AggregationSpec::top_k)
        .def_readwrite("mode", &AggregationSpec::mode);

    m.attr("UNBOUNDED_TOP_K") = kUnboundedTopK;

    m.def("score_documents", &score_documents, py::arg("index"), py::arg("query"),
          py::arg("model"), py::arg("params") = ModelParams{});
    m.def("aggregate_objects", &aggregate_objects, py::arg("docs"), py::arg("table"),
          py::arg("spec"));
    m.def("rank_objects_late", &rank_objects_late, py::arg("index"), py::arg("table"),
          py::arg("query"), py::arg("model"), py::arg("params") = ModelParams{},
          py::arg("spec") = AggregationSpec{}, py::arg("cutoff") = 1000);

    // --- evaluation --------------------------------------------------------
    py::class_<Qrels>(m, "Qrels")
        .def(py::init([](const std::map<std::string, std::map<std::string, int>>& judgments) {
                 Qrels qrels;
                 qrels.judgments = judgments;
                 return qrels;
             }),
             py::arg("judgments") = std::map<std::string, std::map<std::string, int>>{})
        .def_readwrite("judgments", &Qrels::judgments);

    py::class_<EvalConfig>(m, "EvalConfig")
        .def(py::init([](std::int64_t precision_k, std::int64_t ndcg_k, GainVariant gain) {
                 EvalConfig c;
                 c.precision_k = precision_k;
                 c.ndcg_k = ndcg_k;
                 c.gain = gain;
                 return c;
             }),
             py::arg("precision_k") = 10, py::arg("ndcg_k") = 20,
             py::arg("gain") = GainVariant::Exponential)
        .def_readwrite("precision_k", &EvalConfig::precision_k)
        .def_readwrite("ndcg_k", &EvalConfig::ndcg_k)
        .def_readwrite("gain", &EvalConfig::gain);

    py::class_<MetricReport>(m, "MetricReport")
        .def_readonly("metric_names", &MetricReport::metric_names)
        .def_readonly("per_query", &MetricReport::per_query)
        .def_readonly("means", &MetricReport::means)
        .def_readonly("num_evaluated", &MetricReport::num_evaluated)
        .def_readonly("num_excluded", &MetricReport::num_excluded)
        .def_readonly("num_unjudged", &MetricReport::num_unjudged);

    m.def("precision_at_k", &precision_at_k, py::arg("ranking"), py::arg("relevant"),
          py::arg("k"));
    m.def("reciprocal_rank", &reciprocal_rank, py::arg("ranking"), py::arg("relevant"));
    m.def("average_precision", &average_precision, py::arg("ranking"), py::arg("relevant"));
    m.def("ndcg_at_k", &ndcg_at_k, py::arg("ranking"), py::arg("grades"), py::arg("k"),
          py::arg("gain") = GainVariant::Exponential);
    m.def("evaluate_run", &evaluate_run, py::arg("run"), py::arg("qrels"),
          py::arg("config") = EvalConfig{});

    // --- pipeline ------------------------------------------------------------
    py::class_<RunConfig>(m, "RunConfig")
        .def(py::init<>())
        .def_readwrite("fusion", &RunConfig::fusion)
        .def_readwrite("model", &RunConfig::model)
        .def_readwrite("assoc", &RunConfig::assoc)
        .def_readwrite("params", &RunConfig::params)
        .def_readwrite("transform", &RunConfig::transform)
        .def_readwrite("top_k_docs", &RunConfig::top_k_docs)
        .def_readwrite("output_depth", &RunConfig::output_depth)
        .def_readwrite("run_tag", &RunConfig::run_tag);

    py::class_<RankRunResult>(m, "RankRunResult")
        .def_readonly("rankings", &RankRunResult::rankings)
        .def_readonly("skipped_queries", &RankRunResult::skipped_queries)
        .def_readonly("excluded_objects", &RankRunResult::excluded_objects);

    py::class_<GridRow>(m, "GridRow")
        .def_readonly("fusion", &GridRow::fusion)
        .def_readonly("model", &GridRow::model)
        .def_readonly("assoc", &GridRow::assoc)
        .def_readonly("values", &GridRow::values);

    py::class_<GridResult>(m, "GridResult")
        .def_readonly("metric_columns", &GridResult::metric_columns)
        .def_readonly("rows", &GridResult::rows);

    m.def("run_rank", &run_rank, py::arg("index"), py::arg("table"), py::arg("queries"),
          py::arg("config") = RunConfig{});
    m.def("format_run_file", &format_run_file, py::arg("result"),
          py::arg("config") = RunConfig{});
    m.def("run_grid", &run_grid, py::arg("index"), py::arg("table"), py::arg("queries"),
          py::arg("qrels"), py::arg("task") = GridTask::Expert);
    m.def("format_grid", &format_grid, py::arg("grid"));

    // --- file formats ----------------------------------------------------------
    m.def("format_fixed", &format_fixed, py::arg("value"), py::arg("decimals"));
    m.def("read_corpus_file", &read_corpus_file, py::arg("path"));
    m.def("read_associations_file", &read_associations_file, py::arg("path"));
    m.def("read_queries_file", &read_queries_file, py::arg("path"));
    m.def("read_stopwords_file",
          [](const std::string& path) {
              const StopwordList list = read_stopwords_file(path);
              return std::vector<std::string>(list.begin(), list.end());
          },
          py::arg("path"));
    m.def("read_qrels_file", &read_qrels_file, py::arg("path"));
    m.def("read_run_file", &read_run_file, py::arg("path"));
    m.def("format_run_lines", &format_run_lines, py::arg("query_id"), py::arg("ranking"),
          py::arg("run_tag") = "fusionrank", py::arg("depth") = 1000);
    m.def("format_metric_report", &format_metric_report, py::arg("report"));
}
