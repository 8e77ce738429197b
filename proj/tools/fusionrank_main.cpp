// fusionrank: rank objects through early or late fusion over their
// associated documents, evaluate TREC run files, and compare the eight
// default configurations side by side.
//
// Exit statuses: 0 success, 1 usage error, 2 data error.
// All diagnostics go to stderr; stdout carries only run lines, reports,
// and tables, so output can be piped or redirected as-is.

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fusionrank/error.hpp"
#include "fusionrank/io.hpp"
#include "fusionrank/pipeline.hpp"

namespace {

using namespace fusionrank;

void write_output(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw DataError("cannot write '" + out_path + "'");
    }
    out << content;
    if (!out) {
        throw DataError("cannot write '" + out_path + "'");
    }
}

void report_id_list(const char* label, const std::vector<std::string>& ids) {
    if (ids.empty()) {
        return;
    }
    std::cerr << label << " (" << ids.size() << "):";
    for (const std::string& id : ids) {
        std::cerr << ' ' << id;
    }
    std::cerr << '\n';
}

struct RankArgs {
    std::string corpus_path;
    std::string assoc_path;
    std::string queries_path;
    std::string stopwords_path;
    std::string out_path;
    bool lenient = false;
    RunConfig config;
};

int cmd_rank(const RankArgs& args) {
    StopwordList stopwords;
    if (!args.stopwords_path.empty()) {
        stopwords = read_stopwords_file(args.stopwords_path);
    }
    const DocumentIndex index = ingest_corpus(read_corpus_file(args.corpus_path),
                                              args.stopwords_path.empty() ? nullptr : &stopwords);
    const AssociationTable table =
        load_associations(read_associations_file(args.assoc_path), index, args.lenient);
    if (table.dropped_edges > 0) {
        std::cerr << "dropped " << table.dropped_edges
                  << " association(s) naming unknown documents\n";
    }
    const std::vector<QueryRecord> queries = read_queries_file(args.queries_path);

    const RankRunResult result = run_rank(index, table, queries, args.config);
    report_id_list("objects excluded (empty pseudo-document)", result.excluded_objects);
    report_id_list("queries with no output", result.skipped_queries);
    write_output(format_run_file(result, args.config), args.out_path);
    return 0;
}

struct EvalArgs {
    std::string run_path;
    std::string qrels_path;
    std::string out_path;
    EvalConfig config;
};

int cmd_eval(const EvalArgs& args) {
    const auto run_entries = read_run_file(args.run_path);
    if (run_entries.empty()) {
        throw DataError("no queries in run");
    }
    const std::map<std::string, RankedList> run(run_entries.begin(), run_entries.end());
    const Qrels qrels = read_qrels_file(args.qrels_path);

    const MetricReport report = evaluate_run(run, qrels, args.config);
    if (report.num_excluded > 0) {
        std::cerr << "excluded from means: " << report.num_excluded
                  << " judged query(s) with no relevant objects\n";
    }
    if (report.num_unjudged > 0) {
        std::cerr << "ignored: " << report.num_unjudged << " run query(s) not in the qrels\n";
    }
    write_output(format_metric_report(report), args.out_path);
    return 0;
}

struct GridArgs {
    std::string corpus_path;
    std::string assoc_path;
    std::string queries_path;
    std::string qrels_path;
    std::string stopwords_path;
    std::string out_path;
    bool lenient = false;
    GridTask task = GridTask::Expert;
};

int cmd_grid(const GridArgs& args) {
    StopwordList stopwords;
    if (!args.stopwords_path.empty()) {
        stopwords = read_stopwords_file(args.stopwords_path);
    }
    const DocumentIndex index = ingest_corpus(read_corpus_file(args.corpus_path),
                                              args.stopwords_path.empty() ? nullptr : &stopwords);
    const AssociationTable table =
        load_associations(read_associations_file(args.assoc_path), index, args.lenient);
    if (table.dropped_edges > 0) {
        std::cerr << "dropped " << table.dropped_edges
                  << " association(s) naming unknown documents\n";
    }
    const std::vector<QueryRecord> queries = read_queries_file(args.queries_path);
    const Qrels qrels = read_qrels_file(args.qrels_path);

    const GridResult grid = run_grid(index, table, queries, qrels, args.task);
    write_output(format_grid(grid), args.out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fusion-based object retrieval over document-object associations"};
    app.require_subcommand(1);

    RankArgs rank_args;
    std::string fusion_name = "early";
    std::string model_name = "lm";
    std::string assoc_name = "binary";
    std::string transform_name = "raw";
    CLI::App* rank = app.add_subcommand("rank", "Rank objects for each query, TREC run output");
    rank->add_option("corpus", rank_args.corpus_path, "doc_id<TAB>text file")->required();
    rank->add_option("associations", rank_args.assoc_path,
                     "doc_id<TAB>object_id[<TAB>weight] file")
        ->required();
    rank->add_option("queries", rank_args.queries_path, "query_id<TAB>text file")->required();
    rank->add_option("--fusion", fusion_name, "early|late")
        ->check(CLI::IsMember({"early", "late"}))
        ->capture_default_str();
    rank->add_option("--model", model_name, "lm|bm25")
        ->check(CLI::IsMember({"lm", "bm25"}))
        ->capture_default_str();
    rank->add_option("--assoc", assoc_name, "binary|uniform|explicit")
        ->check(CLI::IsMember({"binary", "uniform", "explicit"}))
        ->capture_default_str();
    rank->add_option("--lambda", rank_args.config.params.lambda, "LM smoothing weight")
        ->capture_default_str();
    rank->add_option("--k1", rank_args.config.params.k1, "BM25 k1")->capture_default_str();
    rank->add_option("--b", rank_args.config.params.b, "BM25 b")->capture_default_str();
    rank->add_option("--topk-docs", rank_args.config.top_k_docs,
                     "documents aggregated per query (late fusion)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    rank->add_option("--depth", rank_args.config.output_depth, "run lines per query")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    rank->add_option("--tag", rank_args.config.run_tag, "run tag column")->capture_default_str();
    rank->add_option("--transform", transform_name,
                     "late-fusion document evidence: raw|rr (reciprocal rank)")
        ->check(CLI::IsMember({"raw", "rr"}))
        ->capture_default_str();
    rank->add_option("--stopwords", rank_args.stopwords_path, "stopword list, one per line");
    rank->add_flag("--lenient", rank_args.lenient,
                   "drop associations naming unknown documents instead of failing");
    rank->add_option("-o,--output", rank_args.out_path, "write run lines here (default stdout)");

    EvalArgs eval_args;
    std::string gain_name = "exp";
    CLI::App* eval = app.add_subcommand("eval", "Evaluate a TREC run file against qrels");
    eval->add_option("run", eval_args.run_path, "TREC run file")->required();
    eval->add_option("qrels", eval_args.qrels_path, "TREC qrels file")->required();
    eval->add_option("--p-k", eval_args.config.precision_k, "precision cutoff")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    eval->add_option("--ndcg-k", eval_args.config.ndcg_k, "nDCG cutoff")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    eval->add_option("--ndcg-gain", gain_name, "exp (2^grade-1) | linear (grade)")
        ->check(CLI::IsMember({"exp", "linear"}))
        ->capture_default_str();
    eval->add_option("-o,--output", eval_args.out_path, "write report here (default stdout)");

    GridArgs grid_args;
    std::string task_name = "expert";
    CLI::App* grid = app.add_subcommand(
        "grid", "Run and evaluate all 8 fusion/model/association configurations");
    grid->add_option("corpus", grid_args.corpus_path, "doc_id<TAB>text file")->required();
    grid->add_option("associations", grid_args.assoc_path,
                     "doc_id<TAB>object_id[<TAB>weight] file")
        ->required();
    grid->add_option("queries", grid_args.queries_path, "query_id<TAB>text file")->required();
    grid->add_option("qrels", grid_args.qrels_path, "TREC qrels file")->required();
    grid->add_option("--task", task_name, "expert|blog (MAP,MRR,P@10) or vertical (nDCG@20,MAP,P@5)")
        ->check(CLI::IsMember({"expert", "blog", "vertical"}))
        ->capture_default_str();
    grid->add_option("--stopwords", grid_args.stopwords_path, "stopword list, one per line");
    grid->add_flag("--lenient", grid_args.lenient,
                   "drop associations naming unknown documents instead of failing");
    grid->add_option("-o,--output", grid_args.out_path, "write table here (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (rank->parsed()) {
            rank_args.config.fusion = fusion_strategy_from_string(fusion_name);
            rank_args.config.model = retrieval_model_from_string(model_name);
            rank_args.config.assoc = association_mode_from_string(assoc_name);
            rank_args.config.transform = score_transform_from_string(transform_name);
            return cmd_rank(rank_args);
        }
        if (eval->parsed()) {
            eval_args.config.gain =
                gain_name == "linear" ? GainVariant::Linear : GainVariant::Exponential;
            return cmd_eval(eval_args);
        }
        grid_args.task = grid_task_from_string(task_name);
        return cmd_grid(grid_args);
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
