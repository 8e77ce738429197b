"""Object retrieval by early or late fusion of document evidence.

Thin Python surface over the C++ core: build a document index and a
document-object association table, rank objects with early fusion
(term-level pseudo-objects) or late fusion (aggregated document scores),
and evaluate TREC-style runs.
"""

from ._fusionrank import (
    UNBOUNDED_TOP_K,
    AggregationSpec,
    AssociationMode,
    AssociationRecord,
    AssociationTable,
    CollectionStats,
    CorpusRecord,
    DataError,
    DocumentIndex,
    EvalConfig,
    FusionStrategy,
    GainVariant,
    GridResult,
    GridRow,
    GridTask,
    MetricReport,
    ModelParams,
    ObjectIndex,
    Qrels,
    QueryRecord,
    RankRunResult,
    RetrievalModel,
    RunConfig,
    ScoredEntry,
    ScoreTransform,
    aggregate_objects,
    association_weight,
    average_precision,
    background_prob,
    bm25_term_score,
    build_object_index,
    evaluate_run,
    format_fixed,
    format_grid,
    format_metric_report,
    format_run_file,
    format_run_lines,
    idf,
    ingest_corpus,
    lm_term_score,
    load_associations,
    load_object_index,
    ndcg_at_k,
    precision_at_k,
    rank_objects_early,
    rank_objects_late,
    read_associations_file,
    read_corpus_file,
    read_qrels_file,
    read_queries_file,
    read_run_file,
    read_stopwords_file,
    reciprocal_rank,
    run_grid,
    run_rank,
    save_object_index,
    score_documents,
    score_object_early,
    tokenize,
)

__version__ = "1.0.0"

__all__ = [
    "UNBOUNDED_TOP_K",
    "AggregationSpec",
    "AssociationMode",
    "AssociationRecord",
    "AssociationTable",
    "CollectionStats",
    "CorpusRecord",
    "DataError",
    "DocumentIndex",
    "EvalConfig",
    "FusionStrategy",
    "GainVariant",
    "GridResult",
    "GridRow",
    "GridTask",
    "MetricReport",
    "ModelParams",
    "ObjectIndex",
    "Qrels",
    "QueryRecord",
    "RankRunResult",
    "RetrievalModel",
    "RunConfig",
    "ScoredEntry",
    "ScoreTransform",
    "aggregate_objects",
    "association_weight",
    "average_precision",
    "background_prob",
    "bm25_term_score",
    "build_object_index",
    "evaluate_run",
    "format_fixed",
    "format_grid",
    "format_metric_report",
    "format_run_file",
    "format_run_lines",
    "idf",
    "ingest_corpus",
    "lm_term_score",
    "load_associations",
    "load_object_index",
    "ndcg_at_k",
    "precision_at_k",
    "rank_objects_early",
    "rank_objects_late",
    "read_associations_file",
    "read_corpus_file",
    "read_qrels_file",
    "read_queries_file",
    "read_run_file",
    "read_stopwords_file",
    "reciprocal_rank",
    "run_grid",
    "run_rank",
    "save_object_index",
    "score_documents",
    "score_object_early",
    "tokenize",
    "__version__",
]
