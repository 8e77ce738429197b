#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fusionrank/associations.hpp"
#include "fusionrank/corpus.hpp"
#include "fusionrank/ranked_list.hpp"
#include "fusionrank/scoring.hpp"

namespace fusionrank {

/// Term-level profile of one object: pseudo-frequencies
/// f~(t,o) = sum_d f(t,d) * w(d,o), stored sparsely (positive entries
/// only), with length = sum of the stored values.
struct PseudoObject {
    std::string id;
    std::map<Term, double> pseudo_freqs;
    double length = 0.0;
};

/// Pseudo-object collection plus the object-level statistics BM25 needs
/// and the document-collection background the LM scorer smooths against.
/// Immutable after build; concurrent reads are safe.
struct ObjectIndex {
    std::map<std::string, PseudoObject> objects;
    std::int64_t num_objects = 0;
    std::map<Term, std::int64_t> object_doc_freq;  // |{o : f~(t,o) > 0}|
    double avg_object_length = 0.0;
    CollectionStats background;  // document-collection statistics

    /// Build summary: objects whose pseudo-length came out 0 (all
    /// associated documents empty or zero-weighted) and were excluded.
    std::vector<std::string> excluded_objects;
};

/// Materializes every object's pseudo-frequencies. Documents are summed
/// in ascending doc-id order, so repeated builds are bit-identical.
ObjectIndex build_object_index(const DocumentIndex& index, const AssociationTable& table,
                               AssociationMode mode);

/// Sum of per-term scores over the query term instances (duplicates
/// contribute once per instance). LM smooths against the document
/// collection and skips terms with zero collection frequency; BM25 uses
/// object-level idf and average length and skips terms no object
/// contains. Throws if the object is not in the index.
double score_object_early(const ObjectIndex& obj_index, const std::string& object_id,
                          const std::vector<Term>& query, RetrievalModel model,
                          const ModelParams& params);

/// Scores every object matching at least one query term, sorts by the
/// tie-break rule, truncates to cutoff. Throws std::invalid_argument on
/// an empty query.
RankedList rank_objects_early(const ObjectIndex& obj_index, const std::vector<Term>& query,
                              RetrievalModel model, const ModelParams& params,
                              std::size_t cutoff);

/// Binary cache with exact double bit patterns: reloading yields scores
/// bit-identical to a rebuild.
void save_object_index(const ObjectIndex& obj_index, const std::string& path);
ObjectIndex load_object_index(const std::string& path);

}  // namespace fusionrank
