#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fusionrank/corpus.hpp"

namespace fusionrank {

/// How a document-object edge is turned into a weight w(d,o):
/// Binary = 1 on an edge, Uniform = 1/len(o) on an edge, Explicit = the
/// weight stored with the edge (1 when none was given). Off-edge pairs
/// always weigh 0.
enum class AssociationMode { Binary, Uniform, Explicit };

const char* to_string(AssociationMode mode);
AssociationMode association_mode_from_string(const std::string& name);

struct AssociationRecord {
    std::string doc_id;
    std::string object_id;
    std::optional<double> weight;
};

/// Bipartite document-object graph. Immutable after load; every stored
/// object has at least one associated document.
struct AssociationTable {
    std::map<std::string, std::vector<std::string>> docs_of;     // object -> ascending doc ids
    std::map<std::string, std::vector<std::string>> objects_of;  // doc -> ascending object ids
    std::map<std::pair<std::string, std::string>, double> explicit_weights;  // (doc, object)
    std::int64_t dropped_edges = 0;  // lenient-mode drops of unknown doc ids

    bool has_object(const std::string& object_id) const { return docs_of.count(object_id) > 0; }
    bool has_edge(const std::string& doc_id, const std::string& object_id) const;

    /// len(o): the total number of documents associated with the object.
    std::int64_t len_of(const std::string& object_id) const;
};

/// Deduplicates edges (first occurrence wins for explicit weights). In
/// strict mode an edge naming a doc id absent from the index is a
/// DataError; in lenient mode it is dropped and counted. Negative
/// explicit weights are always a DataError.
AssociationTable load_associations(const std::vector<AssociationRecord>& records,
                                   const DocumentIndex& index, bool lenient = false);

/// w(d,o) under the given mode. Throws if the object is unknown.
double association_weight(const AssociationTable& table, AssociationMode mode,
                          const std::string& doc_id, const std::string& object_id);

}  // namespace fusionrank
