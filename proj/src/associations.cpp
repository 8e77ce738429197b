#include "fusionrank/associations.hpp"

#include <algorithm>

#include "fusionrank/error.hpp"

namespace fusionrank {

const char* to_string(AssociationMode mode) {
    switch (mode) {
        case AssociationMode::Binary: return "binary";
        case AssociationMode::Uniform: return "uniform";
        case AssociationMode::Explicit: return "explicit";
    }
    return "?";
}

AssociationMode association_mode_from_string(const std::string& name) {
    if (name == "binary") return AssociationMode::Binary;
    if (name == "uniform") return AssociationMode::Uniform;
    if (name == "explicit") return AssociationMode::Explicit;
    throw std::invalid_argument("unknown association mode '" + name + "'");
}

bool AssociationTable::has_edge(const std::string& doc_id, const std::string& object_id) const {
    auto it = docs_of.find(object_id);
    if (it == docs_of.end()) {
        return false;
    }
    return std::binary_search(it->second.begin(), it->second.end(), doc_id);
}

std::int64_t AssociationTable::len_of(const std::string& object_id) const {
    auto it = docs_of.find(object_id);
    if (it == docs_of.end()) {
        throw std::invalid_argument("unknown object id '" + object_id + "'");
    }
    return static_cast<std::int64_t>(it->second.size());
}

AssociationTable load_associations(const std::vector<AssociationRecord>& records,
                                   const DocumentIndex& index, bool lenient) {
    AssociationTable table;
    for (const AssociationRecord& record : records) {
        if (record.weight && *record.weight < 0.0) {
            throw DataError("negative association weight for edge (" + record.doc_id + ", " +
                            record.object_id + ")");
        }
        if (!index.contains(record.doc_id)) {
            if (!lenient) {
                throw DataError("association references unknown doc id '" + record.doc_id + "'");
            }
            ++table.dropped_edges;
            continue;
        }
        auto& doc_list = table.docs_of[record.object_id];
        auto pos = std::lower_bound(doc_list.begin(), doc_list.end(), record.doc_id);
        if (pos != doc_list.end() && *pos == record.doc_id) {
            continue;  // duplicate edge, first occurrence wins
        }
        doc_list.insert(pos, record.doc_id);

        auto& obj_list = table.objects_of[record.doc_id];
        auto obj_pos = std::lower_bound(obj_list.begin(), obj_list.end(), record.object_id);
        obj_list.insert(obj_pos, record.object_id);

        if (record.weight) {
            table.explicit_weights[{record.doc_id, record.object_id}] = *record.weight;
        }
    }
    return table;
}

double association_weight(const AssociationTable& table, AssociationMode mode,
                          const std::string& doc_id, const std::string& object_id) {
    if (!table.has_object(object_id)) {
        throw std::invalid_argument("unknown object id '" + object_id + "'");
    }
    if (!table.has_edge(doc_id, object_id)) {
        return 0.0;
    }
    switch (mode) {
        case AssociationMode::Binary:
            return 1.0;
        case AssociationMode::Uniform:
            return 1.0 / static_cast<double>(table.len_of(object_id));
        case AssociationMode::Explicit: {
            auto it = table.explicit_weights.find({doc_id, object_id});
            return it == table.explicit_weights.end() ? 1.0 : it->second;
        }
    }
    return 0.0;
}

}  // namespace fusionrank
