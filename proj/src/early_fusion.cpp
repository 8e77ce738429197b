#include "fusionrank/early_fusion.hpp"

#include <cstring>
#include <fstream>
#include <set>

#include "fusionrank/error.hpp"

namespace fusionrank {

ObjectIndex build_object_index(const DocumentIndex& index, const AssociationTable& table,
                               AssociationMode mode) {
    ObjectIndex obj_index;
    obj_index.background = index.stats;

    double total_length = 0.0;
    for (const auto& [object_id, doc_ids] : table.docs_of) {
        PseudoObject obj;
        obj.id = object_id;
        for (const std::string& doc_id : doc_ids) {  // ascending doc ids
            const double w = association_weight(table, mode, doc_id, object_id);
            if (w == 0.0) {
                continue;
            }
            auto doc_it = index.docs.find(doc_id);
            if (doc_it == index.docs.end()) {
                throw DataError("object '" + object_id + "' references unknown doc id '" +
                                doc_id + "'");
            }
            for (const auto& [term, count] : doc_it->second.freqs) {
                obj.pseudo_freqs[term] += static_cast<double>(count) * w;
            }
        }
        for (const auto& [term, pf] : obj.pseudo_freqs) {
            obj.length += pf;
        }
        if (obj.length <= 0.0) {
            obj_index.excluded_objects.push_back(object_id);
            continue;
        }
        for (const auto& [term, pf] : obj.pseudo_freqs) {
            obj_index.object_doc_freq[term] += 1;
        }
        total_length += obj.length;
        obj_index.objects.emplace(object_id, std::move(obj));
    }

    obj_index.num_objects = static_cast<std::int64_t>(obj_index.objects.size());
    if (obj_index.num_objects > 0) {
        obj_index.avg_object_length = total_length / static_cast<double>(obj_index.num_objects);
    }
    return obj_index;
}

double score_object_early(const ObjectIndex& obj_index, const std::string& object_id,
                          const std::vector<Term>& query, RetrievalModel model,
                          const ModelParams& params) {
    auto it = obj_index.objects.find(object_id);
    if (it == obj_index.objects.end()) {
        throw std::invalid_argument("unknown object id '" + object_id + "'");
    }
    const PseudoObject& obj = it->second;

    double total = 0.0;
    for (const Term& t : query) {  // one contribution per query term instance
        auto pf_it = obj.pseudo_freqs.find(t);
        const double freq = pf_it == obj.pseudo_freqs.end() ? 0.0 : pf_it->second;
        if (model == RetrievalModel::LM) {
            const double p = background_prob(obj_index.background, t);
            if (p <= 0.0) {
                continue;  // zero collection frequency, unsmoothable
            }
            total += lm_term_score(freq, obj.length, p, params.lambda);
        } else {
            auto df_it = obj_index.object_doc_freq.find(t);
            if (df_it == obj_index.object_doc_freq.end() || df_it->second == 0) {
                continue;  // no object contains the term
            }
            total += bm25_term_score(freq, obj.length, obj_index.avg_object_length,
                                     idf(obj_index.num_objects, df_it->second), params.k1,
                                     params.b);
        }
    }
    return total;
}

RankedList rank_objects_early(const ObjectIndex& obj_index, const std::vector<Term>& query,
                              RetrievalModel model, const ModelParams& params,
                              std::size_t cutoff) {
    if (query.empty()) {
        throw std::invalid_argument("empty query");
    }
    const std::set<Term> query_terms(query.begin(), query.end());

    RankedList ranked;
    for (const auto& [object_id, obj] : obj_index.objects) {
        bool candidate = false;
        for (const Term& t : query_terms) {
            if (obj.pseudo_freqs.count(t) > 0) {
                candidate = true;
                break;
            }
        }
        if (candidate) {
            ranked.push_back({object_id, score_object_early(obj_index, object_id, query, model,
                                                            params)});
        }
    }
    sort_ranked(ranked);
    if (ranked.size() > cutoff) {
        ranked.resize(cutoff);
    }
    return ranked;
}

// --- binary cache ---
//
// Layout: magic, then counted records; doubles as little-endian IEEE-754
// bit patterns so a reload is bit-exact.

namespace {

constexpr char kMagic[8] = {'F', 'R', 'O', 'B', 'J', 'I', 'X', '1'};

void put_u64(std::ostream& out, std::uint64_t v) {
    unsigned char buf[8];
    for (int i = 0; i < 8; ++i) {
        buf[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
    }
    out.write(reinterpret_cast<const char*>(buf), 8);
}

std::uint64_t get_u64(std::istream& in) {
    unsigned char buf[8];
    in.read(reinterpret_cast<char*>(buf), 8);
    if (!in) {
        throw DataError("object index cache: truncated file");
    }
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) {
        v |= static_cast<std::uint64_t>(buf[i]) << (8 * i);
    }
    return v;
}

void put_double(std::ostream& out, double d) {
    std::uint64_t bits;
    std::memcpy(&bits, &d, 8);
    put_u64(out, bits);
}

double get_double(std::istream& in) {
    const std::uint64_t bits = get_u64(in);
    double d;
    std::memcpy(&d, &bits, 8);
    return d;
}

void put_string(std::ostream& out, const std::string& s) {
    put_u64(out, s.size());
    out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

std::string get_string(std::istream& in) {
    const std::uint64_t n = get_u64(in);
    std::string s(n, '\0');
    in.read(s.data(), static_cast<std::streamsize>(n));
    if (!in) {
        throw DataError("object index cache: truncated file");
    }
    return s;
}

}  // namespace

void save_object_index(const ObjectIndex& obj_index, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw DataError("cannot open '" + path + "' for writing");
    }
    out.write(kMagic, sizeof(kMagic));

    put_u64(out, obj_index.objects.size());
    for (const auto& [object_id, obj] : obj_index.objects) {
        put_string(out, object_id);
        put_double(out, obj.length);
        put_u64(out, obj.pseudo_freqs.size());
        for (const auto& [term, pf] : obj.pseudo_freqs) {
            put_string(out, term);
            put_double(out, pf);
        }
    }

    put_u64(out, static_cast<std::uint64_t>(obj_index.num_objects));
    put_u64(out, obj_index.object_doc_freq.size());
    for (const auto& [term, df] : obj_index.object_doc_freq) {
        put_string(out, term);
        put_u64(out, static_cast<std::uint64_t>(df));
    }
    put_double(out, obj_index.avg_object_length);

    const CollectionStats& bg = obj_index.background;
    put_u64(out, static_cast<std::uint64_t>(bg.total_tokens));
    put_u64(out, static_cast<std::uint64_t>(bg.num_docs));
    put_double(out, bg.avg_doc_length);
    put_u64(out, bg.collection_freq.size());
    for (const auto& [term, cf] : bg.collection_freq) {
        put_string(out, term);
        put_u64(out, static_cast<std::uint64_t>(cf));
    }
    put_u64(out, bg.doc_freq.size());
    for (const auto& [term, df] : bg.doc_freq) {
        put_string(out, term);
        put_u64(out, static_cast<std::uint64_t>(df));
    }

    put_u64(out, obj_index.excluded_objects.size());
    for (const std::string& id : obj_index.excluded_objects) {
        put_string(out, id);
    }
    if (!out) {
        throw DataError("write failure on '" + path + "'");
    }
}

ObjectIndex load_object_index(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DataError("cannot open '" + path + "' for reading");
    }
    char magic[sizeof(kMagic)];
    in.read(magic, sizeof(magic));
    if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
        throw DataError("'" + path + "' is not an object index cache");
    }

    ObjectIndex obj_index;
    const std::uint64_t num_objects = get_u64(in);
    for (std::uint64_t i = 0; i < num_objects; ++i) {
        PseudoObject obj;
        obj.id = get_string(in);
        obj.length = get_double(in);
        const std::uint64_t num_terms = get_u64(in);
        for (std::uint64_t j = 0; j < num_terms; ++j) {
            std::string term = get_string(in);
            obj.pseudo_freqs[std::move(term)] = get_double(in);
        }
        std::string key = obj.id;
        obj_index.objects.emplace(std::move(key), std::move(obj));
    }

    obj_index.num_objects = static_cast<std::int64_t>(get_u64(in));
    const std::uint64_t num_df = get_u64(in);
    for (std::uint64_t i = 0; i < num_df; ++i) {
        std::string term = get_string(in);
        obj_index.object_doc_freq[std::move(term)] = static_cast<std::int64_t>(get_u64(in));
    }
    obj_index.avg_object_length = get_double(in);

    CollectionStats& bg = obj_index.background;
    bg.total_tokens = static_cast<std::int64_t>(get_u64(in));
    bg.num_docs = static_cast<std::int64_t>(get_u64(in));
    bg.avg_doc_length = get_double(in);
    const std::uint64_t num_cf = get_u64(in);
    for (std::uint64_t i = 0; i < num_cf; ++i) {
        std::string term = get_string(in);
        bg.collection_freq[std::move(term)] = static_cast<std::int64_t>(get_u64(in));
    }
    const std::uint64_t num_doc_df = get_u64(in);
    for (std::uint64_t i = 0; i < num_doc_df; ++i) {
        std::string term = get_string(in);
        bg.doc_freq[std::move(term)] = static_cast<std::int64_t>(get_u64(in));
    }

    const std::uint64_t num_excluded = get_u64(in);
    for (std::uint64_t i = 0; i < num_excluded; ++i) {
        obj_index.excluded_objects.push_back(get_string(in));
    }
    return obj_index;
}

}  // namespace fusionrank
