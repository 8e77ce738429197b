#include "fusionrank/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "fusionrank/error.hpp"

namespace fusionrank {

std::string format_fixed(double value, int decimals) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*f", decimals, value);
    return buffer;
}

namespace {

[[noreturn]] void malformed(const std::string& path, std::size_t line_no,
                            const std::string& what) {
    throw DataError(path + ":" + std::to_string(line_no) + ": " + what);
}

/// Applies fn to every non-blank, non-comment line, stripped of any
/// trailing CR; line numbers count every physical line.
template <typename Fn>
void for_each_data_line(const std::string& path, Fn fn) {
    std::ifstream in(path);
    if (!in) {
        throw DataError("cannot open '" + path + "'");
    }
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line.front() == '#') {
            continue;
        }
        fn(line_no, line);
    }
}

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t tab = line.find('\t', start);
        if (tab == std::string::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

std::vector<std::string> split_whitespace(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> fields;
    std::string field;
    while (in >> field) {
        fields.push_back(field);
    }
    return fields;
}

double parse_double(const std::string& token, const std::string& path, std::size_t line_no,
                    const char* what) {
    try {
        std::size_t consumed = 0;
        const double value = std::stod(token, &consumed);
        if (consumed != token.size()) {
            malformed(path, line_no, std::string("malformed ") + what + " '" + token + "'");
        }
        return value;
    } catch (const DataError&) {
        throw;
    } catch (const std::exception&) {
        malformed(path, line_no, std::string("malformed ") + what + " '" + token + "'");
    }
}

std::int64_t parse_int(const std::string& token, const std::string& path, std::size_t line_no,
                       const char* what) {
    try {
        std::size_t consumed = 0;
        const long long value = std::stoll(token, &consumed);
        if (consumed != token.size()) {
            malformed(path, line_no, std::string("malformed ") + what + " '" + token + "'");
        }
        return value;
    } catch (const DataError&) {
        throw;
    } catch (const std::exception&) {
        malformed(path, line_no, std::string("malformed ") + what + " '" + token + "'");
    }
}

}  // namespace

std::vector<CorpusRecord> read_corpus_file(const std::string& path) {
    std::vector<CorpusRecord> records;
    for_each_data_line(path, [&](std::size_t line_no, const std::string& line) {
        const std::size_t tab = line.find('\t');
        if (tab == std::string::npos || tab == 0) {
            malformed(path, line_no, "expected doc_id<TAB>document text");
        }
        records.push_back({line.substr(0, tab), line.substr(tab + 1)});
    });
    return records;
}

std::vector<AssociationRecord> read_associations_file(const std::string& path) {
    std::vector<AssociationRecord> records;
    for_each_data_line(path, [&](std::size_t line_no, const std::string& line) {
        const std::vector<std::string> fields = split_tabs(line);
        if (fields.size() < 2 || fields.size() > 3 || fields[0].empty() || fields[1].empty()) {
            malformed(path, line_no, "expected doc_id<TAB>object_id[<TAB>weight]");
        }
        AssociationRecord record;
        record.doc_id = fields[0];
        record.object_id = fields[1];
        if (fields.size() == 3) {
            record.weight = parse_double(fields[2], path, line_no, "weight");
        }
        records.push_back(std::move(record));
    });
    return records;
}

std::vector<QueryRecord> read_queries_file(const std::string& path) {
    std::vector<QueryRecord> records;
    for_each_data_line(path, [&](std::size_t line_no, const std::string& line) {
        const std::size_t tab = line.find('\t');
        if (tab == std::string::npos || tab == 0) {
            malformed(path, line_no, "expected query_id<TAB>query text");
        }
        records.push_back({line.substr(0, tab), line.substr(tab + 1)});
    });
    return records;
}

StopwordList read_stopwords_file(const std::string& path) {
    StopwordList stopwords;
    for_each_data_line(path, [&](std::size_t, const std::string& line) {
        std::string word;
        word.reserve(line.size());
        for (char c : line) {
            if (c != ' ' && c != '\t') {
                word.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c);
            }
        }
        if (!word.empty()) {
            stopwords.insert(std::move(word));
        }
    });
    return stopwords;
}

Qrels read_qrels_file(const std::string& path) {
    Qrels qrels;
    for_each_data_line(path, [&](std::size_t line_no, const std::string& line) {
        const std::vector<std::string> fields = split_whitespace(line);
        if (fields.size() != 4) {
            malformed(path, line_no, "expected query_id 0 object_id grade");
        }
        const std::int64_t grade = parse_int(fields[3], path, line_no, "grade");
        if (grade < 0) {
            malformed(path, line_no, "grade must be non-negative");
        }
        // Repeated judgments follow trec_eval: the last one wins.
        qrels.judgments[fields[0]][fields[2]] = static_cast<int>(grade);
    });
    return qrels;
}

std::vector<std::pair<std::string, RankedList>> read_run_file(const std::string& path) {
    struct Entry {
        std::int64_t rank;
        std::size_t order;
        ScoredEntry scored;
    };
    std::vector<std::string> query_order;
    std::map<std::string, std::vector<Entry>> entries;
    std::size_t order = 0;
    for_each_data_line(path, [&](std::size_t line_no, const std::string& line) {
        const std::vector<std::string> fields = split_whitespace(line);
        if (fields.size() != 6) {
            malformed(path, line_no, "expected query_id Q0 object_id rank score run_tag");
        }
        const std::int64_t rank = parse_int(fields[3], path, line_no, "rank");
        if (rank < 1) {
            malformed(path, line_no, "rank must be >= 1");
        }
        const double score = parse_double(fields[4], path, line_no, "score");
        auto [it, inserted] = entries.try_emplace(fields[0]);
        if (inserted) {
            query_order.push_back(fields[0]);
        }
        it->second.push_back({rank, order++, {fields[2], score}});
    });

    std::vector<std::pair<std::string, RankedList>> run;
    run.reserve(query_order.size());
    for (const std::string& query_id : query_order) {
        std::vector<Entry>& list = entries[query_id];
        std::sort(list.begin(), list.end(), [](const Entry& a, const Entry& b) {
            return a.rank != b.rank ? a.rank < b.rank : a.order < b.order;
        });
        RankedList ranking;
        ranking.reserve(list.size());
        for (const Entry& entry : list) {
            ranking.push_back(entry.scored);
        }
        run.emplace_back(query_id, std::move(ranking));
    }
    return run;
}

std::string format_run_lines(const std::string& query_id, const RankedList& ranking,
                             const std::string& run_tag, std::size_t depth) {
    std::string out;
    const std::size_t lines = std::min(ranking.size(), depth);
    for (std::size_t i = 0; i < lines; ++i) {
        out += query_id;
        out += " Q0 ";
        out += ranking[i].id;
        out += ' ';
        out += std::to_string(i + 1);
        out += ' ';
        out += format_fixed(ranking[i].score, 6);
        out += ' ';
        out += run_tag;
        out += '\n';
    }
    return out;
}

std::string format_metric_report(const MetricReport& report) {
    std::string out;
    for (const std::string& metric : report.metric_names) {
        for (const auto& [query_id, row] : report.per_query) {
            out += metric;
            out += '\t';
            out += query_id;
            out += '\t';
            out += format_fixed(row.at(metric), 4);
            out += '\n';
        }
        out += metric;
        out += "\tall\t";
        out += format_fixed(report.means.at(metric), 4);
        out += '\n';
    }
    return out;
}

}  // namespace fusionrank
