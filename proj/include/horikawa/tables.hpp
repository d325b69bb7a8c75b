#pragma once

#include "horikawa/golden.hpp"

#include <string>
#include <vector>

namespace horikawa {

enum class Format { Json, Tsv, Markdown };
Format parse_format(const std::string& text);

struct TableRow {
    std::string key;
    std::vector<Json> values;    // computed
    std::vector<Json> expected;  // golden, empty when the golden table has no such row
    bool match = false;
};

struct TableReport {
    std::string id, title, source;
    std::vector<std::string> columns;
    std::vector<TableRow> rows;
    std::vector<std::string> notes;       // annotated exceptions
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};

std::vector<std::string> table_ids();
TableReport compute_table(const std::string& id);   // UnknownName
std::vector<TableReport> compute_tables(const std::string& id_or_all);

std::string render(const std::vector<TableReport>& reports, Format f);
Json report_json(const TableReport& r);

// Cell equality; arrays compare as multisets.
bool cell_equal(const Json& a, const Json& b);
std::string cell_text(const Json& c);

} // namespace horikawa
