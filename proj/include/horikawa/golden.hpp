#pragma once

#include "horikawa/json_io.hpp"

#include <string>
#include <vector>

namespace horikawa {

struct GoldenException {
    std::string row, column;
    Json listed;       // the conflicting value listed elsewhere
    std::string note;
};

struct GoldenTable {
    std::string id, title, source;
    std::vector<std::string> columns;
    std::vector<std::pair<std::string, std::vector<Json>>> rows;
    std::vector<GoldenException> exceptions;
};

const Json& golden_json();
std::vector<std::string> golden_ids();
const GoldenTable& golden_table(const std::string& id); // UnknownName

} // namespace horikawa
