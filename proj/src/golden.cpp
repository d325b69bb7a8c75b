#include "horikawa/golden.hpp"
#include "horikawa/errors.hpp"

#include <map>

namespace horikawa {

extern const char* const kGoldenJson;

namespace {

const std::map<std::string, GoldenTable>& tables()
{
    static const std::map<std::string, GoldenTable> t = [] {
        std::map<std::string, GoldenTable> out;
        for (const auto& j : golden_json().at("tables")) {
            GoldenTable g;
            g.id = j.at("id");
            g.title = j.at("title");
            g.source = j.at("source");
            g.columns = j.at("columns").get<std::vector<std::string>>();
            for (const auto& r : j.at("rows")) g.rows.push_back({r.at("key"), r.at("values").get<std::vector<Json>>()});
            if (j.contains("exceptions"))
                for (const auto& e : j.at("exceptions")) g.exceptions.push_back({e.at("row"), e.at("column"), e.at("listed"), e.at("note")});
            out[g.id] = std::move(g);
        }
        return out;
    }();
    return t;
}

} // namespace

const Json& golden_json()
{
    static const Json j = Json::parse(kGoldenJson);
    return j;
}

std::vector<std::string> golden_ids()
{
    std::vector<std::string> ids;
    for (const auto& j : golden_json().at("tables")) ids.push_back(j.at("id"));
    return ids;
}

const GoldenTable& golden_table(const std::string& id)
{
    auto it = tables().find(id);
    if (it == tables().end())
        throw UnknownName("unknown table '" + id + "'");
    return it->second;
}

} // namespace horikawa
