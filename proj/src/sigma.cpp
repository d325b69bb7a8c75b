#include "horikawa/sigma.hpp"
#include "horikawa/errors.hpp"

namespace horikawa {

namespace {

const std::array<SigmaInfo, 8> table{{
    {Sigma::E12, "E12", 'E', 3, 7, 21, 12, {3, 7, 0}, {4, 0, 3}},
    {Sigma::E13, "E13", 'E', 2, 5, 15, 13, {3, 5, 1}, {4, 0, 3}},
    {Sigma::E14, "E14", 'E', 3, 8, 24, 14, {2, 8, 0}, {4, 0, 3}},
    {Sigma::Z11, "Z11", 'Z', 3, 4, 15, 11, {5, 5, 0}, {3, 1, 3}},
    {Sigma::Z12, "Z12", 'Z', 2, 3, 11, 12, {4, 4, 1}, {3, 1, 3}},
    {Sigma::Z13, "Z13", 'Z', 3, 5, 18, 13, {4, 6, 0}, {3, 1, 3}},
    {Sigma::W12, "W12", 'W', 4, 5, 20, 12, {5, 5, 0}, {2, 0, 4}},
    {Sigma::W13, "W13", 'W', 3, 4, 16, 13, {4, 4, 1}, {2, 0, 4}},
}};

} // namespace

std::string Mon::str() const
{
    std::string s;
    auto put = [&](const char* v, int e) {
        if (e == 0) return;
        if (!s.empty()) s += "*";
        s += v;
        if (e > 1) s += "^" + std::to_string(e);
    };
    put("x", a);
    put("y", b);
    put("z", c);
    return s.empty() ? "1" : s;
}

int index_of(Sigma s) { return static_cast<int>(s); }

const SigmaInfo& info(Sigma s) { return table[index_of(s)]; }

std::string name(Sigma s) { return info(s).name; }

Sigma parse_sigma(std::string_view text)
{
    for (const auto& row : table)
        if (text == row.name) return row.sigma;
    throw UnknownName("unknown singularity class '" + std::string(text) + "'");
}

} // namespace horikawa
