#include "horikawa/tables.hpp"
#include "horikawa/errors.hpp"
#include "horikawa/univariate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace horikawa {

namespace {

using Rows = std::vector<std::pair<std::string, std::vector<Json>>>;

Json cell(const Rational& r)
{
    if (is_integer(r)) return Json::parse(r.get_num().get_str());
    return to_string(r);
}

std::string triple(const Mon& m)
{
    return "(" + std::to_string(m.a) + "," + std::to_string(m.b) + "," + std::to_string(m.c) + ")";
}

std::string join(const std::vector<std::string>& xs, const std::string& sep)
{
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
    return out;
}

std::vector<Sigma> zw_sigmas()
{
    std::vector<Sigma> out;
    for (Sigma s : all_sigmas)
        if (has_sextic_model(s)) out.push_back(s);
    return out;
}

Rows per_sigma(const std::function<std::vector<Json>(Sigma)>& f, bool zw_only = false)
{
    Rows r;
    for (Sigma s : zw_only ? zw_sigmas() : std::vector<Sigma>(all_sigmas.begin(), all_sigmas.end()))
        r.push_back({name(s), f(s)});
    return r;
}

Rows signs_fixed()
{
    Rows r;
    for (int sgn : {1, -1}) {
        Json list = Json::array();
        for (const auto& m : v10_basis()) {
            bool all = std::all_of(all_sigmas.begin(), all_sigmas.end(), [&](Sigma s) { return sign(s, m) == sgn; });
            if (all) list.push_back(triple(m));
        }
        r.push_back({sgn > 0 ? "positive" : "negative", {Json(list.size()), list}});
    }
    return r;
}

Rows signs_variable()
{
    Rows r;
    for (const auto& m : v10_basis()) {
        std::vector<Json> row;
        std::set<int> seen;
        for (Sigma s : all_sigmas) {
            int g = sign(s, m);
            seen.insert(g);
            row.push_back(g > 0 ? "+" : (g < 0 ? "-" : "0"));
        }
        if (seen.size() > 1) r.push_back({triple(m), row});
    }
    return r;
}

Rows compute_rows(const std::string& id)
{
    if (id == "weights")
        return per_sigma([](Sigma s) { return std::vector<Json>{info(s).p, info(s).q, info(s).d}; });
    if (id == "milnor")
        return per_sigma([](Sigma s) {
            const auto& I = info(s);
            Rational q(Integer((I.d - I.p) * (I.d - I.q)), Integer(I.p * I.q));
            q.canonicalize();
            return std::vector<Json>{I.mu, cell(q), milnor_number(local_model(s, 0))};
        });
    if (id == "signs-fixed") return signs_fixed();
    if (id == "signs-variable") return signs_variable();
    if (id == "zero-weight")
        return per_sigma([](Sigma s) { return std::vector<Json>{info(s).m1.str(), info(s).m2.str()}; });
    if (id == "normal-forms")
        return per_sigma([](Sigma s) { return std::vector<Json>{normal_form_text(s)}; });
    if (id == "intersections")
        return per_sigma([](Sigma s) {
            ZAmpleness z = z_ampleness(s);
            return std::vector<Json>{cell(z.with_dx), cell(z.with_dy), cell(z.with_dz), cell(z.with_e)};
        });
    if (id == "c-table")
        return per_sigma([](Sigma s) {
            TailAmpleness t = tail_ample_constant(s);
            return std::vector<Json>{t.c, t.ample};
        });
    if (id == "ksq") return per_sigma([](Sigma s) { return std::vector<Json>{cell(k_squared_closed_form(s))}; });
    if (id == "if00")
        return per_sigma([](Sigma s) { return std::vector<Json>{replace(s, reference_u(s)).y.if00_number}; });
    if (id == "ambient")
        return per_sigma([](Sigma s) {
            YDatum y = replace(s, reference_u(s)).y;
            std::string space = "P(";
            for (std::size_t i = 0; i < 4; ++i) space += (i ? "," : "") + std::to_string(y.ambient_weights[i]);
            return std::vector<Json>{y.degree, space + ")"};
        });
    if (id == "chi")
        return per_sigma([](Sigma s) {
            StableSurfaceDatum d = replace(s, reference_u(s));
            return std::vector<Json>{d.y.chi_top, d.z.chi_top, d.total_chi};
        });
    if (id == "gluing")
        return per_sigma([](Sigma s) { return std::vector<Json>{Json(replace(s, reference_u(s)).gluing.points)}; });
    if (id == "monomials") return per_sigma([](Sigma s) { return std::vector<Json>{degree_d_monomial_count(s)}; });
    if (id == "aut") {
        Rows r{{"P(1,1,2)", {aut_dimension(1, 2)}}};
        for (auto& row : per_sigma([](Sigma s) { return std::vector<Json>{aut_dimension(info(s).p, info(s).q)}; }))
            r.push_back(row);
        return r;
    }
    if (id == "gamma")
        return per_sigma([](Sigma s) {
            GammaIdeal G = gamma_ideal(s);
            std::vector<std::string> rad;
            for (const auto& p : G.radical) rad.push_back(p.str());
            return std::vector<Json>{G.dimension, "(" + join(rad, ", ") + ")"};
        });
    if (id == "boundary")
        return per_sigma([](Sigma s) {
            BoundaryDims b = boundary_dimension(s);
            return std::vector<Json>{b.y_side, b.z_side, b.total};
        });
    if (id == "branch-curve")
        return per_sigma([](Sigma s) {
            BranchCohomology b = branch_curve_cohomology(s);
            return std::vector<Json>{cell(b.genus_smooth), b.chi, b.rk_h1};
        });
    if (id == "h11") return per_sigma([](Sigma s) { return std::vector<Json>{*z_invariants(s).h11}; }, true);
    if (id == "sextic-dims")
        return per_sigma([](Sigma s) { return std::vector<Json>{sextic_moduli_dimension(s)}; }, true);
    if (id == "line-incidence")
        return per_sigma(
            [](Sigma s) {
                std::vector<std::string> parts;
                for (int k : line_incidence(sample_sextic(s)).partition) parts.push_back(std::to_string(k));
                return std::vector<Json>{join(parts, ",")};
            },
            true);
    if (id == "sextic-singular")
        return per_sigma(
            [](Sigma s) {
                std::vector<std::string> names;
                for (const auto& p : singular_scan(sample_sextic(s).form).points) names.push_back(p.type.name());
                return std::vector<Json>{names.empty() ? std::string("none") : join(names, "+")};
            },
            true);
    throw UnknownName("unknown table '" + id + "'");
}

std::string md_escape(std::string s)
{
    std::string out;
    for (char c : s) {
        if (c == '|') out += '\\';
        out += c;
    }
    return out;
}

} // namespace

Format parse_format(const std::string& text)
{
    if (text == "json") return Format::Json;
    if (text == "tsv") return Format::Tsv;
    if (text == "md" || text == "markdown") return Format::Markdown;
    throw UnknownName("unknown format '" + text + "'");
}

std::vector<std::string> table_ids() { return golden_ids(); }

bool cell_equal(const Json& a, const Json& b)
{
    if (a.is_array() && b.is_array()) {
        std::vector<std::string> x, y;
        for (const auto& e : a) x.push_back(e.dump());
        for (const auto& e : b) y.push_back(e.dump());
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        return x == y;
    }
    return a == b;
}

std::string cell_text(const Json& c)
{
    if (c.is_string()) return c.get<std::string>();
    if (c.is_array()) {
        std::vector<std::string> parts;
        for (const auto& e : c) parts.push_back(cell_text(e));
        return join(parts, " ");
    }
    return c.dump();
}

TableReport compute_table(const std::string& id)
{
    const GoldenTable& g = golden_table(id);
    TableReport r{g.id, g.title, g.source, g.columns, {}, {}, {}};
    Rows computed = compute_rows(id);
    std::map<std::string, const std::vector<Json>*> expected;
    for (const auto& [k, v] : g.rows) expected[k] = &v;
    for (auto& [key, values] : computed) {
        TableRow row{key, values, {}, false};
        auto it = expected.find(key);
        if (it != expected.end()) {
            row.expected = *it->second;
            row.match = row.values.size() == row.expected.size();
            for (std::size_t i = 0; row.match && i < row.values.size(); ++i)
                row.match = cell_equal(row.values[i], row.expected[i]);
            expected.erase(it);
        }
        if (!row.match) {
            std::string what = row.expected.empty() ? "no golden row" : "expected";
            for (std::size_t i = 0; i < row.expected.size() && i < g.columns.size(); ++i)
                what += " " + g.columns[i] + "=" + cell_text(row.expected[i]);
            std::string got;
            for (std::size_t i = 0; i < row.values.size() && i < g.columns.size(); ++i)
                got += " " + g.columns[i] + "=" + cell_text(row.values[i]);
            r.mismatches.push_back(key + ": " + what + ", computed" + got);
        }
        r.rows.push_back(std::move(row));
    }
    for (const auto& [k, v] : expected) r.mismatches.push_back(k + ": golden row not computed");
    for (const auto& e : g.exceptions)
        r.notes.push_back(e.row + " " + e.column + ": also listed as " + cell_text(e.listed) + " (" + e.note + ")");
    return r;
}

std::vector<TableReport> compute_tables(const std::string& id_or_all)
{
    std::vector<TableReport> out;
    if (id_or_all == "all")
        for (const auto& id : table_ids()) out.push_back(compute_table(id));
    else
        out.push_back(compute_table(id_or_all));
    return out;
}

Json report_json(const TableReport& r)
{
    Json j;
    j["tableId"] = r.id;
    j["title"] = r.title;
    j["source"] = r.source;
    j["columns"] = r.columns;
    j["rows"] = Json::array();
    for (const auto& row : r.rows) {
        Json x;
        x["key"] = row.key;
        x["values"] = row.values;
        x["match"] = row.match;
        j["rows"].push_back(x);
    }
    j["notes"] = r.notes;
    j["mismatches"] = r.mismatches;
    j["ok"] = r.ok();
    return j;
}

std::string render(const std::vector<TableReport>& reports, Format f)
{
    std::ostringstream os;
    if (f == Format::Json) {
        Json all = Json::array();
        for (const auto& r : reports) all.push_back(report_json(r));
        os << (reports.size() == 1 ? report_json(reports[0]) : all).dump(2) << "\n";
        return os.str();
    }
    for (std::size_t t = 0; t < reports.size(); ++t) {
        const auto& r = reports[t];
        if (t) os << "\n";
        if (f == Format::Tsv) {
            os << "# " << r.id << "\t" << r.title << "\n";
            os << "key";
            for (const auto& c : r.columns) os << "\t" << c;
            os << "\tmatch\n";
            for (const auto& row : r.rows) {
                os << row.key;
                for (const auto& v : row.values) os << "\t" << cell_text(v);
                os << "\t" << (row.match ? "yes" : "NO") << "\n";
            }
            for (const auto& n : r.notes) os << "# note: " << n << "\n";
            for (const auto& m : r.mismatches) os << "# mismatch: " << m << "\n";
        } else {
            os << "### " << r.id << ": " << md_escape(r.title) << "\n\n| |";
            for (const auto& c : r.columns) os << " " << md_escape(c) << " |";
            os << " match |\n|---|";
            for (std::size_t i = 0; i < r.columns.size(); ++i) os << "---|";
            os << "---|\n";
            for (const auto& row : r.rows) {
                os << "| " << md_escape(row.key) << " |";
                for (const auto& v : row.values) os << " " << md_escape(cell_text(v)) << " |";
                os << " " << (row.match ? "yes" : "**no**") << " |\n";
            }
            for (const auto& n : r.notes) os << "\nNote: " << md_escape(n) << "\n";
            for (const auto& m : r.mismatches) os << "\nMismatch: " << md_escape(m) << "\n";
        }
    }
    return os.str();
}

} // namespace horikawa
