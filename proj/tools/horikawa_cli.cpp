// horikawa: regenerate the tables, run the replacement pipeline, GIT and sextic checks.
#include "horikawa/errors.hpp"
#include "horikawa/json_io.hpp"
#include "horikawa/tables.hpp"
#include "horikawa/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using namespace horikawa;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// key/value rendering of a flat-ish JSON object for tsv and md
void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out)
{
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); })) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
    } else {
        out.push_back({prefix, cell_text(j)});
    }
}

void emit(const Json& j, Format f)
{
    if (f == Format::Json) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::vector<std::pair<std::string, std::string>> kv;
    flatten(j, "", kv);
    if (f == Format::Markdown) std::cout << "| field | value |\n|---|---|\n";
    for (const auto& [k, v] : kv) {
        if (f == Format::Tsv)
            std::cout << k << "\t" << v << "\n";
        else
            std::cout << "| " << k << " | " << v << " |\n";
    }
}

Polynomial parse_or_usage(const std::string& text, const std::vector<std::string>& vars)
{
    try {
        return Polynomial::parse(text, vars);
    } catch (const ParseError& e) {
        throw UsageError(e.what());
    } catch (const VariableMismatch& e) {
        throw UsageError(e.what());
    }
}

NormalForm normalize_or_usage(const std::string& text)
{
    try {
        return normalize_f10(parse_or_usage(text, xyz_vars()));
    } catch (const NotHomogeneous& e) {
        throw UsageError(e.what());
    }
}

NormalForm read_quintic(const std::string& text)
{
    std::map<std::string, std::string> forms;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        auto pos = line.find_first_of("=:");
        if (pos == std::string::npos)
            throw UsageError("expected 'name = form', got '" + line + "'");
        forms[trim(line.substr(0, pos))] = trim(line.substr(pos + 1));
    }
    if (forms.empty())
        throw UsageError("no forms given");
    if (forms.count("f10")) {
        if (forms.size() != 1)
            throw UsageError("give either f10 or q4, q6, q8, q10");
        return normalize_or_usage(forms["f10"]);
    }
    for (const auto& [k, v] : forms)
        if (k != "q4" && k != "q6" && k != "q8" && k != "q10")
            throw UsageError("unknown form '" + k + "'");
    auto get = [&](const char* k) {
        auto it = forms.find(k);
        if (it == forms.end())
            throw UsageError(std::string("missing ") + k);
        return parse_or_usage(it->second, xy_vars());
    };
    try {
        return make_normal_form(get("q4"), get("q6"), get("q8"), get("q10"));
    } catch (const NotHomogeneous& e) {
        throw UsageError(e.what());
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Stable replacement data for Horikawa surfaces with exceptional unimodal singularities"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "json, tsv or md")->check(CLI::IsMember({"json", "tsv", "md"}));
    app.fallthrough();

    auto* tables = app.add_subcommand("tables", "regenerate tables and compare with the golden data");
    std::string table_id = "all";
    tables->add_option("--id", table_id, "table id or 'all'");
    bool list = false;
    tables->add_flag("--list", list, "print the table ids");

    auto* replace_cmd = app.add_subcommand("replace", "stable replacement datum for (Sigma, u)");
    std::string type, u_text, u_file;
    replace_cmd->add_option("--type", type, "E12 ... W13")->required();
    auto* u_opt = replace_cmd->add_option("--u", u_text, "degree 10 form in x, y, z");
    replace_cmd->add_option("--u-file", u_file, "file holding the form")->excludes(u_opt);

    auto* git = app.add_subcommand("git", "GIT stability of w^2 = f10");
    std::string quintic_file, f10_text;
    auto* qf = git->add_option("quintic-file", quintic_file, "lines 'q4 = ...' .. 'q10 = ...', or 'f10 = ...'");
    git->add_option("--f10", f10_text, "degree 10 form in x, y, z")->excludes(qf);

    auto* sextic = app.add_subcommand("sextic", "plane sextic model of a Z/W type");
    std::string sextic_type, sextic_u;
    sextic->add_option("--type", sextic_type, "Z11, Z12, Z13, W12, W13")->required();
    bool sample = false;
    auto* so = sextic->add_flag("--sample", sample, "use the sample curve");
    sextic->add_option("--u", sextic_u, "degree 10 form in x, y, z")->excludes(so);

    auto* verify = app.add_subcommand("verify", "tables plus the randomised checks");
    std::uint64_t seed = 20240611;
    verify->add_option("--seed", seed, "seed for the randomised checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Format f = parse_format(format);
        if (*tables) {
            if (list) {
                for (const auto& id : table_ids()) std::cout << id << "\n";
                return 0;
            }
            std::vector<TableReport> reports;
            try {
                reports = compute_tables(table_id);
            } catch (const UnknownName& e) {
                throw UsageError(e.what());
            }
            std::cout << render(reports, f);
            bool ok = std::all_of(reports.begin(), reports.end(), [](const TableReport& r) { return r.ok(); });
            return ok ? 0 : 1;
        }
        if (*replace_cmd) {
            Sigma s;
            try {
                s = parse_sigma(type);
            } catch (const UnknownName& e) {
                throw UsageError(e.what());
            }
            std::string text = !u_file.empty() ? read_file(u_file) : u_text;
            if (trim(text).empty())
                throw UsageError("no u given");
            UElement u = UElement::from_polynomial(s, parse_or_usage(trim(text), xyz_vars()));
            GenericChecklist c = sigma_generic_necessary(u);
            if (!c.z5_nonzero)
                throw NotSigmaGeneric("coefficient of z^5 vanishes");
            if (!c.all())
                throw NotRegular("u is not regular: the coefficient of " + info(s).m1.str() + " vanishes");
            emit(to_json(replace(s, u)), f);
            return 0;
        }
        if (*git) {
            NormalForm nf = !f10_text.empty() ? normalize_or_usage(f10_text)
                                              : read_quintic(quintic_file.empty() ? "" : read_file(quintic_file));
            Json j = to_json(is_git_stable(nf));
            j["normalForm"] = to_json(nf);
            emit(j, f);
            return 0;
        }
        if (*sextic) {
            Sigma s;
            try {
                s = parse_sigma(sextic_type);
            } catch (const UnknownName& e) {
                throw UsageError(e.what());
            }
            if (!sample && sextic_u.empty())
                throw UsageError("give --sample or --u");
            SexticModel C = sample ? sample_sextic(s)
                                   : sextic_model(s, UElement::from_polynomial(s, parse_or_usage(sextic_u, xyz_vars())));
            Json j = to_json(C);
            j["lineIncidence"] = to_json(line_incidence(C));
            j["singularScan"] = to_json(singular_scan(C.form));
            j["shapeOk"] = sextic_shape_ok(C);
            emit(j, f);
            return 0;
        }
        if (*verify) {
            bool ok = true;
            for (const auto& r : verify_all(seed)) {
                std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << (r.detail.empty() ? "" : "  " + r.detail) << "\n";
                ok = ok && r.passed;
            }
            return ok ? 0 : 1;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
