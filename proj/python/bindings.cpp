// Thin pybind11 layer. Structured results cross as JSON text; the Python side
// turns them into dicts.
#include "horikawa/catalog.hpp"
#include "horikawa/errors.hpp"
#include "horikawa/git.hpp"
#include "horikawa/json_io.hpp"
#include "horikawa/pipeline.hpp"
#include "horikawa/sextic.hpp"
#include "horikawa/tables.hpp"
#include "horikawa/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace horikawa;

namespace {

std::string sigma_info(const std::string& s)
{
    CatalogRecord r = catalog_record(parse_sigma(s));
    Json j = to_json(r);
    const auto& I = info(parse_sigma(s));
    j["m1"] = I.m1.str();
    j["m2"] = I.m2.str();
    return j.dump();
}

std::string replace_json(const std::string& s, const std::string& u_text)
{
    Sigma sig = parse_sigma(s);
    UElement u = UElement::from_polynomial(sig, Polynomial::parse(u_text, xyz_vars()));
    if (!sigma_generic_necessary(u).z5_nonzero)
        throw NotSigmaGeneric("coefficient of z^5 vanishes");
    return to_json(replace(sig, u)).dump();
}

std::string git_json(const std::string& f10)
{
    NormalForm nf = normalize_f10(Polynomial::parse(f10, xyz_vars()));
    Json j = to_json(is_git_stable(nf));
    j["normalForm"] = to_json(nf);
    return j.dump();
}

std::string git_forms_json(const std::string& q4, const std::string& q6, const std::string& q8, const std::string& q10)
{
    auto p = [](const std::string& t) { return Polynomial::parse(t, xy_vars()); };
    return to_json(is_git_stable(make_normal_form(p(q4), p(q6), p(q8), p(q10)))).dump();
}

std::string sextic_json(const std::string& s, const std::string& u_text)
{
    Sigma sig = parse_sigma(s);
    SexticModel C = u_text.empty()
                        ? sample_sextic(sig)
                        : sextic_model(sig, UElement::from_polynomial(sig, Polynomial::parse(u_text, xyz_vars())));
    Json j = to_json(C);
    j["lineIncidence"] = to_json(line_incidence(C));
    j["singularScan"] = to_json(singular_scan(C.form));
    j["shapeOk"] = sextic_shape_ok(C);
    return j.dump();
}

std::string table_json(const std::string& id) { return report_json(compute_table(id)).dump(); }

std::string classify_json(const std::string& f)
{
    return to_json(classify_local(Polynomial::parse(f, {"y", "z"}))).dump();
}

std::string verify_json(std::uint64_t seed)
{
    Json out = Json::array();
    for (const auto& r : verify_all(seed)) out.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    return out.dump();
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "exact stable replacement data for Horikawa surfaces";

    static py::exception<Error> exc(m, "HorikawaError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            exc(e.what());
        }
    });

    m.def("sigma_names", [] {
        std::vector<std::string> out;
        for (Sigma s : all_sigmas) out.push_back(name(s));
        return out;
    });
    m.def("sigma_info_json", &sigma_info, py::arg("sigma"));
    m.def("weight", [](const std::string& s, int a, int b, int c) { return weight(parse_sigma(s), Mon{a, b, c}); },
          py::arg("sigma"), py::arg("a"), py::arg("b"), py::arg("c"));
    m.def("milnor_number", [](const std::string& f) { return milnor_number(Polynomial::parse(f, {"y", "z"})); },
          py::arg("f"), "Milnor number at the origin of a germ in y, z");
    m.def("classify_local_json", &classify_json, py::arg("f"));
    m.def("k_squared", [](const std::string& s) { return to_string(k_squared_closed_form(parse_sigma(s))); },
          py::arg("sigma"));
    m.def("replace_json", &replace_json, py::arg("sigma"), py::arg("u"));
    m.def("git_json", &git_json, py::arg("f10"));
    m.def("git_forms_json", &git_forms_json, py::arg("q4"), py::arg("q6"), py::arg("q8"), py::arg("q10"));
    m.def("sextic_json", &sextic_json, py::arg("sigma"), py::arg("u") = "");
    m.def("table_ids", &table_ids);
    m.def("table_json", &table_json, py::arg("id"));
    m.def("verify_json", &verify_json, py::arg("seed") = 20240611);
}
