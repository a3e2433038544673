// Python bindings. Values cross the boundary as strings ("p/q") and plain
// dicts so the Python side never has to know about GMP types.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "elimkit/discriminant.hpp"
#include "elimkit/enumerative.hpp"
#include "elimkit/reduced.hpp"
#include "elimkit/resultant.hpp"
#include "elimkit/salmon.hpp"
#include "elimkit/verify.hpp"

namespace py = pybind11;
using namespace elimkit;

namespace {

Rat rat_in(const std::string& text) {
    try {
        Rat r(text);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw PreconditionError("cannot read '" + text + "' as a rational number");
    }
}

std::string rat_out(const Rat& r) { return r.get_str(); }

LinearPoint point_in(const std::vector<std::string>& coords) {
    LinearPoint p;
    for (const auto& c : coords) p.push_back(rat_in(c));
    return p;
}

int form_degree(const Polynomial& f, const char* op) {
    auto d = f.degree();
    if (!d) throw PreconditionError(std::string(op) + ": the zero form has no degree");
    return *d;
}

std::string py_resultant(const std::vector<std::string>& forms, int nvars,
                         const std::vector<int>& degrees) {
    FormSystem sys;
    for (const auto& text : forms) sys.forms.push_back(parse_polynomial(text, nvars));
    if (!degrees.empty())
        sys.degrees = degrees;
    else
        for (const auto& f : sys.forms) sys.degrees.push_back(form_degree(f, "resultant"));
    return rat_out(macaulay_resultant(sys));
}

py::dict py_discriminant(const std::string& form, int nvars) {
    DiscriminantResult dr = discriminant(parse_polynomial(form, nvars));
    py::dict out;
    out["discriminant"] = rat_out(dr.value);
    out["resultant_of_partials"] = rat_out(dr.res_partials);
    out["degree"] = dr.degree_d;
    out["smooth"] = dr.value != 0;
    return out;
}

py::dict reduced_out(const ReducedValue& rv) {
    py::dict out;
    out["value"] = rat_out(rv.value);
    out["exponent"] = rv.exponent;
    out["lower_terms_zero"] = rv.lower_terms_zero;
    if (rv.valuation)
        out["valuation"] = *rv.valuation;
    else
        out["valuation"] = py::none();
    if (rv.root) out["root"] = rat_out(*rv.root);
    return out;
}

py::dict py_reduced_resultant(const std::vector<std::string>& forms, int nvars,
                              const std::vector<int>& degrees, const std::vector<int>& orders,
                              unsigned long seed) {
    TruncatedSystem sys;
    for (const auto& text : forms) sys.truncations.push_back(parse_polynomial(text, nvars));
    if (degrees.size() != forms.size() || orders.size() != forms.size())
        throw PreconditionError("reduced_resultant: one degree and one order per form");
    for (size_t i = 0; i < forms.size(); ++i) sys.specs.push_back({degrees[i], orders[i], 0});
    return reduced_out(reduced_resultant(sys, seed));
}

py::dict py_reduced_discriminant(const std::string& form, int nvars, int degree, int order,
                                 unsigned long seed) {
    Polynomial h = parse_polynomial(form, nvars);
    int d = degree > 0 ? degree : form_degree(h, "reduced_discriminant");
    return reduced_out(reduced_discriminant(h, {d, order, 0}, seed));
}

py::dict py_salmon_check(const std::string& form, int nvars,
                         const std::vector<std::string>& point, unsigned long seed) {
    Polynomial f = parse_polynomial(form, nvars);
    NormalFormHypersurface nf = normal_form_at_point(f, point_in(point));
    SalmonReport rep = salmon_expansion(nf, seed);
    py::dict out;
    out["checked"] = rep.checked;
    out["degenerate_reason"] = rep.degenerate_reason;
    if (rep.valuation_in_T >= 0)
        out["valuation"] = rep.valuation_in_T;
    else
        out["valuation"] = py::none();
    out["t2_coefficient"] = rat_out(rep.t2_coefficient);
    out["identity_holds"] = rep.identity_holds;
    out["sign"] = kSalmonExpansionSign;
    return out;
}

py::list py_enumerative_table(int max_degree) {
    EnumerativeTable tab = enumerative_table(max_degree);
    py::list rows;
    for (const auto& row : tab.rows) {
        py::dict r;
        r["quantity"] = row.quantity;
        r["n"] = row.n;
        r["d"] = row.d;
        r["value"] = row.value;
        r["anchor"] = row.anchor;
        r["extrapolated"] = row.extrapolated;
        rows.append(r);
    }
    return rows;
}

std::string py_project(const std::string& f_text, const std::string& g_text, int nvars,
                       const std::vector<std::string>& point) {
    Polynomial f = parse_polynomial(f_text, nvars);
    Polynomial g = parse_polynomial(g_text, nvars);
    return to_string(project_complete_intersection(f, g, point_in(point)));
}

py::dict py_run_suite(const std::string& name, unsigned long seed) {
    SuiteResult res = run_suite(name, seed);
    py::dict out;
    out["suite"] = res.suite;
    out["pass"] = res.all_pass();
    py::list checks;
    for (const auto& c : res.checks) {
        py::dict cd;
        cd["name"] = c.name;
        cd["pass"] = c.pass;
        cd["detail"] = c.detail;
        checks.append(cd);
    }
    out["checks"] = checks;
    return out;
}

std::string py_roundtrip(const std::string& text, int nvars) {
    return to_string(parse_polynomial(text, nvars));
}

}  // namespace

PYBIND11_MODULE(_elimkit, m) {
    m.doc() = "exact elimination toolkit: resultants, discriminants, reduced variants";

    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<ComputationError>(m, "ComputationError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def("resultant", &py_resultant, py::arg("forms"), py::arg("nvars"),
          py::arg("degrees") = std::vector<int>{},
          "Resultant of nvars forms in nvars variables, as a rational string.");
    m.def("discriminant", &py_discriminant, py::arg("form"), py::arg("nvars"),
          "Discriminant of one form, with the partials resultant it came from.");
    m.def("reduced_resultant", &py_reduced_resultant, py::arg("forms"), py::arg("nvars"),
          py::arg("degrees"), py::arg("orders"), py::arg("seed") = 0,
          "Reduced resultant of truncated forms vanishing at the distinguished point.");
    m.def("reduced_discriminant", &py_reduced_discriminant, py::arg("form"), py::arg("nvars"),
          py::arg("degree") = 0, py::arg("order") = 2, py::arg("seed") = 0,
          "Reduced discriminant of a truncated form.");
    m.def("salmon_check", &py_salmon_check, py::arg("form"), py::arg("nvars"), py::arg("point"),
          py::arg("seed") = 0,
          "Tangent expansion of the discriminant at a smooth point of the form.");
    m.def("enumerative_table", &py_enumerative_table, py::arg("max_degree"),
          "Rows of the enumerative degree table up to the given degree.");
    m.def("project", &py_project, py::arg("f"), py::arg("g"), py::arg("nvars"), py::arg("point"),
          "Equation of the projection of the intersection of two forms away from a point.");
    m.def("run_suite", &py_run_suite, py::arg("name"), py::arg("seed") = 0,
          "Run one of the named self-check suites.");
    m.def("suite_names", [] { return suite_names(); }, "Names of the self-check suites.");
    m.def("parse_roundtrip", &py_roundtrip, py::arg("text"), py::arg("nvars"),
          "Parse a polynomial and print it back in canonical form.");
}
