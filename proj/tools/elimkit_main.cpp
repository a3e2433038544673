// Command line front end. Every operation prints a single JSON document on
// stdout (keys sorted, so reruns with the same arguments and seed are byte
// identical) or, with --markdown, a small table. Exit codes: 0 success,
// 1 a computation could not be completed, 2 bad usage or unparsable input.
#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "elimkit/discriminant.hpp"
#include "elimkit/enumerative.hpp"
#include "elimkit/reduced.hpp"
#include "elimkit/resultant.hpp"
#include "elimkit/salmon.hpp"
#include "elimkit/verify.hpp"

using json = nlohmann::json;
using namespace elimkit;

namespace {

std::string rat_str(const Rat& r) { return r.get_str(); }

Rat rat_from_string(const std::string& text) {
    try {
        Rat r(text);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw PreconditionError("cannot read '" + text + "' as a rational number");
    }
}

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(csv);
    while (std::getline(is, item, ',')) out.push_back(item);
    return out;
}

LinearPoint parse_point(const std::string& csv, int expected) {
    LinearPoint p;
    for (const auto& tok : split_csv(csv)) p.push_back(rat_from_string(tok));
    if (static_cast<int>(p.size()) != expected) {
        std::ostringstream os;
        os << "expected " << expected << " point coordinates, got " << p.size();
        throw PreconditionError(os.str());
    }
    return p;
}

std::vector<int> parse_int_list(const std::string& csv, const char* what) {
    std::vector<int> out;
    for (const auto& tok : split_csv(csv)) {
        try {
            size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw PreconditionError(std::string("cannot read '") + tok + "' as a " + what);
        }
    }
    return out;
}

int checked_degree(const Polynomial& f, const char* op) {
    auto d = f.degree();
    if (!d) throw PreconditionError(std::string(op) + ": the zero form has no degree");
    return *d;
}

void print_markdown_object(const json& j) {
    std::cout << "| field | value |\n|---|---|\n";
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::cout << "| " << it.key() << " | ";
        if (it.value().is_string())
            std::cout << it.value().get<std::string>();
        else
            std::cout << it.value().dump();
        std::cout << " |\n";
    }
}

void emit(const json& j, bool markdown) {
    if (markdown)
        print_markdown_object(j);
    else
        std::cout << j.dump(2) << "\n";
}

json reduced_value_json(const ReducedValue& rv) {
    json j;
    j["value"] = rat_str(rv.value);
    j["exponent"] = rv.exponent;
    j["lower_terms_zero"] = rv.lower_terms_zero;
    if (rv.valuation)
        j["valuation"] = *rv.valuation;
    else
        j["valuation"] = nullptr;
    if (rv.root) j["root"] = rat_str(*rv.root);
    return j;
}

struct Options {
    int nvars = 0;
    unsigned long seed = 0;
    bool markdown = false;
    std::vector<std::string> forms;
    std::string degrees_csv;
    std::string orders_csv;
    std::string point_csv;
    int order = 0;
    int degree = 0;
    int max_degree = 2;
    std::string suite;
};

int run_res(const Options& o) {
    if (static_cast<int>(o.forms.size()) != o.nvars) {
        std::ostringstream os;
        os << "res: expected " << o.nvars << " forms (one per variable), got " << o.forms.size();
        throw PreconditionError(os.str());
    }
    FormSystem sys;
    for (const auto& text : o.forms) sys.forms.push_back(parse_polynomial(text, o.nvars));
    if (!o.degrees_csv.empty()) {
        sys.degrees = parse_int_list(o.degrees_csv, "degree");
    } else {
        for (const auto& f : sys.forms) sys.degrees.push_back(checked_degree(f, "res"));
    }
    Rat r = macaulay_resultant(sys);
    json j;
    j["schema"] = "elimkit/1";
    j["op"] = "res";
    j["nvars"] = o.nvars;
    j["degrees"] = sys.degrees;
    j["resultant"] = rat_str(r);
    emit(j, o.markdown);
    return 0;
}

int run_disc(const Options& o) {
    Polynomial f = parse_polynomial(o.forms.at(0), o.nvars);
    DiscriminantResult dr = discriminant(f);
    json j;
    j["schema"] = "elimkit/1";
    j["op"] = "disc";
    j["nvars"] = o.nvars;
    j["degree"] = dr.degree_d;
    j["normalization_exponent"] = rat_str(Rat(dr.divisor_constant));
    j["resultant_of_partials"] = rat_str(dr.res_partials);
    j["discriminant"] = rat_str(dr.value);
    j["smooth"] = dr.value != 0;
    emit(j, o.markdown);
    return 0;
}

int run_rres(const Options& o) {
    if (static_cast<int>(o.forms.size()) != o.nvars) {
        std::ostringstream os;
        os << "rres: expected " << o.nvars << " truncations, got " << o.forms.size();
        throw PreconditionError(os.str());
    }
    TruncatedSystem sys;
    for (const auto& text : o.forms) sys.truncations.push_back(parse_polynomial(text, o.nvars));
    std::vector<int> degs;
    if (!o.degrees_csv.empty())
        degs = parse_int_list(o.degrees_csv, "degree");
    else
        for (const auto& h : sys.truncations) degs.push_back(checked_degree(h, "rres"));
    std::vector<int> ords;
    if (!o.orders_csv.empty()) {
        ords = parse_int_list(o.orders_csv, "order");
    } else {
        for (size_t i = 0; i < sys.truncations.size(); ++i) {
            auto dx = sys.truncations[i].degree_in(0);
            ords.push_back(degs.at(i) - (dx ? *dx : 0));
        }
    }
    if (degs.size() != sys.truncations.size() || ords.size() != sys.truncations.size())
        throw PreconditionError("rres: --degrees and --orders must list one value per form");
    for (size_t i = 0; i < sys.truncations.size(); ++i)
        sys.specs.push_back({degs[i], ords[i], 0});
    ReducedValue rv = reduced_resultant(sys, o.seed);
    json j = reduced_value_json(rv);
    j["schema"] = "elimkit/1";
    j["op"] = "rres";
    j["nvars"] = o.nvars;
    j["degrees"] = degs;
    j["orders"] = ords;
    j["seed"] = o.seed;
    emit(j, o.markdown);
    return 0;
}

int run_rdisc(const Options& o) {
    Polynomial h = parse_polynomial(o.forms.at(0), o.nvars);
    int d = o.degree > 0 ? o.degree : checked_degree(h, "rdisc");
    ReducedValue rv = reduced_discriminant(h, {d, o.order, 0}, o.seed);
    json j = reduced_value_json(rv);
    j["schema"] = "elimkit/1";
    j["op"] = "rdisc";
    j["nvars"] = o.nvars;
    j["degree"] = d;
    j["order"] = o.order;
    j["seed"] = o.seed;
    emit(j, o.markdown);
    return 0;
}

int run_salmon(const Options& o) {
    Polynomial f = parse_polynomial(o.forms.at(0), o.nvars);
    LinearPoint p = parse_point(o.point_csv, o.nvars);
    NormalFormHypersurface nf = normal_form_at_point(f, p);
    SalmonReport rep = salmon_expansion(nf, o.seed);
    json j;
    j["schema"] = "elimkit/1";
    j["op"] = "salmon-check";
    j["nvars"] = o.nvars;
    j["degree"] = nf.d;
    j["seed"] = o.seed;
    json pt = json::array();
    for (const auto& c : p) pt.push_back(rat_str(c));
    j["point"] = pt;
    j["tangent_scale"] = rat_str(nf.tangent_scale);
    j["checked"] = rep.checked;
    if (!rep.degenerate_reason.empty()) j["degenerate_reason"] = rep.degenerate_reason;
    if (rep.valuation_in_T >= 0)
        j["valuation"] = rep.valuation_in_T;
    else
        j["valuation"] = nullptr;
    j["t2_coefficient"] = rat_str(rep.t2_coefficient);
    j["sign"] = kSalmonExpansionSign;
    if (rep.checked) {
        j["identity_holds"] = rep.identity_holds;
        j["disc_second_slice"] = rat_str(rep.disc_f2);
        j["disc_restricted_second_slice"] = rat_str(rep.disc_f2bar);
        j["reduced_disc"] = rat_str(rep.rdisc_h);
    }
    if (nf.n == 2) {
        try {
            PlaneSalmonCoefficients pc = plane_salmon_coefficients(nf, o.seed);
            json pj;
            pj["A"] = rat_str(pc.A);
            pj["B"] = rat_str(pc.B);
            pj["C"] = rat_str(pc.C);
            pj["T"] = rat_str(pc.T);
            pj["pattern_check"] = pc.pattern_check;
            pj["lowest_product"] = rat_str(pc.lowest_product);
            j["plane"] = pj;
        } catch (const Error&) {
            // degenerate plane data; the main report already says why
        }
    }
    emit(j, o.markdown);
    return 0;
}

std::string table_key(const EnumerativeRow& row, const std::map<std::string, int>& n_count) {
    if (row.n > 0 && n_count.at(row.quantity) > 1)
        return row.quantity + "_n" + std::to_string(row.n);
    return row.quantity;
}

int run_enum(const Options& o) {
    EnumerativeTable tab = enumerative_table(o.max_degree);
    std::map<std::string, int> n_count;
    {
        std::map<std::string, std::map<int, bool>> ns;
        for (const auto& row : tab.rows) ns[row.quantity][row.n] = true;
        for (const auto& [q, m] : ns) n_count[q] = static_cast<int>(m.size());
    }
    if (o.markdown) {
        std::cout << "| quantity | n | d | value | note |\n|---|---|---|---|---|\n";
        for (const auto& row : tab.rows) {
            std::cout << "| " << row.quantity << " | " << row.n << " | " << row.d << " | "
                      << row.value << " | " << (row.extrapolated ? "extrapolated" : "") << " |\n";
        }
        return 0;
    }
    json table = json::object();
    json extrapolated = json::object();
    for (const auto& row : tab.rows) {
        std::string key = table_key(row, n_count);
        table[key][std::to_string(row.d)] = row.value;
        if (row.extrapolated) extrapolated[key].push_back(std::to_string(row.d));
    }
    json j;
    j["schema"] = "elimkit/1";
    j["op"] = "enum";
    j["max_degree"] = o.max_degree;
    j["table"] = table;
    if (!extrapolated.empty()) j["extrapolated"] = extrapolated;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_project(const Options& o) {
    Polynomial f = parse_polynomial(o.forms.at(0), o.nvars);
    Polynomial g = parse_polynomial(o.forms.at(1), o.nvars);
    LinearPoint p0 = parse_point(o.point_csv, o.nvars);
    Polynomial image = project_complete_intersection(f, g, p0);
    json j;
    j["schema"] = "elimkit/1";
    j["op"] = "project";
    j["nvars"] = o.nvars;
    auto d = image.degree();
    if (d)
        j["image_degree"] = *d;
    else
        j["image_degree"] = nullptr;
    j["image"] = to_string(image);
    emit(j, o.markdown);
    return 0;
}

int run_verify(const Options& o) {
    std::vector<std::string> names;
    if (o.suite == "all")
        names = suite_names();
    else
        names.push_back(o.suite);
    bool all_pass = true;
    json suites = json::array();
    for (const auto& name : names) {
        SuiteResult res = run_suite(name, o.seed);
        bool pass = res.all_pass();
        all_pass = all_pass && pass;
        if (o.markdown) {
            for (const auto& c : res.checks)
                std::cout << (c.pass ? "PASS" : "FAIL") << "  " << res.suite << " :: " << c.name
                          << "  (" << c.detail << ")\n";
        } else {
            json sj;
            sj["suite"] = res.suite;
            sj["pass"] = pass;
            json checks = json::array();
            for (const auto& c : res.checks)
                checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
            sj["checks"] = checks;
            suites.push_back(sj);
        }
    }
    if (!o.markdown) {
        json j;
        j["schema"] = "elimkit/1";
        j["op"] = "verify";
        j["seed"] = o.seed;
        j["pass"] = all_pass;
        j["suites"] = suites;
        std::cout << j.dump(2) << "\n";
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact elimination toolkit: resultants, discriminants, reduced variants"};
    app.require_subcommand(1);
    Options o;

    auto* res = app.add_subcommand("res", "resultant of nvars forms in nvars variables");
    res->add_option("--nvars", o.nvars, "number of variables (equals the number of forms)")
        ->required();
    res->add_option("--degrees", o.degrees_csv, "declared degrees d1,d2,... (default: actual)");
    res->add_option("forms", o.forms, "the forms, e.g. \"x0^2+3*x1^2\"")->required()->expected(-1);
    res->add_flag("--markdown", o.markdown, "print a table instead of JSON");

    auto* disc = app.add_subcommand("disc", "discriminant of one form");
    disc->add_option("--nvars", o.nvars, "number of variables")->required();
    disc->add_option("form", o.forms, "the form")->required()->expected(1);
    disc->add_flag("--markdown", o.markdown, "print a table instead of JSON");

    auto* rres = app.add_subcommand("rres", "reduced resultant of truncated forms");
    rres->add_option("--nvars", o.nvars, "number of variables (equals the number of forms)")
        ->required();
    rres->add_option("--degrees", o.degrees_csv, "degrees d1,d2,... (default: actual)");
    rres->add_option("--orders", o.orders_csv,
                     "vanishing orders s1,s2,... at the distinguished point "
                     "(default: inferred from the x0 degrees)");
    rres->add_option("--seed", o.seed, "seed for the deformation draws (default 0)");
    rres->add_option("forms", o.forms, "the truncated forms")->required()->expected(-1);
    rres->add_flag("--markdown", o.markdown, "print a table instead of JSON");

    auto* rdisc = app.add_subcommand("rdisc", "reduced discriminant of a truncated form");
    rdisc->add_option("--nvars", o.nvars, "number of variables")->required();
    rdisc->add_option("--degree", o.degree, "degree d (default: actual)");
    rdisc->add_option("--order", o.order, "vanishing order s at the distinguished point")
        ->required();
    rdisc->add_option("--seed", o.seed, "seed for the deformation draws (default 0)");
    rdisc->add_option("form", o.forms, "the truncated form")->required()->expected(1);
    rdisc->add_flag("--markdown", o.markdown, "print a table instead of JSON");

    auto* sal = app.add_subcommand("salmon-check",
                                   "tangent expansion of the discriminant at a smooth point");
    sal->add_option("--nvars", o.nvars, "number of variables")->required();
    sal->add_option("--point", o.point_csv, "smooth point p0,p1,... on the hypersurface")
        ->required();
    sal->add_option("--seed", o.seed, "seed for the deformation draws (default 0)");
    sal->add_option("form", o.forms, "the form")->required()->expected(1);
    sal->add_flag("--markdown", o.markdown, "print a table instead of JSON");

    auto* en = app.add_subcommand("enum", "table of enumerative degree formulas");
    en->add_option("--max-degree", o.max_degree, "largest degree d to tabulate")->required();
    en->add_flag("--markdown", o.markdown, "print a table instead of JSON");

    auto* proj = app.add_subcommand("project", "projection of an intersection of two forms");
    proj->add_option("--nvars", o.nvars, "number of variables")->required();
    proj->add_option("--point", o.point_csv, "center of projection p0,p1,...")->required();
    proj->add_option("forms", o.forms, "the two forms")->required()->expected(2);
    proj->add_flag("--markdown", o.markdown, "print a table instead of JSON");

    auto* ver = app.add_subcommand("verify", "run a self-check suite");
    {
        std::ostringstream names;
        for (const auto& n : suite_names()) names << n << " ";
        ver->add_option("suite", o.suite, "suite name (" + names.str() + ") or 'all'")->required();
    }
    ver->add_option("--seed", o.seed, "seed for randomized checks (default 0)");
    ver->add_flag("--markdown", o.markdown, "print one line per check instead of JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(res)) return run_res(o);
        if (app.got_subcommand(disc)) return run_disc(o);
        if (app.got_subcommand(rres)) return run_rres(o);
        if (app.got_subcommand(rdisc)) return run_rdisc(o);
        if (app.got_subcommand(sal)) return run_salmon(o);
        if (app.got_subcommand(en)) return run_enum(o);
        if (app.got_subcommand(proj)) return run_project(o);
        if (app.got_subcommand(ver)) return run_verify(o);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ComputationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
