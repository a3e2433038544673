// Acceptance gate. Runs every self-check suite once, then grades the ten
// release criteria against the named checks and prints one line per
// criterion. Exit code 0 only if all ten pass.
#include <chrono>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "elimkit/salmon.hpp"
#include "elimkit/verify.hpp"

using namespace elimkit;

namespace {

struct TimedSuite {
    SuiteResult result;
    double seconds = 0.0;
};

TimedSuite timed_run(const std::string& name) {
    auto start = std::chrono::steady_clock::now();
    TimedSuite out{run_suite(name, 0), 0.0};
    auto stop = std::chrono::steady_clock::now();
    out.seconds = std::chrono::duration<double>(stop - start).count();
    return out;
}

const CheckResult* find_check(const SuiteResult& suite, const std::string& name) {
    for (const auto& c : suite.checks)
        if (c.name == name) return &c;
    return nullptr;
}

bool passed(const SuiteResult& suite, const std::string& name, std::string& why) {
    const CheckResult* c = find_check(suite, name);
    if (!c) {
        why += " [missing check: " + name + "]";
        return false;
    }
    if (!c->pass) why += " [" + name + ": " + c->detail + "]";
    return c->pass;
}

int grade(int number, const std::string& label, bool ok, const std::string& why) {
    std::cout << "criterion " << number << ": " << (ok ? "PASS" : "FAIL") << "  " << label;
    if (!ok && !why.empty()) std::cout << " --" << why;
    std::cout << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main() {
    std::cout << "running acceptance suites (seed 0)...\n";
    std::map<std::string, TimedSuite> suites;
    for (const auto& name : suite_names()) {
        suites[name] = timed_run(name);
        std::cout << "  suite " << name << ": " << (suites[name].result.all_pass() ? "ok" : "FAIL")
                  << " (" << suites[name].seconds << " s)\n";
    }
    const SuiteResult& res = suites["resultant-axioms"].result;
    const SuiteResult& dis = suites["discriminant-identities"].result;
    const SuiteResult& red = suites["reduced-valuation"].result;
    const SuiteResult& spl = suites["salmon-plane"].result;
    const SuiteResult& s3d = suites["salmon-3d"].result;
    const SuiteResult& enu = suites["enumerative-consistency"].result;
    const SuiteResult& pol = suites["polarity"].result;

    std::cout << "tangent expansion sign in use: " << kSalmonExpansionSign << "\n";

    int failures = 0;
    {
        std::string why;
        bool ok = passed(res, "monomial systems normalize to 1", why) &&
                  passed(res, "Sylvester and Macaulay agree on binary systems", why);
        failures += grade(1, "resultant normalization and binary agreement", ok, why);
    }
    {
        std::string why;
        bool ok = passed(res, "coordinate weight law for the resultant", why) &&
                  passed(dis, "coordinate weight law for the discriminant", why);
        failures += grade(2, "scaling weight laws for resultant and discriminant", ok, why);
    }
    {
        std::string why;
        bool ok = passed(dis, "Euler-type factorization of the partials resultant", why);
        failures += grade(3, "factorization against the coordinate slice", ok, why);
    }
    {
        std::string why;
        bool ok = passed(red, "parametric valuation equals the order product", why) &&
                  passed(red, "value is identical across three seeds", why);
        double t = suites["reduced-valuation"].seconds;
        if (t >= 180.0) {
            ok = false;
            why += " [suite took " + std::to_string(t) + " s, budget 180]";
        }
        failures += grade(4, "reduced valuation and seed independence within budget", ok, why);
    }
    {
        std::string why;
        bool ok = passed(red, "curve case collapses to the stripped discriminant", why) &&
                  passed(red, "collapse sign depends only on (d, s)", why);
        failures += grade(5, "curve-case closed form", ok, why);
    }
    {
        std::string why;
        bool ok = passed(spl, "plane cubic expansion, 25 instances", why) &&
                  passed(spl, "plane quartic expansion, 25 instances", why) &&
                  passed(spl, "degenerate second slices raise the valuation", why);
        failures += grade(6, "plane tangent expansion with degenerate controls", ok, why);
    }
    {
        std::string why;
        bool ok = passed(s3d, "solid cubic expansion, 5 instances", why);
        double t = suites["salmon-3d"].seconds;
        if (t >= 900.0) {
            ok = false;
            why += " [suite took " + std::to_string(t) + " s, budget 900]";
        }
        failures += grade(7, "solid tangent expansion within budget", ok, why);
    }
    {
        std::string why;
        bool ok = true;
        for (const auto& c : enu.checks) ok = passed(enu, c.name, why) && ok;
        failures += grade(8, "enumerative table and cross-formula consistency", ok, why);
    }
    {
        std::string why;
        bool ok = passed(res, "planted common root forces a zero resultant", why) &&
                  passed(red, "planted extra common root forces zero", why) &&
                  passed(red, "planted common principal tangent forces zero", why) &&
                  passed(spl, "planted bitangent line has vanishing residual disc", why);
        failures += grade(9, "planted geometry drives the invariants to zero", ok, why);
    }
    {
        std::string why;
        bool ok = passed(pol, "polar membership matches line multiplicity", why);
        failures += grade(10, "polar conditions match intersection multiplicities", ok, why);
    }

    if (failures == 0)
        std::cout << "acceptance: all 10 criteria PASS\n";
    else
        std::cout << "acceptance: " << failures << " criteria FAILED\n";
    return failures == 0 ? 0 : 1;
}
