#include "elimkit/enumerative.hpp"

namespace elimkit {

namespace {

long lpow(long b, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

long halved(long product) {
    if (product % 2 != 0) throw ComputationError("count formula produced an odd product");
    return product / 2;
}

void need(bool ok, const char* what) {
    if (!ok) throw PreconditionError(what);
}

}  // namespace

long dual_degree(int n, int d) {
    need(n >= 2 && d >= 2, "dual degree needs n >= 2 and d >= 2");
    return d * lpow(d - 1, n - 1);
}

long node_couple_degree(int d) {
    need(d >= 2, "node-couple degree needs d >= 2");
    long dl = d;
    return (dl - 2) * (dl * dl * dl - dl * dl + dl - 12);
}

long double_curve_degree(int d) {
    need(d >= 2, "double-curve degree needs d >= 2");
    long dl = d;
    return halved(dl * (dl - 1) * (dl - 2) * (dl * dl * dl - dl * dl + dl - 12));
}

long bitangent_hyperplanes(int n, int d) {
    need(n >= 2 && d >= 2, "bitangent hyperplanes needs n >= 2 and d >= 2");
    long series = 0;  // ((d-1)^n - 1)/(d-2) without the division
    for (int i = 0; i < n; ++i) series += lpow(d - 1, i);
    long dl = d;
    return halved(dl * lpow(d - 1, n - 2) * (dl - 2) * (dl * series - 3 * (n + 1)));
}

long hessian_contact_degree(int n, int d) {
    need(n >= 2 && d >= 2, "Hessian degree needs n >= 2 and d >= 2");
    return static_cast<long>(n + 1) * (d - 2);
}

long pencil_divisibility_degree(long lambda, long mu, int d) {
    need(lambda >= 0 && mu >= 0 && d >= 2, "pencil degree needs non-negative inputs and d >= 2");
    return lambda + mu * (d - 2);
}

long salmon_elim_degree(long l1, long m1, long l2, long m2, long l3, long m3) {
    need(l1 >= 0 && m1 >= 0 && l2 >= 0 && m2 >= 0 && l3 >= 0 && m3 >= 0,
         "elimination degree needs non-negative inputs");
    return l2 * l3 * m1 + l1 * l3 * m2 + l1 * l2 * m3 - l1 * l2 * l3;
}

long flecnodal_degree(int d) {
    need(d >= 2, "flecnodal degree needs d >= 2");
    return 11L * d - 24;
}

long bitangent_lines_count(int d) {
    need(d >= 2, "bitangent line count needs d >= 2");
    long dl = d;
    return halved(dl * (dl - 1) * (dl - 2) * (dl - 3));
}

std::pair<long, long> bitg_line_form_degrees(int d) {
    need(d >= 2, "bitangency form degrees need d >= 2");
    long dl = d;
    return {(dl - 2) * (dl - 3), (dl + 2) * (dl - 3)};
}

EnumerativeTable enumerative_table(int max_degree) {
    need(max_degree >= 2, "table needs max degree >= 2");
    EnumerativeTable table;
    table.max_degree = max_degree;
    auto push = [&](const std::string& quantity, int n, int d, long value, const char* anchor,
                    bool extrapolated) {
        if (!extrapolated && value < 0)
            throw ComputationError("negative count inside a validity range");
        table.rows.push_back({quantity, n, d, value, anchor, extrapolated});
    };
    for (int d = 2; d <= max_degree; ++d) {
        for (int n = 2; n <= 3; ++n) {
            push("dual_degree", n, d, dual_degree(n, d), "degree of the dual hypersurface",
                 false);
            push("bitangent_hyperplanes", n, d, bitangent_hyperplanes(n, d),
                 "bitangent hyperplanes through a general point", false);
            push("hessian_contact_degree", n, d, hessian_contact_degree(n, d),
                 "degree of the Hessian hypersurface", false);
        }
        push("node_couple_degree", 3, d, node_couple_degree(d),
             "degree of the tangency locus of bitangent planes", false);
        push("double_curve_degree", 3, d, double_curve_degree(d),
             "degree of the double curve of the dual surface", false);
        push("flecnodal_degree", 3, d, flecnodal_degree(d),
             "degree of the flecnodal curve", d < 3);
        push("bitangent_lines_count", 3, d, bitangent_lines_count(d),
             "bitangent lines through a general point", false);
        auto bidegrees = bitg_line_form_degrees(d);
        push("bitangent_form_degree_first", 3, d, bidegrees.first,
             "degree of the bitangency form in the tangency point", d < 3);
        push("bitangent_form_degree_second", 3, d, bidegrees.second,
             "degree of the bitangency form in the second point", d < 3);

        // Cross-checks tying independent derivations together.
        if (bitangent_hyperplanes(3, d) != double_curve_degree(d))
            throw ComputationError("dual double-curve consistency failed");
        long dl = d;
        if (d >= 3 && 2 * bitangent_hyperplanes(2, d) != dl * (dl - 2) * (dl - 3) * (dl + 3))
            throw ComputationError("plane bitangent count consistency failed");
        if (d >= 3 &&
            node_couple_degree(d) !=
                pencil_divisibility_degree((dl - 2) * (dl * dl - 6),
                                           dl * dl * dl - 2 * dl * dl + dl - 6, d))
            throw ComputationError("node-couple pencil consistency failed");
        if (d >= 3 &&
            flecnodal_degree(d) != salmon_elim_degree(1, d - 1, 2, d - 2, 3, d - 3))
            throw ComputationError("flecnodal elimination consistency failed");
    }
    return table;
}

}  // namespace elimkit
