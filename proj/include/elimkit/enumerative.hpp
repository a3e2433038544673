#pragma once

#include <string>
#include <utility>
#include <vector>

#include "elimkit/rational.hpp"

namespace elimkit {

// Degree of the dual hypersurface: d(d-1)^{n-1}.
long dual_degree(int n, int d);

// Degree of the surface cutting the tangency points of bitangent planes:
// (d-2)(d^3 - d^2 + d - 12).
long node_couple_degree(int d);

// Degree of the double curve of the dual surface:
// d(d-1)(d-2)(d^3 - d^2 + d - 12) / 2.
long double_curve_degree(int d);

// Bitangent hyperplanes through a general point:
// d(d-1)^{n-2}(d-2)(d * sum_{i<n}(d-1)^i - 3(n+1)) / 2, with the geometric
// series kept symbolic so d = 2 degenerates to 0 instead of 0/0.
long bitangent_hyperplanes(int n, int d);

// Degree of the Hessian hypersurface: (n+1)(d-2).
long hessian_contact_degree(int n, int d);

// Degree of the divisor cut on the surface after removing the pencil
// contribution: lambda + mu(d-2).
long pencil_divisibility_degree(long lambda, long mu, int d);

// Degree in q of the residual factor R of Res(l, f_q, g_q, h_q) =
// l(q)^{l1 l2 l3} R, for forms of degrees l_i in the moving point and m_i
// in q: l2 l3 m1 + l1 l3 m2 + l1 l2 m3 - l1 l2 l3.
long salmon_elim_degree(long l1, long m1, long l2, long m2, long l3, long m3);

// Degree of the flecnodal curve: 11d - 24 (the polar triple
// (1, d-1), (2, d-2), (3, d-3) fed through salmon_elim_degree).
long flecnodal_degree(int d);

// Bitangent lines through a general point: d(d-1)(d-2)(d-3) / 2.
long bitangent_lines_count(int d);

// Bidegrees of the bitangency form in the two line points:
// ((d-2)(d-3), (d+2)(d-3)).
std::pair<long, long> bitg_line_form_degrees(int d);

struct EnumerativeRow {
    std::string quantity;
    int n = 0;  // 0 when the formula has no ambient-dimension parameter
    int d = 0;
    long value = 0;
    std::string anchor;
    bool extrapolated = false;  // outside the formula's validity range
};

struct EnumerativeTable {
    int max_degree = 0;
    std::vector<EnumerativeRow> rows;
};

// Every formula above for 2 <= d <= max_degree (n in {2, 3} where it
// applies). Out-of-range values are flagged, never suppressed, and internal
// cross-checks (dual/double-curve consistency, the pencil identity) are
// asserted during construction.
EnumerativeTable enumerative_table(int max_degree);

}  // namespace elimkit
