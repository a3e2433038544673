#include "elimkit/linalg.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>

namespace elimkit {

namespace {

// Bareiss fraction-free elimination on an integer matrix (consumed).
Int bareiss_det(std::vector<std::vector<Int>>& m) {
    int n = static_cast<int>(m.size());
    if (n == 0) return Int(1);
    Int prev(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return Int(0);
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = std::move(t);
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

}  // namespace

Rat det(const MatQ& m) {
    if (m.rows() != m.cols()) throw PreconditionError("determinant of a non-square matrix");
    int n = m.rows();
    if (n == 0) return Rat(1);

    // Scale rows to integers, tracking the product of scalings.
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    Rat scale(1);
    for (int i = 0; i < n; ++i) {
        Int l(1);
        for (int j = 0; j < n; ++j) {
            const Rat& v = m.at(i, j);
            if (v != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
        }
        for (int j = 0; j < n; ++j) {
            Rat v = m.at(i, j) * Rat(l);
            a[i][j] = v.get_num();  // denominator is 1 by construction
        }
        scale *= Rat(l);
    }

    // Structural peel: expand along any row or column with exactly one
    // nonzero entry; each step multiplies by the entry and a cofactor sign.
    std::vector<int> rows(n), cols(n);
    for (int i = 0; i < n; ++i) rows[i] = cols[i] = i;
    Int peeled(1);
    int sign = 1;
    bool progress = true;
    while (progress && !rows.empty()) {
        progress = false;
        int k = static_cast<int>(rows.size());
        for (int ri = 0; ri < k; ++ri) {
            int nz = 0, cj = -1;
            for (int j = 0; j < k; ++j)
                if (a[rows[ri]][cols[j]] != 0) {
                    ++nz;
                    cj = j;
                    if (nz > 1) break;
                }
            if (nz == 0) return Rat(0);
            if (nz == 1) {
                peeled *= a[rows[ri]][cols[cj]];
                if ((ri + cj) % 2 != 0) sign = -sign;
                rows.erase(rows.begin() + ri);
                cols.erase(cols.begin() + cj);
                progress = true;
                break;
            }
        }
        if (progress || rows.empty()) continue;
        for (int cj = 0; cj < k; ++cj) {
            int nz = 0, ri = -1;
            for (int i = 0; i < k; ++i)
                if (a[rows[i]][cols[cj]] != 0) {
                    ++nz;
                    ri = i;
                    if (nz > 1) break;
                }
            if (nz == 0) return Rat(0);
            if (nz == 1) {
                peeled *= a[rows[ri]][cols[cj]];
                if ((ri + cj) % 2 != 0) sign = -sign;
                rows.erase(rows.begin() + ri);
                cols.erase(cols.begin() + cj);
                progress = true;
                break;
            }
        }
    }

    Int core(1);
    if (!rows.empty()) {
        int k = static_cast<int>(rows.size());
        std::vector<std::vector<Int>> b(k, std::vector<Int>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) b[i][j] = a[rows[i]][cols[j]];
        core = bareiss_det(b);
    }

    Rat result(peeled * core);
    if (sign < 0) result = -result;
    return result / scale;
}

int Poly1::valuation() const {
    for (int i = 0; i < static_cast<int>(c_.size()); ++i)
        if (c_[i] != 0) return i;
    return -1;
}

Rat Poly1::eval(const Rat& t) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Poly1 lagrange_interpolate(const std::vector<std::pair<Rat, Rat>>& samples) {
    int n = static_cast<int>(samples.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (samples[i].first == samples[j].first)
                throw PreconditionError("repeated interpolation node");
    // Newton's divided differences, then expansion to the monomial basis.
    std::vector<Rat> coef(n);
    for (int i = 0; i < n; ++i) coef[i] = samples[i].second;
    for (int level = 1; level < n; ++level)
        for (int i = n - 1; i >= level; --i)
            coef[i] = (coef[i] - coef[i - 1]) / (samples[i].first - samples[i - level].first);
    std::vector<Rat> poly;  // running product basis expansion
    std::vector<Rat> basis = {Rat(1)};
    poly.assign(1, Rat(0));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(poly.size()) < static_cast<int>(basis.size()))
            poly.resize(basis.size(), Rat(0));
        for (int j = 0; j < static_cast<int>(basis.size()); ++j) poly[j] += coef[i] * basis[j];
        if (i + 1 < n) {
            // basis *= (t - x_i)
            std::vector<Rat> nb(basis.size() + 1, Rat(0));
            for (int j = 0; j < static_cast<int>(basis.size()); ++j) {
                nb[j + 1] += basis[j];
                nb[j] -= basis[j] * samples[i].first;
            }
            basis = std::move(nb);
        }
    }
    return Poly1(std::move(poly));
}

int thread_count() {
    if (const char* env = std::getenv("ELIMKIT_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<int>(std::min(v, 64L));
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(std::min(hc, 16u));
}

std::vector<Rat> parallel_map(int n, const std::function<Rat(int)>& fn) {
    std::vector<Rat> out(static_cast<std::size_t>(std::max(n, 0)));
    if (n <= 0) return out;
    int workers = std::min(thread_count(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= n) return;
                try {
                    out[i] = fn(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    for (int i = 0; i < n; ++i)
        if (errors[i]) std::rethrow_exception(errors[i]);
    return out;
}

}  // namespace elimkit
