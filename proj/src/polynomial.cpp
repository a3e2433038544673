#include "elimkit/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace elimkit {

int total_degree(const Exponents& e) {
    int d = 0;
    for (int a : e) d += a;
    return d;
}

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Polynomial Polynomial::constant(int nvars, const Rat& c) {
    Polynomial p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw PreconditionError("variable index out of range");
    Exponents e(nvars, 0);
    e[i] = 1;
    return monomial(nvars, e, Rat(1));
}

Polynomial Polynomial::monomial(int nvars, const Exponents& e, const Rat& c) {
    if (static_cast<int>(e.size()) != nvars)
        throw PreconditionError("exponent vector length differs from nvars");
    for (int a : e)
        if (a < 0) throw PreconditionError("negative exponent");
    Polynomial p(nvars);
    p.add_term(e, c);
    return p;
}

Rat Polynomial::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void Polynomial::add_term(const Exponents& e, const Rat& c) {
    if (static_cast<int>(e.size()) != nvars_)
        throw PreconditionError("exponent vector length differs from nvars");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::optional<int> Polynomial::degree() const {
    if (terms_.empty()) return std::nullopt;
    // grlex order: the last key has maximal total degree
    return total_degree(terms_.rbegin()->first);
}

std::optional<int> Polynomial::degree_in(int var) const {
    if (var < 0 || var >= nvars_) throw PreconditionError("variable index out of range");
    if (terms_.empty()) return std::nullopt;
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

std::optional<int> Polynomial::valuation_in(int var) const {
    if (var < 0 || var >= nvars_) throw PreconditionError("variable index out of range");
    if (terms_.empty()) return std::nullopt;
    int v = -1;
    for (const auto& [e, c] : terms_) v = (v < 0) ? e[var] : std::min(v, e[var]);
    return v;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = total_degree(terms_.begin()->first);
    return total_degree(terms_.rbegin()->first) == d;
}

bool Polynomial::is_homogeneous_of_degree(int d) const {
    if (terms_.empty()) return true;
    return is_homogeneous() && total_degree(terms_.begin()->first) == d;
}

void Polynomial::check_same_space(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw PreconditionError("mismatched variable counts");
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_space(o);
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_same_space(o);
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_space(o);
    Polynomial r(nvars_);
    Exponents e(nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::operator*(const Rat& c) const {
    Polynomial r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw PreconditionError("negative polynomial power");
    Polynomial r = constant(nvars_, Rat(1));
    for (int i = 0; i < e; ++i) r = r * (*this);
    return r;
}

Polynomial partial_derivative(const Polynomial& f, int i) {
    if (i < 0 || i >= f.nvars()) throw PreconditionError("variable index out of range");
    Polynomial r(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        if (e[i] == 0) continue;
        Exponents d = e;
        d[i] -= 1;
        r.add_term(d, c * e[i]);
    }
    return r;
}

Polynomial substitute_variable(const Polynomial& f, int i, const Polynomial& value) {
    if (i < 0 || i >= f.nvars()) throw PreconditionError("variable index out of range");
    if (value.nvars() != f.nvars()) throw PreconditionError("mismatched variable counts");
    // cache powers of the substituted value
    std::vector<Polynomial> powers = {Polynomial::constant(f.nvars(), Rat(1))};
    Polynomial r(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        while (static_cast<int>(powers.size()) <= e[i])
            powers.push_back(powers.back() * value);
        Exponents rest = e;
        rest[i] = 0;
        r = r + Polynomial::monomial(f.nvars(), rest, c) * powers[e[i]];
    }
    return r;
}

Polynomial substitute_value(const Polynomial& f, int i, const Rat& value) {
    if (i < 0 || i >= f.nvars()) throw PreconditionError("variable index out of range");
    Polynomial r(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        Exponents rest = e;
        rest[i] = 0;
        r.add_term(rest, c * rat_pow(value, e[i]));
    }
    return r;
}

Rat evaluate(const Polynomial& f, const std::vector<Rat>& point) {
    if (static_cast<int>(point.size()) != f.nvars())
        throw PreconditionError("point dimension differs from nvars");
    Rat total(0);
    for (const auto& [e, c] : f.terms()) {
        Rat t = c;
        for (int i = 0; i < f.nvars(); ++i)
            if (e[i] != 0) t *= rat_pow(point[i], e[i]);
        total += t;
    }
    return total;
}

Polynomial drop_variable(const Polynomial& f, int i) {
    if (i < 0 || i >= f.nvars()) throw PreconditionError("variable index out of range");
    Polynomial r(f.nvars() - 1);
    for (const auto& [e, c] : f.terms()) {
        if (e[i] != 0) throw PreconditionError("polynomial depends on the dropped variable");
        Exponents d;
        d.reserve(e.size() - 1);
        for (int j = 0; j < static_cast<int>(e.size()); ++j)
            if (j != i) d.push_back(e[j]);
        r.add_term(d, c);
    }
    return r;
}

Polynomial insert_variable(const Polynomial& f, int i) {
    if (i < 0 || i > f.nvars()) throw PreconditionError("variable index out of range");
    Polynomial r(f.nvars() + 1);
    for (const auto& [e, c] : f.terms()) {
        Exponents d;
        d.reserve(e.size() + 1);
        for (int j = 0; j < i; ++j) d.push_back(e[j]);
        d.push_back(0);
        for (int j = i; j < static_cast<int>(e.size()); ++j) d.push_back(e[j]);
        r.add_term(d, c);
    }
    return r;
}

bool projectively_equal(const LinearPoint& a, const LinearPoint& b) {
    if (a.size() != b.size()) return false;
    auto is_zero = [](const LinearPoint& v) {
        for (const Rat& c : v)
            if (c != 0) return false;
        return true;
    };
    if (is_zero(a) || is_zero(b))
        throw PreconditionError("zero vector is not a projective point");
    // rank of the 2 x n matrix [a; b] is < 2 iff all 2x2 minors vanish
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] * b[j] - a[j] * b[i] != 0) return false;
    return true;
}

static void check_point(const Polynomial& f, const LinearPoint& a) {
    if (static_cast<int>(a.size()) != f.nvars())
        throw PreconditionError("point dimension differs from nvars");
    bool nonzero = false;
    for (const Rat& c : a) nonzero = nonzero || c != 0;
    if (!nonzero) throw PreconditionError("zero vector is not a projective point");
}

Polynomial polar(const Polynomial& f, const LinearPoint& a) {
    check_point(f, a);
    Polynomial r(f.nvars());
    for (int i = 0; i < f.nvars(); ++i)
        if (a[i] != 0) r = r + partial_derivative(f, i) * a[i];
    return r;
}

Polynomial polar_power(const Polynomial& f, const LinearPoint& a, int k) {
    if (k < 0) throw PreconditionError("negative polar iteration count");
    auto d = f.degree();
    if (d && k > *d) throw PreconditionError("polar iteration count exceeds degree");
    Polynomial r = f;
    for (int i = 0; i < k; ++i) r = polar(r, a);
    return r;
}

Polynomial restrict_to_line(const Polynomial& f, const LinearPoint& a, const LinearPoint& b) {
    check_point(f, a);
    check_point(f, b);
    if (projectively_equal(a, b))
        throw PreconditionError("line endpoints are projectively equal");
    // substitute x_i = alpha*a_i + beta*b_i into f; result lives in (alpha, beta)
    Polynomial r(2);
    for (const auto& [e, c] : f.terms()) {
        Polynomial t = Polynomial::constant(2, c);
        for (int i = 0; i < f.nvars(); ++i) {
            if (e[i] == 0) continue;
            Polynomial lin(2);
            lin.add_term({1, 0}, a[i]);
            lin.add_term({0, 1}, b[i]);
            t = t * lin.pow(e[i]);
        }
        r = r + t;
    }
    return r;
}

LineMultiplicity line_intersection_multiplicity(const Polynomial& f, const LinearPoint& a,
                                                const LinearPoint& b) {
    Polynomial r = restrict_to_line(f, a, b);
    if (r.is_zero()) return {true, 0};
    auto v = r.valuation_in(1);
    if (*v == 0) throw PreconditionError("f does not vanish at the base point of the line");
    return {false, *v};
}

Polynomial hessian(const Polynomial& f) {
    auto d = f.degree();
    if (!f.is_homogeneous() || !d || *d < 2)
        throw PreconditionError("hessian needs a homogeneous form of degree >= 2");
    int n = f.nvars();
    std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n, Polynomial(n)));
    for (int i = 0; i < n; ++i) {
        Polynomial di = partial_derivative(f, i);
        for (int j = 0; j < n; ++j) m[i][j] = partial_derivative(di, j);
    }
    // Laplace expansion; matrix sizes here are small (nvars <= ~6)
    std::vector<int> cols(n);
    for (int j = 0; j < n; ++j) cols[j] = j;
    struct Expand {
        const std::vector<std::vector<Polynomial>>& m;
        int n;
        Polynomial run(int row, std::vector<int>& cols) {
            if (cols.empty()) return Polynomial::constant(n, Rat(1));
            Polynomial acc(n);
            for (std::size_t k = 0; k < cols.size(); ++k) {
                int j = cols[k];
                if (m[row][j].is_zero()) continue;
                std::vector<int> rest;
                rest.reserve(cols.size() - 1);
                for (std::size_t l = 0; l < cols.size(); ++l)
                    if (l != k) rest.push_back(cols[l]);
                Polynomial sub = run(row + 1, rest);
                Polynomial contrib = m[row][j] * sub;
                acc = (k % 2 == 0) ? acc + contrib : acc - contrib;
            }
            return acc;
        }
    };
    Expand ex{m, n};
    return ex.run(0, cols);
}

// ---- text format -------------------------------------------------------

namespace {

class Parser {
public:
    Parser(const std::string& text, int nvars) : s_(text), nvars_(nvars) {}

    Polynomial run() {
        Polynomial p(nvars_);
        skip_ws();
        if (eof()) fail("a term");
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = (get() == '-');
        for (;;) {
            parse_term(p, neg);
            skip_ws();
            if (eof()) break;
            char c = get();
            if (c == '+')
                neg = false;
            else if (c == '-')
                neg = true;
            else
                fail_at(pos_ - 1, "'+' or '-'");
            skip_ws();
        }
        return p;
    }

private:
    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    char get() { return s_[pos_++]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& expected) { fail_at(pos_, expected); }
    [[noreturn]] void fail_at(std::size_t at, const std::string& expected) {
        std::ostringstream msg;
        msg << "parse error at byte " << at << ": expected " << expected;
        throw ParseError(at, expected, msg.str());
    }

    Int parse_integer() {
        skip_ws();
        std::size_t start = pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) fail("a digit");
        return Int(s_.substr(start, pos_ - start));
    }

    void parse_term(Polynomial& p, bool neg) {
        skip_ws();
        if (eof()) fail("a term");
        Rat coeff(1);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Int num = parse_integer();
            skip_ws();
            if (!eof() && peek() == '/') {
                ++pos_;
                Int den = parse_integer();
                if (den == 0) fail_at(pos_ - 1, "a nonzero denominator");
                coeff = Rat(num, den);
                coeff.canonicalize();
            } else {
                coeff = Rat(num);
            }
            have_coeff = true;
            skip_ws();
            if (!eof() && peek() == '*') {
                ++pos_;
                skip_ws();
            }
        }
        Exponents e(nvars_, 0);
        bool have_var = false;
        for (;;) {
            skip_ws();
            if (eof() || peek() != 'x') break;
            std::size_t at = pos_;
            ++pos_;
            if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
                fail("a variable index after 'x'");
            Int idx = parse_integer();
            if (idx < 0 || idx >= nvars_) {
                std::ostringstream msg;
                msg << "parse error at byte " << at << ": variable x" << idx.get_str()
                    << " outside the declared count (nvars=" << nvars_ << ")";
                throw ParseError(at, "a variable within --nvars", msg.str());
            }
            int exp = 1;
            skip_ws();
            if (!eof() && peek() == '^') {
                ++pos_;
                Int ex = parse_integer();
                if (ex < 0 || ex > 100000) fail("a non-negative exponent");
                exp = static_cast<int>(ex.get_si());
            }
            e[idx.get_si()] += exp;
            have_var = true;
            skip_ws();
            if (!eof() && peek() == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        if (!have_coeff && !have_var) fail("a coefficient or a variable");
        p.add_term(e, neg ? Rat(-coeff) : coeff);
    }

    const std::string& s_;
    int nvars_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, int nvars) {
    if (nvars < 0) throw PreconditionError("nvars must be non-negative");
    return Parser(text, nvars).run();
}

std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    // canonical order: descending graded-lex
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        Rat a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool any_var = total_degree(e) > 0;
        bool coeff_shown = !any_var || a != 1;
        if (coeff_shown) out << a.get_str();
        bool need_sep = coeff_shown;
        for (int i = 0; i < static_cast<int>(e.size()); ++i) {
            if (e[i] == 0) continue;
            if (need_sep) out << "*";
            out << "x" << i;
            if (e[i] > 1) out << "^" << e[i];
            need_sep = true;
        }
    }
    return out.str();
}

}  // namespace elimkit
