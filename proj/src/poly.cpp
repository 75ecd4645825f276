#include "spinops/poly.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <sstream>

namespace spinops {

// ---------------------------------------------------------------------------
// variable names

std::string var_name(Var v) {
    using namespace vars;
    if (v == i) return "i";
    if (v == eps) return "eps";
    if (v == s) return "sqrtb";
    if (v == r) return "r";
    if (v == hbar) return "hbar";
    if (v == alpha) return "alpha";
    if (v == beta) return "beta";
    if (v >= 32 && v < 49) return "c" + std::to_string(v - 31);
    if (v == 49 || v == 50) return "d" + std::to_string(v - 48);
    if (v == 51 || v == 52) return "k" + std::to_string(v - 50);
    if (is_oracle_pos(v)) return "@x" + std::to_string(v - 63);
    if (is_jet(v)) {
        int fam = jet_family(v);
        std::string base = fam == FAM_V0   ? "V0"
                           : fam == FAM_V1 ? "V1"
                                           : "f" + std::to_string(fam - 1);
        return base + std::string(static_cast<size_t>(jet_order(v)), '\'');
    }
    return "@var" + std::to_string(v);
}

std::optional<Var> var_from_name(const std::string& name) {
    using namespace vars;
    if (name == "i") return i;
    if (name == "eps") return eps;
    if (name == "sqrtb") return s;
    if (name == "r") return r;
    if (name == "hbar") return hbar;
    if (name == "alpha") return alpha;
    if (name == "beta") return beta;
    if (name == "V0") return jet(FAM_V0);
    if (name == "V1") return jet(FAM_V1);
    auto tail_int = [](const std::string& t) -> std::optional<int> {
        if (t.empty() || t.size() > 2) return std::nullopt;
        for (char ch : t)
            if (ch < '0' || ch > '9') return std::nullopt;
        return std::stoi(t);
    };
    if (name.size() >= 2) {
        auto n = tail_int(name.substr(1));
        if (n) {
            if (name[0] == 'c' && *n >= 1 && *n <= 17) return c(*n);
            if (name[0] == 'd' && *n >= 1 && *n <= 2) return d(*n);
            if (name[0] == 'k' && *n >= 1 && *n <= 2) return kk(*n);
            if (name[0] == 'f' && *n >= 1 && *n <= 19) return jet(fam_f(*n));
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Monomial

int Monomial::deg(Var v) const {
    for (const auto& [var, e] : f)
        if (var == v) return e;
    return 0;
}

int Monomial::total_deg() const {
    int t = 0;
    for (const auto& [var, e] : f) t += e;
    return t;
}

bool Monomial::divides(const Monomial& by) const {
    // does `by` divide `this`
    size_t pa = 0;
    for (const auto& [var, e] : by.f) {
        while (pa < f.size() && f[pa].first < var) ++pa;
        if (pa == f.size() || f[pa].first != var || f[pa].second < e) return false;
    }
    return true;
}

Monomial Monomial::div(const Monomial& by) const {
    Monomial out;
    size_t pb = 0;
    for (const auto& [var, e] : f) {
        int sub = 0;
        while (pb < by.f.size() && by.f[pb].first < var) ++pb;
        if (pb < by.f.size() && by.f[pb].first == var) sub = by.f[pb].second;
        if (e - sub < 0) throw CalcError("monomial division mismatch");
        if (e - sub > 0) out.f.emplace_back(var, e - sub);
    }
    return out;
}

Monomial Monomial::mul(const Monomial& other) const {
    Monomial out;
    out.f.reserve(f.size() + other.f.size());
    size_t pa = 0, pb = 0;
    while (pa < f.size() || pb < other.f.size()) {
        if (pb == other.f.size() || (pa < f.size() && f[pa].first < other.f[pb].first)) {
            out.f.push_back(f[pa++]);
        } else if (pa == f.size() || other.f[pb].first < f[pa].first) {
            out.f.push_back(other.f[pb++]);
        } else {
            out.f.emplace_back(f[pa].first, f[pa].second + other.f[pb].second);
            ++pa, ++pb;
        }
    }
    return out;
}

static void mono_set_exp(Monomial& m, Var v, int e) {
    auto it = std::lower_bound(m.f.begin(), m.f.end(), v,
                               [](const auto& p, Var x) { return p.first < x; });
    if (it != m.f.end() && it->first == v) {
        if (e == 0)
            m.f.erase(it);
        else
            it->second = e;
    } else if (e != 0) {
        m.f.insert(it, {v, e});
    }
}

bool MonoLess::operator()(const Monomial& a, const Monomial& b) const {
    // Lexicographic with smaller var ids more significant; higher exponent on
    // the most significant differing var wins.
    size_t pa = 0, pb = 0;
    while (pa < a.f.size() && pb < b.f.size()) {
        Var va = a.f[pa].first, vb = b.f[pb].first;
        if (va == vb) {
            if (a.f[pa].second != b.f[pb].second) return a.f[pa].second < b.f[pb].second;
            ++pa, ++pb;
        } else if (va < vb) {
            return false;  // a has positive power on a more significant var
        } else {
            return true;
        }
    }
    if (pa < a.f.size()) return false;
    if (pb < b.f.size()) return true;
    return false;
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(const Rational& c) {
    if (c != 0) t_.emplace(Monomial{}, c);
}

Poly::Poly(long c) {
    if (c != 0) t_.emplace(Monomial{}, rat(c));
}

Poly Poly::variable(Var v, int exp) {
    Poly p;
    if (exp < 0) throw CalcError("negative exponent in polynomial");
    Monomial m;
    if (exp > 0) m.f.emplace_back(v, exp);
    p.add_term(std::move(m), rat(1));
    return p;
}

bool Poly::is_rational() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first.f.empty());
}

Rational Poly::rational_value() const {
    if (t_.empty()) return rat(0);
    if (!is_rational()) throw CalcError("polynomial is not constant");
    return t_.begin()->second;
}

void Poly::plain_insert(Monomial m, Rational c) {
    auto [it, inserted] = t_.try_emplace(std::move(m), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

void Poly::add_term(Monomial m, Rational c) {
    if (c == 0) return;
    int ei = m.deg(vars::i);
    if (ei >= 2) {
        if ((ei / 2) & 1) c = -c;
        mono_set_exp(m, vars::i, ei % 2);
    }
    int ee = m.deg(vars::eps);
    if (ee >= 2) mono_set_exp(m, vars::eps, ee % 2);
    int es = m.deg(vars::s);
    if (es >= 2) {
        // s^(2q) = (1 + beta r^2)^q, expanded binomially on the spot.
        int q = es / 2;
        mono_set_exp(m, vars::s, es % 2);
        int b0 = m.deg(vars::beta), r0 = m.deg(vars::r);
        for (int t = 0; t <= q; ++t) {
            mpz_class bin;
            mpz_bin_uiui(bin.get_mpz_t(), static_cast<unsigned long>(q),
                         static_cast<unsigned long>(t));
            Monomial mt = m;
            mono_set_exp(mt, vars::beta, b0 + t);
            mono_set_exp(mt, vars::r, r0 + 2 * t);
            plain_insert(std::move(mt), c * Rational(bin));
        }
        return;
    }
    plain_insert(std::move(m), std::move(c));
}

Poly Poly::operator+(const Poly& o) const {
    Poly out = *this;
    out += o;
    return out;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.t_) plain_insert(m, c);
    return *this;
}

Poly Poly::operator-(const Poly& o) const {
    Poly out = *this;
    out -= o;
    return out;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.t_) plain_insert(m, -c);
    return *this;
}

Poly Poly::operator-() const {
    Poly out;
    for (const auto& [m, c] : t_) out.t_.emplace(m, -c);
    return out;
}

Poly Poly::operator*(const Poly& o) const {
    Poly out;
    for (const auto& [ma, ca] : t_)
        for (const auto& [mb, cb] : o.t_) out.add_term(ma.mul(mb), ca * cb);
    return out;
}

Poly Poly::operator*(const Rational& c) const {
    if (c == 0) return Poly{};
    Poly out;
    for (const auto& [m, k] : t_) out.t_.emplace(m, k * c);
    return out;
}

Poly Poly::pow(unsigned e) const {
    Poly out(1L);
    Poly base = *this;
    while (e) {
        if (e & 1) out = out * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return out;
}

Poly Poly::conj() const {
    Poly out;
    for (const auto& [m, c] : t_) out.t_.emplace(m, (m.deg(vars::i) & 1) ? -c : c);
    return out;
}

int Poly::degree(Var v) const {
    int d = 0;
    for (const auto& [m, c] : t_) d = std::max(d, m.deg(v));
    return d;
}

bool Poly::contains(Var v) const {
    for (const auto& [m, c] : t_)
        if (m.deg(v) > 0) return true;
    return false;
}

bool Poly::has_any_of(Var a, Var b, Var c) const {
    for (const auto& [m, k] : t_)
        for (const auto& [v, e] : m.f)
            if (v == a || v == b || v == c) return true;
    return false;
}

std::set<Var> Poly::variables() const {
    std::set<Var> out;
    for (const auto& [m, c] : t_)
        for (const auto& [v, e] : m.f) out.insert(v);
    return out;
}

Poly Poly::coeff_of(Var v, int k) const {
    Poly out;
    for (const auto& [m, c] : t_) {
        if (m.deg(v) != k) continue;
        Monomial rest = m;
        mono_set_exp(rest, v, 0);
        out.plain_insert(std::move(rest), c);
    }
    return out;
}

const Monomial& Poly::leading_mono() const {
    if (t_.empty()) throw CalcError("leading term of zero polynomial");
    return t_.rbegin()->first;
}

const Rational& Poly::leading_coeff() const {
    if (t_.empty()) throw CalcError("leading term of zero polynomial");
    return t_.rbegin()->second;
}

// Order of factors inside a printed monomial: imaginary unit and sign
// symbol first, then arbitrary constants, then alpha/beta/hbar, the metric
// root, radial jets, and finally coordinate powers. Purely cosmetic; term
// order across a polynomial follows the canonical monomial order.
static int display_rank(Var v) {
    using namespace vars;
    if (v == i) return 0;
    if (v == eps) return 1;
    if (v >= 32 && v < 64) return 10 + static_cast<int>(v);
    if (v == alpha) return 100;
    if (v == beta) return 101;
    if (v == hbar) return 102;
    if (v == s) return 110;
    if (is_jet(v)) return 200 + 32 * jet_family(v) + jet_order(v);
    if (is_oracle_pos(v)) return 900 + static_cast<int>(v);
    if (v == r) return 1000;
    return 1100 + static_cast<int>(v);
}

std::string Poly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Descending canonical order: leading term first.
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [m, c] = *it;
        bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        bool wrote = false;
        if (mag != 1 || m.f.empty()) {
            os << rat_str(mag);
            wrote = true;
        }
        auto factors = m.f;
        std::sort(factors.begin(), factors.end(),
                  [](const std::pair<Var, int>& x, const std::pair<Var, int>& y) {
                      return std::make_pair(display_rank(x.first), x.first) <
                             std::make_pair(display_rank(y.first), y.first);
                  });
        for (const auto& [v, e] : factors) {
            if (wrote) os << "*";
            os << var_name(v);
            if (e != 1) os << "^" << e;
            wrote = true;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// gcd machinery

// Divides out the rational content and fixes the sign so the leading
// coefficient is positive; coefficients end up coprime integers.
static Poly normalize_primitive(const Poly& p) {
    if (p.is_zero()) return p;
    mpz_class gnum = 0, glden = 1;
    for (const auto& [m, c] : p.terms()) {
        mpz_gcd(gnum.get_mpz_t(), gnum.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(glden.get_mpz_t(), glden.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational factor(gnum, glden);
    factor.canonicalize();
    if (p.leading_coeff() < 0) factor = -factor;
    Poly out;
    for (const auto& [m, c] : p.terms()) {
        Monomial mm = m;
        out.add_term(std::move(mm), c / factor);
    }
    return out;
}

static Poly content_in(const Poly& p, Var v);

// Smallest exponent of v across the terms of p (0 as soon as a term lacks v).
static int min_exp(const Poly& p, Var v) {
    int m = std::numeric_limits<int>::max();
    for (const auto& [mono, c] : p.terms()) {
        m = std::min(m, mono.deg(v));
        if (m == 0) return 0;
    }
    return m;
}

// gcd when one side is a single term: the common power product, made monic.
static Poly mono_gcd(const Poly& mono, const Poly& other) {
    Monomial out;
    for (const auto& [v, e] : mono.leading_mono().f) {
        int k = std::min(e, min_exp(other, v));
        if (k > 0) out.f.emplace_back(v, k);
    }
    Poly g;
    g.add_term(std::move(out), rat(1));
    return g;
}

static bool share_variable(const Poly& a, const Poly& b) {
    auto av = a.variables(), bv = b.variables();
    auto ia = av.begin();
    auto ib = bv.begin();
    while (ia != av.end() && ib != bv.end()) {
        if (*ia == *ib) return true;
        (*ia < *ib) ? ++ia : ++ib;
    }
    return false;
}

// Pseudo-remainder of f by g with respect to v. The rational content is
// stripped after every step: the callers only use the result up to content,
// and without this the coefficient bit-length doubles per step.
static Poly prem(const Poly& f, const Poly& g, Var v) {
    int dg = g.degree(v);
    Poly lcg = g.coeff_of(v, dg);
    Poly r = f;
    while (!r.is_zero()) {
        int dr = r.degree(v);
        if (dr < dg) break;
        Poly lcr = r.coeff_of(v, dr);
        Poly shift = Poly::variable(v, dr - dg);
        r = r * lcg - g * (lcr * shift);
        if (!r.is_zero()) r = normalize_primitive(r);
    }
    return r;
}

// Proves gcd(a, b) free of v by specializing every other variable at small
// integers and running a univariate Euclid. A degree-0 specialized gcd is
// conclusive provided the leading v-coefficient of a or b survives the
// specialization: the leading coefficient of any common divisor divides it,
// so the divisor's v-degree is preserved and must be zero. An inconclusive
// probe just sends the caller down the full remainder sequence.
static int uni_gcd_degree(std::vector<Rational> A, std::vector<Rational> B) {
    auto trim = [](std::vector<Rational>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    trim(A);
    trim(B);
    while (!B.empty()) {
        int da = static_cast<int>(A.size()) - 1;
        int db = static_cast<int>(B.size()) - 1;
        if (da < db) {
            std::swap(A, B);
            continue;
        }
        Rational f = A.back() / B.back();
        for (int k = 0; k <= db; ++k) A[da - db + k] -= f * B[k];
        trim(A);
        std::swap(A, B);
    }
    return static_cast<int>(A.size()) - 1;
}

static bool probe_coprime(const Poly& a, const Poly& b, Var v) {
    static const long pts[] = {2, -3, 5, 7, -2, 11, 3, -5, 13, 17};
    std::set<Var> others = a.variables();
    for (Var w : b.variables()) others.insert(w);
    others.erase(v);

    int da = a.degree(v), db = b.degree(v);
    Poly la = a.coeff_of(v, da);
    Poly lb = b.coeff_of(v, db);

    for (int attempt = 0; attempt < 4; ++attempt) {
        std::map<Var, mpz_class> val;
        {
            int j = attempt;
            for (Var w : others) val[w] = pts[j++ % 10];
        }
        auto eval_term = [&](const Monomial& m, const Rational& c, int* vdeg) {
            Rational out = c;
            *vdeg = 0;
            for (const auto& [w, e] : m.f) {
                if (w == v) {
                    *vdeg = e;
                    continue;
                }
                mpz_class pw;
                mpz_pow_ui(pw.get_mpz_t(), val[w].get_mpz_t(),
                           static_cast<unsigned long>(e));
                out *= Rational(pw);
            }
            return out;
        };
        auto eval_poly = [&](const Poly& p, int deg) {
            std::vector<Rational> out(deg + 1, rat(0));
            for (const auto& [m, c] : p.terms()) {
                int d = 0;
                Rational t = eval_term(m, c, &d);
                out[d] += t;
            }
            return out;
        };
        auto eval_scalar = [&](const Poly& p) {
            Rational out = rat(0);
            for (const auto& [m, c] : p.terms()) {
                int d = 0;
                out += eval_term(m, c, &d);
            }
            return out;
        };
        if (eval_scalar(la) == 0 && eval_scalar(lb) == 0) continue;
        return uni_gcd_degree(eval_poly(a, da), eval_poly(b, db)) == 0;
    }
    return false;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return normalize_primitive(b);
    if (b.is_zero()) return normalize_primitive(a);
    if (a.is_rational() || b.is_rational()) return Poly(1L);

    // Cheap exits that cover most calls: identical inputs, a single-term
    // side, disjoint variable sets, or one side dividing the other.
    if (a == b) return normalize_primitive(a);
    if (a.size() == 1) return mono_gcd(a, b);
    if (b.size() == 1) return mono_gcd(b, a);
    if (!share_variable(a, b)) return Poly(1L);
    if (poly_try_divexact(a, b)) return normalize_primitive(b);
    if (poly_try_divexact(b, a)) return normalize_primitive(a);

    // Main variable: the largest id present anywhere (a consistent choice).
    Var v = *a.variables().rbegin();
    auto bv = b.variables();
    if (!bv.empty()) v = std::max(v, *bv.rbegin());

    int da = a.degree(v), db = b.degree(v);
    if (da == 0) return poly_gcd(a, content_in(b, v));
    if (db == 0) return poly_gcd(content_in(a, v), b);

    // A common divisor free of v divides both contents, so when the probe
    // rules out any v-dependence the remainder sequence can be skipped.
    if (probe_coprime(a, b, v))
        return poly_gcd(content_in(a, v), content_in(b, v));

    Poly ca = content_in(a, v), cb = content_in(b, v);
    Poly ppa = poly_divexact(a, ca), ppb = poly_divexact(b, cb);
    Poly c = poly_gcd(ca, cb);

    Poly f = ppa, g = ppb;
    if (f.degree(v) < g.degree(v)) std::swap(f, g);
    Poly result;
    while (true) {
        Poly rem = prem(f, g, v);
        if (rem.is_zero()) {
            result = g;
            break;
        }
        if (rem.degree(v) == 0) {
            result = Poly(1L);
            break;
        }
        f = g;
        g = poly_divexact(rem, content_in(rem, v));
    }
    return normalize_primitive(c * result);
}

// gcd of the coefficients of p viewed as a polynomial in v. Folding the
// smallest coefficients first reaches a rational gcd (the common case) fast.
static Poly content_in(const Poly& p, Var v) {
    std::vector<Poly> coeffs;
    for (int k = 0; k <= p.degree(v); ++k) {
        Poly ck = p.coeff_of(v, k);
        if (!ck.is_zero()) coeffs.push_back(std::move(ck));
    }
    std::sort(coeffs.begin(), coeffs.end(),
              [](const Poly& x, const Poly& y) { return x.size() < y.size(); });
    Poly g;
    for (Poly& ck : coeffs) {
        g = poly_gcd(g, ck);
        if (g.is_rational()) return Poly(1L);
    }
    return g;
}

std::optional<Poly> poly_try_divexact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw CalcError("division by zero polynomial");
    Poly q, r = a;
    const Monomial& lb = b.leading_mono();
    const Rational& cb = b.leading_coeff();
    while (!r.is_zero()) {
        const Monomial& lr = r.leading_mono();
        if (!lr.divides(lb)) return std::nullopt;
        Monomial t = lr.div(lb);
        Rational qc = r.leading_coeff() / cb;
        Poly term;
        term.add_term(t, qc);
        q += term;
        r -= b * term;
    }
    return q;
}

Poly poly_divexact(const Poly& a, const Poly& b) {
    auto q = poly_try_divexact(a, b);
    if (!q) throw CalcError("inexact polynomial division");
    return std::move(*q);
}

}  // namespace spinops
