#include "spinops/field_elem.hpp"

#include <sstream>

namespace spinops {

// ---------------------------------------------------------------------------
// Bindings

const FieldElem& Bindings::jet_deriv(int family, int order) const {
    auto& tower = deriv_cache_[family];
    if (tower.empty()) tower.push_back(jets.at(family));
    while (static_cast<int>(tower.size()) <= order) tower.push_back(tower.back().d_dr());
    return tower[static_cast<size_t>(order)];
}

// ---------------------------------------------------------------------------
// construction / normalization

FieldElem::FieldElem(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

FieldElem FieldElem::variable(Var v, int exp) {
    if (exp == 0) return FieldElem(1L);
    if (exp > 0) return FieldElem(Poly::variable(v, exp));
    return FieldElem(Poly(1L), Poly::variable(v, -exp));
}

FieldElem FieldElem::jetf(int family, int order) {
    return FieldElem(Poly::variable(vars::jet(family, order)));
}

bool FieldElem::is_one() const {
    return num_.is_rational() && den_.is_rational() && !num_.is_zero() &&
           num_.rational_value() == den_.rational_value();
}

Rational FieldElem::rational_value() const {
    return num_.rational_value() / den_.rational_value();
}

void FieldElem::normalize() {
    if (den_.is_zero()) throw ZeroDenominator();
    if (num_.is_zero()) {
        den_ = Poly(1L);
        return;
    }

    // Rationalize: clear s, then eps, then i from the denominator by
    // multiplying with the matching conjugate. Each step eliminates its
    // symbol completely because the rewrite rules close the squares. A
    // vanishing conjugate product exposes a zero divisor (e.g. 1 + eps).
    auto clear_symbol = [&](Var v) {
        if (!den_.contains(v)) return;
        Poly a = den_.coeff_of(v, 0);
        Poly b = den_.coeff_of(v, 1);
        Poly conj = a - b * Poly::variable(v);
        Poly cleared = den_ * conj;
        if (cleared.is_zero()) throw ZeroDenominator("zero denominator (zero divisor)");
        den_ = std::move(cleared);
        num_ = num_ * conj;
    };
    clear_symbol(vars::s);
    clear_symbol(vars::eps);
    clear_symbol(vars::i);

    // Reduce by the gcd. Denominators here are nearly always a power
    // product times a power of (1 + beta r^2) — the square of the metric
    // root — so peel those factors off directly and fall back to the
    // general gcd only for whatever remains.
    if (!den_.is_rational()) {
        static const Poly sb = [] {
            return Poly(1L) +
                   Poly::variable(vars::beta) * Poly::variable(vars::r, 2);
        }();
        int sb_pow = 0;
        Poly rest = den_;
        if (rest.size() > 1) {
            while (auto q = poly_try_divexact(rest, sb)) {
                rest = std::move(*q);
                ++sb_pow;
            }
            while (sb_pow > 0) {
                auto q = poly_try_divexact(num_, sb);
                if (!q) break;
                num_ = std::move(*q);
                --sb_pow;
            }
        }
        if (rest.size() == 1) {
            // Divide out the largest common power product.
            Monomial common = rest.leading_mono();
            for (const auto& [m, c] : num_.terms()) {
                Monomial next;
                for (const auto& [v, e] : common.f) {
                    int k = std::min(e, m.deg(v));
                    if (k > 0) next.f.emplace_back(v, k);
                }
                common = std::move(next);
                if (common.f.empty()) break;
            }
            if (!common.f.empty()) {
                Poly div;
                div.add_term(common, rat(1));
                num_ = poly_divexact(num_, div);
                rest = poly_divexact(rest, div);
            }
            den_ = rest;
            for (int t = 0; t < sb_pow; ++t) den_ = den_ * sb;
        } else {
            den_ = rest;
            for (int t = 0; t < sb_pow; ++t) den_ = den_ * sb;
            // Group numerator terms by their monomial part outside the
            // denominator's variables; gcd the inside parts against den.
            auto dvars = den_.variables();
            std::map<Monomial, Poly, MonoLess> pieces;
            for (const auto& [m, c] : num_.terms()) {
                Monomial inside, outside;
                for (const auto& [v, e] : m.f)
                    (dvars.count(v) ? inside : outside).f.emplace_back(v, e);
                pieces[outside].add_term(inside, c);
            }
            Poly g = den_;
            for (const auto& [o, piece] : pieces) {
                g = poly_gcd(g, piece);
                if (g.is_rational()) break;
            }
            if (!g.is_rational()) {
                num_ = poly_divexact(num_, g);
                den_ = poly_divexact(den_, g);
            }
        }
    }

    // Monic denominator makes the reduced form unique.
    Rational lc = den_.leading_coeff();
    if (lc != 1) {
        Rational inv_lc = 1 / lc;
        num_ = num_ * inv_lc;
        den_ = den_ * inv_lc;
    }
}

// ---------------------------------------------------------------------------
// arithmetic

FieldElem FieldElem::operator+(const FieldElem& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    if (den_ == o.den_) return FieldElem(num_ + o.num_, den_);
    return FieldElem(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    if (o.is_zero()) return *this;
    if (is_zero()) return -o;
    if (den_ == o.den_) return FieldElem(num_ - o.num_, den_);
    return FieldElem(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    if (is_zero() || o.is_zero()) return FieldElem{};
    return FieldElem(num_ * o.num_, den_ * o.den_);
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
    if (o.is_zero()) throw ZeroDenominator();
    if (is_zero()) return FieldElem{};
    return FieldElem(num_ * o.den_, den_ * o.num_);
}

FieldElem FieldElem::operator-() const {
    FieldElem out = *this;
    out.num_ = -out.num_;
    return out;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) { return *this = *this + o; }
FieldElem& FieldElem::operator-=(const FieldElem& o) { return *this = *this - o; }
FieldElem& FieldElem::operator*=(const FieldElem& o) { return *this = *this * o; }

FieldElem FieldElem::inv() const {
    if (is_zero()) throw ZeroDenominator();
    return FieldElem(den_, num_);
}

FieldElem FieldElem::pow(int e) const {
    if (e < 0) return inv().pow(-e);
    FieldElem out(1L);
    FieldElem base = *this;
    unsigned k = static_cast<unsigned>(e);
    while (k) {
        if (k & 1) out = out * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return out;
}

FieldElem FieldElem::conj() const {
    FieldElem out;
    out.num_ = num_.conj();
    out.den_ = den_;  // denominator is i-free by canonical form
    return out;
}

// ---------------------------------------------------------------------------
// differentiation

static FieldElem dpoly(const Poly& p) {
    FieldElem out;
    for (const auto& [m, c] : p.terms()) {
        for (size_t k = 0; k < m.f.size(); ++k) {
            auto [v, e] = m.f[k];
            FieldElem dv;
            if (v == vars::r) {
                dv = FieldElem(1L);
            } else if (v == vars::s) {
                // d/dr s = beta r / s = beta r s / (1 + beta r^2)
                Poly n = Poly::variable(vars::beta) * Poly::variable(vars::r) *
                         Poly::variable(vars::s);
                Poly d = Poly(1L) + Poly::variable(vars::beta) * Poly::variable(vars::r, 2);
                dv = FieldElem(std::move(n), std::move(d));
            } else if (vars::is_jet(v)) {
                dv = FieldElem::variable(vars::jet(vars::jet_family(v), vars::jet_order(v) + 1));
            } else {
                continue;  // constants, i, eps, free positions
            }
            Monomial rest;
            for (size_t t = 0; t < m.f.size(); ++t) {
                if (t == k) {
                    if (e > 1) rest.f.emplace_back(v, e - 1);
                } else {
                    rest.f.push_back(m.f[t]);
                }
            }
            Poly base;
            base.add_term(std::move(rest), c * e);
            out += FieldElem(std::move(base)) * dv;
        }
    }
    return out;
}

FieldElem FieldElem::d_dr() const {
    if (num_.is_zero()) return FieldElem{};
    FieldElem dn = dpoly(num_);
    if (den_.is_rational()) {
        Rational dval = den_.rational_value();
        return dn * FieldElem(Rational(1 / dval));
    }
    FieldElem dd = dpoly(den_);
    FieldElem n(num_), d(den_);
    return (dn * d - n * dd) / (d * d);
}

// ---------------------------------------------------------------------------
// substitution

FieldElem poly_subst(const Poly& p, const Bindings& b) {
    FieldElem out;
    for (const auto& [m, c] : p.terms()) {
        FieldElem term{Rational(c)};
        Monomial unbound;
        for (const auto& [v, e] : m.f) {
            if (vars::is_jet(v) && b.binds_family(vars::jet_family(v))) {
                term *= b.jet_deriv(vars::jet_family(v), vars::jet_order(v)).pow(e);
            } else if (!vars::is_jet(v) && b.binds_const(v)) {
                term *= b.consts.at(v).pow(e);
            } else {
                unbound.f.emplace_back(v, e);
            }
        }
        Poly rest;
        rest.add_term(std::move(unbound), rat(1));
        out += term * FieldElem(std::move(rest));
    }
    return out;
}

FieldElem FieldElem::subst(const Bindings& b) const {
    FieldElem n = poly_subst(num_, b);
    FieldElem d = poly_subst(den_, b);
    if (d.is_zero()) throw ZeroDenominator("substitution makes a denominator vanish");
    return n / d;
}

// ---------------------------------------------------------------------------
// hbar grading

std::map<int, FieldElem> FieldElem::hbar_components() const {
    std::map<int, FieldElem> out;
    if (is_zero()) return out;
    int den_deg = -1;
    for (const auto& [m, c] : den_.terms()) {
        int d = m.deg(vars::hbar);
        if (den_deg == -1) den_deg = d;
        else if (den_deg != d)
            throw CalcError("element is not hbar-graded: mixed hbar powers in denominator");
    }
    auto strip_hbar = [](const Monomial& m) {
        Monomial rest;
        for (const auto& [v, e] : m.f)
            if (v != vars::hbar) rest.f.emplace_back(v, e);
        return rest;
    };
    Poly den0;
    for (const auto& [m, c] : den_.terms()) den0.add_term(strip_hbar(m), c);
    std::map<int, Poly> split;
    for (const auto& [m, c] : num_.terms())
        split[m.deg(vars::hbar)].add_term(strip_hbar(m), c);
    for (auto& [d, p] : split) out.emplace(d - den_deg, FieldElem(std::move(p), den0));
    return out;
}

bool FieldElem::contains_jets() const {
    for (const Poly* p : {&num_, &den_})
        for (const auto& [m, c] : p->terms())
            for (const auto& [v, e] : m.f)
                if (vars::is_jet(v)) return true;
    return false;
}

// ---------------------------------------------------------------------------
// rendering

std::string FieldElem::str() const {
    if (num_.is_zero()) return "0";
    if (den_.is_rational()) {
        Rational dv = den_.rational_value();
        Poly scaled = (dv == 1) ? num_ : num_ * Rational(1 / dv);
        return scaled.str();
    }
    // Factor the denominator for display as power-product * (1+beta r^2)^k;
    // it is stored that way by normalize() whenever possible.
    static const Poly sb = [] {
        return Poly(1L) + Poly::variable(vars::beta) * Poly::variable(vars::r, 2);
    }();
    int sb_pow = 0;
    Poly rest = den_;
    while (rest.size() > 1) {
        auto q = poly_try_divexact(rest, sb);
        if (!q) break;
        rest = std::move(*q);
        ++sb_pow;
    }
    std::ostringstream tail;
    if (rest.size() == 1 && !rest.leading_mono().f.empty()) {
        for (const auto& [v, e] : rest.leading_mono().f)
            tail << "*" << var_name(v) << "^-" << e;
    } else if (rest.size() > 1) {
        tail << "*(" << rest.str() << ")^-1";
        sb_pow = 0;  // could not fully factor; print the stored form
        tail.str("");
        tail << "*(" << den_.str() << ")^-1";
    }
    if (sb_pow > 0) {
        tail << "*(" << sb.str() << ")^-" << sb_pow;
    }
    std::string head = (num_.size() == 1) ? num_.str() : "(" + num_.str() + ")";
    std::string t = tail.str();
    if (head == "1") return t.substr(1);
    if (head == "-1") return "-" + t.substr(1);
    return head + t;
}

}  // namespace spinops
