#include "spinops/oracle.hpp"

#include <sstream>

namespace spinops {

SpinorFunc SpinorFunc::basis(int spin) {
    SpinorFunc f;
    f.add_term({0, 0, 0}, spin, FieldElem(1L));
    return f;
}

void SpinorFunc::add_term(std::array<int, 3> e, int spin, const FieldElem& c) {
    if (c.is_zero()) return;
    if (c.contains_jets()) throw CalcError("wavefunction coefficients must be explicit (jet present)");
    for (const Poly* p : {&c.num(), &c.den()})
        for (const auto& [m, q] : p->terms())
            for (const auto& [v, ex] : m.f)
                if (vars::is_oracle_pos(v))
                    throw CalcError("wavefunction coefficients must not contain position symbols");
    Key k{e, spin};
    auto it = t_.find(k);
    if (it == t_.end()) {
        t_.emplace(k, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) t_.erase(it);
}

SpinorFunc SpinorFunc::operator+(const SpinorFunc& o) const {
    SpinorFunc out = *this;
    for (const auto& [k, c] : o.t_) out.add_term(k.e, k.spin, c);
    return out;
}

SpinorFunc SpinorFunc::operator-(const SpinorFunc& o) const { return *this + (-o); }

SpinorFunc SpinorFunc::operator-() const {
    SpinorFunc out;
    for (const auto& [k, c] : t_) out.t_.emplace(k, -c);
    return out;
}

SpinorFunc SpinorFunc::operator*(const FieldElem& c) const {
    SpinorFunc out;
    if (c.is_zero()) return out;
    for (const auto& [k, g] : t_) out.add_term(k.e, k.spin, g * c);
    return out;
}

// Rewrites r^2 -> x1^2 + x2^2 + x3^2 until every r exponent is 0 or 1. The
// result lives in the free basis over the constants: x1, x2, x3 are
// algebraically independent, r has degree 2 over them, and s has degree 2
// over both, so a vanishing function has all coefficients zero.
static Poly radial_reduce(const Poly& p) {
    Poly xsq;
    for (int a = 0; a < 3; ++a)
        xsq += Poly::variable(vars::ox(a), 2);
    Poly out;
    for (const auto& [m, c] : p.terms()) {
        int er = m.deg(vars::r);
        if (er <= 1) {
            Monomial mm = m;
            out.add_term(std::move(mm), c);
            continue;
        }
        Monomial rest;
        for (const auto& [v, e] : m.f)
            if (v != vars::r) rest.f.emplace_back(v, e);
        if (er % 2) rest.f.emplace_back(vars::r, 1);  // keeps var order: r < ox
        std::sort(rest.f.begin(), rest.f.end());
        Poly base;
        base.add_term(std::move(rest), c);
        out += base * xsq.pow(static_cast<unsigned>(er / 2));
    }
    return out;
}

bool SpinorFunc::is_zero() const {
    if (t_.empty()) return true;
    for (int spin = 0; spin < 2; ++spin) {
        // Clear denominators spin-wise by accumulating over a common one;
        // denominators are nonzero radial functions, so they never hide a zero.
        FieldElem acc;
        for (const auto& [k, c] : t_) {
            if (k.spin != spin) continue;
            FieldElem mono(1L);
            for (int a = 0; a < 3; ++a)
                if (k.e[a] > 0) mono = mono * FieldElem::variable(vars::ox(a), k.e[a]);
            acc = acc + c * mono;
        }
        if (acc.is_zero()) continue;
        if (!radial_reduce(acc.num()).is_zero()) return false;
    }
    return true;
}

std::string SpinorFunc::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : t_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        static const char* nm[3] = {"x1", "x2", "x3"};
        for (int a = 0; a < 3; ++a) {
            if (k.e[a] == 0) continue;
            os << "*" << nm[a];
            if (k.e[a] > 1) os << "^" << k.e[a];
        }
        os << (k.spin == 0 ? "*up" : "*down");
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// operator action

namespace {

// sigma_k on (coeff, spin): returns the image coefficient and spin.
std::pair<FieldElem, int> sigma_action(int axis, const FieldElem& c, int spin) {
    FieldElem im = FieldElem::variable(vars::i);
    switch (axis) {
        case 0: return {c, 1 - spin};
        case 1: return {spin == 0 ? c * im : -(c * im), 1 - spin};
        default: return {spin == 0 ? c : -c, spin};
    }
}

// p_axis = -i hbar d/dx_axis acting termwise: the power rule plus the radial
// chain rule through g(r).
SpinorFunc momentum_action(int axis, const SpinorFunc& f) {
    FieldElem mih = -(FieldElem::variable(vars::i) * FieldElem::variable(vars::hbar));
    SpinorFunc out;
    for (const auto& [k, g] : f.terms()) {
        if (k.e[axis] > 0) {
            auto e = k.e;
            e[axis] -= 1;
            out.add_term(e, k.spin, g * FieldElem(static_cast<long>(k.e[axis])) * mih);
        }
        FieldElem gr = g.d_dr();
        if (!gr.is_zero()) {
            auto e = k.e;
            e[axis] += 1;
            out.add_term(e, k.spin, gr / FieldElem::variable(vars::r) * mih);
        }
    }
    return out;
}

}  // namespace

SpinorFunc apply(const OpExpr& op, const SpinorFunc& f) {
    if (op.contains_jets())
        throw CalcError("operator carries unresolved jets; substitute a potential first");
    SpinorFunc out;
    for (const auto& [key, coeff] : op.terms()) {
        // Rightmost factor first: sigma, then the momenta, then the position
        // coefficient on the left.
        SpinorFunc cur;
        if (key.pauli == 0) {
            cur = f;
        } else {
            for (const auto& [k, g] : f.terms()) {
                auto [c2, spin2] = sigma_action(key.pauli - 1, g, k.spin);
                cur.add_term(k.e, spin2, c2);
            }
        }
        for (int axis = 0; axis < 3; ++axis)
            for (int n = 0; n < key.p[axis]; ++n) cur = momentum_action(axis, cur);
        for (const auto& [xm, h] : coeff.terms()) {
            for (const auto& [k, g] : cur.terms()) {
                auto e = k.e;
                for (int a = 0; a < 3; ++a) e[a] += xm.e[a];
                out.add_term(e, k.spin, g * h);
            }
        }
    }
    return out;
}

}  // namespace spinops
