#include "spinops/spatial_poly.hpp"

#include <sstream>

namespace spinops {

SpatialPoly::SpatialPoly(FieldElem c) {
    if (!c.is_zero()) t_.emplace(XMono{}, std::move(c));
}

SpatialPoly SpatialPoly::x(int axis, int exp) {
    SpatialPoly p;
    XMono m;
    m.e[static_cast<size_t>(axis)] = exp;
    p.add_term(m, FieldElem(1L));
    return p;
}

void SpatialPoly::add_term(XMono m, const FieldElem& c) {
    if (c.is_zero()) return;
    if (m.e[2] >= 2) {
        // x3^(2q+d) -> (r^2 - x1^2 - x2^2)^q x3^d, expanded multinomially.
        int q = m.e[2] / 2, d = m.e[2] % 2;
        mpz_class qfact;
        mpz_fac_ui(qfact.get_mpz_t(), static_cast<unsigned long>(q));
        for (int v = 0; v <= q; ++v) {
            for (int w = 0; w <= q - v; ++w) {
                int u = q - v - w;
                mpz_class uf, vf, wf;
                mpz_fac_ui(uf.get_mpz_t(), static_cast<unsigned long>(u));
                mpz_fac_ui(vf.get_mpz_t(), static_cast<unsigned long>(v));
                mpz_fac_ui(wf.get_mpz_t(), static_cast<unsigned long>(w));
                Rational mult{qfact / (uf * vf * wf)};
                if ((v + w) & 1) mult = -mult;
                XMono mm;
                mm.e = {m.e[0] + 2 * v, m.e[1] + 2 * w, d};
                add_term(mm, c * FieldElem(Poly::variable(vars::r, 2 * u) * mult));
            }
        }
        return;
    }
    auto [it, inserted] = t_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

SpatialPoly SpatialPoly::operator+(const SpatialPoly& o) const {
    SpatialPoly out = *this;
    out += o;
    return out;
}

SpatialPoly& SpatialPoly::operator+=(const SpatialPoly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

SpatialPoly SpatialPoly::operator-(const SpatialPoly& o) const {
    SpatialPoly out = *this;
    out -= o;
    return out;
}

SpatialPoly& SpatialPoly::operator-=(const SpatialPoly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

SpatialPoly SpatialPoly::operator-() const {
    SpatialPoly out;
    for (const auto& [m, c] : t_) out.t_.emplace(m, -c);
    return out;
}

SpatialPoly SpatialPoly::operator*(const SpatialPoly& o) const {
    SpatialPoly out;
    for (const auto& [ma, ca] : t_) {
        for (const auto& [mb, cb] : o.t_) {
            XMono m;
            for (size_t k = 0; k < 3; ++k) m.e[k] = ma.e[k] + mb.e[k];
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

SpatialPoly SpatialPoly::operator*(const FieldElem& c) const {
    if (c.is_zero()) return SpatialPoly{};
    SpatialPoly out;
    for (const auto& [m, k] : t_) out.add_term(m, k * c);
    return out;
}

SpatialPoly SpatialPoly::partial(int axis) const {
    SpatialPoly out;
    auto ax = static_cast<size_t>(axis);
    for (const auto& [m, g] : t_) {
        if (m.e[ax] > 0) {
            XMono down = m;
            down.e[ax] -= 1;
            out.add_term(down, g * FieldElem(static_cast<long>(m.e[ax])));
        }
        FieldElem chain = g.d_dr();
        if (!chain.is_zero()) {
            XMono up = m;
            up.e[ax] += 1;
            out.add_term(up, chain * fe_r(-1));
        }
    }
    return out;
}

SpatialPoly SpatialPoly::conj() const {
    SpatialPoly out;
    for (const auto& [m, c] : t_) out.t_.emplace(m, c.conj());
    return out;
}

SpatialPoly SpatialPoly::subst(const Bindings& b) const {
    SpatialPoly out;
    for (const auto& [m, c] : t_) out.add_term(m, c.subst(b));
    return out;
}

FieldElem SpatialPoly::scalar_part() const {
    auto it = t_.find(XMono{});
    return it == t_.end() ? FieldElem{} : it->second;
}

bool SpatialPoly::is_scalar() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_unit());
}

bool SpatialPoly::contains_jets() const {
    for (const auto& [m, c] : t_)
        if (c.contains_jets()) return true;
    return false;
}

std::string SpatialPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : t_) {
        if (!first) os << " + ";
        first = false;
        std::string cs = c.str();
        bool wrap = cs.find(' ') != std::string::npos;
        bool unit_coeff = c.is_one();
        bool wrote = false;
        if (!unit_coeff || m.is_unit()) {
            os << (wrap ? "(" + cs + ")" : cs);
            wrote = true;
        }
        for (size_t k = 0; k < 3; ++k) {
            if (m.e[k] == 0) continue;
            if (wrote) os << "*";
            os << "x" << (k + 1);
            if (m.e[k] != 1) os << "^" << m.e[k];
            wrote = true;
        }
    }
    return os.str();
}

}  // namespace spinops
