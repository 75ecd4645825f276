#include "spinops/op_expr.hpp"

#include <sstream>

namespace spinops {

OpExpr::OpExpr(FieldElem scalar) {
    if (!scalar.is_zero()) t_.emplace(OpKey{}, SpatialPoly(std::move(scalar)));
}

OpExpr::OpExpr(SpatialPoly pos) {
    if (!pos.is_zero()) t_.emplace(OpKey{}, std::move(pos));
}

OpExpr OpExpr::x(int axis) { return OpExpr(SpatialPoly::x(axis)); }

OpExpr OpExpr::p(int axis) {
    OpExpr out;
    OpKey k;
    k.p[static_cast<size_t>(axis)] = 1;
    out.t_.emplace(k, SpatialPoly(1L));
    return out;
}

OpExpr OpExpr::sigma(int axis) {
    OpExpr out;
    OpKey k;
    k.pauli = axis + 1;
    out.t_.emplace(k, SpatialPoly(1L));
    return out;
}

void OpExpr::add_term(const OpKey& k, const SpatialPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

OpExpr OpExpr::operator+(const OpExpr& o) const {
    OpExpr out = *this;
    out += o;
    return out;
}

OpExpr& OpExpr::operator+=(const OpExpr& o) {
    for (const auto& [k, c] : o.t_) add_term(k, c);
    return *this;
}

OpExpr OpExpr::operator-(const OpExpr& o) const {
    OpExpr out = *this;
    out -= o;
    return out;
}

OpExpr& OpExpr::operator-=(const OpExpr& o) {
    for (const auto& [k, c] : o.t_) add_term(k, -c);
    return *this;
}

OpExpr OpExpr::operator-() const {
    OpExpr out;
    for (const auto& [k, c] : t_) out.t_.emplace(k, -c);
    return out;
}

OpExpr OpExpr::operator*(const FieldElem& c) const {
    if (c.is_zero()) return OpExpr{};
    OpExpr out;
    for (const auto& [k, v] : t_) out.add_term(k, v * c);
    return out;
}

namespace {

// sigma_a sigma_b for labels 0..3 (0 = identity): the resulting label plus a
// scalar factor out of {1, i, -i}.
struct PauliProd {
    int label;
    int i_power;   // 0 or 1
    int sign;      // +1 / -1
};

PauliProd pauli_mul(int a, int b) {
    if (a == 0) return {b, 0, 1};
    if (b == 0) return {a, 0, 1};
    if (a == b) return {0, 0, 1};
    // sigma_a sigma_b = i eps_abc sigma_c for distinct a, b in 1..3
    static const int third[4][4] = {{0, 0, 0, 0}, {0, 0, 3, 2}, {0, 3, 0, 1}, {0, 2, 1, 0}};
    int c = third[a][b];
    int eps = ((a == 1 && b == 2) || (a == 2 && b == 3) || (a == 3 && b == 1)) ? 1 : -1;
    return {c, 1, eps};
}

// Moves p1^n1 p2^n2 p3^n3 to the right of the coefficient g, one momentum at
// a time with p_i g = g p_i - i hbar (d_i g). Result: a map from residual
// momentum exponents to coefficients, i.e. p^n g = sum_k C_k p^k.
std::map<std::array<int, 3>, SpatialPoly> shift_p(const std::array<int, 3>& n,
                                                  const SpatialPoly& g) {
    std::map<std::array<int, 3>, SpatialPoly> cur;
    cur.emplace(std::array<int, 3>{0, 0, 0}, g);
    FieldElem mih(Poly{} - Poly::variable(vars::i) * Poly::variable(vars::hbar));
    for (size_t axis = 0; axis < 3; ++axis) {
        for (int rep = 0; rep < n[axis]; ++rep) {
            std::map<std::array<int, 3>, SpatialPoly> next;
            for (const auto& [k, c] : cur) {
                auto up = k;
                up[axis] += 1;
                auto [it1, ins1] = next.try_emplace(up, c);
                if (!ins1) it1->second += c;
                SpatialPoly dc = c.partial(static_cast<int>(axis)) * mih;
                if (!dc.is_zero()) {
                    auto [it2, ins2] = next.try_emplace(k, dc);
                    if (!ins2) it2->second += dc;
                }
            }
            cur = std::move(next);
        }
    }
    return cur;
}

}  // namespace

OpExpr OpExpr::operator*(const OpExpr& o) const {
    OpExpr out;
    FieldElem ivar = fe_i();
    for (const auto& [ka, ca] : t_) {
        for (const auto& [kb, cb] : o.t_) {
            PauliProd pp = pauli_mul(ka.pauli, kb.pauli);
            FieldElem factor(static_cast<long>(pp.sign));
            if (pp.i_power) factor *= ivar;
            auto shifted = shift_p(ka.p, cb);
            for (const auto& [q, cq] : shifted) {
                OpKey k;
                k.pauli = pp.label;
                for (size_t t = 0; t < 3; ++t) k.p[t] = q[t] + kb.p[t];
                SpatialPoly coeff = ca * cq;
                if (!factor.is_one()) coeff = coeff * factor;
                out.add_term(k, coeff);
            }
        }
    }
    return out;
}

OpExpr OpExpr::adjoint() const {
    OpExpr out;
    for (const auto& [k, c] : t_) {
        // (C p^n sigma)^+ = sigma p^n C^*; re-normal-order the momenta.
        auto shifted = shift_p(k.p, c.conj());
        for (const auto& [q, cq] : shifted) {
            OpKey nk;
            nk.pauli = k.pauli;
            nk.p = q;
            out.add_term(nk, cq);
        }
    }
    return out;
}

OpExpr OpExpr::specialize(const Bindings& b) const {
    OpExpr out;
    for (const auto& [k, c] : t_) out.add_term(k, c.subst(b));
    return out;
}

std::map<int, OpExpr> OpExpr::hbar_components() const {
    std::map<int, OpExpr> out;
    for (const auto& [k, c] : t_) {
        int base = k.p[0] + k.p[1] + k.p[2];
        for (const auto& [m, fe] : c.terms()) {
            for (const auto& [d, comp] : fe.hbar_components()) {
                SpatialPoly piece;
                piece.add_term(m, comp);
                out[base + d].add_term(k, piece);
            }
        }
    }
    return out;
}

int OpExpr::max_p_degree() const {
    int d = 0;
    for (const auto& [k, c] : t_) d = std::max(d, k.p[0] + k.p[1] + k.p[2]);
    return d;
}

bool OpExpr::contains_jets() const {
    for (const auto& [k, c] : t_)
        if (c.contains_jets()) return true;
    return false;
}

std::string OpExpr::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : t_) {
        if (!first) os << " + ";
        first = false;
        std::string cs = c.str();
        bool wrap = cs.find(' ') != std::string::npos;
        bool wrote = false;
        bool have_ops = k.pauli != 0 || k.p != std::array<int, 3>{0, 0, 0};
        if (!(have_ops && cs == "1")) {
            os << (wrap ? "(" + cs + ")" : cs);
            wrote = true;
        }
        for (size_t t = 0; t < 3; ++t) {
            if (k.p[t] == 0) continue;
            if (wrote) os << "*";
            os << "p" << (t + 1);
            if (k.p[t] != 1) os << "^" << k.p[t];
            wrote = true;
        }
        if (k.pauli != 0) {
            if (wrote) os << "*";
            os << "sigma" << k.pauli;
        }
    }
    return os.str();
}

OpExpr commutator(const OpExpr& a, const OpExpr& b) { return a * b - b * a; }

OpExpr anticommutator(const OpExpr& a, const OpExpr& b) { return a * b + b * a; }

}  // namespace spinops
