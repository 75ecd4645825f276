#include "spinops/symbol_expr.hpp"

#include <sstream>

namespace spinops {

SymbolExpr::SymbolExpr(FieldElem scalar) {
    if (!scalar.is_zero()) t_.emplace(OpKey{}, SpatialPoly(std::move(scalar)));
}

SymbolExpr::SymbolExpr(SpatialPoly pos) {
    if (!pos.is_zero()) t_.emplace(OpKey{}, std::move(pos));
}

SymbolExpr SymbolExpr::x(int axis) { return SymbolExpr(SpatialPoly::x(axis)); }

SymbolExpr SymbolExpr::p(int axis) {
    SymbolExpr out;
    OpKey k;
    k.p[static_cast<size_t>(axis)] = 1;
    out.t_.emplace(k, SpatialPoly(1L));
    return out;
}

SymbolExpr SymbolExpr::sigma(int axis) {
    SymbolExpr out;
    OpKey k;
    k.pauli = axis + 1;
    out.t_.emplace(k, SpatialPoly(1L));
    return out;
}

void SymbolExpr::add_term(const OpKey& k, const SpatialPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

SymbolExpr SymbolExpr::operator+(const SymbolExpr& o) const {
    SymbolExpr out = *this;
    out += o;
    return out;
}

SymbolExpr& SymbolExpr::operator+=(const SymbolExpr& o) {
    for (const auto& [k, c] : o.t_) add_term(k, c);
    return *this;
}

SymbolExpr SymbolExpr::operator-(const SymbolExpr& o) const {
    SymbolExpr out = *this;
    out -= o;
    return out;
}

SymbolExpr& SymbolExpr::operator-=(const SymbolExpr& o) {
    for (const auto& [k, c] : o.t_) add_term(k, -c);
    return *this;
}

SymbolExpr SymbolExpr::operator-() const {
    SymbolExpr out;
    for (const auto& [k, c] : t_) out.t_.emplace(k, -c);
    return out;
}

SymbolExpr SymbolExpr::operator*(const FieldElem& c) const {
    if (c.is_zero()) return SymbolExpr{};
    SymbolExpr out;
    for (const auto& [k, v] : t_) out.add_term(k, v * c);
    return out;
}

SymbolExpr SymbolExpr::operator*(const SymbolExpr& o) const {
    SymbolExpr out;
    for (const auto& [ka, ca] : t_) {
        for (const auto& [kb, cb] : o.t_) {
            if (ka.pauli != 0 && kb.pauli != 0)
                throw CalcError("symbol product exceeds degree one in sigma");
            OpKey k;
            k.pauli = ka.pauli + kb.pauli;
            for (size_t t = 0; t < 3; ++t) k.p[t] = ka.p[t] + kb.p[t];
            out.add_term(k, ca * cb);
        }
    }
    return out;
}

std::string SymbolExpr::str() const {
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

}  // namespace spinops
