#pragma once

#include <array>
#include <map>
#include <string>

#include "spinops/op_expr.hpp"

namespace spinops {

// Commutative counterpart of OpExpr: position coefficients, momentum symbols
// and Pauli symbols all commute, and no derivative corrections appear in
// products. This is the algebra in which inter-family linear relations and
// syzygies are stated; every family element is at most linear in sigma, so a
// product that would create a sigma * sigma term throws instead of guessing
// a reduction.
class SymbolExpr {
  public:
    SymbolExpr() = default;
    explicit SymbolExpr(FieldElem scalar);
    explicit SymbolExpr(long c) : SymbolExpr(FieldElem(c)) {}
    explicit SymbolExpr(SpatialPoly pos);

    static SymbolExpr x(int axis);      // axis 0..2
    static SymbolExpr p(int axis);
    static SymbolExpr sigma(int axis);

    bool is_zero() const { return t_.empty(); }
    bool operator==(const SymbolExpr& o) const { return t_ == o.t_; }
    bool operator!=(const SymbolExpr& o) const { return !(*this == o); }

    SymbolExpr operator+(const SymbolExpr& o) const;
    SymbolExpr operator-(const SymbolExpr& o) const;
    SymbolExpr operator-() const;
    SymbolExpr operator*(const SymbolExpr& o) const;
    SymbolExpr operator*(const FieldElem& c) const;
    SymbolExpr& operator+=(const SymbolExpr& o);
    SymbolExpr& operator-=(const SymbolExpr& o);

    void add_term(const OpKey& k, const SpatialPoly& c);
    const std::map<OpKey, SpatialPoly>& terms() const { return t_; }
    size_t size() const { return t_.size(); }

    std::string str() const;

  private:
    std::map<OpKey, SpatialPoly> t_;
};

}  // namespace spinops
