#pragma once

#include <array>
#include <map>
#include <string>

#include "spinops/field_elem.hpp"

namespace spinops {

// Monomial in the position components x1, x2, x3.
struct XMono {
    std::array<int, 3> e{0, 0, 0};
    bool operator<(const XMono& o) const { return e < o.e; }
    bool operator==(const XMono& o) const { return e == o.e; }
    bool is_unit() const { return e[0] == 0 && e[1] == 0 && e[2] == 0; }
    int total() const { return e[0] + e[1] + e[2]; }
};

// Polynomial in x1, x2, x3 with FieldElem coefficients, canonical modulo the
// sphere relation: x3^2 is always rewritten to r^2 - x1^2 - x2^2, so stored
// x3 exponents never exceed 1. The basis {x1^a x2^b x3^c, c <= 1} is free
// over the coefficient field, which makes equality literal.
class SpatialPoly {
  public:
    SpatialPoly() = default;
    explicit SpatialPoly(FieldElem c);
    explicit SpatialPoly(long c) : SpatialPoly(FieldElem(c)) {}
    static SpatialPoly x(int axis, int exp = 1);  // axis 0..2

    bool is_zero() const { return t_.empty(); }
    bool operator==(const SpatialPoly& o) const { return t_ == o.t_; }
    bool operator!=(const SpatialPoly& o) const { return !(*this == o); }

    SpatialPoly operator+(const SpatialPoly& o) const;
    SpatialPoly operator-(const SpatialPoly& o) const;
    SpatialPoly operator-() const;
    SpatialPoly operator*(const SpatialPoly& o) const;
    SpatialPoly operator*(const FieldElem& c) const;
    SpatialPoly& operator+=(const SpatialPoly& o);
    SpatialPoly& operator-=(const SpatialPoly& o);

    // Partial derivative along an axis; radial coefficients differentiate via
    // the chain rule d/dx_i g(r) = (x_i / r) g'(r).
    SpatialPoly partial(int axis) const;

    SpatialPoly conj() const;
    SpatialPoly subst(const Bindings& b) const;

    // The coefficient of the unit monomial (zero if absent).
    FieldElem scalar_part() const;
    bool is_scalar() const;  // no positive x powers

    void add_term(XMono m, const FieldElem& c);

    const std::map<XMono, FieldElem>& terms() const { return t_; }
    size_t size() const { return t_.size(); }

    bool contains_jets() const;

    std::string str() const;

  private:
    std::map<XMono, FieldElem> t_;
};

}  // namespace spinops
