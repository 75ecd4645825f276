#pragma once

#include <map>
#include <string>
#include <vector>

#include "spinops/poly.hpp"

namespace spinops {

class FieldElem;

// Substitution set: values for named constants and for jet families. Binding
// a jet family binds the whole derivative tower consistently: f -> g implies
// f', f'', ... -> g', g'', ... computed with d_dr and cached.
struct Bindings {
    std::map<Var, FieldElem> consts;
    std::map<int, FieldElem> jets;  // keyed by jet family

    bool binds_const(Var v) const { return consts.count(v) > 0; }
    bool binds_family(int family) const { return jets.count(family) > 0; }
    const FieldElem& jet_deriv(int family, int order) const;

  private:
    mutable std::map<int, std::vector<FieldElem>> deriv_cache_;
};

// Element of the differential coefficient field: a reduced fraction of
// polynomials in the generators. Canonical form guarantees:
//   * numerator and denominator share no polynomial factor,
//   * the denominator is free of i, eps and s (rationalized by conjugates),
//   * the denominator's leading coefficient is 1.
// Equality of canonical forms is literal equality of the two polynomials, so
// zero testing is decidable and exact.
class FieldElem {
  public:
    FieldElem() = default;  // zero
    explicit FieldElem(long c) : num_(c), den_(1L) { if (c == 0) den_ = Poly(1L); }
    explicit FieldElem(const Rational& c) : num_(c), den_(1L) {}
    explicit FieldElem(Poly p) : num_(std::move(p)), den_(1L) {}
    FieldElem(Poly num, Poly den);

    // exp may be negative for invertible generators (anything but x's).
    static FieldElem variable(Var v, int exp = 1);
    static FieldElem jetf(int family, int order = 0);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool is_rational() const { return num_.is_rational() && den_.is_rational(); }
    Rational rational_value() const;

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem& operator+=(const FieldElem& o);
    FieldElem& operator-=(const FieldElem& o);
    FieldElem& operator*=(const FieldElem& o);
    FieldElem inv() const;
    FieldElem pow(int e) const;

    bool operator==(const FieldElem& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    FieldElem conj() const;

    // Derivative with respect to r: d/dr r = 1, d/dr s = beta r / s, jets step
    // up one derivative order, named constants are annihilated.
    FieldElem d_dr() const;

    FieldElem subst(const Bindings& b) const;

    // Splits into hbar-homogeneous pieces keyed by the explicit hbar power.
    // Throws if the denominator is not hbar-homogeneous.
    std::map<int, FieldElem> hbar_components() const;

    bool contains_jets() const;
    bool contains(Var v) const { return num_.contains(v) || den_.contains(v); }

    std::string str() const;

  private:
    void normalize();
    Poly num_;         // zero element: num = 0, den = 1
    Poly den_{Poly(1L)};
};

inline FieldElem fe_i() { return FieldElem::variable(vars::i); }
inline FieldElem fe_hbar() { return FieldElem::variable(vars::hbar); }
inline FieldElem fe_r(int e = 1) { return FieldElem::variable(vars::r, e); }

// Substitutes bound generators in a bare polynomial (used by FieldElem::subst
// and by the operator layer).
FieldElem poly_subst(const Poly& p, const Bindings& b);

}  // namespace spinops
