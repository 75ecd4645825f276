#pragma once

#include <array>
#include <map>
#include <string>

#include "spinops/spatial_poly.hpp"

namespace spinops {

// Key of a normal-ordered operator term: a Pauli basis label (0 = identity,
// 1..3 = sigma_k) and momentum exponents. The full term is
//     C(x, r) * p1^n1 p2^n2 p3^n3 * sigma,
// with the position-dependent coefficient on the left of all momenta.
struct OpKey {
    int pauli = 0;
    std::array<int, 3> p{0, 0, 0};
    bool operator<(const OpKey& o) const {
        if (pauli != o.pauli) return pauli < o.pauli;
        return p < o.p;
    }
    bool operator==(const OpKey& o) const { return pauli == o.pauli && p == o.p; }
};

// Quantum operator in normal-ordered canonical form. Products reorder
// momenta past position-dependent coefficients with [p_i, g] = -i hbar d_i g
// and reduce Pauli products with sigma_a sigma_b = delta_ab + i eps_abc
// sigma_c, so equal operators always have identical representations.
class OpExpr {
  public:
    OpExpr() = default;
    explicit OpExpr(FieldElem scalar);
    explicit OpExpr(long c) : OpExpr(FieldElem(c)) {}
    explicit OpExpr(SpatialPoly pos);

    static OpExpr x(int axis);      // axis 0..2
    static OpExpr p(int axis);
    static OpExpr sigma(int axis);

    bool is_zero() const { return t_.empty(); }
    bool operator==(const OpExpr& o) const { return t_ == o.t_; }
    bool operator!=(const OpExpr& o) const { return !(*this == o); }

    OpExpr operator+(const OpExpr& o) const;
    OpExpr operator-(const OpExpr& o) const;
    OpExpr operator-() const;
    OpExpr operator*(const OpExpr& o) const;
    OpExpr operator*(const FieldElem& c) const;
    OpExpr& operator+=(const OpExpr& o);
    OpExpr& operator-=(const OpExpr& o);

    // Hermitian adjoint: reverses products, conjugates coefficients, and
    // re-normal-orders. x_i, p_i, sigma_i are self-adjoint.
    OpExpr adjoint() const;

    // Substitutes constants / jet families in the coefficients only; the
    // operator symbols p and sigma are untouched, so binding hbar -> 0
    // yields the classical (symbol) limit of the explicit hbar's.
    OpExpr specialize(const Bindings& b) const;

    // Grading by hbar where each momentum factor counts one power of hbar
    // on top of explicit powers in the coefficients.
    std::map<int, OpExpr> hbar_components() const;

    void add_term(const OpKey& k, const SpatialPoly& c);
    const std::map<OpKey, SpatialPoly>& terms() const { return t_; }
    size_t size() const { return t_.size(); }
    int max_p_degree() const;
    bool contains_jets() const;

    std::string str() const;

  private:
    std::map<OpKey, SpatialPoly> t_;
};

OpExpr commutator(const OpExpr& a, const OpExpr& b);
OpExpr anticommutator(const OpExpr& a, const OpExpr& b);

}  // namespace spinops
