#pragma once

#include <array>
#include <vector>

#include "spinops/op_expr.hpp"
#include "spinops/symbol_expr.hpp"

namespace spinops {

// Scalar and vector building blocks, available both for the quantum algebra
// (A = OpExpr) and the commutative symbol algebra (A = SymbolExpr).
template <class A> A dot_xp();         // (x,p)
template <class A> A angmom(int k);    // L_k = (x ^ p)_k
template <class A> A dot_sL();         // (sigma,L)
template <class A> A dot_sx();         // (sigma,x)
template <class A> A dot_sp();         // (sigma,p)
template <class A> A p_squared();      // p^2
template <class A> A L_squared();      // L^2
template <class A> A wedge_xs(int k);  // (x ^ sigma)_k
template <class A> A wedge_ps(int k);  // (p ^ sigma)_k

using VectorOp = std::array<OpExpr, 3>;

// Quantum-side short names.
OpExpr op_x(int k);
OpExpr op_p(int k);
OpExpr op_sigma(int k);
OpExpr op_L(int k);
OpExpr op_J(int k);   // L_k + (hbar/2) sigma_k
OpExpr op_S(int k);   // -(hbar/2) sigma_k + (hbar/r^2) x_k (sigma,x)
OpExpr op_Pi(int k);  // p_k - (hbar/r^2) (x ^ sigma)_k

// Scalar multiple of the identity (radial functions, constants, jets).
OpExpr radial(const FieldElem& g);

// Hamiltonian p^2/2 + V0(r) + V1(r)(sigma,L); the default uses symbolic jets.
OpExpr op_H(const FieldElem& V0, const FieldElem& V1);
OpExpr op_H();

// Average of the ordered products over all distinct orderings of the factor
// list (repeated factors counted once per distinct arrangement).
OpExpr symmetrize(const std::vector<OpExpr>& factors);

// Generator families exactly as printed: family 'T' (two-index tensors,
// k = 1..28) or 'Y' (two-index pseudo-tensors, k = 1..26); axes i, j in 0..2.
// The quantum instantiation multiplies the printed factors left to right; the
// symbol instantiation evaluates the same syntax tree commutatively.
template <class A> A tensor_component(char family, int k, int i, int j);

int family_size(char family);

// The printed factor sequences of one family member (outer index runs over
// the printed summands), used to assemble symmetrized ansatz terms.
std::vector<std::vector<OpExpr>> family_factors(char family, int k, int i, int j);

}  // namespace spinops
