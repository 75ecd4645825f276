#pragma once

#include <array>
#include <map>
#include <string>

#include "spinops/op_expr.hpp"

namespace spinops {

// Two-component wavefunction used as an independent evaluation channel:
// a finite sum of terms  g(r) * x1^a x2^b x3^c * chi(spin)  with explicit
// (jet-free) radial coefficients and free position exponents. Operators act
// on these terms exactly — p_i as -i hbar d/dx_i, sigma_k on the spin basis
// — so operator identities can be cross-checked against honest calculus
// that never touches the normal-ordering machinery.
class SpinorFunc {
  public:
    // Key: position exponents (unreduced) plus spin component 0 = up, 1 = down.
    struct Key {
        std::array<int, 3> e{0, 0, 0};
        int spin = 0;
        bool operator<(const Key& o) const {
            if (e != o.e) return e < o.e;
            return spin < o.spin;
        }
        bool operator==(const Key& o) const { return e == o.e && spin == o.spin; }
    };

    SpinorFunc() = default;
    static SpinorFunc basis(int spin);  // chi-up / chi-down

    // Coefficients must be explicit functions: no jets, no position symbols.
    void add_term(std::array<int, 3> e, int spin, const FieldElem& c);

    SpinorFunc operator+(const SpinorFunc& o) const;
    SpinorFunc operator-(const SpinorFunc& o) const;
    SpinorFunc operator-() const;
    SpinorFunc operator*(const FieldElem& c) const;

    // Decides vanishing as a function on R^3: positions are rewritten into
    // the free basis x1^a x2^b x3^c r^{0,1} s^{0,1} over the constants, in
    // which a function is zero exactly when every coefficient is.
    bool is_zero() const;
    bool operator==(const SpinorFunc& o) const { return (*this - o).is_zero(); }
    bool operator!=(const SpinorFunc& o) const { return !(*this == o); }

    const std::map<Key, FieldElem>& terms() const { return t_; }
    std::string str() const;

  private:
    std::map<Key, FieldElem> t_;
};

// Exact action of a normal-ordered operator. Throws CalcError when the
// operator still carries unresolved jet coefficients; substitute a concrete
// potential first.
SpinorFunc apply(const OpExpr& op, const SpinorFunc& f);

}  // namespace spinops
