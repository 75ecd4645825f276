#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "spinops/rational.hpp"
#include "spinops/variables.hpp"

namespace spinops {

// Power product of field generators with strictly positive exponents, kept as
// a sorted (var, exp) list. The empty product is the unit monomial.
struct Monomial {
    std::vector<std::pair<Var, int>> f;

    int deg(Var v) const;
    int total_deg() const;
    bool divides(const Monomial& by) const;          // "by | this" componentwise
    Monomial div(const Monomial& by) const;          // requires divisibility
    Monomial mul(const Monomial& other) const;       // plain merge, no rewrites
    bool operator==(const Monomial& o) const { return f == o.f; }
};

// Lexicographic monomial order with smaller var ids more significant.
// It is a proper monomial order (multiplicative, well-founded), which the
// exact-division and pseudo-remainder routines rely on.
struct MonoLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial over the rationals in the field generators.
// Canonical form is maintained on every mutation:
//   i^2 -> -1,  eps^2 -> 1,  s^2 -> 1 + beta r^2,
// so stored exponents of i, eps, s never exceed 1. Exponents are never
// negative; inverse powers of r (and anything else) live in FieldElem
// denominators.
class Poly {
public:
    using Map = std::map<Monomial, Rational, MonoLess>;

    Poly() = default;
    explicit Poly(const Rational& c);
    explicit Poly(long c);
    static Poly variable(Var v, int exp = 1);

    bool is_zero() const { return t_.empty(); }
    bool is_rational() const;  // zero or a single constant term
    // The constant value when is_rational(); throws otherwise.
    Rational rational_value() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& c) const;
    Poly pow(unsigned e) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);

    bool operator==(const Poly& o) const { return t_ == o.t_; }

    // Complex conjugation: flips the sign of every term with an odd power
    // of i. Every other generator is real.
    Poly conj() const;

    int degree(Var v) const;
    bool contains(Var v) const;
    std::set<Var> variables() const;
    bool has_any_of(Var a, Var b, Var c) const;

    // Coefficient of v^k viewed as a polynomial in the remaining variables.
    Poly coeff_of(Var v, int k) const;

    // Leading data under the monomial order.
    const Monomial& leading_mono() const;
    const Rational& leading_coeff() const;

    const Map& terms() const { return t_; }
    size_t size() const { return t_.size(); }

    // Inserts c * m with the rewrite rules applied; merges into the map.
    void add_term(Monomial m, Rational c);

    std::string str() const;  // canonical, parse-round-trippable rendering

private:
    void plain_insert(Monomial m, Rational c);
    Map t_;
};

// gcd up to a rational unit; the result is primitive with positive leading
// coefficient. Implemented as a primitive pseudo-remainder sequence, recursing
// over variables. Intended for the small denominator var-sets that arise here.
Poly poly_gcd(const Poly& a, const Poly& b);

// Exact multivariate division; throws CalcError if b does not divide a.
Poly poly_divexact(const Poly& a, const Poly& b);

// As poly_divexact, but reports failure instead of throwing.
std::optional<Poly> poly_try_divexact(const Poly& a, const Poly& b);

}  // namespace spinops
