#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace spinops {

// Exact rational scalar. All coefficient arithmetic in the library is exact;
// no floating point appears anywhere in the computational core.
using Rational = mpq_class;

// Base error for the library. Subclasses distinguish recoverable user-facing
// failures (parse errors, bad ids) from algebraic ones (zero denominators).
struct CalcError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Division by an element whose canonical form is zero, or by a zero divisor
// of the coefficient ring (e.g. 1 + eps, whose conjugate product vanishes).
struct ZeroDenominator : CalcError {
    ZeroDenominator() : CalcError("zero denominator") {}
    explicit ZeroDenominator(const std::string& what) : CalcError(what) {}
};

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Canonical text form: "7", "-3/4". Round-trips through rat_parse.
inline std::string rat_str(const Rational& q) { return q.get_str(); }

inline Rational rat_parse(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw CalcError("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

}  // namespace spinops
