#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace spinops {

// A generator of the coefficient field, packed into one sortable integer.
//
// Layout (ascending order = canonical variable order used by monomials):
//   0..3      special units: i, eps, sqrtb (s = sqrt(1+beta r^2)), r
//   16..18    physical constants: hbar, alpha, beta
//   32..52    named integration constants: c1..c17, d1, d2, k1, k2
//   64..66    free position variables used only by the function-space oracle
//   >=65536   jets: an unknown radial function together with all of its
//             r-derivatives; family*256 + derivative order.
using Var = std::uint32_t;

namespace vars {

inline constexpr Var i = 0;      // imaginary unit, i^2 -> -1
inline constexpr Var eps = 1;    // sign symbol, eps^2 -> 1
inline constexpr Var s = 2;      // sqrt(1 + beta r^2), s^2 -> 1 + beta r^2
inline constexpr Var r = 3;      // radial coordinate (inverses live in denominators)

inline constexpr Var hbar = 16;
inline constexpr Var alpha = 17;
inline constexpr Var beta = 18;

inline constexpr Var c(int k) { return 32u + static_cast<Var>(k - 1); }   // c1..c17
inline constexpr Var d(int k) { return 49u + static_cast<Var>(k - 1); }   // d1, d2
inline constexpr Var kk(int k) { return 51u + static_cast<Var>(k - 1); }  // k1, k2

// Free Cartesian position symbols for the oracle's function space. They never
// appear in operator coefficients; the oracle uses them for its zero test.
inline constexpr Var ox(int axis) { return 64u + static_cast<Var>(axis); }  // axis 0..2

// Jet families. Family 0 and 1 are the two potentials, families 2..20 are the
// nineteen ansatz coefficient functions f1..f19.
inline constexpr int FAM_V0 = 0;
inline constexpr int FAM_V1 = 1;
inline constexpr int fam_f(int k) { return 1 + k; }  // f1 -> 2, ..., f19 -> 20
inline constexpr int FAM_COUNT = 21;

inline constexpr Var JET_BASE = 65536;

inline constexpr Var jet(int family, int order = 0) {
    return JET_BASE + static_cast<Var>(family) * 256u + static_cast<Var>(order);
}

inline constexpr bool is_jet(Var v) { return v >= JET_BASE; }
inline constexpr int jet_family(Var v) { return static_cast<int>((v - JET_BASE) / 256u); }
inline constexpr int jet_order(Var v) { return static_cast<int>((v - JET_BASE) % 256u); }
inline constexpr bool is_oracle_pos(Var v) { return v >= 64 && v <= 66; }

}  // namespace vars

// Stable printable name; jets carry their derivative order as prime marks
// ("V0", "f15''"). Round-trips through var_from_name for everything except
// the oracle-internal position symbols.
std::string var_name(Var v);

// Inverse of var_name for base names without prime marks ("hbar", "f15", "c3").
std::optional<Var> var_from_name(const std::string& name);

}  // namespace spinops
