// Exact arithmetic in the coefficient field: canonical forms, rewrite rules,
// rationalized denominators, differentiation and substitution.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "spinops/field_elem.hpp"

using namespace spinops;

namespace {

FieldElem fv(Var v, int e = 1) { return FieldElem::variable(v, e); }

// Random elements drawn from a small generator pool combined with +, -, *.
// Inversion is exercised separately (random sums are too often reducible).
FieldElem random_elem(std::mt19937_64& rng, int depth = 3) {
    std::uniform_int_distribution<int> pick(0, 9);
    if (depth == 0) {
        switch (pick(rng)) {
            case 0: return FieldElem(rat(pick(rng) - 4));
            case 1: return fv(vars::r);
            case 2: return fv(vars::s);
            case 3: return fv(vars::i);
            case 4: return fv(vars::eps);
            case 5: return fv(vars::hbar);
            case 6: return fv(vars::beta);
            case 7: return fv(vars::c(1));
            case 8: return FieldElem::jetf(vars::FAM_V1);
            default: return fv(vars::r, -1);
        }
    }
    FieldElem a = random_elem(rng, depth - 1);
    FieldElem b = random_elem(rng, depth - 1);
    switch (pick(rng) % 3) {
        case 0: return a + b;
        case 1: return a - b;
        default: return a * b;
    }
}

}  // namespace

TEST_CASE("rewrite rules close the squares") {
    CHECK(Poly::variable(vars::i, 2) == Poly(-1L));
    CHECK(Poly::variable(vars::i, 5) == Poly::variable(vars::i));
    CHECK(Poly::variable(vars::eps, 2) == Poly(1L));
    Poly s2 = Poly::variable(vars::s, 2);
    Poly expect = Poly(1L) + Poly::variable(vars::beta) * Poly::variable(vars::r, 2);
    CHECK(s2 == expect);
    // s^3 keeps one s and expands the even part
    CHECK(Poly::variable(vars::s, 3) == expect * Poly::variable(vars::s));
}

TEST_CASE("canonical fractions") {
    // (s^2 - 1) / r^2 == beta
    FieldElem e = (fv(vars::s) * fv(vars::s) - FieldElem(1L)) / fv(vars::r, 2);
    CHECK(e == fv(vars::beta));

    // eps^2 hbar + i^2 hbar == 0
    FieldElem z = fv(vars::eps) * fv(vars::eps) * fv(vars::hbar) +
                  fv(vars::i) * fv(vars::i) * fv(vars::hbar);
    CHECK(z.is_zero());

    // V1 + V1 - 2 V1 == 0
    FieldElem v1 = FieldElem::jetf(vars::FAM_V1);
    CHECK((v1 + v1 - v1 * FieldElem(2L)).is_zero());

    // (1 + beta r^2)^2 / s^2 reduces to 1 + beta r^2
    FieldElem sb2 = FieldElem(1L) + fv(vars::beta) * fv(vars::r, 2);
    CHECK(sb2 * sb2 / (fv(vars::s) * fv(vars::s)) == sb2);
}

TEST_CASE("denominators are rationalized by conjugates") {
    // 1/s = s/(1+beta r^2)
    FieldElem inv_s = fv(vars::s).inv();
    FieldElem expect = fv(vars::s) / (FieldElem(1L) + fv(vars::beta) * fv(vars::r, 2));
    CHECK(inv_s == expect);

    // 1/(-eps + s) = (eps + s)/(beta r^2)
    FieldElem den = fv(vars::s) - fv(vars::eps);
    FieldElem inv = den.inv();
    CHECK((inv * den).is_one());
    FieldElem expect2 = (fv(vars::eps) + fv(vars::s)) / (fv(vars::beta) * fv(vars::r, 2));
    CHECK(inv == expect2);

    // 1/(1+i) is fine, 1/(1+eps) hits a zero divisor
    FieldElem ci = (FieldElem(1L) + fv(vars::i)).inv();
    CHECK((ci * (FieldElem(1L) + fv(vars::i))).is_one());
    CHECK_THROWS_AS((FieldElem(1L) + fv(vars::eps)).inv(), ZeroDenominator);
    CHECK_THROWS_AS(FieldElem(1L) / FieldElem{}, ZeroDenominator);
}

TEST_CASE("derivative of the basic generators") {
    CHECK(fv(vars::r, 2).d_dr() == fv(vars::r) * FieldElem(2L));
    CHECK(fv(vars::r, -2).d_dr() == fv(vars::r, -3) * FieldElem(-2L));
    // d/dr s = beta r / s
    CHECK(fv(vars::s).d_dr() == fv(vars::beta) * fv(vars::r) / fv(vars::s));
    // jets chain up one order
    FieldElem v1 = FieldElem::jetf(vars::FAM_V1);
    FieldElem v1p = FieldElem::jetf(vars::FAM_V1, 1);
    CHECK((v1 * fv(vars::r)).d_dr() == v1 + fv(vars::r) * v1p);
    CHECK(fv(vars::hbar).d_dr().is_zero());
}

TEST_CASE("derivative is a derivation (random Leibniz check)") {
    std::mt19937_64 rng(20260823);
    for (int t = 0; t < 60; ++t) {
        FieldElem a = random_elem(rng);
        FieldElem b = random_elem(rng);
        CHECK((a * b).d_dr() == a.d_dr() * b + a * b.d_dr());
    }
}

TEST_CASE("field laws on random elements") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 60; ++t) {
        FieldElem a = random_elem(rng);
        FieldElem b = random_elem(rng);
        FieldElem c = random_elem(rng);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a - a == FieldElem{});
        if (!a.is_zero()) CHECK((a * a.inv()).is_one());
    }
}

TEST_CASE("substitution binds jet towers consistently") {
    Bindings b;
    // V1 -> 2 hbar / r^2
    b.jets.emplace(vars::FAM_V1, fv(vars::hbar) * FieldElem(2L) / fv(vars::r, 2));
    FieldElem v1p = FieldElem::jetf(vars::FAM_V1, 1);
    FieldElem expect = fv(vars::hbar) * FieldElem(-4L) / fv(vars::r, 3);
    CHECK(v1p.subst(b) == expect);

    // unbound generators pass through
    FieldElem mix = FieldElem::jetf(vars::FAM_V1) * fv(vars::c(2));
    CHECK(mix.subst(b) == fv(vars::c(2)) * fv(vars::hbar) * FieldElem(2L) / fv(vars::r, 2));

    Bindings zero;
    zero.consts.emplace(vars::c(1), FieldElem{});
    CHECK_THROWS_AS(fv(vars::c(1), -1).subst(zero), ZeroDenominator);
}

TEST_CASE("hbar grading of coefficients") {
    FieldElem e = (fv(vars::hbar, 2) * fv(vars::alpha) + fv(vars::hbar)) / fv(vars::r);
    auto comps = e.hbar_components();
    REQUIRE(comps.size() == 2);
    CHECK(comps.at(1) == fv(vars::r, -1));
    CHECK(comps.at(2) == fv(vars::alpha) / fv(vars::r));
    // hbar-free element sits in grade 0
    CHECK(fv(vars::alpha).hbar_components().at(0) == fv(vars::alpha));
}

TEST_CASE("conjugation flips i") {
    FieldElem e = fv(vars::i) * fv(vars::hbar) + fv(vars::r);
    CHECK(e.conj() == -fv(vars::i) * fv(vars::hbar) + fv(vars::r));
    std::mt19937_64 rng(99);
    for (int t = 0; t < 40; ++t) {
        FieldElem a = random_elem(rng);
        CHECK(a.conj().conj() == a);
    }
}

TEST_CASE("rendering is stable and readable") {
    FieldElem e = fv(vars::hbar) * FieldElem(2L) / fv(vars::r, 2);
    CHECK(e.str() == "2*hbar*r^-2");
    CHECK(FieldElem{}.str() == "0");
    FieldElem q = FieldElem(1L) / (FieldElem(1L) + fv(vars::beta) * fv(vars::r, 2));
    CHECK(q.str() == "(beta*r^2 + 1)^-1");
    FieldElem m = fv(vars::hbar) / (fv(vars::r, 2) * (FieldElem(1L) + fv(vars::beta) * fv(vars::r, 2)));
    CHECK(m.str() == "hbar*r^-2*(beta*r^2 + 1)^-1");
}
