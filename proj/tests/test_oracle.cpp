// Exact wavefunction channel: spin action, momentum as honest calculus,
// the function-zero decision, and cross-checks against operator products.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "spinops/oracle.hpp"

using namespace spinops;

namespace {

FieldElem fv(Var v, int e = 1) { return FieldElem::variable(v, e); }

FieldElem ihbar() { return fv(vars::i) * fv(vars::hbar); }

OpExpr L(int k) {
    int a = (k + 1) % 3, b = (k + 2) % 3;
    return OpExpr::x(a) * OpExpr::p(b) - OpExpr::x(b) * OpExpr::p(a);
}

OpExpr random_op(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, 999);
    auto leaf = [&]() -> FieldElem {
        switch (pick(rng) % 6) {
            case 0: return FieldElem(1L);
            case 1: return FieldElem(-2L);
            case 2: return fv(vars::i);
            case 3: return fv(vars::hbar);
            case 4: return fv(vars::r);
            default: return fv(vars::r, -2);
        }
    };
    OpExpr out;
    int nterms = 1 + pick(rng) % 2;
    for (int t = 0; t < nterms; ++t) {
        OpKey k;
        k.pauli = pick(rng) % 4;
        k.p = {pick(rng) % 2, 0, pick(rng) % 2};
        SpatialPoly c;
        XMono m{{pick(rng) % 2, pick(rng) % 2, 0}};
        c.add_term(m, leaf());
        OpExpr term;
        term.add_term(k, c);
        out += term;
    }
    return out;
}

SpinorFunc random_fn(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, 999);
    auto leaf = [&]() -> FieldElem {
        switch (pick(rng) % 6) {
            case 0: return FieldElem(1L);
            case 1: return fv(vars::i);
            case 2: return fv(vars::hbar);
            case 3: return fv(vars::r);
            case 4: return fv(vars::r, -1);
            default: return fv(vars::s);
        }
    };
    SpinorFunc out;
    int nterms = 1 + pick(rng) % 2;
    for (int t = 0; t < nterms; ++t)
        out.add_term({pick(rng) % 2, pick(rng) % 2, pick(rng) % 2}, pick(rng) % 2, leaf());
    return out;
}

}  // namespace

TEST_CASE("spin action of the Pauli operators") {
    SpinorFunc up = SpinorFunc::basis(0), down = SpinorFunc::basis(1);
    CHECK(apply(OpExpr::sigma(0), up) == down);
    CHECK(apply(OpExpr::sigma(0), down) == up);
    CHECK(apply(OpExpr::sigma(1), up) == down * fv(vars::i));
    CHECK(apply(OpExpr::sigma(1), down) == -(up * fv(vars::i)));
    CHECK(apply(OpExpr::sigma(2), up) == up);
    CHECK(apply(OpExpr::sigma(2), down) == -down);
}

TEST_CASE("momentum differentiates") {
    // p1 applied to x1 r^-2 up  =  -i hbar (r^-2 - 2 x1^2 r^-4) up
    SpinorFunc f;
    f.add_term({1, 0, 0}, 0, fv(vars::r, -2));
    SpinorFunc expect;
    expect.add_term({0, 0, 0}, 0, -ihbar() * fv(vars::r, -2));
    expect.add_term({2, 0, 0}, 0, ihbar() * FieldElem(2L) * fv(vars::r, -4));
    CHECK(apply(OpExpr::p(0), f) == expect);

    // L3 applied to x1 up = i hbar x2 up
    SpinorFunc g;
    g.add_term({1, 0, 0}, 0, FieldElem(1L));
    SpinorFunc expect2;
    expect2.add_term({0, 1, 0}, 0, ihbar());
    CHECK(apply(L(2), g) == expect2);
}

TEST_CASE("function zero test knows the sphere relation") {
    // r^2 - x1^2 - x2^2 - x3^2 == 0
    SpinorFunc f;
    f.add_term({0, 0, 0}, 0, fv(vars::r, 2));
    for (int a = 0; a < 3; ++a) {
        std::array<int, 3> e{0, 0, 0};
        e[a] = 2;
        f.add_term(e, 0, FieldElem(-1L));
    }
    CHECK(f.is_zero());

    // s^2 - 1 - beta r^2 == 0, via coefficients
    SpinorFunc g;
    g.add_term({0, 0, 0}, 0, fv(vars::s) * fv(vars::s) - FieldElem(1L) - fv(vars::beta) * fv(vars::r, 2));
    CHECK(g.is_zero());

    // r x1 - x1 r == 0 but r - x1 != 0, r != 0, up != down
    SpinorFunc h;
    h.add_term({1, 0, 0}, 0, fv(vars::r));
    h.add_term({1, 0, 0}, 0, -fv(vars::r));
    CHECK(h.is_zero());
    SpinorFunc k;
    k.add_term({0, 0, 0}, 0, fv(vars::r));
    k.add_term({1, 0, 0}, 0, FieldElem(-1L));
    CHECK(!k.is_zero());
    CHECK(!SpinorFunc::basis(0).is_zero());
    CHECK(SpinorFunc::basis(0) != SpinorFunc::basis(1));
}

TEST_CASE("coefficients must be explicit functions") {
    SpinorFunc f;
    CHECK_THROWS_AS(f.add_term({0, 0, 0}, 0, FieldElem::jetf(vars::FAM_V1)), CalcError);
    OpExpr op = OpExpr::p(0) * OpExpr(FieldElem::jetf(vars::FAM_V0));
    CHECK_THROWS_AS(apply(op, SpinorFunc::basis(0)), CalcError);
}

TEST_CASE("operator products agree with composed action") {
    std::mt19937_64 rng(20260823);
    for (int t = 0; t < 100; ++t) {
        OpExpr A = random_op(rng);
        OpExpr B = random_op(rng);
        SpinorFunc f = random_fn(rng);
        CHECK(apply(A * B, f) == apply(A, apply(B, f)));
        CHECK(apply(commutator(A, B), f) == apply(A, apply(B, f)) - apply(B, apply(A, f)));
    }
}

TEST_CASE("normal ordering identities hold under the action") {
    OpExpr sl;
    for (int k = 0; k < 3; ++k) sl += OpExpr::sigma(k) * L(k);
    OpExpr l2;
    for (int k = 0; k < 3; ++k) l2 += L(k) * L(k);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 10; ++t) {
        SpinorFunc f = random_fn(rng);
        CHECK(apply(sl * sl, f) == apply(l2 - sl * OpExpr(fv(vars::hbar)), f));
    }
}
