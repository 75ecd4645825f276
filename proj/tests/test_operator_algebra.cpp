// Normal-ordered operator arithmetic: canonical products, commutators,
// adjoints, grading, and the algebraic laws they must satisfy.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "spinops/op_expr.hpp"

using namespace spinops;

namespace {

FieldElem fv(Var v, int e = 1) { return FieldElem::variable(v, e); }

FieldElem ihbar() { return fv(vars::i) * fv(vars::hbar); }

OpExpr scal(const FieldElem& c) { return OpExpr(c); }

// Angular momentum components built from first principles.
OpExpr L(int k) {
    int a = (k + 1) % 3, b = (k + 2) % 3;
    return OpExpr::x(a) * OpExpr::p(b) - OpExpr::x(b) * OpExpr::p(a);
}

OpExpr dot_sigma_L() {
    OpExpr out;
    for (int k = 0; k < 3; ++k) out += OpExpr::sigma(k) * L(k);
    return out;
}

OpExpr L_squared() {
    OpExpr out;
    for (int k = 0; k < 3; ++k) out += L(k) * L(k);
    return out;
}

// Random operators: a few normal-ordered terms with small momenta and
// position coefficients drawn from a pool that exercises radial functions.
OpExpr random_op(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, 999);
    auto leaf = [&]() -> FieldElem {
        switch (pick(rng) % 7) {
            case 0: return FieldElem(1L);
            case 1: return FieldElem(2L);
            case 2: return fv(vars::i);
            case 3: return fv(vars::hbar);
            case 4: return fv(vars::r);
            case 5: return fv(vars::r, -1);
            default: return FieldElem::jetf(vars::FAM_V1);
        }
    };
    OpExpr out;
    int nterms = 1 + pick(rng) % 2;
    for (int t = 0; t < nterms; ++t) {
        OpKey k;
        k.pauli = pick(rng) % 4;
        k.p = {pick(rng) % 2, pick(rng) % 2, 0};
        SpatialPoly c;
        XMono m{{pick(rng) % 2, 0, pick(rng) % 2}};
        c.add_term(m, leaf());
        OpExpr term;
        term.add_term(k, c);
        out += term;
    }
    return out;
}

}  // namespace

TEST_CASE("products are normal ordered") {
    // p1 x1 = x1 p1 - i hbar
    OpExpr lhs = OpExpr::p(0) * OpExpr::x(0);
    OpExpr rhs = OpExpr::x(0) * OpExpr::p(0) - scal(ihbar());
    CHECK(lhs == rhs);
    REQUIRE(lhs.size() == 2);

    // and the representation really keeps coefficients left of momenta
    OpKey kp;
    kp.p = {1, 0, 0};
    CHECK(lhs.terms().at(kp) == SpatialPoly::x(0));
    CHECK(lhs.terms().at(OpKey{}).scalar_part() == -ihbar());
}

TEST_CASE("Pauli products reduce") {
    CHECK(OpExpr::sigma(0) * OpExpr::sigma(1) == OpExpr::sigma(2) * scal(fv(vars::i)));
    CHECK(OpExpr::sigma(1) * OpExpr::sigma(0) == -(OpExpr::sigma(2) * scal(fv(vars::i))));
    CHECK(OpExpr::sigma(0) * OpExpr::sigma(0) == OpExpr(1L));
    CHECK(anticommutator(OpExpr::sigma(0), OpExpr::sigma(1)).is_zero());
    CHECK(anticommutator(OpExpr::sigma(2), OpExpr::sigma(2)) == OpExpr(2L));
}

TEST_CASE("canonical commutators") {
    CHECK(commutator(OpExpr::x(0), OpExpr::p(0)) == scal(ihbar()));
    CHECK(commutator(OpExpr::x(0), OpExpr::p(1)).is_zero());
    CHECK(commutator(OpExpr::x(0), OpExpr::x(1)).is_zero());
    CHECK(commutator(OpExpr::p(0), OpExpr::p(1)).is_zero());

    // [p_i, g(r)] = -i hbar (x_i / r) g'
    FieldElem g = FieldElem::jetf(vars::FAM_V1);
    FieldElem gp = FieldElem::jetf(vars::FAM_V1, 1);
    OpExpr lhs = commutator(OpExpr::p(0), scal(g));
    SpatialPoly expect;
    expect.add_term(XMono{{1, 0, 0}}, -ihbar() * gp / fv(vars::r));
    CHECK(lhs == OpExpr(expect));
}

TEST_CASE("spin-orbit square identity") {
    OpExpr sl = dot_sigma_L();
    CHECK(sl * sl == L_squared() - sl * scal(fv(vars::hbar)));
}

TEST_CASE("angular momentum algebra") {
    for (int a = 0; a < 3; ++a) {
        int b = (a + 1) % 3, c = (a + 2) % 3;
        CHECK(commutator(L(a), L(b)) == L(c) * scal(ihbar()));
        // L_a commutes with r^2 = x1^2 + x2^2 + x3^2
        OpExpr r2;
        for (int k = 0; k < 3; ++k) r2 += OpExpr::x(k) * OpExpr::x(k);
        CHECK(commutator(L(a), r2).is_zero());
    }
}

TEST_CASE("adjoints") {
    // (x1 p1)^+ = p1 x1 = x1 p1 - i hbar
    OpExpr a = OpExpr::x(0) * OpExpr::p(0);
    CHECK(a.adjoint() == a - scal(ihbar()));
    // x, p, sigma and L are self-adjoint
    for (int k = 0; k < 3; ++k) {
        CHECK(OpExpr::x(k).adjoint() == OpExpr::x(k));
        CHECK(OpExpr::p(k).adjoint() == OpExpr::p(k));
        CHECK(OpExpr::sigma(k).adjoint() == OpExpr::sigma(k));
        CHECK(L(k).adjoint() == L(k));
    }
    // i hbar is anti-self-adjoint
    CHECK(scal(ihbar()).adjoint() == -scal(ihbar()));
}

TEST_CASE("algebraic laws on random operators") {
    std::mt19937_64 rng(20260823);
    for (int t = 0; t < 100; ++t) {
        OpExpr A = random_op(rng);
        OpExpr B = random_op(rng);
        OpExpr C = random_op(rng);
        CHECK((A * B) * C == A * (B * C));
        CHECK((A + B) * C == A * C + B * C);
        // commutator identities
        OpExpr jac = commutator(commutator(A, B), C) + commutator(commutator(B, C), A) +
                     commutator(commutator(C, A), B);
        CHECK(jac.is_zero());
        CHECK(commutator(A, B * C) == commutator(A, B) * C + B * commutator(A, C));
        // adjoint is an involutive anti-homomorphism
        CHECK(A.adjoint().adjoint() == A);
        CHECK((A * B).adjoint() == B.adjoint() * A.adjoint());
    }
}

TEST_CASE("hbar grading counts momenta") {
    OpExpr a = OpExpr::x(0) * OpExpr::p(0) + scal(ihbar());
    auto comps = a.hbar_components();
    REQUIRE(comps.size() == 1);
    CHECK(comps.at(1) == OpExpr::x(0) * OpExpr::p(0) + scal(fv(vars::i)));

    OpExpr h = OpExpr::p(0) * OpExpr::p(0) + scal(fv(vars::hbar, 2) * fv(vars::r, -2));
    auto hc = h.hbar_components();
    REQUIRE(hc.size() == 1);
    CHECK(hc.at(2) == OpExpr::p(0) * OpExpr::p(0) + scal(fv(vars::r, -2)));
}

TEST_CASE("specialization binds coefficients only") {
    FieldElem v1 = FieldElem::jetf(vars::FAM_V1);
    OpExpr a = OpExpr::sigma(2) * OpExpr::p(0) * scal(v1);
    Bindings b;
    b.jets.emplace(vars::FAM_V1, fv(vars::hbar) * FieldElem(2L) / fv(vars::r, 2));
    OpExpr spec = a.specialize(b);
    OpExpr expect = OpExpr::sigma(2) * OpExpr::p(0) * scal(fv(vars::hbar) * FieldElem(2L) / fv(vars::r, 2));
    CHECK(spec == expect);

    // binding hbar -> 0 keeps operator symbols intact
    Bindings h0;
    h0.consts.emplace(vars::hbar, FieldElem{});
    OpExpr c = OpExpr::p(0) * OpExpr::p(0) + scal(fv(vars::hbar) * fv(vars::r));
    CHECK(c.specialize(h0) == OpExpr::p(0) * OpExpr::p(0));
}
