#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spinops/builders.hpp"

using namespace spinops;

namespace {

FieldElem fv(Var v, int e = 1) { return FieldElem::variable(v, e); }

FieldElem ihbar() { return fe_i() * fe_hbar(); }

int eps3(int a, int b, int c) {
    if (a == b || b == c || a == c) return 0;
    return ((b - a + 3) % 3 == 1) ? 1 : -1;
}

}  // namespace

TEST_CASE("composite scalars expand to their definitions") {
    OpExpr xp;
    for (int k = 0; k < 3; ++k) xp += OpExpr::x(k) * OpExpr::p(k);
    CHECK(dot_xp<OpExpr>() == xp);

    CHECK(angmom<OpExpr>(2) == OpExpr::x(0) * OpExpr::p(1) - OpExpr::x(1) * OpExpr::p(0));

    // L^2 = r^2 p^2 - (x,p)^2 + i hbar (x,p)
    OpExpr rhs = radial(fv(vars::r, 2)) * p_squared<OpExpr>() -
                 dot_xp<OpExpr>() * dot_xp<OpExpr>() + dot_xp<OpExpr>() * ihbar();
    CHECK(L_squared<OpExpr>() == rhs);
}

TEST_CASE("hamiltonian structure") {
    OpExpr H = op_H();
    CHECK(H.adjoint() == H);
    // radial potentials commute with every angular momentum component
    for (int k = 0; k < 3; ++k) CHECK(commutator(H, op_J(k)).is_zero());
}

TEST_CASE("total angular momentum algebra") {
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            OpExpr want;
            for (int c = 0; c < 3; ++c)
                if (eps3(a, b, c) != 0)
                    want += op_J(c) * (ihbar() * FieldElem(static_cast<long>(eps3(a, b, c))));
            CHECK(commutator(op_J(a), op_J(b)) == want);
        }
}

TEST_CASE("vector covariance under the total angular momentum") {
    auto covariant = [](auto&& comp) {
        for (int k = 0; k < 3; ++k)
            for (int i = 0; i < 3; ++i) {
                OpExpr want;
                for (int l = 0; l < 3; ++l)
                    if (eps3(k, i, l) != 0)
                        want += comp(l) * (ihbar() * FieldElem(static_cast<long>(eps3(k, i, l))));
                CHECK(commutator(op_J(k), comp(i)) == want);
            }
    };
    covariant([](int i) { return op_x(i); });
    covariant([](int i) { return op_p(i); });
    covariant([](int i) { return op_L(i); });
    covariant([](int i) { return op_sigma(i); });
    covariant([](int i) { return wedge_xs<OpExpr>(i); });
    covariant([](int i) { return wedge_ps<OpExpr>(i); });
    covariant([](int i) { return op_S(i); });
    covariant([](int i) { return op_Pi(i); });
}

TEST_CASE("symmetrize basic examples") {
    OpExpr x1 = op_x(0), p1 = op_p(0);
    CHECK(symmetrize({x1, p1}) ==
          x1 * p1 - radial(ihbar() / FieldElem(2L)));

    FieldElem f = FieldElem::jetf(vars::fam_f(1));
    FieldElem fp = FieldElem::jetf(vars::fam_f(1), 1);
    OpExpr expect = radial(f) * p1;
    SpatialPoly corr = SpatialPoly::x(0) * (ihbar() / FieldElem(2L) * fv(vars::r, -1) * fp);
    expect -= OpExpr(corr);
    CHECK(symmetrize({p1, radial(f)}) == expect);

    OpExpr a = dot_sL<OpExpr>();
    CHECK(symmetrize({a}) == a);
}

TEST_CASE("symmetrize is order independent and keeps self-adjointness") {
    OpExpr x1 = op_x(0), p1 = op_p(0), s3 = op_sigma(2), L2c = op_L(1);
    OpExpr s1 = symmetrize({x1, p1, s3, L2c});
    CHECK(s1 == symmetrize({p1, s3, x1, L2c}));
    CHECK(s1 == symmetrize({L2c, s3, p1, x1}));
    CHECK(s1.adjoint() == s1);

    OpExpr s2 = symmetrize({p1, p1, op_x(1)});
    CHECK(s2.adjoint() == s2);
    CHECK(s2 == symmetrize({p1, op_x(1), p1}));

    FieldElem f = FieldElem::jetf(vars::fam_f(2));
    OpExpr s3a = symmetrize({radial(f), dot_sL<OpExpr>(), op_x(0)});
    CHECK(s3a.adjoint() == s3a);
}

TEST_CASE("printed family members") {
    // Coincident pairs stay in expanded symmetrized form: x_i x_j + x_j x_i.
    CHECK(tensor_component<OpExpr>('T', 1, 0, 1) ==
          op_x(0) * op_x(1) * FieldElem(2L));
    CHECK(tensor_component<OpExpr>('Y', 1, 0, 1) ==
          op_x(0) * op_sigma(1) + op_sigma(0) * op_x(1));
    CHECK(family_size('T') == 28);
    CHECK(family_size('Y') == 26);
    CHECK_THROWS_AS(tensor_component<OpExpr>('T', 29, 0, 0), CalcError);
    CHECK_THROWS_AS(tensor_component<OpExpr>('Y', 0, 0, 0), CalcError);
    CHECK_THROWS_AS(family_size('Z'), CalcError);

    auto fs = family_factors('T', 4, 0, 1);
    REQUIRE(fs.size() == 2);
    CHECK(fs[0][0] == op_x(0));
    CHECK(fs[0][1] == op_p(1));
    CHECK(fs[1][0] == op_p(0));
    CHECK(fs[1][1] == op_x(1));
}

TEST_CASE("a linear relation holds in symbol mode up to a pure trace") {
    // Two-index identities hold on the traceless part; the diagonal may carry
    // a common scalar multiple of the identity matrix (here 2(sigma,L)).
    auto diff = [](int i, int j) {
        return tensor_component<SymbolExpr>('T', 20, i, j) +
               tensor_component<SymbolExpr>('T', 7, i, j) -
               tensor_component<SymbolExpr>('T', 8, i, j);
    };
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) CHECK(diff(i, j).is_zero());
    SymbolExpr d0 = diff(0, 0);
    CHECK(diff(1, 1) == d0);
    CHECK(diff(2, 2) == d0);
    CHECK(d0 == dot_sL<SymbolExpr>() * FieldElem(2L));
}

TEST_CASE("two-index covariance for sample family members") {
    auto check_family = [](char fam, int k) {
        for (int a = 0; a < 3; ++a)
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    OpExpr want;
                    for (int l = 0; l < 3; ++l) {
                        if (eps3(a, i, l) != 0)
                            want += tensor_component<OpExpr>(fam, k, l, j) *
                                    (ihbar() * FieldElem(static_cast<long>(eps3(a, i, l))));
                        if (eps3(a, j, l) != 0)
                            want += tensor_component<OpExpr>(fam, k, i, l) *
                                    (ihbar() * FieldElem(static_cast<long>(eps3(a, j, l))));
                    }
                    CHECK(commutator(op_J(a), tensor_component<OpExpr>(fam, k, i, j)) == want);
                }
    };
    check_family('T', 3);
    check_family('Y', 6);
}

TEST_CASE("first-order integrals for the gauge potential") {
    FieldElem gauge = fe_hbar() * fv(vars::r, -2);
    OpExpr H1 = op_H(FieldElem::jetf(vars::FAM_V0), gauge);
    for (int k = 0; k < 3; ++k) CHECK(commutator(H1, op_S(k)).is_zero());

    OpExpr H2 = op_H(fe_hbar() * fe_hbar() * fv(vars::r, -2), gauge);
    for (int k = 0; k < 3; ++k) CHECK(commutator(H2, op_Pi(k)).is_zero());
}
