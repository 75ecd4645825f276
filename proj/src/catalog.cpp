#include "spinops/catalog.hpp"

#include <map>
#include <sstream>
#include <utility>

namespace spinops {
namespace {

// ---- coefficient-field shorthands -----------------------------------------

FieldElem cn(long n) { return FieldElem(n); }
FieldElem qn(long a, long b) { return FieldElem(rat(a, b)); }
FieldElem hb(int k = 1) { return FieldElem::variable(vars::hbar, k); }
FieldElem rr(int k = 1) { return FieldElem::variable(vars::r, k); }
FieldElem al() { return FieldElem::variable(vars::alpha); }
FieldElem be(int k = 1) { return FieldElem::variable(vars::beta, k); }
FieldElem ep() { return FieldElem::variable(vars::eps); }
FieldElem sq(int k = 1) { return FieldElem::variable(vars::s, k); }
FieldElem im() { return fe_i(); }
FieldElem jf(int k, int d = 0) { return FieldElem::jetf(vars::fam_f(k), d); }
FieldElem jV0(int d = 0) { return FieldElem::jetf(vars::FAM_V0, d); }
FieldElem jV1(int d = 0) { return FieldElem::jetf(vars::FAM_V1, d); }
FieldElem cc(int k) { return FieldElem::variable(vars::c(k)); }

FieldElem one_beta_r2() { return cn(1) + be() * rr(2); }

// ---- operator shorthands --------------------------------------------------

using V3 = std::array<OpExpr, 3>;

struct Prim {
    V3 x, p, sg, L, xs, ps;
    OpExpr dxp, dsl, dsx, dsp, p2, L2, xxpp;
    Prim() {
        for (int k = 0; k < 3; ++k) {
            x[k] = op_x(k);
            p[k] = op_p(k);
            sg[k] = op_sigma(k);
            L[k] = op_L(k);
            xs[k] = wedge_xs<OpExpr>(k);
            ps[k] = wedge_ps<OpExpr>(k);
        }
        dxp = dot_xp<OpExpr>();
        dsl = dot_sL<OpExpr>();
        dsx = dot_sx<OpExpr>();
        dsp = dot_sp<OpExpr>();
        p2 = p_squared<OpExpr>();
        L2 = L_squared<OpExpr>();
        for (int k = 0; k < 3; ++k) xxpp += x[k] * dxp * p[k];  // (x,(x,p)p)
    }
};

const Prim& prim() {
    static const Prim P;
    return P;
}

OpExpr K(const FieldElem& g) { return radial(g); }

// a_i b_j + b_i a_j in the printed order.
OpExpr vv(const V3& a, const V3& b, int i, int j) { return a[i] * b[j] + b[i] * a[j]; }
// a_i a_j + a_j a_i.
OpExpr aa(const V3& a, int i, int j) { return a[i] * a[j] + a[j] * a[i]; }

// ---- radial auxiliary functions -------------------------------------------

FieldElem aux_impl(const std::string& name) {
    const FieldElem sb = one_beta_r2();
    if (name == "q") return cn(1) + qn(1, 2) * be() * rr(2) + ep() * sq(1);
    if (name == "Qplus")
        return cn(1) + qn(1, 2) * be() * rr(2) + ep() * (cn(3) + cn(4) * be() * rr(2)) * sq(-1);
    if (name == "Qminus")
        return cn(1) + qn(1, 2) * be() * rr(2) - ep() * (cn(3) + cn(4) * be() * rr(2)) * sq(-1);
    if (name == "Qtilde")
        return cn(3) + qn(5, 2) * be() * rr(2) + ep() * (cn(3) + cn(4) * be() * rr(2)) * sq(-1);
    if (name == "W")
        return cn(3) + cn(2) * be() * rr(2) + qn(1, 2) * ep() * (cn(6) + cn(7) * be() * rr(2)) * sq(-1);
    if (name == "Y")
        return (cn(-4) * hb(2) - cn(8) * al() * rr(2) - cn(6) * hb(2) * be() * rr(2)
                - cn(8) * al() * be() * rr(4) + hb(2) * be(2) * rr(4)) / (sb * sb)
               - cn(4) * ep() * hb(2) * sq(-1);
    if (name == "Ytilde")
        return (hb(2) * rr(4) * (cn(4) * al() - cn(6) * be(2))
                + hb(2) * rr(6) * (cn(3) * be(3) + cn(4) * be() * al()) - cn(6) * hb(2) * be() * rr(2))
                   / (cn(4) * sb * sb)
               + cn(2) * ep() * hb(2) * be() * rr(2) * sq(-1);
    if (name == "Z")
        return (cn(-4) * rr(4) * al() * sb
                + cn(3) * hb(2) * (cn(2) + be() * rr(2) * (cn(7) + cn(6) * be() * rr(2)))) / (cn(2) * sb * sb)
               + cn(3) * ep() * hb(2) * (cn(1) + cn(2) * be() * rr(2)) * sq(-1);
    throw CalcError("unknown auxiliary function: " + name);
}

// ---- tensor integrals -----------------------------------------------------

OpExpr build_T1(int i, int j) {
    const Prim& P = prim();
    return vv(P.L, P.sg, i, j) * hb() + aa(P.L, i, j);
}

OpExpr build_T2(int i, int j) {
    const Prim& P = prim();
    return aa(P.L, i, j) + vv(P.L, P.sg, i, j) * (cn(2) * hb())
           + K(cn(2) * hb() * rr(-2)) * (P.dsl * cn(2) + K(hb())) * (P.x[i] * P.x[j])
           - vv(P.p, P.xs, i, j) * (cn(2) * hb())
           + K(cn(2) * hb() * rr(-2)) * (P.dxp + K(im() * hb())) * vv(P.x, P.xs, i, j);
}

OpExpr build_T3(int i, int j) {
    const Prim& P = prim();
    OpExpr inner = K(hb() * rr(-2)) * (P.x[i] * P.x[j]) + vv(P.p, P.xs, i, j)
                   + K(im() * hb() * rr(-2)) * vv(P.x, P.xs, i, j);
    return (P.p[i] * P.p[j]) * cn(2) + (P.x[i] * P.x[j]) * (cn(4) * al())
           - K(cn(2) * hb() * rr(-2)) * inner;
}

OpExpr build_T4(int i, int j) {
    const Prim& P = prim();
    return vv(P.L, P.sg, i, j) * (im() * hb())
           - (P.dsl * cn(2) + K(hb())) * vv(P.x, P.p, i, j)
           - P.dxp * vv(P.x, P.ps, i, j)
           + K(cn(2) * rr(-2))
                 * (K(im() * hb(2)) + P.dxp * hb() + (P.dxp + K(im() * hb())) * P.dsl * cn(2))
                 * (P.x[i] * P.x[j])
           + K(rr(2)) * vv(P.p, P.ps, i, j)
           - (P.dxp + K(cn(2) * im() * hb())) * vv(P.p, P.xs, i, j)
           + (K(cn(-2) * rr(-2)) * P.L2 + P.p2 - K(qn(3, 2) * hb(2) * rr(-2))) * vv(P.x, P.xs, i, j);
}

OpExpr build_T5(int i, int j) {
    const Prim& P = prim();
    return K(rr(-2)) * (K(cn(3) * hb()) + P.dsl * cn(2))
               * (K(cn(2) * im() * hb() * rr(-2)) * (P.x[i] * P.x[j]) + vv(P.x, P.p, i, j))
           - vv(P.p, P.ps, i, j)
           + K(cn(2) * rr(-2)) * (P.dxp + K(im() * hb())) * vv(P.p, P.xs, i, j)
           + (K(cn(2) * al()) - K(hb() * rr(-4)) * (K(cn(3) * hb()) - P.dxp * (cn(2) * im())))
                 * vv(P.x, P.xs, i, j);
}

OpExpr build_T6(int i, int j) {
    const Prim& P = prim();
    return -vv(P.L, P.sg, i, j)
           - K(cn(2) * rr(-2)) * (P.dsl * cn(2) + K(hb())) * (P.x[i] * P.x[j])
           + vv(P.p, P.xs, i, j) * cn(2)
           - K(cn(2) * rr(-2)) * (P.dxp + K(im() * hb())) * vv(P.x, P.xs, i, j);
}

// ---- pseudo-tensor integrals ----------------------------------------------

OpExpr build_Y1(int i, int j) {
    const Prim& P = prim();
    return vv(P.p, P.L, i, j)
           - K(cn(2) * hb() * rr(-2)) * (K(im() * hb()) + P.dxp) * vv(P.x, P.sg, i, j)
           + vv(P.p, P.sg, i, j) * (qn(3, 2) * hb())
           + K(cn(4) * hb() * rr(-4)) * (K(cn(3) * im() * hb()) + P.dxp * cn(2)) * P.dsx
                 * (P.x[i] * P.x[j])
           - K(cn(2) * hb() * rr(-2)) * P.dsx * vv(P.x, P.p, i, j);
}

OpExpr build_Y2(int i, int j) {
    const Prim& P = prim();
    OpExpr sc1 = K(cn(2) * hb(2) * rr(-2)) - K(cn(2) * im() * hb() * rr(-2)) * P.dxp - P.p2
                 + K(cn(2) * rr(-2)) * P.L2;
    OpExpr sc2 = K(im() * hb() * rr(-2)) * P.dxp * P.dsx - K(cn(2) * hb(2) * rr(-2)) * P.dsx
                 + P.dsp * (im() * hb()) - K(cn(2) * rr(-2)) * P.dsx * P.L2;
    return -(sc1 * vv(P.x, P.sg, i, j)) * cn(2)
           - (K(cn(4) * im() * hb()) + P.dxp * cn(2)) * vv(P.p, P.sg, i, j)
           - K(cn(8) * rr(-2)) * sc2 * (P.x[i] * P.x[j])
           + P.dsx * (P.p[i] * P.p[j]) * cn(8)
           + K(cn(4) * rr(-2)) * P.dxp * vv(P.xs, P.L, i, j)
           - vv(P.ps, P.L, i, j) * cn(5)
           - K(cn(4) * rr(-2)) * P.dxp * P.dsx * vv(P.x, P.p, i, j)
           + K(cn(2) * rr(-2)) * (K(hb()) + P.dsl * cn(4)) * vv(P.x, P.L, i, j);
}

OpExpr build_Y3(int i, int j) {
    const Prim& P = prim();
    return vv(P.p, P.L, i, j)
           + K(hb() * rr(-2)) * (K(im() * hb()) + P.dxp) * vv(P.x, P.sg, i, j)
           + vv(P.p, P.sg, i, j) * (qn(1, 2) * hb())
           - K(hb() * rr(-2)) * P.dsx * vv(P.x, P.p, i, j)
           + K(cn(2) * hb() * rr(-2)) * P.dsp * (P.x[i] * P.x[j]);
}

OpExpr build_Y4(int i, int j) {
    const Prim& P = prim();
    OpExpr sc1 = K(qn(3, 2) * hb(2) * rr(-2)) - K(cn(2) * im() * hb() * rr(-2)) * P.dxp
                 + P.p2 * cn(2) - K(cn(4) * rr(-2)) * P.L2;
    return sc1 * vv(P.x, P.sg, i, j)
           + (K(im() * hb()) - P.dxp) * vv(P.p, P.sg, i, j) * cn(2)
           + K(cn(2) * im() * hb() * rr(-2))
                 * (P.dsp * (P.x[i] * P.x[j]) * cn(2) - P.dsx * vv(P.x, P.p, i, j))
           - K(cn(2) * rr(-2)) * P.dxp * vv(P.xs, P.L, i, j)
           + vv(P.ps, P.L, i, j)
           + K(rr(-2)) * (P.dsl * cn(2) + K(cn(3) * hb())) * vv(P.x, P.L, i, j);
}

OpExpr build_Y5(int i, int j) {
    const Prim& P = prim();
    return -(K(rr(1)) * vv(P.ps, P.L, i, j))
           + K(rr(-1)) * P.dxp * vv(P.xs, P.L, i, j)
           + K(cn(3) * rr(-1)) * P.dsl * vv(P.x, P.L, i, j)
           - K(im() * hb() * rr(1)) * vv(P.p, P.sg, i, j)
           + K(im() * hb() * rr(-1)) * P.dsx * vv(P.x, P.p, i, j)
           + K(cn(2) * rr(-1))
                 * (K(rr(-2)) * P.dsx * (P.L2 * cn(4) + K(hb(2))) - P.dsp * (im() * hb()))
                 * (P.x[i] * P.x[j])
           + K(rr(-1)) * (-(P.L2 * cn(2)) + P.dxp * (im() * hb()) - K(qn(3, 2) * hb(2)))
                 * vv(P.x, P.sg, i, j);
}

OpExpr build_Y6(int i, int j) {
    const Prim& P = prim();
    return -(K(rr(1)) * vv(P.ps, P.L, i, j))
           + K(rr(-1)) * P.dxp * vv(P.xs, P.L, i, j)
           + K(rr(-1)) * (P.dsl + K(hb())) * vv(P.x, P.L, i, j)
           - K(im() * hb() * rr(1)) * vv(P.p, P.sg, i, j)
           + K(im() * hb() * rr(-1)) * P.dsx * vv(P.x, P.p, i, j)
           - K(cn(2) * im() * hb() * rr(-1)) * P.dsp * (P.x[i] * P.x[j])
           + K(hb() * rr(-1)) * (P.dxp * im() - K(qn(1, 2) * hb())) * vv(P.x, P.sg, i, j);
}

OpExpr build_Y7(int i, int j) {
    const Prim& P = prim();
    return -(K(rr(1)) * vv(P.ps, P.L, i, j))
           + K(rr(-1)) * P.dxp * vv(P.xs, P.L, i, j)
           - K(rr(-1)) * (P.dsl + K(cn(2) * hb())) * vv(P.x, P.L, i, j)
           // The (sigma,x)/r piece multiplies x^i p^j + p^i x^j; the printed
           // form attaches it to p^i sigma^j + sigma^i p^j, which breaks
           // parity and is a misprint (cf. the two sibling branch integrals).
           + K(im() * hb() * rr(-1)) * P.dsx * vv(P.x, P.p, i, j)
           - K(im() * hb() * rr(1)) * vv(P.p, P.sg, i, j)
           - K(cn(2) * im() * hb() * rr(-1)) * P.dsp * (P.x[i] * P.x[j])
           + K(rr(-1)) * (P.L2 * cn(2) + P.dxp * (im() * hb()) - K(qn(3, 2) * hb(2)))
                 * vv(P.x, P.sg, i, j);
}

OpExpr build_Y8(int i, int j) {
    const Prim& P = prim();
    return vv(P.p, P.L, i, j)
           - K(hb() * rr(-2)) * (P.dxp + K(im() * hb())) * vv(P.x, P.sg, i, j)
           + K(hb() * rr(-2)) * P.dsx * vv(P.x, P.p, i, j)
           + K(cn(2) * hb() * rr(-2)) * (P.dsp + K(cn(2) * im() * hb() * rr(-2)) * P.dsx)
                 * (P.x[i] * P.x[j])
           + vv(P.p, P.sg, i, j) * (qn(1, 2) * hb());
}

OpExpr build_Y9(int i, int j) {
    const Prim& P = prim();
    return K(cn(2) * im() * hb() * rr(-2))
               * (P.dsx * vv(P.x, P.p, i, j) - P.dsp * (P.x[i] * P.x[j]) * cn(2)
                  - K(rr(2)) * vv(P.p, P.sg, i, j))
           - vv(P.ps, P.L, i, j)
           + K(cn(2) * rr(-2)) * P.dxp * vv(P.xs, P.L, i, j)
           + K(hb() * rr(-2)) * (P.dxp * (cn(2) * im()) - K(qn(1, 2) * hb())) * vv(P.x, P.sg, i, j)
           + K(rr(-2)) * (P.dsl * cn(2) + K(cn(3) * hb())) * vv(P.x, P.L, i, j);
}

OpExpr build_Y10(int i, int j) {
    const Prim& P = prim();
    return -(K(hb() * rr(-2)) * vv(P.x, P.L, i, j))
           - vv(P.ps, P.L, i, j)
           - P.dxp * vv(P.p, P.sg, i, j)
           - K(cn(2) * rr(-2)) * P.dsx * (P.dxp + K(im() * hb())) * vv(P.x, P.p, i, j)
           + P.p2 * vv(P.x, P.sg, i, j)
           + P.dsx * (P.p[i] * P.p[j]) * cn(4)
           + K(cn(4) * hb() * rr(-4)) * P.dsx * (K(hb()) - P.dxp * im()) * (P.x[i] * P.x[j]);
}

OpExpr build_Y11(int i, int j) {
    const Prim& P = prim();
    return vv(P.p, P.sg, i, j)
           - K(cn(2) * rr(-2)) * P.dsx * vv(P.x, P.p, i, j)
           - K(cn(4) * im() * hb() * rr(-4)) * P.dsx * (P.x[i] * P.x[j]);
}

OpExpr build_Y12(int i, int j) {
    const Prim& P = prim();
    OpExpr t1 = -((P.dsp + K(rr(-2)) * P.dxp * P.dsx) * (cn(2) * im() * hb()))
                + K(al() * rr(-1) + hb(2) * rr(-2)) * P.dsx;
    return K(cn(2) * rr(-2)) * t1 * (P.x[i] * P.x[j])
           - (K(cn(2) * im() * hb()) + P.dxp) * vv(P.p, P.sg, i, j)
           - K(cn(2) * rr(-2)) * P.dxp * P.dsx * vv(P.x, P.p, i, j)
           + P.dsx * (P.p[i] * P.p[j]) * cn(4)
           - vv(P.ps, P.L, i, j) * cn(2)
           + K(cn(2) * rr(-2)) * P.dxp * vv(P.xs, P.L, i, j)
           + (K(cn(2) * im() * hb() * rr(-2)) * P.dxp + P.p2
              - K(al() * rr(-1) + cn(3) * hb(2) * rr(-2)))
                 * vv(P.x, P.sg, i, j)
           + K(cn(2) * rr(-2)) * (P.dsl + K(hb())) * vv(P.x, P.L, i, j);
}

// ---- pseudo-scalar integrals ----------------------------------------------

OpExpr build_XP1(int, int) {
    const Prim& P = prim();
    return K(rr(-1)) * P.dsx;
}

OpExpr build_XP2(int, int) {
    const Prim& P = prim();
    return -(K(rr(1)) * P.dsp) + K(rr(-1)) * P.dsx * P.dxp - K(im() * hb() * rr(-1)) * P.dsx;
}

OpExpr build_XP3(int, int) {
    const Prim& P = prim();
    return K(rr(-1)) * P.dsx * (K(qn(3, 2) * hb(2) * rr(-2) + cn(4) * al() * rr(2)) - P.p2 * cn(2))
           + K(cn(4) * rr(-1)) * (P.dxp - K(im() * hb())) * P.dsp;
}

OpExpr build_XP4(int, int) {
    const Prim& P = prim();
    return K(rr(-1)) * P.dsx
               * (K(qn(-5, 2) * hb(2) * rr(-2) + cn(4) * al() * rr(2))
                  - K(cn(20) * im() * hb() * rr(-2)) * P.dxp - P.p2 * cn(2)
                  + K(cn(8) * rr(-2)) * P.xxpp)
           - K(cn(4) * rr(-1)) * (P.dxp - K(cn(2) * im() * hb())) * P.dsp;
}

OpExpr build_XP5(int, int) {
    const Prim& P = prim();
    return -(K(sq(1) * be(-1)) * P.dsp)
           + K((sq(1) - ep()).inv()) * P.dsx * (P.dxp - K(im() * hb()));
}

OpExpr build_XP6(int, int) {
    const Prim& P = prim();
    return K(cn(2) * rr(-2) * (cn(1) + ep() * sq(1))) * P.dsx
               * (K(hb(2)) + P.dxp * (cn(3) * im() * hb()) - P.xxpp)
           - K(cn(2) * im() * hb() * (cn(2) + ep() * sq(1))) * P.dsp
           + P.dxp * P.dsp * cn(2)
           + K(cn(2) * ep() * sq(1)) * P.dsx * P.p2;
}

OpExpr build_XP7(int, int) {
    const Prim& P = prim();
    const FieldElem sb = one_beta_r2();
    FieldElem num1 = cn(2) * rr(4) * al() * sb
                     - hb(2) * (cn(1) + cn(2) * be() * rr(2))
                           * (cn(1) + cn(4) * ep() * sq(1)
                              + cn(4) * be() * rr(2) * (cn(1) + ep() * sq(1)));
    return K(num1 / (cn(2) * rr(3) * sb * sb)) * P.dsx
           - K(cn(2) * im() * hb() * rr(-3)
               * (cn(5) + cn(3) * be() * rr(2) - ep() * sq(-1) + cn(6) * ep() * sq(1)))
                 * P.dsx * P.dxp
           + K(cn(2) * im() * hb() * rr(-1)
               * (cn(1) + be() * rr(2) - ep() * sq(-1) + cn(4) * ep() * sq(1)))
                 * P.dsp
           - K(cn(2) * rr(-1) * sb) * P.dsx * P.p2
           + K(cn(2) * rr(-3) * (cn(2) + be() * rr(2) + cn(2) * ep() * sq(1))) * P.dsx * P.xxpp
           - K(cn(4) * ep() * sq(1) * rr(-1)) * P.dxp * P.dsp;
}

// ---- vector integrals -----------------------------------------------------

OpExpr build_XV1(int k, int) {
    const Prim& P = prim();
    return -(P.dsl * P.p[k]) + P.p[k] * (qn(3, 2) * hb())
           - K(qn(1, 2) * hb() * rr(-2)) * P.x[k] * P.dxp
           - P.ps[k] * (qn(1, 2) * im() * hb())
           + P.x[k] * (qn(1, 2) * im() * hb(2) * rr(-2))
           + P.xs[k] * ((cn(4) * al() * rr(1) - hb(2)) * qn(1, 4) * rr(-2));
}

OpExpr build_XV2(int k, int) {
    const Prim& P = prim();
    return (P.x[k] * P.p2) * cn(2) - (P.dxp * P.p[k]) * cn(2)
           - K(hb() * rr(-2)) * P.x[k] * P.dsl
           + P.p[k] * (cn(2) * im() * hb())
           + P.ps[k] * hb()
           + P.xs[k] * (qn(1, 2) * im() * hb(2) * rr(-2))
           + P.x[k] * ((hb(2) - cn(2) * al() * rr(1)) * rr(-2));
}

OpExpr build_XV3(int k, int) {
    const Prim& P = prim();
    return K(rr(-1)) * P.dsx * P.L[k]
           + K(qn(1, 2) * hb() * rr(-1)) * (P.x[k] - P.xs[k] * im());
}

OpExpr build_XV4(int k, int) {
    const Prim& P = prim();
    return K(rr(1)) * P.L[k] * P.dsp + K(qn(1, 2) * hb() * rr(1)) * P.p[k]
           + K(qn(1, 2) * im() * hb() * rr(1)) * P.ps[k]
           + build_XV3(k, 0) * (K(im() * hb()) - P.dxp);
}

OpExpr build_XV5(int k, int) {
    const Prim& P = prim();
    FieldElem g = (cn(2) * be() * rr(2) - al()) * rr(-2);
    return P.x[k] * (P.p2 * cn(2) - K(g) * (P.dsl + K(hb())))
           + (K(im() * hb()) - P.dxp) * P.p[k] * cn(2)
           + P.ps[k] * hb()
           - P.xs[k] * (qn(1, 2) * im() * hb() * g);
}

OpExpr build_XV6(int k, int) {
    const Prim& P = prim();
    FieldElem g = (cn(2) * be() * rr(2) - al()) * rr(-2);
    return (K(hb() + qn(1, 2) * al() - be() * rr(2)) + P.dsl) * P.p[k]
           + P.x[k] * K(qn(1, 2) * g) * (P.dxp - K(im() * hb()))
           - P.ps[k] * (qn(1, 2) * im() * hb())
           + P.xs[k] * (qn(1, 4) * hb() * g);
}

// Anticommutator of the case's own first pseudo-scalar integral with the total
// angular momentum; commutes exactly because both factors do.
OpExpr build_XV7(int k, int) {
    OpExpr xp5 = build_XP5(0, 0);
    return xp5 * op_J(k) + op_J(k) * xp5;
}

// ---- axial-vector integrals -----------------------------------------------

OpExpr build_XA1(int k, int) {
    const Prim& P = prim();
    return -((K(cn(2) * al() * rr(2)) + P.p2) * P.sg[k])
           + (P.dsp * P.p[k]) * cn(2)
           + K(cn(2) * rr(-2))
                 * (P.x[k]
                        * (P.dsx * P.p2 + P.dsp * (cn(2) * im() * hb())
                           - P.dxp * P.dsp * cn(2))
                    + (P.sg[k] * P.dxp - P.dsx * P.p[k]) * (im() * hb()));
}

OpExpr build_XA2(int k, int) {
    const Prim& P = prim();
    OpExpr grp = K(cn(3) * im() * hb() * rr(2)) * P.dsp
                 - P.dsx
                       * (K(cn(3) * hb(2) - cn(2) * al() * rr(4)) + K(rr(2)) * P.p2 * cn(2)
                          + P.dxp * (cn(12) * im() * hb()))
                 - P.dsx * P.xxpp * cn(4);
    return (P.p2 * cn(3) - K(cn(2) * al() * rr(2))
            + K(cn(4) * rr(-2)) * (P.dxp * (im() * hb()) - P.xxpp))
               * P.sg[k]
           - K(cn(2) * rr(-2)) * (K(hb()) + P.dsl) * P.L[k]
           - (P.dsp - K(cn(3) * im() * hb() * rr(-2)) * P.dsx) * P.p[k] * cn(2)
           + K(cn(2) * rr(-4)) * P.x[k] * grp;
}

OpExpr build_XA3(int k, int) {
    const Prim& P = prim();
    const FieldElem Qp = aux_impl("Qplus"), Qm = aux_impl("Qminus"), qf = aux_impl("q"),
                    Yf = aux_impl("Y");
    return (K(cn(2) * im() * hb() * rr(-2) * Qp) * P.dsx - K(cn(4) * ep() * sq(1)) * P.dsp)
               * P.p[k]
           - K(cn(4) * rr(-2))
                 * (K(hb() + cn(2) * al() * rr(2) + ep() * hb() * sq(-1)) + K(qf) * P.dsl)
                 * P.L[k]
           + P.sg[k] * K(qn(1, 2) * rr(-2))
                 * (K(Yf) + K(im() * hb() * (cn(8) + cn(4) * be() * rr(2))) * P.dxp
                    - K(cn(8) * qf) * P.xxpp + K(cn(4) * rr(2) * (cn(2) * qf - cn(1))) * P.p2)
           + K(cn(2) * rr(-2)) * P.x[k]
                 * ((K(im() * hb() * Qm) + K(cn(4) * ep() * sq(1)) * P.dxp) * P.dsp
                    - K(cn(2) * ep() * sq(1)) * P.dsx * P.p2);
}

OpExpr build_XA4(int k, int) {
    const Prim& P = prim();
    const FieldElem Qt = aux_impl("Qtilde"), qf = aux_impl("q"), Yt = aux_impl("Ytilde"),
                    Zf = aux_impl("Z"), Wf = aux_impl("W");
    return (K(cn(2) * im() * hb(2) * rr(-2) * Qt) * P.dsx - K(cn(4) * ep() * sq(1)) * P.dsp)
               * P.p[k]
           - K(cn(4) * rr(-2)) * (K(hb() + ep() * hb() * sq(-1)) + K(qf) * P.dsl) * P.L[k]
           + P.sg[k] * K(cn(2) * rr(-2))
                 * (K(cn(2) * im() * hb() * qf) * P.dxp - K(Yt) - K(cn(2) * qf) * P.xxpp
                    + K(rr(2) * (cn(2) * qf - cn(1))) * P.p2)
           + K(cn(2) * rr(-4)) * P.x[k]
                 * (P.dsx
                        * (K(cn(4) * qf) * P.xxpp
                           - K(cn(2) * rr(2) * (cn(2) * qf - cn(1) - ep() * sq(1))) * P.p2
                           - K(Zf) - K(cn(4) * im() * hb() * Wf) * P.dxp)
                    + K(im() * hb() * Qt) * P.dsp);
}

// ---- first-order integrals ------------------------------------------------

OpExpr build_S(int k, int) { return op_S(k); }
OpExpr build_Pi(int k, int) { return op_Pi(k); }
OpExpr build_J(int k, int) { return op_J(k); }

// ---- registry -------------------------------------------------------------

struct Registry {
    std::map<std::string, CaseRow> cases;
    std::vector<std::string> case_order;
    std::map<std::string, IntegralEntry> integrals;
    std::vector<std::string> integral_order;
    std::vector<DeterminingEq> tensor_eqs;
    std::vector<DeterminingEq> pseudo_eqs;
    std::map<std::string, SolutionBranch> solutions;
    std::vector<std::string> solution_order;
};

void add_case(Registry& R, std::string id, FieldElem V1, FieldElem V0, bool V0_sym,
              std::vector<std::string> ints, std::string source) {
    CaseRow row;
    row.id = id;
    row.V1 = std::move(V1);
    row.V0 = std::move(V0);
    row.V0_symbolic = V0_sym;
    row.integrals = std::move(ints);
    row.source = std::move(source);
    R.case_order.push_back(id);
    R.cases.emplace(std::move(id), std::move(row));
}

void add_integral(Registry& R, std::string id, std::string family, int arity,
                  std::string required, std::string source, OpExpr (*fn)(int, int)) {
    IntegralEntry e;
    e.id = id;
    e.family = std::move(family);
    e.arity = arity;
    e.required_case = std::move(required);
    e.source = std::move(source);
    e.build = fn;
    R.integral_order.push_back(id);
    R.integrals.emplace(std::move(id), std::move(e));
}

void add_eq(std::vector<DeterminingEq>& v, std::string family, std::string id, int order,
            FieldElem lhs, std::string source, bool corrected = false) {
    DeterminingEq e;
    e.id = std::move(id);
    e.family = std::move(family);
    e.order = order;
    e.lhs = std::move(lhs);
    e.source = std::move(source);
    e.corrected = corrected;
    v.push_back(std::move(e));
}

void build_cases(Registry& R) {
    const FieldElem sb = one_beta_r2();
    const FieldElem sym;  // placeholder V0 for symbolic rows
    add_case(R, "1a", hb() * rr(-2), sym, true, {"S", "T2", "T4", "T6"}, "Table 1, row 1");
    add_case(R, "1b", hb() * rr(-2), hb(2) * rr(-2), false,
             {"Pi", "S", "T2", "T4", "T6", "Y8", "Y9", "Y10", "Y11"}, "Table 1, row 1");
    add_case(R, "1c", hb() * rr(-2), hb(2) * rr(-2) + al() * rr(2), false,
             {"T2", "T3", "T4", "T5", "T6"}, "Table 1, row 1");
    add_case(R, "1d", hb() * rr(-2), hb(2) * rr(-2) - al() * rr(-1), false, {"Y12"},
             "Table 1, row 1");
    add_case(R, "2a", qn(1, 2) * hb() * rr(-2), sym, true, {"XP1", "XP2", "XV3", "XV4", "Y6"},
             "Table 1, row 2");
    add_case(R, "2b", qn(1, 2) * hb() * rr(-2), qn(3, 8) * hb(2) * rr(-2) - al() * rr(-1), false,
             {"XP1", "XP2", "XV1", "XV2", "XV3", "XV4"}, "Table 1, row 2");
    add_case(R, "3a", qn(-1, 2) * hb() * rr(-2), sym, true, {"Y7"}, "Table 1, row 3");
    add_case(R, "3b", qn(-1, 2) * hb() * rr(-2), qn(-1, 8) * hb(2) * rr(-2) + al() * rr(2), false,
             {"XP3"}, "Table 1, row 3");
    add_case(R, "4a", qn(3, 2) * hb() * rr(-2), sym, true, {"Y5"}, "Table 1, row 4");
    add_case(R, "4b", qn(3, 2) * hb() * rr(-2), qn(15, 8) * hb(2) * rr(-2) + al() * rr(2), false,
             {"XP4"}, "Table 1, row 4");
    add_case(R, "5a", -(hb() * rr(-2)), al(), false, {"Y3", "Y4"}, "Table 1, row 5");
    add_case(R, "5b", -(hb() * rr(-2)), al() * rr(2), false, {"XA1"}, "Table 1, row 5");
    add_case(R, "6a", cn(2) * hb() * rr(-2), cn(3) * hb(2) * rr(-2), false, {"Y1", "Y2"},
             "Table 1, row 6");
    add_case(R, "6b", cn(2) * hb() * rr(-2), cn(3) * hb(2) * rr(-2) + al() * rr(2), false,
             {"XA2"}, "Table 1, row 6");
    add_case(R, "7", qn(1, 2) * al() * rr(-2) + be(),
             (al() * (al() + cn(2) * hb()) + cn(4) * be(2) * rr(4)) / (cn(8) * rr(2)), false,
             {"XV5", "XV6"}, "Table 1, row 7 (V0 corrected: beta^2 r^4 term, misprinted as beta r^4)");
    add_case(R, "8", qn(1, 2) * hb() * rr(-2) * (cn(1) + ep() * sq(-1)),
             qn(1, 2) * hb(2) * rr(-2) * (cn(1) + ep() * sq(-1)), false, {"XP5", "XP6", "XV7"},
             "Table 1, row 8");
    add_case(R, "9", qn(1, 2) * hb() * rr(-2) * (cn(1) + cn(2) * ep() * sq(-1)),
             hb(2) * (cn(7) + cn(10) * be() * rr(2) + cn(8) * ep() * sq(3))
                     / (cn(8) * rr(2) * sb * sb)
                 - al() / (cn(4) * be() * sb),
             false, {"XP7"}, "Table 1, row 9; potential (5.1)");
    add_case(R, "10", ep() * hb() * rr(-2) * sq(-1),
             hb(2) * (cn(4) + cn(6) * be() * rr(2) - be(2) * rr(4) + cn(4) * ep() * sq(3))
                     / (cn(8) * rr(2) * sb * sb)
                 + al() / sb,
             false, {"XA3"}, "Table 1, row 10; potential (5.2)");
    add_case(R, "11", hb() * rr(-2) * (cn(1) + ep() * sq(-1)),
             cn(3) * hb(2) * (cn(4) + cn(5) * be() * rr(2) + cn(4) * ep() * sq(3))
                     / (cn(8) * rr(2) * sb * sb)
                 - al() / (cn(2) * be() * sb),
             false, {"XA4"}, "Table 1, row 11; potential (5.3)");
}

void build_integrals(Registry& R) {
    const std::string appA = "Appendix A";
    const std::string appB = "Appendix B";
    add_integral(R, "T1", "tensor", 2, "symbolic", "(3.46)", build_T1);
    add_integral(R, "T2", "tensor", 2, "1a", appA + ", tensor list, item 1", build_T2);
    add_integral(R, "T3", "tensor", 2, "1c", appA + ", tensor list, item 2", build_T3);
    add_integral(R, "T4", "tensor", 2, "1a", appA + ", tensor list, item 3", build_T4);
    add_integral(R, "T5", "tensor", 2, "1c", appA + ", tensor list, item 4", build_T5);
    add_integral(R, "T6", "tensor", 2, "1a", appA + ", tensor list, item 5", build_T6);
    add_integral(R, "Y1", "pseudo-tensor", 2, "6a", "Sec. 4.2, Case 1 Subcase 1", build_Y1);
    add_integral(R, "Y2", "pseudo-tensor", 2, "6a", "Sec. 4.2, Case 1 Subcase 1", build_Y2);
    add_integral(R, "Y3", "pseudo-tensor", 2, "5a", "Sec. 4.2, Case 1 Subcase 2", build_Y3);
    add_integral(R, "Y4", "pseudo-tensor", 2, "5a", "Sec. 4.2, Case 1 Subcase 2", build_Y4);
    add_integral(R, "Y5", "pseudo-tensor", 2, "4a", "Sec. 4.2, Case 2 branch I", build_Y5);
    add_integral(R, "Y6", "pseudo-tensor", 2, "2a", "Sec. 4.2, Case 2 branch II", build_Y6);
    add_integral(R, "Y7", "pseudo-tensor", 2, "3a", "Sec. 4.2, Case 2 branch III", build_Y7);
    add_integral(R, "Y8", "pseudo-tensor", 2, "1b", appA + ", pseudo-tensor list, item 1",
                 build_Y8);
    add_integral(R, "Y9", "pseudo-tensor", 2, "1b", appA + ", pseudo-tensor list, item 2",
                 build_Y9);
    add_integral(R, "Y10", "pseudo-tensor", 2, "1b", appA + ", pseudo-tensor list, item 3",
                 build_Y10);
    add_integral(R, "Y11", "pseudo-tensor", 2, "1b", appA + ", pseudo-tensor list, item 4",
                 build_Y11);
    add_integral(R, "Y12", "pseudo-tensor", 2, "1d", appA + ", pseudo-tensor list, item 5; (A.11)",
                 build_Y12);
    add_integral(R, "XP1", "pseudo-scalar", 0, "2a", appB, build_XP1);
    add_integral(R, "XP2", "pseudo-scalar", 0, "2a", appB, build_XP2);
    add_integral(R, "XP3", "pseudo-scalar", 0, "3b", appB, build_XP3);
    add_integral(R, "XP4", "pseudo-scalar", 0, "4b", appB, build_XP4);
    add_integral(R, "XP5", "pseudo-scalar", 0, "8", appB, build_XP5);
    add_integral(R, "XP6", "pseudo-scalar", 0, "8", appB, build_XP6);
    add_integral(R, "XP7", "pseudo-scalar", 0, "9", appB, build_XP7);
    add_integral(R, "XV1", "vector", 1, "2b", appB, build_XV1);
    add_integral(R, "XV2", "vector", 1, "2b", appB, build_XV2);
    add_integral(R, "XV3", "vector", 1, "2a", appB, build_XV3);
    add_integral(R, "XV4", "vector", 1, "2a", appB, build_XV4);
    add_integral(R, "XV5", "vector", 1, "7", appB, build_XV5);
    add_integral(R, "XV6", "vector", 1, "7", appB, build_XV6);
    add_integral(R, "XV7", "vector", 1, "8",
                 appB + " ({X_P,J} with X_P the case's first pseudo-scalar)", build_XV7);
    add_integral(R, "XA1", "axial-vector", 1, "5b", appB, build_XA1);
    add_integral(R, "XA2", "axial-vector", 1, "6b", appB, build_XA2);
    add_integral(R, "XA3", "axial-vector", 1, "10", appB, build_XA3);
    add_integral(R, "XA4", "axial-vector", 1, "11", appB, build_XA4);
    add_integral(R, "S", "first-order", 1, "1a", "(2.7)", build_S);
    add_integral(R, "Pi", "first-order", 1, "1b", "(2.9)", build_Pi);
    add_integral(R, "J", "first-order", 1, "symbolic", "Sec. 2", build_J);
}

void build_tensor_eqs(Registry& R) {
    auto& v = R.tensor_eqs;
    const std::string fam = "tensor";
    const std::string b3 = "Sec. 3.1, third-order block";
    const std::string b2 = "Sec. 3.1, second-order block";
    const std::string b1 = "Sec. 3.1, first-order block";
    const std::string b0 = "Sec. 3.1, zeroth-order block";

    // Algebraic consequences of the third-order coefficients.
    add_eq(v, fam, "t3-f10", 3, jf(10), b3);
    add_eq(v, fam, "t3-f9", 3, jf(9), b3);
    add_eq(v, fam, "t3-f12", 3, jf(12) - cc(1), b3);
    add_eq(v, fam, "t3-f17", 3, jf(17) - cc(2), b3);
    add_eq(v, fam, "t3-f11", 3, jf(11) + jf(15), b3);
    add_eq(v, fam, "t3-f16", 3, jf(16) + jf(14), b3);
    add_eq(v, fam, "t3-f19", 3, jf(19) + rr(2) * jf(18) - cc(4), b3);
    add_eq(v, fam, "t3-f13", 3, jf(13) - rr(2) * jf(15) - jf(14) - jf(18), b3);
    add_eq(v, fam, "t3-f14", 3, jf(14) - cc(3), b3);
    // Third-order ODEs.
    add_eq(v, fam, "t3-ode1", 3, cn(2) * rr(1) * jf(15) * jV1() + hb() * jf(15, 1), "(3.18)");
    add_eq(v, fam, "t3-ode2", 3, cn(2) * cc(3) * jV1() - hb() * (jf(15) + rr(1) * jf(15, 1)),
           "(3.19)");
    add_eq(v, fam, "t3-ode3", 3,
           cn(2) * rr(1) * (cc(3) + rr(2) * jf(15) - jf(18)) * jV1() - hb() * jf(18, 1), "(3.20)");
    add_eq(v, fam, "t3-ode4", 3,
           hb() * jf(18) + cn(2) * cc(4) * jV1() + hb() * (cc(3) + rr(1) * jf(18, 1)), "(3.21)");

    // Second order.
    add_eq(v, fam, "t2-f3", 2, jf(3) - jf(6) - cc(5), b2);
    add_eq(v, fam, "t2-f7", 2, jf(7) - rr(2) * jf(6) - cc(6), b2);
    add_eq(v, fam, "t2-ode1", 2, rr(1) * jf(15) * jV1() - jf(2, 1), b2);
    add_eq(v, fam, "t2-ode2", 2,
           cn(4) * rr(1) * jf(2) + rr(1) * (cc(3) + cn(2) * rr(2) * jf(15) + jf(18)) * jV1()
               + jf(4, 1) - cn(2) * cc(4) * jV1(1),
           b2);
    add_eq(v, fam, "t2-ode3", 2,
           cn(2) * cc(5) * hb() * rr(1) + cn(2) * rr(1) * jf(6) * (rr(2) * jV1() - hb())
               - hb() * (jf(8, 1) + cn(2) * cc(2) * jV1(1)),
           b2);
    add_eq(v, fam, "t2-ode4", 2, cn(2) * rr(1) * jf(6) * jV1() + hb() * jf(6, 1), b2);
    add_eq(v, fam, "t2-ode5", 2,
           cn(-3) * hb() * rr(1) * jf(6) - cn(2) * rr(1) * (cc(6) - cc(1) * hb() + jf(8)) * jV1()
               - hb() * jf(8, 1),
           b2);
    add_eq(v, fam, "t2-ode6", 2,
           cn(2) * rr(1) * jf(2)
               + rr(1) * (cn(-3) * cc(3) - cn(2) * rr(2) * jf(15) + cn(3) * jf(18)) * jV1()
               + jf(4, 1),
           b2);
    add_eq(v, fam, "t2-ode7", 2,
           jf(4) + (cn(3) * cc(4) + cc(3) * rr(2) + rr(4) * jf(15) - cn(2) * rr(2) * jf(18)) * jV1()
               + cc(4) * rr(1) * jV1(1),
           b2);
    add_eq(v, fam, "t2-ode8", 2,
           cn(2) * cc(5) * hb() * rr(1) + hb() * jf(6)
               + cn(2) * rr(1) * (cc(6) - cc(1) * hb() + rr(2) * jf(6) + jf(8)) * jV1()
               - cn(2) * cc(2) * hb() * jV1(1),
           b2);
    add_eq(v, fam, "t2-ode9", 2,
           cn(-2) * cc(6) * jV1() + hb() * (jf(6) + cn(2) * cc(1) * jV1() + rr(1) * jf(6, 1)), b2);
    add_eq(v, fam, "t2-ode10", 2,
           jf(8) - cn(2) * cc(2) * jV1()
               + rr(1) * (cn(3) * rr(1) * jf(6) + rr(2) * jf(6, 1) + jf(8, 1)),
           b2);

    // First order.
    add_eq(v, fam, "t1-ode1", 1,
           rr(1) * (cn(2) * cc(5) - jf(6)) * jV1() - jf(1, 1) + (rr(2) * jf(6) + jf(8)) * jV1(1),
           b1);
    add_eq(v, fam, "t1-ode2", 1,
           cn(4) * cc(2) * jV0(1)
               - cn(2) * rr(1)
                     * (cn(2) * jf(1) + (cn(2) * rr(2) * (cc(5) + jf(6)) + cn(3) * jf(8)) * jV1()
                        + rr(1) * (rr(2) * jf(6) + jf(8)) * jV1(1)),
           b1);
    add_eq(v, fam, "t1-ode3", 1,
           cn(12) * hb() * rr(1) * jf(15) * jV1() + cn(8) * hb(2) * jf(15, 1)
               - cn(2) * hb() * jf(18, 1) * jV1() + cn(4) * jf(5, 1) - cn(4) * cc(3) * hb() * jV1(1)
               - cn(4) * hb() * jf(18) * jV1(1) + cn(4) * jf(4) * jV1(1)
               + cn(4) * rr(1) * jf(2) * (rr(1) * jV1(1) - cn(2) * jV1())
               + hb(2) * rr(1) * jf(15, 2),
           b1);
    add_eq(v, fam, "t1-ode4", 1,
           cn(-4) * rr(1) * jf(5) + cn(6) * hb() * rr(1) * jf(18) * jV1()
               + cn(4) * rr(1) * jf(4) * jV1()
               - cn(2) * hb() * rr(1) * jf(15) * (hb() - cn(5) * rr(2) * jV1())
               + cn(8) * hb(2) * rr(2) * jf(15, 1) + cn(10) * hb(2) * jf(18, 1)
               - cn(2) * hb() * rr(2) * jf(18, 1) * jV1() + cn(4) * cc(4) * jV0(1)
               + cn(4) * cc(4) * hb() * jV1(1) + hb(2) * rr(3) * jf(15, 2)
               + cn(2) * hb(2) * rr(1) * jf(18, 2),
           b1);

    // Zeroth order.
    add_eq(v, fam, "t0-ode1", 0,
           cn(-2) * cc(2) * jV0(1)
               + rr(1)
                     * (-(rr(1)
                          * (cn(6) * jf(1, 1)
                             + cn(3) * jV1()
                                   * (cn(-2) * cc(5) * rr(1) + cn(3) * rr(1) * jf(6)
                                      + rr(2) * jf(6, 1) + jf(8, 1))
                             + rr(1) * jf(1, 2)))
                        + cn(2) * cc(2) * jV0(2)),
           b0);
    add_eq(v, fam, "t0-ode2", 0,
           cn(12) * rr(2) * (cn(3) * hb() * jf(2, 1) - rr(1) * jf(5) * jV1())
               + cn(4) * rr(2) * (rr(2) * jf(2) + jf(4)) * jV0(1)
               + hb(2)
                     * (cn(-4) * jf(4, 1)
                        + rr(1)
                              * (cn(4) * jf(4, 2)
                                 + rr(1) * (cn(13) * rr(1) * jf(2, 2) + rr(2) * jf(2, 3)
                                            + jf(4, 3)))),
           b0);
    add_eq(v, fam, "t0-ode3", 0,
           cn(10) * hb() * rr(3) * jf(2) * jV1() - cn(2) * rr(3) * jf(5) * jV1()
               + hb()
                     * (cn(-2) * cc(4) * jV0(1)
                        + rr(1)
                              * (rr(1)
                                     * (cn(2) * jV1() * (rr(2) * jf(2, 1) + jf(4, 1))
                                        - cn(6) * jf(5, 1) + (cc(3) + jf(18)) * jV0(1)
                                        - rr(1) * jf(5, 2))
                                 + cn(2) * cc(4) * jV0(2))),
           b0);
    add_eq(v, fam, "t0-ode4", 0,
           cn(24) * hb(2) * rr(2) * jf(6, 1)
               + cn(2) * rr(2) * jV1()
                     * (cn(4) * rr(1) * jf(1)
                        + hb()
                              * (cn(-2) * cc(5) * rr(1) + cn(3) * rr(1) * jf(6) + rr(2) * jf(6, 1)
                                 + jf(8, 1)))
               + cn(4) * rr(2) * (rr(2) * jf(6) + jf(8)) * jV0(1)
               + hb(2)
                     * (cn(-4) * jf(8, 1)
                        + rr(1)
                              * (cn(4) * jf(8, 2)
                                 + rr(1) * (cn(11) * rr(1) * jf(6, 2) + rr(2) * jf(6, 3)
                                            + jf(8, 3)))),
           b0);
}

void build_pseudo_eqs(Registry& R) {
    auto& v = R.pseudo_eqs;
    const std::string fam = "pseudotensor";
    const std::string b3 = "Sec. 4.1, third-order block";
    const std::string b2 = "Sec. 4.1, second-order block";
    const std::string b1 = "Sec. 4.1, first-order block";
    const std::string b0 = "Sec. 4.1, zeroth-order block";

    // Algebraic consequences of the third-order coefficients.
    add_eq(v, fam, "p3-f17", 3, jf(17), b3);
    add_eq(v, fam, "p3-f19", 3, jf(19) - cc(1), b3);
    add_eq(v, fam, "p3-f10", 3, jf(10) - jf(12) + jf(18), b3);
    add_eq(v, fam, "p3-f9", 3, jf(9) + jf(11), b3);
    add_eq(v, fam, "p3-f13", 3, jf(13) - jf(11) + rr(2) * jf(12) - cc(2), b3);
    add_eq(v, fam, "p3-f11", 3, jf(11) - rr(2) * jf(15) - cc(3), b3);
    add_eq(v, fam, "p3-f16", 3, jf(16) + rr(2) * jf(15) - cc(4) * rr(-1), b3);
    // Third-order ODEs.
    add_eq(v, fam, "p3-ode1", 3, cn(2) * rr(1) * jf(14) * jV1() + hb() * jf(14, 1), b3);
    add_eq(v, fam, "p3-ode2", 3, hb() * jf(12) + cn(2) * cc(2) * jV1() + hb() * rr(1) * jf(12, 1),
           b3);
    add_eq(v, fam, "p3-ode3", 3,
           hb() * rr(1) * jf(14) + cn(2) * rr(1) * jf(18) * jV1()
               + hb() * (jf(12, 1) + rr(2) * jf(14, 1)),
           b3);
    add_eq(v, fam, "p3-ode4", 3, cn(2) * rr(1) * jf(12) * jV1() + hb() * jf(18, 1), b3);
    add_eq(v, fam, "p3-ode5", 3,
           cn(2) * hb() * (cc(4) - rr(3) * (jf(15) + jf(18)))
               - cn(4) * rr(2) * (cc(4) + (cc(2) + cc(3)) * rr(1) - rr(3) * jf(12)) * jV1(),
           b3 + "; misprint repaired: the printed form multiplies c4 into (c2+c3)r", true);
    add_eq(v, fam, "p3-ode6", 3,
           hb() * (jf(12) + cn(2) * rr(2) * jf(14) + jf(15) - jf(18))
               - cn(2) * (cc(3) + rr(2) * (jf(15) + jf(18) - jf(12))) * jV1(),
           b3);
    add_eq(v, fam, "p3-ode7", 3,
           cn(-2) * cc(3) * jV1() + jf(12) * (hb() + cn(4) * rr(2) * jV1())
               + hb() * (jf(15) - jf(18) + rr(1) * (jf(12, 1) + jf(15, 1) + jf(18, 1))),
           b3);

    // Second order.
    add_eq(v, fam, "p2-ode1", 2, jf(2, 1) + cc(1) * jV1(1), b2);
    add_eq(v, fam, "p2-ode2", 2, jf(2) - cc(1) * jV1() + rr(1) * jf(2, 1), b2);
    add_eq(v, fam, "p2-ode3", 2, rr(1) * jf(2) + cc(1) * rr(1) * jV1() + jf(3, 1), b2);
    add_eq(v, fam, "p2-ode4", 2, hb() * jf(7) + cn(2) * (jf(3) - cc(1) * hb()) * jV1(), b2);
    add_eq(v, fam, "p2-ode5", 2,
           cn(2) * hb() * jf(5) + cn(2) * hb() * rr(2) * jf(6) + hb() * jf(7)
               + cn(2) * cc(1) * hb() * jV1() + cn(2) * rr(2) * jf(2) * jV1()
               - cn(2) * jf(3) * jV1() + hb() * rr(1) * jf(7, 1),
           b2);
    add_eq(v, fam, "p2-ode6", 2,
           cn(-2) * hb() * rr(1) * jf(6) - cn(2) * rr(1) * (jf(2) + jf(7)) * jV1()
               - hb() * jf(7, 1) + cc(1) * hb() * jV1(1),
           b2);
    add_eq(v, fam, "p2-ode7", 2, cn(2) * rr(1) * jf(6) * jV1() + hb() * jf(6, 1), b2);
    add_eq(v, fam, "p2-ode8", 2,
           cn(4) * hb() * rr(1) * jf(6) + cn(2) * rr(1) * (jf(2) + cn(2) * jf(5) + jf(7)) * jV1()
               + hb() * (jf(7, 1) - jf(2, 1)),
           b2);
    add_eq(v, fam, "p2-ode9", 2,
           hb() * (jf(2) + cn(2) * jf(5) + jf(7))
               + (cc(1) * hb() - cn(2) * (jf(3) + rr(2) * jf(7))) * jV1(),
           b2);
    add_eq(v, fam, "p2-ode10", 2,
           cn(2) * rr(1) * (jf(7) - jf(2)) * jV1()
               + cn(2) * rr(1) * jf(6) * (cn(3) * hb() - cn(2) * rr(2) * jV1())
               + hb() * (jf(2, 1) + cn(2) * jf(5, 1) + jf(7, 1)),
           b2);
    add_eq(v, fam, "p2-ode11", 2,
           cn(4) * hb() * rr(1) * jf(6) + cn(2) * rr(1) * (jf(2) + cn(2) * jf(5) + jf(7)) * jV1()
               + hb() * (jf(7, 1) + cc(1) * jV1(1)),
           b2);
    add_eq(v, fam, "p2-ode12", 2,
           cn(2) * hb() * rr(1) * jf(6) - cn(2) * rr(1) * jf(2) * jV1()
               + hb() * (jf(5, 1) + rr(2) * jf(6, 1)),
           b2);
    add_eq(v, fam, "p2-ode13", 2,
           rr(1) * jf(8)
               + (cn(2) * cc(4) + cn(3) * (cc(2) + cc(3)) * rr(1)
                  + rr(3) * (jf(15) + jf(18) - cn(3) * jf(12)))
                     * jV1()
               + cc(2) * rr(2) * jV1(1),
           b2);
    add_eq(v, fam, "p2-ode14", 2,
           cn(2) * hb() * rr(1) * jf(6) + cn(2) * rr(1) * (jf(2) + jf(7)) * jV1()
               + hb() * (jf(7, 1) - cn(2) * jf(2, 1)) - cn(3) * cc(1) * hb() * jV1(1),
           b2);
    add_eq(v, fam, "p2-ode15", 2,
           cn(2) * rr(1) * (jf(2) + cn(2) * jf(5) - jf(7)) * jV1()
               + cn(4) * rr(1) * jf(6) * (rr(2) * jV1() - hb())
               - hb() * (cn(2) * jf(2, 1) + cn(2) * jf(5, 1) + jf(7, 1)) + cc(1) * hb() * jV1(1),
           b2);

    // First order.
    add_eq(v, fam, "p1-ode1", 1,
           cn(4) * rr(1) * (rr(1) * (cn(2) * jf(5) - jf(7)) * jV1() + cc(1) * jV0(1))
               + cn(2) * rr(1) * (cn(2) * cc(6) - cc(5) + cn(2) * jf(3)) * jV1(1),
           b1 + "; misprint repaired: the printed form has 2 c6 r^2 for 2 c6", true);
    add_eq(v, fam, "p1-ode2", 1,
           cn(6) * cc(4) * hb(3) - cn(4) * hb() * rr(5) * jf(4)
               + cn(8) * hb(2) * rr(5) * jf(14) * (hb() + cn(2) * rr(2) * jV1())
               + rr(2)
                     * (cn(2) * jV1()
                            * (cn(-3) * cc(4) * hb(2)
                               + rr(3)
                                     * (cn(-2) * jf(1)
                                        + hb()
                                              * (cn(2) * jf(8)
                                                 + hb()
                                                       * (jf(12) + cn(5) * (jf(15) + jf(18))
                                                          - rr(1) * jf(15, 1)))))
                        + hb() * rr(1)
                              * (cn(12) * hb(2) * rr(1) * jf(12, 1)
                                 + cn(20) * hb(2) * rr(3) * jf(14, 1)
                                 + cn(14) * hb(2) * rr(1) * jf(15, 1) + cn(4) * cc(4) * jV0(1)
                                 + cn(2) * cc(2) * rr(1) * jV0(1) + cn(2) * cc(3) * rr(1) * jV0(1)
                                 + cn(2) * cc(4) * hb() * jV1(1)
                                 + cn(3) * cc(2) * hb() * rr(1) * jV1(1)
                                 - cc(3) * hb() * rr(1) * jV1(1)
                                 - cn(2) * hb() * rr(3) * jf(15) * jV1(1)
                                 + cn(2) * hb(2) * rr(2) * jf(12, 2)
                                 + cn(2) * hb(2) * rr(4) * jf(14, 2)
                                 + cn(2) * hb(2) * rr(2) * jf(15, 2))),
           b1);
    add_eq(v, fam, "p1-ode3", 1,
           cn(4) * cc(4) * hb(2) + cn(4) * rr(3) * jf(1)
               - cn(8) * hb() * rr(5) * jf(14) * (hb() - rr(2) * jV1())
               + rr(2)
                     * (cn(2)
                            * (hb() * (cc(2) * rr(1) - cc(3) * rr(1) - cn(4) * cc(4))
                               + rr(3) * (cn(5) * hb() * jf(12) + hb() * jf(18) + cn(2) * jf(8)))
                            * jV1()
                        + cn(2) * hb() * rr(1) * jf(15) * (cn(5) * rr(2) * jV1() - cn(2) * hb())
                        + rr(2)
                              * (cn(4) * cc(2) * jV0(1)
                                 + hb()
                                       * (cn(4) * cc(2) * jV1(1)
                                          + hb()
                                                * (cn(6) * jf(12, 1) + cn(6) * jf(15, 1)
                                                   + cn(6) * jf(18, 1)
                                                   + rr(1)
                                                         * (jf(12, 2) + jf(15, 2)
                                                            + jf(18, 2)))))),
           b1);
    add_eq(v, fam, "p1-ode4", 1,
           cn(2)
                   * (rr(3) * (cn(13) * hb() * jf(12) + cn(7) * hb() * jf(15) - cn(7) * hb() * jf(18)
                               + cn(2) * jf(8))
                      - cn(2) * cc(4) * hb())
                   * jV1()
               - cn(40) * hb() * rr(3) * jf(14) * (hb() - rr(2) * jV1())
               + rr(1)
                     * (cn(-4) * rr(1) * jf(1, 1) - cn(6) * hb(2) * rr(1) * jf(12, 1)
                        + cn(10) * hb(2) * rr(1) * jf(15, 1) + cn(18) * hb(2) * rr(1) * jf(18, 1)
                        + cn(4) * cc(2) * rr(1) * jV0(1) + cn(8) * cc(4) * hb() * jV1(1)
                        + cn(4) * hb() * rr(1) * (cc(2) + cc(3)) * jV1(1)
                        + hb(2) * rr(2) * (jf(15, 2) + cn(3) * jf(18, 2) - jf(12, 2))),
           b1);
    add_eq(v, fam, "p1-ode5", 1,
           cn(-12) * cc(4) * hb(3) + cn(8) * hb(2) * rr(5) * jf(14) * (hb() - cn(15) * rr(2) * jV1())
               + cn(16) * rr(5) * jf(4) * (hb() - rr(2) * jV1())
               + rr(2)
                     * (jV1()
                            * (cn(8) * cc(4) * hb(2)
                               + cn(2) * rr(3)
                                     * (cn(-4) * jf(1)
                                        + hb()
                                              * (cn(2) * jf(8)
                                                 + hb()
                                                       * (cn(-27) * jf(12) - cn(13) * jf(15)
                                                          + cn(17) * jf(18)
                                                          + cn(2) * rr(1) * jf(15, 1)))))
                        + hb() * rr(1)
                              * (cn(4) * rr(1) * jf(1, 1) + cn(30) * hb(2) * rr(1) * jf(12, 1)
                                 - cn(80) * hb(2) * rr(3) * jf(14, 1)
                                 - cn(6) * hb(2) * rr(1) * jf(15, 1)
                                 - cn(42) * hb(2) * rr(1) * jf(18, 1) - cn(8) * cc(4) * jV0(1)
                                 + cn(4) * cc(3) * rr(1) * jV0(1) + cn(8) * rr(3) * jf(15) * jV0(1)
                                 - cn(4) * cc(4) * hb() * jV1(1)
                                 - cn(6) * cc(2) * hb() * rr(1) * jV1(1)
                                 - cn(14) * cc(3) * hb() * rr(1) * jV1(1)
                                 + cn(4) * hb() * rr(3) * jf(15) * jV1(1)
                                 + cn(5) * hb(2) * rr(2) * jf(12, 2)
                                 - cn(8) * hb(2) * rr(4) * jf(14, 2)
                                 + cn(15) * hb(2) * rr(2) * jf(15, 2)
                                 - cn(7) * hb(2) * rr(2) * jf(18, 2)
                                 + cn(8) * cc(4) * hb() * rr(1) * jV1(2)
                                 + cn(2) * hb(2) * rr(3) * jf(15, 3))),
           b1);

    // Zeroth order.
    add_eq(v, fam, "p0-ode1", 0,
           cn(8) * rr(4) * jf(4) * jV1()
               + hb()
                     * (cn(4) * cc(4) * jV0(1)
                        + rr(3) * (cn(8) * jf(4, 1) - cn(4) * jf(15) * jV0(1) + rr(1) * jf(4, 2))
                        - cn(2) * cc(4) * rr(1) * jV0(2)),
           b0 + "; misprint repaired: the printed form negates the hbar group", true);
    add_eq(v, fam, "p0-ode2", 0,
           cn(2) * rr(2) * jf(1) * jV1() + cn(4) * rr(2) * jf(4) * (rr(2) * jV1() - hb())
               - hb()
                     * (cn(4) * rr(1) * jf(1, 1)
                        + (cc(3) * rr(1) - cc(2) * rr(1) - cn(2) * cc(4) + cn(2) * rr(3) * jf(15))
                              * jV0(1)
                        + rr(2) * jf(1, 2)),
           b0);
    add_eq(v, fam, "p0-ode3", 0,
           cn(2) * hb() * (cn(4) * rr(2) * jV1() - cn(3) * hb()) * jf(5, 1)
               + cn(56) * hb(2) * rr(2) * jf(6, 1) + cn(8) * hb() * rr(4) * jV1() * jf(6, 1)
               - cn(6) * hb(2) * jf(7, 1) + cn(8) * hb() * rr(2) * jV1() * jf(7, 1)
               + cn(4) * rr(2) * jV0(1) * (jf(5) + jf(7))
               + cn(4) * rr(3) * jf(6) * (cn(12) * hb() * jV1() + rr(1) * jV0(1))
               + cn(6) * hb(2) * rr(1) * jf(5, 2) + cn(16) * hb(2) * rr(3) * jf(6, 2)
               + cn(6) * hb(2) * rr(1) * jf(7, 2)
               + hb(2) * rr(2) * (jf(5, 3) + rr(2) * jf(6, 3) + jf(7, 3)),
           b0);
    add_eq(v, fam, "p0-ode4", 0,
           cn(2) * cc(5) * hb(2) + cn(24) * hb() * rr(4) * jf(6) * (hb() - rr(2) * jV1())
               + rr(1)
                     * (cn(-2) * hb(2) * jf(3, 1)
                        - cn(2) * hb() * rr(1) * jV1()
                              * (cn(4) * cc(6) * rr(2) - cc(5)
                                 + rr(1)
                                       * (jf(3, 1)
                                          + rr(1)
                                                * (cn(2) * jf(5) + jf(7)
                                                   + cn(2) * rr(1)
                                                         * (jf(5, 1) + rr(2) * jf(6, 1)
                                                            + jf(7, 1)))))
                        + rr(1)
                              * (cn(12) * hb(2) * rr(1) * jf(5, 1) + cn(4) * hb(2) * rr(3) * jf(6, 1)
                                 + cn(8) * hb(2) * rr(1) * jf(7, 1) - cn(2) * cc(5) * rr(1) * jV0(1)
                                 + cn(4) * cc(6) * rr(3) * jV0(1) + cn(4) * rr(1) * jf(3) * jV0(1)
                                 + cn(2) * hb(2) * jf(3, 2) + cn(2) * hb(2) * rr(2) * jf(5, 2)
                                 + hb(2) * rr(2) * jf(7, 2) + hb(2) * rr(1) * jf(3, 3))),
           b0);
}

Bindings zero_jets() {
    Bindings b;
    for (int k = 1; k <= 19; ++k) b.jets[vars::fam_f(k)] = FieldElem();
    return b;
}

void add_solution(Registry& R, SolutionBranch br) {
    R.solution_order.push_back(br.id);
    R.solutions.emplace(br.id, std::move(br));
}

void build_solutions(Registry& R) {
    {
        SolutionBranch br;
        br.id = "tensor-final";
        br.family = "tensor";
        br.assignments = zero_jets();
        br.assignments.jets[vars::fam_f(7)] = cc(1) * hb();
        br.assignments.jets[vars::fam_f(12)] = cc(1);
        br.assignments.consts[vars::c(2)] = FieldElem();
        br.assignments.consts[vars::c(3)] = FieldElem();
        br.assignments.consts[vars::c(4)] = FieldElem();
        br.assignments.consts[vars::c(5)] = FieldElem();
        br.assignments.consts[vars::c(6)] = cc(1) * hb();
        br.V0_symbolic = br.V1_symbolic = true;
        br.surviving_constants = 1;
        br.source = "Sec. 3.2, arbitrary-potential branch";
        add_solution(R, std::move(br));
    }
    {
        SolutionBranch br;
        br.id = "tensor-rejected-f15";
        br.family = "tensor";
        br.assignments = zero_jets();
        br.assignments.jets[vars::fam_f(15)] = rr(-1);
        for (int k = 1; k <= 6; ++k) br.assignments.consts[vars::c(k)] = FieldElem();
        br.V1 = qn(1, 2) * hb() * rr(-2);
        br.assignments.jets[vars::FAM_V1] = br.V1;
        br.V0_symbolic = true;
        br.surviving_constants = 0;
        br.source = "Sec. 3.2, exclusion argument (rejected)";
        add_solution(R, std::move(br));
    }
    {
        SolutionBranch br;
        br.id = "pseudo-case1-sub1";
        br.family = "pseudotensor";
        br.assignments = zero_jets();
        auto& J = br.assignments.jets;
        J[vars::fam_f(1)] = cn(-9) * cc(2) * hb(2) * rr(-2);
        J[vars::fam_f(2)] = cn(-2) * cc(1) * hb() * rr(-2);
        J[vars::fam_f(3)] = qn(3, 2) * cc(1) * hb();
        J[vars::fam_f(4)] = cn(24) * cc(2) * hb(2) * rr(-4);
        J[vars::fam_f(6)] = cn(4) * cc(1) * hb() * rr(-4);
        J[vars::fam_f(7)] = cn(-2) * cc(1) * hb() * rr(-2);
        J[vars::fam_f(8)] = cn(2) * cc(2) * hb() * rr(-2);
        J[vars::fam_f(9)] = cn(2) * cc(2);
        J[vars::fam_f(10)] = cn(-4) * cc(2) * rr(-2);
        J[vars::fam_f(11)] = cn(-2) * cc(2);
        J[vars::fam_f(12)] = cn(4) * cc(2) * rr(-2);
        J[vars::fam_f(13)] = cn(-5) * cc(2);
        J[vars::fam_f(14)] = cn(8) * cc(2) * rr(-4);
        J[vars::fam_f(15)] = cn(-4) * cc(2) * rr(-2);
        J[vars::fam_f(16)] = cn(4) * cc(2);
        J[vars::fam_f(18)] = cn(8) * cc(2) * rr(-2);
        J[vars::fam_f(19)] = cc(1);
        br.assignments.consts[vars::c(3)] = cn(2) * cc(2);
        br.assignments.consts[vars::c(4)] = FieldElem();
        br.assignments.consts[vars::c(5)] = FieldElem();
        br.assignments.consts[vars::c(6)] = cn(-2) * cc(1) * hb();
        br.V1 = cn(2) * hb() * rr(-2);
        br.V0 = cn(3) * hb(2) * rr(-2);
        J[vars::FAM_V1] = br.V1;
        J[vars::FAM_V0] = br.V0;
        br.surviving_constants = 2;
        br.source = "Sec. 4.2, Case 1 Subcase 1";
        add_solution(R, std::move(br));
    }
    {
        SolutionBranch br;
        br.id = "pseudo-case1-sub2";
        br.family = "pseudotensor";
        br.assignments = zero_jets();
        auto& J = br.assignments.jets;
        J[vars::fam_f(1)] = qn(-3, 2) * cc(2) * hb(2) * rr(-2);
        J[vars::fam_f(2)] = cc(1) * hb() * rr(-2);
        J[vars::fam_f(3)] = qn(1, 2) * cc(1) * hb();
        J[vars::fam_f(5)] = cc(1) * hb() * rr(-2);
        J[vars::fam_f(7)] = -(cc(1) * hb() * rr(-2));
        J[vars::fam_f(8)] = cn(3) * cc(2) * hb() * rr(-2);
        J[vars::fam_f(9)] = cn(2) * cc(2);
        J[vars::fam_f(10)] = cn(-4) * cc(2) * rr(-2);
        J[vars::fam_f(11)] = cn(-2) * cc(2);
        J[vars::fam_f(12)] = cn(-2) * cc(2) * rr(-2);
        J[vars::fam_f(13)] = cc(2);
        J[vars::fam_f(18)] = cn(2) * cc(2) * rr(-2);
        J[vars::fam_f(19)] = cc(1);
        br.assignments.consts[vars::c(3)] = cn(-2) * cc(2);
        br.assignments.consts[vars::c(4)] = FieldElem();
        br.assignments.consts[vars::c(5)] = FieldElem();
        br.assignments.consts[vars::c(6)] = cc(1) * hb();
        br.V1 = -(hb() * rr(-2));
        br.V0 = al();
        J[vars::FAM_V1] = br.V1;
        J[vars::FAM_V0] = br.V0;
        br.surviving_constants = 2;
        br.source = "Sec. 4.2, Case 1 Subcase 2";
        add_solution(R, std::move(br));
    }
    auto case2_common = [&](SolutionBranch& br) {
        br.family = "pseudotensor";
        br.assignments = zero_jets();
        for (int k = 1; k <= 6; ++k) br.assignments.consts[vars::c(k)] = FieldElem();
        auto& J = br.assignments.jets;
        J[vars::fam_f(12)] = cc(11) * rr(-1);
        J[vars::fam_f(13)] = -(cc(11) * rr(1));
        br.V0_symbolic = true;
        br.surviving_constants = 1;
    };
    {
        SolutionBranch br;
        br.id = "pseudo-case2-I";
        case2_common(br);
        auto& J = br.assignments.jets;
        J[vars::fam_f(1)] = cn(-6) * hb(2) * cc(11) * rr(-1);
        J[vars::fam_f(4)] = cn(15) * hb(2) * cc(11) * rr(-3);
        J[vars::fam_f(10)] = cn(-2) * cc(11) * rr(-1);
        J[vars::fam_f(14)] = cn(4) * cc(11) * rr(-3);
        J[vars::fam_f(18)] = cn(3) * cc(11) * rr(-1);
        br.V1 = qn(3, 2) * hb() * rr(-2);
        J[vars::FAM_V1] = br.V1;
        br.source = "Sec. 4.2, Case 2 branch I";
        add_solution(R, std::move(br));
    }
    {
        SolutionBranch br;
        br.id = "pseudo-case2-II";
        case2_common(br);
        auto& J = br.assignments.jets;
        J[vars::fam_f(8)] = hb() * cc(11) * rr(-1);
        J[vars::fam_f(18)] = cc(11) * rr(-1);
        br.V1 = qn(1, 2) * hb() * rr(-2);
        J[vars::FAM_V1] = br.V1;
        br.source = "Sec. 4.2, Case 2 branch II";
        add_solution(R, std::move(br));
    }
    {
        SolutionBranch br;
        br.id = "pseudo-case2-III";
        case2_common(br);
        auto& J = br.assignments.jets;
        J[vars::fam_f(8)] = cn(-2) * hb() * cc(11) * rr(-1);
        J[vars::fam_f(10)] = cn(2) * cc(11) * rr(-1);
        J[vars::fam_f(18)] = -(cc(11) * rr(-1));
        br.V1 = qn(-1, 2) * hb() * rr(-2);
        J[vars::FAM_V1] = br.V1;
        br.source = "Sec. 4.2, Case 2 branch III";
        add_solution(R, std::move(br));
    }
}

const Registry& registry() {
    static const Registry R = [] {
        Registry r;
        build_cases(r);
        build_integrals(r);
        build_tensor_eqs(r);
        build_pseudo_eqs(r);
        build_solutions(r);
        return r;
    }();
    return R;
}

}  // namespace

const CaseRow& get_case(const std::string& id) {
    const Registry& R = registry();
    auto it = R.cases.find(id);
    if (it == R.cases.end()) it = R.cases.find(id + "a");
    if (it == R.cases.end()) throw CalcError("unknown case row: " + id);
    return it->second;
}

const IntegralEntry& get_integral(const std::string& id) {
    const Registry& R = registry();
    auto it = R.integrals.find(id);
    if (it == R.integrals.end()) throw CalcError("unknown integral: " + id);
    return it->second;
}

const std::vector<DeterminingEq>& get_determining(const std::string& family) {
    const Registry& R = registry();
    if (family == "tensor") return R.tensor_eqs;
    if (family == "pseudotensor" || family == "pseudo-tensor") return R.pseudo_eqs;
    throw CalcError("unknown determining family: " + family);
}

const SolutionBranch& get_solution(const std::string& id) {
    const Registry& R = registry();
    auto it = R.solutions.find(id);
    if (it == R.solutions.end()) it = R.solutions.find("pseudo-" + id);
    if (it == R.solutions.end()) throw CalcError("unknown solution branch: " + id);
    return it->second;
}

FieldElem aux_function(const std::string& name) { return aux_impl(name); }

std::vector<std::string> case_ids() { return registry().case_order; }
std::vector<std::string> integral_ids() { return registry().integral_order; }
std::vector<std::string> solution_ids() { return registry().solution_order; }

OpExpr hamiltonian(const CaseRow& row) {
    return op_H(row.V0_symbolic ? FieldElem::jetf(vars::FAM_V0) : row.V0, row.V1);
}

std::string dump_catalog() {
    const Registry& R = registry();
    std::ostringstream os;
    os << "# operator catalog: potentials, integrals of motion, determining systems\n";
    os << "# exact data; one entry per stanza; sources cite the published statements\n\n";

    os << "== case rows ==\n";
    for (const auto& id : R.case_order) {
        const CaseRow& row = R.cases.at(id);
        os << "[case " << row.id << "]\n";
        os << "  V1 = " << row.V1.str() << "\n";
        os << "  V0 = " << (row.V0_symbolic ? std::string("V0(r) arbitrary") : row.V0.str())
           << "\n";
        os << "  integrals =";
        for (const auto& s : row.integrals) os << " " << s;
        os << "\n  source = " << row.source << "\n\n";
    }

    os << "== auxiliary radial functions ==\n";
    for (const char* name : {"q", "Qplus", "Qminus", "Qtilde", "W", "Y", "Ytilde", "Z"})
        os << "  " << name << " = " << aux_impl(name).str() << "\n";
    os << "\n";

    os << "== integrals of motion ==\n";
    for (const auto& id : R.integral_order) {
        const IntegralEntry& e = R.integrals.at(id);
        os << "[integral " << e.id << "] family=" << e.family << " arity=" << e.arity
           << " case=" << e.required_case << "\n";
        os << "  source = " << e.source << "\n";
        if (e.arity == 2) {
            os << "  component(1,2) = " << e.component(0, 1).str() << "\n";
            os << "  component(1,1) = " << e.component(0, 0).str() << "\n";
        } else if (e.arity == 1) {
            os << "  component(3) = " << e.component(2, 0).str() << "\n";
        } else {
            os << "  value = " << e.component(0, 0).str() << "\n";
        }
        os << "\n";
    }

    for (const char* fam : {"tensor", "pseudotensor"}) {
        os << "== determining system: " << fam << " ==\n";
        for (const DeterminingEq& e : get_determining(fam)) {
            os << "[" << e.id << "] order=" << e.order << (e.corrected ? " (repaired)" : "")
               << "\n";
            os << "  0 = " << e.lhs.str() << "\n";
            os << "  source = " << e.source << "\n";
        }
        os << "\n";
    }

    os << "== solution branches ==\n";
    for (const auto& id : R.solution_order) {
        const SolutionBranch& br = R.solutions.at(id);
        os << "[solution " << br.id << "] family=" << br.family
           << " surviving-constants=" << br.surviving_constants << "\n";
        os << "  V1 = " << (br.V1_symbolic ? std::string("V1(r) arbitrary") : br.V1.str()) << "\n";
        os << "  V0 = " << (br.V0_symbolic ? std::string("V0(r) arbitrary") : br.V0.str()) << "\n";
        for (const auto& [fam, val] : br.assignments.jets) {
            if (fam == vars::FAM_V0 || fam == vars::FAM_V1) continue;
            os << "  f" << fam - 1 << " = " << val.str() << "\n";
        }
        for (const auto& [var, val] : br.assignments.consts)
            os << "  " << var_name(var) << " = " << val.str() << "\n";
        os << "  source = " << br.source << "\n\n";
    }
    return os.str();
}

}  // namespace spinops
