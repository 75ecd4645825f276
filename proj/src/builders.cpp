#include "spinops/builders.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace spinops {

template <class A>
A dot_xp() {
    A out;
    for (int k = 0; k < 3; ++k) out += A::x(k) * A::p(k);
    return out;
}

template <class A>
A angmom(int k) {
    int a = (k + 1) % 3, b = (k + 2) % 3;
    return A::x(a) * A::p(b) - A::x(b) * A::p(a);
}

template <class A>
A dot_sL() {
    A out;
    for (int k = 0; k < 3; ++k) out += A::sigma(k) * angmom<A>(k);
    return out;
}

template <class A>
A dot_sx() {
    A out;
    for (int k = 0; k < 3; ++k) out += A::sigma(k) * A::x(k);
    return out;
}

template <class A>
A dot_sp() {
    A out;
    for (int k = 0; k < 3; ++k) out += A::sigma(k) * A::p(k);
    return out;
}

template <class A>
A p_squared() {
    A out;
    for (int k = 0; k < 3; ++k) out += A::p(k) * A::p(k);
    return out;
}

template <class A>
A L_squared() {
    A out;
    for (int k = 0; k < 3; ++k) out += angmom<A>(k) * angmom<A>(k);
    return out;
}

template <class A>
A wedge_xs(int k) {
    int a = (k + 1) % 3, b = (k + 2) % 3;
    return A::x(a) * A::sigma(b) - A::x(b) * A::sigma(a);
}

template <class A>
A wedge_ps(int k) {
    int a = (k + 1) % 3, b = (k + 2) % 3;
    return A::p(a) * A::sigma(b) - A::p(b) * A::sigma(a);
}

template OpExpr dot_xp<OpExpr>();
template OpExpr angmom<OpExpr>(int);
template OpExpr dot_sL<OpExpr>();
template OpExpr dot_sx<OpExpr>();
template OpExpr dot_sp<OpExpr>();
template OpExpr p_squared<OpExpr>();
template OpExpr L_squared<OpExpr>();
template OpExpr wedge_xs<OpExpr>(int);
template OpExpr wedge_ps<OpExpr>(int);
template SymbolExpr dot_xp<SymbolExpr>();
template SymbolExpr angmom<SymbolExpr>(int);
template SymbolExpr dot_sL<SymbolExpr>();
template SymbolExpr dot_sx<SymbolExpr>();
template SymbolExpr dot_sp<SymbolExpr>();
template SymbolExpr p_squared<SymbolExpr>();
template SymbolExpr L_squared<SymbolExpr>();
template SymbolExpr wedge_xs<SymbolExpr>(int);
template SymbolExpr wedge_ps<SymbolExpr>(int);

OpExpr op_x(int k) { return OpExpr::x(k); }
OpExpr op_p(int k) { return OpExpr::p(k); }
OpExpr op_sigma(int k) { return OpExpr::sigma(k); }
OpExpr op_L(int k) { return angmom<OpExpr>(k); }

OpExpr op_J(int k) {
    return op_L(k) + op_sigma(k) * (fe_hbar() / FieldElem(2L));
}

OpExpr op_S(int k) {
    FieldElem half_h = fe_hbar() / FieldElem(2L);
    return op_sigma(k) * (-half_h) + OpExpr(SpatialPoly::x(k)) * (fe_hbar() * fe_r(-2)) * dot_sx<OpExpr>();
}

OpExpr op_Pi(int k) {
    return op_p(k) - wedge_xs<OpExpr>(k) * (fe_hbar() * fe_r(-2));
}

OpExpr radial(const FieldElem& g) { return OpExpr(g); }

OpExpr op_H(const FieldElem& V0, const FieldElem& V1) {
    return p_squared<OpExpr>() * (FieldElem(1L) / FieldElem(2L)) + OpExpr(V0) +
           OpExpr(V1) * dot_sL<OpExpr>();
}

OpExpr op_H() { return op_H(FieldElem::jetf(vars::FAM_V0), FieldElem::jetf(vars::FAM_V1)); }

OpExpr symmetrize(const std::vector<OpExpr>& factors) {
    if (factors.empty()) throw CalcError("symmetrize needs at least one factor");
    // Equal factors get equal labels so every distinct arrangement is built
    // exactly once.
    std::vector<const OpExpr*> reps;
    std::vector<int> labels;
    for (const auto& f : factors) {
        int id = -1;
        for (size_t t = 0; t < reps.size(); ++t)
            if (*reps[t] == f) { id = static_cast<int>(t); break; }
        if (id < 0) {
            id = static_cast<int>(reps.size());
            reps.push_back(&f);
        }
        labels.push_back(id);
    }
    std::sort(labels.begin(), labels.end());
    OpExpr sum;
    long count = 0;
    do {
        OpExpr prod = *reps[static_cast<size_t>(labels[0])];
        for (size_t t = 1; t < labels.size(); ++t)
            prod = prod * *reps[static_cast<size_t>(labels[t])];
        sum += prod;
        ++count;
    } while (std::next_permutation(labels.begin(), labels.end()));
    return sum * (FieldElem(1L) / FieldElem(count));
}

namespace {

// Factor codes for the printed family tables. I/J suffix marks which free
// index the factor carries.
enum F : int {
    XI, XJ, PI, PJ, SI, SJ, LI, LJ, WXI, WXJ, WPI, WPJ,
    DXP, DSL, DSX, DSP, PSQ, LSQ
};

using Summand = std::vector<int>;
using Member = std::vector<Summand>;

// Every member is a symmetrized pair A_i B_j + B_i A_j (possibly with scalar
// prefactors).  When the two vector slots coincide (A = B) the pair is kept in
// expanded form, e.g. x_i x_j + x_j x_i; this doubling is part of the member's
// definition and is what the coefficient solutions are normalized against.
const std::vector<Member>& tensor_table() {
    static const std::vector<Member> t = {
        /* T1  */ {{XI, XJ}, {XJ, XI}},
        /* T2  */ {{DXP, XI, XJ}, {DXP, XJ, XI}},
        /* T3  */ {{DSL, XI, XJ}, {DSL, XJ, XI}},
        /* T4  */ {{XI, PJ}, {PI, XJ}},
        /* T5  */ {{XI, WXJ}, {WXI, XJ}},
        /* T6  */ {{DXP, XI, WXJ}, {DXP, WXI, XJ}},
        /* T7  */ {{LI, SJ}, {SI, LJ}},
        /* T8  */ {{PI, WXJ}, {WXI, PJ}},
        /* T9  */ {{PSQ, XI, XJ}, {PSQ, XJ, XI}},
        /* T10 */ {{LSQ, XI, XJ}, {LSQ, XJ, XI}},
        /* T11 */ {{DXP, DSL, XI, XJ}, {DXP, DSL, XJ, XI}},
        /* T12 */ {{LI, LJ}, {LJ, LI}},
        /* T13 */ {{DSL, XI, PJ}, {DSL, PI, XJ}},
        /* T14 */ {{PSQ, XI, WXJ}, {PSQ, WXI, XJ}},
        /* T15 */ {{LSQ, XI, WXJ}, {LSQ, WXI, XJ}},
        /* T16 */ {{DXP, XI, WPJ}, {DXP, WPI, XJ}},
        /* T17 */ {{PI, PJ}, {PJ, PI}},
        /* T18 */ {{DXP, PI, WXJ}, {DXP, WXI, PJ}},
        /* T19 */ {{PI, WPJ}, {WPI, PJ}},
        /* T20 */ {{XI, WPJ}, {WPI, XJ}},
        /* T21 */ {{DXP, LI, SJ}, {DXP, SI, LJ}},
        /* T22 */ {{DXP, XI, PJ}, {DXP, PI, XJ}},
        /* T23 */ {{DXP, DXP, XI, XJ}, {DXP, DXP, XJ, XI}},
        /* T24 */ {{DXP, DXP, XI, WXJ}, {DXP, DXP, WXI, XJ}},
        /* T25 */ {{DSX, XI, LJ}, {DSX, LI, XJ}},
        /* T26 */ {{DXP, DSX, XI, LJ}, {DXP, DSX, LI, XJ}},
        /* T27 */ {{DSX, PI, LJ}, {DSX, LI, PJ}},
        /* T28 */ {{DSP, XI, LJ}, {DSP, LI, XJ}},
    };
    return t;
}

const std::vector<Member>& pseudo_table() {
    static const std::vector<Member> t = {
        /* Y1  */ {{XI, SJ}, {SI, XJ}},
        /* Y2  */ {{DXP, XI, SJ}, {DXP, SI, XJ}},
        /* Y3  */ {{PI, SJ}, {SI, PJ}},
        /* Y4  */ {{DSX, XI, XJ}, {DSX, XJ, XI}},
        /* Y5  */ {{DSP, XI, XJ}, {DSP, XJ, XI}},
        /* Y6  */ {{DXP, DSX, XI, XJ}, {DXP, DSX, XJ, XI}},
        /* Y7  */ {{DSX, XI, PJ}, {DSX, PI, XJ}},
        /* Y8  */ {{XI, LJ}, {LI, XJ}},
        /* Y9  */ {{PSQ, XI, SJ}, {PSQ, SI, XJ}},
        /* Y10 */ {{LSQ, XI, SJ}, {LSQ, SI, XJ}},
        /* Y11 */ {{DXP, PI, SJ}, {DXP, SI, PJ}},
        /* Y12 */ {{DXP, WXI, LJ}, {DXP, LI, WXJ}},
        /* Y13 */ {{WPI, LJ}, {LI, WPJ}},
        /* Y14 */ {{DSX, LSQ, XI, XJ}, {DSX, LSQ, XJ, XI}},
        /* Y15 */ {{DXP, DSX, XI, PJ}, {DXP, DSX, PI, XJ}},
        /* Y16 */ {{DSX, PI, PJ}, {DSX, PJ, PI}},
        /* Y17 */ {{DXP, XI, LJ}, {DXP, LI, XJ}},
        /* Y18 */ {{DSL, XI, LJ}, {DSL, LI, XJ}},
        /* Y19 */ {{PI, LJ}, {LI, PJ}},
        /* Y20 */ {{DSP, XI, PJ}, {DSP, PI, XJ}},
        /* Y21 */ {{DXP, LI, SJ}, {DXP, SI, LJ}},
        /* Y22 */ {{DSX, LI, LJ}, {DSX, LJ, LI}},
        /* Y23 */ {{WXI, LJ}, {LI, WXJ}},
        /* Y24 */ {{DXP, DSP, XI, XJ}, {DXP, DSP, XJ, XI}},
        /* Y25 */ {{DXP, DXP, XI, SJ}, {DXP, DXP, SI, XJ}},
        /* Y26 */ {{DXP, DXP, DSX, XI, XJ}, {DXP, DXP, DSX, XJ, XI}},
    };
    return t;
}

template <class A>
A factor_expr(int f, int i, int j) {
    switch (f) {
        case XI: return A::x(i);
        case XJ: return A::x(j);
        case PI: return A::p(i);
        case PJ: return A::p(j);
        case SI: return A::sigma(i);
        case SJ: return A::sigma(j);
        case LI: return angmom<A>(i);
        case LJ: return angmom<A>(j);
        case WXI: return wedge_xs<A>(i);
        case WXJ: return wedge_xs<A>(j);
        case WPI: return wedge_ps<A>(i);
        case WPJ: return wedge_ps<A>(j);
        case DXP: return dot_xp<A>();
        case DSL: return dot_sL<A>();
        case DSX: return dot_sx<A>();
        case DSP: return dot_sp<A>();
        case PSQ: return p_squared<A>();
        case LSQ: return L_squared<A>();
    }
    throw std::logic_error("unknown factor code");
}

const Member& family_member(char family, int k) {
    const auto& table = family == 'T' ? tensor_table() : pseudo_table();
    if ((family != 'T' && family != 'Y') || k < 1 || k > static_cast<int>(table.size()))
        throw CalcError("unknown generator family member");
    return table[static_cast<size_t>(k - 1)];
}

}  // namespace

int family_size(char family) {
    if (family == 'T') return static_cast<int>(tensor_table().size());
    if (family == 'Y') return static_cast<int>(pseudo_table().size());
    throw CalcError("unknown generator family");
}

template <class A>
A tensor_component(char family, int k, int i, int j) {
    A out;
    for (const auto& summand : family_member(family, k)) {
        A prod = factor_expr<A>(summand[0], i, j);
        for (size_t t = 1; t < summand.size(); ++t)
            prod = prod * factor_expr<A>(summand[t], i, j);
        out += prod;
    }
    return out;
}

template OpExpr tensor_component<OpExpr>(char, int, int, int);
template SymbolExpr tensor_component<SymbolExpr>(char, int, int, int);

std::vector<std::vector<OpExpr>> family_factors(char family, int k, int i, int j) {
    std::vector<std::vector<OpExpr>> out;
    for (const auto& summand : family_member(family, k)) {
        std::vector<OpExpr> fs;
        for (int f : summand) fs.push_back(factor_expr<OpExpr>(f, i, j));
        out.push_back(std::move(fs));
    }
    return out;
}

}  // namespace spinops
