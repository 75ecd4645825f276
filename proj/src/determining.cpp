#include "spinops/determining.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "spinops/builders.hpp"

namespace spinops {
namespace {

long ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

std::string triple(const std::array<int, 3>& e) {
    std::ostringstream os;
    os << e[0] << e[1] << e[2];
    return os.str();
}

bool references_family(const FieldElem& g, int family) {
    for (int d = 0; d <= 8; ++d)
        if (g.contains(vars::jet(family, d))) return true;
    return false;
}

OpExpr to_op(const SymbolExpr& s) {
    OpExpr out;
    for (const auto& [key, poly] : s.terms()) out.add_term(key, poly);
    return out;
}

// One linear relation: the dependent member equals a combination of earlier
// members, written as lhs - sum(coeff * member) for the residual.
struct Relation {
    int lhs;  // index of the dependent member
    std::vector<std::pair<FieldElem, int>> rhs;
};

std::vector<Relation> relation_table(char family) {
    const FieldElem one(1L), r2 = FieldElem::variable(vars::r, 2);
    const FieldElem half(rat(1, 2)), two(2L);
    if (family == 'T')
        return {
            {20, {{-one, 7}, {one, 8}}},
            {21, {{-one, 16}, {one, 18}}},
            {28, {{one, 14}, {-one, 16}, {one, 13}}},
            {22, {{half * r2, 17}, {half, 12}, {half, 9}}},
            {23, {{r2, 9}, {-one, 10}}},
            {24, {{r2, 14}, {-one, 15}}},
            {25, {{-r2, 7}, {one, 6}, {one, 3}}},
            {26, {{-r2, 16}, {one, 24}, {one, 11}}},
            {27, {{-r2, 19}, {one, 18}, {one, 13}}},
        };
    return {
        {20, {{one, 9}, {one, 16}, {-one, 11}, {-one, 13}}},
        {21, {{-r2, 13}, {one, 12}, {one, 18}}},
        {22, {{-r2, 16}, {two, 15}, {-one, 21}}},
        {23, {{-r2, 3}, {one, 2}, {-one, 5}, {one, 7}}},
        {24, {{-r2, 13}, {-r2, 11}, {r2, 9}, {one, 18}, {-one, 10}, {one, 15}, {-one, 21}}},
        {25, {{r2, 9}, {-one, 10}}},
        {26, {{r2, 22}, {-one, 14}}},
    };
}

template <class A>
A relation_residual(char family, const Relation& rel, int i, int j) {
    A acc = tensor_component<A>(family, rel.lhs, i, j);
    for (const auto& [c, k] : rel.rhs) acc -= tensor_component<A>(family, k, i, j) * c;
    return acc;
}

}  // namespace

std::string ExtractedEq::label() const {
    std::ostringstream os;
    os << "o" << order << ":s" << pauli << ":p" << triple(p) << ":x" << triple(x);
    return os.str();
}

namespace {

// Full symmetrization of a commutative symbol: every monomial g(x)·p^n·σ_a is
// replaced by the permutation average of g with the individual momentum
// factors.  This is independent of how the symbol was written down.
OpExpr weyl(const SymbolExpr& s) {
    OpExpr out;
    for (const auto& [key, poly] : s.terms()) {
        std::vector<OpExpr> factors;
        OpExpr g;
        g.add_term(OpKey{0, {0, 0, 0}}, poly);
        factors.push_back(g);
        for (int ax = 0; ax < 3; ++ax)
            for (int t = 0; t < key.p[ax]; ++t) factors.push_back(op_p(ax));
        OpExpr sym = symmetrize(factors);
        if (key.pauli != 0) sym = sym * op_sigma(key.pauli - 1);
        out += sym;
    }
    return out;
}

}  // namespace

OpExpr build_ansatz(const AnsatzSpec& spec) {
    SymbolExpr X;
    for (int k = 1; k <= 19; ++k)
        X += tensor_component<SymbolExpr>(spec.family, k, spec.i, spec.j) *
             FieldElem::jetf(vars::fam_f(k));
    return weyl(X);
}

std::vector<ExtractedEq> extract(const AnsatzSpec& spec) {
    OpExpr C = commutator(op_H(), build_ansatz(spec));
    std::vector<ExtractedEq> out;
    for (const auto& [key, poly] : C.terms()) {
        for (const auto& [mono, coeff] : poly.terms()) {
            ExtractedEq e;
            e.pauli = key.pauli;
            e.p = key.p;
            e.x = mono.e;
            e.order = key.p[0] + key.p[1] + key.p[2];
            e.lhs = coeff;
            out.push_back(std::move(e));
        }
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const ExtractedEq& a, const ExtractedEq& b) { return a.order > b.order; });
    return out;
}

bool ResidualReport::all_zero() const {
    for (const auto& e : entries)
        if (!e.diagnostic && !e.residual.is_zero()) return false;
    return true;
}

const ComponentResidual* ResidualReport::first_failure() const {
    for (const auto& e : entries)
        if (!e.diagnostic && !e.residual.is_zero()) return &e;
    return nullptr;
}

ResidualReport check_solution(const std::string& family, const std::string& branch_id) {
    auto t0 = std::chrono::steady_clock::now();
    const SolutionBranch& br = get_solution(branch_id);
    const auto& eqs = get_determining(family);
    ResidualReport rep;
    rep.subject = family + " system at " + br.id;
    for (const DeterminingEq& eq : eqs) {
        for (int k = 1; k <= 19; ++k)
            if (references_family(eq.lhs, vars::fam_f(k)) &&
                !br.assignments.binds_family(vars::fam_f(k)))
                throw CalcError("incomplete assignment: " + br.id + " leaves f" +
                                std::to_string(k) + " unbound in " + eq.id);
        rep.entries.push_back({eq.id, {}, radial(eq.lhs.subst(br.assignments)), false});
    }
    rep.timing_ms = ms_since(t0);
    return rep;
}

ResidualReport check_extracted(const AnsatzSpec& spec, const std::string& branch_id) {
    auto t0 = std::chrono::steady_clock::now();
    const SolutionBranch& br = get_solution(branch_id);
    ResidualReport rep;
    rep.subject = std::string(1, spec.family) + "-ansatz extraction at " + br.id;
    for (const ExtractedEq& eq : extract(spec)) {
        FieldElem res = eq.lhs.subst(br.assignments);
        if (res.is_zero()) continue;  // only failures are interesting here
        rep.entries.push_back({eq.label(), {}, radial(res), false});
    }
    if (rep.entries.empty())
        rep.entries.push_back({"all-coefficients", {}, OpExpr(), false});
    rep.timing_ms = ms_since(t0);
    return rep;
}

ResidualReport check_relations(char family) {
    auto t0 = std::chrono::steady_clock::now();
    ResidualReport rep;
    rep.subject = std::string(1, family) + "-family relations";
    for (const Relation& rel : relation_table(family)) {
        std::string name = std::string(1, family) + std::to_string(rel.lhs);
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                SymbolExpr d = relation_residual<SymbolExpr>(family, rel, i, j);
                rep.entries.push_back({name + ":offdiag(" + std::to_string(i + 1) + "," +
                                           std::to_string(j + 1) + ")",
                                       {i, j},
                                       to_op(d),
                                       false});
            }
        SymbolExpr d0 = relation_residual<SymbolExpr>(family, rel, 0, 0);
        for (int i = 1; i < 3; ++i) {
            SymbolExpr di = relation_residual<SymbolExpr>(family, rel, i, i);
            rep.entries.push_back({name + ":diagdiff(" + std::to_string(i + 1) + ",1)",
                                   {i, i},
                                   to_op(di - d0),
                                   false});
        }
        // Quantum-ordering residual of one off-diagonal component, recorded as
        // a diagnostic: the relations are claims about the commutative symbols.
        OpExpr q = relation_residual<OpExpr>(family, rel, 0, 1);
        rep.entries.push_back({name + ":quantum(1,2)", {0, 1}, q, true});
    }
    rep.timing_ms = ms_since(t0);
    return rep;
}

ResidualReport check_commutation(const std::string& case_id, const std::string& integral_id) {
    auto t0 = std::chrono::steady_clock::now();
    const CaseRow& row = get_case(case_id);
    const IntegralEntry& e = get_integral(integral_id);
    bool listed =
        std::find(row.integrals.begin(), row.integrals.end(), e.id) != row.integrals.end();
    if (!listed && e.required_case != "symbolic")
        throw CalcError("integral " + e.id + " is not claimed for case " + row.id);
    OpExpr H = hamiltonian(row);
    ResidualReport rep;
    rep.subject = "[H(" + row.id + "), " + e.id + "]";
    if (e.arity == 0) {
        rep.entries.push_back({"scalar", {}, commutator(H, e.component(0, 0)), false});
    } else if (e.arity == 1) {
        for (int k = 0; k < 3; ++k)
            rep.entries.push_back({"component(" + std::to_string(k + 1) + ")",
                                   {k},
                                   commutator(H, e.component(k, 0)),
                                   false});
    } else {
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                rep.entries.push_back({"offdiag(" + std::to_string(i + 1) + "," +
                                           std::to_string(j + 1) + ")",
                                       {i, j},
                                       commutator(H, e.component(i, j)),
                                       false});
        OpExpr d0 = commutator(H, e.component(0, 0));
        for (int i = 1; i < 3; ++i) {
            OpExpr di = commutator(H, e.component(i, i));
            rep.entries.push_back({"diagdiff(" + std::to_string(i + 1) + ",1)",
                                   {i, i},
                                   di - d0,
                                   false});
        }
    }
    rep.timing_ms = ms_since(t0);
    return rep;
}

}  // namespace spinops
