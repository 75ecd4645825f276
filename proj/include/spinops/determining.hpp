#pragma once

#include <array>
#include <string>
#include <vector>

#include "spinops/catalog.hpp"
#include "spinops/symbol_expr.hpp"

namespace spinops {

// General ansatz for one two-index component: the sum over the nineteen
// independent family members of a radial jet coefficient times the fully
// symmetrized member, X^{ij} = sum_k sym(f_k G_k^{ij}). The dependent members
// (k > 19) are excluded; they reduce to the independent ones through the
// family's linear relations and syzygies.
struct AnsatzSpec {
    char family = 'T';  // 'T' | 'Y'
    int i = 0;
    int j = 1;
};

OpExpr build_ansatz(const AnsatzSpec& spec);

// One collected coefficient of [H, X] in canonical form; the term is
// coeff * x-monomial * p-monomial * pauli and the coefficient must vanish.
struct ExtractedEq {
    int pauli = 0;
    std::array<int, 3> p{0, 0, 0};
    std::array<int, 3> x{0, 0, 0};
    int order = 0;  // total momentum degree
    FieldElem lhs;
    std::string label() const;
};

// Determining system generated from scratch: every nonzero coefficient of
// [H, X] with symbolic potentials and symbolic jets, sorted by descending
// momentum order.
std::vector<ExtractedEq> extract(const AnsatzSpec& spec);

struct ComponentResidual {
    std::string label;         // stable name: equation id, "offdiag(1,2)", ...
    std::vector<int> indices;  // component indices where meaningful (0-based)
    OpExpr residual;           // exact; empty canonical form means the claim holds
    bool diagnostic = false;   // recorded for inspection, not part of the verdict
};

struct ResidualReport {
    std::string subject;
    std::vector<ComponentResidual> entries;
    long timing_ms = 0;
    bool all_zero() const;
    const ComponentResidual* first_failure() const;
};

// Substitutes a solution branch into the hardcoded determining system of one
// family ("tensor" | "pseudotensor") and reports every equation residual.
// Throws CalcError if the branch leaves a referenced coefficient jet unbound.
ResidualReport check_solution(const std::string& family, const std::string& branch_id);

// Substitutes a solution branch into the freshly extracted system: the
// convention-robust consistency check (solution-level equivalence between the
// generated and the hardcoded equations).
ResidualReport check_extracted(const AnsatzSpec& spec, const std::string& branch_id);

// Verifies the linear relations and syzygies of one family ('T' or 'Y') in
// symbol mode on the traceless part (off-diagonal components, plus equality
// of the three diagonal components), and records the quantum-ordering
// residual of each relation as a diagnostic entry.
ResidualReport check_relations(char family);

// Commutation of one catalog integral with the Hamiltonian of one case row:
// raw commutators for scalar and vector families; for two-index families the
// off-diagonal components plus equality of the diagonal components. Throws
// CalcError when the pairing is not claimed by the row.
ResidualReport check_commutation(const std::string& case_id, const std::string& integral_id);

}  // namespace spinops
