#pragma once

#include <functional>
#include <string>
#include <vector>

#include "spinops/builders.hpp"

namespace spinops {

// One row of the potential table. V1 is always concrete; V0 is either a
// concrete radial element or left as the symbolic jet V0(r).
struct CaseRow {
    std::string id;
    FieldElem V1;
    FieldElem V0;
    bool V0_symbolic = false;
    std::vector<std::string> integrals;  // integral ids claimed for this row
    std::string source;                  // citation string
};

// A named integral of motion with a deterministic expression builder.
// arity 0: one component, build(0,0); arity 1: three components, build(k,0);
// arity 2: nine components, build(i,j).
struct IntegralEntry {
    std::string id;
    std::string family;  // tensor | pseudo-tensor | pseudo-scalar | vector |
                         // axial-vector | first-order
    int arity = 0;
    std::string required_case;  // row id of the primary claim; "symbolic" =
                                // commutes for arbitrary V0, V1
    std::string source;
    std::function<OpExpr(int, int)> build;

    OpExpr component(int i = 0, int j = 0) const { return build(i, j); }
};

// One determining equation, stated as lhs = 0 over the jets f1..f19, V0, V1
// and the named constants.
struct DeterminingEq {
    std::string id;
    std::string family;  // tensor | pseudotensor
    int order = 0;       // momentum-order block the equation came from
    FieldElem lhs;
    std::string source;
    bool corrected = false;  // repaired misprint; see the provenance string
};

// A solution branch of a determining system: assignments for every ansatz
// jet (and for the potentials and constants it pins down). Unbound symbols
// stay symbolic, e.g. V0 for the "arbitrary potential" branches.
struct SolutionBranch {
    std::string id;
    std::string family;  // tensor | pseudotensor
    Bindings assignments;
    FieldElem V1;
    FieldElem V0;
    bool V0_symbolic = false;
    bool V1_symbolic = false;
    int surviving_constants = 0;
    std::string source;
};

// Lookups throw CalcError for unknown ids. Numeric row ids without a
// sub-letter resolve to the "a" sub-row ("6" -> "6a").
const CaseRow& get_case(const std::string& id);
const IntegralEntry& get_integral(const std::string& id);
const std::vector<DeterminingEq>& get_determining(const std::string& family);
const SolutionBranch& get_solution(const std::string& id);

// Radial auxiliary functions used by the curved-row integrals:
// q, Qplus, Qminus, Qtilde, W, Y, Ytilde, Z.
FieldElem aux_function(const std::string& name);

std::vector<std::string> case_ids();
std::vector<std::string> integral_ids();
std::vector<std::string> solution_ids();

// Hamiltonian of a table row (symbolic V0 jet when the row leaves V0 free).
OpExpr hamiltonian(const CaseRow& row);

// Stable, human-auditable text rendering of the whole catalog.
std::string dump_catalog();

}  // namespace spinops
