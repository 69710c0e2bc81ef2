#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfkit/hopf.hpp"

namespace hopfkit {

enum class ActionKind {
    LeftRegular,    // h acting on its own algebra by multiplication
    RightCoregular,  // f < h = <h, f_(1)> f_(2)
    LeftCoregular    // h > f = <h, f_(2)> f_(1)
};

ActionKind action_kind_from_name(const std::string& name);
std::string action_kind_name(ActionKind kind);

// The monomial dual to m under the pairing bijection.
Monomial dual_of_monomial(const Monomial& m, const Triplet& triplet);

// Applies the action; the result is canonical and truncated at the workspace
// degree. Computed with internal degree headroom, so every reported component
// is exact.
Element act(const Workspace& ws, ActionKind kind, const Element& h, const Element& f);

// Finite matrix of an operator on the PBW basis of degree <= deg_bound.
// Column j holds the coordinates of the image of basis[j]; columns whose
// image touches degree > deg_bound are flagged as boundary columns.
struct OperatorMatrix {
    int algebra = -1;
    std::vector<Monomial> basis;
    std::vector<std::vector<Laurent>> entries;  // entries[row][col]
    std::vector<bool> reliable;                 // per column
    // Rows whose entries may lean on truncated tails (empty = all trusted).
    // Used by carrier-coordinate matrices, where the invisible tail of a
    // basis vector can land on high-degree pivot rows.
    std::vector<bool> trusted_rows;
    int z_order = 0;

    bool row_trusted(size_t i) const { return trusted_rows.empty() || trusted_rows[i]; }

    static OperatorMatrix zero(int algebra, const std::vector<Monomial>& basis, int z_order);
    static OperatorMatrix identity(int algebra, const std::vector<Monomial>& basis, int z_order);

    size_t size() const { return basis.size(); }
    int basis_index(const Monomial& m) const;  // -1 when absent

    OperatorMatrix times(const OperatorMatrix& o) const;  // this o (right-to-left composition)
    OperatorMatrix plus(const OperatorMatrix& o) const;
    OperatorMatrix minus(const OperatorMatrix& o) const;
    OperatorMatrix scaled(const Laurent& c) const;

    // {"basis": [...], "entries": [[scalar strings]], "boundary_columns": [...]}
    std::string json(const Algebra& alg, int indent = 2) const;

    friend bool operator==(const OperatorMatrix& a, const OperatorMatrix& b);
};

// First entry difference on columns both sides trust, or nullopt when equal
// there. Basis monomials must match.
std::optional<std::pair<size_t, size_t>> first_reliable_difference(const OperatorMatrix& a,
                                                                   const OperatorMatrix& b);

OperatorMatrix operator_matrix(const Workspace& ws, ActionKind kind, const Element& h,
                               int deg_bound);

// Factorial-weighted transpose mapping an operator on one algebra of the
// pair to its pairing-adjoint on the other.
OperatorMatrix adjoint_matrix(const OperatorMatrix& m, const Triplet& triplet);

enum class BasisOperator { MultiplyByGenerator, Derivative };

// The formal shift operators on ordered monomials: multiply-by-generator
// raises one exponent, derivative multiplies by the exponent and lowers it.
OperatorMatrix basis_operator(const Triplet& triplet, BasisOperator which, int generator,
                              int algebra, int deg_bound);

// Matrix of x -> h * x (left multiplication) on the algebra's own basis.
OperatorMatrix left_multiplication_matrix(const Workspace& ws, const Element& h, int deg_bound);
// Matrix of x -> x * h (right multiplication).
OperatorMatrix right_multiplication_matrix(const Workspace& ws, const Element& h, int deg_bound);

}  // namespace hopfkit
