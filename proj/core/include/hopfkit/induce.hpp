#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfkit/action.hpp"

namespace hopfkit {

// One-dimensional representation of the subalgebra generated by a subset of
// the first algebra's generators, extended multiplicatively over its PBW
// monomials.
struct Character {
    std::vector<int> generators;  // indices into the first algebra
    std::vector<Laurent> values;
    // True when some value carries the parameter; accepted but outside the
    // exactly-validated rational scope.
    bool experimental = false;

    std::optional<Laurent> value_of(int g) const;
    // Multiplicative extension to an element of the subalgebra span.
    Laurent extend(const Element& e, int z_order) const;
};

// Parses "Pm=1,Pp=1/3" against the first algebra's generator names.
Character parse_character(const Triplet& triplet, const std::string& spec);

// The subset must be closed under the commutation relations and the values
// must kill every bracket. Throws otherwise.
void validate_character(const Triplet& triplet, const Character& chi);

// Basis of the truncated solution space of the equivariance condition
// (action of s per `side`) f = chi(s) f, in reduced echelon form with pivot
// order the canonical monomial order.
struct CarrierBasis {
    ActionKind side;  // coregular action used for the equivariance condition
    int deg_bound = 0;
    int degree_drop = 0;  // d: equations were imposed on degrees <= deg_bound - d
    std::vector<Element> elements;
    std::vector<Monomial> pivots;

    size_t dimension() const { return elements.size(); }
};

CarrierBasis solve_equivariance(const Workspace& ws, const Character& chi, ActionKind side,
                                int deg_bound);

// Induced representation: one matrix per generator of the first algebra, in
// carrier coordinates (column = image of a carrier basis vector under the
// coregular action opposite to the equivariance side).
struct InducedRep {
    Character character;
    CarrierBasis carrier;
    ActionKind action_side;
    std::vector<OperatorMatrix> matrices;  // indexed by generator of the first algebra

    std::string json(const Triplet& triplet, int indent = 2) const;
};

OperatorMatrix induced_action(const Workspace& ws, const CarrierBasis& carrier, const Element& h);

InducedRep induce(const Workspace& ws, const Character& chi, ActionKind side, int deg_bound);

// Replaces the matrix of `generator` by (matrix - c * identity) and shifts
// the character label by c.
InducedRep gauge_shift(const InducedRep& rep, int generator, const Laurent& c);

struct RescaleReport {
    bool equal;
    std::string detail;  // first difference when not equal
};

// Verifies that the representations induced by chi1 and chi2 coincide after
// rescaling the dual generator of the one generator where the characters
// differ by lambda, and that generator by 1/lambda.
RescaleReport rescale_check(const Workspace& ws, const Character& chi1, const Character& chi2,
                            ActionKind side, const Laurent& lambda, int deg_bound);

// Substitutes parameter = 0 in every commutator, coproduct and antipode.
Triplet classical_limit(const Triplet& t);
// The limit pair as a workspace (rendered to `.hopf` syntax and re-read).
Workspace classical_limit_workspace(const Workspace& ws);

}  // namespace hopfkit
