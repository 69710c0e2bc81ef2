#pragma once

#include <string>
#include <vector>

#include "hopfkit/presentation.hpp"

namespace hopfkit {

// Multiplicative extension of the generator coproducts; both legs truncated
// at the algebra's degree bound.
TensorElement coproduct(const Element& e, const Algebra& alg);

// Homomorphic extension of the generator counits.
Laurent counit(const Element& e, const Algebra& alg);

// Anti-homomorphic extension of the generator antipodes:
// S(g_1 g_2 ... g_k) = S(g_k) ... S(g_1).
Element antipode(const Element& e, const Algebra& alg);

// <h_l, phi^m> = l! delta_{sigma(l)}^m extended bilinearly. `h` must live in
// the first algebra of the triplet and `f` in the second.
Laurent pair_elements(const Element& h, const Element& f, const Triplet& triplet);

struct AxiomEntry {
    std::string axiom;
    int degree;
    bool pass;
    std::string counterexample;  // empty on pass
};

struct AxiomReport {
    std::vector<AxiomEntry> entries;
    bool all_pass() const;
    // Sorted array of {"axiom","degree","status"[,"counterexample"]}.
    std::string json(int indent = 2) const;
    std::string text() const;
};

// Checks coassociativity, the counit and antipode axioms, compatibility of
// the Hopf maps with every commutation relation, and the pairing duality
// <hh', f> = <h (x) h', Delta f> / <h, ff'> = <Delta h, f (x) f'>, on all PBW
// basis elements of degree <= degree. Internally recomputed with degree
// headroom so each instance is exact at the requested degree.
AxiomReport verify_axioms(const Workspace& ws, int degree);

}  // namespace hopfkit
