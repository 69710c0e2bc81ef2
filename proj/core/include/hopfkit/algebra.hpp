#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hopfkit/element.hpp"

namespace hopfkit {

enum class SeriesKind { Exp, Log1p, Geom };

// One side of an elaborated presentation: ordered generators, the oriented
// commutator table g_j g_i = g_i g_j + commutator(j, i) for j > i, and the
// generator-level Hopf data.
struct Algebra {
    int id = -1;
    std::string name;
    std::string param;
    std::vector<std::string> generator_names;
    int deg_bound = 0;
    int z_order = 0;

    // commutators[{j, i}] with j > i, elements in canonical form. Absent key
    // means the pair commutes.
    std::map<std::pair<int, int>, Element> commutators;

    std::vector<TensorElement> coproducts;  // per generator
    std::vector<Rational> counits;          // per generator
    std::vector<Element> antipodes;         // per generator

    // Relations as declared in the source, for rendering: (lhs, rhs, element).
    struct DeclaredRelation {
        int a;
        int b;
        Element value;
    };
    std::vector<DeclaredRelation> declared_relations;

    // Per-monomial memo tables for the extended Hopf maps and the product.
    // Not synchronized; computations are single-threaded per Algebra instance.
    mutable std::map<Monomial, TensorElement, MonomialOrder> coproduct_memo;
    mutable std::map<Monomial, Element, MonomialOrder> antipode_memo;
    mutable std::map<std::pair<Monomial, int>, Element> product_memo;
    mutable long rewrite_steps = 0;
    mutable long rewrite_depth = 0;

    // Required on any copy whose commutators, degree bound or parameter
    // window differ from the original.
    void clear_memos() const {
        coproduct_memo.clear();
        antipode_memo.clear();
        product_memo.clear();
        rewrite_steps = 0;
        rewrite_depth = 0;
    }

    size_t n_generators() const { return generator_names.size(); }
    int generator_index(const std::string& name) const;  // -1 when absent

    Element zero() const { return Element(id, n_generators(), deg_bound, z_order); }
    Element one() const;
    Element scalar(const Laurent& c) const;
    Element generator(int g) const;
    const Element* commutator(int j, int i) const;

    Laurent laurent_zero() const { return Laurent::zero(z_order); }
    Laurent laurent_one() const { return Laurent::one(z_order); }

    std::string render(const Element& e, bool expr_style = false) const {
        return e.str(generator_names, param, expr_style);
    }
    std::string render(const TensorElement& e, bool expr_style = false) const {
        return e.str(generator_names, param, expr_style);
    }
};

inline constexpr long kRewriteBudget = 1000000;

// Canonical PBW form of a word: repeatedly replaces the leftmost adjacent
// out-of-order pair g_j g_i (j > i) by g_i g_j + the presentation commutator,
// truncating at the algebra's degree bound after every step.
Element normal_order(const Word& w, const Algebra& alg);
Element normal_order(const Word& w, const Laurent& coeff, const Algebra& alg);

Element multiply(const Element& a, const Element& b, const Algebra& alg);
// Legwise product; the two legs never cross.
TensorElement multiply(const TensorElement& a, const TensorElement& b, const Algebra& alg);

Element power(const Element& a, unsigned k, const Algebra& alg);
TensorElement power(const TensorElement& a, unsigned k, const Algebra& alg);

// exp, log(1+x) or (1-x)^-1 of a truncation-nilpotent element, as the finite
// sum that survives the (D, Z) truncation.
Element analytic_series(SeriesKind kind, const Element& e, const Algebra& alg);
TensorElement analytic_series(SeriesKind kind, const TensorElement& e, const Algebra& alg);

Element truncate(const Element& e, int deg_bound);

// Termination certificate for the rewrite system: an elimination order of
// "token" generators such that every commutator branch strictly consumes the
// first token it can. Returns std::nullopt when no such order exists.
std::optional<std::vector<int>> termination_tokens(const Algebra& alg);

// Local-confluence check on every strictly descending triple g_k g_j g_i:
// reducing the left pair first and the right pair first must agree. Returns
// the offending triple when the overlap closes inconsistently.
std::optional<std::array<int, 3>> overlap_defect(const Algebra& alg);

}  // namespace hopfkit
