#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hopfkit/algebra.hpp"
#include "hopfkit/ast.hpp"

namespace hopfkit {

// Positional bijection between the generators of the paired algebras.
// sigma[i] is the index in the second algebra dual to generator i of the
// first; the pairing is <h_l, phi^m> = l! * delta_{sigma(l)}^m on PBW bases.
struct Pairing {
    std::vector<int> sigma;
    std::vector<int> inverse;
};

// A dual pair of elaborated Hopf algebras at one truncation setting.
struct Triplet {
    Algebra first;
    Algebra second;
    Pairing pairing;
    int deg_bound = 0;
    int z_order = 0;

    const Algebra& algebra(int id) const;
    const Algebra& dual_of(int id) const { return algebra(1 - id); }
};

// Evaluates relation/coproduct/counit/antipode expressions to canonical
// elements and validates the rewrite system (termination certificate plus
// overlap consistency on descending triples).
Triplet elaborate(const PresentationFile& file, int deg_bound, int z_order);

// A parsed file together with elaborations at the degrees the engine needs.
// Axiom and golden checks recompute at a widened degree bound so that every
// asserted identity is exact at the requested degree.
class Workspace {
  public:
    using Transform = std::function<Triplet(const Triplet&)>;

    Workspace(PresentationFile file, int deg_bound, int z_order, Transform transform = {});
    static Workspace load_text(const std::string& source, int deg_bound, int z_order);

    const PresentationFile& file() const { return file_; }
    int deg_bound() const { return deg_bound_; }
    int z_order() const { return z_order_; }
    const Triplet& base() const { return *base_; }
    // Elaboration of the same file at a different degree bound (cached). The
    // transform, when set, is applied after each elaboration so that derived
    // pairs (such as classical limits) stay consistent at every degree.
    const Triplet& at_degree(int deg_bound) const;

  private:
    PresentationFile file_;
    int deg_bound_;
    int z_order_;
    Transform transform_;
    std::shared_ptr<Triplet> base_;
    mutable std::map<int, std::shared_ptr<Triplet>> cache_;
};

// Evaluates an expression inside one algebra of the pair. The home algebra is
// inferred from the generator names; `expected` pins it for scalar-only
// expressions. Mixed names are an error.
Element parse_expression(const Triplet& triplet, const std::string& text, int expected = -1);

// Evaluates an expression with all names resolved in the given algebra.
Element eval_expr(const Expr& expr, const Algebra& alg);
TensorElement eval_texpr(const TExpr& texpr, const Algebra& alg);

// Renders an elaborated pair back to `.hopf` syntax.
std::string render_presentation(const Triplet& triplet);

}  // namespace hopfkit
