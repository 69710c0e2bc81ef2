#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfkit/errors.hpp"
#include "util.hpp"

using namespace hopfkit;
using testutil::kgalilei;
using testutil::nullplane;

namespace {

Element expr(const Workspace& ws, const std::string& text, int expected = -1) {
    return parse_expression(ws.base(), text, expected);
}

}  // namespace

TEST_CASE("coregular actions on generators match the closed forms") {
    Workspace ws = nullplane(4, 4);
    const Triplet& t = ws.base();
    const Algebra& F = t.second;

    CHECK(F.render(act(ws, ActionKind::LeftCoregular, expr(ws, "K"), expr(ws, "am"))) == "2*am^1");
    CHECK(F.render(act(ws, ActionKind::LeftCoregular, expr(ws, "K"), expr(ws, "ap"))) == "-2*ap^1");
    CHECK(F.render(act(ws, ActionKind::RightCoregular, expr(ws, "K"), expr(ws, "phi"))) == "1");
    // a_+ < P_+ = e^{-2 phi}, truncated
    CHECK(act(ws, ActionKind::RightCoregular, expr(ws, "Pp"), expr(ws, "ap")) ==
          expr(ws, "exp(-2*phi)"));
    CHECK_THROWS_AS(act(ws, ActionKind::LeftCoregular, expr(ws, "K"), expr(ws, "K")), Error);

    Workspace kg = kgalilei(4, 4);
    CHECK(kg.base().second.render(act(kg, ActionKind::LeftCoregular, parse_expression(kg.base(), "H"),
                                      parse_expression(kg.base(), "t"))) == "1");
    // K > x^2 = w x - 2 x t, via the coproduct-pairing definition
    CHECK(kg.base().second.render(act(kg, ActionKind::LeftCoregular, parse_expression(kg.base(), "K"),
                                      parse_expression(kg.base(), "x^2"))) == "w*x^1 - 2*x^1*t^1");
}

TEST_CASE("galilei K action against the operator-composed oracle") {
    // oracle: K > f = [d/dv + (w/2) xbar d^2/dx^2 - tbar d/dx] f, assembled
    // from basis operators
    Workspace ws = kgalilei(4, 4);
    const Triplet& t = ws.base();
    OperatorMatrix dv = basis_operator(t, BasisOperator::Derivative, 0, 1, 4);
    OperatorMatrix dx = basis_operator(t, BasisOperator::Derivative, 1, 1, 4);
    OperatorMatrix xbar = basis_operator(t, BasisOperator::MultiplyByGenerator, 1, 1, 4);
    OperatorMatrix tbar = basis_operator(t, BasisOperator::MultiplyByGenerator, 2, 1, 4);
    OperatorMatrix oracle =
        dv.plus(xbar.times(dx).times(dx).scaled(Laurent::term(Rational(1, 2), 1, 4)))
            .minus(tbar.times(dx));
    OperatorMatrix engine = operator_matrix(ws, ActionKind::LeftCoregular, expr(ws, "K"), 4);
    CHECK(!first_reliable_difference(engine, oracle).has_value());
}

TEST_CASE("operator matrix of the left coregular K action at degree 1") {
    Workspace ws = nullplane(1, 4);
    OperatorMatrix m = operator_matrix(ws, ActionKind::LeftCoregular, expr(ws, "K"), 1);
    const Algebra& F = ws.base().second;
    // basis (1, phi, am, ap); images (0, 1, 2 am, -2 ap)
    REQUIRE(m.basis.size() == 4);
    CHECK(monomial_str(m.basis[0], F.generator_names) == "1");
    CHECK(monomial_str(m.basis[1], F.generator_names) == "phi^1");
    CHECK(monomial_str(m.basis[2], F.generator_names) == "am^1");
    CHECK(monomial_str(m.basis[3], F.generator_names) == "ap^1");
    CHECK(m.entries[0][1] == Laurent::one(4));
    CHECK(m.entries[2][2] == Laurent::constant(Rational(2), 4));
    CHECK(m.entries[3][3] == Laurent::constant(Rational(-2), 4));
    for (size_t i = 0; i < 4; ++i) CHECK(m.entries[i][0].is_zero());
}

TEST_CASE("identity acts as the identity matrix") {
    Workspace ws = nullplane(3, 4);
    OperatorMatrix m = operator_matrix(ws, ActionKind::LeftCoregular, ws.base().first.one(), 3);
    OperatorMatrix id = OperatorMatrix::identity(1, m.basis, 4);
    CHECK(!first_reliable_difference(m, id).has_value());
}

TEST_CASE("left coregular P- is the derivative in a-") {
    Workspace ws = nullplane(2, 4);
    OperatorMatrix m = operator_matrix(ws, ActionKind::LeftCoregular, expr(ws, "Pm"), 2);
    OperatorMatrix dam = basis_operator(ws.base(), BasisOperator::Derivative, 1, 1, 2);
    CHECK(!first_reliable_difference(m, dam).has_value());
}

TEST_CASE("basis operators shift exponents") {
    Workspace ws = nullplane(3, 4);
    const Triplet& t = ws.base();
    OperatorMatrix dphi = basis_operator(t, BasisOperator::Derivative, 0, 1, 3);
    // d/dphi phi^2 = 2 phi
    int col = dphi.basis_index(Monomial{{2, 0, 0}});
    int row = dphi.basis_index(Monomial{{1, 0, 0}});
    CHECK(dphi.entries[static_cast<size_t>(row)][static_cast<size_t>(col)] ==
          Laurent::constant(Rational(2), 4));

    OperatorMatrix mk = basis_operator(t, BasisOperator::MultiplyByGenerator, 0, 0, 3);
    int colk = mk.basis_index(Monomial{{1, 1, 0}});
    int rowk = mk.basis_index(Monomial{{2, 1, 0}});
    CHECK(mk.entries[static_cast<size_t>(rowk)][static_cast<size_t>(colk)] == Laurent::one(4));
    // derivative of 1 vanishes
    OperatorMatrix dap = basis_operator(t, BasisOperator::Derivative, 2, 1, 3);
    for (size_t i = 0; i < dap.size(); ++i) CHECK(dap.entries[i][0].is_zero());
}

TEST_CASE("adjoint matrices") {
    Workspace ws = nullplane(2, 4);
    const Triplet& t = ws.base();
    // adjoint of multiply-by-h_i is d/d phi^i, exactly
    for (int g = 0; g < 3; ++g) {
        OperatorMatrix mult = basis_operator(t, BasisOperator::MultiplyByGenerator, g, 0, 2);
        OperatorMatrix expected = basis_operator(t, BasisOperator::Derivative, g, 1, 2);
        CHECK(!first_reliable_difference(adjoint_matrix(mult, t), expected).has_value());
    }
    // adjoint of the identity is the identity
    auto basis = enumerate_basis(3, 2);
    OperatorMatrix id = OperatorMatrix::identity(0, basis, 4);
    CHECK(!first_reliable_difference(adjoint_matrix(id, t),
                                     OperatorMatrix::identity(1, basis, 4))
               .has_value());
    // adjoint of d/dK is multiplication by phi
    OperatorMatrix dk = basis_operator(t, BasisOperator::Derivative, 0, 0, 2);
    OperatorMatrix phibar = basis_operator(t, BasisOperator::MultiplyByGenerator, 0, 1, 2);
    CHECK(!first_reliable_difference(adjoint_matrix(dk, t), phibar).has_value());
}

TEST_CASE("adjoint is an involution on sampled matrices") {
    Workspace ws = nullplane(3, 4);
    const Triplet& t = ws.base();
    testutil::Rng rng(testutil::default_seed() + 7);
    auto basis = enumerate_basis(3, 3);
    for (int i = 0; i < 100; ++i) {
        OperatorMatrix m = OperatorMatrix::zero(0, basis, 4);
        for (int k = 0; k < 12; ++k) {
            size_t r = static_cast<size_t>(rng.range(0, static_cast<long>(basis.size()) - 1));
            size_t c = static_cast<size_t>(rng.range(0, static_cast<long>(basis.size()) - 1));
            m.entries[r][c] = rng.laurent(4, 0, 2);
        }
        CHECK(!first_reliable_difference(adjoint_matrix(adjoint_matrix(m, t), t), m).has_value());
    }
}

TEST_CASE("multiplication matrices match the shift-operator compositions") {
    Workspace ws = nullplane(4, 4);
    const Triplet& t = ws.base();
    const int D = 4;

    // left multiplication by K is Kbar
    OperatorMatrix lk = left_multiplication_matrix(ws, expr(ws, "K"), D);
    OperatorMatrix kbar = basis_operator(t, BasisOperator::MultiplyByGenerator, 0, 0, D);
    CHECK(!first_reliable_difference(lk, kbar).has_value());

    // left multiplication by P- is Pmbar e^{2 d/dK}
    OperatorMatrix lpm = left_multiplication_matrix(ws, expr(ws, "Pm"), D);
    OperatorMatrix dk = basis_operator(t, BasisOperator::Derivative, 0, 0, D);
    OperatorMatrix exp2dk = OperatorMatrix::identity(0, dk.basis, 4);
    OperatorMatrix pw = OperatorMatrix::identity(0, dk.basis, 4);
    for (int k = 1; k <= D; ++k) {
        pw = pw.times(dk).scaled(Laurent::constant(Rational(2) / Rational(static_cast<long>(k)), 4));
        exp2dk = exp2dk.plus(pw);
    }
    OperatorMatrix pmbar = basis_operator(t, BasisOperator::MultiplyByGenerator, 1, 0, D);
    CHECK(!first_reliable_difference(lpm, pmbar.times(exp2dk)).has_value());
}

TEST_CASE("module axioms hold for all three kinds on samples") {
    Workspace np = nullplane(9, 4);
    Workspace kg = kgalilei(9, 4);
    testutil::Rng rng(testutil::default_seed() + 8);
    for (Workspace* ws : {&np, &kg}) {
        const Triplet& t = ws->base();
        for (ActionKind kind :
             {ActionKind::LeftRegular, ActionKind::RightCoregular, ActionKind::LeftCoregular}) {
            for (int i = 0; i < 12; ++i) {
                Element h1 = rng.element(t.first, 2, 2);
                Element h2 = rng.element(t.first, 2, 2);
                Element f = rng.element(t.algebra(kind == ActionKind::LeftRegular ? 0 : 1), 2, 2);
                Element lhs, rhs;
                if (kind == ActionKind::RightCoregular) {
                    // (f < h1) < h2 = f < (h1 h2)
                    lhs = act(*ws, kind, h2, act(*ws, kind, h1, f));
                    rhs = act(*ws, kind, multiply(h1, h2, t.first), f);
                } else {
                    lhs = act(*ws, kind, h1, act(*ws, kind, h2, f));
                    rhs = act(*ws, kind, multiply(h1, h2, t.first), f);
                }
                CHECK(lhs.projected(4) == rhs.projected(4));
                CHECK(act(*ws, kind, t.first.one(), f) == f);
            }
        }
    }
}

TEST_CASE("action compatibility with products and units") {
    // h > (f g) = (h_(1) > f)(h_(2) > g), h > 1 = eps(h) 1
    Workspace np = nullplane(9, 4);
    Workspace kg = kgalilei(9, 4);
    testutil::Rng rng(testutil::default_seed() + 9);
    for (Workspace* ws : {&np, &kg}) {
        const Triplet& t = ws->base();
        const Algebra& F = t.second;
        for (int i = 0; i < 15; ++i) {
            Element h = rng.element(t.first, 2, 2);
            Element f = rng.element(F, 2, 2);
            Element g = rng.element(F, 2, 2);
            Element lhs = act(*ws, ActionKind::LeftCoregular, h, multiply(f, g, F));
            Element rhs = F.zero();
            TensorElement dh = coproduct(h, t.first);
            for (const auto& [mm, c] : dh.terms()) {
                Element h1 = t.first.zero();
                h1.add_term(mm.first, t.first.laurent_one());
                Element h2 = t.first.zero();
                h2.add_term(mm.second, t.first.laurent_one());
                rhs += multiply(act(*ws, ActionKind::LeftCoregular, h1, f),
                                act(*ws, ActionKind::LeftCoregular, h2, g), F)
                           .scaled(c);
            }
            CHECK(lhs.projected(4) == rhs.projected(4));
            CHECK(act(*ws, ActionKind::LeftCoregular, h, F.one()) ==
                  F.scalar(counit(h, t.first)));
        }
    }
}

TEST_CASE("coregular matrices are adjoints of multiplication matrices") {
    for (auto loader : {testutil::nullplane, testutil::kgalilei}) {
        Workspace ws = loader(4, 4);
        const Triplet& t = ws.base();
        for (size_t g = 0; g < 3; ++g) {
            Element gen = t.first.generator(static_cast<int>(g));
            // left coregular = adjoint of right multiplication
            OperatorMatrix lc = operator_matrix(ws, ActionKind::LeftCoregular, gen, 4);
            OperatorMatrix rm = right_multiplication_matrix(ws, gen, 4);
            CHECK(!first_reliable_difference(lc, adjoint_matrix(rm, t)).has_value());
            // right coregular = adjoint of left multiplication
            OperatorMatrix rc = operator_matrix(ws, ActionKind::RightCoregular, gen, 4);
            OperatorMatrix lm = left_multiplication_matrix(ws, gen, 4);
            CHECK(!first_reliable_difference(rc, adjoint_matrix(lm, t)).has_value());
        }
    }
}
