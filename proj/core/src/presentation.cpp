#include "hopfkit/presentation.hpp"

#include <set>
#include <sstream>

#include "hopfkit/errors.hpp"

namespace hopfkit {

const Algebra& Triplet::algebra(int id) const {
    if (id == 0) return first;
    if (id == 1) return second;
    throw Error("bad algebra id");
}

Element eval_expr(const Expr& expr, const Algebra& alg) {
    switch (expr.kind) {
        case Expr::Kind::Number:
            return alg.scalar(Laurent::constant(expr.number, alg.z_order));
        case Expr::Kind::Name: {
            if (expr.name == alg.param)
                return alg.scalar(Laurent::term(Rational(1), 1, alg.z_order));
            int g = alg.generator_index(expr.name);
            if (g < 0)
                throw ParseError(expr.line, expr.column,
                                 "unknown name '" + expr.name + "' in algebra " + alg.name);
            return alg.generator(g);
        }
        case Expr::Kind::Add:
            return eval_expr(*expr.a, alg) + eval_expr(*expr.b, alg);
        case Expr::Kind::Sub:
            return eval_expr(*expr.a, alg) - eval_expr(*expr.b, alg);
        case Expr::Kind::Neg:
            return -eval_expr(*expr.a, alg);
        case Expr::Kind::Mul:
            return multiply(eval_expr(*expr.a, alg), eval_expr(*expr.b, alg), alg);
        case Expr::Kind::Div: {
            Element num = eval_expr(*expr.a, alg);
            Element den = eval_expr(*expr.b, alg);
            Laurent c = den.constant_part();
            if (den.is_zero() || den.terms().size() != 1 || !den.terms().begin()->first.is_unit())
                throw ParseError(expr.line, expr.column, "division by a non-scalar");
            return num.scaled(c.inverse());
        }
        case Expr::Kind::Pow: {
            Element base = eval_expr(*expr.a, alg);
            if (expr.exponent >= 0) return power(base, static_cast<unsigned>(expr.exponent), alg);
            Laurent c = base.constant_part();
            if (base.is_zero() || base.terms().size() != 1 || !base.terms().begin()->first.is_unit())
                throw ParseError(expr.line, expr.column,
                                 "negative power of a non-scalar");
            return alg.scalar(c.pow(expr.exponent));
        }
        case Expr::Kind::Exp:
        case Expr::Kind::Log1p: {
            Element arg = eval_expr(*expr.a, alg);
            try {
                return analytic_series(
                    expr.kind == Expr::Kind::Exp ? SeriesKind::Exp : SeriesKind::Log1p, arg, alg);
            } catch (const ParseError&) {
                throw;
            } catch (const Error& e) {
                throw ParseError(expr.line, expr.column, e.what());
            }
        }
    }
    throw Error("unreachable");
}

TensorElement eval_texpr(const TExpr& texpr, const Algebra& alg) {
    switch (texpr.kind) {
        case TExpr::Kind::Pair: {
            Element left = eval_expr(*texpr.left, alg);
            Element right = eval_expr(*texpr.right, alg);
            TensorElement t(alg.id, alg.n_generators(), alg.deg_bound, alg.z_order);
            for (const auto& [lm, lc] : left.terms())
                for (const auto& [rm, rc] : right.terms()) t.add_term(lm, rm, lc * rc);
            return t;
        }
        case TExpr::Kind::Add:
            return eval_texpr(*texpr.ta, alg) + eval_texpr(*texpr.tb, alg);
        case TExpr::Kind::Sub:
            return eval_texpr(*texpr.ta, alg) - eval_texpr(*texpr.tb, alg);
        case TExpr::Kind::ScalarMul: {
            Element scale = eval_expr(*texpr.left, alg);
            if (scale.is_zero())
                return TensorElement(alg.id, alg.n_generators(), alg.deg_bound, alg.z_order);
            if (scale.terms().size() != 1 || !scale.terms().begin()->first.is_unit())
                throw ParseError(texpr.line, texpr.column,
                                 "tensor multiplier must be a scalar");
            return eval_texpr(*texpr.ta, alg).scaled(scale.constant_part());
        }
    }
    throw Error("unreachable");
}

namespace {

Algebra elaborate_algebra(const AlgebraBlock& block, int id, int deg_bound, int z_order) {
    // Expressions are evaluated in a widened parameter window so that forms
    // like (1/z)*(series) keep every coefficient that survives in [-Z, Z],
    // then re-truncated for storage.
    const int wide_z = 2 * z_order + 4;
    Algebra wide;
    wide.id = id;
    wide.name = block.name;
    wide.param = block.param;
    wide.generator_names = block.generators;
    wide.deg_bound = deg_bound;
    wide.z_order = wide_z;

    Algebra alg = wide;
    alg.z_order = z_order;
    for (const auto& g : block.generators)
        if (g == alg.param)
            throw ParseError(block.line, block.column,
                             "generator '" + g + "' clashes with the parameter name");

    // Relations first: their right-hand sides may only use products that are
    // already ordered or already declared.
    std::set<std::pair<int, int>> declared;
    for (const auto& rule : block.relations) {
        int a = alg.generator_index(rule.lhs_a);
        int b = alg.generator_index(rule.lhs_b);
        if (a < 0 || b < 0)
            throw ParseError(rule.line, rule.column, "unknown generator in relation");
        if (a == b)
            throw ParseError(rule.line, rule.column, "bracket of a generator with itself");
        const auto key = std::make_pair(std::max(a, b), std::min(a, b));
        if (declared.count(key))
            throw ParseError(rule.line, rule.column, "duplicate relation for this pair");
        declared.insert(key);
        Element rhs_wide = eval_expr(*rule.rhs, wide);
        Element rhs = rhs_wide.z_rebounded(z_order);
        alg.declared_relations.push_back({a, b, rhs});
        // Orient as [g_j, g_i] with j > i.
        if (!rhs_wide.is_zero()) {
            wide.commutators.emplace(key, a > b ? rhs_wide : -rhs_wide);
            Element oriented = a > b ? rhs : -rhs;
            if (!oriented.is_zero()) alg.commutators.emplace(key, oriented);
        }
    }
    const size_t n = alg.n_generators();
    for (size_t j = 1; j < n; ++j)
        for (size_t i = 0; i < j; ++i)
            if (!declared.count({static_cast<int>(j), static_cast<int>(i)}))
                throw ParseError(block.line, block.column,
                                 "missing relation for pair [" + alg.generator_names[j] + ", " +
                                     alg.generator_names[i] + "]");

    if (!termination_tokens(alg))
        throw ParseError(block.line, block.column,
                         "relations of " + alg.name +
                             " admit no termination order (rewriting may not halt)");
    if (auto bad = overlap_defect(alg))
        throw ParseError(block.line, block.column,
                         "relations of " + alg.name + " are inconsistent: the overlap (" +
                             alg.generator_names[(*bad)[0]] + ", " + alg.generator_names[(*bad)[1]] +
                             ", " + alg.generator_names[(*bad)[2]] +
                             ") closes differently under the two reduction orders");

    auto rule_index = [&](const std::vector<std::string>& seen, const std::string& g, int line,
                          int col) {
        int idx = alg.generator_index(g);
        if (idx < 0) throw ParseError(line, col, "unknown generator '" + g + "'");
        for (const auto& s : seen)
            if (s == g) throw ParseError(line, col, "duplicate rule for '" + g + "'");
        return idx;
    };

    alg.coproducts.assign(n, TensorElement());
    std::vector<std::string> seen;
    for (const auto& [g, t] : block.coproduct_rules) {
        int idx = rule_index(seen, g, block.line, block.column);
        seen.push_back(g);
        alg.coproducts[static_cast<size_t>(idx)] = eval_texpr(*t, wide).z_rebounded(z_order);
    }
    if (seen.size() != n)
        throw ParseError(block.line, block.column, "missing coproduct rule in " + alg.name);

    alg.counits.assign(n, Rational(0));
    seen.clear();
    for (const auto& [g, e] : block.counit_rules) {
        int idx = rule_index(seen, g, block.line, block.column);
        seen.push_back(g);
        Element v = eval_expr(*e, wide);
        if (!v.is_zero() && (v.terms().size() != 1 || !v.terms().begin()->first.is_unit() ||
                             !v.constant_part().is_constant()))
            throw ParseError(block.line, block.column,
                             "counit of '" + g + "' must be a rational constant");
        alg.counits[static_cast<size_t>(idx)] = v.constant_part().coefficient(0);
    }
    if (seen.size() != n)
        throw ParseError(block.line, block.column, "missing counit rule in " + alg.name);

    alg.antipodes.assign(n, Element());
    seen.clear();
    for (const auto& [g, e] : block.antipode_rules) {
        int idx = rule_index(seen, g, block.line, block.column);
        seen.push_back(g);
        alg.antipodes[static_cast<size_t>(idx)] = eval_expr(*e, wide).z_rebounded(z_order);
    }
    if (seen.size() != n)
        throw ParseError(block.line, block.column, "missing antipode rule in " + alg.name);

    return alg;
}

}  // namespace

Triplet elaborate(const PresentationFile& file, int deg_bound, int z_order) {
    if (deg_bound < 1) throw Error("degree bound must be at least 1");
    if (z_order < 0) throw Error("parameter order must be nonnegative");
    if (file.first.param != file.second.param)
        throw ParseError(file.second.line, file.second.column,
                         "the two algebras must share one deformation parameter");
    Triplet t;
    t.deg_bound = deg_bound;
    t.z_order = z_order;
    t.first = elaborate_algebra(file.first, 0, deg_bound, z_order);
    t.second = elaborate_algebra(file.second, 1, deg_bound, z_order);

    const PairingBlock& p = file.pairing;
    const Algebra *h = nullptr, *hp = nullptr;
    if (p.first_name == t.first.name && p.second_name == t.second.name) {
        h = &t.first;
        hp = &t.second;
    } else if (p.first_name == t.second.name && p.second_name == t.first.name) {
        throw ParseError(p.line, p.column,
                         "pairing must name the first algebra block first");
    } else {
        throw ParseError(p.line, p.column, "pairing names do not match the algebra blocks");
    }
    if (h->n_generators() != hp->n_generators())
        throw ParseError(p.line, p.column, "paired algebras need the same number of generators");
    t.pairing.sigma.assign(h->n_generators(), -1);
    t.pairing.inverse.assign(h->n_generators(), -1);
    for (const auto& [a, b] : p.pairs) {
        int ia = h->generator_index(a);
        int ib = hp->generator_index(b);
        if (ia < 0 || ib < 0)
            throw ParseError(p.line, p.column, "unknown generator in pairing: " + a + " ~ " + b);
        if (t.pairing.sigma[static_cast<size_t>(ia)] != -1 ||
            t.pairing.inverse[static_cast<size_t>(ib)] != -1)
            throw ParseError(p.line, p.column, "pairing is not a bijection");
        t.pairing.sigma[static_cast<size_t>(ia)] = ib;
        t.pairing.inverse[static_cast<size_t>(ib)] = ia;
    }
    for (int v : t.pairing.sigma)
        if (v < 0) throw ParseError(p.line, p.column, "pairing does not cover every generator");
    return t;
}

Workspace::Workspace(PresentationFile file, int deg_bound, int z_order, Transform transform)
    : file_(std::move(file)),
      deg_bound_(deg_bound),
      z_order_(z_order),
      transform_(std::move(transform)) {
    Triplet t = elaborate(file_, deg_bound, z_order);
    base_ = std::make_shared<Triplet>(transform_ ? transform_(t) : std::move(t));
}

Workspace Workspace::load_text(const std::string& source, int deg_bound, int z_order) {
    return Workspace(parse_presentation(source), deg_bound, z_order);
}

const Triplet& Workspace::at_degree(int deg_bound) const {
    if (deg_bound == deg_bound_) return *base_;
    auto it = cache_.find(deg_bound);
    if (it == cache_.end()) {
        Triplet t = elaborate(file_, deg_bound, z_order_);
        if (transform_) t = transform_(t);
        it = cache_.emplace(deg_bound, std::make_shared<Triplet>(std::move(t))).first;
    }
    return *it->second;
}

namespace {

void collect_names(const Expr& e, std::vector<std::string>& out) {
    if (e.kind == Expr::Kind::Name) out.push_back(e.name);
    if (e.a) collect_names(*e.a, out);
    if (e.b) collect_names(*e.b, out);
}

}  // namespace

Element parse_expression(const Triplet& triplet, const std::string& text, int expected) {
    ExprPtr ast = parse_expression_text(text);
    std::vector<std::string> names;
    collect_names(*ast, names);
    bool uses_first = false, uses_second = false;
    for (const auto& n : names) {
        if (n == triplet.first.param) continue;
        bool in_first = triplet.first.generator_index(n) >= 0;
        bool in_second = triplet.second.generator_index(n) >= 0;
        if (!in_first && !in_second) throw Error("unknown name '" + n + "'");
        uses_first = uses_first || in_first;
        uses_second = uses_second || in_second;
    }
    if (uses_first && uses_second)
        throw Error("expression mixes generators of " + triplet.first.name + " and " +
                    triplet.second.name);
    int home = uses_first ? 0 : uses_second ? 1 : (expected >= 0 ? expected : 0);
    const Algebra& alg = triplet.algebra(home);
    // Same widened evaluation window as the elaborator.
    Algebra wide = alg;
    wide.clear_memos();
    wide.z_order = 2 * alg.z_order + 4;
    wide.commutators.clear();
    for (const auto& [key, comm] : alg.commutators)
        wide.commutators.emplace(key, comm.z_rebounded(wide.z_order));
    return eval_expr(*ast, wide).z_rebounded(alg.z_order);
}

namespace {

void render_algebra(std::ostringstream& out, const Algebra& alg) {
    out << "algebra " << alg.name << " {\n";
    out << "  params: " << alg.param << ";\n";
    out << "  generators: ";
    for (size_t g = 0; g < alg.n_generators(); ++g) {
        if (g) out << " < ";
        out << alg.generator_names[g];
    }
    out << ";\n";
    out << "  relations:\n";
    for (const auto& rel : alg.declared_relations) {
        out << "    [" << alg.generator_names[static_cast<size_t>(rel.a)] << ", "
            << alg.generator_names[static_cast<size_t>(rel.b)]
            << "] = " << alg.render(rel.value, true) << ";\n";
    }
    out << "  coproduct:\n";
    for (size_t g = 0; g < alg.n_generators(); ++g)
        out << "    " << alg.generator_names[g] << " -> " << alg.render(alg.coproducts[g], true)
            << ";\n";
    out << "  counit:\n";
    for (size_t g = 0; g < alg.n_generators(); ++g)
        out << "    " << alg.generator_names[g] << " -> " << alg.counits[g].str() << ";\n";
    out << "  antipode:\n";
    for (size_t g = 0; g < alg.n_generators(); ++g)
        out << "    " << alg.generator_names[g] << " -> " << alg.render(alg.antipodes[g], true)
            << ";\n";
    out << "}\n";
}

}  // namespace

std::string render_presentation(const Triplet& triplet) {
    std::ostringstream out;
    render_algebra(out, triplet.first);
    render_algebra(out, triplet.second);
    out << "pairing " << triplet.first.name << " " << triplet.second.name << " { ";
    for (size_t g = 0; g < triplet.first.n_generators(); ++g) {
        if (g) out << ", ";
        out << triplet.first.generator_names[g] << " ~ "
            << triplet.second.generator_names[static_cast<size_t>(triplet.pairing.sigma[g])];
    }
    out << " }\n";
    return out.str();
}

}  // namespace hopfkit
