#include "hopfkit/induce.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "hopfkit/errors.hpp"

namespace hopfkit {

std::optional<Laurent> Character::value_of(int g) const {
    for (size_t i = 0; i < generators.size(); ++i)
        if (generators[i] == g) return values[i];
    return std::nullopt;
}

Laurent Character::extend(const Element& e, int z_order) const {
    Laurent acc = Laurent::zero(z_order);
    for (const auto& [m, c] : e.terms()) {
        Laurent factor = Laurent::one(z_order);
        for (size_t g = 0; g < m.exponents.size() && !factor.is_zero(); ++g) {
            if (m.exponents[g] == 0) continue;
            auto v = value_of(static_cast<int>(g));
            if (!v) throw Error("element leaves the subalgebra of the character");
            factor = factor * v->pow(static_cast<int>(m.exponents[g]));
        }
        acc += c * factor;
    }
    return acc;
}

Character parse_character(const Triplet& triplet, const std::string& spec) {
    Character chi;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw Error("character entry '" + item + "' is not NAME=VALUE");
        auto strip = [](std::string s) {
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(0, 1);
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
            return s;
        };
        std::string name = strip(item.substr(0, eq));
        std::string value = strip(item.substr(eq + 1));
        int g = triplet.first.generator_index(name);
        if (g < 0) throw Error("unknown generator '" + name + "' in character");
        for (int seen : chi.generators)
            if (seen == g) throw Error("duplicate character value for '" + name + "'");
        chi.generators.push_back(g);
        chi.values.push_back(Laurent::constant(Rational::parse(value), triplet.z_order));
    }
    if (chi.generators.empty()) throw Error("empty character");
    for (const auto& v : chi.values)
        if (!v.is_constant()) chi.experimental = true;
    return chi;
}

void validate_character(const Triplet& triplet, const Character& chi) {
    const Algebra& A = triplet.first;
    for (int g : chi.generators)
        if (g < 0 || g >= static_cast<int>(A.n_generators())) throw Error("bad character generator");
    for (size_t x = 0; x < chi.generators.size(); ++x) {
        for (size_t y = 0; y < x; ++y) {
            int j = std::max(chi.generators[x], chi.generators[y]);
            int i = std::min(chi.generators[x], chi.generators[y]);
            const Element* comm = A.commutator(j, i);
            if (!comm) continue;
            for (const auto& [m, c] : comm->terms())
                for (size_t g = 0; g < m.exponents.size(); ++g)
                    if (m.exponents[g] > 0 && !chi.value_of(static_cast<int>(g)))
                        throw Error("character subalgebra is not closed: [" +
                                    A.generator_names[static_cast<size_t>(j)] + ", " +
                                    A.generator_names[static_cast<size_t>(i)] + "] leaves it");
            // chi of a bracket must vanish, since chi(s)chi(s') commutes.
            if (!chi.extend(*comm, triplet.z_order).is_zero())
                throw Error("character values are inconsistent with the bracket [" +
                            A.generator_names[static_cast<size_t>(j)] + ", " +
                            A.generator_names[static_cast<size_t>(i)] + "]");
        }
    }
}

namespace {

// Exact reduced row echelon form over the truncated Laurent scalars; pivots
// are chosen by least |valuation| for regularity, then first row.
struct EchelonResult {
    std::vector<std::vector<Laurent>> rows;
    std::vector<int> pivot_columns;
};

EchelonResult reduced_echelon(std::vector<std::vector<Laurent>> rows, size_t n_cols, int z_order) {
    EchelonResult result;
    size_t rank = 0;
    for (size_t col = 0; col < n_cols && rank < rows.size(); ++col) {
        int best = -1;
        int best_val = 0;
        for (size_t r = rank; r < rows.size(); ++r) {
            if (rows[r][col].is_zero()) continue;
            int val = std::abs(rows[r][col].valuation());
            if (best < 0 || val < best_val) {
                best = static_cast<int>(r);
                best_val = val;
            }
        }
        if (best < 0) continue;
        std::swap(rows[rank], rows[static_cast<size_t>(best)]);
        Laurent inv = rows[rank][col].inverse();
        for (auto& e : rows[rank]) e = e * inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            Laurent factor = rows[r][col];
            for (size_t c2 = 0; c2 < n_cols; ++c2) rows[r][c2] -= factor * rows[rank][c2];
        }
        result.pivot_columns.push_back(static_cast<int>(col));
        ++rank;
    }
    rows.resize(rank, std::vector<Laurent>(n_cols, Laurent::zero(z_order)));
    result.rows = std::move(rows);
    return result;
}

int max_degree_drop(const OperatorMatrix& m) {
    int drop = 0;
    for (size_t j = 0; j < m.size(); ++j) {
        for (size_t i = 0; i < m.size(); ++i) {
            if (m.entries[i][j].is_zero()) continue;
            drop = std::max(drop, m.basis[j].degree() - m.basis[i].degree());
        }
    }
    return drop;
}

}  // namespace

CarrierBasis solve_equivariance(const Workspace& ws, const Character& chi, ActionKind side,
                                int deg_bound) {
    if (side != ActionKind::LeftCoregular && side != ActionKind::RightCoregular)
        throw Error("equivariance side must be a coregular action");
    const Triplet& base = ws.base();
    validate_character(base, chi);

    const Algebra& B = base.second;
    auto basis = enumerate_basis(B.n_generators(), deg_bound);
    const size_t n = basis.size();

    std::vector<OperatorMatrix> mats;
    int drop = 0;
    for (size_t s = 0; s < chi.generators.size(); ++s) {
        Element gen = base.first.generator(chi.generators[s]);
        mats.push_back(operator_matrix(ws, side, gen, deg_bound));
        drop = std::max(drop, max_degree_drop(mats.back()));
    }

    // Equations live on components of degree <= deg_bound - drop, where the
    // truncated images are still exact.
    std::vector<std::vector<Laurent>> rows;
    for (size_t s = 0; s < chi.generators.size(); ++s) {
        const Laurent& value = chi.values[s];
        for (size_t row = 0; row < n; ++row) {
            if (basis[row].degree() > deg_bound - drop) continue;
            std::vector<Laurent> eq(n, Laurent::zero(ws.z_order()));
            bool nonzero = false;
            for (size_t col = 0; col < n; ++col) {
                Laurent e = mats[s].entries[row][col];
                if (col == row) e -= value;
                if (!e.is_zero()) nonzero = true;
                eq[col] = e;
            }
            if (nonzero) rows.push_back(std::move(eq));
        }
    }

    EchelonResult ech = reduced_echelon(std::move(rows), n, ws.z_order());

    // Nullspace vectors keyed by free columns.
    std::vector<bool> is_pivot(n, false);
    for (int c : ech.pivot_columns) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<Laurent>> null_vectors;
    for (size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Laurent> v(n, Laurent::zero(ws.z_order()));
        v[free_col] = Laurent::one(ws.z_order());
        for (size_t r = 0; r < ech.pivot_columns.size(); ++r)
            v[static_cast<size_t>(ech.pivot_columns[r])] = -ech.rows[r][free_col];
        null_vectors.push_back(std::move(v));
    }

    // Canonical reduced echelon basis of the solution space itself.
    EchelonResult canon = reduced_echelon(std::move(null_vectors), n, ws.z_order());

    CarrierBasis carrier;
    carrier.side = side;
    carrier.deg_bound = deg_bound;
    carrier.degree_drop = drop;
    for (size_t r = 0; r < canon.rows.size(); ++r) {
        Element e(1, B.n_generators(), deg_bound, ws.z_order());
        for (size_t c = 0; c < n; ++c)
            if (!canon.rows[r][c].is_zero()) e.add_term(basis[c], canon.rows[r][c]);
        if (e.is_zero()) continue;
        carrier.elements.push_back(e);
        carrier.pivots.push_back(basis[static_cast<size_t>(canon.pivot_columns[r])]);
    }
    return carrier;
}

OperatorMatrix induced_action(const Workspace& ws, const CarrierBasis& carrier, const Element& h) {
    const Triplet& base = ws.base();
    const ActionKind op_side = carrier.side == ActionKind::RightCoregular
                                   ? ActionKind::LeftCoregular
                                   : ActionKind::RightCoregular;
    const size_t dim = carrier.dimension();
    OperatorMatrix m;
    m.algebra = 1;
    m.basis = carrier.pivots;
    m.z_order = ws.z_order();
    m.entries.assign(dim, std::vector<Laurent>(dim, Laurent::zero(ws.z_order())));
    m.reliable.assign(dim, true);
    if (dim == 0) return m;

    // Window on which the image of a truncated carrier element is the true
    // image: the action can pull the invisible tail down by at most its
    // maximal degree drop.
    OperatorMatrix op = operator_matrix(ws, op_side, h, carrier.deg_bound);
    const int window = carrier.deg_bound - max_degree_drop(op);
    m.trusted_rows.assign(dim, true);
    for (size_t i = 0; i < dim; ++i)
        m.trusted_rows[i] = carrier.pivots[i].degree() <= window;

    for (size_t col = 0; col < dim; ++col) {
        Element image = act(ws, op_side, h, carrier.elements[col]);
        Element residual = image;
        for (size_t row = 0; row < dim; ++row) {
            Laurent c = image.coefficient(carrier.pivots[row]);
            m.entries[row][col] = c;
            if (!c.is_zero()) residual -= carrier.elements[row].scaled(c);
        }
        if (!residual.projected(window).is_zero()) m.reliable[col] = false;
    }
    return m;
}

InducedRep induce(const Workspace& ws, const Character& chi, ActionKind side, int deg_bound) {
    InducedRep rep;
    rep.character = chi;
    rep.carrier = solve_equivariance(ws, chi, side, deg_bound);
    rep.action_side = rep.carrier.side == ActionKind::RightCoregular ? ActionKind::LeftCoregular
                                                                     : ActionKind::RightCoregular;
    const Algebra& A = ws.base().first;
    for (size_t g = 0; g < A.n_generators(); ++g)
        rep.matrices.push_back(induced_action(ws, rep.carrier, A.generator(static_cast<int>(g))));
    return rep;
}

std::string InducedRep::json(const Triplet& triplet, int indent) const {
    const Algebra& A = triplet.first;
    const Algebra& B = triplet.second;
    nlohmann::ordered_json obj;
    obj["character"] = nlohmann::ordered_json::object();
    for (size_t i = 0; i < character.generators.size(); ++i)
        obj["character"][A.generator_names[static_cast<size_t>(character.generators[i])]] =
            character.values[i].str(A.param);
    obj["carrier"] = nlohmann::ordered_json::array();
    for (const auto& e : carrier.elements) obj["carrier"].push_back(B.render(e));
    obj["generators"] = nlohmann::ordered_json::object();
    obj["boundary_columns"] = nlohmann::ordered_json::object();
    for (size_t g = 0; g < matrices.size(); ++g) {
        const std::string& name = A.generator_names[g];
        obj["generators"][name] = nlohmann::ordered_json::parse(matrices[g].json(B, indent));
        nlohmann::ordered_json cols = nlohmann::ordered_json::array();
        for (size_t j = 0; j < matrices[g].reliable.size(); ++j)
            if (!matrices[g].reliable[j]) cols.push_back(j);
        obj["boundary_columns"][name] = cols;
    }
    return obj.dump(indent);
}

InducedRep gauge_shift(const InducedRep& rep, int generator, const Laurent& c) {
    InducedRep out = rep;
    if (generator < 0 || generator >= static_cast<int>(rep.matrices.size()))
        throw Error("bad generator for gauge shift");
    auto& m = out.matrices[static_cast<size_t>(generator)];
    for (size_t i = 0; i < m.size(); ++i) m.entries[i][i] -= c;
    for (size_t i = 0; i < out.character.generators.size(); ++i)
        if (out.character.generators[i] == generator) out.character.values[i] -= c;
    return out;
}

RescaleReport rescale_check(const Workspace& ws, const Character& chi1, const Character& chi2,
                            ActionKind side, const Laurent& lambda, int deg_bound) {
    if (lambda.is_zero()) throw Error("rescaling by zero");
    if (chi1.generators != chi2.generators)
        throw Error("rescale check needs characters on the same subalgebra");
    const Triplet& base = ws.base();

    int star = -1;
    for (size_t i = 0; i < chi1.generators.size(); ++i) {
        if (chi1.values[i] == chi2.values[i]) continue;
        if (star >= 0) return {false, "characters differ at more than one generator"};
        star = static_cast<int>(i);
    }
    if (star < 0) return {true, "characters are identical"};
    if (chi1.values[static_cast<size_t>(star)] != lambda * chi2.values[static_cast<size_t>(star)])
        return {false, "lambda does not relate the differing character values"};
    const int star_gen = chi1.generators[static_cast<size_t>(star)];
    const int dual_gen = base.pairing.sigma[static_cast<size_t>(star_gen)];

    InducedRep rep1 = induce(ws, chi1, side, deg_bound);
    InducedRep rep2 = induce(ws, chi2, side, deg_bound);
    if (rep1.carrier.dimension() != rep2.carrier.dimension())
        return {false, "carrier dimensions differ"};

    // Rescale the dual coordinate in the second carrier and compare bases.
    for (size_t i = 0; i < rep2.carrier.dimension(); ++i) {
        Element scaled(1, base.second.n_generators(), deg_bound, ws.z_order());
        for (const auto& [m, c] : rep2.carrier.elements[i].terms())
            scaled.add_term(m, c * lambda.pow(static_cast<int>(
                                   m.exponents[static_cast<size_t>(dual_gen)])));
        if (!(scaled == rep1.carrier.elements[i]))
            return {false, "carrier vector " + std::to_string(i) +
                               " does not match after rescaling the dual generator"};
    }

    for (size_t g = 0; g < rep1.matrices.size(); ++g) {
        OperatorMatrix expected = static_cast<int>(g) == star_gen
                                      ? rep2.matrices[g].scaled(lambda)
                                      : rep2.matrices[g];
        if (auto diff = first_reliable_difference(rep1.matrices[g], expected)) {
            std::ostringstream out;
            out << "matrix of " << base.first.generator_names[g] << " differs at row "
                << diff->first << ", column " << diff->second;
            return {false, out.str()};
        }
    }
    return {true, ""};
}

namespace {

Element substitute_element(const Element& e, const Algebra& alg) {
    Element out = alg.zero();
    for (const auto& [m, c] : e.terms())
        out.add_term(m, Laurent::constant(c.substitute(Rational(0)), alg.z_order));
    return out;
}

TensorElement substitute_tensor(const TensorElement& e, const Algebra& alg) {
    TensorElement out(alg.id, alg.n_generators(), alg.deg_bound, alg.z_order);
    for (const auto& [mm, c] : e.terms())
        out.add_term(mm.first, mm.second, Laurent::constant(c.substitute(Rational(0)), alg.z_order));
    return out;
}

Algebra limit_algebra(const Algebra& alg) {
    Algebra out = alg;
    out.clear_memos();
    out.commutators.clear();
    for (const auto& [pair, comm] : alg.commutators) {
        Element sub = substitute_element(comm, alg);
        if (!sub.is_zero()) out.commutators.emplace(pair, sub);
    }
    out.declared_relations.clear();
    for (const auto& rel : alg.declared_relations)
        out.declared_relations.push_back({rel.a, rel.b, substitute_element(rel.value, alg)});
    for (size_t g = 0; g < alg.n_generators(); ++g) {
        out.coproducts[g] = substitute_tensor(alg.coproducts[g], alg);
        out.antipodes[g] = substitute_element(alg.antipodes[g], alg);
    }
    return out;
}

}  // namespace

Triplet classical_limit(const Triplet& t) {
    Triplet out = t;
    out.first = limit_algebra(t.first);
    out.second = limit_algebra(t.second);
    return out;
}

Workspace classical_limit_workspace(const Workspace& ws) {
    return Workspace(ws.file(), ws.deg_bound(), ws.z_order(),
                     [](const Triplet& t) { return classical_limit(t); });
}

}  // namespace hopfkit
