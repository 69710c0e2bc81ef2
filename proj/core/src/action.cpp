#include "hopfkit/action.hpp"

#include <algorithm>

#include <json.hpp>

#include "hopfkit/errors.hpp"

namespace hopfkit {

ActionKind action_kind_from_name(const std::string& name) {
    if (name == "left-regular") return ActionKind::LeftRegular;
    if (name == "right-coregular") return ActionKind::RightCoregular;
    if (name == "left-coregular") return ActionKind::LeftCoregular;
    throw Error("unknown action kind '" + name + "'");
}

std::string action_kind_name(ActionKind kind) {
    switch (kind) {
        case ActionKind::LeftRegular: return "left-regular";
        case ActionKind::RightCoregular: return "right-coregular";
        case ActionKind::LeftCoregular: return "left-coregular";
    }
    return "?";
}

Monomial dual_of_monomial(const Monomial& m, const Triplet& triplet) {
    Monomial out(m.exponents.size());
    for (size_t i = 0; i < m.exponents.size(); ++i)
        out.exponents[static_cast<size_t>(triplet.pairing.sigma[i])] = m.exponents[i];
    return out;
}

namespace {

Rational monomial_factorial(const Monomial& m) {
    Rational f(1);
    for (uint32_t e : m.exponents) f *= Rational::factorial(e);
    return f;
}

// Coregular actions through the pairing adjoint: the coefficient of the dual
// basis vector y_m in h > f is <x_m h, f> / m!, and in f < h it is
// <h x_m, f> / m!. Only products on the enveloping side are needed, computed
// with enough headroom that every read component is exact.
struct ActResult {
    Element value;
    bool boundary;  // the true image continues above the degree bound
};

ActResult act_wide(const Workspace& ws, ActionKind kind, const Element& h, const Element& f,
                   int out_bound) {
    if (kind == ActionKind::LeftRegular) {
        if (h.algebra() != f.algebra())
            throw Error("left-regular action needs both elements in the same algebra");
        const int wide_bound = out_bound + h.degree() + f.degree() + 2;
        const Triplet& wide = ws.at_degree(wide_bound);
        Element image = multiply(h.rebounded(wide_bound), f.rebounded(wide_bound),
                                 wide.algebra(h.algebra()));
        return {image.projected(out_bound).rebounded(out_bound), image.degree() > out_bound};
    }
    if (h.algebra() != 0 || f.algebra() != 1)
        throw Error(action_kind_name(kind) + " action needs h in " + ws.base().first.name +
                    " and f in " + ws.base().second.name);
    // Probe two degrees past the bound to detect truncated tails.
    const int probe_bound = out_bound + 2;
    const int wide_bound = probe_bound + h.degree() + f.degree() + 2;
    const Triplet& wide = ws.at_degree(wide_bound);
    const Algebra& U = wide.first;
    Element hw = h.rebounded(wide_bound);

    Element image(1, wide.second.n_generators(), out_bound, ws.z_order());
    bool boundary = false;
    for (const Monomial& m : enumerate_basis(U.n_generators(), probe_bound)) {
        if (m.degree() + h.degree() > wide_bound) continue;
        Element xm = U.zero();
        xm.add_term(m, U.laurent_one());
        Element p = kind == ActionKind::LeftCoregular ? multiply(xm, hw, U) : multiply(hw, xm, U);
        Laurent c = pair_elements(p, f.rebounded(wide_bound), wide);
        if (c.is_zero()) continue;
        if (m.degree() > out_bound) {
            boundary = true;
            continue;
        }
        image.add_term(dual_of_monomial(m, wide), c.scaled(Rational(1) / monomial_factorial(m)));
    }
    return {image, boundary};
}

}  // namespace

Element act(const Workspace& ws, ActionKind kind, const Element& h, const Element& f) {
    return act_wide(ws, kind, h, f, ws.deg_bound()).value;
}

OperatorMatrix OperatorMatrix::zero(int algebra, const std::vector<Monomial>& basis, int z_order) {
    OperatorMatrix m;
    m.algebra = algebra;
    m.basis = basis;
    m.z_order = z_order;
    m.entries.assign(basis.size(), std::vector<Laurent>(basis.size(), Laurent::zero(z_order)));
    m.reliable.assign(basis.size(), true);
    return m;
}

OperatorMatrix OperatorMatrix::identity(int algebra, const std::vector<Monomial>& basis,
                                        int z_order) {
    OperatorMatrix m = zero(algebra, basis, z_order);
    for (size_t i = 0; i < basis.size(); ++i) m.entries[i][i] = Laurent::one(z_order);
    return m;
}

int OperatorMatrix::basis_index(const Monomial& m) const {
    MonomialOrder less;
    auto it = std::lower_bound(basis.begin(), basis.end(), m, less);
    if (it == basis.end() || !(*it == m)) return -1;
    return static_cast<int>(it - basis.begin());
}

OperatorMatrix OperatorMatrix::times(const OperatorMatrix& o) const {
    if (basis.size() != o.basis.size()) throw Error("matrix size mismatch");
    OperatorMatrix r = zero(algebra, basis, z_order);
    const size_t n = basis.size();
    for (size_t j = 0; j < n; ++j) {
        bool ok = o.reliable[j];
        for (size_t k = 0; k < n; ++k) {
            const Laurent& b = o.entries[k][j];
            if (b.is_zero()) continue;
            if (!reliable[k] || !o.row_trusted(k)) ok = false;
            for (size_t i = 0; i < n; ++i) {
                if (entries[i][k].is_zero()) continue;
                r.entries[i][j] += entries[i][k] * b;
            }
        }
        r.reliable[j] = ok;
    }
    if (!trusted_rows.empty() || !o.trusted_rows.empty()) {
        r.trusted_rows.assign(n, true);
        for (size_t i = 0; i < n; ++i) r.trusted_rows[i] = row_trusted(i);
    }
    return r;
}

OperatorMatrix OperatorMatrix::plus(const OperatorMatrix& o) const {
    if (basis.size() != o.basis.size()) throw Error("matrix size mismatch");
    OperatorMatrix r = *this;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j) r.entries[i][j] += o.entries[i][j];
    for (size_t j = 0; j < basis.size(); ++j)
        r.reliable[j] = reliable[j] && o.reliable[j];
    if (!trusted_rows.empty() || !o.trusted_rows.empty()) {
        r.trusted_rows.assign(basis.size(), true);
        for (size_t i = 0; i < basis.size(); ++i)
            r.trusted_rows[i] = row_trusted(i) && o.row_trusted(i);
    }
    return r;
}

OperatorMatrix OperatorMatrix::minus(const OperatorMatrix& o) const {
    if (basis.size() != o.basis.size()) throw Error("matrix size mismatch");
    OperatorMatrix r = *this;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = 0; j < basis.size(); ++j) r.entries[i][j] -= o.entries[i][j];
    for (size_t j = 0; j < basis.size(); ++j)
        r.reliable[j] = reliable[j] && o.reliable[j];
    if (!trusted_rows.empty() || !o.trusted_rows.empty()) {
        r.trusted_rows.assign(basis.size(), true);
        for (size_t i = 0; i < basis.size(); ++i)
            r.trusted_rows[i] = row_trusted(i) && o.row_trusted(i);
    }
    return r;
}

OperatorMatrix OperatorMatrix::scaled(const Laurent& c) const {
    OperatorMatrix r = *this;
    for (auto& row : r.entries)
        for (auto& e : row) e = e * c;
    return r;
}

bool operator==(const OperatorMatrix& a, const OperatorMatrix& b) {
    return a.algebra == b.algebra && a.basis == b.basis && a.entries == b.entries &&
           a.reliable == b.reliable;
}

std::optional<std::pair<size_t, size_t>> first_reliable_difference(const OperatorMatrix& a,
                                                                   const OperatorMatrix& b) {
    if (a.basis != b.basis) throw Error("matrices over different bases");
    for (size_t j = 0; j < a.basis.size(); ++j) {
        if (!a.reliable[j] || !b.reliable[j]) continue;
        for (size_t i = 0; i < a.basis.size(); ++i) {
            if (!a.row_trusted(i) || !b.row_trusted(i)) continue;
            if (a.entries[i][j] != b.entries[i][j]) return std::make_pair(i, j);
        }
    }
    return std::nullopt;
}

std::string OperatorMatrix::json(const Algebra& alg, int indent) const {
    nlohmann::ordered_json obj;
    obj["basis"] = nlohmann::ordered_json::array();
    for (const auto& m : basis) obj["basis"].push_back(monomial_str(m, alg.generator_names));
    obj["entries"] = nlohmann::ordered_json::array();
    for (size_t i = 0; i < basis.size(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (size_t j = 0; j < basis.size(); ++j) row.push_back(entries[i][j].str(alg.param));
        obj["entries"].push_back(row);
    }
    obj["boundary_columns"] = nlohmann::ordered_json::array();
    for (size_t j = 0; j < basis.size(); ++j)
        if (!reliable[j]) obj["boundary_columns"].push_back(j);
    return obj.dump(indent);
}

OperatorMatrix operator_matrix(const Workspace& ws, ActionKind kind, const Element& h,
                               int deg_bound) {
    const Triplet& base = ws.base();
    const int target = kind == ActionKind::LeftRegular ? h.algebra() : 1;
    const Algebra& alg = base.algebra(target);
    auto basis = enumerate_basis(alg.n_generators(), deg_bound);
    OperatorMatrix m = OperatorMatrix::zero(target, basis, ws.z_order());
    for (size_t j = 0; j < basis.size(); ++j) {
        Element b(target, alg.n_generators(), deg_bound, ws.z_order());
        b.add_term(basis[j], Laurent::one(ws.z_order()));
        ActResult r = act_wide(ws, kind, h, b, deg_bound);
        for (const auto& [mono, c] : r.value.terms())
            m.entries[static_cast<size_t>(m.basis_index(mono))][j] = c;
        m.reliable[j] = !r.boundary;
    }
    return m;
}

OperatorMatrix adjoint_matrix(const OperatorMatrix& m, const Triplet& triplet) {
    const int dual_id = 1 - m.algebra;
    const Algebra& dual = triplet.algebra(dual_id);
    auto to_dual = [&](const Monomial& l) {
        Monomial out(dual.n_generators());
        for (size_t i = 0; i < l.exponents.size(); ++i) {
            int target = m.algebra == 0 ? triplet.pairing.sigma[i] : triplet.pairing.inverse[i];
            out.exponents[static_cast<size_t>(target)] = l.exponents[i];
        }
        return out;
    };
    auto basis = enumerate_basis(dual.n_generators(), [&] {
        int d = 0;
        for (const auto& b : m.basis) d = std::max(d, b.degree());
        return d;
    }());
    OperatorMatrix a = OperatorMatrix::zero(dual_id, basis, m.z_order);
    auto fact = [](const Monomial& mm) {
        Rational f(1);
        for (uint32_t e : mm.exponents) f *= Rational::factorial(e);
        return f;
    };
    // <x_k, f'(y_sigma(l))> = <f(x_k), y_sigma(l)>, so the coefficient of
    // y_sigma(k) in f'(y_sigma(l)) is M[l, k] * l! / k!.
    for (size_t l = 0; l < m.basis.size(); ++l) {
        int col = a.basis_index(to_dual(m.basis[l]));
        if (col < 0) continue;
        bool ok = true;
        for (size_t k = 0; k < m.basis.size(); ++k) {
            const Laurent& v = m.entries[l][k];
            if (v.is_zero()) continue;
            if (!m.reliable[k]) ok = false;
            int row = a.basis_index(to_dual(m.basis[k]));
            if (row < 0) continue;
            a.entries[static_cast<size_t>(row)][static_cast<size_t>(col)] =
                v.scaled(fact(m.basis[l]) / fact(m.basis[k]));
        }
        a.reliable[static_cast<size_t>(col)] = ok;
    }
    return a;
}

OperatorMatrix basis_operator(const Triplet& triplet, BasisOperator which, int generator,
                              int algebra, int deg_bound) {
    const Algebra& alg = triplet.algebra(algebra);
    if (generator < 0 || generator >= static_cast<int>(alg.n_generators()))
        throw Error("bad generator index");
    auto basis = enumerate_basis(alg.n_generators(), deg_bound);
    OperatorMatrix m = OperatorMatrix::zero(algebra, basis, triplet.z_order);
    for (size_t j = 0; j < basis.size(); ++j) {
        Monomial target = basis[j];
        if (which == BasisOperator::MultiplyByGenerator) {
            target.exponents[static_cast<size_t>(generator)] += 1;
            int row = m.basis_index(target);
            if (row < 0) {
                m.reliable[j] = false;  // image leaves the truncated basis
                continue;
            }
            m.entries[static_cast<size_t>(row)][j] = Laurent::one(triplet.z_order);
        } else {
            uint32_t e = target.exponents[static_cast<size_t>(generator)];
            if (e == 0) continue;
            target.exponents[static_cast<size_t>(generator)] -= 1;
            int row = m.basis_index(target);
            m.entries[static_cast<size_t>(row)][j] =
                Laurent::constant(Rational(static_cast<long>(e)), triplet.z_order);
        }
    }
    return m;
}

namespace {

OperatorMatrix multiplication_matrix(const Workspace& ws, const Element& h, int deg_bound,
                                     bool left) {
    const int wide_bound = deg_bound + ws.deg_bound() + h.degree() + 2;
    const Triplet& wide = ws.at_degree(wide_bound);
    const Algebra& alg = wide.algebra(h.algebra());
    Element hw = h.rebounded(wide_bound);
    auto basis = enumerate_basis(alg.n_generators(), deg_bound);
    OperatorMatrix m = OperatorMatrix::zero(h.algebra(), basis, ws.z_order());
    for (size_t j = 0; j < basis.size(); ++j) {
        Element b = alg.zero();
        b.add_term(basis[j], alg.laurent_one());
        Element image = left ? multiply(hw, b, alg) : multiply(b, hw, alg);
        bool boundary = image.degree() > deg_bound;
        for (const auto& [mono, c] : image.terms()) {
            if (mono.degree() > deg_bound) continue;
            int row = m.basis_index(mono);
            if (row < 0) continue;
            m.entries[static_cast<size_t>(row)][j] = c;
        }
        m.reliable[j] = !boundary;
    }
    return m;
}

}  // namespace

OperatorMatrix left_multiplication_matrix(const Workspace& ws, const Element& h, int deg_bound) {
    return multiplication_matrix(ws, h, deg_bound, true);
}

OperatorMatrix right_multiplication_matrix(const Workspace& ws, const Element& h, int deg_bound) {
    return multiplication_matrix(ws, h, deg_bound, false);
}

}  // namespace hopfkit
