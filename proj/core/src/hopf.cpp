#include "hopfkit/hopf.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include <json.hpp>

#include "hopfkit/errors.hpp"

namespace hopfkit {

namespace {

// Delta(m' g) = Delta(m') Delta(g) where g is the last letter of m.
const TensorElement& coproduct_of_monomial(const Monomial& m, const Algebra& alg) {
    auto it = alg.coproduct_memo.find(m);
    if (it != alg.coproduct_memo.end()) return it->second;
    TensorElement value;
    if (m.is_unit()) {
        value = TensorElement(alg.id, alg.n_generators(), alg.deg_bound, alg.z_order);
        value.add_term(Monomial::unit(alg.n_generators()), Monomial::unit(alg.n_generators()),
                       alg.laurent_one());
    } else {
        size_t g = alg.n_generators();
        while (g-- > 0)
            if (m.exponents[g] > 0) break;
        Monomial rest = m;
        rest.exponents[g] -= 1;
        value = multiply(coproduct_of_monomial(rest, alg), alg.coproducts[g], alg);
    }
    return alg.coproduct_memo.emplace(m, std::move(value)).first->second;
}

// S(m' g) = S(g) S(m').
const Element& antipode_of_monomial(const Monomial& m, const Algebra& alg) {
    auto it = alg.antipode_memo.find(m);
    if (it != alg.antipode_memo.end()) return it->second;
    Element value;
    if (m.is_unit()) {
        value = alg.one();
    } else {
        size_t g = alg.n_generators();
        while (g-- > 0)
            if (m.exponents[g] > 0) break;
        Monomial rest = m;
        rest.exponents[g] -= 1;
        value = multiply(alg.antipodes[g], antipode_of_monomial(rest, alg), alg);
    }
    return alg.antipode_memo.emplace(m, std::move(value)).first->second;
}

}  // namespace

TensorElement coproduct(const Element& e, const Algebra& alg) {
    if (e.algebra() != alg.id) throw Error("element does not belong to this algebra");
    TensorElement result(alg.id, alg.n_generators(), alg.deg_bound, alg.z_order);
    for (const auto& [m, c] : e.terms()) result += coproduct_of_monomial(m, alg).scaled(c);
    return result;
}

Laurent counit(const Element& e, const Algebra& alg) {
    if (e.algebra() != alg.id) throw Error("element does not belong to this algebra");
    Laurent result = alg.laurent_zero();
    for (const auto& [m, c] : e.terms()) {
        Rational factor(1);
        for (size_t g = 0; g < alg.n_generators() && !factor.is_zero(); ++g)
            factor *= alg.counits[g].pow(static_cast<int>(m.exponents[g]));
        result += c.scaled(factor);
    }
    return result;
}

Element antipode(const Element& e, const Algebra& alg) {
    if (e.algebra() != alg.id) throw Error("element does not belong to this algebra");
    Element result = alg.zero();
    for (const auto& [m, c] : e.terms()) result += antipode_of_monomial(m, alg).scaled(c);
    return result;
}

namespace {

Rational monomial_factorial(const Monomial& m) {
    Rational f(1);
    for (uint32_t e : m.exponents) f *= Rational::factorial(e);
    return f;
}

Monomial dual_monomial(const Monomial& l, const Pairing& pairing) {
    Monomial m(l.exponents.size());
    for (size_t i = 0; i < l.exponents.size(); ++i)
        m.exponents[static_cast<size_t>(pairing.sigma[i])] = l.exponents[i];
    return m;
}

}  // namespace

Laurent pair_elements(const Element& h, const Element& f, const Triplet& triplet) {
    if (h.algebra() != 0 || f.algebra() != 1)
        throw Error("pairing expects an element of " + triplet.first.name + " and one of " +
                    triplet.second.name);
    Laurent result = Laurent::zero(triplet.z_order);
    for (const auto& [l, ch] : h.terms()) {
        Laurent cf = f.coefficient(dual_monomial(l, triplet.pairing));
        if (cf.is_zero()) continue;
        result += (ch * cf).scaled(monomial_factorial(l));
    }
    return result;
}

bool AxiomReport::all_pass() const {
    for (const auto& e : entries)
        if (!e.pass) return false;
    return true;
}

std::string AxiomReport::json(int indent) const {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& e : entries) {
        nlohmann::ordered_json obj;
        obj["axiom"] = e.axiom;
        obj["degree"] = e.degree;
        obj["status"] = e.pass ? "pass" : "fail";
        if (!e.pass) obj["counterexample"] = e.counterexample;
        arr.push_back(obj);
    }
    return arr.dump(indent);
}

std::string AxiomReport::text() const {
    std::string out;
    for (const auto& e : entries) {
        out += (e.pass ? "pass " : "FAIL ") + e.axiom + " (degree " + std::to_string(e.degree) + ")";
        if (!e.pass) out += "  counterexample: " + e.counterexample;
        out += "\n";
    }
    return out;
}

namespace {

struct Mono3Order {
    bool operator()(const std::tuple<Monomial, Monomial, Monomial>& a,
                    const std::tuple<Monomial, Monomial, Monomial>& b) const {
        MonomialOrder less;
        if (less(std::get<0>(a), std::get<0>(b))) return true;
        if (less(std::get<0>(b), std::get<0>(a))) return false;
        if (less(std::get<1>(a), std::get<1>(b))) return true;
        if (less(std::get<1>(b), std::get<1>(a))) return false;
        return less(std::get<2>(a), std::get<2>(b));
    }
};

using Tensor3 = std::map<std::tuple<Monomial, Monomial, Monomial>, Laurent, Mono3Order>;

void add3(Tensor3& t, const Monomial& a, const Monomial& b, const Monomial& c, const Laurent& v,
          int cap) {
    if (v.is_zero() || a.degree() > cap || b.degree() > cap || c.degree() > cap) return;
    auto key = std::make_tuple(a, b, c);
    auto it = t.find(key);
    if (it == t.end()) {
        t.emplace(key, v);
    } else {
        it->second += v;
        if (it->second.is_zero()) t.erase(it);
    }
}

class AxiomChecker {
  public:
    AxiomChecker(const Workspace& ws, int degree)
        : degree_(degree),
          wide_(ws.at_degree(3 * degree + 4)) {}

    AxiomReport run() {
        for (int side = 0; side < 2; ++side) check_algebra(wide_.algebra(side));
        check_pairing();
        std::sort(report_.entries.begin(), report_.entries.end(),
                  [](const AxiomEntry& a, const AxiomEntry& b) {
                      return std::tie(a.axiom, a.counterexample) < std::tie(b.axiom, b.counterexample);
                  });
        return std::move(report_);
    }

  private:
    void record(const std::string& axiom, bool pass, const std::string& counterexample) {
        report_.entries.push_back({axiom, degree_, pass, pass ? "" : counterexample});
    }

    std::vector<Element> basis_elements(const Algebra& alg) const {
        std::vector<Element> out;
        for (const auto& m : enumerate_basis(alg.n_generators(), degree_)) {
            Element e = alg.zero();
            e.add_term(m, alg.laurent_one());
            out.push_back(e);
        }
        return out;
    }

    void check_algebra(const Algebra& alg) {
        const auto basis = basis_elements(alg);
        const std::string tag = "(" + alg.name + ")";

        {  // (Delta (x) id) Delta = (id (x) Delta) Delta, legs compared at <= degree_
            bool pass = true;
            std::string ce;
            for (const auto& b : basis) {
                TensorElement d = coproduct(b, alg);
                Tensor3 lhs, rhs;
                for (const auto& [mm, c] : d.terms()) {
                    Element leg = alg.zero();
                    leg.add_term(mm.first, alg.laurent_one());
                    TensorElement dleft = coproduct(leg, alg);
                    for (const auto& [ll, lc] : dleft.terms())
                        add3(lhs, ll.first, ll.second, mm.second, c * lc, degree_);
                    Element leg2 = alg.zero();
                    leg2.add_term(mm.second, alg.laurent_one());
                    TensorElement dright = coproduct(leg2, alg);
                    for (const auto& [rr, rc] : dright.terms())
                        add3(rhs, mm.first, rr.first, rr.second, c * rc, degree_);
                }
                if (lhs != rhs) {
                    pass = false;
                    ce = alg.render(b);
                    break;
                }
            }
            record("coassociativity" + tag, pass, ce);
        }

        {  // (eps (x) id) Delta = id = (id (x) eps) Delta
            bool pass = true;
            std::string ce;
            for (const auto& b : basis) {
                TensorElement d = coproduct(b, alg);
                Element left = alg.zero(), right = alg.zero();
                for (const auto& [mm, c] : d.terms()) {
                    Element e1 = alg.zero();
                    e1.add_term(mm.first, alg.laurent_one());
                    Element e2 = alg.zero();
                    e2.add_term(mm.second, alg.laurent_one());
                    left.add_term(mm.second, c * counit(e1, alg));
                    right.add_term(mm.first, c * counit(e2, alg));
                }
                if (left.projected(degree_) != b || right.projected(degree_) != b) {
                    pass = false;
                    ce = alg.render(b);
                    break;
                }
            }
            record("counit" + tag, pass, ce);
        }

        {  // m(S (x) id) Delta = eta eps = m(id (x) S) Delta
            bool pass = true;
            std::string ce;
            for (const auto& b : basis) {
                TensorElement d = coproduct(b, alg);
                Element left = alg.zero(), right = alg.zero();
                for (const auto& [mm, c] : d.terms()) {
                    Element e1 = alg.zero();
                    e1.add_term(mm.first, alg.laurent_one());
                    Element e2 = alg.zero();
                    e2.add_term(mm.second, alg.laurent_one());
                    left += multiply(antipode(e1, alg), e2, alg).scaled(c);
                    right += multiply(e1, antipode(e2, alg), alg).scaled(c);
                }
                Element expected = alg.scalar(counit(b, alg));
                if (left.projected(degree_) != expected.projected(degree_) ||
                    right.projected(degree_) != expected.projected(degree_)) {
                    pass = false;
                    ce = alg.render(b);
                    break;
                }
            }
            record("antipode" + tag, pass, ce);
        }

        check_relation_compat(alg, tag);
    }

    void check_relation_compat(const Algebra& alg, const std::string& tag) {
        bool d_pass = true, e_pass = true, s_pass = true;
        std::string d_ce, e_ce, s_ce;
        for (size_t j = 1; j < alg.n_generators(); ++j) {
            for (size_t i = 0; i < j; ++i) {
                const Element* cm = alg.commutator(static_cast<int>(j), static_cast<int>(i));
                Element comm = cm ? *cm : alg.zero();
                const std::string pair_str = "[" + alg.generator_names[j] + ", " +
                                             alg.generator_names[i] + "]";
                Element gj = alg.generator(static_cast<int>(j));
                Element gi = alg.generator(static_cast<int>(i));
                if (d_pass) {
                    TensorElement lhs = multiply(coproduct(gj, alg), coproduct(gi, alg), alg) -
                                        multiply(coproduct(gi, alg), coproduct(gj, alg), alg) -
                                        coproduct(comm, alg);
                    if (!lhs.projected(degree_).is_zero()) {
                        d_pass = false;
                        d_ce = pair_str;
                    }
                }
                if (e_pass) {
                    Laurent le = Laurent::constant(alg.counits[j] * alg.counits[i] -
                                                       alg.counits[i] * alg.counits[j],
                                                   alg.z_order) -
                                 counit(comm, alg);
                    if (!le.is_zero()) {
                        e_pass = false;
                        e_ce = pair_str;
                    }
                }
                if (s_pass) {
                    Element sj = antipode(gj, alg), si = antipode(gi, alg);
                    Element lhs = multiply(si, sj, alg) - multiply(sj, si, alg) - antipode(comm, alg);
                    if (!lhs.projected(degree_).is_zero()) {
                        s_pass = false;
                        s_ce = pair_str;
                    }
                }
            }
        }
        record("relations-coproduct" + tag, d_pass, d_ce);
        record("relations-counit" + tag, e_pass, e_ce);
        record("relations-antipode" + tag, s_pass, s_ce);
    }

    void check_pairing() {
        const Algebra& A = wide_.first;
        const Algebra& B = wide_.second;
        const auto basis_a = basis_elements(A);
        const auto basis_b = basis_elements(B);
        const auto monos_a = enumerate_basis(A.n_generators(), degree_);
        const auto monos_b = enumerate_basis(B.n_generators(), degree_);

        auto fact = [](const Monomial& m) {
            Rational f(1);
            for (uint32_t e : m.exponents) f *= Rational::factorial(e);
            return f;
        };
        auto to_dual = [&](const Monomial& l) {
            Monomial out(B.n_generators());
            for (size_t i = 0; i < l.exponents.size(); ++i)
                out.exponents[static_cast<size_t>(wide_.pairing.sigma[i])] = l.exponents[i];
            return out;
        };
        auto to_primal = [&](const Monomial& f) {
            Monomial out(A.n_generators());
            for (size_t i = 0; i < f.exponents.size(); ++i)
                out.exponents[static_cast<size_t>(wide_.pairing.inverse[i])] = f.exponents[i];
            return out;
        };

        // Both sides of either duality reduce to single coefficient lookups
        // because the pairing is diagonal on PBW bases.
        {  // <h h', f> = <h (x) h', Delta f>
            bool pass = true;
            std::string ce;
            for (size_t x = 0; x < monos_a.size() && pass; ++x) {
                for (size_t y = 0; y < monos_a.size() && pass; ++y) {
                    Element prod = multiply(basis_a[x], basis_a[y], A);
                    const Laurent weight =
                        Laurent::constant(fact(monos_a[x]) * fact(monos_a[y]), wide_.z_order);
                    for (size_t fi = 0; fi < monos_b.size(); ++fi) {
                        const TensorElement& df = coproduct_of_monomial(monos_b[fi], B);
                        Laurent lhs =
                            prod.coefficient(to_primal(monos_b[fi])).scaled(fact(to_primal(monos_b[fi])));
                        Laurent rhs =
                            df.coefficient(to_dual(monos_a[x]), to_dual(monos_a[y])) * weight;
                        if (lhs != rhs) {
                            pass = false;
                            ce = "h=" + A.render(basis_a[x]) + ", h'=" + A.render(basis_a[y]) +
                                 ", f=" + B.render(basis_b[fi]);
                            break;
                        }
                    }
                }
            }
            record("pairing-multiply-first", pass, ce);
        }

        {  // <h, f f'> = <Delta h, f (x) f'>
            bool pass = true;
            std::string ce;
            for (size_t x = 0; x < monos_b.size() && pass; ++x) {
                for (size_t y = 0; y < monos_b.size() && pass; ++y) {
                    Element prod = multiply(basis_b[x], basis_b[y], B);
                    const Laurent weight = Laurent::constant(
                        fact(to_primal(monos_b[x])) * fact(to_primal(monos_b[y])), wide_.z_order);
                    for (size_t hi = 0; hi < monos_a.size(); ++hi) {
                        const TensorElement& dh = coproduct_of_monomial(monos_a[hi], A);
                        Laurent lhs =
                            prod.coefficient(to_dual(monos_a[hi])).scaled(fact(monos_a[hi]));
                        Laurent rhs =
                            dh.coefficient(to_primal(monos_b[x]), to_primal(monos_b[y])) * weight;
                        if (lhs != rhs) {
                            pass = false;
                            ce = "h=" + A.render(basis_a[hi]) + ", f=" + B.render(basis_b[x]) +
                                 ", f'=" + B.render(basis_b[y]);
                            break;
                        }
                    }
                }
            }
            record("pairing-multiply-second", pass, ce);
        }

        {  // <1, f> = eps(f) and <h, 1> = eps(h)
            bool pass = true;
            std::string ce;
            for (const auto& f : basis_b) {
                if (pair_elements(A.one(), f, wide_) != counit(f, B)) {
                    pass = false;
                    ce = "f=" + B.render(f);
                    break;
                }
            }
            if (pass) {
                for (const auto& h : basis_a) {
                    if (pair_elements(h, B.one(), wide_) != counit(h, A)) {
                        pass = false;
                        ce = "h=" + A.render(h);
                        break;
                    }
                }
            }
            record("pairing-unit", pass, ce);
        }

        {  // <S(h), f> = <h, S(f)>
            bool pass = true;
            std::string ce;
            for (const auto& h : basis_a) {
                for (const auto& f : basis_b) {
                    if (pair_elements(antipode(h, A), f, wide_) !=
                        pair_elements(h, antipode(f, B), wide_)) {
                        pass = false;
                        ce = "h=" + A.render(h) + ", f=" + B.render(f);
                        break;
                    }
                }
                if (!pass) break;
            }
            record("pairing-antipode", pass, ce);
        }
    }

    int degree_;
    const Triplet& wide_;
    AxiomReport report_;
};

}  // namespace

AxiomReport verify_axioms(const Workspace& ws, int degree) {
    return AxiomChecker(ws, degree).run();
}

}  // namespace hopfkit
