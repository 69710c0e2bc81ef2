#include "hopfkit/algebra.hpp"

#include <algorithm>
#include <array>

#include "hopfkit/errors.hpp"

namespace hopfkit {

int Algebra::generator_index(const std::string& name) const {
    for (size_t i = 0; i < generator_names.size(); ++i)
        if (generator_names[i] == name) return static_cast<int>(i);
    return -1;
}

Element Algebra::one() const {
    Element e = zero();
    e.add_term(Monomial::unit(n_generators()), laurent_one());
    return e;
}

Element Algebra::scalar(const Laurent& c) const {
    Element e = zero();
    e.add_term(Monomial::unit(n_generators()), c);
    return e;
}

Element Algebra::generator(int g) const {
    Element e = zero();
    e.add_term(Monomial::generator(n_generators(), static_cast<size_t>(g)), laurent_one());
    return e;
}

const Element* Algebra::commutator(int j, int i) const {
    auto it = commutators.find({j, i});
    return it == commutators.end() ? nullptr : &it->second;
}

namespace {

// Leftmost adjacent descent, or -1 when the word is nondecreasing.
int leftmost_descent(const Word& w) {
    for (size_t p = 0; p + 1 < w.letters.size(); ++p)
        if (w.letters[p] > w.letters[p + 1]) return static_cast<int>(p);
    return -1;
}

Monomial word_monomial(const Word& w, size_t n_generators) {
    Monomial m(n_generators);
    for (int g : w.letters) m.exponents.at(static_cast<size_t>(g)) += 1;
    return m;
}

}  // namespace

Element normal_order(const Word& w, const Laurent& coeff, const Algebra& alg) {
    Element result = alg.zero();
    if (coeff.is_zero()) return result;
    for (int g : w.letters)
        if (g < 0 || g >= static_cast<int>(alg.n_generators()))
            throw Error("unknown generator index " + std::to_string(g));
    std::map<Word, Laurent> work;
    if (w.degree() <= alg.deg_bound) work.emplace(w, coeff);
    long steps = 0;
    while (!work.empty()) {
        auto it = work.begin();
        Word word = it->first;
        Laurent c = it->second;
        work.erase(it);
        if (c.is_zero()) continue;
        int p = leftmost_descent(word);
        if (p < 0) {
            result.add_term(word_monomial(word, alg.n_generators()), c);
            continue;
        }
        if (++steps > kRewriteBudget)
            throw Error("rewrite budget exceeded while normal ordering (non-terminating presentation?)");
        const int j = word.letters[p], i = word.letters[p + 1];
        Word swapped = word;
        std::swap(swapped.letters[p], swapped.letters[p + 1]);
        auto push = [&](Word&& nw, const Laurent& nc) {
            if (nc.is_zero() || nw.degree() > alg.deg_bound) return;
            auto [pos, inserted] = work.emplace(std::move(nw), nc);
            if (!inserted) {
                pos->second += nc;
                if (pos->second.is_zero()) work.erase(pos);
            }
        };
        push(std::move(swapped), c);
        if (const Element* comm = alg.commutator(j, i)) {
            for (const auto& [m, k] : comm->terms()) {
                Word branch;
                branch.letters.reserve(word.letters.size() - 2 + static_cast<size_t>(m.degree()));
                branch.letters.insert(branch.letters.end(), word.letters.begin(),
                                      word.letters.begin() + p);
                Word mid = Word::from_monomial(m);
                branch.letters.insert(branch.letters.end(), mid.letters.begin(), mid.letters.end());
                branch.letters.insert(branch.letters.end(), word.letters.begin() + p + 2,
                                      word.letters.end());
                push(std::move(branch), c * k);
            }
        }
    }
    return result;
}

Element normal_order(const Word& w, const Algebra& alg) {
    return normal_order(w, alg.laurent_one(), alg);
}

namespace {

// Canonical product of an ordered monomial with one generator, memoized per
// algebra. Out-of-order letters are resolved through the commutator table:
// m'h * g = (m' * g) h + m' [h, g].
struct DepthGuard {
    long& depth;
    explicit DepthGuard(long& depth) : depth(depth) {
        if (++depth > 20000)
            throw Error("rewrite recursion too deep (non-terminating presentation?)");
    }
    ~DepthGuard() { --depth; }
};

const Element& monomial_times_generator(const Monomial& m, int g, const Algebra& alg) {
    const auto key = std::make_pair(m, g);
    auto it = alg.product_memo.find(key);
    if (it != alg.product_memo.end()) return it->second;
    if (++alg.rewrite_steps > kRewriteBudget)
        throw Error("rewrite budget exceeded while normal ordering (non-terminating presentation?)");
    DepthGuard guard(alg.rewrite_depth);

    Element value = alg.zero();
    int last = -1;
    for (int i = static_cast<int>(alg.n_generators()) - 1; i >= 0; --i) {
        if (m.exponents[static_cast<size_t>(i)] > 0) {
            last = i;
            break;
        }
    }
    if (last <= g) {
        Monomial grown = m;
        grown.exponents[static_cast<size_t>(g)] += 1;
        value.add_term(grown, alg.laurent_one());
    } else {
        Monomial rest = m;
        rest.exponents[static_cast<size_t>(last)] -= 1;
        // (rest * g) * last + rest * [last, g]
        Element partial = monomial_times_generator(rest, g, alg);
        Element first = alg.zero();
        for (const auto& [mm, c] : partial.terms())
            first += monomial_times_generator(mm, last, alg).scaled(c);
        value += first;
        if (const Element* comm = alg.commutator(last, g)) {
            Element rest_elem = alg.zero();
            rest_elem.add_term(rest, alg.laurent_one());
            value += multiply(rest_elem, *comm, alg);
        }
    }
    return alg.product_memo.emplace(key, std::move(value)).first->second;
}

Element element_times_generator(const Element& e, int g, const Algebra& alg) {
    Element r = alg.zero();
    for (const auto& [m, c] : e.terms()) r += monomial_times_generator(m, g, alg).scaled(c);
    return r;
}

}  // namespace

Element multiply(const Element& a, const Element& b, const Algebra& alg) {
    a.check_same_home(b);
    if (a.algebra() != alg.id) throw Error("element does not belong to this algebra");
    Element result = alg.zero();
    for (const auto& [mb, cb] : b.terms()) {
        Element folded = a.scaled(cb);
        Word wb = Word::from_monomial(mb);
        for (int g : wb.letters) folded = element_times_generator(folded, g, alg);
        result += folded;
    }
    return result;
}

TensorElement multiply(const TensorElement& a, const TensorElement& b, const Algebra& alg) {
    if (a.algebra() != b.algebra()) throw Error("tensor elements from different algebras");
    TensorElement result(a.algebra(), a.n_generators(), a.deg_bound(), a.z_order());
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            Element le = alg.zero();
            le.add_term(ma.first, ca * cb);
            Word wl = Word::from_monomial(mb.first);
            for (int g : wl.letters) le = element_times_generator(le, g, alg);
            if (le.is_zero()) continue;
            Element re = alg.zero();
            re.add_term(ma.second, alg.laurent_one());
            Word wr = Word::from_monomial(mb.second);
            for (int g : wr.letters) re = element_times_generator(re, g, alg);
            for (const auto& [lm, lc] : le.terms())
                for (const auto& [rm, rc] : re.terms()) result.add_term(lm, rm, lc * rc);
        }
    }
    return result;
}

Element power(const Element& a, unsigned k, const Algebra& alg) {
    Element r = alg.one();
    for (unsigned i = 0; i < k; ++i) r = multiply(r, a, alg);
    return r;
}

TensorElement power(const TensorElement& a, unsigned k, const Algebra& alg) {
    TensorElement r(a.algebra(), a.n_generators(), a.deg_bound(), a.z_order());
    r.add_term(Monomial::unit(a.n_generators()), Monomial::unit(a.n_generators()),
               Laurent::one(a.z_order()));
    for (unsigned i = 0; i < k; ++i) r = multiply(r, a, alg);
    return r;
}

namespace {

Rational series_coefficient(SeriesKind kind, unsigned k) {
    switch (kind) {
        case SeriesKind::Exp:
            return Rational(1) / Rational::factorial(k);
        case SeriesKind::Log1p:
            return Rational(k % 2 == 1 ? 1 : -1) / Rational(static_cast<long>(k));
        case SeriesKind::Geom:
            return Rational(1);
    }
    throw Error("unreachable");
}

}  // namespace

Element analytic_series(SeriesKind kind, const Element& e, const Algebra& alg) {
    if (!e.is_truncation_nilpotent())
        throw Error("series argument is not truncation-nilpotent (constant term of valuation 0)");
    Element acc = kind == SeriesKind::Exp || kind == SeriesKind::Geom ? alg.one() : alg.zero();
    Element pw = alg.one();
    const unsigned cap = static_cast<unsigned>(alg.deg_bound + alg.z_order + alg.z_order) + 2;
    for (unsigned k = 1; k <= cap; ++k) {
        pw = multiply(pw, e, alg);
        if (pw.is_zero()) break;
        acc += pw.scaled(series_coefficient(kind, k));
    }
    if (!pw.is_zero())
        throw Error("series argument did not vanish under truncation");
    return acc;
}

TensorElement analytic_series(SeriesKind kind, const TensorElement& e, const Algebra& alg) {
    for (const auto& [mm, c] : e.terms())
        if (mm.first.degree() + mm.second.degree() == 0 && c.valuation() < 1)
            throw Error("series argument is not truncation-nilpotent (constant term of valuation 0)");
    TensorElement acc(e.algebra(), e.n_generators(), e.deg_bound(), e.z_order());
    if (kind == SeriesKind::Exp || kind == SeriesKind::Geom)
        acc.add_term(Monomial::unit(e.n_generators()), Monomial::unit(e.n_generators()),
                     Laurent::one(e.z_order()));
    TensorElement pw(e.algebra(), e.n_generators(), e.deg_bound(), e.z_order());
    pw.add_term(Monomial::unit(e.n_generators()), Monomial::unit(e.n_generators()),
                Laurent::one(e.z_order()));
    const unsigned cap = static_cast<unsigned>(2 * alg.deg_bound + 2 * alg.z_order) + 2;
    for (unsigned k = 1; k <= cap; ++k) {
        pw = multiply(pw, e, alg);
        if (pw.is_zero()) break;
        acc += pw.scaled(Laurent::constant(series_coefficient(kind, k), e.z_order()));
    }
    if (!pw.is_zero()) throw Error("series argument did not vanish under truncation");
    return acc;
}

Element truncate(const Element& e, int deg_bound) {
    return e.projected(deg_bound);
}

std::optional<std::vector<int>> termination_tokens(const Algebra& alg) {
    // Net letter-count change of each commutator branch.
    struct Branch {
        std::vector<long> delta;
    };
    std::vector<Branch> branches;
    const size_t n = alg.n_generators();
    for (const auto& [pair, comm] : alg.commutators) {
        for (const auto& [m, c] : comm.terms()) {
            (void)c;
            Branch b;
            b.delta.assign(n, 0);
            for (size_t g = 0; g < n; ++g) b.delta[g] = static_cast<long>(m.exponents[g]);
            b.delta[static_cast<size_t>(pair.first)] -= 1;
            b.delta[static_cast<size_t>(pair.second)] -= 1;
            branches.push_back(std::move(b));
        }
    }
    std::vector<int> tokens;
    std::vector<bool> used(n, false);
    std::vector<bool> live(branches.size(), true);
    size_t remaining = branches.size();
    while (remaining > 0) {
        int picked = -1;
        for (size_t g = 0; g < n && picked < 0; ++g) {
            if (used[g]) continue;
            bool nonincreasing = true, strict = false;
            for (size_t b = 0; b < branches.size(); ++b) {
                if (!live[b]) continue;
                if (branches[b].delta[g] > 0) nonincreasing = false;
                if (branches[b].delta[g] < 0) strict = true;
            }
            if (nonincreasing && strict) picked = static_cast<int>(g);
        }
        if (picked < 0) return std::nullopt;
        used[static_cast<size_t>(picked)] = true;
        tokens.push_back(picked);
        for (size_t b = 0; b < branches.size(); ++b) {
            if (live[b] && branches[b].delta[static_cast<size_t>(picked)] < 0) {
                live[b] = false;
                --remaining;
            }
        }
    }
    return tokens;
}

std::optional<std::array<int, 3>> overlap_defect(const Algebra& alg) {
    const int n = static_cast<int>(alg.n_generators());
    // Headroom so that degree-raising branches of the overlap words are not
    // cut before the two reduction orders can be compared.
    int max_comm_degree = 2;
    for (const auto& [pair, comm] : alg.commutators)
        for (const auto& [m, c] : comm.terms()) max_comm_degree = std::max(max_comm_degree, m.degree());
    Algebra wide = alg;
    wide.clear_memos();
    wide.deg_bound = 3 * max_comm_degree + 3;
    std::map<std::pair<int, int>, Element> widened;
    for (const auto& [pair, comm] : alg.commutators) widened.emplace(pair, comm.rebounded(wide.deg_bound));
    wide.commutators = std::move(widened);

    for (int k = 2; k < n; ++k) {
        for (int j = 1; j < k; ++j) {
            for (int i = 0; i < j; ++i) {
                const Word w({k, j, i});
                // Leftmost strategy reduces the (k, j) pair first.
                Element left_first = normal_order(w, wide);
                // Reduce the (j, i) pair first: g_k (g_i g_j + [g_j, g_i]).
                Element right_first = normal_order(Word({k, i, j}), wide);
                if (const Element* comm = wide.commutator(j, i)) {
                    for (const auto& [m, c] : comm->terms()) {
                        Word branch({k});
                        Word mid = Word::from_monomial(m);
                        branch.letters.insert(branch.letters.end(), mid.letters.begin(),
                                              mid.letters.end());
                        right_first += normal_order(branch, c, wide);
                    }
                }
                if (left_first != right_first) return std::array<int, 3>{k, j, i};
            }
        }
    }
    return std::nullopt;
}

}  // namespace hopfkit
