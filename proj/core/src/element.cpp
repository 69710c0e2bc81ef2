#include "hopfkit/element.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "hopfkit/errors.hpp"

namespace hopfkit {

Monomial Monomial::generator(size_t n_generators, size_t index) {
    Monomial m(n_generators);
    m.exponents.at(index) = 1;
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (uint32_t e : exponents) d += static_cast<int>(e);
    return d;
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial m = *this;
    for (size_t i = 0; i < exponents.size(); ++i) m.exponents[i] += o.exponents[i];
    return m;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exponents > b.exponents;
}

Word Word::from_monomial(const Monomial& m) {
    Word w;
    for (size_t g = 0; g < m.exponents.size(); ++g)
        for (uint32_t k = 0; k < m.exponents[g]; ++k) w.letters.push_back(static_cast<int>(g));
    return w;
}

Laurent Element::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Laurent::zero(z_order_) : it->second;
}

int Element::degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool Element::is_truncation_nilpotent() const {
    for (const auto& [m, c] : terms_)
        if (m.degree() == 0 && (c.is_zero() || c.valuation() < 1)) return false;
    return true;
}

void Element::add_term(const Monomial& m, const Laurent& c) {
    if (c.is_zero() || m.degree() > deg_bound_) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Element::check_same_home(const Element& o) const {
    if (algebra_ != o.algebra_) throw Error("elements from different algebras");
    if (deg_bound_ != o.deg_bound_ || z_order_ != o.z_order_)
        throw Error("elements with mismatched truncation settings");
}

Element Element::operator-() const {
    Element r(algebra_, n_generators_, deg_bound_, z_order_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Element& Element::operator+=(const Element& o) {
    check_same_home(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    check_same_home(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Element Element::scaled(const Laurent& c) const {
    Element r(algebra_, n_generators_, deg_bound_, z_order_);
    for (const auto& [m, k] : terms_) r.add_term(m, k * c);
    return r;
}

Element Element::scaled(const Rational& c) const {
    Element r(algebra_, n_generators_, deg_bound_, z_order_);
    for (const auto& [m, k] : terms_) r.add_term(m, k.scaled(c));
    return r;
}

Element Element::projected(int d) const {
    Element r(algebra_, n_generators_, deg_bound_, z_order_);
    for (const auto& [m, c] : terms_)
        if (m.degree() <= d) r.terms_.emplace(m, c);
    return r;
}

Element Element::rebounded(int deg_bound) const {
    Element r(algebra_, n_generators_, deg_bound, z_order_);
    for (const auto& [m, c] : terms_)
        if (m.degree() <= deg_bound) r.terms_.emplace(m, c);
    return r;
}

Element Element::z_rebounded(int z_order) const {
    Element r(algebra_, n_generators_, deg_bound_, z_order);
    for (const auto& [m, c] : terms_) r.add_term(m, c.retruncated(z_order));
    return r;
}

std::string monomial_str(const Monomial& m, const std::vector<std::string>& generator_names,
                         bool expr_style) {
    if (m.is_unit()) return "1";
    std::ostringstream out;
    bool first = true;
    for (size_t g = 0; g < m.exponents.size(); ++g) {
        if (m.exponents[g] == 0) continue;
        if (!first) out << "*";
        first = false;
        out << generator_names.at(g);
        if (!expr_style || m.exponents[g] != 1) out << "^" << m.exponents[g];
    }
    return out.str();
}

namespace {

// Renders one term as (negative?, body). Single-term scalars pull the sign
// out; multi-term scalars are parenthesized next to a monomial.
std::pair<bool, std::string> term_str(const Monomial& m, const Laurent& c,
                                      const std::vector<std::string>& generator_names,
                                      const std::string& param, bool expr_style) {
    const std::string mono = monomial_str(m, generator_names, expr_style);
    if (m.is_unit()) {
        std::string s = c.str(param);
        if (!s.empty() && s[0] == '-') return {true, s.substr(1)};
        return {false, s};
    }
    if (c.is_monomial()) {
        const auto& [exp, coeff] = *c.terms().begin();
        const Laurent mag = c.scaled(coeff.negative() ? Rational(-1) : Rational(1));
        std::string body = mag.is_one() ? mono : mag.str(param) + "*" + mono;
        return {coeff.negative(), body};
    }
    return {false, "(" + c.str(param) + ")*" + mono};
}

}  // namespace

std::string Element::str(const std::vector<std::string>& generator_names,
                         const std::string& param, bool expr_style) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        auto [neg, body] = term_str(m, c, generator_names, param, expr_style);
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        out << body;
    }
    return out.str();
}

bool MonomialPairOrder::operator()(const std::pair<Monomial, Monomial>& a,
                                   const std::pair<Monomial, Monomial>& b) const {
    MonomialOrder less;
    if (less(a.first, b.first)) return true;
    if (less(b.first, a.first)) return false;
    return less(a.second, b.second);
}

Laurent TensorElement::coefficient(const Monomial& left, const Monomial& right) const {
    auto it = terms_.find(std::make_pair(left, right));
    return it == terms_.end() ? Laurent::zero(z_order_) : it->second;
}

void TensorElement::add_term(const Monomial& left, const Monomial& right, const Laurent& c) {
    if (c.is_zero() || left.degree() > deg_bound_ || right.degree() > deg_bound_) return;
    auto key = std::make_pair(left, right);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorElement TensorElement::operator-() const {
    TensorElement r(algebra_, n_generators_, deg_bound_, z_order_);
    for (const auto& [mm, c] : terms_) r.terms_.emplace(mm, -c);
    return r;
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    if (algebra_ != o.algebra_) throw Error("tensor elements from different algebras");
    for (const auto& [mm, c] : o.terms_) add_term(mm.first, mm.second, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
    if (algebra_ != o.algebra_) throw Error("tensor elements from different algebras");
    for (const auto& [mm, c] : o.terms_) add_term(mm.first, mm.second, -c);
    return *this;
}

TensorElement TensorElement::scaled(const Laurent& c) const {
    TensorElement r(algebra_, n_generators_, deg_bound_, z_order_);
    for (const auto& [mm, k] : terms_) r.add_term(mm.first, mm.second, k * c);
    return r;
}

TensorElement TensorElement::projected(int d) const {
    TensorElement r(algebra_, n_generators_, deg_bound_, z_order_);
    for (const auto& [mm, c] : terms_)
        if (mm.first.degree() <= d && mm.second.degree() <= d) r.terms_.emplace(mm, c);
    return r;
}

TensorElement TensorElement::z_rebounded(int z_order) const {
    TensorElement r(algebra_, n_generators_, deg_bound_, z_order);
    for (const auto& [mm, c] : terms_) r.add_term(mm.first, mm.second, c.retruncated(z_order));
    return r;
}

std::string TensorElement::str(const std::vector<std::string>& generator_names,
                               const std::string& param, bool expr_style) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [mm, c] : terms_) {
        auto [neg, body] = term_str(mm.first, c, generator_names, param, expr_style);
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        out << body << " (x) " << monomial_str(mm.second, generator_names, expr_style);
    }
    return out.str();
}

std::vector<Monomial> enumerate_basis(size_t n_generators, int deg_bound) {
    std::vector<Monomial> basis;
    Monomial current(n_generators);
    // Depth-first over exponent tuples, then canonical sort.
    std::vector<uint32_t> stack(n_generators, 0);
    std::function<void(size_t, int)> rec = [&](size_t g, int remaining) {
        if (g == n_generators) {
            Monomial m(n_generators);
            m.exponents = stack;
            basis.push_back(m);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            stack[g] = static_cast<uint32_t>(e);
            rec(g + 1, remaining - e);
        }
        stack[g] = 0;
    };
    rec(0, deg_bound);
    std::sort(basis.begin(), basis.end(), [](const Monomial& a, const Monomial& b) {
        return MonomialOrder()(a, b);
    });
    return basis;
}

}  // namespace hopfkit
