#include "hopfkit/laurent.hpp"

#include <sstream>

#include "hopfkit/errors.hpp"

namespace hopfkit {

void Laurent::insert(int exp, const Rational& c) {
    if (c.is_zero()) return;
    if (exp > z_order_) return;  // truncated
    if (exp < -z_order_) throw Error("parameter exponent " + std::to_string(exp) +
                                     " below the -" + std::to_string(z_order_) + " window");
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(exp, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Laurent::check_compatible(const Laurent& o) const {
    if (z_order_ != o.z_order_)
        throw Error("mismatched truncation orders " + std::to_string(z_order_) + " and " +
                    std::to_string(o.z_order_));
}

Laurent Laurent::constant(const Rational& c, int z_order) {
    Laurent s(z_order);
    s.insert(0, c);
    return s;
}

Laurent Laurent::term(const Rational& c, int exp, int z_order) {
    Laurent s(z_order);
    s.insert(exp, c);
    return s;
}

bool Laurent::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.is_one();
}

bool Laurent::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

int Laurent::valuation() const {
    if (terms_.empty()) throw Error("valuation of zero");
    return terms_.begin()->first;
}

Rational Laurent::coefficient(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
}

Laurent Laurent::operator-() const {
    Laurent r(z_order_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) insert(e, c);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) insert(e, -c);
    return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    a.check_compatible(b);
    Laurent r(a.z_order_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.insert(ea + eb, ca * cb);
    return r;
}

Laurent Laurent::scaled(const Rational& c) const {
    Laurent r(z_order_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

Laurent Laurent::inverse() const {
    if (terms_.empty()) throw Error("inverse of zero");
    const int v = valuation();
    const Rational lead = terms_.begin()->second;
    // a = lead * z^v * (1 + u) with val(u) >= 1; invert by geometric series.
    Laurent u(z_order_);
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        u.insert(it->first - v, it->second / lead);
    Laurent series = Laurent::one(z_order_);
    Laurent power = Laurent::one(z_order_);
    // u^k has valuation >= k, so the loop stops within the window.
    for (int k = 1; !power.is_zero() && k <= 2 * z_order_ + 2; ++k) {
        power = power * (-u);
        series += power;
    }
    Laurent r(z_order_);
    for (const auto& [e, c] : series.terms_) r.insert(e - v, c / lead);
    return r;
}

Laurent Laurent::pow(int e) const {
    if (e == 0) return Laurent::one(z_order_);
    Laurent base = e < 0 ? inverse() : *this;
    int n = e < 0 ? -e : e;
    Laurent r = Laurent::one(z_order_);
    for (int i = 0; i < n; ++i) r = r * base;
    return r;
}

Rational Laurent::substitute(const Rational& value) const {
    if (value.is_zero()) {
        if (!terms_.empty() && valuation() < 0)
            throw Error("pole at parameter value 0");
        return coefficient(0);
    }
    Rational acc(0);
    for (const auto& [e, c] : terms_) acc += c * value.pow(e);
    return acc;
}

Laurent Laurent::retruncated(int z_order) const {
    Laurent r(z_order);
    for (const auto& [e, c] : terms_) r.insert(e, c);
    return r;
}

bool operator<(const Laurent& a, const Laurent& b) {
    if (a.z_order_ != b.z_order_) return a.z_order_ < b.z_order_;
    auto ita = a.terms_.begin(), itb = b.terms_.begin();
    for (; ita != a.terms_.end() && itb != b.terms_.end(); ++ita, ++itb) {
        if (ita->first != itb->first) return ita->first < itb->first;
        if (ita->second != itb->second) return ita->second < itb->second;
    }
    return itb != b.terms_.end();
}

std::string Laurent::str(const std::string& param) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const Rational mag = c.abs();
        if (first) {
            if (c.negative()) out << "-";
            first = false;
        } else {
            out << (c.negative() ? " - " : " + ");
        }
        if (e == 0) {
            out << mag.str();
        } else {
            if (!mag.is_one()) out << mag.str() << "*";
            out << param;
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

}  // namespace hopfkit
