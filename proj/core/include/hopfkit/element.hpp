#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hopfkit/laurent.hpp"

namespace hopfkit {

// Exponent multi-index of an ordered (PBW) monomial.
struct Monomial {
    std::vector<uint32_t> exponents;

    explicit Monomial(size_t n_generators = 0) : exponents(n_generators, 0) {}
    explicit Monomial(std::vector<uint32_t> exps) : exponents(std::move(exps)) {}
    static Monomial unit(size_t n_generators) { return Monomial(n_generators); }
    static Monomial generator(size_t n_generators, size_t index);

    int degree() const;
    bool is_unit() const { return degree() == 0; }
    Monomial times(const Monomial& o) const;

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.exponents == b.exponents;
    }
    // Plain key order for hash-map-style uses; canonical display order is
    // MonomialOrder.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        return a.exponents < b.exponents;
    }
};

// Canonical monomial order: total degree ascending, then the earlier
// generator block first (exponent tuple lexicographically descending).
// On the basis (1, phi, am, ap, phi^2, phi*am, ...) this reads like words.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// A raw product of generators, not yet normal-ordered.
struct Word {
    std::vector<int> letters;

    Word() = default;
    explicit Word(std::vector<int> ls) : letters(std::move(ls)) {}
    static Word from_monomial(const Monomial& m);

    int degree() const { return static_cast<int>(letters.size()); }
    friend bool operator==(const Word& a, const Word& b) { return a.letters == b.letters; }
    friend bool operator<(const Word& a, const Word& b) { return a.letters < b.letters; }
};

// Finite sum of PBW monomials with Laurent coefficients, tagged by its home
// algebra and truncated at a generator-degree bound.
class Element {
  public:
    Element() = default;
    Element(int algebra, size_t n_generators, int deg_bound, int z_order)
        : algebra_(algebra), n_generators_(n_generators), deg_bound_(deg_bound), z_order_(z_order) {}

    int algebra() const { return algebra_; }
    size_t n_generators() const { return n_generators_; }
    int deg_bound() const { return deg_bound_; }
    int z_order() const { return z_order_; }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Laurent, MonomialOrder>& terms() const { return terms_; }
    Laurent coefficient(const Monomial& m) const;
    // Coefficient of the empty monomial.
    Laurent constant_part() const { return coefficient(Monomial(n_generators_)); }
    int degree() const;
    // True when every monomial has generator degree >= 1 or parameter
    // valuation >= 1, so powers die under the (D, Z) truncation.
    bool is_truncation_nilpotent() const;

    void add_term(const Monomial& m, const Laurent& c);
    Element operator-() const;
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    Element scaled(const Laurent& c) const;
    Element scaled(const Rational& c) const;

    // Drops monomials of generator degree > d.
    Element projected(int d) const;
    // Same content, new degree bound (monomials above the new bound dropped).
    Element rebounded(int deg_bound) const;
    // Re-truncates every coefficient into a new parameter window.
    Element z_rebounded(int z_order) const;

    friend bool operator==(const Element& a, const Element& b) {
        return a.algebra_ == b.algebra_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    // Canonical text, e.g. "(2 - 2*z)*Pm^1 + K^1*Pp^1". With expr_style the
    // "^1" is dropped so the output parses as DSL expression syntax.
    std::string str(const std::vector<std::string>& generator_names,
                    const std::string& param = "z", bool expr_style = false) const;

    void check_same_home(const Element& o) const;

  private:
    std::map<Monomial, Laurent, MonomialOrder> terms_;
    int algebra_ = -1;
    size_t n_generators_ = 0;
    int deg_bound_ = 0;
    int z_order_ = 0;
};

struct MonomialPairOrder {
    bool operator()(const std::pair<Monomial, Monomial>& a,
                    const std::pair<Monomial, Monomial>& b) const;
};

// Element of the tensor square, used for coproducts.
class TensorElement {
  public:
    TensorElement() = default;
    TensorElement(int algebra, size_t n_generators, int deg_bound, int z_order)
        : algebra_(algebra), n_generators_(n_generators), deg_bound_(deg_bound), z_order_(z_order) {}

    int algebra() const { return algebra_; }
    size_t n_generators() const { return n_generators_; }
    int deg_bound() const { return deg_bound_; }
    int z_order() const { return z_order_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<Monomial, Monomial>, Laurent, MonomialPairOrder>& terms() const {
        return terms_;
    }
    Laurent coefficient(const Monomial& left, const Monomial& right) const;

    void add_term(const Monomial& left, const Monomial& right, const Laurent& c);
    TensorElement operator-() const;
    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    TensorElement scaled(const Laurent& c) const;

    // Drops terms where either leg exceeds degree d.
    TensorElement projected(int d) const;
    TensorElement z_rebounded(int z_order) const;

    friend bool operator==(const TensorElement& a, const TensorElement& b) {
        return a.algebra_ == b.algebra_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const TensorElement& a, const TensorElement& b) { return !(a == b); }

    // e.g. "am^1 (x) phi^1 + 1 (x) am^1".
    std::string str(const std::vector<std::string>& generator_names,
                    const std::string& param = "z", bool expr_style = false) const;

  private:
    std::map<std::pair<Monomial, Monomial>, Laurent, MonomialPairOrder> terms_;
    int algebra_ = -1;
    size_t n_generators_ = 0;
    int deg_bound_ = 0;
    int z_order_ = 0;
};

// All PBW monomials of degree <= deg_bound in canonical order.
std::vector<Monomial> enumerate_basis(size_t n_generators, int deg_bound);

std::string monomial_str(const Monomial& m, const std::vector<std::string>& generator_names,
                         bool expr_style = false);

}  // namespace hopfkit
