#pragma once

#include <map>
#include <string>

#include "hopfkit/rational.hpp"

namespace hopfkit {

// Truncated Laurent series in one formal deformation parameter, with exact
// rational coefficients. Exponents live in the window [-Z, Z]: anything above
// Z is dropped on construction, anything below -Z is an error (a deep pole is
// a bug, not a value).
class Laurent {
  public:
    Laurent() : z_order_(0) {}
    explicit Laurent(int z_order) : z_order_(z_order) {}

    static Laurent zero(int z_order) { return Laurent(z_order); }
    static Laurent one(int z_order) { return constant(Rational(1), z_order); }
    static Laurent constant(const Rational& c, int z_order);
    // c * z^exp
    static Laurent term(const Rational& c, int exp, int z_order);

    int z_order() const { return z_order_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    // Nonzero iff exactly one stored term.
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_constant() const;
    // Least exponent; only defined on nonzero scalars.
    int valuation() const;
    const std::map<int, Rational>& terms() const { return terms_; }
    Rational coefficient(int exp) const;

    Laurent operator-() const;
    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);

    Laurent scaled(const Rational& c) const;
    // Multiplicative inverse up to truncation; input must be nonzero.
    Laurent inverse() const;
    Laurent pow(int e) const;

    // Evaluates the finite term list at the given parameter value. At value 0
    // the scalar must be pole-free and the exponent-0 coefficient is returned.
    Rational substitute(const Rational& value) const;

    // Same content in a different window; errors on exponents below the new
    // lower edge, drops those above the upper one.
    Laurent retruncated(int z_order) const;

    friend bool operator==(const Laurent& a, const Laurent& b) {
        return a.z_order_ == b.z_order_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }
    // Total order used for deterministic pivot selection and renders.
    friend bool operator<(const Laurent& a, const Laurent& b);

    // Canonical text: terms in increasing exponent, "0" when empty, e.g.
    // "z^-1 + 2", "-4/3*z^2", "1 - z".
    std::string str(const std::string& param = "z") const;

  private:
    void insert(int exp, const Rational& c);
    void check_compatible(const Laurent& o) const;

    std::map<int, Rational> terms_;
    int z_order_;
};

}  // namespace hopfkit
