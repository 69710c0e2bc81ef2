#include "hopfkit/rational.hpp"

#include "hopfkit/errors.hpp"

namespace hopfkit {

Rational::Rational(long num, long den) : value_(num, den) {
    if (den == 0) throw Error("rational with zero denominator");
    value_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("division by zero");
    value_ /= o.value_;
    return *this;
}

Rational Rational::parse(const std::string& text) {
    mpq_class v;
    if (v.set_str(text, 10) != 0) throw Error("invalid rational '" + text + "'");
    if (v.get_den() == 0) throw Error("rational with zero denominator: '" + text + "'");
    v.canonicalize();
    return Rational(v);
}

Rational Rational::factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(mpq_class(f));
}

Rational Rational::binomial(unsigned n, unsigned k) {
    if (k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(mpq_class(b));
}

Rational Rational::pow(int e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw Error("zero raised to a negative power");
        return Rational(0);
    }
    mpq_class base = value_;
    unsigned n = static_cast<unsigned>(e < 0 ? -e : e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), n);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), n);
    mpq_class r(num, den);
    if (e < 0) r = 1 / r;
    r.canonicalize();
    return Rational(r);
}

}  // namespace hopfkit
