#pragma once

#include <cstdint>
#include <vector>

#include "hopfkit/errors.hpp"
#include "hopfkit/induce.hpp"
#include "hopfkit/presets.hpp"

namespace testutil {

using namespace hopfkit;

// SplitMix64; deterministic across platforms.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
    }

    Rational rational(long max_abs = 6) {
        long num = range(-max_abs, max_abs);
        long den = range(1, 4);
        return Rational(num, den);
    }
    Rational nonzero_rational(long max_abs = 6) {
        Rational r = rational(max_abs);
        return r.is_zero() ? Rational(1, 2) : r;
    }

    Laurent laurent(int z_order, int min_exp, int max_exp, int max_terms = 3) {
        Laurent s(z_order);
        int n = static_cast<int>(range(0, max_terms));
        for (int i = 0; i < n; ++i)
            s += Laurent::term(rational(), static_cast<int>(range(min_exp, max_exp)), z_order);
        return s;
    }
    Laurent nonzero_laurent(int z_order, int min_exp, int max_exp) {
        Laurent s = laurent(z_order, min_exp, max_exp);
        if (s.is_zero()) s = Laurent::term(nonzero_rational(), 0, z_order);
        return s;
    }

    Monomial monomial(size_t n_generators, int max_degree) {
        Monomial m(n_generators);
        int degree = static_cast<int>(range(0, max_degree));
        for (int i = 0; i < degree; ++i)
            m.exponents[static_cast<size_t>(range(0, static_cast<long>(n_generators) - 1))] += 1;
        return m;
    }

    Element element(const Algebra& alg, int max_degree, int max_terms = 3,
                    bool nonneg_valuation = true) {
        Element e = alg.zero();
        int n = static_cast<int>(range(1, max_terms));
        for (int i = 0; i < n; ++i) {
            Laurent c = nonneg_valuation ? laurent(alg.z_order, 0, 2) : laurent(alg.z_order, -1, 2);
            if (c.is_zero()) c = Laurent::one(alg.z_order);
            e.add_term(monomial(alg.n_generators(), max_degree), c);
        }
        return e;
    }

  private:
    uint64_t state_;
};

inline uint64_t default_seed() {
    if (const char* env = std::getenv("HOPFKIT_TEST_SEED")) return std::strtoull(env, nullptr, 10);
    return 20260808ULL;
}

// Fraction-free (Bareiss) rank over the integers after clearing
// denominators; independent of the engine's echelon path. Entries must be
// parameter-free.
inline size_t bareiss_rank(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) return 0;
    const size_t n_cols = rows[0].size();
    std::vector<std::vector<mpz_class>> m;
    for (const auto& row : rows) {
        mpz_class lcm = 1;
        for (const auto& r : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), r.denominator().get_mpz_t());
        std::vector<mpz_class> irow;
        for (const auto& r : row) irow.push_back(r.numerator() * (lcm / r.denominator()));
        m.push_back(std::move(irow));
    }
    size_t rank = 0;
    mpz_class prev = 1;
    for (size_t col = 0; col < n_cols && rank < m.size(); ++col) {
        size_t pivot = rank;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[rank], m[pivot]);
        for (size_t r = 0; r < m.size(); ++r) {
            if (r == rank) continue;
            for (size_t c = 0; c < n_cols; ++c) {
                if (c == col) continue;
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

// The equivariance system rebuilt directly from operator matrices, for the
// brute-force rank oracle. Returns the rows of (M_s - chi(s) I) restricted to
// components of degree <= deg_bound - 1.
inline std::vector<std::vector<Rational>> equivariance_rows(const Workspace& ws,
                                                            const Character& chi, ActionKind side,
                                                            int deg_bound) {
    const Triplet& t = ws.base();
    auto basis = enumerate_basis(t.second.n_generators(), deg_bound);
    std::vector<std::vector<Rational>> rows;
    for (size_t s = 0; s < chi.generators.size(); ++s) {
        OperatorMatrix m =
            operator_matrix(ws, side, t.first.generator(chi.generators[s]), deg_bound);
        for (size_t row = 0; row < basis.size(); ++row) {
            if (basis[row].degree() > deg_bound - 1) continue;
            std::vector<Rational> eq;
            for (size_t col = 0; col < basis.size(); ++col) {
                Laurent e = m.entries[row][col];
                if (col == row) e -= chi.values[s];
                if (!e.is_constant())
                    throw Error("rank oracle needs a parameter-free system");
                eq.push_back(e.coefficient(0));
            }
            rows.push_back(std::move(eq));
        }
    }
    return rows;
}

inline Workspace nullplane(int deg, int z) {
    return Workspace::load_text(presets::nullplane(), deg, z);
}
inline Workspace kgalilei(int deg, int z) {
    return Workspace::load_text(presets::kgalilei(), deg, z);
}

}  // namespace testutil
