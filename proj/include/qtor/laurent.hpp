#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace qtor {

// Laurent polynomial in v with arbitrary-precision integer coefficients.
// Terms are kept sorted by ascending exponent with no zero coefficients;
// the empty term list is the zero element.
class Laurent {
public:
    Laurent() = default;
    Laurent(long c) { if (c != 0) terms_.emplace_back(0, mpz_class(c)); }
    Laurent(const mpz_class& c) { if (c != 0) terms_.emplace_back(0, c); }

    static Laurent monomial(const mpz_class& c, int exp) {
        Laurent r;
        if (c != 0) r.terms_.emplace_back(exp, c);
        return r;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
    }
    bool is_monomial() const { return terms_.size() == 1; }

    int low_exp() const;   // throws on zero
    int high_exp() const;  // throws on zero
    std::size_t term_count() const { return terms_.size(); }

    mpz_class coeff(int exp) const;
    const std::vector<std::pair<int, mpz_class>>& terms() const { return terms_; }

    Laurent operator-() const;
    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;

    Laurent& operator+=(const Laurent& o) { *this = *this + o; return *this; }
    Laurent& operator-=(const Laurent& o) { *this = *this - o; return *this; }
    Laurent& operator*=(const Laurent& o) { *this = *this * o; return *this; }

    bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    // Multiply by c * v^exp.
    Laurent scaled(const mpz_class& c, int exp) const;
    Laurent shifted(int exp) const { return scaled(1, exp); }

    // v -> v^{-1}
    Laurent substituted_inverse() const;

    // gcd of all integer coefficients, positive; 0 for the zero polynomial
    mpz_class content() const;

    // Exact division; throws std::domain_error if not exact.
    Laurent divexact(const Laurent& d) const;

    // gcd up to units c*v^k: result has low_exp 0, positive leading coefficient,
    // and content equal to gcd of the contents.
    static Laurent gcd(const Laurent& a, const Laurent& b);

    // Rendered in powers of q = v^2; odd v-exponents print as q^{k/2}.
    std::string to_q_string() const;

private:
    std::vector<std::pair<int, mpz_class>> terms_;

    void prune();
    friend class QScalar;
};

}  // namespace qtor
