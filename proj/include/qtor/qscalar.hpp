#pragma once

#include <string>
#include <vector>

#include "qtor/laurent.hpp"

namespace qtor {

// Invertible monomial s = ±v^k. Every scale parameter appearing in the
// vertex-operator calculus (a in {±1} times integer or half-integer q-powers)
// has this form, and integer exponent bookkeeping keeps powers exact.
struct Unit {
    bool neg = false;
    int vexp = 0;

    static Unit one() { return {false, 0}; }
    static Unit minus_one() { return {true, 0}; }
    static Unit q_half_power(int halves) { return {false, halves}; }  // q^{halves/2}
    static Unit q_power(int k) { return {false, 2 * k}; }

    Unit operator*(const Unit& o) const { return {neg != o.neg, vexp + o.vexp}; }
    Unit inv() const { return {neg, -vexp}; }
    Unit operator-() const { return {!neg, vexp}; }
    // s^n, exact
    Unit pow(long n) const { return {neg && (n % 2 != 0), static_cast<int>(vexp * n)}; }

    bool operator==(const Unit& o) const = default;
    bool is_one() const { return !neg && vexp == 0; }

    std::string to_string() const;
};

// Element of the fraction field of Laurent polynomials in v = q^{1/2}.
// Canonical form: gcd(num, den) is 1 up to units, den has lowest exponent 0
// and positive lowest-degree coefficient, and the contents of num and den
// are coprime. Equality is then structural.
class QScalar {
public:
    QScalar() : num_(), den_(1) {}
    QScalar(long c) : num_(c), den_(1) {}
    QScalar(const mpz_class& c) : num_(c), den_(1) {}
    QScalar(const Laurent& n) : num_(n), den_(1) {}
    QScalar(const Laurent& n, const Laurent& d);

    static QScalar rational(long num, long den);
    static QScalar monomial(long c, int vexp) { return QScalar(Laurent::monomial(c, vexp)); }
    static QScalar q_half_power(int halves) { return monomial(1, halves); }  // q^{halves/2}
    static QScalar q_power(int k) { return monomial(1, 2 * k); }
    static QScalar from_unit(const Unit& u) { return monomial(u.neg ? -1 : 1, u.vexp); }

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    QScalar operator-() const;
    QScalar operator+(const QScalar& o) const;
    QScalar operator-(const QScalar& o) const;
    QScalar operator*(const QScalar& o) const;
    QScalar operator/(const QScalar& o) const;  // throws std::domain_error on zero divisor

    QScalar& operator+=(const QScalar& o) { *this = *this + o; return *this; }
    QScalar& operator-=(const QScalar& o) { *this = *this - o; return *this; }
    QScalar& operator*=(const QScalar& o) { *this = *this * o; return *this; }
    QScalar& operator/=(const QScalar& o) { *this = *this / o; return *this; }

    bool operator==(const QScalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const QScalar& o) const { return !(*this == o); }

    QScalar pow(long n) const;

    // Bar involution v -> v^{-1}.
    QScalar bar() const;

    // True if of the form ±v^k; extraction throws otherwise.
    bool is_unit_monomial() const;
    Unit to_unit() const;

    std::string to_string() const;

private:
    Laurent num_, den_;
    void canonicalize();
};

// Quantum integer [m] = (q^m - q^{-m}) / (q - q^{-1}); a Laurent polynomial in q.
QScalar quantum_integer(long m);

// --- truncated power series with QScalar coefficients, in one formal variable ---

using QSeries = std::vector<QScalar>;  // coefficients [x^0 .. x^N]

QSeries series_mul(const QSeries& a, const QSeries& b, int order);
QSeries series_inv(const QSeries& a, int order);  // a[0] must be nonzero
QSeries series_pow(const QSeries& a, int e, int order);

// Taylor series of ((1 - s x) / (1 + s x))^e at x = 0 up to the given order.
QSeries series_signed_ratio(const Unit& s, int e, int order);

// Taylor coefficients g_{i0} .. g_{iN} of G_0 / G_1.
QSeries g_series(int i, int order);

}  // namespace qtor
