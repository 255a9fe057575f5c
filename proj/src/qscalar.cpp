#include "qtor/qscalar.hpp"

#include <sstream>
#include <stdexcept>

namespace qtor {

std::string Unit::to_string() const {
    return QScalar::from_unit(*this).to_string();
}

QScalar::QScalar(const Laurent& n, const Laurent& d) : num_(n), den_(d) {
    if (den_.is_zero()) throw std::domain_error("QScalar: zero denominator");
    canonicalize();
}

QScalar QScalar::rational(long num, long den) {
    return QScalar(Laurent(num), Laurent(den));
}

void QScalar::canonicalize() {
    if (num_.is_zero()) {
        den_ = Laurent(1);
        return;
    }
    Laurent g = Laurent::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_.divexact(g);
        den_ = den_.divexact(g);
    }
    int sh = den_.low_exp();
    if (sh != 0) {
        num_ = num_.shifted(-sh);
        den_ = den_.shifted(-sh);
    }
    if (den_.terms().front().second < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

QScalar QScalar::operator-() const {
    QScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

QScalar QScalar::operator+(const QScalar& o) const {
    return QScalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QScalar QScalar::operator-(const QScalar& o) const {
    return QScalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

QScalar QScalar::operator*(const QScalar& o) const {
    return QScalar(num_ * o.num_, den_ * o.den_);
}

QScalar QScalar::operator/(const QScalar& o) const {
    if (o.is_zero()) throw std::domain_error("QScalar: division by zero");
    return QScalar(num_ * o.den_, den_ * o.num_);
}

QScalar QScalar::pow(long n) const {
    if (n < 0) {
        if (is_zero()) throw std::domain_error("QScalar::pow: negative power of zero");
        return QScalar(den_, num_).pow(-n);
    }
    QScalar result(1);
    QScalar base = *this;
    while (n > 0) {
        if (n & 1) result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

QScalar QScalar::bar() const {
    return QScalar(num_.substituted_inverse(), den_.substituted_inverse());
}

bool QScalar::is_unit_monomial() const {
    return den_.is_one() && num_.is_monomial() && abs(num_.terms().front().second) == 1;
}

Unit QScalar::to_unit() const {
    if (!is_unit_monomial())
        throw std::domain_error("QScalar::to_unit: not of the form ±v^k: " + to_string());
    const auto& [e, c] = num_.terms().front();
    return Unit{c < 0, e};
}

std::string QScalar::to_string() const {
    if (is_zero()) return "0";
    std::string n = num_.to_q_string();
    if (den_.is_one()) return n;
    std::string d = den_.to_q_string();
    std::string out;
    if (num_.term_count() > 1) out = "(" + n + ")";
    else out = n;
    out += "/";
    if (den_.term_count() > 1) out += "(" + d + ")";
    else out += d;
    return out;
}

QScalar quantum_integer(long m) {
    if (m == 0) return QScalar(0);
    Laurent numer = Laurent::monomial(1, static_cast<int>(2 * m)) -
                    Laurent::monomial(1, static_cast<int>(-2 * m));
    Laurent denom = Laurent::monomial(1, 2) - Laurent::monomial(1, -2);
    return QScalar(numer, denom);
}

QSeries series_mul(const QSeries& a, const QSeries& b, int order) {
    QSeries r(order + 1, QScalar(0));
    for (int i = 0; i <= order && i < static_cast<int>(a.size()); ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= order && j < static_cast<int>(b.size()); ++j)
            r[i + j] += a[i] * b[j];
    }
    return r;
}

QSeries series_inv(const QSeries& a, int order) {
    if (a.empty() || a[0].is_zero())
        throw std::domain_error("series_inv: constant term is zero");
    QSeries r(order + 1, QScalar(0));
    QScalar c0inv = QScalar(1) / a[0];
    r[0] = c0inv;
    for (int k = 1; k <= order; ++k) {
        QScalar s(0);
        for (int j = 1; j <= k && j < static_cast<int>(a.size()); ++j)
            s += a[j] * r[k - j];
        r[k] = -c0inv * s;
    }
    return r;
}

QSeries series_pow(const QSeries& a, int e, int order) {
    if (e < 0) return series_pow(series_inv(a, order), -e, order);
    QSeries r(order + 1, QScalar(0));
    r[0] = QScalar(1);
    QSeries base = a;
    while (e > 0) {
        if (e & 1) r = series_mul(r, base, order);
        base = series_mul(base, base, order);
        e >>= 1;
    }
    return r;
}

QSeries series_signed_ratio(const Unit& s, int e, int order) {
    // (1 - s x)/(1 + s x) = 1 + 2 * sum_{k>=1} (-1)^k s^k x^k
    QSeries base(order + 1, QScalar(0));
    base[0] = QScalar(1);
    for (int k = 1; k <= order; ++k) {
        Unit sk = s.pow(k);
        long sign = ((k % 2 != 0) != sk.neg) ? -2 : 2;
        base[k] = QScalar::monomial(sign, sk.vexp);
    }
    if (e == 1) return base;
    return series_pow(base, e, order);
}

QSeries g_series(int i, int order) {
    if (order < 0) throw std::domain_error("g_series: negative order");
    if (i != 0 && i != 1) throw std::domain_error("g_series: i must be 0 or 1");
    // G_0(x) = (1-q^2 x)/(1+q^2 x) * (1+q^{-2}x)/(1-q^{-2}x)
    // G_1(x) = (1-q^2 x)/(1+q^2 x) * (1-q^{-2}x)/(1+q^{-2}x) * ((1+x)/(1-x))^2
    QSeries r = series_signed_ratio(Unit::q_power(2), 1, order);
    if (i == 0) {
        r = series_mul(r, series_signed_ratio(-Unit::q_power(-2), 1, order), order);
    } else {
        r = series_mul(r, series_signed_ratio(Unit::q_power(-2), 1, order), order);
        r = series_mul(r, series_signed_ratio(Unit::minus_one(), 2, order), order);
    }
    return r;
}

}  // namespace qtor
