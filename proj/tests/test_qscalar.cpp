#include <doctest.h>

#include "qtor/qscalar.hpp"

using namespace qtor;

namespace {

QScalar qp(int k) { return QScalar::q_power(k); }

// independent oracle: expand (1 - s x)^{±1} factors as raw geometric series
// and multiply truncated, without series_signed_ratio / series_inv
QSeries geometric_product_oracle(const std::vector<std::pair<Unit, int>>& factors,
                                 int order) {
    QSeries acc(order + 1, QScalar(0));
    acc[0] = QScalar(1);
    auto mul_poly = [&](const QSeries& f) {
        QSeries r(order + 1, QScalar(0));
        for (int i = 0; i <= order; ++i)
            for (int j = 0; i + j <= order && j < static_cast<int>(f.size()); ++j)
                r[i + j] += acc[i] * f[j];
        acc = r;
    };
    for (const auto& [s, e] : factors) {
        for (int rep = 0; rep < std::abs(e); ++rep) {
            if (e > 0) {
                // (1 - s x)
                QSeries f(2, QScalar(0));
                f[0] = QScalar(1);
                f[1] = -QScalar::from_unit(s);
                mul_poly(f);
            } else {
                // 1/(1 - s x) = sum s^k x^k
                QSeries f(order + 1, QScalar(0));
                for (int k = 0; k <= order; ++k)
                    f[k] = QScalar::from_unit(s.pow(k));
                mul_poly(f);
            }
        }
    }
    return acc;
}

}  // namespace

TEST_CASE("laurent arithmetic basics") {
    Laurent a = Laurent::monomial(1, 2) + Laurent::monomial(3, -1);
    Laurent b = Laurent::monomial(1, 2);
    CHECK((a - a).is_zero());
    CHECK(a * Laurent(1) == a);
    CHECK((a * b).coeff(4) == 1);
    CHECK((a * b).coeff(1) == 3);
    CHECK(a.substituted_inverse().coeff(-2) == 1);
    CHECK(a.substituted_inverse().coeff(1) == 3);
}

TEST_CASE("laurent gcd and exact division") {
    // (v^2 - v^-2) and (v - v^-1): gcd is v - v^{-1} up to units
    Laurent a = Laurent::monomial(1, 2) - Laurent::monomial(1, -2);
    Laurent b = Laurent::monomial(1, 1) - Laurent::monomial(1, -1);
    Laurent g = Laurent::gcd(a, b);
    CHECK_FALSE(g.is_zero());
    CHECK_NOTHROW(a.divexact(g));
    CHECK_NOTHROW(b.divexact(g));
    CHECK(a.divexact(b) * b == a);
    CHECK(Laurent::gcd(Laurent(4), Laurent(6)) == Laurent(2));
}

TEST_CASE("qscalar field ops and canonical form") {
    QScalar q = qp(1), qi = qp(-1);

    // (q - q^-1)(q + q^-1) = q^2 - q^-2
    CHECK((q - qi) * (q + qi) == qp(2) - qp(-2));

    // x / x = 1
    QScalar x = (qp(3) - QScalar(7)) / (qp(-2) + QScalar(5));
    CHECK(x / x == QScalar(1));

    // (q^2 - q^-2)/(q - q^-1) = q + q^-1, plus the cross-multiplication oracle
    QScalar num = qp(2) - qp(-2), den = q - qi;
    QScalar ratio = num / den;
    CHECK(ratio == q + qi);
    CHECK(ratio * den == num);

    CHECK_THROWS_AS(x / QScalar(0), std::domain_error);

    // canonical equality across different construction routes
    QScalar r1 = (qp(2) - QScalar(2) + qp(-2)) / (q - qi);
    QScalar r2 = q - qi;  // (q - q^-1)^2 / (q - q^-1)
    CHECK(r1 == r2);

    // 2/4 reduces
    CHECK(QScalar::rational(2, 4) == QScalar::rational(1, 2));
    CHECK(QScalar::rational(1, 2).to_string() == "1/2");
}

TEST_CASE("qscalar string form") {
    CHECK((qp(2) - qp(-2)).to_string() == "q^2-q^-2");
    CHECK(((qp(2) - qp(-2)) / QScalar(2)).to_string() == "(q^2-q^-2)/2");
    CHECK(QScalar::q_half_power(1).to_string() == "q^1/2");
    CHECK(QScalar::q_half_power(-3).to_string() == "q^-3/2");
    CHECK(QScalar(0).to_string() == "0");
    CHECK(QScalar(-5).to_string() == "-5");
}

TEST_CASE("quantum integers") {
    CHECK(quantum_integer(0).is_zero());
    CHECK(quantum_integer(1) == QScalar(1));
    CHECK(quantum_integer(2) == qp(1) + qp(-1));

    // polynomial-division oracle for [2]
    QScalar direct = (qp(2) - qp(-2)) / (qp(1) - qp(-1));
    CHECK(quantum_integer(2) == direct);

    CHECK(quantum_integer(-3) == -quantum_integer(3));
    for (int m = -50; m <= 50; ++m)
        CHECK(quantum_integer(-m) == -quantum_integer(m));

    // denominators divide out exactly: [m] is a Laurent polynomial
    for (int m = 1; m <= 12; ++m)
        CHECK(quantum_integer(m).den().is_one());

    // bar invariance for |m| <= 20
    for (int m = -20; m <= 20; ++m)
        CHECK(quantum_integer(m).bar() == quantum_integer(m));
}

TEST_CASE("g series") {
    QSeries g0 = g_series(0, 6);
    QSeries g1 = g_series(1, 6);
    CHECK(g0[0] == QScalar(1));
    CHECK(g1[0] == QScalar(1));
    CHECK(g0[1] == QScalar(-2) * (qp(2) - qp(-2)));

    // series-division oracle on the defining factor products
    QSeries oracle0 = geometric_product_oracle(
        {{Unit::q_power(2), 1}, {-Unit::q_power(2), -1},
         {-Unit::q_power(-2), 1}, {Unit::q_power(-2), -1}}, 6);
    CHECK(g0 == oracle0);
    QSeries oracle1 = geometric_product_oracle(
        {{Unit::q_power(2), 1}, {-Unit::q_power(2), -1},
         {Unit::q_power(-2), 1}, {-Unit::q_power(-2), -1},
         {Unit::minus_one(), 2}, {Unit::one(), -2}}, 6);
    CHECK(g1 == oracle1);

    // truncation consistency: order N+5 reproduces the first N+1 coefficients
    for (int i = 0; i <= 1; ++i) {
        QSeries a = g_series(i, 6), b = g_series(i, 11);
        for (int k = 0; k <= 6; ++k) CHECK(a[k] == b[k]);
    }
}

TEST_CASE("unit monomials") {
    Unit u{true, 3};
    CHECK(u.pow(2) == Unit{false, 6});
    CHECK(u.pow(-3) == Unit{true, -9});
    CHECK((u * u.inv()).is_one());
    CHECK(QScalar::from_unit(u).to_unit() == u);
    CHECK_FALSE((qp(1) + qp(-1)).is_unit_monomial());
    CHECK_THROWS_AS((qp(1) + QScalar(1)).to_unit(), std::domain_error);
    CHECK((QScalar(2) * qp(1)).is_unit_monomial() == false);
}
