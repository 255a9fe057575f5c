#include <doctest.h>

#include "qtor/lattice.hpp"

using namespace qtor;

namespace {

// brute-force cocycle oracle: extend eps(a0, a0) = -1 bimultiplicatively
int cocycle_oracle(int m, int n) {
    int sign = 1;
    int steps_m = std::abs(m), steps_n = std::abs(n);
    for (int a = 0; a < steps_m; ++a)
        for (int b = 0; b < steps_n; ++b) sign = -sign;
    return sign;  // inverses contribute the same sign on this lattice
}

}  // namespace

TEST_CASE("index folding") {
    CHECK(fold_color(1) == 1);
    CHECK(fold_color(0) == 2);
    CHECK(fold_color(2) == 2);
    CHECK(fold_color(3) == 1);
    CHECK(fold_color(-1) == 1);
    CHECK(fold_color(-2) == 2);
    CHECK(Weight::eps(0) == Weight::eps(2));
    CHECK(Weight::eps(1) == Weight::eps(-1));
}

TEST_CASE("bilinear form") {
    Weight e1 = Weight::eps(1), e2 = Weight::eps(2);
    CHECK(bilinear(e1, e2) == 0);
    CHECK(bilinear(e1, e1) == 1);
    Weight a0 = e1 - e2;
    CHECK(bilinear(a0, a0) == 2);
    CHECK(bilinear(Weight::eps(0), Weight::eps(2)) == 1);

    // symmetry + folded-index rule over i, j in 0..5
    for (int i = 0; i <= 5; ++i)
        for (int j = 0; j <= 5; ++j) {
            CHECK(bilinear(Weight::eps(i), Weight::eps(j)) ==
                  bilinear(Weight::eps(j), Weight::eps(i)));
            CHECK(bilinear(Weight::eps(i), Weight::eps(j)) ==
                  (fold_color(i) == fold_color(j) ? 1 : 0));
        }
}

TEST_CASE("cocycle") {
    CHECK(cocycle(RootElt{1}, RootElt{1}) == -1);
    CHECK(cocycle(RootElt{0}, RootElt{7}) == 1);
    CHECK(cocycle(RootElt{2}, RootElt{1}) == 1);

    for (int m = -10; m <= 10; ++m) {
        for (int n = -10; n <= 10; ++n) {
            RootElt a{m}, b{n};
            CHECK(cocycle(a, b) == cocycle_oracle(m, n));
            // eps(a,b) eps(b,a) = (-1)^{(a,b)}
            int pairing = bilinear(a.weight(), b.weight());
            CHECK(cocycle(a, b) * cocycle(b, a) == (pairing % 2 == 0 ? 1 : -1));
            // bimultiplicativity
            for (int k = -3; k <= 3; ++k) {
                RootElt c{k};
                CHECK(cocycle(a + b, c) == cocycle(a, c) * cocycle(b, c));
                CHECK(cocycle(c, a + b) == cocycle(c, a) * cocycle(c, b));
            }
        }
    }
}

TEST_CASE("zero mode and valuation") {
    Weight e1 = Weight::eps(1);
    RootElt a0{1};
    CHECK(zero_mode(e1, a0) == 1);
    CHECK(zero_mode(a0.weight(), RootElt{0}) == 0);
    CHECK(zero_mode(a0.weight(), a0) == 2);

    QScalar q = QScalar::q_power(1);
    CHECK(valuation(q, e1, a0) == q);
    CHECK(valuation(q + QScalar(3), Weight{}, a0) == QScalar(1));
    CHECK(valuation(QScalar(-1), a0.weight(), a0) == QScalar(1));
    CHECK_THROWS_AS(valuation(QScalar(0), e1, a0), std::domain_error);
}
