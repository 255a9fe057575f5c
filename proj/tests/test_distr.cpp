#include <doctest.h>

#include "qtor/distr.hpp"

using namespace qtor;

namespace {

FockVector vac() { return FockVector::vacuum(); }
Unit one() { return Unit::one(); }

}  // namespace

TEST_CASE("window arithmetic") {
    Window2 a(0, 1, 0, 1), b(0, 1, 0, 1);
    a.set(0, 0, vac());
    b.set(1, 1, vac().scaled(QScalar(2)));
    Window2 d = a - b;
    CHECK(d.cell(0, 0) == vac());
    CHECK(d.cell(1, 1) == vac().scaled(QScalar(-2)));
    CHECK(d.cell(0, 1).is_zero());
    CHECK((a - a).cells().empty());
    CHECK(a.scaled(QScalar(3)).cell(0, 0) == vac().scaled(QScalar(3)));
    CHECK_THROWS_AS(a.set(5, 5, vac()), std::domain_error);
}

TEST_CASE("product window basics") {
    VertexWord w1 = x_word(0, 1, one());
    VertexWord w2 = x_word(1, 0, one());
    Window2 p = product_window(w1, w2, true, vac(), -2, 2, -2, 2);

    FockVector direct = x_component(0, 1, one(), 0, x_component(1, 0, one(), 0, vac()));
    CHECK(p.cell(0, 0) == direct);
    CHECK_FALSE(p.cell(0, 0).is_zero());

    // grading: annihilation beyond the budget of the vacuum is zero
    CHECK(p.cell(0, 2).is_zero());
    CHECK(p.cell(2, 0).is_zero());

    // identity inner word collapses the window to one active column
    VertexWord id;
    Window2 pid = product_window(w1, id, true, vac(), -2, 2, -2, 2);
    for (int m = -2; m <= 2; ++m)
        for (int n = -2; n <= 2; ++n)
            if (n != 0) CHECK(pid.cell(m, n).is_zero());
    CHECK(pid.cell(0, 0) == x_component(0, 1, one(), 0, vac()));
}

TEST_CASE("delta window plain and scaled") {
    VertexWord id;  // F == 1
    DeltaTerm plain{Unit::one(), id, DeltaKind::USeries};
    Window2 w = delta_window(plain, vac(), -3, 3, -3, 3);
    for (int m = -3; m <= 3; ++m)
        for (int n = -3; n <= 3; ++n) {
            if (n == -m) CHECK(w.cell(m, n) == vac());
            else CHECK(w.cell(m, n).is_zero());
        }

    DeltaTerm scaled{Unit::q_power(1), id, DeltaKind::USeries};
    Window2 ws = delta_window(scaled, vac(), -3, 3, -3, 3);
    for (int m = -3; m <= 3; ++m)
        CHECK(ws.cell(m, -m) == vac().scaled(QScalar::q_power(m)));

    // u-type support: cells with m+n < 0 vanish
    DeltaTerm ut{Unit::one(),
                 word_scale_variable(u_word(0, 1, one()), 0, Unit::q_half_power(1)),
                 DeltaKind::USeries};
    FockVector st = heisenberg_apply(1, -1, vac());
    Window2 wu = delta_window(ut, st, -2, 2, -2, 2);
    CHECK(wu.cell(1, -2).is_zero());
    CHECK_FALSE(wu.cell(2, -1).is_zero());  // m+n = 1 annihilates the one mode
}

TEST_CASE("bipoly helpers") {
    // (z - q^2 w)(z + q^{-2} w) = z^2 + (q^{-2} - q^2) zw - w^2
    BiPoly p = bipoly_from_linear_factors({-Unit::q_power(2), Unit::q_power(-2)});
    REQUIRE(p.size() == 3);
    QScalar mid = QScalar::q_power(-2) - QScalar::q_power(2);
    for (const auto& t : p) {
        if (t.ze == 2) CHECK(t.coeff == QScalar(1));
        if (t.ze == 1) CHECK(t.coeff == mid);
        if (t.ze == 0) CHECK(t.coeff == QScalar(-1));
    }
}

TEST_CASE("partial fractions") {
    Report r = partial_fraction_check(QScalar(2), QScalar(1), 10);
    CHECK(r.pass());

    // b=0 edge: LHS collapses to the geometric series of a
    Report r0 = partial_fraction_check(QScalar(5), QScalar(0), 10);
    CHECK(r0.pass());

    // a = b rejected
    Report rb = partial_fraction_check(QScalar(3), QScalar(3), 5);
    CHECK_FALSE(rb.pass());

    // (q, q^{-1}): z^n coefficient is [n+1]
    Report rq = partial_fraction_check(QScalar::q_power(1), QScalar::q_power(-1), 40);
    CHECK(rq.pass());

    // a=2, b=1, coefficient of z^2: geometric-series oracle gives 4+2+1 = 7
    QScalar conv(0);
    for (int k = 0; k <= 2; ++k) conv += QScalar(1 << k);
    CHECK(conv == QScalar(7));
}

TEST_CASE("partial fractions on distinct monomial pairs") {
    std::vector<Unit> units;
    for (int e = -4; e <= 4; ++e) {
        units.push_back(Unit{false, e});
        units.push_back(Unit{true, e});
    }
    int checked = 0;
    for (std::size_t a = 0; a < units.size() && checked < 40; ++a)
        for (std::size_t b = 0; b < units.size() && checked < 40; ++b) {
            if (units[a] == units[b]) continue;
            ++checked;
            CHECK(partial_fraction_check(QScalar::from_unit(units[a]),
                                         QScalar::from_unit(units[b]), 12)
                      .pass());
        }
}

TEST_CASE("commutator formula on the vacuum") {
    Report r = verify_commutator(0, 1, one(), one(), vac(), 4);
    CHECK(r.pass());
    CHECK(r.cells == 81);

    Report r10 = verify_commutator(1, 0, one(), one(), vac(), 4);
    CHECK(r10.pass());

    Report rm = verify_commutator(0, 1, Unit::minus_one(), Unit::minus_one(), vac(), 3);
    CHECK(rm.pass());

    // precondition: ab != 1
    Report rbad = verify_commutator(0, 1, one(), Unit::minus_one(), vac(), 2);
    CHECK_FALSE(rbad.pass());
}

TEST_CASE("commutator formula on excited states") {
    auto states = enumerate_basis(2, 1);
    for (const auto& s : states) {
        Report r = verify_commutator(0, 1, one(), one(), FockVector::basis(s), 3);
        CHECK(r.pass());
    }
}

TEST_CASE("delta substitution at window level") {
    // f(z,w) delta(s w/z) = f(sw, w) delta(s w/z) for the commutator prefactor
    // polynomial P(z,w) = (z + q w)(z + q^{-1} w), s = q
    Unit s = Unit::q_power(1);
    BiPoly p = bipoly_from_linear_factors({Unit::q_power(1), Unit::q_power(-1)});
    QScalar sval = QScalar::from_unit(s);
    QScalar fsw = (sval + QScalar::q_power(1)) * (sval + QScalar::q_power(-1));

    VertexWord id;
    DeltaTerm dt{s, id, DeltaKind::USeries};
    const int W = 4;
    Window2 raw = delta_window(dt, vac(), -W - 2, W + 2, -W - 2, W + 2);
    Window2 lhs = window_apply_bipoly(p, raw, -W, W, -W, W);
    for (int m = -W; m <= W; ++m)
        for (int n = -W; n <= W; ++n) {
            // f(sw,w) = w^2 (s+q)(s+q^{-1}); the w^2 shifts the support
            FockVector expect;
            if (n == -m - 2) expect = vac().scaled(QScalar::from_unit(s.pow(m)) * fsw);
            CHECK(lhs.cell(m, n) == expect);
        }
}
