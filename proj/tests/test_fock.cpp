#include <doctest.h>

#include <functional>
#include <set>

#include "qtor/fock.hpp"

using namespace qtor;

namespace {

// independent partition-enumeration oracle: count multisets of 2-colored odd
// parts with sum <= maxdeg
int count_colored_odd_partitions(int maxdeg) {
    // dp over degrees using parts (color, n), n odd; count multisets
    std::set<std::multiset<std::pair<int, int>>> seen;
    std::multiset<std::pair<int, int>> cur;
    std::function<void(int, std::pair<int, int>)> rec =
        [&](int budget, std::pair<int, int> minpart) {
            seen.insert(cur);
            for (int color = minpart.first; color <= 2; ++color) {
                for (int n = (color == minpart.first ? minpart.second : 1); n <= budget;
                     n += 2) {
                    cur.insert({color, n});
                    rec(budget - n, {color, n});
                    cur.erase(cur.find({color, n}));
                }
            }
        };
    rec(maxdeg, {1, 1});
    return static_cast<int>(seen.size());
}

FockVector vac() { return FockVector::vacuum(); }

}  // namespace

TEST_CASE("basis state basics") {
    BasisState s;
    CHECK(s.degree() == 0);
    BasisState t = s.with_mode(1, 3).with_mode(2, 1).with_mode(1, 3);
    CHECK(t.degree() == 7);
    CHECK(t.multiplicity(1, 3) == 2);
    CHECK(t.without_one(1, 3).multiplicity(1, 3) == 1);
    CHECK(t.to_string() == "e1(-3)^2 e2(-1) |0>");
}

TEST_CASE("heisenberg action") {
    // e1(1) on e1(-1)|0> = 1/2 |0>
    FockVector v = heisenberg_apply(1, -1, vac());
    CHECK(heisenberg_apply(1, 1, v) == vac().scaled(QScalar::rational(1, 2)));

    // annihilator on vacuum
    CHECK(heisenberg_apply(1, 3, vac()).is_zero());
    // orthogonal colors
    CHECK(heisenberg_apply(2, 1, v).is_zero());
    // only odd modes exist
    CHECK_THROWS_AS(heisenberg_apply(1, 2, vac()), std::domain_error);
    CHECK_THROWS_AS(heisenberg_apply(1, 0, vac()), std::domain_error);

    // multiplicity counting: e1(1) on e1(-1)^3 |0> = 3/2 e1(-1)^2 |0>
    FockVector w = heisenberg_apply(1, -1, heisenberg_apply(1, -1, v));
    FockVector expect =
        heisenberg_apply(1, -1, heisenberg_apply(1, -1, vac())).scaled(QScalar::rational(3, 2));
    CHECK(heisenberg_apply(1, 1, w) == expect);
}

TEST_CASE("heisenberg commutator property") {
    auto states = enumerate_basis(8, 0);
    for (int i = 1; i <= 2; ++i) {
        for (int j = 1; j <= 2; ++j) {
            for (int m = -7; m <= 7; m += 2) {
                for (int n = -7; n <= 7; n += 2) {
                    QScalar coef =
                        (i == j && n == -m) ? QScalar::rational(m, 2) : QScalar(0);
                    for (const auto& s : states) {
                        FockVector v = FockVector::basis(s);
                        FockVector lhs =
                            heisenberg_apply(i, m, heisenberg_apply(j, n, v)) -
                            heisenberg_apply(j, n, heisenberg_apply(i, m, v));
                        CHECK(lhs == v.scaled(coef));
                    }
                }
            }
        }
    }
}

TEST_CASE("creation then annihilation on vacuum gives n/2") {
    for (int n = 1; n <= 7; n += 2) {
        FockVector v = heisenberg_apply(1, n, heisenberg_apply(1, -n, vac()));
        CHECK(v == vac().scaled(QScalar::rational(n, 2)));
    }
}

TEST_CASE("group translation") {
    FockVector e1 = group_translate(RootElt{1}, vac());
    BasisState s1;
    s1.lattice = 1;
    CHECK(e1 == FockVector::basis(s1));

    // e^{a0} e^{a0} = -e^{2a0}
    FockVector e2 = group_translate(RootElt{1}, e1);
    BasisState s2;
    s2.lattice = 2;
    CHECK(e2 == -FockVector::basis(s2));

    // identity translation
    CHECK(group_translate(RootElt{0}, e2) == e2);

    // e^{a0} then e^{-a0} on e^{a0}: eps(a0,a0) eps(-a0,2a0) = (-1)(+1) = -1
    CHECK(group_translate(RootElt{-1}, group_translate(RootElt{1}, e1)) == -e1);

    // composition law with cocycle sign
    for (int a = -5; a <= 5; ++a)
        for (int b = -5; b <= 5; ++b) {
            FockVector lhs = group_translate(RootElt{a}, group_translate(RootElt{b}, e1));
            FockVector rhs = group_translate(RootElt{a + b}, e1)
                                 .scaled(QScalar(cocycle(RootElt{a}, RootElt{b})));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("degrees") {
    CHECK(vac().degrees() == std::vector<int>{0});
    FockVector v = heisenberg_apply(2, -1, heisenberg_apply(1, -3, vac()));
    CHECK(v.degrees() == std::vector<int>{4});
    CHECK(FockVector().degrees().empty());
}

TEST_CASE("enumerate basis") {
    auto b0 = enumerate_basis(0, 0);
    REQUIRE(b0.size() == 1);
    CHECK(b0[0].degree() == 0);

    auto b1 = enumerate_basis(1, 0);
    REQUIRE(b1.size() == 3);
    CHECK(b1[0] == BasisState{});
    CHECK(b1[1].degree() == 1);
    CHECK(b1[2].degree() == 1);

    CHECK(enumerate_basis(2, 0).size() == 6);

    // against the independent partition oracle
    for (int d = 0; d <= 7; ++d)
        CHECK(static_cast<int>(enumerate_basis(d, 0).size()) ==
              count_colored_odd_partitions(d));

    // lattice range multiplies the count
    CHECK(enumerate_basis(2, 2).size() == 6 * 5);

    // deterministic order: sorted by degree then state
    auto b = enumerate_basis(4, 1);
    for (std::size_t k = 1; k < b.size(); ++k)
        CHECK(b[k - 1].degree() <= b[k].degree());
}
