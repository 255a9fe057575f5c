#include <doctest.h>

#include "qtor/polyid.hpp"

using namespace qtor;

TEST_CASE("mpoly ring ops") {
    MPoly z1 = MPoly::var(0), z2 = MPoly::var(1);
    // (z1 - z2)(z1 + z2) = z1^2 - z2^2
    CHECK((z1 - z2) * (z1 + z2) == MPoly::var(0, 2) - MPoly::var(1, 2));
    CHECK((z1 * MPoly()).is_zero());
    CHECK((z1 - z1).is_zero());

    // coefficient extraction in w
    MPoly p = z1 * MPoly::var(3) + MPoly::var(3, 2).scaled(Laurent(3));
    CHECK(p.coeff_w(1) == z1);
    CHECK(p.coeff_w(2) == MPoly(Laurent(3)));
    CHECK(p.coeff_w(0).is_zero());
}

TEST_CASE("coefficient of w^0 in the bracket is 4(z1 z2 z3)^2") {
    MPoly bracket = quartic_bracket();
    MPoly z123sq = MPoly::var(0, 2) * MPoly::var(1, 2) * MPoly::var(2, 2);
    CHECK(bracket.at_w_zero() == z123sq.scaled(Laurent(4)));
}

TEST_CASE("symmetrize") {
    MPoly z1 = MPoly::var(0), z2 = MPoly::var(1), z3 = MPoly::var(2);
    // each variable appears in two of the six permutations
    CHECK(symmetrize_S3(z1) == (z1 + z2 + z3).scaled(Laurent(2)));
    // symmetric input: multiplied by 6
    MPoly sym = z1 * z2 * z3;
    CHECK(symmetrize_S3(sym) == sym.scaled(Laurent(6)));
    // alternating input: cancels
    CHECK(symmetrize_S3(vandermonde_factor()).is_zero());
    // projection up to scale
    MPoly p = z1 * z1 * z2 + z3.scaled(Laurent::monomial(1, 2));
    CHECK(symmetrize_S3(symmetrize_S3(p)) == symmetrize_S3(p).scaled(Laurent(6)));
}

TEST_CASE("vandermonde alternates under transpositions") {
    MPoly alt = vandermonde_factor();
    MPoly probe = MPoly::var(0, 3) * MPoly::var(1) + MPoly::var(2, 2);
    const std::array<std::array<int, 3>, 3> transpositions = {{
        {1, 0, 2}, {0, 2, 1}, {2, 1, 0},
    }};
    for (const auto& t : transpositions) {
        CHECK(alt.permuted_z(t) == -alt);
        // and a generic polynomial does not (sanity of permuted_z)
        CHECK_FALSE(probe.permuted_z(t) == probe);
    }
}

TEST_CASE("lemma7") {
    Report r = lemma7_check();
    INFO(r.mismatches.empty() ? "" : r.mismatches[0].location + ": " +
                                         r.mismatches[0].lhs);
    CHECK(r.pass());
    CHECK(r.cells >= 8);
}

TEST_CASE("quartic bracket identity") {
    Report r = quartic_bracket_identity();
    INFO(r.mismatches.empty() ? "" : r.mismatches[0].location + ": " +
                                         r.mismatches[0].lhs);
    CHECK(r.pass());
}
