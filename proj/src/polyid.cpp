#include "qtor/polyid.hpp"

#include <sstream>
#include <stdexcept>

namespace qtor {

void MPoly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero()) it = terms_.erase(it);
        else ++it;
    }
}

MPoly::MPoly(const Laurent& c) {
    if (!c.is_zero()) terms_[{0, 0, 0, 0}] = c;
}

MPoly MPoly::monomial(const Laurent& c, const Exp& e) {
    MPoly r;
    if (!c.is_zero()) r.terms_[e] = c;
    return r;
}

MPoly MPoly::var(int idx, int power) {
    Exp e{0, 0, 0, 0};
    e[idx] = power;
    return monomial(Laurent(1), e);
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) {
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) r.terms_.emplace(e, c);
        else it->second += c;
    }
    r.prune();
    return r;
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly r;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Exp e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
            auto it = r.terms_.find(e);
            if (it == r.terms_.end()) r.terms_.emplace(e, ca * cb);
            else it->second += ca * cb;
        }
    }
    r.prune();
    return r;
}

MPoly MPoly::scaled(const Laurent& c) const {
    MPoly r;
    if (c.is_zero()) return r;
    for (const auto& [e, co] : terms_) r.terms_.emplace(e, co * c);
    return r;
}

MPoly MPoly::coeff_w(int k) const {
    MPoly r;
    for (const auto& [e, c] : terms_) {
        if (e[3] != k) continue;
        Exp ne = e;
        ne[3] = 0;
        r.terms_.emplace(ne, c);
    }
    return r;
}

int MPoly::w_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[3]);
    return d;
}

MPoly MPoly::permuted_z(const std::array<int, 3>& perm) const {
    MPoly r;
    for (const auto& [e, c] : terms_) {
        Exp ne{0, 0, 0, e[3]};
        for (int i = 0; i < 3; ++i) ne[perm[i]] = e[i];
        auto it = r.terms_.find(ne);
        if (it == r.terms_.end()) r.terms_.emplace(ne, c);
        else it->second += c;
    }
    r.prune();
    return r;
}

MPoly MPoly::at_v_one() const {
    MPoly r;
    for (const auto& [e, c] : terms_) {
        mpz_class sum = 0;
        for (const auto& [exp, coef] : c.terms()) sum += coef;
        if (sum == 0) continue;
        auto it = r.terms_.find(e);
        if (it == r.terms_.end()) r.terms_.emplace(e, Laurent(sum));
        else it->second += Laurent(sum);
    }
    r.prune();
    return r;
}

MPoly MPoly::at_w_zero() const {
    MPoly r;
    for (const auto& [e, c] : terms_) {
        if (e[3] > 0) continue;
        if (e[3] < 0) throw std::domain_error("MPoly::at_w_zero: pole at w=0");
        r.terms_.emplace(e, c);
    }
    return r;
}

std::string MPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_q_string() << ")";
        const char* names[4] = {"z1", "z2", "z3", "w"};
        for (int i = 0; i < 4; ++i)
            if (e[i] != 0) os << "*" << names[i] << "^" << e[i];
    }
    return os.str();
}

MPoly symmetrize_S3(const MPoly& p) {
    static const std::array<std::array<int, 3>, 6> perms = {{
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
    }};
    MPoly r;
    for (const auto& perm : perms) r += p.permuted_z(perm);
    return r;
}

MPoly vandermonde_factor() {
    MPoly r(Laurent(1));
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) r *= MPoly::var(i) - MPoly::var(j);
    return r;
}

namespace {

// D = q^2 - q^{-2}
Laurent big_d() { return Laurent::monomial(1, 4) - Laurent::monomial(1, -4); }

// z_i^2 + sign * D * z_i * w - w^2
MPoly quadratic_term(int i, int sign) {
    MPoly zi2 = MPoly::var(i, 2);
    MPoly ziw = MPoly::var(i) * MPoly::var(3);
    MPoly w2 = MPoly::var(3, 2);
    MPoly mid = ziw.scaled(big_d());
    return sign > 0 ? zi2 + mid - w2 : zi2 - mid - w2;
}

}  // namespace

MPoly quartic_bracket() {
    MPoly t_a = quadratic_term(0, -1) * quadratic_term(1, -1) * quadratic_term(2, -1);
    MPoly t_b = quadratic_term(2, +1) * quadratic_term(0, -1) * quadratic_term(1, -1);
    MPoly t_c = quadratic_term(0, -1) * quadratic_term(1, +1) * quadratic_term(2, +1);
    MPoly t_d = quadratic_term(0, +1) * quadratic_term(1, +1) * quadratic_term(2, +1);
    return t_a + t_b + t_c + t_d;
}

Report lemma7_check() {
    Report rep;
    rep.id = "lemma7";
    rep.params = "full expansion + w^0..w^6 coefficients";

    MPoly bracket = quartic_bracket();
    MPoly alt = vandermonde_factor();
    MPoly full = symmetrize_S3(bracket * alt);

    rep.count_cell();
    if (!full.is_zero())
        rep.mismatch("full polynomial", full.to_string(), "0");

    for (int k = 0; k <= 6; ++k) {
        rep.count_cell();
        MPoly ck = symmetrize_S3(bracket.coeff_w(k) * alt);
        if (!ck.is_zero())
            rep.mismatch("w^" + std::to_string(k) + " coefficient", ck.to_string(), "0");
    }

    // the displayed closed forms of the extreme coefficients
    Laurent d = big_d();
    MPoly z123sq = MPoly::var(0, 2) * MPoly::var(1, 2) * MPoly::var(2, 2);
    rep.count_cell();
    if (!(bracket.coeff_w(0) == z123sq.scaled(Laurent(4))))
        rep.mismatch("w^0 inner form", bracket.coeff_w(0).to_string(),
                     "4(z1 z2 z3)^2");
    MPoly w1_expected =
        (MPoly::var(0) * MPoly::var(1) * MPoly::var(2) *
         (MPoly::var(0) * MPoly::var(1) - MPoly::var(1) * MPoly::var(2)))
            .scaled(d + d);
    rep.count_cell();
    if (!(bracket.coeff_w(1) == w1_expected))
        rep.mismatch("w^1 inner form", bracket.coeff_w(1).to_string(),
                     "2 z1 z2 z3 (q^2-q^-2)(z1 z2 - z2 z3)");
    MPoly w5_expected = (MPoly::var(2) - MPoly::var(0)).scaled(d + d);
    rep.count_cell();
    if (!(bracket.coeff_w(5) == w5_expected))
        rep.mismatch("w^5 inner form", bracket.coeff_w(5).to_string(),
                     "-2 (z1 - z3)(q^2-q^-2)");
    rep.count_cell();
    if (bracket.w_degree() != 6)
        rep.mismatch("w-degree", std::to_string(bracket.w_degree()), "6");
    return rep;
}

Report quartic_bracket_identity() {
    Report rep;
    rep.id = "quartic_bracket";
    rep.params = "four ordering kernels vs bracket terms";

    // numerators and denominators of the four w-kernel products,
    // O_r = prod_i (z_i + e_{r,i} w) / (z_i - e_{r,i} w) with e in {q^{-2}, q^2}
    const Laurent q2 = Laurent::monomial(1, 4);
    const Laurent qm2 = Laurent::monomial(1, -4);
    const std::array<std::array<Laurent, 3>, 4> exps = {{
        {qm2, qm2, qm2},
        {qm2, qm2, q2},
        {qm2, q2, q2},
        {q2, q2, q2},
    }};

    MPoly common_den(Laurent(1));
    for (int i = 0; i < 3; ++i) {
        common_den *= MPoly::var(i) - MPoly::var(3).scaled(q2);
        common_den *= MPoly::var(i) - MPoly::var(3).scaled(qm2);
    }

    const std::array<MPoly, 4> bracket_terms = {
        quadratic_term(0, -1) * quadratic_term(1, -1) * quadratic_term(2, -1),
        quadratic_term(2, +1) * quadratic_term(0, -1) * quadratic_term(1, -1),
        quadratic_term(0, -1) * quadratic_term(1, +1) * quadratic_term(2, +1),
        quadratic_term(0, +1) * quadratic_term(1, +1) * quadratic_term(2, +1),
    };

    MPoly sum_cleared;
    for (int r = 0; r < 4; ++r) {
        MPoly num(Laurent(1)), den(Laurent(1));
        for (int i = 0; i < 3; ++i) {
            num *= MPoly::var(i) + MPoly::var(3).scaled(exps[r][i]);
            den *= MPoly::var(i) - MPoly::var(3).scaled(exps[r][i]);
        }
        // cofactor = common_den / den: the complementary three linear factors
        MPoly cofactor(Laurent(1));
        for (int i = 0; i < 3; ++i) {
            const Laurent& other = (exps[r][i] == q2) ? qm2 : q2;
            cofactor *= MPoly::var(i) - MPoly::var(3).scaled(other);
        }
        rep.count_cell();
        if (!(den * cofactor == common_den))
            rep.mismatch("denominator split r=" + std::to_string(r),
                         (den * cofactor).to_string(), common_den.to_string());
        MPoly cleared = num * cofactor;
        rep.count_cell();
        if (!(cleared == bracket_terms[r]))
            rep.mismatch("kernel term r=" + std::to_string(r), cleared.to_string(),
                         bracket_terms[r].to_string());
        sum_cleared += cleared;
    }

    MPoly bracket = quartic_bracket();
    rep.count_cell();
    if (!(sum_cleared - bracket).is_zero())
        rep.mismatch("cleared sum vs bracket", (sum_cleared - bracket).to_string(), "0");

    // w = 0: every ratio is 1, so the sum is 4 and the bracket/common_den is 4
    rep.count_cell();
    MPoly lhs0 = bracket.at_w_zero();
    MPoly rhs0 = common_den.at_w_zero().scaled(Laurent(4));
    if (!(lhs0 == rhs0))
        rep.mismatch("w=0 specialization", lhs0.to_string(), rhs0.to_string());

    // q = 1: bracket terms collapse pairwise to prod (z_i^2 - w^2)
    rep.count_cell();
    MPoly collapse = (MPoly::var(0, 2) - MPoly::var(3, 2)) *
                     (MPoly::var(1, 2) - MPoly::var(3, 2)) *
                     (MPoly::var(2, 2) - MPoly::var(3, 2));
    if (!(bracket.at_v_one() == collapse.scaled(Laurent(4))))
        rep.mismatch("q=1 specialization", bracket.at_v_one().to_string(),
                     "4 prod (z_i^2 - w^2)");
    return rep;
}

}  // namespace qtor
