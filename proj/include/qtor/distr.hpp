#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qtor/report.hpp"
#include "qtor/vertexop.hpp"

namespace qtor {

// Finite rectangle of exact bivariate distribution coefficients: cell (m, n)
// holds the coefficient of z^{-m} w^{-n}; absent cells are zero. Ranges only
// bound cost, never accuracy — every cell is exact.
class Window2 {
public:
    Window2() = default;
    Window2(int m_lo, int m_hi, int n_lo, int n_hi)
        : m_lo_(m_lo), m_hi_(m_hi), n_lo_(n_lo), n_hi_(n_hi) {}

    int m_lo() const { return m_lo_; }
    int m_hi() const { return m_hi_; }
    int n_lo() const { return n_lo_; }
    int n_hi() const { return n_hi_; }

    bool in_range(int m, int n) const {
        return m >= m_lo_ && m <= m_hi_ && n >= n_lo_ && n <= n_hi_;
    }

    const FockVector& cell(int m, int n) const;
    void set(int m, int n, FockVector v);
    void add(int m, int n, const FockVector& v);

    Window2 operator-(const Window2& o) const;  // ranges must match
    Window2 scaled(const QScalar& c) const;
    bool operator==(const Window2& o) const;

    const std::map<std::pair<int, int>, FockVector>& cells() const { return cells_; }

private:
    int m_lo_ = 0, m_hi_ = -1, n_lo_ = 0, n_hi_ = -1;
    std::map<std::pair<int, int>, FockVector> cells_;
};

// Window of w_z(z) w_w(w) applied to vec. With z_outer, cell (m, n) is
// component m of w_z applied to component n of w_w applied to vec; otherwise
// the w-word is applied last.
Window2 product_window(const VertexWord& w_z, const VertexWord& w_w, bool z_outer,
                       const FockVector& vec, int m_lo, int m_hi, int n_lo, int n_hi);

// Window of the normal-ordered :w1(z) w2(w): applied to vec.
Window2 normal_ordered_window(const VertexWord& w1, const VertexWord& w2,
                              const FockVector& vec, int m_lo, int m_hi, int n_lo,
                              int n_hi);

// F * delta(scale * w/z) where F is a one-variable word: either a series in
// w^{-p}, p >= 0 (u-type) or in z^{+p}, p >= 0 (v-type).
enum class DeltaKind { USeries, VSeries };

struct DeltaTerm {
    Unit scale = Unit::one();
    VertexWord series;
    DeltaKind kind = DeltaKind::USeries;
};

// Cell (m, n) of F(w) delta(s w/z): s^m times the component of F at
// w^{-(m+n)}; for the v-type F(z) delta(s w/z): s^{-n} times the component
// of F at z^{-(m+n)}.
Window2 delta_window(const DeltaTerm& t, const FockVector& vec, int m_lo, int m_hi,
                     int n_lo, int n_hi);

// Bivariate Laurent polynomial in (z, w) as exponent pairs with coefficients.
struct BiPolyTerm {
    int ze = 0, we = 0;
    QScalar coeff;
};
using BiPoly = std::vector<BiPolyTerm>;

// prod (z + c_k w) expanded.
BiPoly bipoly_from_linear_factors(const std::vector<Unit>& cs);
BiPoly bipoly_mul(const BiPoly& a, const BiPoly& b);

// Cell (m, n) of P(z, w) * W: sum over monomials of coeff * W(m + ze, n + we).
// The source window must cover the shifted cells.
Window2 window_apply_bipoly(const BiPoly& p, const Window2& w, int m_lo, int m_hi,
                            int n_lo, int n_hi);

// Both expansions of (1-az)^{-1}(1-bz)^{-1} = z^{-1}/(a-b) ((1-az)^{-1} - (1-bz)^{-1})
// agree to order N and equal sum_{k<=n} a^k b^{n-k}; requires a != b.
Report partial_fraction_check(const QScalar& a, const QScalar& b, int order);

// The commutator [X_ij(a,z), X_ji(b,w)] equals the two delta terms with the
// 2(q^{i-j}+q^{j-i})/(q^{j-i}-q^{i-j}) prefactor, cell by cell on vec over
// the symmetric window |m|,|n| <= window. Requires ab = 1, i != j.
Report verify_commutator(int i, int j, const Unit& a, const Unit& b,
                         const FockVector& vec, int window,
                         const std::string& location_prefix = "");

}  // namespace qtor
