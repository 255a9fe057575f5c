#include "qtor/distr.hpp"

#include <sstream>
#include <stdexcept>

namespace qtor {

namespace {
const FockVector kZeroVector{};
}

const FockVector& Window2::cell(int m, int n) const {
    auto it = cells_.find({m, n});
    return it == cells_.end() ? kZeroVector : it->second;
}

void Window2::set(int m, int n, FockVector v) {
    if (!in_range(m, n)) throw std::domain_error("Window2::set: cell out of range");
    if (v.is_zero()) cells_.erase({m, n});
    else cells_[{m, n}] = std::move(v);
}

void Window2::add(int m, int n, const FockVector& v) {
    if (v.is_zero()) return;
    if (!in_range(m, n)) throw std::domain_error("Window2::add: cell out of range");
    auto it = cells_.find({m, n});
    if (it == cells_.end()) {
        cells_.emplace(std::pair(m, n), v);
    } else {
        it->second += v;
        if (it->second.is_zero()) cells_.erase(it);
    }
}

Window2 Window2::operator-(const Window2& o) const {
    if (m_lo_ != o.m_lo_ || m_hi_ != o.m_hi_ || n_lo_ != o.n_lo_ || n_hi_ != o.n_hi_)
        throw std::domain_error("Window2: range mismatch in subtraction");
    Window2 r = *this;
    for (const auto& [mn, v] : o.cells_) r.add(mn.first, mn.second, -v);
    return r;
}

Window2 Window2::scaled(const QScalar& c) const {
    Window2 r(m_lo_, m_hi_, n_lo_, n_hi_);
    if (c.is_zero()) return r;
    for (const auto& [mn, v] : cells_) r.cells_[mn] = v.scaled(c);
    return r;
}

bool Window2::operator==(const Window2& o) const {
    return m_lo_ == o.m_lo_ && m_hi_ == o.m_hi_ && n_lo_ == o.n_lo_ &&
           n_hi_ == o.n_hi_ && cells_ == o.cells_;
}

Window2 product_window(const VertexWord& w_z, const VertexWord& w_w, bool z_outer,
                       const FockVector& vec, int m_lo, int m_hi, int n_lo, int n_hi) {
    Window2 out(m_lo, m_hi, n_lo, n_hi);
    if (z_outer) {
        for (int n = n_lo; n <= n_hi; ++n) {
            FockVector inner = word_component(w_w, {n}, vec);
            if (inner.is_zero()) continue;
            for (int m = m_lo; m <= m_hi; ++m)
                out.set(m, n, word_component(w_z, {m}, inner));
        }
    } else {
        for (int m = m_lo; m <= m_hi; ++m) {
            FockVector inner = word_component(w_z, {m}, vec);
            if (inner.is_zero()) continue;
            for (int n = n_lo; n <= n_hi; ++n)
                out.set(m, n, word_component(w_w, {n}, inner));
        }
    }
    return out;
}

Window2 normal_ordered_window(const VertexWord& w1, const VertexWord& w2,
                              const FockVector& vec, int m_lo, int m_hi, int n_lo,
                              int n_hi) {
    Window2 out(m_lo, m_hi, n_lo, n_hi);
    VertexWord merged = word_merge_normal_ordered(w1, w2);
    for (int m = m_lo; m <= m_hi; ++m)
        for (int n = n_lo; n <= n_hi; ++n)
            out.set(m, n, word_component(merged, {m, n}, vec));
    return out;
}

Window2 delta_window(const DeltaTerm& t, const FockVector& vec, int m_lo, int m_hi,
                     int n_lo, int n_hi) {
    Window2 out(m_lo, m_hi, n_lo, n_hi);
    // components of F along the anti-diagonal m + n = const
    for (int k = m_lo + n_lo; k <= m_hi + n_hi; ++k) {
        FockVector comp;
        if (t.kind == DeltaKind::USeries) {
            if (k < 0) continue;
            comp = word_component(t.series, {k}, vec);
        } else {
            if (k > 0) continue;
            comp = word_component(t.series, {k}, vec);
        }
        if (comp.is_zero()) continue;
        for (int m = m_lo; m <= m_hi; ++m) {
            int n = k - m;
            if (n < n_lo || n > n_hi) continue;
            long e = (t.kind == DeltaKind::USeries) ? m : -n;
            out.set(m, n, comp.scaled(QScalar::from_unit(t.scale.pow(e))));
        }
    }
    return out;
}

BiPoly bipoly_from_linear_factors(const std::vector<Unit>& cs) {
    BiPoly p{BiPolyTerm{0, 0, QScalar(1)}};
    for (const Unit& c : cs) {
        BiPoly f{BiPolyTerm{1, 0, QScalar(1)}, BiPolyTerm{0, 1, QScalar::from_unit(c)}};
        p = bipoly_mul(p, f);
    }
    return p;
}

BiPoly bipoly_mul(const BiPoly& a, const BiPoly& b) {
    std::map<std::pair<int, int>, QScalar> acc;
    for (const auto& ta : a)
        for (const auto& tb : b) {
            auto key = std::pair(ta.ze + tb.ze, ta.we + tb.we);
            auto it = acc.find(key);
            if (it == acc.end()) acc.emplace(key, ta.coeff * tb.coeff);
            else it->second += ta.coeff * tb.coeff;
        }
    BiPoly r;
    for (const auto& [k, c] : acc)
        if (!c.is_zero()) r.push_back(BiPolyTerm{k.first, k.second, c});
    return r;
}

Window2 window_apply_bipoly(const BiPoly& p, const Window2& w, int m_lo, int m_hi,
                            int n_lo, int n_hi) {
    Window2 out(m_lo, m_hi, n_lo, n_hi);
    for (int m = m_lo; m <= m_hi; ++m) {
        for (int n = n_lo; n <= n_hi; ++n) {
            FockVector acc;
            for (const auto& t : p) {
                if (!w.in_range(m + t.ze, n + t.we))
                    throw std::domain_error("window_apply_bipoly: source window too small");
                acc += w.cell(m + t.ze, n + t.we).scaled(t.coeff);
            }
            out.set(m, n, std::move(acc));
        }
    }
    return out;
}

Report partial_fraction_check(const QScalar& a, const QScalar& b, int order) {
    Report rep;
    rep.id = "lemma4";
    rep.params = "a=" + a.to_string() + " b=" + b.to_string() +
                 " N=" + std::to_string(order);
    if (a == b) {
        rep.mismatch("precondition", "a=" + a.to_string(), "b must differ from a");
        return rep;
    }
    // lhs series: (1-az)^{-1} (1-bz)^{-1}
    QScalar apow(1), bpow(1);
    std::vector<QScalar> apows{QScalar(1)}, bpows{QScalar(1)};
    for (int k = 1; k <= order + 1; ++k) {
        apow *= a;
        bpow *= b;
        apows.push_back(apow);
        bpows.push_back(bpow);
    }
    QScalar inv_amb = QScalar(1) / (a - b);
    for (int n = 0; n <= order; ++n) {
        QScalar lhs(0);
        for (int k = 0; k <= n; ++k) lhs += apows[k] * bpows[n - k];
        // z^{-1}/(a-b) ((1-az)^{-1} - (1-bz)^{-1}), coefficient of z^n
        QScalar rhs = inv_amb * (apows[n + 1] - bpows[n + 1]);
        rep.count_cell();
        if (lhs != rhs)
            rep.mismatch("z^" + std::to_string(n), lhs.to_string(), rhs.to_string());
    }
    return rep;
}

Report verify_commutator(int i, int j, const Unit& a, const Unit& b,
                         const FockVector& vec, int window,
                         const std::string& location_prefix) {
    Report rep;
    rep.id = "prop5";
    {
        std::ostringstream os;
        os << "i=" << i << " j=" << j << " a=" << a.to_string() << " b=" << b.to_string()
           << " window=" << window;
        rep.params = os.str();
    }
    if (fold_color(i) == fold_color(j)) {
        rep.mismatch("precondition", "i=j", "indices must differ mod 2");
        return rep;
    }
    if (!(a * b).is_one()) {
        rep.mismatch("precondition", (a * b).to_string(), "ab must be 1");
        return rep;
    }
    const int t = j - i;
    const int W = window;
    VertexWord xij = x_word(i, j, a);
    VertexWord xji = x_word(j, i, b);

    Window2 zw = product_window(xij, xji, true, vec, -W, W, -W, W);
    Window2 wz = product_window(xij, xji, false, vec, -W, W, -W, W);
    Window2 lhs = zw - wz;

    // 2 (q^{i-j} + q^{j-i}) / (q^{j-i} - q^{i-j})
    QScalar qt = QScalar::q_power(t), qmt = QScalar::q_power(-t);
    QScalar pref = QScalar(2) * (qmt + qt) / (qt - qmt);

    DeltaTerm ut{Unit::q_power(t) * b,
                 word_scale_variable(u_word(i, j, b.inv()), 0, b * Unit::q_half_power(t)),
                 DeltaKind::USeries};
    DeltaTerm vt{Unit::q_power(-t) * b,
                 word_scale_variable(v_word(i, j, b), 0, Unit::q_half_power(t)),
                 DeltaKind::VSeries};
    Window2 rhs = (delta_window(ut, vec, -W, W, -W, W) -
                   delta_window(vt, vec, -W, W, -W, W))
                      .scaled(pref);

    for (int m = -W; m <= W; ++m) {
        for (int n = -W; n <= W; ++n) {
            rep.count_cell();
            const FockVector& l = lhs.cell(m, n);
            const FockVector& r = rhs.cell(m, n);
            if (!(l == r)) {
                std::ostringstream os;
                os << location_prefix << "cell(" << m << "," << n << ")";
                rep.mismatch(os.str(), l.to_string(), r.to_string());
            }
        }
    }
    return rep;
}

}  // namespace qtor
