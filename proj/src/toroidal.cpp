#include "qtor/toroidal.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qtor {

namespace {

const QScalar kOne(1);

QScalar qhalf(int halves) { return QScalar::q_half_power(halves); }

// 2 (q + q^{-1}) / (q - q^{-1})
QScalar big_c() {
    QScalar q = QScalar::q_power(1), qi = QScalar::q_power(-1);
    return QScalar(2) * (q + qi) / (q - qi);
}

std::vector<int> default_odd_modes(int limit) {
    std::vector<int> out;
    for (int m = -limit; m <= limit; ++m)
        if (m % 2 != 0) out.push_back(m);
    return out;
}

std::vector<int> default_int_modes(int limit) {
    std::vector<int> out;
    for (int n = -limit; n <= limit; ++n) out.push_back(n);
    return out;
}

std::string vec_to_string(const std::vector<int>& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
    os << "]";
    return os.str();
}

Unit node_a(int i) { return i == 1 ? Unit::one() : Unit::minus_one(); }

}  // namespace

std::optional<RelationId> relation_from_string(const std::string& s) {
    static const std::map<std::string, RelationId> m = {
        {"R1", RelationId::R1},     {"R2", RelationId::R2},
        {"R3", RelationId::R3},     {"R4", RelationId::R4},
        {"R5", RelationId::R5},     {"R6", RelationId::R6},
        {"S1", RelationId::S1},     {"S2", RelationId::S2},
        {"S3", RelationId::S3},     {"S4", RelationId::S4},
        {"GS12", RelationId::GS12}, {"GS13", RelationId::GS13},
        {"GS14", RelationId::GS14}, {"GS15", RelationId::GS15},
        {"GS16", RelationId::GS16},
    };
    auto it = m.find(s);
    if (it == m.end()) return std::nullopt;
    return it->second;
}

std::string relation_name(RelationId id) {
    switch (id) {
        case RelationId::R1: return "R1";
        case RelationId::R2: return "R2";
        case RelationId::R3: return "R3";
        case RelationId::R4: return "R4";
        case RelationId::R5: return "R5";
        case RelationId::R6: return "R6";
        case RelationId::S1: return "S1";
        case RelationId::S2: return "S2";
        case RelationId::S3: return "S3";
        case RelationId::S4: return "S4";
        case RelationId::GS12: return "GS12";
        case RelationId::GS13: return "GS13";
        case RelationId::GS14: return "GS14";
        case RelationId::GS15: return "GS15";
        case RelationId::GS16: return "GS16";
    }
    return "?";
}

std::vector<std::pair<std::string, std::string>> relation_catalogue() {
    return {
        {"R1", "[h_im, h_im'] = [2m]/(2m) [mc] delta_{m,-m'}"},
        {"R2", "[h_im, h_jm'] = (q-q^-1)[m]^2/(2|m|) [mc] delta_{m,-m'}, i != j"},
        {"R3", "[h_im, x_in^s] = -s [2m]/m q^{-s|m|c/2} x_{i,m+n}^s"},
        {"R4", "[h_im, x_jn^s] = -s (q-q^-1)[m]^2/|m| q^{-s|m|c/2} x_{j,m+n}^s, i != j"},
        {"R5", "q^{±c/2} central"},
        {"R6", "[x_im^+, x_in^-] componentwise delta-pair identity"},
        {"S1", "(z-q^{2s}w)(z+q^{-2s}w) x_i^s(z)x_i^s(w) = (z-q^{-2s}w)(z+q^{2s}w) x_i^s(w)x_i^s(z)"},
        {"S2", "(z-q^-2 w)(z+q^2 w) x_i^s(z)x_j^s(w) = (z-q^2 w)(z+q^-2 w) x_j^s(w)x_i^s(z), i != j"},
        {"S3", "(z-qw)^2(z+q^-1 w)^2 x_i^s(z)x_j^{-s}(w) = (z-q^-1 w)^2(z+qw)^2 x_j^{-s}(w)x_i^s(z), i != j"},
        {"S4", "quartic Serre: Sym_{z1,z2,z3} prefactored four-term sum = 0"},
        {"GS12", "phi_i^+(z) phi_j^-(w) exchange kernel = G_{|i-j|}(q^c w/z)/G_{|i-j|}(q^{-c} w/z)"},
        {"GS13", "[phi_i^+(z), phi_j^+(w)] = [phi_i^-(z), phi_j^-(w)] = 0"},
        {"GS14", "phi_i^+(z) x_j^s(w) phi_i^+(z)^{-1} = x_j^s(w) G_{|i-j|}(q^{-sc/2} w/z)^{s}"},
        {"GS15", "phi_i^-(z) x_j^s(w) phi_i^-(z)^{-1} = x_j^s(w) G_{|i-j|}(q^{-sc/2} z/w)^{-s}"},
        {"GS16", "[x_i^+(z), x_i^-(w)] = C { phi_i^+(q^{c/2}w) d(q^c w/z) - phi_i^-(q^{c/2}z) d(q^{-c} w/z) }"},
    };
}

std::string PiConfig::to_string() const {
    std::string s = "uv=";
    s += (uv == UvSign::AsWritten ? "asWritten" : "negated");
    s += ",flip=";
    s += (flip_zero_node ? "on" : "off");
    return s;
}

std::string RelationParams::to_string() const {
    std::ostringstream os;
    os << "i=" << i << " j=" << j << " sign=" << (sign > 0 ? "+" : "-");
    if (!modes_m.empty()) os << " m=" << vec_to_string(modes_m);
    if (!modes_n.empty()) os << " n=" << vec_to_string(modes_n);
    os << " modes=" << modes << " window=" << window << " deg=" << maxdeg
       << " lat=" << latrange << " order=" << order;
    if (all_configs) os << " convention=all";
    else os << " " << config.to_string();
    if (perturb) os << " perturb=" << perturb;
    return os.str();
}

FockVector HOperator::apply(const FockVector& v) const {
    FockVector out;
    for (const auto& [color, coeff] : parts)
        out += heisenberg_apply(color, mode, v).scaled(coeff);
    return out;
}

std::string HOperator::to_string() const {
    std::ostringstream os;
    for (const auto& [color, coeff] : parts)
        os << "(" << coeff.to_string() << ") e" << color << "(" << mode << ") ";
    return os.str();
}

HOperator pi_h(int i, int m) {
    if (m == 0 || m % 2 == 0) throw std::domain_error("pi_h: mode must be odd");
    if (i != 0 && i != 1) throw std::domain_error("pi_h: node must be 0 or 1");
    const int am = std::abs(m);
    QScalar ratio = quantum_integer(m) / QScalar(m);
    HOperator h;
    h.mode = m;
    if (i == 1) {
        h.parts = {{1, qhalf(-am) * ratio}, {2, -qhalf(am) * ratio}};
    } else {
        h.parts = {{2, -qhalf(am) * ratio}, {1, -qhalf(-am) * ratio}};
    }
    return h;
}

VertexWord pi_x_word(int i, int sign, const PiConfig& cfg) {
    if (i != 0 && i != 1) throw std::domain_error("pi_x_word: node must be 0 or 1");
    if (sign > 0) return x_word(0, 1, node_a(i));
    VertexWord w = x_word(1, 0, node_a(i));
    if (i == 0 && cfg.flip_zero_node) w = word_scale_variable(w, 0, Unit::minus_one());
    return w;
}

VertexWord pi_phi_word(int i, int sign, const PiConfig& cfg) {
    if (i != 0 && i != 1) throw std::domain_error("pi_phi_word: node must be 0 or 1");
    VertexWord w = sign > 0 ? u_word(0, 1, node_a(i)) : v_word(0, 1, node_a(i));
    if (cfg.uv == UvSign::Negated) w.prefactor = -w.prefactor;
    return w;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<BasisState> param_states(const RelationParams& p) {
    return enumerate_basis(p.maxdeg, p.latrange);
}

void compare_vectors(Report& rep, const std::string& loc, const FockVector& lhs,
                     const FockVector& rhs) {
    rep.count_cell();
    if (!(lhs == rhs)) rep.mismatch(loc, lhs.to_string(), rhs.to_string());
}

// ---- R1 / R2 --------------------------------------------------------------

void check_hh(Report& rep, const RelationParams& p, bool same_node) {
    const int i = p.i;
    const int j = same_node ? p.i : p.j;
    if (!same_node && fold_color(i) == fold_color(j))
        throw std::domain_error("R2 requires i != j");
    std::vector<int> ms = p.modes_m.empty() ? default_odd_modes(p.modes) : p.modes_m;
    auto states = param_states(p);
    const QScalar qmqi = QScalar::q_power(1) - QScalar::q_power(-1);
    for (int m : ms) {
        HOperator hm = pi_h(i, m);
        for (int mp : ms) {
            HOperator hmp = pi_h(j, mp);
            QScalar coef(0);
            if (mp == -m) {
                // [mc] with c = 1
                if (same_node)
                    coef = quantum_integer(2 * m) / QScalar(2 * m) * quantum_integer(m);
                else
                    coef = qmqi * quantum_integer(m) * quantum_integer(m) *
                           quantum_integer(m) / QScalar(2 * std::abs(m));
                if (p.perturb) coef += QScalar(p.perturb);
            }
            for (const auto& s : states) {
                FockVector v = FockVector::basis(s);
                FockVector lhs = hm.apply(hmp.apply(v)) - hmp.apply(hm.apply(v));
                FockVector rhs = v.scaled(coef);
                std::ostringstream loc;
                loc << "m=" << m << " m'=" << mp << " state=" << s.to_string();
                compare_vectors(rep, loc.str(), lhs, rhs);
            }
        }
    }
}

// ---- R3 / R4 --------------------------------------------------------------

void check_hx(Report& rep, const RelationParams& p, bool same_node) {
    const int i = p.i;
    const int j = same_node ? p.i : p.j;
    if (!same_node && fold_color(i) == fold_color(j))
        throw std::domain_error("R4 requires i != j");
    std::vector<int> ms = p.modes_m.empty() ? default_odd_modes(p.modes) : p.modes_m;
    std::vector<int> ns = p.modes_n.empty() ? default_int_modes(p.modes) : p.modes_n;
    auto states = param_states(p);
    const QScalar qmqi = QScalar::q_power(1) - QScalar::q_power(-1);
    VertexWord xw = pi_x_word(j, p.sign, p.config);
    for (int m : ms) {
        HOperator hm = pi_h(i, m);
        const int am = std::abs(m);
        QScalar coef = same_node
                           ? quantum_integer(2 * m) / QScalar(m)
                           : qmqi * quantum_integer(m) * quantum_integer(m) / QScalar(am);
        // -s * coef * q^{-s|m|c/2}, c = 1
        QScalar full = coef * qhalf(-p.sign * am);
        if (p.sign > 0) full = -full;
        for (int n : ns) {
            for (const auto& s : states) {
                FockVector v = FockVector::basis(s);
                FockVector xv = word_component(xw, {n}, v);
                FockVector lhs = hm.apply(xv) - word_component(xw, {n}, hm.apply(v));
                FockVector rhs = word_component(xw, {m + n}, v).scaled(full);
                std::ostringstream loc;
                loc << "m=" << m << " n=" << n << " state=" << s.to_string();
                compare_vectors(rep, loc.str(), lhs, rhs);
            }
        }
    }
}

// ---- R5: centrality of q^{±c/2} -------------------------------------------

void check_central(Report& rep, const RelationParams& p) {
    auto states = param_states(p);
    const QScalar c = qhalf(1);
    VertexWord xp = pi_x_word(p.i, +1, p.config);
    HOperator h = pi_h(p.i, 1);
    for (const auto& s : states) {
        FockVector v = FockVector::basis(s);
        for (int n : {-1, 0, 1}) {
            compare_vectors(rep, "x-comp n=" + std::to_string(n) + " state=" + s.to_string(),
                            word_component(xp, {n}, v.scaled(c)),
                            word_component(xp, {n}, v).scaled(c));
        }
        compare_vectors(rep, "h state=" + s.to_string(), h.apply(v.scaled(c)),
                        h.apply(v).scaled(c));
    }
}

// ---- R6 componentwise ------------------------------------------------------

void check_r6(Report& rep, const RelationParams& p, const PiConfig& cfg) {
    std::vector<int> ms = p.modes_m.empty() ? default_int_modes(p.modes) : p.modes_m;
    std::vector<int> ns = p.modes_n.empty() ? default_int_modes(p.modes) : p.modes_n;
    auto states = param_states(p);
    const QScalar c = big_c();
    VertexWord xp = pi_x_word(p.i, +1, cfg);
    VertexWord xm = pi_x_word(p.i, -1, cfg);
    VertexWord up = pi_phi_word(p.i, +1, cfg);
    VertexWord vp = pi_phi_word(p.i, -1, cfg);
    long long displayed_mismatch = 0;
    for (int m : ms) {
        for (int n : ns) {
            const int k = m + n;
            for (const auto& s : states) {
                FockVector v = FockVector::basis(s);
                FockVector lhs = word_component(xp, {m}, word_component(xm, {n}, v)) -
                                 word_component(xm, {n}, word_component(xp, {m}, v));
                FockVector phi_plus = k >= 0 ? word_component(up, {k}, v) : FockVector();
                FockVector phi_minus = k <= 0 ? word_component(vp, {k}, v) : FockVector();
                FockVector rhs =
                    (phi_plus.scaled(qhalf(m - n)) - phi_minus.scaled(qhalf(n - m)))
                        .scaled(c);
                if (p.perturb && k == 0) rhs = rhs.scaled(QScalar(1 + p.perturb));
                std::ostringstream loc;
                loc << "m=" << m << " n=" << n << " state=" << s.to_string();
                compare_vectors(rep, loc.str(), lhs, rhs);
                // the q-power orientation of the displayed component relation
                FockVector rhs_disp =
                    (phi_plus.scaled(qhalf(n - m)) - phi_minus.scaled(qhalf(m - n)))
                        .scaled(c);
                if (!(lhs == rhs_disp)) ++displayed_mismatch;
            }
        }
    }
    if (displayed_mismatch == 0) {
        rep.note("displayed q-power orientation also exact");
    } else {
        std::ostringstream os;
        os << "series-consistent q-powers (q^{(m-n)c/2} on phi^+) verified; the displayed "
              "opposite orientation fails on "
           << displayed_mismatch << " instances";
        rep.note(os.str());
    }
}

// ---- quadratic Serre relations ---------------------------------------------

using UnitMultiset = std::map<std::pair<bool, int>, int>;

UnitMultiset to_multiset(const std::vector<Unit>& us) {
    UnitMultiset ms;
    for (const auto& u : us) ms[{u.neg, u.vexp}] += 1;
    return ms;
}

std::vector<Unit> from_multiset(const UnitMultiset& ms) {
    std::vector<Unit> out;
    for (const auto& [k, c] : ms)
        for (int r = 0; r < c; ++r) out.push_back(Unit{k.first, k.second});
    return out;
}

// Linear denominator factors (z + c w) of a kernel in x = w/z.
std::vector<Unit> kernel_denominator_zw(const std::vector<KernelFactor>& ks) {
    std::vector<Unit> out;
    for (const auto& f : ks) {
        Unit c = f.exponent > 0 ? f.scale : -f.scale;
        for (int r = 0; r < std::abs(f.exponent); ++r) out.push_back(c);
    }
    return out;
}

// Same, for a kernel in x = z/w, expressed as factors (z + c w).
std::vector<Unit> kernel_denominator_wz(const std::vector<KernelFactor>& ks) {
    std::vector<Unit> out;
    for (const auto& f : ks) {
        Unit c = f.exponent > 0 ? f.scale.inv() : -f.scale.inv();
        for (int r = 0; r < std::abs(f.exponent); ++r) out.push_back(c);
    }
    return out;
}

UnitMultiset multiset_difference(const UnitMultiset& a, const UnitMultiset& b) {
    UnitMultiset r = a;
    for (const auto& [k, c] : b) {
        auto it = r.find(k);
        if (it == r.end()) continue;
        it->second -= std::min(it->second, c);
        if (it->second == 0) r.erase(it);
    }
    return r;
}

void check_quadratic_serre(Report& rep, const RelationParams& p, const VertexWord& a_word,
                           const VertexWord& b_word, const std::vector<Unit>& p1,
                           const std::vector<Unit>& p2) {
    auto k12 = exchange_kernel(a_word, b_word);
    auto k21 = exchange_kernel(b_word, a_word);
    UnitMultiset den12 = to_multiset(kernel_denominator_zw(k12));
    UnitMultiset den21 = to_multiset(kernel_denominator_zw(k21));
    UnitMultiset boundary = multiset_difference(den12, to_multiset(p1));
    UnitMultiset boundary2 = multiset_difference(den21, to_multiset(p2));
    if (!(boundary == boundary2))
        rep.mismatch("boundary factors", "lhs/rhs clearance disagree",
                     "displayed prefactors are inconsistent");
    std::vector<Unit> bfac = from_multiset(boundary);

    std::vector<Unit> lhs_fac = p1, rhs_fac = p2;
    lhs_fac.insert(lhs_fac.end(), bfac.begin(), bfac.end());
    rhs_fac.insert(rhs_fac.end(), bfac.begin(), bfac.end());
    BiPoly lhs_poly = bipoly_from_linear_factors(lhs_fac);
    BiPoly rhs_poly = bipoly_from_linear_factors(rhs_fac);
    BiPoly disp_lhs = bipoly_from_linear_factors(p1);
    BiPoly disp_rhs = bipoly_from_linear_factors(p2);

    const int w = p.window;
    const int margin = static_cast<int>(lhs_fac.size());
    auto states = param_states(p);
    long long displayed_mismatch = 0;
    for (const auto& s : states) {
        FockVector v = FockVector::basis(s);
        Window2 ab = product_window(a_word, b_word, true, v, -w, w + margin, -w, w + margin);
        Window2 ba = product_window(a_word, b_word, false, v, -w, w + margin, -w, w + margin);
        Window2 lhs = window_apply_bipoly(lhs_poly, ab, -w, w, -w, w);
        Window2 rhs = window_apply_bipoly(rhs_poly, ba, -w, w, -w, w);
        for (int m = -w; m <= w; ++m)
            for (int n = -w; n <= w; ++n) {
                std::ostringstream loc;
                loc << "cell(" << m << "," << n << ") state=" << s.to_string();
                FockVector lv = lhs.cell(m, n);
                if (p.perturb && m == 0 && n == 0) lv += v.scaled(QScalar(p.perturb));
                compare_vectors(rep, loc.str(), lv, rhs.cell(m, n));
            }
        if (!bfac.empty()) {
            Window2 dl = window_apply_bipoly(disp_lhs, ab, -w, w, -w, w);
            Window2 dr = window_apply_bipoly(disp_rhs, ba, -w, w, -w, w);
            for (int m = -w; m <= w; ++m)
                for (int n = -w; n <= w; ++n)
                    if (!(dl.cell(m, n) == dr.cell(m, n))) ++displayed_mismatch;
        }
    }
    if (bfac.empty()) {
        rep.note("displayed prefactors clear all contraction poles; relation exact as written");
    } else {
        std::string names;
        for (const auto& u : bfac) names += " (z + (" + u.to_string() + ")w)";
        std::ostringstream os;
        os << "displayed prefactors leave uncleared pole(s); verified exactly after "
              "multiplying both sides by" << names << "; as-written form fails on "
           << displayed_mismatch << " window cells";
        rep.note(os.str());
    }
}

void check_serre(Report& rep, const RelationParams& p, RelationId id, const PiConfig& cfg) {
    const int s = p.sign;
    VertexWord aw, bw;
    std::vector<Unit> p1, p2;
    auto qp = [](int k) { return Unit::q_power(k); };
    switch (id) {
        case RelationId::S1:
            aw = bw = pi_x_word(p.i, s, cfg);
            p1 = {-qp(s), qp(-s)};
            p2 = {-qp(-s), qp(s)};
            break;
        case RelationId::S2:
            if (fold_color(p.i) == fold_color(p.j))
                throw std::domain_error("S2 requires i != j");
            aw = pi_x_word(p.i, s, cfg);
            bw = pi_x_word(p.j, s, cfg);
            p1 = {-qp(-1), qp(1)};
            p2 = {-qp(1), qp(-1)};
            break;
        case RelationId::S3:
            if (fold_color(p.i) == fold_color(p.j))
                throw std::domain_error("S3 requires i != j");
            aw = pi_x_word(p.i, s, cfg);
            bw = pi_x_word(p.j, -s, cfg);
            p1 = {-Unit::q_half_power(2), -Unit::q_half_power(2), Unit::q_half_power(-2),
                  Unit::q_half_power(-2)};
            p2 = {-Unit::q_half_power(-2), -Unit::q_half_power(-2), Unit::q_half_power(2),
                  Unit::q_half_power(2)};
            break;
        default:
            throw std::domain_error("check_serre: not a quadratic Serre id");
    }
    check_quadratic_serre(rep, p, aw, bw, p1, p2);
}

// ---- generating-series relations -------------------------------------------

// coefficients of F(c x) from those of F(x)
QSeries series_scale_argument(const QSeries& f, const Unit& c) {
    QSeries r = f;
    for (std::size_t k = 0; k < r.size(); ++k)
        r[k] *= QScalar::from_unit(c.pow(static_cast<long>(k)));
    return r;
}

void compare_series(Report& rep, const std::string& loc, const QSeries& lhs,
                    const QSeries& rhs) {
    for (std::size_t k = 0; k < lhs.size() && k < rhs.size(); ++k) {
        rep.count_cell();
        if (!(lhs[k] == rhs[k]))
            rep.mismatch(loc + " x^" + std::to_string(k), lhs[k].to_string(),
                         rhs[k].to_string());
    }
}

// Windowed identity A(z) B(w) = B(w) A(z) * K(w/z), K given by kernel factors.
void check_window_exchange_zw(Report& rep, const RelationParams& p, const VertexWord& a_word,
                              const VertexWord& b_word,
                              const std::vector<KernelFactor>& kernel) {
    const int w = p.window;
    QSeries ks = kernel_expand(kernel, 2 * w);
    auto states = param_states(p);
    for (const auto& st : states) {
        FockVector v = FockVector::basis(st);
        Window2 ab = product_window(a_word, b_word, true, v, -w, w, -w, w);
        Window2 ba = product_window(a_word, b_word, false, v, -w - 2 * w, w, -w, w + 2 * w);
        for (int m = -w; m <= w; ++m)
            for (int n = -w; n <= w; ++n) {
                FockVector rhs;
                for (int pp = 0; pp <= 2 * w; ++pp) {
                    if (ks[pp].is_zero()) continue;
                    rhs += ba.cell(m - pp, n + pp).scaled(ks[pp]);
                }
                std::ostringstream loc;
                loc << "cell(" << m << "," << n << ") state=" << st.to_string();
                compare_vectors(rep, loc.str(), ab.cell(m, n), rhs);
            }
    }
}

// Windowed identity A(z) B(w) = B(w) A(z) * K(z/w).
void check_window_exchange_wz(Report& rep, const RelationParams& p, const VertexWord& a_word,
                              const VertexWord& b_word,
                              const std::vector<KernelFactor>& kernel) {
    const int w = p.window;
    QSeries ks = kernel_expand(kernel, 2 * w);
    auto states = param_states(p);
    for (const auto& st : states) {
        FockVector v = FockVector::basis(st);
        Window2 ab = product_window(a_word, b_word, true, v, -w, w, -w, w);
        Window2 ba = product_window(a_word, b_word, false, v, -w, w + 2 * w, -w - 2 * w, w);
        for (int m = -w; m <= w; ++m)
            for (int n = -w; n <= w; ++n) {
                FockVector rhs;
                for (int pp = 0; pp <= 2 * w; ++pp) {
                    if (ks[pp].is_zero()) continue;
                    rhs += ba.cell(m + pp, n - pp).scaled(ks[pp]);
                }
                std::ostringstream loc;
                loc << "cell(" << m << "," << n << ") state=" << st.to_string();
                compare_vectors(rep, loc.str(), ab.cell(m, n), rhs);
            }
    }
}

void check_gs12(Report& rep, const RelationParams& p, const PiConfig& cfg) {
    VertexWord u = pi_phi_word(p.i, +1, cfg);
    VertexWord v = pi_phi_word(p.j, -1, cfg);
    auto kernel = exchange_kernel(u, v);
    const int g = std::abs(p.i - p.j) % 2;
    QSeries gplus = series_scale_argument(g_series(g, p.order), Unit::q_power(1));
    QSeries gminus = series_scale_argument(g_series(g, p.order), Unit::q_power(-1));
    QSeries expected = series_mul(gplus, series_inv(gminus, p.order), p.order);
    QSeries got = kernel_expand(kernel, p.order);
    if (p.perturb && !expected.empty()) expected[0] += QScalar(p.perturb);
    compare_series(rep, "kernel", got, expected);
    check_window_exchange_zw(rep, p, u, v, kernel);
}

void check_gs13(Report& rep, const RelationParams& p, const PiConfig& cfg) {
    for (int sgn : {+1, -1}) {
        VertexWord a = pi_phi_word(p.i, sgn, cfg);
        VertexWord b = pi_phi_word(p.j, sgn, cfg);
        auto kernel = sgn > 0 ? exchange_kernel(a, b) : exchange_kernel_creation_left(a, b);
        rep.count_cell();
        if (!kernel.empty())
            rep.mismatch(std::string("kernel phi^") + (sgn > 0 ? "+" : "-"),
                         "nontrivial exchange kernel", "1");
        const int w = p.window;
        auto states = param_states(p);
        for (const auto& st : states) {
            FockVector v = FockVector::basis(st);
            Window2 ab = product_window(a, b, true, v, -w, w, -w, w);
            Window2 ba = product_window(a, b, false, v, -w, w, -w, w);
            for (int m = -w; m <= w; ++m)
                for (int n = -w; n <= w; ++n) {
                    std::ostringstream loc;
                    loc << "sign=" << sgn << " cell(" << m << "," << n
                        << ") state=" << st.to_string();
                    compare_vectors(rep, loc.str(), ab.cell(m, n), ba.cell(m, n));
                }
        }
    }
}

void check_gs14(Report& rep, const RelationParams& p, const PiConfig& cfg) {
    VertexWord u = pi_phi_word(p.i, +1, cfg);
    VertexWord x = pi_x_word(p.j, p.sign, cfg);
    auto kernel = exchange_kernel(u, x);
    const int g = std::abs(p.i - p.j) % 2;
    QSeries gser = series_scale_argument(g_series(g, p.order),
                                         Unit::q_half_power(-p.sign));
    QSeries displayed = series_pow(gser, p.sign, p.order);
    QSeries inverse = series_pow(gser, -p.sign, p.order);
    QSeries got = kernel_expand(kernel, p.order);
    if (p.perturb && !inverse.empty()) inverse[0] += QScalar(p.perturb);
    bool matches_displayed = (got == displayed);
    compare_series(rep, "kernel vs G^{-s}", got, inverse);
    if (matches_displayed) rep.note("displayed G-power orientation holds");
    else
        rep.note("exchange kernel equals G_{|i-j|}(q^{-sc/2}w/z)^{-s}, the inverse of the "
                 "displayed power (matches the direct OPE computation)");
    if (p.i == 1 && p.j == 1 && p.sign > 0) {
        // (z+q^{3/2}w)/(z-q^{3/2}w) * (z-q^{-5/2}w)/(z+q^{-5/2}w)
        std::vector<KernelFactor> proof = {{Unit::q_half_power(3), -1},
                                           {Unit::q_half_power(-5), +1}};
        compare_series(rep, "proof-display factor", got, kernel_expand(proof, p.order));
    }
    check_window_exchange_zw(rep, p, u, x, kernel);
}

void check_gs15(Report& rep, const RelationParams& p, const PiConfig& cfg) {
    VertexWord v = pi_phi_word(p.i, -1, cfg);
    VertexWord x = pi_x_word(p.j, p.sign, cfg);
    auto kernel = exchange_kernel_creation_left(v, x);
    const int g = std::abs(p.i - p.j) % 2;
    QSeries gser = series_scale_argument(g_series(g, p.order),
                                         Unit::q_half_power(-p.sign));
    QSeries displayed = series_pow(gser, -p.sign, p.order);
    QSeries inverse = series_pow(gser, p.sign, p.order);
    QSeries got = kernel_expand(kernel, p.order);
    bool matches_displayed = (got == displayed);
    compare_series(rep, "kernel vs G^{s}", got, inverse);
    if (matches_displayed) rep.note("displayed G-power orientation holds");
    else
        rep.note("exchange kernel equals G_{|i-j|}(q^{-sc/2}z/w)^{s}, the inverse of the "
                 "displayed power (matches the direct OPE computation)");
    check_window_exchange_wz(rep, p, v, x, kernel);
}

void check_gs16(Report& rep, const RelationParams& p, const PiConfig& cfg) {
    const int w = p.window;
    VertexWord xp = pi_x_word(p.i, +1, cfg);
    VertexWord xm = pi_x_word(p.i, -1, cfg);
    QScalar c = big_c();
    if (p.perturb) c += QScalar(p.perturb);
    DeltaTerm ut{Unit::q_power(1),
                 word_scale_variable(pi_phi_word(p.i, +1, cfg), 0, Unit::q_half_power(1)),
                 DeltaKind::USeries};
    DeltaTerm vt{Unit::q_power(-1),
                 word_scale_variable(pi_phi_word(p.i, -1, cfg), 0, Unit::q_half_power(1)),
                 DeltaKind::VSeries};
    auto states = param_states(p);
    for (const auto& st : states) {
        FockVector v = FockVector::basis(st);
        Window2 zw = product_window(xp, xm, true, v, -w, w, -w, w);
        Window2 wz = product_window(xp, xm, false, v, -w, w, -w, w);
        Window2 lhs = zw - wz;
        Window2 rhs = (delta_window(ut, v, -w, w, -w, w) -
                       delta_window(vt, v, -w, w, -w, w))
                          .scaled(c);
        for (int m = -w; m <= w; ++m)
            for (int n = -w; n <= w; ++n) {
                std::ostringstream loc;
                loc << "cell(" << m << "," << n << ") state=" << st.to_string();
                compare_vectors(rep, loc.str(), lhs.cell(m, n), rhs.cell(m, n));
            }
    }
}

// ---- quartic Serre smoke ----------------------------------------------------

struct TriPoly {
    std::map<std::array<int, 3>, QScalar> terms;
};

TriPoly tripoly_mul(const TriPoly& a, const TriPoly& b) {
    TriPoly r;
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            std::array<int, 3> e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
            auto it = r.terms.find(e);
            if (it == r.terms.end()) r.terms.emplace(e, ca * cb);
            else it->second += ca * cb;
        }
    for (auto it = r.terms.begin(); it != r.terms.end();)
        it = it->second.is_zero() ? r.terms.erase(it) : std::next(it);
    return r;
}

// prod_{k<l} (z_k + q^{-2s} z_l)(z_l - q^{-2s} z_k)
TriPoly serre_prefactor(int sign) {
    QScalar qs = QScalar::q_power(-2 * sign);
    TriPoly p;
    p.terms[{0, 0, 0}] = QScalar(1);
    for (int k = 0; k < 3; ++k)
        for (int l = k + 1; l < 3; ++l) {
            TriPoly f1, f2;
            std::array<int, 3> ek{0, 0, 0}, el{0, 0, 0};
            ek[k] = 1;
            el[l] = 1;
            f1.terms[ek] = QScalar(1);
            f1.terms[el] = qs;
            f2.terms[el] = QScalar(1);
            f2.terms[ek] = -qs;
            p = tripoly_mul(p, f1);
            p = tripoly_mul(p, f2);
        }
    return p;
}

TriPoly tripoly_permute(const TriPoly& p, const std::array<int, 3>& perm) {
    TriPoly r;
    for (const auto& [e, c] : p.terms) {
        std::array<int, 3> ne{0, 0, 0};
        for (int i = 0; i < 3; ++i) ne[perm[i]] = e[i];
        auto it = r.terms.find(ne);
        if (it == r.terms.end()) r.terms.emplace(ne, c);
        else it->second += c;
    }
    return r;
}

}  // namespace

Report serre_quartic_smoke(int sign, int budget) {
    Report rep;
    rep.id = "S4";
    rep.params = std::string("sign=") + (sign > 0 ? "+" : "-") +
                 " budget=" + std::to_string(budget) + " state=vacuum";
    PiConfig cfg;  // validated conventions
    VertexWord e1 = pi_x_word(1, sign, cfg);
    VertexWord e0 = pi_x_word(0, sign, cfg);

    // orderings: E0(w) inserted at position r from the right among three E1's
    FockVector vac = FockVector::vacuum();
    std::map<std::array<int, 5>, FockVector> comp_cache;
    auto ordering_cell = [&](int r, int c1, int c2, int c3, int cw) -> const FockVector& {
        std::array<int, 5> key{r, c1, c2, c3, cw};
        auto it = comp_cache.find(key);
        if (it != comp_cache.end()) return it->second;
        // operators listed left to right; apply right to left
        std::vector<std::pair<const VertexWord*, int>> ops;
        std::vector<int> zc{c1, c2, c3};
        int zi = 0;
        for (int pos = 0; pos < 4; ++pos) {
            if (pos == 3 - r) ops.emplace_back(&e0, cw);
            else ops.emplace_back(&e1, zc[zi++]);
        }
        FockVector v = vac;
        for (int pos = 3; pos >= 0 && !v.is_zero(); --pos)
            v = word_component(*ops[pos].first, {ops[pos].second}, v);
        return comp_cache.emplace(key, std::move(v)).first->second;
    };

    static const std::array<std::array<int, 3>, 6> perms = {{
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
    }};
    TriPoly pref = serre_prefactor(sign);

    // cells with sum of |exponents| <= budget
    for (int n1 = -budget; n1 <= budget; ++n1)
        for (int n2 = -budget; n2 <= budget; ++n2)
            for (int n3 = -budget; n3 <= budget; ++n3)
                for (int nw = -budget; nw <= budget; ++nw) {
                    if (std::abs(n1) + std::abs(n2) + std::abs(n3) + std::abs(nw) > budget)
                        continue;
                    FockVector total;
                    for (const auto& perm : perms) {
                        TriPoly pp = tripoly_permute(pref, perm);
                        for (const auto& [e, c] : pp.terms)
                            for (int r = 0; r < 4; ++r)
                                total += ordering_cell(r, n1 + e[0], n2 + e[1],
                                                       n3 + e[2], nw)
                                             .scaled(c);
                    }
                    rep.count_cell();
                    if (!total.is_zero()) {
                        std::ostringstream loc;
                        loc << "cell(" << n1 << "," << n2 << "," << n3 << "," << nw << ")";
                        rep.mismatch(loc.str(), total.to_string(), "0");
                    }
                }
    return rep;
}

Report verify_relation(RelationId id, const RelationParams& p) {
    Report rep;
    rep.id = relation_name(id);
    rep.params = p.to_string();

    auto run_one = [&](Report& r, const PiConfig& cfg) {
        switch (id) {
            case RelationId::R1: check_hh(r, p, true); break;
            case RelationId::R2: check_hh(r, p, false); break;
            case RelationId::R3: check_hx(r, p, true); break;
            case RelationId::R4: check_hx(r, p, false); break;
            case RelationId::R5: check_central(r, p); break;
            case RelationId::R6: check_r6(r, p, cfg); break;
            case RelationId::S1:
            case RelationId::S2:
            case RelationId::S3: check_serre(r, p, id, cfg); break;
            case RelationId::S4: r.absorb(serre_quartic_smoke(p.sign, p.budget)); break;
            case RelationId::GS12: check_gs12(r, p, cfg); break;
            case RelationId::GS13: check_gs13(r, p, cfg); break;
            case RelationId::GS14: check_gs14(r, p, cfg); break;
            case RelationId::GS15: check_gs15(r, p, cfg); break;
            case RelationId::GS16: check_gs16(r, p, cfg); break;
        }
    };

    if (!p.all_configs) {
        run_one(rep, p.config);
        return rep;
    }

    std::vector<PiConfig> cfgs = {
        {UvSign::AsWritten, true},
        {UvSign::AsWritten, false},
        {UvSign::Negated, true},
        {UvSign::Negated, false},
    };
    bool any_pass = false;
    Report first_fail;
    for (const auto& cfg : cfgs) {
        Report sub;
        run_one(sub, cfg);
        rep.cells += sub.cells;
        std::ostringstream os;
        os << "config(" << cfg.to_string() << "): "
           << (sub.pass() ? "PASS" : "FAIL(" + std::to_string(sub.mismatches.size()) +
                                         " mismatches)");
        rep.note(os.str());
        if (sub.pass()) {
            any_pass = true;
            if (!sub.notes.empty()) rep.note(sub.notes);
        } else if (first_fail.mismatches.empty()) {
            first_fail = sub;
        }
    }
    if (!any_pass) {
        rep.note("no convention setting passes");
        for (const auto& m : first_fail.mismatches) rep.mismatches.push_back(m);
    }
    return rep;
}

}  // namespace qtor
