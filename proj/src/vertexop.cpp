#include "qtor/vertexop.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace qtor {

std::string ExpFactor::to_string() const {
    std::ostringstream os;
    os << "E" << (sign > 0 ? "+" : "-") << "(" << weight.to_string() << ", "
       << scale.to_string() << "*z" << var << ")";
    return os.str();
}

std::string VertexWord::to_string() const {
    std::ostringstream os;
    os << "(" << prefactor.to_string() << ") e^{" << translation.m << "a0}";
    for (const auto& f : factors) os << " " << f.to_string();
    return os.str();
}

VertexWord x_word(int i, int j, const Unit& a) {
    if (fold_color(i) == fold_color(j))
        throw std::domain_error("x_word: indices must be distinct mod 2");
    Weight wi = Weight::eps(i), wj = Weight::eps(j);
    Weight diff = wi - wj;
    VertexWord w;
    w.translation = RootElt{diff.c1};
    w.factors = {
        ExpFactor{-1, wi, Unit::one(), 0},
        ExpFactor{-1, -wj, a * Unit::q_power(i - j), 0},
        ExpFactor{+1, wi, Unit::one(), 0},
        ExpFactor{+1, -wj, a * Unit::q_power(j - i), 0},
    };
    return w;
}

VertexWord u_word(int i, int j, const Unit& a) {
    if (fold_color(i) == fold_color(j))
        throw std::domain_error("u_word: indices must be distinct mod 2");
    const int t = j - i;
    Weight wi = Weight::eps(i), wj = Weight::eps(j);
    VertexWord w;
    w.prefactor = QScalar(-1);
    w.factors = {
        ExpFactor{+1, -wi, Unit::q_half_power(-3 * t), 0},
        ExpFactor{+1, wi, Unit::q_half_power(t), 0},
        ExpFactor{+1, wj, a * Unit::q_half_power(-t), 0},
        ExpFactor{+1, -wj, a * Unit::q_half_power(3 * t), 0},
    };
    return w;
}

VertexWord v_word(int i, int j, const Unit& a) {
    if (fold_color(i) == fold_color(j))
        throw std::domain_error("v_word: indices must be distinct mod 2");
    const int t = j - i;
    Weight wi = Weight::eps(i), wj = Weight::eps(j);
    VertexWord w;
    w.prefactor = QScalar(-1);
    w.factors = {
        ExpFactor{-1, wi, Unit::q_half_power(-t), 0},
        ExpFactor{-1, -wi, Unit::q_half_power(3 * t), 0},
        ExpFactor{-1, wj, a.inv() * Unit::q_half_power(t), 0},
        ExpFactor{-1, -wj, a.inv() * Unit::q_half_power(-3 * t), 0},
    };
    return w;
}

VertexWord word_scale_variable(const VertexWord& w, int var, const Unit& c) {
    VertexWord r = w;
    for (auto& f : r.factors)
        if (f.var == var) f.scale = f.scale * c;
    return r;
}

VertexWord word_merge_normal_ordered(const VertexWord& w1, const VertexWord& w2) {
    VertexWord r;
    int sign = cocycle(w1.translation, w2.translation);
    r.prefactor = w1.prefactor * w2.prefactor * QScalar(sign);
    r.translation = w1.translation + w2.translation;
    r.nvars = 2;
    for (const auto& f : w1.factors)
        if (f.sign < 0) r.factors.push_back(f);
    for (const auto& f : w2.factors)
        if (f.sign < 0) r.factors.push_back(ExpFactor{f.sign, f.weight, f.scale, 1});
    for (const auto& f : w1.factors)
        if (f.sign > 0) r.factors.push_back(f);
    for (const auto& f : w2.factors)
        if (f.sign > 0) r.factors.push_back(ExpFactor{f.sign, f.weight, f.scale, 1});
    return r;
}

namespace {

bool factor_less(const ExpFactor& a, const ExpFactor& b) {
    auto key = [](const ExpFactor& f) {
        return std::tuple(-f.sign, f.var, f.scale.neg, f.scale.vexp, f.weight.c1, f.weight.c2);
    };
    return key(a) < key(b);
}

}  // namespace

VertexWord word_simplify(const VertexWord& w) {
    std::map<std::tuple<int, int, bool, int>, Weight> grouped;
    for (const auto& f : w.factors) {
        auto key = std::tuple(-f.sign, f.var, f.scale.neg, f.scale.vexp);
        auto it = grouped.find(key);
        if (it == grouped.end()) grouped.emplace(key, f.weight);
        else it->second = it->second + f.weight;
    }
    VertexWord r;
    r.prefactor = w.prefactor;
    r.translation = w.translation;
    r.nvars = w.nvars;
    for (const auto& [key, weight] : grouped) {
        if (weight.is_zero()) continue;
        auto [negsign, var, sneg, svexp] = key;
        r.factors.push_back(ExpFactor{-negsign, weight, Unit{sneg, svexp}, var});
    }
    std::sort(r.factors.begin(), r.factors.end(), factor_less);
    return r;
}

// ---------------------------------------------------------------------------
// component machinery

namespace {

// Operator monomial from the order-k expansion of one exponential factor.
struct ExpTerm {
    QScalar coeff;
    std::vector<std::array<int, 3>> ops;  // (color, n, power), n > 0
};

struct FactorKey {
    int sign, c1, c2, k;
    bool sneg;
    int svexp;
    auto operator<=>(const FactorKey&) const = default;
};

void build_terms(const ExpFactor& f, const std::vector<std::pair<int, int>>& partition,
                 std::vector<ExpTerm>& out) {
    // coefficient prod over parts (n, m): ((sign_sigma * 2 / n)^m / m!) * s^{-sign*n*m}
    // with the weight power split binomially over the two colors.
    std::vector<ExpTerm> acc(1);
    acc[0].coeff = QScalar(1);
    for (const auto& [n, m] : partition) {
        mpz_class two_m = 1;
        mpz_mul_2exp(two_m.get_mpz_t(), two_m.get_mpz_t(), m);  // 2^m
        mpz_class denom = 1;
        mpz_class nz(n);
        for (int r = 0; r < m; ++r) denom *= nz;
        mpz_class fact;
        mpz_fac_ui(fact.get_mpz_t(), m);
        denom *= fact;
        QScalar base = QScalar(Laurent(two_m), Laurent(denom));
        if (f.sign > 0 && (m % 2 != 0)) base = -base;  // E_+ carries -2/n
        Unit spow = f.scale.pow(-static_cast<long>(f.sign) * n * m);
        base *= QScalar::from_unit(spow);

        std::vector<ExpTerm> next;
        for (int a = 0; a <= m; ++a) {
            int b = m - a;
            if ((f.weight.c1 == 0 && a > 0) || (f.weight.c2 == 0 && b > 0)) continue;
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), m, a);
            long wpow = 1;
            for (int r = 0; r < a; ++r) wpow *= f.weight.c1;
            for (int r = 0; r < b; ++r) wpow *= f.weight.c2;
            QScalar c = base * QScalar(Laurent(binom * wpow));
            for (const auto& t : acc) {
                ExpTerm nt = t;
                nt.coeff *= c;
                if (a > 0) nt.ops.push_back({1, n, a});
                if (b > 0) nt.ops.push_back({2, n, b});
                next.push_back(std::move(nt));
            }
        }
        acc = std::move(next);
    }
    for (auto& t : acc) out.push_back(std::move(t));
}

void partitions_into_odd(int k, int max_part, std::vector<std::pair<int, int>>& cur,
                         const ExpFactor& f, std::vector<ExpTerm>& out) {
    if (k == 0) {
        build_terms(f, cur, out);
        return;
    }
    int n0 = std::min(max_part, k);
    if (n0 % 2 == 0) --n0;
    for (int n = n0; n >= 1; n -= 2) {
        int max_m = k / n;
        for (int m = 1; m <= max_m; ++m) {
            cur.emplace_back(n, m);
            partitions_into_odd(k - n * m, n - 2, cur, f, out);
            cur.pop_back();
        }
    }
}

const std::vector<ExpTerm>& factor_terms(const ExpFactor& f, int k) {
    thread_local std::map<FactorKey, std::vector<ExpTerm>> cache;
    FactorKey key{f.sign, f.weight.c1, f.weight.c2, k, f.scale.neg, f.scale.vexp};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<ExpTerm> terms;
    if (k == 0) {
        terms.emplace_back();
        terms.back().coeff = QScalar(1);
    } else {
        std::vector<std::pair<int, int>> cur;
        partitions_into_odd(k, k, cur, f, terms);
    }
    return cache.emplace(key, std::move(terms)).first->second;
}

FockVector apply_annihilation_term(const ExpTerm& t, const FockVector& vec) {
    FockVector out = vec;
    for (const auto& [color, n, pow] : t.ops) {
        for (int r = 0; r < pow; ++r) {
            out = heisenberg_apply(color, n, out);
            if (out.is_zero()) return out;
        }
    }
    return out.scaled(t.coeff);
}

FockVector apply_creation_term(const ExpTerm& t, const FockVector& vec) {
    FockVector out;
    for (const auto& [s, c] : vec.terms()) {
        BasisState ns = s;
        for (const auto& [color, n, pow] : t.ops)
            for (int r = 0; r < pow; ++r) ns = ns.with_mode(color, n);
        out.add(ns, c * t.coeff);
    }
    return out;
}

FockVector apply_factor_order(const ExpFactor& f, int k, const FockVector& vec) {
    FockVector out;
    for (const auto& t : factor_terms(f, k)) {
        if (f.sign > 0) out += apply_annihilation_term(t, vec);
        else out += apply_creation_term(t, vec);
    }
    return out;
}

}  // namespace

FockVector word_component(const VertexWord& w, const std::vector<int>& comps,
                          const FockVector& vec) {
    if (static_cast<int>(comps.size()) != w.nvars)
        throw std::domain_error("word_component: component count != nvars");
    if (vec.is_zero()) return FockVector();

    // annihilation phase; entries keyed by total annihilated exponent per var
    std::map<std::vector<int>, FockVector> entries;
    entries.emplace(std::vector<int>(w.nvars, 0), vec);
    for (const auto& f : w.factors) {
        if (f.sign < 0) continue;
        std::map<std::vector<int>, FockVector> next;
        for (const auto& [spent, v] : entries) {
            int dmax = v.max_degree();
            for (int k = 0; k <= dmax; ++k) {
                FockVector nv = apply_factor_order(f, k, v);
                if (nv.is_zero()) continue;
                std::vector<int> ns = spent;
                ns[f.var] += k;
                auto it = next.find(ns);
                if (it == next.end()) next.emplace(std::move(ns), std::move(nv));
                else it->second += nv;
            }
        }
        entries = std::move(next);
    }

    // per-variable creation exponent still needed: E-minus total = E-plus total - comps
    std::vector<int> remaining_minus(w.nvars, 0);
    for (const auto& f : w.factors)
        if (f.sign < 0) remaining_minus[f.var] += 1;

    std::map<std::vector<int>, FockVector> needs;
    for (auto& [spent, v] : entries) {
        std::vector<int> need(w.nvars);
        bool ok = true;
        for (int t = 0; t < w.nvars; ++t) {
            need[t] = spent[t] - comps[t];
            if (need[t] < 0 || (remaining_minus[t] == 0 && need[t] != 0)) { ok = false; break; }
        }
        if (!ok) continue;
        auto it = needs.find(need);
        if (it == needs.end()) needs.emplace(std::move(need), std::move(v));
        else it->second += v;
    }

    std::vector<int> left = remaining_minus;
    for (const auto& f : w.factors) {
        if (f.sign > 0) continue;
        left[f.var] -= 1;
        std::map<std::vector<int>, FockVector> next;
        for (const auto& [need, v] : needs) {
            int klo = (left[f.var] == 0) ? need[f.var] : 0;
            for (int k = klo; k <= need[f.var]; ++k) {
                FockVector nv = apply_factor_order(f, k, v);
                if (nv.is_zero()) continue;
                std::vector<int> nn = need;
                nn[f.var] -= k;
                auto it = next.find(nn);
                if (it == next.end()) next.emplace(std::move(nn), std::move(nv));
                else it->second += nv;
            }
        }
        needs = std::move(next);
    }

    FockVector out;
    for (const auto& [need, v] : needs) {
        bool zero = std::all_of(need.begin(), need.end(), [](int x) { return x == 0; });
        if (zero) out += v;
    }
    if (out.is_zero()) return out;
    if (w.translation.m != 0) out = group_translate(w.translation, out);
    if (!w.prefactor.is_one()) out = out.scaled(w.prefactor);
    return out;
}

FockVector e_component(const ExpFactor& f, int k, const FockVector& vec) {
    VertexWord w;
    w.factors = {f};
    return word_component(w, {-k}, vec);
}

FockVector x_component(int i, int j, const Unit& a, int n, const FockVector& vec) {
    return word_component(x_word(i, j, a), {n}, vec);
}

FockVector uv_component(UvKind kind, int i, int j, const Unit& a, int n,
                        const FockVector& vec) {
    if (n < 0) throw std::domain_error("uv_component: negative component index");
    if (kind == UvKind::U) return word_component(u_word(i, j, a), {n}, vec);
    return word_component(v_word(i, j, a), {-n}, vec);
}

FockVector normal_ordered_component(const VertexWord& w1, const VertexWord& w2,
                                    int m, int n, const FockVector& vec) {
    return word_component(word_merge_normal_ordered(w1, w2), {m, n}, vec);
}

VertexWord specialize_limit(LimitKind kind, int i, int j, const Unit& a1, const Unit& a2) {
    if (fold_color(i) == fold_color(j))
        throw std::domain_error("specialize_limit: i = j");
    if (!(a1 * a2).is_one())
        throw std::domain_error("specialize_limit: requires a1 a2 = 1");
    const int t = j - i;
    VertexWord merged = word_merge_normal_ordered(x_word(i, j, a1), x_word(j, i, a2));

    VertexWord expected;
    VertexWord subst = merged;
    if (kind == LimitKind::ULimit) {
        // z1 -> a2 q^{j-i} z2
        Unit c = a2 * Unit::q_power(t);
        for (auto& f : subst.factors) {
            if (f.var == 0) { f.scale = f.scale * c; f.var = 1; }
        }
        expected = word_scale_variable(u_word(i, j, a2.inv()), 0, a2 * Unit::q_half_power(t));
    } else {
        // z2 -> a1 q^{j-i} z1
        Unit c = a1 * Unit::q_power(t);
        for (auto& f : subst.factors) {
            if (f.var == 1) { f.scale = f.scale * c; f.var = 0; }
        }
        expected = word_scale_variable(v_word(i, j, a1.inv()), 0, Unit::q_half_power(t));
    }
    for (auto& f : subst.factors) f.var = 0;
    subst.nvars = 1;
    VertexWord got = word_simplify(subst);
    VertexWord want = word_simplify(expected);
    if (!(got == want))
        throw std::domain_error("specialize_limit: cancellation failed;\n got  " +
                                got.to_string() + "\n want " + want.to_string());
    return got;
}

std::vector<KernelFactor> contraction_kernel(int i, int j, const Unit& a1,
                                             int k, int l, const Unit& a2) {
    auto d = [](int x, int y) { return fold_color(x) == fold_color(y) ? 1 : 0; };
    std::vector<KernelFactor> out;
    auto push = [&out](const Unit& s, int e) {
        if (e != 0) out.push_back(KernelFactor{s, e});
    };
    push(Unit::one(), d(i, k));
    push(a2 * Unit::q_power(k - l), -d(i, l));
    push(a1.inv() * a2 * Unit::q_power(k + i - 2 * j), d(j, l));
    push(a1.inv() * Unit::q_power(i - j), -d(j, k));
    return out;
}

namespace {

void merge_kernel(std::vector<KernelFactor>& acc, const Unit& s, int e) {
    if (e == 0) return;
    for (auto& f : acc) {
        if (f.scale == s) {
            f.exponent += e;
            return;
        }
    }
    acc.push_back(KernelFactor{s, e});
}

}  // namespace

std::vector<KernelFactor> exchange_kernel(const VertexWord& left, const VertexWord& right) {
    std::vector<KernelFactor> out;
    for (const auto& fa : left.factors) {
        if (fa.sign <= 0) continue;
        for (const auto& fb : right.factors) {
            if (fb.sign >= 0) continue;
            merge_kernel(out, fb.scale * fa.scale.inv(), bilinear(fa.weight, fb.weight));
        }
    }
    std::erase_if(out, [](const KernelFactor& f) { return f.exponent == 0; });
    return out;
}

std::vector<KernelFactor> exchange_kernel_creation_left(const VertexWord& left,
                                                        const VertexWord& right) {
    std::vector<KernelFactor> out;
    for (const auto& fa : left.factors) {
        if (fa.sign >= 0) continue;
        for (const auto& fb : right.factors) {
            if (fb.sign <= 0) continue;
            merge_kernel(out, fa.scale * fb.scale.inv(), -bilinear(fa.weight, fb.weight));
        }
    }
    std::erase_if(out, [](const KernelFactor& f) { return f.exponent == 0; });
    return out;
}

QSeries kernel_expand(const std::vector<KernelFactor>& kernel, int order) {
    QSeries r(order + 1, QScalar(0));
    r[0] = QScalar(1);
    for (const auto& f : kernel)
        r = series_mul(r, series_signed_ratio(f.scale, f.exponent, order), order);
    return r;
}

}  // namespace qtor
