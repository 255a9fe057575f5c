#include "qtor/fock.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qtor {

int BasisState::degree() const {
    int d = 0;
    for (const auto& m : modes) d += m.n * m.mult;
    return d;
}

std::string BasisState::to_string() const {
    std::ostringstream os;
    for (const auto& m : modes) {
        os << "e" << m.color << "(-" << m.n << ")";
        if (m.mult > 1) os << "^" << m.mult;
        os << " ";
    }
    os << "|" << lattice << ">";
    return os.str();
}

BasisState BasisState::with_mode(int color, int n) const {
    BasisState r = *this;
    auto it = std::lower_bound(r.modes.begin(), r.modes.end(), Mode{color, n, 0},
                               [](const Mode& a, const Mode& b) {
                                   return std::pair(a.color, a.n) < std::pair(b.color, b.n);
                               });
    if (it != r.modes.end() && it->color == color && it->n == n) {
        it->mult += 1;
    } else {
        r.modes.insert(it, Mode{color, n, 1});
    }
    return r;
}

int BasisState::multiplicity(int color, int n) const {
    for (const auto& m : modes)
        if (m.color == color && m.n == n) return m.mult;
    return 0;
}

BasisState BasisState::without_one(int color, int n) const {
    BasisState r = *this;
    for (auto it = r.modes.begin(); it != r.modes.end(); ++it) {
        if (it->color == color && it->n == n) {
            if (--it->mult == 0) r.modes.erase(it);
            return r;
        }
    }
    throw std::domain_error("BasisState::without_one: mode absent");
}

FockVector FockVector::vacuum() { return basis(BasisState{}); }

FockVector FockVector::basis(const BasisState& s) {
    FockVector v;
    v.terms_[s] = QScalar(1);
    return v;
}

void FockVector::add(const BasisState& s, const QScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(s);
    if (it == terms_.end()) {
        terms_.emplace(s, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FockVector FockVector::operator+(const FockVector& o) const {
    FockVector r = *this;
    r += o;
    return r;
}

FockVector& FockVector::operator+=(const FockVector& o) {
    for (const auto& [s, c] : o.terms_) add(s, c);
    return *this;
}

FockVector FockVector::operator-(const FockVector& o) const {
    FockVector r = *this;
    for (const auto& [s, c] : o.terms_) r.add(s, -c);
    return r;
}

FockVector FockVector::operator-() const {
    FockVector r;
    for (const auto& [s, c] : terms_) r.terms_.emplace(s, -c);
    return r;
}

FockVector FockVector::scaled(const QScalar& c) const {
    if (c.is_zero()) return FockVector();
    FockVector r;
    for (const auto& [s, co] : terms_) r.terms_.emplace(s, co * c);
    return r;
}

std::vector<int> FockVector::degrees() const {
    std::set<int> ds;
    for (const auto& [s, c] : terms_) ds.insert(s.degree());
    return {ds.begin(), ds.end()};
}

int FockVector::max_degree() const {
    int d = -1;
    for (const auto& [s, c] : terms_) d = std::max(d, s.degree());
    return d;
}

std::string FockVector::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ") " << s.to_string();
    }
    return os.str();
}

FockVector heisenberg_apply(int color, int n, const FockVector& vec) {
    if (n == 0 || n % 2 == 0)
        throw std::domain_error("heisenberg_apply: mode index must be odd and nonzero");
    if (color != 1 && color != 2)
        throw std::domain_error("heisenberg_apply: color must be 1 or 2");
    FockVector out;
    if (n < 0) {
        for (const auto& [s, c] : vec.terms()) out.add(s.with_mode(color, -n), c);
    } else {
        const QScalar half_n = QScalar::rational(n, 2);
        for (const auto& [s, c] : vec.terms()) {
            int mult = s.multiplicity(color, n);
            if (mult == 0) continue;
            out.add(s.without_one(color, n), c * half_n * QScalar(mult));
        }
    }
    return out;
}

FockVector group_translate(const RootElt& a, const FockVector& vec) {
    if (a.m == 0) return vec;
    FockVector out;
    for (const auto& [s, c] : vec.terms()) {
        int sign = cocycle(a, RootElt{s.lattice});
        BasisState t = s;
        t.lattice += a.m;
        out.add(t, sign < 0 ? -c : c);
    }
    return out;
}

namespace {

// Multisets of modes in nondecreasing (color, n) order; equal picks merge.
void enumerate_modes(int budget, int min_color, int min_n, BasisState& cur,
                     std::vector<BasisState>& out) {
    out.push_back(cur);
    for (int color = min_color; color <= 2; ++color) {
        for (int n = (color == min_color ? min_n : 1); n <= budget; n += 2) {
            bool merged = !cur.modes.empty() && cur.modes.back().color == color &&
                          cur.modes.back().n == n;
            if (merged) cur.modes.back().mult += 1;
            else cur.modes.push_back(Mode{color, n, 1});
            enumerate_modes(budget - n, color, n, cur, out);
            if (merged) cur.modes.back().mult -= 1;
            else cur.modes.pop_back();
        }
    }
}

}  // namespace

std::vector<BasisState> enumerate_basis(int maxdeg, int lattice_range) {
    if (maxdeg < 0) throw std::domain_error("enumerate_basis: negative maxdeg");
    std::vector<BasisState> mode_parts;
    BasisState cur;
    enumerate_modes(maxdeg, 1, 1, cur, mode_parts);

    std::vector<BasisState> out;
    out.reserve(mode_parts.size() * (2 * lattice_range + 1));
    for (const auto& mp : mode_parts) {
        for (int l = -lattice_range; l <= lattice_range; ++l) {
            BasisState s = mp;
            s.lattice = l;
            out.push_back(s);
        }
    }
    std::sort(out.begin(), out.end(), [](const BasisState& a, const BasisState& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a < b;
    });
    return out;
}

}  // namespace qtor
