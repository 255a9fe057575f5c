#include "qtor/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qtor {

void Laurent::prune() {
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                [](const auto& t) { return t.second == 0; }),
                 terms_.end());
}

int Laurent::low_exp() const {
    if (is_zero()) throw std::domain_error("Laurent::low_exp on zero");
    return terms_.front().first;
}

int Laurent::high_exp() const {
    if (is_zero()) throw std::domain_error("Laurent::high_exp on zero");
    return terms_.back().first;
}

mpz_class Laurent::coeff(int exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const auto& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == exp) return it->second;
    return 0;
}

Laurent Laurent::operator-() const {
    Laurent r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

Laurent Laurent::operator+(const Laurent& o) const {
    Laurent r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin(), b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            r.terms_.push_back(*a++);
        } else if (a == terms_.end() || b->first < a->first) {
            r.terms_.push_back(*b++);
        } else {
            mpz_class c = a->second + b->second;
            if (c != 0) r.terms_.emplace_back(a->first, c);
            ++a; ++b;
        }
    }
    return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
    if (is_zero() || o.is_zero()) return Laurent();
    std::map<int, mpz_class> acc;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_)
            acc[ea + eb] += ca * cb;
    Laurent r;
    r.terms_.assign(acc.begin(), acc.end());
    r.prune();
    return r;
}

Laurent Laurent::scaled(const mpz_class& c, int exp) const {
    if (c == 0) return Laurent();
    Laurent r;
    r.terms_.reserve(terms_.size());
    for (const auto& [e, co] : terms_) r.terms_.emplace_back(e + exp, co * c);
    return r;
}

Laurent Laurent::substituted_inverse() const {
    Laurent r;
    r.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        r.terms_.emplace_back(-it->first, it->second);
    return r;
}

mpz_class Laurent::content() const {
    mpz_class g = 0;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Laurent Laurent::divexact(const Laurent& d) const {
    if (d.is_zero()) throw std::domain_error("Laurent::divexact by zero");
    if (is_zero()) return Laurent();
    Laurent rem = *this;
    Laurent quot;
    const int dd = d.high_exp();
    const mpz_class& dl = d.terms_.back().second;
    while (!rem.is_zero()) {
        int rd = rem.high_exp();
        mpz_class rl = rem.terms_.back().second;
        if (!mpz_divisible_p(rl.get_mpz_t(), dl.get_mpz_t()))
            throw std::domain_error("Laurent::divexact: not exact");
        mpz_class t;
        mpz_divexact(t.get_mpz_t(), rl.get_mpz_t(), dl.get_mpz_t());
        Laurent piece = Laurent::monomial(t, rd - dd);
        quot += piece;
        rem -= piece * d;
        if (!rem.is_zero() && rem.high_exp() >= rd)
            throw std::domain_error("Laurent::divexact: no progress");
    }
    return quot;
}

namespace {

// Primitive part with positive leading coefficient.
Laurent primitive(const Laurent& p) {
    if (p.is_zero()) return p;
    mpz_class c = p.content();
    Laurent r = p.divexact(Laurent(c));
    if (r.terms().back().second < 0) r = -r;
    return r;
}

// Pseudo-remainder of a by b (deg a >= deg b expected), all exponents >= 0.
Laurent pseudo_rem(Laurent a, const Laurent& b) {
    const int db = b.high_exp();
    const mpz_class lb = b.terms().back().second;
    while (!a.is_zero() && a.high_exp() >= db) {
        int da = a.high_exp();
        mpz_class la = a.terms().back().second;
        a = a.scaled(lb, 0) - b.scaled(la, da - db);
    }
    return a;
}

}  // namespace

Laurent Laurent::gcd(const Laurent& a, const Laurent& b) {
    if (a.is_zero() && b.is_zero()) return Laurent();
    if (a.is_zero()) return primitive(b.shifted(-b.low_exp())).scaled(b.content(), 0);
    if (b.is_zero()) return primitive(a.shifted(-a.low_exp())).scaled(a.content(), 0);

    mpz_class cg;
    mpz_gcd(cg.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());

    Laurent x = primitive(a.shifted(-a.low_exp()));
    Laurent y = primitive(b.shifted(-b.low_exp()));
    if (x.high_exp() < y.high_exp()) std::swap(x, y);
    while (!y.is_zero()) {
        Laurent r = primitive(pseudo_rem(x, y));
        if (!r.is_zero()) r = r.shifted(-r.low_exp());
        x = y;
        y = r;
    }
    return primitive(x).scaled(cg, 0);
}

std::string Laurent::to_q_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        mpz_class ac = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? "-" : "+");
        }
        bool unit_coeff = (ac == 1) && e != 0;
        if (!unit_coeff) os << ac.get_str();
        if (e != 0) {
            os << "q";
            if (e != 2) {
                os << "^";
                if (e % 2 == 0) os << e / 2;
                else os << e << "/2";
            }
        }
    }
    return os.str();
}

}  // namespace qtor
