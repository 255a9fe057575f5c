#pragma once

#include <string>

#include "qtor/qscalar.hpp"

namespace qtor {

// Indices i in Z are folded modulo 2 onto the internal colors {1, 2}:
// odd i -> eps_1, even i -> eps_2 (so eps_0 = eps_2).
int fold_color(int i);

// Element of the rank-2 weight lattice P = Z eps_1 + Z eps_2.
struct Weight {
    int c1 = 0;
    int c2 = 0;

    static Weight eps(int i);  // folds the index
    Weight operator+(const Weight& o) const { return {c1 + o.c1, c2 + o.c2}; }
    Weight operator-(const Weight& o) const { return {c1 - o.c1, c2 - o.c2}; }
    Weight operator-() const { return {-c1, -c2}; }
    bool operator==(const Weight& o) const = default;
    bool is_zero() const { return c1 == 0 && c2 == 0; }
    std::string to_string() const;
};

// Element m * alpha_0 of the root lattice Q, alpha_0 = eps_1 - eps_2.
struct RootElt {
    int m = 0;
    Weight weight() const { return {m, -m}; }
    RootElt operator+(const RootElt& o) const { return {m + o.m}; }
    RootElt operator-() const { return {-m}; }
    bool operator==(const RootElt& o) const = default;
};

// (eps_i, eps_j) = delta_ij, extended bilinearly.
int bilinear(const Weight& a, const Weight& b);

// Bimultiplicative 2-cocycle on Q with eps(alpha_0, alpha_0) = -1; on a
// rank-1 lattice this forces eps(m a_0, n a_0) = (-1)^{mn}.
int cocycle(const RootElt& a, const RootElt& b);

// beta(0) e^alpha = (beta, alpha) e^alpha
int zero_mode(const Weight& b, const RootElt& lattice_point);

// mu^alpha e^beta = mu^{(alpha, beta)} e^beta; zero base rejected.
QScalar valuation(const QScalar& mu, const Weight& a, const RootElt& lattice_point);

}  // namespace qtor
