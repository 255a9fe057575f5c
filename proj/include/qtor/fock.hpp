#pragma once

#include <map>
#include <string>
#include <vector>

#include "qtor/lattice.hpp"
#include "qtor/qscalar.hpp"

namespace qtor {

// One creation mode eps_color(-n) with multiplicity; n positive odd.
struct Mode {
    int color;  // 1 or 2
    int n;      // positive odd
    int mult;   // >= 1
    auto operator<=>(const Mode&) const = default;
};

// Basis vector of V_Q = S(H^-) (x) C[Q]: a multiset of creation modes in
// canonical sorted order, tensored with the group-algebra element e^{m alpha_0}.
struct BasisState {
    int lattice = 0;
    std::vector<Mode> modes;  // sorted by (color, n), merged, mult >= 1

    int degree() const;
    auto operator<=>(const BasisState&) const = default;
    std::string to_string() const;

    // Returns a copy with eps_color(-n) applied once more.
    BasisState with_mode(int color, int n) const;
    // Multiplicity of the mode (color, n); 0 if absent.
    int multiplicity(int color, int n) const;
    // Returns a copy with one copy of (color, n) removed; mult must be >= 1.
    BasisState without_one(int color, int n) const;
};

// Finite exact linear combination of basis states.
class FockVector {
public:
    FockVector() = default;
    static FockVector vacuum();
    static FockVector basis(const BasisState& s);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<BasisState, QScalar>& terms() const { return terms_; }

    void add(const BasisState& s, const QScalar& c);

    FockVector operator+(const FockVector& o) const;
    FockVector operator-(const FockVector& o) const;
    FockVector operator-() const;
    FockVector scaled(const QScalar& c) const;
    FockVector& operator+=(const FockVector& o);

    bool operator==(const FockVector& o) const { return terms_ == o.terms_; }
    bool operator!=(const FockVector& o) const { return !(*this == o); }

    // Set of degrees of the basis states present.
    std::vector<int> degrees() const;
    int max_degree() const;  // -1 for the zero vector

    std::string to_string() const;

private:
    std::map<BasisState, QScalar> terms_;
};

// Action of eps_i(n): n < 0 creates, n > 0 annihilates via
// [eps_i(m), eps_j(n)] = (m/2)(eps_i, eps_j) delta_{m,-n}.
// Even or zero n is rejected (only odd modes exist).
FockVector heisenberg_apply(int color, int n, const FockVector& vec);

// e^a e^beta = cocycle(a, beta) e^{a+beta} on each term.
FockVector group_translate(const RootElt& a, const FockVector& vec);

// All basis states with degree <= maxdeg and |lattice| <= lattice_range,
// ordered by (degree, state order).
std::vector<BasisState> enumerate_basis(int maxdeg, int lattice_range);

}  // namespace qtor
