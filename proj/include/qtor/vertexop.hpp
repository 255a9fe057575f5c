#pragma once

#include <string>
#include <vector>

#include "qtor/fock.hpp"
#include "qtor/lattice.hpp"
#include "qtor/qscalar.hpp"

namespace qtor {

// One exponential factor E_{±}(weight, scale * z_var).
// sign = +1 is the annihilation side E_+ (powers z^{-n}),
// sign = -1 the creation side E_- (powers z^{+n}).
struct ExpFactor {
    int sign = 1;
    Weight weight;
    Unit scale = Unit::one();
    int var = 0;

    bool operator==(const ExpFactor&) const = default;
    std::string to_string() const;
};

// Cocycle-signed lattice translation followed by exponential factors, stored
// normal-ordered: all E_- factors precede all E_+ factors. Components of any
// fixed multi-exponent applied to a fixed vector are finite exact sums.
struct VertexWord {
    QScalar prefactor = QScalar(1);
    RootElt translation{0};
    std::vector<ExpFactor> factors;
    int nvars = 1;

    bool operator==(const VertexWord&) const = default;
    std::string to_string() const;
};

// X_{ij}(a, z) of the Fock representation; i != j (mod 2) required.
VertexWord x_word(int i, int j, const Unit& a);

// u_{ij}(a, z) (annihilation half) and v_{ij}(a, z) (creation half), with
// their global -1 prefactor.
VertexWord u_word(int i, int j, const Unit& a);
VertexWord v_word(int i, int j, const Unit& a);

// Substitute z_var -> c * z_var.
VertexWord word_scale_variable(const VertexWord& w, int var, const Unit& c);

// Normal-ordered product :w1(z_0) w2(z_1):, cocycle sign applied once.
VertexWord word_merge_normal_ordered(const VertexWord& w1, const VertexWord& w2);

// Canonical form: factors with equal (sign, var, scale) merged by adding
// weights, zero weights dropped, factors sorted.
VertexWord word_simplify(const VertexWord& w);

// Exact coefficient of prod_v z_v^{-comps[v]} of the normal-ordered word
// applied to vec.
FockVector word_component(const VertexWord& w, const std::vector<int>& comps,
                          const FockVector& vec);

// Coefficient of z^{+k} in E_{±}(weight, scale * z) applied to vec.
FockVector e_component(const ExpFactor& f, int k, const FockVector& vec);

// Coefficient of z^{-n} in X_{ij}(a, z) applied to vec.
FockVector x_component(int i, int j, const Unit& a, int n, const FockVector& vec);

enum class UvKind { U, V };

// Component n >= 0 of u_{ij} (coefficient of z^{-n}) or v_{ij} (of z^{+n}).
FockVector uv_component(UvKind kind, int i, int j, const Unit& a, int n,
                        const FockVector& vec);

// Coefficient of z_1^{-m} z_2^{-n} of :w1 w2: applied to vec.
FockVector normal_ordered_component(const VertexWord& w1, const VertexWord& w2,
                                    int m, int n, const FockVector& vec);

enum class LimitKind { ULimit, VLimit };

// The two limit specializations of :X_{ij}(a1,z1) X_{ji}(a2,z2): at
// z1 = a2 q^{j-i} z2 (u) resp. z2 = a1 q^{j-i} z1 (v). Requires a1 a2 = 1;
// asserts that paired exponential factors cancel and the surviving word is
// exactly u_{ij}(a2^{-1}, a2 q^{(j-i)/2} z) resp. v_{ij}(a1^{-1}, q^{(j-i)/2} z).
VertexWord specialize_limit(LimitKind kind, int i, int j, const Unit& a1, const Unit& a2);

// One contraction factor ((1 - scale*x)/(1 + scale*x))^exponent.
struct KernelFactor {
    Unit scale = Unit::one();
    int exponent = 0;
    bool operator==(const KernelFactor&) const = default;
};

// The four-factor contraction kernel of X_{ij}(a1,z1) X_{kl}(a2,z2) in
// x = z2/z1, exactly as the product expansion displays it; zero-exponent
// factors are dropped.
std::vector<KernelFactor> contraction_kernel(int i, int j, const Unit& a1,
                                             int k, int l, const Unit& a2);

// Kernel produced by moving every E_+ factor of `left` past every E_-
// factor of `right`; expansion variable is (right var)/(left var).
std::vector<KernelFactor> exchange_kernel(const VertexWord& left, const VertexWord& right);

// Kernel produced by moving every E_- factor of `left` past every E_+
// factor of `right`; expansion variable is (left var)/(right var).
std::vector<KernelFactor> exchange_kernel_creation_left(const VertexWord& left,
                                                        const VertexWord& right);

// Taylor coefficients of the product of kernel factors, region |x| < 1.
QSeries kernel_expand(const std::vector<KernelFactor>& kernel, int order);

}  // namespace qtor
