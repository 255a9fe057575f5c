#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qtor/distr.hpp"
#include "qtor/report.hpp"
#include "qtor/vertexop.hpp"

namespace qtor {

// Relation catalogue: R1..R6 the defining relations, S1..S4 the Serre
// relations, GS12..GS16 the generating-series forms.
enum class RelationId {
    R1, R2, R3, R4, R5, R6,
    S1, S2, S3, S4,
    GS12, GS13, GS14, GS15, GS16,
};

std::optional<RelationId> relation_from_string(const std::string& s);
std::string relation_name(RelationId id);
// (name, description) pairs for every relation id.
std::vector<std::pair<std::string, std::string>> relation_catalogue();

enum class UvSign { AsWritten, Negated };

// Convention axes of the representation map. The central charge is fixed to
// 1 by the representation (q^{c/2} acts as q^{1/2}).
struct PiConfig {
    UvSign uv = UvSign::AsWritten;
    bool flip_zero_node = true;

    std::string to_string() const;
    bool operator==(const PiConfig&) const = default;
};

// Image of h_{im}: an exact linear combination of Heisenberg modes.
struct HOperator {
    int mode = 1;
    std::vector<std::pair<int, QScalar>> parts;  // (color, coefficient)

    FockVector apply(const FockVector& v) const;
    std::string to_string() const;
};

HOperator pi_h(int i, int m);  // m odd, i in {0,1}

// Image of x_i^{±}(z) as a vertex word; components are coefficients of z^{-n}.
// The zero-node minus series picks up the variable flip z -> -z when the
// convention is on.
VertexWord pi_x_word(int i, int sign, const PiConfig& cfg);

// Image of phi_i^{±} as a vertex word (u/v with the written -1 prefactor, or
// negated per the convention). The + series has components in z^{-n}, n >= 0;
// the - series in z^{+n}.
VertexWord pi_phi_word(int i, int sign, const PiConfig& cfg);

struct RelationParams {
    int i = 1;
    int j = 0;
    int sign = +1;
    std::vector<int> modes_m;  // h modes (odd) or z-component indices
    std::vector<int> modes_n;  // x/w component indices
    int modes = 3;             // default range when the vectors are empty
    int window = 4;
    int maxdeg = 3;
    int latrange = 1;
    int order = 6;             // series order for GS expansions
    int budget = 3;            // quartic smoke window budget
    PiConfig config;
    bool all_configs = false;  // sweep the four convention settings
    int perturb = 0;           // self-test: deliberately offset one constant

    std::string to_string() const;
};

// Instantiate both sides of the relation under the representation and
// compare exactly; componentwise for R1-R5, windowed for R6/S/GS.
Report verify_relation(RelationId id, const RelationParams& p);

// Direct operator check of the quartic Serre relation on the vacuum: the
// symmetrized four-term sum annihilates it on every cell of the
// (z1,z2,z3,w) window with total exponent budget <= budget.
Report serre_quartic_smoke(int sign, int budget);

}  // namespace qtor
