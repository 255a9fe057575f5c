#include "qtor/lattice.hpp"

#include <sstream>
#include <stdexcept>

namespace qtor {

int fold_color(int i) {
    int r = ((i % 2) + 2) % 2;
    return r == 1 ? 1 : 2;
}

Weight Weight::eps(int i) {
    return fold_color(i) == 1 ? Weight{1, 0} : Weight{0, 1};
}

std::string Weight::to_string() const {
    std::ostringstream os;
    os << "(" << c1 << "," << c2 << ")";
    return os.str();
}

int bilinear(const Weight& a, const Weight& b) {
    return a.c1 * b.c1 + a.c2 * b.c2;
}

int cocycle(const RootElt& a, const RootElt& b) {
    return ((static_cast<long long>(a.m) * b.m) % 2 != 0) ? -1 : 1;
}

int zero_mode(const Weight& b, const RootElt& lattice_point) {
    return bilinear(b, lattice_point.weight());
}

QScalar valuation(const QScalar& mu, const Weight& a, const RootElt& lattice_point) {
    if (mu.is_zero()) throw std::domain_error("valuation: zero base");
    return mu.pow(bilinear(a, lattice_point.weight()));
}

}  // namespace qtor
