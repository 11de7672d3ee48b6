#ifndef HG_HODGE_HPP
#define HG_HODGE_HPP

#include "hg/complex.hpp"

namespace hg {

enum class ArithmeticMode { Exact, Floating };

struct HodgeParts {
    KForm exact;     // in range(d_{k-1})
    KForm coexact;   // in range(delta_{k+1})
    KForm harmonic;  // in ker(Laplacian)
};

/// Orthogonal splitting of a k-form with respect to the weighted inner
/// product. Exact mode solves the rational normal equations; floating mode
/// uses least squares and is meant for levels where exact elimination is too
/// expensive.
HodgeParts hodge_decompose(const Complex& c, const KForm& f, ArithmeticMode mode = ArithmeticMode::Exact);

/// Basis of ker(d_k) intersected with ker(delta_k), computed as the exact
/// nullspace of the stacked constraint matrix; vectors are scaled to coprime
/// integer entries. Empty when only the zero form is harmonic.
std::vector<KForm> harmonic_basis(const Complex& c, int k);

/// Dimensions (exact ranks) of the three Hodge summands of D_k.
struct HodgeDims {
    std::size_t exact;     // dim d_{k-1} D_{k-1}
    std::size_t coexact;   // dim delta_{k+1} D_{k+1}
    std::size_t harmonic;  // dim of the harmonic space
};
HodgeDims hodge_dimensions(const Complex& c, int k);

} // namespace hg

#endif
