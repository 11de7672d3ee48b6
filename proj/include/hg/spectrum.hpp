#ifndef HG_SPECTRUM_HPP
#define HG_SPECTRUM_HPP

#include <string>
#include <vector>

#include "hg/complex.hpp"

namespace hg {

enum class SpectrumLabel { Harmonic, DSpectrum, DeltaSpectrum };

std::string to_string(SpectrumLabel label);

struct LabeledEigenpair {
    double eigenvalue = 0.0;
    std::vector<double> eigenvector;  // in form coordinates
    SpectrumLabel label = SpectrumLabel::Harmonic;
};

struct SpectrumReport {
    int degree = 0;
    double tol = 0.0;
    std::vector<LabeledEigenpair> pairs;  // sorted by eigenvalue

    std::vector<double> eigenvalues(SpectrumLabel label) const;
};

/// Full eigendecomposition of the degree-k Laplacian, computed on the
/// weight-symmetrized matrix. Eigenvectors are labeled by the Hodge summand
/// they span: the d- and delta-parts are obtained by restricting to the
/// invariant subspaces range(d_{k-1}) and range(delta_{k+1}), the harmonic
/// part from the exact kernel basis.
SpectrumReport spectrum(const Complex& c, int k, double tol = 1e-9);

/// Residual of the eigenfunction transfer f -> df between adjacent degrees:
/// the weighted norm of (-Laplacian_{k+1}(df) - lambda df) divided by the
/// weighted norm of df.
double transfer_residual(const Complex& c, int k, double lambda, const std::vector<double>& f);

} // namespace hg

#endif
