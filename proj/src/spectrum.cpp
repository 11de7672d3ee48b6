#include "hg/spectrum.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "hg/hodge.hpp"

namespace hg {

using Eigen::MatrixXd;
using Eigen::VectorXd;

std::string to_string(SpectrumLabel label) {
    switch (label) {
        case SpectrumLabel::Harmonic: return "harmonic";
        case SpectrumLabel::DSpectrum: return "d-spectrum";
        case SpectrumLabel::DeltaSpectrum: return "delta-spectrum";
    }
    return "?";
}

std::vector<double> SpectrumReport::eigenvalues(SpectrumLabel label) const {
    std::vector<double> out;
    for (const auto& p : pairs)
        if (p.label == label) out.push_back(p.eigenvalue);
    return out;
}

namespace {

MatrixXd to_double(const RatMat& m) {
    MatrixXd out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = static_cast<double>(m(r, c));
    return out;
}

// Orthonormal basis of the column space, rank decided against the given
// relative threshold.
MatrixXd column_space_basis(const MatrixXd& a, double tol) {
    if (a.cols() == 0) return MatrixXd(a.rows(), 0);
    Eigen::ColPivHouseholderQR<MatrixXd> qr(a);
    qr.setThreshold(tol);
    const auto rank = qr.rank();
    MatrixXd q = qr.householderQ() * MatrixXd::Identity(a.rows(), rank);
    return q;
}

} // namespace

SpectrumReport spectrum(const Complex& c, int k, double tol) {
    if (tol <= 0) throw std::invalid_argument("spectrum: tolerance must be positive");
    SpectrumReport rep{k, tol, {}};
    const int n = c.ncells(k);
    if (n == 0) return rep;

    VectorXd wsqrt(n);
    for (int i = 0; i < n; ++i) wsqrt[i] = std::sqrt(static_cast<double>(c.weights[k][i]));

    MatrixXd lap = to_double(laplacian_matrix(c, k));
    MatrixXd sym = wsqrt.asDiagonal() * lap * wsqrt.cwiseInverse().asDiagonal();
    sym = ((sym + sym.transpose()) / 2).eval();

    auto solve_on = [&](const MatrixXd& cols, SpectrumLabel label) {
        MatrixXd q = column_space_basis(cols, 1e-12);
        if (q.cols() == 0) return;
        MatrixXd restricted = q.transpose() * sym * q;
        restricted = ((restricted + restricted.transpose()) / 2).eval();
        Eigen::SelfAdjointEigenSolver<MatrixXd> es(restricted);
        if (es.info() != Eigen::Success) throw std::runtime_error("spectrum: eigensolver failed to converge");
        for (int i = 0; i < q.cols(); ++i) {
            VectorXd v = q * es.eigenvectors().col(i);
            LabeledEigenpair pair;
            pair.eigenvalue = es.eigenvalues()[i];
            pair.label = label;
            pair.eigenvector.resize(n);
            for (int r = 0; r < n; ++r) pair.eigenvector[r] = v[r] / wsqrt[r];
            rep.pairs.push_back(std::move(pair));
        }
    };

    if (k > 0) solve_on(wsqrt.asDiagonal() * to_double(d_matrix(c, k - 1)), SpectrumLabel::DSpectrum);
    if (k < c.max_degree) solve_on(wsqrt.asDiagonal() * to_double(delta_matrix(c, k + 1)), SpectrumLabel::DeltaSpectrum);

    // Harmonic part from the exact kernel basis; eigenvalue exactly zero.
    for (const KForm& h : harmonic_basis(c, k)) {
        LabeledEigenpair pair;
        pair.eigenvalue = 0.0;
        pair.label = SpectrumLabel::Harmonic;
        pair.eigenvector.resize(n);
        for (int r = 0; r < n; ++r) pair.eigenvector[r] = static_cast<double>(h.values[r]);
        rep.pairs.push_back(std::move(pair));
    }

    if (rep.pairs.size() != static_cast<std::size_t>(n))
        throw std::runtime_error("spectrum: labeled eigenpairs do not fill the space");

    double max_abs = 0;
    for (const auto& p : rep.pairs) max_abs = std::max(max_abs, std::abs(p.eigenvalue));
    for (const auto& p : rep.pairs)
        if (p.label != SpectrumLabel::Harmonic && std::abs(p.eigenvalue) < tol * std::max(max_abs, 1.0))
            throw std::runtime_error("spectrum: near-zero eigenvalue escaped the harmonic label");

    std::sort(rep.pairs.begin(), rep.pairs.end(),
              [](const LabeledEigenpair& a, const LabeledEigenpair& b) { return a.eigenvalue < b.eigenvalue; });
    return rep;
}

double transfer_residual(const Complex& c, int k, double lambda, const std::vector<double>& f) {
    const int n = c.ncells(k);
    const int n_up = c.ncells(k + 1);
    MatrixXd dmat = to_double(d_matrix(c, k));
    MatrixXd lap_up = to_double(laplacian_matrix(c, k + 1));
    VectorXd fv(n);
    for (int i = 0; i < n; ++i) fv[i] = f[i];
    VectorXd df = dmat * fv;
    VectorXd resid = lap_up * df - lambda * df;
    double num = 0, den = 0;
    for (int i = 0; i < n_up; ++i) {
        double w = static_cast<double>(c.weights[k + 1][i]);
        num += w * resid[i] * resid[i];
        den += w * df[i] * df[i];
    }
    return den == 0 ? std::sqrt(num) : std::sqrt(num / den);
}

} // namespace hg
