#include "hg/hodge.hpp"

#include <Eigen/Dense>

namespace hg {

namespace {

// Projection of f onto the column space of M, orthogonal in the weighted
// inner product: solve the normal equations M^T W M x = M^T W f exactly and
// return M x. The system is always consistent.
std::vector<Rat> project_exact(const Complex& c, int k, const RatMat& m, const std::vector<Rat>& f) {
    const std::size_t n = m.rows(), p = m.cols();
    if (p == 0) return std::vector<Rat>(n, Rat(0));
    RatMat wm(n, p);  // W M
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t cc = 0; cc < p; ++cc)
            if (m(r, cc) != 0) wm(r, cc) = c.weights[k][r] * m(r, cc);
    RatMat mt = m.transpose();
    RatMat normal = mt * wm;
    std::vector<Rat> wf(n);
    for (std::size_t r = 0; r < n; ++r) wf[r] = c.weights[k][r] * f[r];
    std::vector<Rat> rhs = mt.apply(wf);
    auto x = solve(normal, rhs);
    if (!x) throw std::logic_error("hodge projection: normal equations inconsistent");
    return m.apply(*x);
}

std::vector<Rat> project_float(const Complex& c, int k, const RatMat& m, const std::vector<Rat>& f) {
    using Eigen::MatrixXd;
    using Eigen::VectorXd;
    const std::size_t n = m.rows(), p = m.cols();
    if (p == 0) return std::vector<Rat>(n, Rat(0));
    VectorXd wsqrt(n);
    for (std::size_t r = 0; r < n; ++r) wsqrt[r] = std::sqrt(static_cast<double>(c.weights[k][r]));
    MatrixXd a(n, p);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t cc = 0; cc < p; ++cc) a(r, cc) = wsqrt[r] * static_cast<double>(m(r, cc));
    VectorXd b(n);
    for (std::size_t r = 0; r < n; ++r) b[r] = wsqrt[r] * static_cast<double>(f[r]);
    VectorXd x = a.colPivHouseholderQr().solve(b);
    VectorXd proj = a * x;
    std::vector<Rat> out(n);
    for (std::size_t r = 0; r < n; ++r) out[r] = Rat(proj[r] / wsqrt[r]);
    return out;
}

} // namespace

HodgeParts hodge_decompose(const Complex& c, const KForm& f, ArithmeticMode mode) {
    const int k = f.degree;
    auto project = mode == ArithmeticMode::Exact ? project_exact : project_float;

    KForm exact = zero_form(c, k);
    if (k > 0) exact.values = project(c, k, d_matrix(c, k - 1), f.values);
    KForm coexact = zero_form(c, k);
    if (k < c.max_degree) coexact.values = project(c, k, delta_matrix(c, k + 1), f.values);
    KForm harmonic = sub(sub(f, exact), coexact);
    return {std::move(exact), std::move(coexact), std::move(harmonic)};
}

std::vector<KForm> harmonic_basis(const Complex& c, int k) {
    const int n = c.ncells(k);
    const int n_up = c.ncells(k + 1);
    const int n_down = k > 0 ? c.ncells(k - 1) : 0;
    RatMat stacked(n_up + n_down, n);
    if (k < c.max_degree) {
        const Incidence& inc = c.incidence[k];
        for (int u = 0; u < n_up; ++u)
            for (auto [l, s] : inc.lower_of_upper[u]) stacked(u, l) = s;
    }
    if (k > 0) {
        const Incidence& inc = c.incidence[k - 1];
        // weighted coderivative rows; the per-row division by mu_{k-1} does
        // not change the kernel and is dropped
        for (int l = 0; l < n_down; ++l)
            for (auto [u, s] : inc.upper_of_lower[l]) stacked(n_up + l, u) = Rat(s) * c.weights[k][u];
    }
    std::vector<KForm> basis;
    for (auto& v : nullspace(stacked)) basis.push_back(KForm{k, std::move(v), &c});
    return basis;
}

HodgeDims hodge_dimensions(const Complex& c, int k) {
    HodgeDims dims{0, 0, 0};
    if (k > 0) dims.exact = rank(d_matrix(c, k - 1));
    if (k < c.max_degree) dims.coexact = rank(delta_matrix(c, k + 1));
    dims.harmonic = static_cast<std::size_t>(c.ncells(k)) - dims.exact - dims.coexact;
    return dims;
}

} // namespace hg
