#ifndef HG_MEASURE_DIAG_HPP
#define HG_MEASURE_DIAG_HPP

#include <array>
#include <vector>

#include "hg/gasket.hpp"

namespace hg::measure {

/// Dyadic samples of a harmonic function along one boundary edge.
struct EdgeRestriction {
    int level = 0;  // samples at the points j / 2^level
    int edge_pos = 0;
    std::array<Rat, 3> boundary;  // corner values (q0, q1, q2)
    std::vector<Rat> samples;     // 2^level + 1 values along the edge
};

/// Samples of the harmonic function with the given corner values along a
/// level-0 edge, generated by the two-branch edge recursion seeded from the
/// midpoint extension rule.
EdgeRestriction restrict_harmonic(const Gasket& g, const std::array<Rat, 3>& boundary, int edge_pos, int m);

/// Step heights 2^m nu(I_j) of the dyadic density approximant at level m.
std::vector<Rat> dyadic_approximant(const EdgeRestriction& r, int m);

/// L1 distance between consecutive dyadic approximants, computed from the
/// increment differences.
Rat l1_difference(const EdgeRestriction& r, int m);

struct SingularityRow {
    int m = 0;
    Rat l1_diff;
    bool pass = false;
};

struct SingularityReport {
    Rat bound;  // (3/25) |f(x(1)) - f(x(0))|
    std::vector<SingularityRow> rows;
    bool all_pass = false;
};

/// Certifies that the edge measure of a nonconstant harmonic function is not
/// L1-Cauchy in its dyadic approximants: every difference stays above the
/// 3/25-scaled endpoint increment. Rejects constant boundary data.
SingularityReport singularity_report(const Gasket& g, const std::array<Rat, 3>& boundary, int edge_pos,
                                     int max_level);

/// Energy measure of the harmonic function with the given corner values, as
/// cell masses at level n. Additive under refinement; total mass equals the
/// level-0 energy.
CellMeasure energy_measure(const Gasket& g, const std::array<Rat, 3>& h_boundary, int n);

/// Kusuoka measure approximant: the energy measures of the fixed orthogonal
/// pair (0,1,-1), (-2,1,1), normalized by their energies. Independent of the
/// chosen energy-orthonormal pair.
CellMeasure kusuoka_measure(const Gasket& g, int n);

struct KusuokaGrowth {
    std::vector<Rat> masses;     // masses[k] = nu_h of the union of bottom cells at depth k
    std::vector<double> ratios;  // ratios[k] = masses[k+1] / masses[k]
};

/// Depth-first accumulation of the energy measure over the cells meeting the
/// bottom edge. The mass ratios converge to (17 + sqrt(73)) / 30.
KusuokaGrowth kusuoka_growth(const std::array<Rat, 3>& h_boundary, int depth);

/// The growth base (17 + sqrt(73)) / 30 of the Kusuoka edge masses.
double kusuoka_growth_base();

/// Single measure-weighted edge-trace approximant at the level of fnu,
/// renormalized by the Kusuoka growth base.
double delta2_prime_approx(const Gasket& g, const CellMeasure& fnu, const EdgeAddress& edge);

/// Sequence of trace approximants of the Kusuoka measure on an edge, for
/// levels edge level .. n_max. Ratios of consecutive values tend to 1.
std::vector<double> delta2_prime_sequence(const Gasket& g, const EdgeAddress& edge, int n_max);

/// Vertex weights induced by a measure: quadrature of the level-m harmonic
/// splines against nu (cell mass times the mean of the spline corner
/// values). Exact for the standard measure.
std::vector<Rat> nu_vertex_weights(const Gasket& g, const CellMeasure& nu, int m);

/// Exact spline integrals against the standard measure, via the self-similar
/// cell-average identity; the oracle for nu_vertex_weights.
std::vector<Rat> standard_spline_weights(const Gasket& g, int m);

/// Measure-weighted coderivative on 1-forms: the usual signed vertex sums
/// with the energy factor divided by the induced vertex weight.
KForm delta1_prime(const Gasket& g, const KForm& f1, const std::vector<Rat>& mu0_prime);

} // namespace hg::measure

#endif
