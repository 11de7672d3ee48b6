#ifndef HG_SG_HARMONIC_HPP
#define HG_SG_HARMONIC_HPP

#include <functional>
#include <string>
#include <vector>

#include "hg/gasket.hpp"

namespace hg::sg {

/// A harmonic 1-form on one SG level graph, together with how it was made
/// (the seating word, "dual(w)", or "combination").
struct HarmonicOneForm {
    int level = 0;
    KForm form;
    std::string provenance;
};

/// The generator of the 1-dimensional harmonic space on the level-1 graph,
/// normalized to 2 on the three inner edges and -1 on the six outer ones.
/// Computed from the exact nullspace of the stacked constraints.
HarmonicOneForm base_generator(const Gasket& g);

/// One step of the local harmonic extension. Requires the per-cell edge sums
/// to vanish; preserves harmonicity and the parent edge sums.
HarmonicOneForm extend(const Gasket& g, const HarmonicOneForm& h);

HarmonicOneForm extend_to(const Gasket& g, const HarmonicOneForm& h, int level);

/// Orthogonal basis of the level-m harmonic 1-forms: the generator seated in
/// every cell of level < m and extended. Size (3^m - 1)/2.
std::vector<HarmonicOneForm> basis(const Gasket& g, int m);

/// The inner upside-down-triangle cycle of the cell at `w`, as a chain on
/// level |w|+1. Its edges are traversed consistently in their native
/// orientations (which winds opposite to the outer boundary).
Chain gamma_chain(const Gasket& g, const Word& w);

/// Integral of h over the inner cycle of the cell at w (|w| < h.level).
Rat cycle_integral(const Gasket& g, const HarmonicOneForm& h, const Word& w);

struct PairingTable {
    std::vector<Word> rows;  // basis words
    std::vector<Word> cols;  // cycle words
    RatMat entries;
};

struct DualBasisResult {
    std::vector<HarmonicOneForm> duals;  // integral over cycle w' is delta_{w,w'}
    PairingTable basis_pairing;          // pairing table of the seated basis
};

/// Basis dual to the homology cycles, built by exact back substitution of
/// the block-triangular pairing table (eliminating words by decreasing
/// length).
DualBasisResult dual_basis(const Gasket& g, int m);

struct OscillationWitness {
    Rat energy;     // level-m Dirichlet sum of the alternating samples along the edge
    Rat variation;  // total variation along the edge
};

/// The bounded-energy, unbounded-variation example: samples of amplitude
/// 2^(-ceil(m/2)) alternating at the level-m dyadic points of one boundary
/// edge. For even m the energy is exactly 4 while the variation grows like
/// 2^(m/2).
OscillationWitness oscillation_counterexample(int m);

struct DivergenceWitness {
    Rat norm_proxy;  // sum of (5/3)^|w| c_w^2 over the chosen words
    Rat edge_value;  // value of the combined form on the whole bottom edge
};

/// Finite section of the series sum c_w h_w with c_w = (3/10)^(m/2) on all
/// words over the two bottom corners: unit norm proxy but bottom-edge value
/// growing like (6/5)^(m/2). Requires even m in exact arithmetic.
DivergenceWitness divergent_series_witness(const Gasket& g, int m);

/// Edge trace of a cell measure: the renormalized sum over the level-n cells
/// meeting the edge in a full sub-edge. Exact at every finite n for measures
/// with cell-constant density.
Rat delta2_trace(const Gasket& g, const CellMeasure& fmu, const EdgeAddress& edge, int n);

using EdgeData = std::function<Rat(const EdgeAddress&)>;

/// Renormalized sum of edge data over all level-n edges inside a cell.
Rat d1_approx(const Gasket& g, const EdgeData& f1, const CellAddress& cell, int n);
Rat d1_approx(const Gasket& g, const KForm& f1_level_n, const CellAddress& cell, int n);

/// d1_approx applied to the edge traces of fmu; multiplies cell measures by
/// exactly 3 for cell-supported data.
Rat d1_approx_of_trace(const Gasket& g, const CellMeasure& fmu, const CellAddress& cell, int n);

} // namespace hg::sg

#endif
