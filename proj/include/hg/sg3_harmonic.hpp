#ifndef HG_SG3_HARMONIC_HPP
#define HG_SG3_HARMONIC_HPP

#include <array>
#include <string>
#include <vector>

#include "hg/gasket.hpp"

namespace hg::sg3 {

/// Harmonic 1-form on one level graph of the 3-dimensional gasket.
struct TetraForm {
    int level = 0;
    KForm form;
    std::string provenance;
};

/// The level-0 seed: the unique 1-form on the six tetrahedron edges with
/// vanishing face sums and vertex sums (0, 0, 2, -2). The vertex sums here
/// are unweighted, matching the level-0 weights.
KForm base_form(const Gasket& g);

/// base_form conjugated by a vertex rotation (an even permutation of the
/// four labels); realizes the vertex-sum zeros at any chosen pair.
KForm rotate_base(const Gasket& g, const KForm& f, const std::array<int, 4>& perm);

/// The four placement forms on the level-1 graph: rotated seeds in three of
/// the four sub-simplices, zero in the fourth. Each is exactly harmonic and
/// the four sum to zero.
std::array<KForm, 4> placements(const Gasket& g);

/// Orthogonal basis A_1, A_2, A_3 of the span of the placements, scaled to
/// coprime integer entries.
std::vector<TetraForm> level1_basis(const Gasket& g);

/// The midpoint extension rule for harmonic mappings on a simplex.
std::array<Rat, 6> harmonic_map_extend(const std::array<Rat, 4>& vertex_values);

/// One-step extension of a face-closed 1-form: corner edges by the
/// one-third/one-sixth rule, midpoint edges by one sixth of the opposite
/// parent edge. Preserves face sums, vertex sums scale by 2/3, and each
/// parent edge is the sum of its two children.
TetraForm extend_form(const Gasket& g, const TetraForm& h);

TetraForm extend_to(const Gasket& g, const TetraForm& h, int level);

/// Basis of the level-m harmonic 1-forms: every A_j seated in every cell of
/// level < m and extended; 4^m - 1 elements.
std::vector<TetraForm> basis(const Gasket& g, int m);

/// Inner-triangle cycle of one face of the simplex at w, as a chain on the
/// next level, traversed in the face orientation.
Chain face_cycle_chain(const Gasket& g, const Word& w, int face);

/// Integrals of h over the four inner-triangle cycles of the simplex at w;
/// the components always sum to zero.
std::array<Rat, 4> face_cycle_integrals(const Gasket& g, const TetraForm& h, const Word& w);

} // namespace hg::sg3

#endif
