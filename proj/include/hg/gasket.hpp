#ifndef HG_GASKET_HPP
#define HG_GASKET_HPP

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hg/complex.hpp"
#include "hg/word.hpp"

namespace hg {

enum class Family { SG, SG3 };

/// Raised when a build would exceed the configured cell cap.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EdgeAddress {
    Word word;
    int pos = 0;  // base edge index within the level-0 cell
};

struct CellAddress {
    Word word;
};

/// Additive assignment of values to the top-degree cells at one level.
struct CellMeasure {
    Family family = Family::SG;
    int level = 0;
    std::vector<Rat> values;  // indexed by cell (word) index

    Rat total() const {
        Rat t(0);
        for (const Rat& v : values) t += v;
        return t;
    }
};

/// Level graphs of one self-similar family, with the canonical cell
/// addressing. Complexes are built lazily and cached; once built they are
/// immutable and safe to share across threads.
class Gasket {
public:
    /// The edge weight factor is the per-level energy renormalization b_1;
    /// it defaults to 5/3 for SG and 3/2 for SG3. Harmonic 1-form kernels do
    /// not depend on it.
    explicit Gasket(Family family, long cell_cap = (1L << 22), std::optional<Rat> edge_weight_factor = {});

    Family family() const { return family_; }
    const Rat& edge_weight_factor() const { return edge_factor_; }
    int branches() const { return n_; }              // contraction count N
    int corners() const { return n_; }               // level-0 vertices
    int edges_per_cell() const { return epc_; }
    int faces_per_cell() const { return fpc_; }
    int top_degree() const { return top_; }

    const Complex& at(int level) const;

    long cell_count(int level) const;

    // -- canonical ids ------------------------------------------------------
    long cell_index(const Word& w) const { return w.index(n_); }
    long edge_index(const Word& w, int pos) const { return w.index(n_) * epc_ + pos; }
    long face_index(const Word& w, int pos) const { return w.index(n_) * fpc_ + pos; }
    int vertex_index(int level, const Word& w, int corner) const;

    /// Resolves an addressed cell of any degree to its index at the given
    /// level. Degree-0 addresses alias; the canonical vertex id is returned.
    long resolve(int degree, const Word& w, int base_index, int level) const;

    /// Tail and head corner of a base edge, in its native orientation.
    std::pair<int, int> edge_corners(int pos) const;

    /// Base edge position of an unordered corner pair.
    int edge_pos(int a, int b) const;

    /// Corners of a base face in its oriented order (SG3).
    std::array<int, 3> face_vertices(int pos) const;

    /// The two level-(j+1) edges an edge splits into, native orientations
    /// aligned with the parent.
    std::array<EdgeAddress, 2> edge_children(const EdgeAddress& e) const;

    /// Rewrites a chain of degree-1 cells at from_level as the equivalent
    /// chain at to_level >= from_level.
    Chain refine_edge_chain(const Chain& ch, int from_level, int to_level) const;

    /// Outer boundary of the whole gasket as a degree-1 chain at the given
    /// level, traversed in the level-0 edge orientation.
    Chain boundary_chain(int level) const;

    // -- measures and 0-form machinery --------------------------------------
    CellMeasure standard_measure(int level) const;
    CellMeasure refine(const CellMeasure& m) const;

    /// Energy of a 0-form at its level: the weighted inner product of its
    /// derivative with itself.
    Rat graph_energy(const KForm& f0) const;

    /// Vertex-formula graph Laplacian (weight ratio times neighbor
    /// differences); coincides with delta(d(f)) as an exact identity.
    KForm kigami_laplacian0(const KForm& f0) const;

    /// One-step harmonic extension of vertex values from level m to m+1.
    std::vector<Rat> extend_harmonic0(int m, const std::vector<Rat>& values) const;

    /// Boundary-seeded harmonic 0-form values at a level (SG: 1/5-2/5 rule,
    /// SG3: 1/6-1/3 rule), starting from the corner values.
    std::vector<Rat> harmonic0_values(const std::vector<Rat>& corner_values, int level) const;

private:
    Family family_;
    int n_, epc_, fpc_, top_;
    long cell_cap_;
    Rat edge_factor_;
    mutable std::vector<std::unique_ptr<Complex>> cache_;
    mutable std::vector<std::vector<int>> vertex_ids_;      // per level: (cell*n + corner) -> id
    mutable std::vector<std::vector<std::pair<Word, int>>> vertex_addrs_;  // per level: id -> canonical addr

    void build_level(int level) const;
    void build_vertex_table(int level) const;
};

/// Local SG harmonic extension: midpoint values of a cell with corner values
/// (a, b, c); returns (m01, m02, m12).
std::array<Rat, 3> sg_midpoint_rule(const Rat& a, const Rat& b, const Rat& c);

/// Local SG3 rule: values at the four vertices of a simplex produce the six
/// midpoint values, indexed like the base edges (01,02,03,12,13,23).
std::array<Rat, 6> sg3_midpoint_rule(const std::array<Rat, 4>& h);

} // namespace hg

#endif
