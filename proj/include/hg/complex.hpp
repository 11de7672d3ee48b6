#ifndef HG_COMPLEX_HPP
#define HG_COMPLEX_HPP

#include <string>
#include <utility>
#include <vector>

#include "hg/linalg.hpp"
#include "hg/rational.hpp"

namespace hg {

struct Cell {
    int degree = 0;
    int index = 0;
    std::string label;
};

/// Signed adjacency between consecutive degrees, stored both ways so that d
/// and delta are single sweeps.
struct Incidence {
    std::vector<std::vector<std::pair<int, int>>> lower_of_upper;  // [upper] -> (lower, sign)
    std::vector<std::vector<std::pair<int, int>>> upper_of_lower;  // [lower] -> (upper, sign)

    void resize(std::size_t n_lower, std::size_t n_upper) {
        lower_of_upper.assign(n_upper, {});
        upper_of_lower.assign(n_lower, {});
    }
    void add(int lower, int upper, int sign) {
        lower_of_upper[upper].emplace_back(lower, sign);
        upper_of_lower[lower].emplace_back(upper, sign);
    }
};

/// A finite leveled cell family with signed incidence and positive weights.
/// Immutable once built; all operations below are pure.
struct Complex {
    std::string id;      // stable identity used in exports
    std::string family;  // "sg", "sg3" or "custom"
    int level = 0;
    int max_degree = 0;
    std::vector<std::vector<Cell>> cells;    // [degree][index]
    std::vector<Incidence> incidence;        // [k] couples degree k with k+1
    std::vector<std::vector<Rat>> weights;   // [degree][index], all > 0

    int ncells(int k) const {
        return (k < 0 || k > max_degree) ? 0 : static_cast<int>(cells[k].size());
    }
    const Rat& weight(int k, int i) const { return weights[k][i]; }
};

/// Degree-k assignment of exact rational values to the k-cells of one Complex.
struct KForm {
    int degree = 0;
    std::vector<Rat> values;
    const Complex* complex = nullptr;

    bool is_zero() const {
        for (const Rat& v : values)
            if (v != 0) return false;
        return true;
    }
};

inline KForm zero_form(const Complex& c, int degree) {
    return {degree, std::vector<Rat>(static_cast<std::size_t>(c.ncells(degree)), Rat(0)), &c};
}

/// Formal rational combination of k-cells; terms kept sorted by cell index
/// with zero coefficients dropped.
struct Chain {
    int degree = 0;
    std::vector<std::pair<int, Rat>> terms;
};

Chain make_chain(int degree, std::vector<std::pair<int, Rat>> terms);

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks the incidence sign constraints, the double-cancellation identity,
/// the chain condition, and weight positivity. Diagnostic only.
ValidationReport validate_complex(const Complex& c);

/// deRham derivative. At the top degree the result is the zero form of the
/// (empty) next class.
KForm d(const Complex& c, const KForm& f);

/// Dual derivative with weight ratios. On 0-forms the result is the empty
/// bottom form (degree -1).
KForm delta(const Complex& c, const KForm& f);

/// Weighted inner product. Throws on degree or complex mismatch.
Rat inner(const Complex& c, const KForm& f, const KForm& g);

Rat energy(const Complex& c, const KForm& f);
Rat energy_bilinear(const Complex& c, const KForm& f, const KForm& g);

/// Matrix of d_k mapping D_k to D_{k+1}.
RatMat d_matrix(const Complex& c, int k);
/// Matrix of delta_k mapping D_k to D_{k-1}.
RatMat delta_matrix(const Complex& c, int k);
/// Matrix of -Laplacian on D_k (delta d + d delta, absent terms dropped).
RatMat laplacian_matrix(const Complex& c, int k);

Chain boundary(const Complex& c, const Chain& ch);

Rat integrate(const Complex& c, const KForm& f, const Chain& ch);

KForm add(const KForm& f, const KForm& g);
KForm sub(const KForm& f, const KForm& g);
KForm scale(const KForm& f, const Rat& s);

} // namespace hg

#endif
