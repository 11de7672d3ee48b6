#include "hg/sg_harmonic.hpp"

#include <algorithm>
#include <stdexcept>

#include "hg/hodge.hpp"

namespace hg::sg {

namespace {

void require_sg(const Gasket& g, const char* where) {
    if (g.family() != Family::SG) throw std::invalid_argument(std::string(where) + ": SG only");
}

// Inner (central-triangle) edges of the level-1 graph: (cell, pos) pairs.
constexpr int kInnerEdge[3][2] = {{0, 1}, {1, 2}, {2, 0}};

} // namespace

HarmonicOneForm base_generator(const Gasket& g) {
    require_sg(g, "base_generator");
    const Complex& c1 = g.at(1);
    auto basis_vecs = harmonic_basis(c1, 1);
    if (basis_vecs.size() != 1) throw std::logic_error("base_generator: harmonic space on level 1 is not a line");
    KForm h = basis_vecs[0];
    const Rat inner0 = h.values[g.edge_index(Word{}.child(0), 1)];
    if (inner0 == 0) throw std::logic_error("base_generator: degenerate inner edge value");
    h = scale(h, Rat(2) / inner0);
    for (auto [cell, pos] : kInnerEdge)
        if (h.values[cell * 3 + pos] != 2) throw std::logic_error("base_generator: inner edge normalization failed");
    int outer = 0;
    for (int e = 0; e < 9; ++e)
        if (h.values[e] == -1) ++outer;
    if (outer != 6) throw std::logic_error("base_generator: outer edge pattern failed");
    return {1, std::move(h), "-"};
}

HarmonicOneForm extend(const Gasket& g, const HarmonicOneForm& h) {
    require_sg(g, "extend");
    const int m = h.level;
    const Complex& fine = g.at(m + 1);
    KForm out = zero_form(fine, 1);
    const long ncell = g.cell_count(m);
    for (long ci = 0; ci < ncell; ++ci) {
        const Rat& x = h.form.values[ci * 3 + 0];
        const Rat& y = h.form.values[ci * 3 + 1];
        const Rat& z = h.form.values[ci * 3 + 2];
        if (x + y + z != 0) throw std::invalid_argument("extend: input form is not closed on cell " + std::to_string(ci));
        // child values in edge positions (X, Y, Z); see the level-1 picture
        const Rat vals[3][3] = {
            {(3 * x + y) / 5, y / 5, (3 * z + y) / 5},
            {(3 * x + z) / 5, (3 * y + z) / 5, z / 5},
            {x / 5, (3 * y + x) / 5, (3 * z + x) / 5},
        };
        for (int child = 0; child < 3; ++child)
            for (int p = 0; p < 3; ++p) out.values[(ci * 3 + child) * 3 + p] = vals[child][p];
    }
    return {m + 1, std::move(out), h.provenance};
}

HarmonicOneForm extend_to(const Gasket& g, const HarmonicOneForm& h, int level) {
    HarmonicOneForm cur = h;
    while (cur.level < level) cur = extend(g, cur);
    if (cur.level != level) throw std::invalid_argument("extend_to: form already above the target level");
    return cur;
}

std::vector<HarmonicOneForm> basis(const Gasket& g, int m) {
    require_sg(g, "basis");
    if (m < 1) throw std::invalid_argument("basis: level must be at least 1");
    const HarmonicOneForm gen = base_generator(g);
    std::vector<HarmonicOneForm> out;
    for (const Word& w : words_up_to(m - 1, 3)) {
        const int seat_level = w.length() + 1;
        KForm f = zero_form(g.at(seat_level), 1);
        for (int child = 0; child < 3; ++child)
            for (int p = 0; p < 3; ++p)
                f.values[g.edge_index(w.child(child), p)] = gen.form.values[child * 3 + p];
        HarmonicOneForm seated{seat_level, std::move(f), w.str()};
        out.push_back(extend_to(g, seated, m));
    }
    return out;
}

Chain gamma_chain(const Gasket& g, const Word& w) {
    require_sg(g, "gamma_chain");
    std::vector<std::pair<int, Rat>> terms;
    for (auto [child, pos] : kInnerEdge)
        terms.emplace_back(static_cast<int>(g.edge_index(w.child(child), pos)), Rat(1));
    return make_chain(1, std::move(terms));
}

Rat cycle_integral(const Gasket& g, const HarmonicOneForm& h, const Word& w) {
    if (w.length() >= h.level) throw std::invalid_argument("cycle_integral: cycle word must be shorter than the form level");
    Chain gamma = g.refine_edge_chain(gamma_chain(g, w), w.length() + 1, h.level);
    return integrate(*h.form.complex, h.form, gamma);
}

DualBasisResult dual_basis(const Gasket& g, int m) {
    require_sg(g, "dual_basis");
    std::vector<Word> words = words_up_to(m - 1, 3);
    const std::size_t n = words.size();
    std::vector<HarmonicOneForm> hw = basis(g, m);

    // Indices sorted by decreasing word length; the pairing is upper
    // triangular in that order because integrals vanish on strictly finer
    // cycles.
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return words[a].length() > words[b].length(); });

    RatMat pairing(n, n);  // canonical order, rows = basis word, cols = cycle word
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) pairing(i, j) = cycle_integral(g, hw[i], words[j]);

    RatMat p_sorted(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) p_sorted(i, j) = pairing(order[i], order[j]);
    for (std::size_t i = 0; i < n; ++i) {
        if (p_sorted(i, i) == 0) throw std::logic_error("dual_basis: singular pairing table");
        for (std::size_t j = 0; j < i; ++j)
            if (p_sorted(i, j) != 0) throw std::logic_error("dual_basis: pairing table is not triangular");
    }

    // Back substitution for the inverse of the upper-triangular table.
    RatMat inv(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        for (std::size_t i = col + 1; i-- > 0;) {
            Rat acc = (i == col) ? Rat(1) : Rat(0);
            for (std::size_t j = i + 1; j <= col; ++j) acc -= p_sorted(i, j) * inv(j, col);
            inv(i, col) = acc / p_sorted(i, i);
        }
    }

    std::vector<HarmonicOneForm> duals(n);
    for (std::size_t si = 0; si < n; ++si) {
        KForm f = zero_form(g.at(m), 1);
        for (std::size_t sj = 0; sj < n; ++sj) {
            if (inv(si, sj) == 0) continue;
            f = add(f, scale(hw[order[sj]].form, inv(si, sj)));
        }
        duals[order[si]] = HarmonicOneForm{m, std::move(f), "dual(" + words[order[si]].str() + ")"};
    }
    return {std::move(duals), PairingTable{words, words, std::move(pairing)}};
}

OscillationWitness oscillation_counterexample(int m) {
    if (m < 1) throw std::invalid_argument("oscillation_counterexample: m must be positive");
    if (m > 24) throw resource_error("oscillation_counterexample: sample cap exceeded");
    const Rat amp = pow_rat(Rat(1, 2), (m + 1) / 2);
    Rat energy(0), variation(0);
    Rat prev = amp;  // sample at j = 0
    const long count = 1L << m;
    for (long j = 1; j <= count; ++j) {
        Rat cur = (j % 2 == 0) ? amp : -amp;
        Rat jump = cur - prev;
        energy += jump * jump;
        variation += rat_abs(jump);
        prev = cur;
    }
    return {energy, variation};
}

DivergenceWitness divergent_series_witness(const Gasket& g, int m) {
    require_sg(g, "divergent_series_witness");
    if (m < 1 || m % 2 != 0) throw std::invalid_argument("divergent_series_witness: exact mode needs even m >= 2");
    if (m > 24) throw resource_error("divergent_series_witness: word cap exceeded");
    const HarmonicOneForm gen = base_generator(g);
    // restriction of the seated generator to the bottom edge of its own cell:
    // the two child edges along it
    const Rat bottom = gen.form.values[g.edge_index(Word{}.child(0), 0)] +
                       gen.form.values[g.edge_index(Word{}.child(1), 0)];
    const Rat coeff = pow_rat(Rat(3, 10), m / 2);
    const Rat weight = pow_rat(Rat(5, 3), m);
    Rat norm(0), edge(0);
    const long count = 1L << m;  // words over the two bottom corners {0,1}
    for (long i = 0; i < count; ++i) {
        norm += weight * coeff * coeff;
        edge += coeff * bottom;
    }
    return {norm, edge};
}

Rat delta2_trace(const Gasket& g, const CellMeasure& fmu, const EdgeAddress& edge, int n) {
    require_sg(g, "delta2_trace");
    const int m = edge.word.length();
    if (n < m) throw std::invalid_argument("delta2_trace: refinement level below the edge level");
    if (fmu.level != n) throw std::invalid_argument("delta2_trace: measure level mismatch");
    auto [tail, head] = g.edge_corners(edge.pos);
    Rat sum(0);
    const long count = 1L << (n - m);
    for (long bits = 0; bits < count; ++bits) {
        Word w = edge.word;
        for (int b = n - m - 1; b >= 0; --b) w = w.child((bits >> b) & 1 ? head : tail);
        sum += fmu.values[g.cell_index(w)];
    }
    return pow_rat(Rat(3, 2), n) * sum;
}

Rat d1_approx(const Gasket& g, const EdgeData& f1, const CellAddress& cell, int n) {
    require_sg(g, "d1_approx");
    const int m = cell.word.length();
    if (n < m) throw std::invalid_argument("d1_approx: refinement level below the cell level");
    Rat sum(0);
    const long count = g.cell_count(n - m);
    for (long sub = 0; sub < count; ++sub) {
        Word w = cell.word;
        Word tail_word = Word::from_index(sub, n - m, 3);
        w.symbols.insert(w.symbols.end(), tail_word.symbols.begin(), tail_word.symbols.end());
        for (int p = 0; p < 3; ++p) sum += f1({w, p});
    }
    return pow_rat(Rat(2, 3), n) * sum;
}

Rat d1_approx(const Gasket& g, const KForm& f1_level_n, const CellAddress& cell, int n) {
    if (f1_level_n.degree != 1 || f1_level_n.complex != &g.at(n))
        throw std::invalid_argument("d1_approx: form must be a 1-form on the level-n complex");
    return d1_approx(
        g, [&](const EdgeAddress& e) { return f1_level_n.values[g.edge_index(e.word, e.pos)]; }, cell, n);
}

Rat d1_approx_of_trace(const Gasket& g, const CellMeasure& fmu, const CellAddress& cell, int n) {
    if (fmu.level != n) throw std::invalid_argument("d1_approx_of_trace: measure level mismatch");
    return d1_approx(
        g, [&](const EdgeAddress& e) { return delta2_trace(g, fmu, e, n); }, cell, n);
}

} // namespace hg::sg
