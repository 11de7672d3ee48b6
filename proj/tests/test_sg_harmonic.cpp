#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hg/hodge.hpp"
#include "hg/sg_harmonic.hpp"
#include "test_util.hpp"

using namespace hg;
using namespace hg::sg;

namespace {

// Closed-form pairing expected from the prefix geometry: 6 on the own cycle,
// -2 when the basis cell hangs off one edge of a coarser cycle, 0 otherwise.
Rat expected_pairing(const Word& basis_w, const Word& cycle_w) {
    if (basis_w == cycle_w) return 6;
    const int mp = cycle_w.length();
    if (basis_w.length() <= mp) return 0;
    if (!cycle_w.is_prefix_of(basis_w)) return 0;
    const int branch = basis_w.symbols[mp];
    for (int j = mp + 1; j < basis_w.length(); ++j)
        if (basis_w.symbols[j] == branch) return 0;
    return -2;
}

long ipow(long b, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

} // namespace

TEST_CASE("base generator: inner 2, outer -1, boundary integral 6 in size") {
    Gasket g(Family::SG);
    HarmonicOneForm h = base_generator(g);
    CHECK(h.level == 1);
    int twos = 0, ones = 0;
    for (const Rat& v : h.form.values) {
        if (v == 2) ++twos;
        if (v == -1) ++ones;
    }
    CHECK(twos == 3);
    CHECK(ones == 6);
    Rat bdry = integrate(g.at(1), h.form, g.boundary_chain(1));
    CHECK(rat_abs(bdry) == 6);
    CHECK(cycle_integral(g, h, Word{}) == 6);
}

TEST_CASE("extension: the worked cell, zero form, and scaling laws") {
    Gasket g(Family::SG);
    const Complex& c1 = g.at(1);

    // one cell with values (-1, -1, 2), rest zero: watch the x-edge children
    KForm f = zero_form(c1, 1);
    f.values[g.edge_index(Word::parse("0", 3), 0)] = -1;
    f.values[g.edge_index(Word::parse("0", 3), 1)] = -1;
    f.values[g.edge_index(Word::parse("0", 3), 2)] = 2;
    HarmonicOneForm one_cell{1, f, "test"};
    HarmonicOneForm ext = extend(g, one_cell);
    CHECK(ext.form.values[g.edge_index(Word::parse("00", 3), 0)] == Rat(-4, 5));
    CHECK(ext.form.values[g.edge_index(Word::parse("01", 3), 0)] == Rat(-1, 5));

    KForm zf = zero_form(c1, 1);
    HarmonicOneForm zero{1, zf, "zero"};
    CHECK(extend(g, zero).form.is_zero());

    HarmonicOneForm h = base_generator(g);
    HarmonicOneForm cur = h;
    for (int step = 0; step < 3; ++step) {
        HarmonicOneForm next = extend(g, cur);
        Rat sq_cur(0), sq_next(0);
        for (const Rat& v : cur.form.values) sq_cur += v * v;
        for (const Rat& v : next.form.values) sq_next += v * v;
        CHECK(sq_next == Rat(3, 5) * sq_cur);
        CHECK(inner(g.at(next.level), next.form, next.form) ==
              inner(g.at(cur.level), cur.form, cur.form));
        cur = next;
    }
}

TEST_CASE("extension requires closed input") {
    Gasket g(Family::SG);
    KForm f = zero_form(g.at(1), 1);
    f.values[0] = 1;  // lone edge value: cell sum nonzero
    HarmonicOneForm bad{1, f, "bad"};
    CHECK_THROWS_AS((void)extend(g, bad), std::invalid_argument);
}

TEST_CASE("edge sums split exactly across extension steps") {
    Gasket g(Family::SG);
    HarmonicOneForm cur = base_generator(g);
    for (int step = 0; step < 3; ++step) {
        HarmonicOneForm next = extend(g, cur);
        const int m = cur.level;
        for (long e = 0; e < g.cell_count(m) * 3; ++e) {
            Word w = Word::from_index(e / 3, m, 3);
            auto kids = g.edge_children({w, static_cast<int>(e % 3)});
            Rat child_sum = next.form.values[g.edge_index(kids[0].word, kids[0].pos)] +
                            next.form.values[g.edge_index(kids[1].word, kids[1].pos)];
            CHECK(child_sum == cur.form.values[e]);
        }
        cur = next;
    }
}

TEST_CASE("basis: counts, exact harmonicity, pairwise orthogonality") {
    Gasket g(Family::SG);
    CHECK(basis(g, 1).size() == 1);
    CHECK(basis(g, 3).size() == 13);

    for (int m = 1; m <= 3; ++m) {
        auto b = basis(g, m);
        const Complex& c = g.at(m);
        CHECK(b.size() == static_cast<std::size_t>((ipow(3, m) - 1) / 2));
        for (const auto& h : b) {
            CHECK(h.level == m);
            CHECK(d(c, h.form).is_zero());
            CHECK(delta(c, h.form).is_zero());
        }
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i + 1; j < b.size(); ++j)
                CHECK(inner(c, b[i].form, b[j].form) == 0);
    }
}

TEST_CASE("basis rank equals the constraint nullity") {
    Gasket g(Family::SG);
    for (int m = 1; m <= 3; ++m) {
        auto b = basis(g, m);
        const Complex& c = g.at(m);
        RatMat stacked(b.size(), c.ncells(1));
        for (std::size_t i = 0; i < b.size(); ++i)
            for (int e = 0; e < c.ncells(1); ++e) stacked(i, e) = b[i].form.values[e];
        CHECK(rank(stacked) == b.size());
        CHECK(hodge_dimensions(c, 1).harmonic == b.size());
    }
}

TEST_CASE("cycle integrals match the closed form") {
    Gasket g(Family::SG);
    const int m = 3;
    auto b = basis(g, m);
    auto words = words_up_to(m - 1, 3);
    for (std::size_t i = 0; i < b.size(); ++i) {
        int nonzero = 0;
        for (const Word& wc : words) {
            Rat got = cycle_integral(g, b[i], wc);
            CHECK(got == expected_pairing(words[i], wc));
            if (got != 0) ++nonzero;
        }
        CHECK(nonzero <= 4);
    }
}

TEST_CASE("dual basis: Kronecker pairing and the level-1 scaling") {
    Gasket g(Family::SG);
    for (int m = 1; m <= 3; ++m) {
        auto res = dual_basis(g, m);
        auto words = words_up_to(m - 1, 3);
        for (std::size_t i = 0; i < res.duals.size(); ++i) {
            CHECK(d(g.at(m), res.duals[i].form).is_zero());
            CHECK(delta(g.at(m), res.duals[i].form).is_zero());
            for (std::size_t j = 0; j < words.size(); ++j)
                CHECK(cycle_integral(g, res.duals[i], words[j]) == (i == j ? 1 : 0));
        }
    }

    auto res1 = dual_basis(g, 1);
    HarmonicOneForm h = base_generator(g);
    REQUIRE(res1.duals.size() == 1);
    for (int e = 0; e < 9; ++e) CHECK(res1.duals[0].form.values[e] == h.form.values[e] / 6);
}

TEST_CASE("prescribed cycle data is realized by the dual combination") {
    Gasket g(Family::SG);
    const int m = 2;
    auto res = dual_basis(g, m);
    auto words = words_up_to(m - 1, 3);
    // data supported on one cycle
    for (std::size_t target = 0; target < words.size(); ++target) {
        KForm combo = scale(res.duals[target].form, Rat(7, 2));
        HarmonicOneForm hc{m, combo, "combination"};
        for (std::size_t j = 0; j < words.size(); ++j)
            CHECK(cycle_integral(g, hc, words[j]) == (j == target ? Rat(7, 2) : Rat(0)));
    }
}

TEST_CASE("oscillation witness: bounded energy, growing variation") {
    for (int m = 2; m <= 8; m += 2) {
        auto w = oscillation_counterexample(m);
        CHECK(w.energy == 4);
        CHECK(w.variation == pow_rat(Rat(2), m / 2 + 1));
    }
    auto w2 = oscillation_counterexample(2);
    auto w8 = oscillation_counterexample(8);
    CHECK(w8.variation / w8.energy > w2.variation / w2.energy);
}

TEST_CASE("divergence witness: unit norm proxy, growing edge value") {
    Gasket g(Family::SG);
    for (int m = 2; m <= 8; m += 2) {
        auto w = divergent_series_witness(g, m);
        CHECK(w.norm_proxy == 1);
        CHECK(w.edge_value == -2 * pow_rat(Rat(6, 5), m / 2));
    }
    CHECK(rat_abs(divergent_series_witness(g, 2).edge_value) == Rat(12, 5));
    CHECK_THROWS_AS((void)divergent_series_witness(g, 3), std::invalid_argument);
}

TEST_CASE("divergence witness agrees with the assembled form at m=2") {
    Gasket g(Family::SG);
    const int m = 2;
    const Rat coeff = pow_rat(Rat(3, 10), 1);  // (3/10)^{m/2}
    const HarmonicOneForm gen = base_generator(g);
    const Complex& c3 = g.at(m + 1);
    KForm combo = zero_form(c3, 1);
    for (long bits = 0; bits < 4; ++bits) {
        Word w;
        w.symbols = {static_cast<std::uint8_t>((bits >> 1) & 1), static_cast<std::uint8_t>(bits & 1)};
        KForm seat = zero_form(c3, 1);
        for (int child = 0; child < 3; ++child)
            for (int p = 0; p < 3; ++p)
                seat.values[g.edge_index(w.child(child), p)] = gen.form.values[child * 3 + p];
        combo = add(combo, scale(seat, coeff));
    }
    Chain bottom = g.refine_edge_chain(make_chain(1, {{0, Rat(1)}}), 0, m + 1);
    CHECK(integrate(c3, combo, bottom) == divergent_series_witness(g, m).edge_value);
}

TEST_CASE("edge trace: constant density is exact across refinements") {
    Gasket g(Family::SG);
    for (int m = 0; m <= 2; ++m) {
        EdgeAddress edge{Word::parse(m == 0 ? "-" : std::string(m, '1').c_str(), 3), 0};
        for (int n = m + 1; n <= m + 4; ++n) {
            CellMeasure mu = g.standard_measure(n);
            CHECK(delta2_trace(g, mu, edge, n) == pow_rat(Rat(1, 2), m));
        }
    }

    CellMeasure zero{Family::SG, 3, std::vector<Rat>(27, Rat(0))};
    CHECK(delta2_trace(g, zero, {Word{}, 0}, 3) == 0);
}

TEST_CASE("edge trace stabilizes for densities constant on level-1 cells") {
    Gasket g(Family::SG);
    // f = 2 on the first level-1 cell, 1 elsewhere, against the standard measure
    auto fmu_at = [&](int n) {
        CellMeasure mu = g.standard_measure(n);
        for (long ci = 0; ci < g.cell_count(n); ++ci) {
            Word w = Word::from_index(ci, n, 3);
            if (n >= 1 && w.symbols[0] == 0) mu.values[ci] *= 2;
        }
        return mu;
    };
    std::vector<Rat> values;
    for (int n = 1; n <= 5; ++n) values.push_back(delta2_trace(g, fmu_at(n), {Word{}, 0}, n));
    for (std::size_t i = 1; i < values.size(); ++i) CHECK(values[i] == values[0]);
    CHECK(values[0] == Rat(3, 2));
}

TEST_CASE("cell derivative: derivatives of 0-forms vanish, traces gain a factor 3") {
    Gasket g(Family::SG);
    std::mt19937 rng(53);
    const int n = 3;
    const Complex& cn = g.at(n);
    KForm f0 = test::rand_form(cn, 0, rng);
    KForm df = d(cn, f0);
    CHECK(d1_approx(g, df, {Word{}}, n) == 0);
    CHECK(d1_approx(g, df, {Word::parse("0", 3)}, n) == 0);

    for (int m = 0; m <= 2; ++m) {
        Word cell = Word::parse(m == 0 ? "-" : std::string(m, '2').c_str(), 3);
        for (int nn = m + 1; nn <= m + 3; ++nn) {
            CellMeasure mu = g.standard_measure(nn);
            CHECK(d1_approx_of_trace(g, mu, {cell}, nn) == 3 * pow_rat(Rat(1, 3), m));
        }
    }

    auto h = extend_to(g, base_generator(g), n);
    CHECK(d1_approx(g, h.form, {Word{}}, n) == 0);
}
