#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hg/gasket.hpp"
#include "hg/hodge.hpp"
#include "hg/sg_harmonic.hpp"
#include "hg/spectrum.hpp"
#include "test_util.hpp"

using namespace hg;
using test::path_complex;
using test::rand_form;
using test::triangle_complex;

TEST_CASE("validate: oriented triangle passes, a flipped sign fails") {
    Complex tri = triangle_complex();
    CHECK(validate_complex(tri).ok());

    Complex bad = triangle_complex();
    bad.incidence[1].lower_of_upper[0][0].second *= -1;
    bad.incidence[1].upper_of_lower[0][0].second *= -1;
    auto rep = validate_complex(bad);
    CHECK(!rep.ok());
    bool cites_pair = false;
    for (const auto& v : rep.violations)
        if (v.find("parity") != std::string::npos) cites_pair = true;
    CHECK(cites_pair);
}

TEST_CASE("validate: built SG complex passes the exhaustive pair scan") {
    Gasket g(Family::SG);
    CHECK(validate_complex(g.at(2)).ok());
}

TEST_CASE("d: constants map to zero and indicators hit incident edges only") {
    Gasket g(Family::SG);
    const Complex& c1 = g.at(1);
    KForm ones = zero_form(c1, 0);
    for (Rat& v : ones.values) v = Rat(7, 3);
    CHECK(d(c1, ones).is_zero());

    KForm ind = zero_form(c1, 0);
    const int q0 = g.vertex_index(1, Word::parse("0", 3), 0);
    ind.values[q0] = 1;
    KForm di = d(c1, ind);
    int nonzero = 0;
    for (const Rat& v : di.values) {
        if (v != 0) {
            ++nonzero;
            CHECK(rat_abs(v) == 1);
        }
    }
    CHECK(nonzero == 2);
}

TEST_CASE("d at the top degree is the zero map into the empty class") {
    Complex tri = triangle_complex();
    KForm f2 = zero_form(tri, 2);
    f2.values[0] = 5;
    KForm df = d(tri, f2);
    CHECK(df.degree == 3);
    CHECK(df.values.empty());

    Complex path = path_complex();
    KForm f1 = zero_form(path, 1);
    f1.values[0] = 3;
    CHECK(d(path, f1).values.empty());
}

TEST_CASE("delta: duality with d holds exactly on random forms") {
    Gasket g(Family::SG);
    const Complex& c = g.at(2);
    std::mt19937 rng(11);
    for (int k = 1; k <= 2; ++k)
        for (int trial = 0; trial < 10; ++trial) {
            KForm f = rand_form(c, k, rng);
            KForm gk = rand_form(c, k - 1, rng);
            CHECK(inner(c, delta(c, f), gk) == inner(c, f, d(c, gk)));
        }
}

TEST_CASE("delta: bottom degree yields the empty flagged form") {
    Complex tri = triangle_complex();
    KForm f0 = zero_form(tri, 0);
    f0.values[1] = 4;
    KForm out = delta(tri, f0);
    CHECK(out.degree == -1);
    CHECK(out.values.empty());
}

TEST_CASE("delta_1 at an interior SG vertex has exactly four incidence terms") {
    Gasket g(Family::SG);
    const Complex& c = g.at(2);
    const int interior = g.vertex_index(2, Word::parse("01", 3), 1);
    CHECK(c.incidence[0].upper_of_lower[interior].size() == 4);
}

TEST_CASE("inner: positivity, the generator norm, and the energy identity") {
    Gasket g(Family::SG);
    const Complex& c1 = g.at(1);
    std::mt19937 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        KForm f = rand_form(c1, 1, rng);
        if (!f.is_zero()) CHECK(inner(c1, f, f) > 0);
    }

    auto h = sg::base_generator(g);
    CHECK(inner(c1, h.form, h.form) == 30);

    for (int trial = 0; trial < 5; ++trial) {
        KForm f0 = rand_form(c1, 0, rng);
        KForm df = d(c1, f0);
        CHECK(inner(c1, df, df) == energy(c1, f0));
    }

    KForm f0 = rand_form(c1, 0, rng);
    KForm f1 = rand_form(c1, 1, rng);
    CHECK_THROWS_AS((void)inner(c1, f0, f1), std::invalid_argument);
}

TEST_CASE("laplacian: level-0 matrix, top-degree multiple of identity, energy pairing") {
    Gasket g(Family::SG);
    const Complex& c0 = g.at(0);
    RatMat lap0 = laplacian_matrix(c0, 0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(lap0(i, j) == (i == j ? Rat(6) : Rat(-3)));

    // top degree: d delta only, three edges per face with the weight ratio
    for (int m = 0; m <= 3; ++m) {
        const Complex& c = g.at(m);
        RatMat lap2 = laplacian_matrix(c, 2);
        const Rat expected = 3 * c.weights[2][0] / c.weights[1][0];
        for (std::size_t i = 0; i < lap2.rows(); ++i)
            for (std::size_t j = 0; j < lap2.cols(); ++j)
                CHECK(lap2(i, j) == (i == j ? expected : Rat(0)));
    }

    std::mt19937 rng(5);
    const Complex& c2 = g.at(2);
    for (int k = 0; k <= 2; ++k) {
        RatMat lap = laplacian_matrix(c2, k);
        KForm f = rand_form(c2, k, rng);
        KForm lf{k, lap.apply(f.values), &c2};
        KForm gk = rand_form(c2, k, rng);
        CHECK(inner(c2, lf, gk) == energy_bilinear(c2, f, gk));
    }
}

TEST_CASE("energy: constants are null, zero energy is exactly harmonicity") {
    Gasket g(Family::SG);
    const Complex& c1 = g.at(1);
    KForm constf = zero_form(c1, 0);
    for (Rat& v : constf.values) v = Rat(9, 7);
    CHECK(energy(c1, constf) == 0);

    auto h = sg::base_generator(g);
    CHECK(energy(c1, h.form) == 0);
    CHECK(d(c1, h.form).is_zero());
    CHECK(delta(c1, h.form).is_zero());

    std::mt19937 rng(17);
    KForm f = rand_form(c1, 1, rng);
    if (energy(c1, f) == 0) {
        CHECK(d(c1, f).is_zero());
        CHECK(delta(c1, f).is_zero());
    }
}

TEST_CASE("hodge: exact input stays exact, dimensions audit, random reconstruction") {
    Gasket g(Family::SG);
    const Complex& c1 = g.at(1);
    std::mt19937 rng(23);

    KForm g0 = rand_form(c1, 0, rng);
    KForm f = d(c1, g0);
    auto parts = hodge_decompose(c1, f);
    CHECK(parts.coexact.is_zero());
    CHECK(parts.harmonic.is_zero());
    for (std::size_t i = 0; i < f.values.size(); ++i) CHECK(parts.exact.values[i] == f.values[i]);

    auto dims = hodge_dimensions(c1, 1);
    CHECK(dims.exact == 5);
    CHECK(dims.coexact == 3);
    CHECK(dims.harmonic == 1);
    CHECK(dims.exact + dims.coexact + dims.harmonic == 9);

    const Complex& c2 = g.at(2);
    for (int trial = 0; trial < 10; ++trial) {
        KForm r = rand_form(c2, 1, rng);
        auto p = hodge_decompose(c2, r);
        KForm back = add(add(p.exact, p.coexact), p.harmonic);
        for (std::size_t i = 0; i < r.values.size(); ++i) CHECK(back.values[i] == r.values[i]);
        CHECK(inner(c2, p.exact, p.coexact) == 0);
        CHECK(inner(c2, p.exact, p.harmonic) == 0);
        CHECK(inner(c2, p.coexact, p.harmonic) == 0);
        CHECK(d(c2, p.harmonic).is_zero());
        CHECK(delta(c2, p.harmonic).is_zero());
    }
}

TEST_CASE("hodge floating mode reconstructs within tolerance") {
    Gasket g(Family::SG);
    const Complex& c2 = g.at(2);
    std::mt19937 rng(29);
    KForm r = rand_form(c2, 1, rng);
    auto p = hodge_decompose(c2, r, ArithmeticMode::Floating);
    KForm back = add(add(p.exact, p.coexact), p.harmonic);
    for (std::size_t i = 0; i < r.values.size(); ++i)
        CHECK(std::abs(static_cast<double>(back.values[i] - r.values[i])) < 1e-9);
}

TEST_CASE("harmonic_basis: counts across degrees and levels") {
    Gasket g(Family::SG);
    CHECK(harmonic_basis(g.at(0), 1).empty());
    for (int m = 0; m <= 3; ++m) {
        auto h0 = harmonic_basis(g.at(m), 0);
        REQUIRE(h0.size() == 1);
        for (const Rat& v : h0[0].values) CHECK(v == h0[0].values[0]);  // constant
    }
    for (int m = 1; m <= 3; ++m) {
        auto h1 = harmonic_basis(g.at(m), 1);
        long expected = 1;
        for (int i = 0; i < m; ++i) expected *= 3;
        CHECK(h1.size() == (expected - 1) / 2);
        for (const auto& h : h1) {
            CHECK(d(g.at(m), h).is_zero());
            CHECK(delta(g.at(m), h).is_zero());
        }
    }
}

TEST_CASE("boundary: face boundary, nilpotency, edge endpoints, cycles") {
    Complex tri = triangle_complex();
    Chain face = make_chain(2, {{0, Rat(1)}});
    Chain edges = boundary(tri, face);
    CHECK(edges.terms.size() == 3);
    for (auto& [i, a] : edges.terms) CHECK(a == 1);
    CHECK(boundary(tri, edges).terms.empty());

    Chain single = make_chain(1, {{0, Rat(1)}});  // q0 -> q1
    Chain ends = boundary(tri, single);
    REQUIRE(ends.terms.size() == 2);
    CHECK(ends.terms[0] == std::pair<int, Rat>(0, Rat(-1)));
    CHECK(ends.terms[1] == std::pair<int, Rat>(1, Rat(1)));

    Gasket g(Family::SG);
    Chain gamma = sg::gamma_chain(g, Word{});
    CHECK(boundary(g.at(1), gamma).terms.empty());
}

TEST_CASE("integrate: fundamental theorem and Stokes on random data") {
    Gasket g(Family::SG);
    const Complex& c1 = g.at(1);
    std::mt19937 rng(31);
    KForm f0 = rand_form(c1, 0, rng);
    KForm df = d(c1, f0);

    // consecutive edges along the bottom: q0 -> m01, then m01 -> q1
    const int e1 = static_cast<int>(g.edge_index(Word::parse("0", 3), 0));
    const int e2 = static_cast<int>(g.edge_index(Word::parse("1", 3), 0));
    Chain path = make_chain(1, {{e1, Rat(1)}, {e2, Rat(1)}});
    const int vq0 = g.vertex_index(1, Word::parse("0", 3), 0);
    const int vq1 = g.vertex_index(1, Word::parse("1", 3), 1);
    CHECK(integrate(c1, df, path) == f0.values[vq1] - f0.values[vq0]);

    CHECK(integrate(c1, df, g.boundary_chain(1)) == 0);
    CHECK(integrate(c1, df, sg::gamma_chain(g, Word{})) == 0);

    for (int trial = 0; trial < 10; ++trial) {
        std::uniform_int_distribution<int> cell(0, 2);
        Chain ch = make_chain(2, {{cell(rng), test::rand_rat(rng)}, {cell(rng), test::rand_rat(rng)}});
        KForm f1 = rand_form(c1, 1, rng);
        CHECK(integrate(c1, d(c1, f1), ch) == integrate(c1, f1, boundary(c1, ch)));
    }
}

TEST_CASE("weighted vertex sums of any coderivative vanish") {
    Gasket g(Family::SG);
    const Complex& c = g.at(2);
    std::mt19937 rng(37);
    for (int trial = 0; trial < 10; ++trial) {
        KForm f1 = rand_form(c, 1, rng);
        KForm df = delta(c, f1);
        Rat sum(0);
        for (int v = 0; v < c.ncells(0); ++v) sum += df.values[v] * c.weights[0][v];
        CHECK(sum == 0);
    }
}

TEST_CASE("spectrum: level-0 labels and eigenvalues, transfer residuals") {
    Gasket g(Family::SG);
    const Complex& c0 = g.at(0);

    SpectrumReport s0 = spectrum(c0, 0);
    REQUIRE(s0.pairs.size() == 3);
    auto harm = s0.eigenvalues(SpectrumLabel::Harmonic);
    auto dels = s0.eigenvalues(SpectrumLabel::DeltaSpectrum);
    REQUIRE(harm.size() == 1);
    REQUIRE(dels.size() == 2);
    CHECK(harm[0] == 0.0);
    CHECK(dels[0] == doctest::Approx(9.0).epsilon(1e-12));
    CHECK(dels[1] == doctest::Approx(9.0).epsilon(1e-12));

    SpectrumReport s1 = spectrum(c0, 1);
    auto dspec = s1.eigenvalues(SpectrumLabel::DSpectrum);
    REQUIRE(dspec.size() == 2);
    CHECK(dspec[0] == doctest::Approx(9.0).epsilon(1e-12));
    CHECK(dspec[1] == doctest::Approx(9.0).epsilon(1e-12));
    auto dels1 = s1.eigenvalues(SpectrumLabel::DeltaSpectrum);
    REQUIRE(dels1.size() == 1);
    CHECK(dels1[0] == doctest::Approx(3.0).epsilon(1e-12));

    for (const auto& p : s0.pairs)
        if (p.label == SpectrumLabel::DeltaSpectrum)
            CHECK(transfer_residual(c0, 0, p.eigenvalue, p.eigenvector) < 1e-9);
}

TEST_CASE("spectrum rejects nonpositive tolerance") {
    Gasket g(Family::SG);
    CHECK_THROWS_AS((void)spectrum(g.at(0), 0, 0.0), std::invalid_argument);
}

TEST_CASE("complexes with empty top classes behave as truncated hierarchies") {
    Complex path = path_complex();
    CHECK(validate_complex(path).ok());
    RatMat lap = laplacian_matrix(path, 1);
    CHECK(lap(0, 0) == 4);  // d0 delta1 on the single edge with the weight ratio 2
    auto h = harmonic_basis(path, 0);
    CHECK(h.size() == 1);
}
