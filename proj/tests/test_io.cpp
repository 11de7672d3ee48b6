#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "hg/io.hpp"
#include "test_util.hpp"

using namespace hg;

TEST_CASE("k-form JSON round trip preserves exact values") {
    Gasket g(Family::SG);
    const Complex& c = g.at(2);
    std::mt19937 rng(73);
    for (int k = 0; k <= 2; ++k) {
        KForm f = test::rand_form(c, k, rng);
        nlohmann::json j = io::kform_to_json(f);
        KForm back = io::kform_from_json(j, c);
        CHECK(back.degree == f.degree);
        for (std::size_t i = 0; i < f.values.size(); ++i) CHECK(back.values[i] == f.values[i]);
    }
}

TEST_CASE("k-form JSON rejects mismatched input") {
    Gasket g(Family::SG);
    const Complex& c1 = g.at(1);
    KForm f = zero_form(c1, 1);
    f.values[0] = Rat(1, 2);
    nlohmann::json j = io::kform_to_json(f);

    CHECK_THROWS_AS((void)io::kform_from_json(j, g.at(2)), std::invalid_argument);

    nlohmann::json bad_degree = j;
    bad_degree["degree"] = 9;
    CHECK_THROWS_AS((void)io::kform_from_json(bad_degree, c1), std::invalid_argument);

    nlohmann::json bad_cell = j;
    bad_cell["values"][0]["cell"] = 500;
    CHECK_THROWS_AS((void)io::kform_from_json(bad_cell, c1), std::invalid_argument);

    nlohmann::json bad_den = j;
    bad_den["values"][0]["den"] = 0;
    CHECK_THROWS_AS((void)io::kform_from_json(bad_den, c1), std::invalid_argument);
}

TEST_CASE("complex JSON carries cells, weights, and incidence triplets") {
    Gasket g(Family::SG);
    const Complex& c = g.at(1);
    nlohmann::json j = io::complex_to_json(c);
    CHECK(j["id"] == "sg:1");
    CHECK(j["family"] == "sg");
    CHECK(j["degrees"].size() == 3);
    CHECK(j["degrees"][0]["cells"].size() == 6);
    CHECK(j["degrees"][1]["cells"].size() == 9);
    CHECK(j["degrees"][2]["cells"].size() == 3);
    // every edge has two endpoint entries
    std::size_t vertex_edge_entries = j["incidence"][0]["entries"].size();
    CHECK(vertex_edge_entries == 18);
    for (const auto& entry : j["incidence"][0]["entries"]) {
        int sign = entry[2].get<int>();
        CHECK((sign == 1 || sign == -1));
    }
}

TEST_CASE("CSV emitters produce the documented headers") {
    Gasket g(Family::SG);
    SpectrumReport rep = spectrum(g.at(0), 0);
    std::string csv = io::spectrum_csv(rep);
    CHECK(csv.rfind("degree,eigenvalue,label,multiplicity\n", 0) == 0);
    CHECK(csv.find("delta-spectrum,2") != std::string::npos);  // the multiplicity-2 pair

    auto dual = sg::dual_basis(g, 2);
    std::string pcsv = io::pairing_csv(dual.basis_pairing);
    CHECK(pcsv.rfind("omega,omega_prime,num,den\n", 0) == 0);
    CHECK(pcsv.find("-,-,6,1") != std::string::npos);

    auto srep = measure::singularity_report(g, {Rat(0), Rat(1), Rat(0)}, 0, 3);
    std::string scsv = io::singularity_csv(srep);
    CHECK(scsv.rfind("m,l1_diff_num,l1_diff_den,bound_num,bound_den,pass\n", 0) == 0);
    CHECK(scsv.find("0,1,5,3,25,1") != std::string::npos);

    auto growth = measure::kusuoka_growth({Rat(0), Rat(1), Rat(0)}, 4);
    std::string gcsv = io::growth_csv(growth);
    CHECK(gcsv.rfind("n,mass,ratio\n", 0) == 0);
}

TEST_CASE("byte-identical exports across repeated runs") {
    Gasket g1(Family::SG), g2(Family::SG);
    CHECK(io::complex_to_json(g1.at(2)).dump() == io::complex_to_json(g2.at(2)).dump());
    auto d1 = sg::dual_basis(g1, 2);
    auto d2 = sg::dual_basis(g2, 2);
    CHECK(io::pairing_csv(d1.basis_pairing) == io::pairing_csv(d2.basis_pairing));
}
