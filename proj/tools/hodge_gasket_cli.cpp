// Command-line front end: builds level graphs of the Sierpinski gasket
// families, runs the invariant suite, and exports harmonic bases, spectra,
// and measure diagnostics. Batch only; deterministic given flags and seed.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <random>

#include "hg/hodge.hpp"
#include "hg/io.hpp"
#include "hg/measure_diag.hpp"
#include "hg/sg3_harmonic.hpp"
#include "hg/sg_harmonic.hpp"
#include "hg/spectrum.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 2;
constexpr int kExitInput = 3;
constexpr int kExitResource = 4;

hg::Family parse_family(const std::string& name) {
    if (name == "sg") return hg::Family::SG;
    if (name == "sg3") return hg::Family::SG3;
    throw std::invalid_argument("unknown family: " + name);
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        hg::io::write_file(out_path, content);
}

std::array<hg::Rat, 3> parse_boundary(const std::vector<std::string>& raw) {
    if (raw.size() != 3) throw std::invalid_argument("--boundary needs three rational values");
    std::array<hg::Rat, 3> out;
    for (int i = 0; i < 3; ++i) out[i] = hg::Rat(raw[i]);
    return out;
}

int run_verify(const std::string& family_name, int level, unsigned seed) {
    hg::Gasket g(parse_family(family_name));
    const hg::Complex& c = g.at(level);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    auto rand_form = [&](int degree) {
        hg::KForm f = hg::zero_form(c, degree);
        for (hg::Rat& v : f.values) v = hg::Rat(num(rng), den(rng));
        return f;
    };

    std::vector<std::string> violations = validate_complex(c).violations;
    auto expect = [&](bool ok, const std::string& what) {
        if (!ok) violations.push_back(what);
    };

    for (int k = 0; k <= c.max_degree; ++k) {
        hg::KForm f = rand_form(k);
        expect(d(c, d(c, f)).is_zero(), "dd != 0 at degree " + std::to_string(k));
        expect(hg::delta(c, hg::delta(c, f)).is_zero(), "delta delta != 0 at degree " + std::to_string(k));
        if (k > 0) {
            hg::KForm gk = rand_form(k - 1);
            expect(inner(c, hg::delta(c, f), gk) == inner(c, f, d(c, gk)),
                   "duality fails at degree " + std::to_string(k));
        }
    }

    hg::KForm f1 = rand_form(1);
    hg::KForm df = hg::delta(c, f1);
    hg::Rat vertex_sum(0);
    for (int v = 0; v < c.ncells(0); ++v) vertex_sum += df.values[v] * c.weights[0][v];
    expect(vertex_sum == 0, "weighted vertex sums of a coderivative do not cancel");

    if (g.family() == hg::Family::SG) {
        long edges = 1;
        for (int i = 0; i <= level; ++i) edges *= 3;
        expect(c.ncells(1) == edges, "edge count mismatch");
        expect(c.ncells(0) == (edges + 3) / 2, "vertex count mismatch");
        if (level >= 1) {
            auto dims = hg::hodge_dimensions(c, 1);
            expect(dims.harmonic == static_cast<std::size_t>((edges / 3 - 1) / 2),
                   "harmonic dimension mismatch");
        }
    } else {
        long cells = 1;
        for (int i = 0; i < level; ++i) cells *= 4;
        expect(c.ncells(1) == 6 * cells, "edge count mismatch");
        expect(c.ncells(0) == 2 * cells + 2, "vertex count mismatch");
        for (int e = 0; e < c.ncells(1); ++e) {
            const auto& faces = c.incidence[1].upper_of_lower[e];
            if (faces.size() != 2 || faces[0].second + faces[1].second != 0) {
                violations.push_back("edge " + std::to_string(e) + " face signs do not cancel");
                break;
            }
        }
    }

    std::cout << "verify " << family_name << " level " << level << ": " << violations.size()
              << " violations\n";
    for (const auto& v : violations) std::cout << "  " << v << "\n";
    return violations.empty() ? kExitOk : kExitInvariant;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete Hodge-deRham calculus on Sierpinski gasket graphs"};
    app.require_subcommand(1);

    std::string family = "sg", out_path, in_path, mode = "exact", word_str = "-";
    int level = 0, degree = 0, depth = 25, edge = 0;
    double tol = 1e-9;
    unsigned seed = 0;
    std::vector<std::string> boundary_raw{"0", "1", "0"};

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--family", family, "sg or sg3")->capture_default_str();
        cmd->add_option("--level", level, "construction level")->capture_default_str();
        cmd->add_option("--out", out_path, "output file (stdout when omitted)");
    };

    CLI::App* build = app.add_subcommand("build", "export a level complex as JSON");
    add_common(build);

    CLI::App* verify = app.add_subcommand("verify", "run the invariant suite for one level");
    add_common(verify);
    verify->add_option("--seed", seed, "seed for random probe forms")->capture_default_str();

    CLI::App* basis = app.add_subcommand("basis", "emit the harmonic 1-form basis");
    add_common(basis);

    CLI::App* dual = app.add_subcommand("dual-basis", "emit the cycle-dual basis and pairing table");
    add_common(dual);

    CLI::App* spec = app.add_subcommand("spectrum", "labeled eigenvalue CSV");
    add_common(spec);
    spec->add_option("--degree", degree, "form degree")->capture_default_str();
    spec->add_option("--tol", tol, "zero-classification tolerance")->capture_default_str();

    CLI::App* hodge_cmd = app.add_subcommand("hodge", "decompose a k-form JSON file");
    add_common(hodge_cmd);
    hodge_cmd->add_option("--in", in_path, "k-form JSON input")->required();
    hodge_cmd->add_option("--mode", mode, "exact or float")->capture_default_str();

    CLI::App* sing = app.add_subcommand("singularity", "edge-measure singularity report CSV");
    add_common(sing);
    sing->add_option("--boundary", boundary_raw, "three rational corner values")->expected(3);
    sing->add_option("--edge", edge, "level-0 edge index")->capture_default_str();
    sing->add_option("--depth", depth, "table depth (rows m < depth)")->default_val(14);

    CLI::App* kus = app.add_subcommand("kusuoka", "energy-measure growth CSV along the bottom edge");
    kus->add_option("--boundary", boundary_raw, "three rational corner values")->expected(3);
    kus->add_option("--depth", depth, "recursion depth")->capture_default_str();
    kus->add_option("--out", out_path, "output file (stdout when omitted)");

    CLI::App* trace = app.add_subcommand("trace", "edge-trace and cell-derivative approximant table");
    add_common(trace);
    trace->add_option("--word", word_str, "cell word (\"-\" for the whole gasket)");
    trace->add_option("--edge", edge, "base edge index of the traced edge")->capture_default_str();
    trace->add_option("--depth", depth, "largest refinement level")->default_val(8);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*build) {
            hg::Gasket g(parse_family(family));
            if (level < 0) throw std::invalid_argument("level must be nonnegative");
            emit(out_path, hg::io::complex_to_json(g.at(level)).dump(2) + "\n");
        } else if (*verify) {
            if (level < 0) throw std::invalid_argument("level must be nonnegative");
            return run_verify(family, level, seed);
        } else if (*basis) {
            hg::Gasket g(parse_family(family));
            nlohmann::json forms = nlohmann::json::array();
            if (g.family() == hg::Family::SG) {
                for (const auto& h : hg::sg::basis(g, level)) {
                    nlohmann::json j = hg::io::kform_to_json(h.form);
                    j["provenance"] = h.provenance;
                    forms.push_back(std::move(j));
                }
            } else {
                for (const auto& h : hg::sg3::basis(g, level)) {
                    nlohmann::json j = hg::io::kform_to_json(h.form);
                    j["provenance"] = h.provenance;
                    forms.push_back(std::move(j));
                }
            }
            emit(out_path, forms.dump(2) + "\n");
        } else if (*dual) {
            hg::Gasket g(parse_family(family));
            if (g.family() != hg::Family::SG) throw std::invalid_argument("dual-basis: SG only");
            auto res = hg::sg::dual_basis(g, level);
            nlohmann::json forms = nlohmann::json::array();
            for (const auto& h : res.duals) {
                nlohmann::json j = hg::io::kform_to_json(h.form);
                j["provenance"] = h.provenance;
                forms.push_back(std::move(j));
            }
            emit(out_path, forms.dump(2) + "\n");
            if (!out_path.empty()) hg::io::write_file(out_path + ".pairing.csv", hg::io::pairing_csv(res.basis_pairing));
        } else if (*spec) {
            hg::Gasket g(parse_family(family));
            emit(out_path, hg::io::spectrum_csv(hg::spectrum(g.at(level), degree, tol)));
        } else if (*hodge_cmd) {
            hg::Gasket g(parse_family(family));
            std::ifstream in(in_path);
            if (!in) throw std::invalid_argument("cannot open " + in_path);
            nlohmann::json j = nlohmann::json::parse(in);
            const hg::Complex& c = g.at(level);
            hg::KForm f = hg::io::kform_from_json(j, c);
            auto m = mode == "float" ? hg::ArithmeticMode::Floating : hg::ArithmeticMode::Exact;
            auto parts = hg::hodge_decompose(c, f, m);
            nlohmann::json outj{{"exact", hg::io::kform_to_json(parts.exact)},
                                {"coexact", hg::io::kform_to_json(parts.coexact)},
                                {"harmonic", hg::io::kform_to_json(parts.harmonic)}};
            emit(out_path, outj.dump(2) + "\n");
        } else if (*sing) {
            hg::Gasket g(hg::Family::SG);
            auto rep = hg::measure::singularity_report(g, parse_boundary(boundary_raw), edge, depth);
            emit(out_path, hg::io::singularity_csv(rep));
            if (!rep.all_pass) return kExitInvariant;
        } else if (*kus) {
            auto growth = hg::measure::kusuoka_growth(parse_boundary(boundary_raw), depth);
            emit(out_path, hg::io::growth_csv(growth));
        } else if (*trace) {
            hg::Gasket g(hg::Family::SG);
            hg::Word w = hg::Word::parse(word_str, 3);
            const int m = w.length();
            if (depth < m) throw std::invalid_argument("depth must reach the cell level");
            std::ostringstream csv;
            csv << "n,trace_num,trace_den,d1_num,d1_den\n";
            for (int n = m; n <= depth; ++n) {
                hg::CellMeasure mu = g.standard_measure(n);
                hg::Rat tr = hg::sg::delta2_trace(g, mu, {w, edge}, n);
                hg::Rat d1 = hg::sg::d1_approx_of_trace(g, mu, {w}, n);
                csv << n << "," << numerator(tr) << "," << denominator(tr) << "," << numerator(d1) << ","
                    << denominator(d1) << "\n";
            }
            emit(out_path, csv.str());
        }
        return kExitOk;
    } catch (const hg::resource_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return kExitInvariant;
    }
}
