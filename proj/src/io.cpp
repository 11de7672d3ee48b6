#include "hg/io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace hg::io {

using nlohmann::json;

namespace {

long long to_int64(const Bigint& v, const char* where) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw std::invalid_argument(std::string(where) + ": value exceeds the 64-bit JSON integer range");
    return v.convert_to<long long>();
}

} // namespace

json rat_to_json(const Rat& q) {
    return json{{"num", to_int64(numerator(q), "rat_to_json")}, {"den", to_int64(denominator(q), "rat_to_json")}};
}

Rat rat_from_json(const json& j) {
    long long num = j.at("num").get<long long>();
    long long den = j.at("den").get<long long>();
    if (den == 0) throw std::invalid_argument("rat_from_json: zero denominator");
    return Rat(num, den);
}

json kform_to_json(const KForm& f) {
    json values = json::array();
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        if (f.values[i] == 0) continue;
        json entry = rat_to_json(f.values[i]);
        entry["cell"] = i;
        values.push_back(std::move(entry));
    }
    return json{{"complex", f.complex ? f.complex->id : ""}, {"degree", f.degree}, {"values", std::move(values)}};
}

KForm kform_from_json(const json& j, const Complex& c) {
    if (j.at("complex").get<std::string>() != c.id)
        throw std::invalid_argument("kform_from_json: form belongs to complex '" +
                                    j.at("complex").get<std::string>() + "', not '" + c.id + "'");
    const int degree = j.at("degree").get<int>();
    if (degree < 0 || degree > c.max_degree) throw std::invalid_argument("kform_from_json: bad degree");
    KForm f = zero_form(c, degree);
    for (const json& entry : j.at("values")) {
        const long cell = entry.at("cell").get<long>();
        if (cell < 0 || cell >= c.ncells(degree)) throw std::invalid_argument("kform_from_json: cell out of range");
        f.values[cell] = rat_from_json(entry);
    }
    return f;
}

json complex_to_json(const Complex& c) {
    json degrees = json::array();
    for (int k = 0; k <= c.max_degree; ++k) {
        json cells = json::array();
        for (const Cell& cell : c.cells[k]) cells.push_back(json{{"index", cell.index}, {"label", cell.label}});
        json weights = json::array();
        for (const Rat& w : c.weights[k]) weights.push_back(rat_to_json(w));
        degrees.push_back(json{{"degree", k}, {"cells", std::move(cells)}, {"weights", std::move(weights)}});
    }
    json incidence = json::array();
    for (int k = 0; k < c.max_degree; ++k) {
        json entries = json::array();
        for (int u = 0; u < c.ncells(k + 1); ++u)
            for (auto [l, s] : c.incidence[k].lower_of_upper[u]) entries.push_back(json::array({l, u, s}));
        incidence.push_back(json{{"lower_degree", k}, {"entries", std::move(entries)}});
    }
    return json{{"id", c.id},         {"family", c.family},       {"level", c.level},
                {"max_degree", c.max_degree}, {"degrees", std::move(degrees)}, {"incidence", std::move(incidence)}};
}

std::string spectrum_csv(const SpectrumReport& rep) {
    std::ostringstream out;
    out << "degree,eigenvalue,label,multiplicity\n";
    double max_abs = 0;
    for (const auto& p : rep.pairs) max_abs = std::max(max_abs, std::abs(p.eigenvalue));
    const double group_tol = rep.tol * std::max(max_abs, 1.0);
    std::size_t i = 0;
    while (i < rep.pairs.size()) {
        std::size_t j = i;
        while (j < rep.pairs.size() && rep.pairs[j].label == rep.pairs[i].label &&
               std::abs(rep.pairs[j].eigenvalue - rep.pairs[i].eigenvalue) <= group_tol)
            ++j;
        out.precision(15);
        out << rep.degree << "," << rep.pairs[i].eigenvalue << "," << to_string(rep.pairs[i].label) << ","
            << (j - i) << "\n";
        i = j;
    }
    return out.str();
}

std::string pairing_csv(const sg::PairingTable& table) {
    std::ostringstream out;
    out << "omega,omega_prime,num,den\n";
    for (std::size_t r = 0; r < table.rows.size(); ++r)
        for (std::size_t c = 0; c < table.cols.size(); ++c) {
            const Rat& v = table.entries(r, c);
            if (v == 0) continue;
            out << table.rows[r].str() << "," << table.cols[c].str() << "," << numerator(v) << ","
                << denominator(v) << "\n";
        }
    return out.str();
}

std::string singularity_csv(const measure::SingularityReport& rep) {
    std::ostringstream out;
    out << "m,l1_diff_num,l1_diff_den,bound_num,bound_den,pass\n";
    for (const auto& row : rep.rows)
        out << row.m << "," << numerator(row.l1_diff) << "," << denominator(row.l1_diff) << ","
            << numerator(rep.bound) << "," << denominator(rep.bound) << "," << (row.pass ? 1 : 0) << "\n";
    return out.str();
}

std::string growth_csv(const measure::KusuokaGrowth& growth) {
    std::ostringstream out;
    out << "n,mass,ratio\n";
    out.precision(15);
    for (std::size_t n = 0; n < growth.masses.size(); ++n) {
        out << n << "," << static_cast<double>(growth.masses[n]) << ",";
        if (n > 0) out << growth.ratios[n - 1];
        out << "\n";
    }
    return out.str();
}

std::string face_cycles_csv(const std::vector<std::pair<Word, std::array<Rat, 4>>>& rows) {
    std::ostringstream out;
    out << "word,face,num,den\n";
    for (const auto& [w, vals] : rows)
        for (int face = 0; face < 4; ++face)
            out << w.str() << "," << face << "," << numerator(vals[face]) << "," << denominator(vals[face])
                << "\n";
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::invalid_argument("write_file: cannot open " + path);
    f << content;
}

} // namespace hg::io
