#include "hg/complex.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hg {

Chain make_chain(int degree, std::vector<std::pair<int, Rat>> terms) {
    std::map<int, Rat> acc;
    for (auto& [i, q] : terms) acc[i] += q;
    Chain ch{degree, {}};
    for (auto& [i, q] : acc)
        if (q != 0) ch.terms.emplace_back(i, q);
    return ch;
}

ValidationReport validate_complex(const Complex& c) {
    ValidationReport rep;
    auto note = [&rep](std::string msg) { rep.violations.push_back(std::move(msg)); };

    for (int k = 0; k <= c.max_degree; ++k) {
        if (c.weights[k].size() != c.cells[k].size())
            note("weight vector size mismatch at degree " + std::to_string(k));
        for (std::size_t i = 0; i < c.weights[k].size(); ++i)
            if (c.weights[k][i] <= 0)
                note("nonpositive weight at degree " + std::to_string(k) + " cell " + std::to_string(i));
    }

    for (int k = 0; k < c.max_degree; ++k) {
        const Incidence& inc = c.incidence[k];
        for (int u = 0; u < c.ncells(k + 1); ++u)
            for (auto [l, s] : inc.lower_of_upper[u])
                if (s != 1 && s != -1)
                    note("incidence sign not +-1 between degree " + std::to_string(k) + " cell " +
                         std::to_string(l) + " and degree " + std::to_string(k + 1) + " cell " + std::to_string(u));
    }

    // Chain condition: interior-degree cells must have faces both ways.
    for (int k = 0; k <= c.max_degree; ++k) {
        for (int i = 0; i < c.ncells(k); ++i) {
            if (k > 0 && c.incidence[k - 1].lower_of_upper[i].empty())
                note("degree " + std::to_string(k) + " cell " + std::to_string(i) + " has no face of degree " +
                     std::to_string(k - 1));
            if (k < c.max_degree && c.ncells(k + 1) > 0 && c.incidence[k].upper_of_lower[i].empty())
                note("degree " + std::to_string(k) + " cell " + std::to_string(i) + " is a face of no degree " +
                     std::to_string(k + 1) + " cell");
        }
    }

    // Double cancellation: sgn(e_{k-1}, e_k) sgn(e_k, e_{k+1}) sums to zero
    // over the middle cell for every incident outer pair.
    for (int k = 1; k < c.max_degree; ++k) {
        const Incidence& lo = c.incidence[k - 1];
        const Incidence& hi = c.incidence[k];
        for (int u = 0; u < c.ncells(k + 1); ++u) {
            std::map<int, int> sums;  // (k-1)-cell -> accumulated sign product
            for (auto [mid, s_mu] : hi.lower_of_upper[u])
                for (auto [low, s_lm] : lo.lower_of_upper[mid]) sums[low] += s_lm * s_mu;
            for (auto [low, sum] : sums)
                if (sum != 0)
                    note("parity cancellation fails between degree " + std::to_string(k - 1) + " cell " +
                         std::to_string(low) + " and degree " + std::to_string(k + 1) + " cell " + std::to_string(u));
        }
    }
    return rep;
}

static void check_form(const Complex& c, const KForm& f, const char* where) {
    if (f.complex != &c) throw std::invalid_argument(std::string(where) + ": form belongs to another complex");
    if (f.degree >= 0 && f.values.size() != static_cast<std::size_t>(c.ncells(f.degree)))
        throw std::invalid_argument(std::string(where) + ": form size does not match its degree class");
}

KForm d(const Complex& c, const KForm& f) {
    check_form(c, f, "d");
    KForm out = zero_form(c, f.degree + 1);
    if (f.degree >= c.max_degree || f.degree < 0) return out;  // top degree: identically zero
    const Incidence& inc = c.incidence[f.degree];
    for (int u = 0; u < c.ncells(f.degree + 1); ++u) {
        Rat acc(0);
        for (auto [l, s] : inc.lower_of_upper[u]) acc += s > 0 ? f.values[l] : -f.values[l];
        out.values[u] = acc;
    }
    return out;
}

KForm delta(const Complex& c, const KForm& f) {
    check_form(c, f, "delta");
    KForm out = zero_form(c, f.degree - 1);
    if (f.degree <= 0) return out;  // bottom degree: empty zero form
    const Incidence& inc = c.incidence[f.degree - 1];
    for (int l = 0; l < c.ncells(f.degree - 1); ++l) {
        Rat acc(0);
        for (auto [u, s] : inc.upper_of_lower[l]) {
            if (f.values[u] == 0) continue;
            Rat term = f.values[u] * c.weights[f.degree][u];
            acc += s > 0 ? term : -term;
        }
        out.values[l] = acc / c.weights[f.degree - 1][l];
    }
    return out;
}

Rat inner(const Complex& c, const KForm& f, const KForm& g) {
    check_form(c, f, "inner");
    check_form(c, g, "inner");
    if (f.degree != g.degree) throw std::invalid_argument("inner: degree mismatch");
    Rat acc(0);
    if (f.degree < 0) return acc;
    for (std::size_t i = 0; i < f.values.size(); ++i)
        if (f.values[i] != 0 && g.values[i] != 0) acc += c.weights[f.degree][i] * f.values[i] * g.values[i];
    return acc;
}

Rat energy_bilinear(const Complex& c, const KForm& f, const KForm& g) {
    if (f.degree != g.degree) throw std::invalid_argument("energy: degree mismatch");
    Rat acc(0);
    if (f.degree < c.max_degree) acc += inner(c, d(c, f), d(c, g));
    if (f.degree > 0) acc += inner(c, delta(c, f), delta(c, g));
    return acc;
}

Rat energy(const Complex& c, const KForm& f) { return energy_bilinear(c, f, f); }

RatMat d_matrix(const Complex& c, int k) {
    RatMat m(c.ncells(k + 1), c.ncells(k));
    if (k < 0 || k >= c.max_degree) return m;
    const Incidence& inc = c.incidence[k];
    for (int u = 0; u < c.ncells(k + 1); ++u)
        for (auto [l, s] : inc.lower_of_upper[u]) m(u, l) = s;
    return m;
}

RatMat delta_matrix(const Complex& c, int k) {
    RatMat m(c.ncells(k - 1), c.ncells(k));
    if (k <= 0 || k > c.max_degree) return m;
    const Incidence& inc = c.incidence[k - 1];
    for (int l = 0; l < c.ncells(k - 1); ++l)
        for (auto [u, s] : inc.upper_of_lower[l])
            m(l, u) = Rat(s) * c.weights[k][u] / c.weights[k - 1][l];
    return m;
}

RatMat laplacian_matrix(const Complex& c, int k) {
    RatMat m(c.ncells(k), c.ncells(k));
    if (k < c.max_degree) m = m + delta_matrix(c, k + 1) * d_matrix(c, k);
    if (k > 0) m = m + d_matrix(c, k - 1) * delta_matrix(c, k);
    return m;
}

Chain boundary(const Complex& c, const Chain& ch) {
    if (ch.degree < 1) throw std::invalid_argument("boundary: chain degree must be at least 1");
    const Incidence& inc = c.incidence[ch.degree - 1];
    std::vector<std::pair<int, Rat>> terms;
    for (auto& [i, a] : ch.terms)
        for (auto [l, s] : inc.lower_of_upper[i]) terms.emplace_back(l, a * s);
    return make_chain(ch.degree - 1, std::move(terms));
}

Rat integrate(const Complex& c, const KForm& f, const Chain& ch) {
    check_form(c, f, "integrate");
    if (f.degree != ch.degree) throw std::invalid_argument("integrate: degree mismatch");
    Rat acc(0);
    for (auto& [i, a] : ch.terms) acc += a * f.values[i];
    return acc;
}

static void check_pair(const KForm& f, const KForm& g, const char* where) {
    if (f.degree != g.degree || f.complex != g.complex || f.values.size() != g.values.size())
        throw std::invalid_argument(std::string(where) + ": mismatched forms");
}

KForm add(const KForm& f, const KForm& g) {
    check_pair(f, g, "add");
    KForm out = f;
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += g.values[i];
    return out;
}

KForm sub(const KForm& f, const KForm& g) {
    check_pair(f, g, "sub");
    KForm out = f;
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] -= g.values[i];
    return out;
}

KForm scale(const KForm& f, const Rat& s) {
    KForm out = f;
    for (Rat& v : out.values) v *= s;
    return out;
}

} // namespace hg
