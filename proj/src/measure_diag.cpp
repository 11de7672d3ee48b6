#include "hg/measure_diag.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace hg::measure {

namespace {

void require_sg(const Gasket& g, const char* where) {
    if (g.family() != Family::SG) throw std::invalid_argument(std::string(where) + ": SG only");
}

// Corner values reordered as (tail, head, opposite) for a level-0 edge.
std::array<Rat, 3> edge_frame(const Gasket& g, const std::array<Rat, 3>& boundary, int edge_pos) {
    auto [tail, head] = g.edge_corners(edge_pos);
    int opp = 3 - tail - head;
    return {boundary[tail], boundary[head], boundary[opp]};
}

Rat triple_energy(const Rat& a, const Rat& b, const Rat& c) {
    Rat ab = a - b, bc = b - c, ca = c - a;
    return ab * ab + bc * bc + ca * ca;
}

Bigint from_u128(unsigned __int128 v) {
    return (Bigint(static_cast<std::uint64_t>(v >> 64)) << 64) + Bigint(static_cast<std::uint64_t>(v));
}

} // namespace

EdgeRestriction restrict_harmonic(const Gasket& g, const std::array<Rat, 3>& boundary, int edge_pos, int m) {
    require_sg(g, "restrict_harmonic");
    if (m < 0) throw std::invalid_argument("restrict_harmonic: negative level");
    if (m > 24) throw resource_error("restrict_harmonic: sample cap exceeded");
    auto [a, b, c] = edge_frame(g, boundary, edge_pos);

    EdgeRestriction r{m, edge_pos, boundary, {}};
    if (m == 0) {
        r.samples = {a, b};
        return r;
    }
    // Seed with the midpoint value of the one-step extension, then refine by
    // the two-branch edge recursion. The recursion inserts odd samples only,
    // so coarse samples persist at even indices.
    std::vector<Rat> s{a, (2 * a + 2 * b + c) / 5, b};
    for (int lvl = 1; lvl < m; ++lvl) {
        const std::size_t n = s.size() - 1;  // 2^lvl
        std::vector<Rat> fine(2 * n + 1);
        for (std::size_t i = 0; i <= n; ++i) fine[2 * i] = s[i];
        for (std::size_t j = 0; j + 2 <= n; j += 2) {
            fine[2 * j + 1] = Rat(8, 25) * s[j] + Rat(4, 5) * s[j + 1] - Rat(3, 25) * s[j + 2];
            fine[2 * j + 3] = Rat(8, 25) * s[j + 2] + Rat(4, 5) * s[j + 1] - Rat(3, 25) * s[j];
        }
        s = std::move(fine);
    }
    r.samples = std::move(s);
    return r;
}

std::vector<Rat> dyadic_approximant(const EdgeRestriction& r, int m) {
    if (m > r.level) throw std::invalid_argument("dyadic_approximant: insufficient sample depth");
    const std::size_t stride = std::size_t(1) << (r.level - m);
    const std::size_t count = std::size_t(1) << m;
    const Rat scale = pow_rat(Rat(2), m);
    std::vector<Rat> out(count);
    for (std::size_t j = 0; j < count; ++j)
        out[j] = scale * (r.samples[(j + 1) * stride] - r.samples[j * stride]);
    return out;
}

Rat l1_difference(const EdgeRestriction& r, int m) {
    if (m + 1 > r.level) throw std::invalid_argument("l1_difference: insufficient sample depth");
    const std::size_t stride = std::size_t(1) << (r.level - m - 1);
    const std::size_t count = std::size_t(1) << m;
    Rat sum(0);
    for (std::size_t j = 0; j < count; ++j) {
        const Rat nu_even = r.samples[(2 * j + 1) * stride] - r.samples[2 * j * stride];
        const Rat nu_odd = r.samples[(2 * j + 2) * stride] - r.samples[(2 * j + 1) * stride];
        sum += rat_abs(nu_even - nu_odd);
    }
    return sum;
}

SingularityReport singularity_report(const Gasket& g, const std::array<Rat, 3>& boundary, int edge_pos,
                                     int max_level) {
    if (boundary[0] == boundary[1] && boundary[1] == boundary[2])
        throw std::invalid_argument("singularity_report: constant boundary data is vacuous");
    auto [a, b, c] = edge_frame(g, boundary, edge_pos);
    (void)c;
    EdgeRestriction r = restrict_harmonic(g, boundary, edge_pos, max_level);
    SingularityReport rep;
    rep.bound = Rat(3, 25) * rat_abs(b - a);
    rep.all_pass = true;
    for (int m = 0; m < max_level; ++m) {
        Rat diff = l1_difference(r, m);
        bool pass = diff >= rep.bound;
        rep.all_pass = rep.all_pass && pass;
        rep.rows.push_back({m, std::move(diff), pass});
    }
    return rep;
}

CellMeasure energy_measure(const Gasket& g, const std::array<Rat, 3>& h_boundary, int n) {
    require_sg(g, "energy_measure");
    if (n < 0) throw std::invalid_argument("energy_measure: negative level");
    if (g.cell_count(n) > (1L << 22)) throw resource_error("energy_measure: cell cap exceeded");
    CellMeasure out{Family::SG, n, std::vector<Rat>(g.cell_count(n))};
    const Rat factor = pow_rat(Rat(5, 3), n);
    long next = 0;
    // lexicographic descent = cell index order
    auto walk = [&](auto&& self, const Rat& a, const Rat& b, const Rat& c, int depth) -> void {
        if (depth == n) {
            out.values[next++] = factor * triple_energy(a, b, c);
            return;
        }
        auto mid = sg_midpoint_rule(a, b, c);
        self(self, a, mid[0], mid[1], depth + 1);
        self(self, mid[0], b, mid[2], depth + 1);
        self(self, mid[1], mid[2], c, depth + 1);
    };
    walk(walk, h_boundary[0], h_boundary[1], h_boundary[2], 0);
    return out;
}

CellMeasure kusuoka_measure(const Gasket& g, int n) {
    // (0,1,-1) and (-2,1,1) are energy-orthogonal with energies 6 and 18.
    CellMeasure m1 = energy_measure(g, {Rat(0), Rat(1), Rat(-1)}, n);
    CellMeasure m2 = energy_measure(g, {Rat(-2), Rat(1), Rat(1)}, n);
    CellMeasure out{Family::SG, n, std::vector<Rat>(m1.values.size())};
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = m1.values[i] / 6 + m2.values[i] / 18;
    return out;
}

KusuokaGrowth kusuoka_growth(const std::array<Rat, 3>& h_boundary, int depth) {
    if (depth < 0 || depth > 25) throw resource_error("kusuoka_growth: depth cap is 25");

    // Integer-scaled seed: values * D at depth 0, * 5^k D at depth k.
    Bigint den = 1;
    for (const Rat& q : h_boundary) den = lcm(den, denominator(q));
    std::array<Bigint, 3> seed_big;
    Bigint max_abs = 0;
    for (int i = 0; i < 3; ++i) {
        seed_big[i] = numerator(h_boundary[i]) * (den / denominator(h_boundary[i]));
        max_abs = std::max(max_abs, Bigint(abs(seed_big[i])));
    }
    Bigint limit = max_abs;
    for (int i = 0; i < depth; ++i) limit *= 5;
    if (limit * 8 >= (Bigint(1) << 62)) throw resource_error("kusuoka_growth: seed too large for the depth");

    std::vector<Bigint> acc(depth + 1, Bigint(0));
    std::vector<unsigned __int128> partial(depth + 1, 0);
    std::vector<int> pending(depth + 1, 0);
    auto flush = [&](int k) {
        acc[k] += from_u128(partial[k]);
        partial[k] = 0;
        pending[k] = 0;
    };

    // Bottom-edge cells only: children through the two edge corners (0, 1).
    auto walk = [&](auto&& self, std::int64_t a, std::int64_t b, std::int64_t c, int k) -> void {
        const std::int64_t ab = a - b, bc = b - c, ca = c - a;
        const unsigned __int128 e = static_cast<unsigned __int128>(static_cast<__int128>(ab) * ab) +
                                    static_cast<unsigned __int128>(static_cast<__int128>(bc) * bc) +
                                    static_cast<unsigned __int128>(static_cast<__int128>(ca) * ca);
        partial[k] += e;
        if (++pending[k] == 32) flush(k);
        if (k == depth) return;
        const std::int64_t m01 = 2 * a + 2 * b + c, m02 = 2 * a + 2 * c + b, m12 = 2 * b + 2 * c + a;
        self(self, 5 * a, m01, m02, k + 1);
        self(self, m01, 5 * b, m12, k + 1);
    };
    walk(walk, static_cast<std::int64_t>(seed_big[0]), static_cast<std::int64_t>(seed_big[1]),
         static_cast<std::int64_t>(seed_big[2]), 0);

    KusuokaGrowth out;
    Rat fifteen_pow(1);
    const Rat d2 = Rat(den) * Rat(den);
    for (int k = 0; k <= depth; ++k) {
        flush(k);
        out.masses.push_back(Rat(acc[k]) / (fifteen_pow * d2));
        fifteen_pow *= 15;
    }
    for (int k = 0; k + 1 <= depth; ++k)
        out.ratios.push_back(out.masses[k] == 0 ? 0.0
                                                : static_cast<double>(out.masses[k + 1] / out.masses[k]));
    return out;
}

double kusuoka_growth_base() { return (17.0 + std::sqrt(73.0)) / 30.0; }

double delta2_prime_approx(const Gasket& g, const CellMeasure& fnu, const EdgeAddress& edge) {
    require_sg(g, "delta2_prime_approx");
    const int m = edge.word.length();
    const int n = fnu.level;
    if (n < m) throw std::invalid_argument("delta2_prime_approx: measure level below the edge level");
    auto [tail, head] = g.edge_corners(edge.pos);
    Rat sum(0);
    const long count = 1L << (n - m);
    for (long bits = 0; bits < count; ++bits) {
        Word w = edge.word;
        for (int b = n - m - 1; b >= 0; --b) w = w.child((bits >> b) & 1 ? head : tail);
        sum += fnu.values[g.cell_index(w)];
    }
    return std::pow(1.0 / kusuoka_growth_base(), n) * static_cast<double>(sum);
}

std::vector<double> delta2_prime_sequence(const Gasket& g, const EdgeAddress& edge, int n_max) {
    require_sg(g, "delta2_prime_sequence");
    const int m = edge.word.length();
    if (n_max < m) throw std::invalid_argument("delta2_prime_sequence: n_max below the edge level");
    if (n_max - m > 22) throw resource_error("delta2_prime_sequence: depth cap exceeded");

    // Localize both seeds of the Kusuoka pair to the edge's cell.
    std::array<Rat, 3> t1{Rat(0), Rat(1), Rat(-1)};
    std::array<Rat, 3> t2{Rat(-2), Rat(1), Rat(1)};
    auto descend = [&](std::array<Rat, 3>& t, int branch) {
        auto mid = sg_midpoint_rule(t[0], t[1], t[2]);
        if (branch == 0)
            t = {t[0], mid[0], mid[1]};
        else if (branch == 1)
            t = {mid[0], t[1], mid[2]};
        else
            t = {mid[1], mid[2], t[2]};
    };
    for (std::uint8_t s : edge.word.symbols) {
        descend(t1, s);
        descend(t2, s);
    }

    auto [tail, head] = g.edge_corners(edge.pos);
    const int depth = n_max - m;
    std::vector<Rat> sum1(depth + 1, Rat(0)), sum2(depth + 1, Rat(0));
    auto walk = [&](auto&& self, std::array<Rat, 3> a, std::array<Rat, 3> b, int k) -> void {
        sum1[k] += triple_energy(a[0], a[1], a[2]);
        sum2[k] += triple_energy(b[0], b[1], b[2]);
        if (k == depth) return;
        for (int branch : {tail, head}) {
            auto ca = a, cb = b;
            descend(ca, branch);
            descend(cb, branch);
            self(self, std::move(ca), std::move(cb), k + 1);
        }
    };
    walk(walk, t1, t2, 0);

    std::vector<double> out;
    for (int k = 0; k <= depth; ++k) {
        const int n = m + k;
        Rat mass = pow_rat(Rat(5, 3), n) * (sum1[k] / 6 + sum2[k] / 18);
        out.push_back(std::pow(1.0 / kusuoka_growth_base(), n) * static_cast<double>(mass));
    }
    return out;
}

std::vector<Rat> nu_vertex_weights(const Gasket& g, const CellMeasure& nu, int m) {
    require_sg(g, "nu_vertex_weights");
    const int n = nu.level;
    if (n < m) throw std::invalid_argument("nu_vertex_weights: measure level below the spline level");
    const Complex& cm = g.at(m);
    std::vector<Rat> out(cm.ncells(0), Rat(0));
    const long ncell = g.cell_count(m);
    for (long ci = 0; ci < ncell; ++ci) {
        Word w = Word::from_index(ci, m, 3);
        std::array<int, 3> vids{g.vertex_index(m, w, 0), g.vertex_index(m, w, 1), g.vertex_index(m, w, 2)};
        // rows: the three corner splines restricted to this cell
        using Triple = std::array<Rat, 3>;
        std::array<Triple, 3> spline{Triple{1, 0, 0}, Triple{0, 1, 0}, Triple{0, 0, 1}};
        auto walk = [&](auto&& self, const std::array<Triple, 3>& s, int depth, long idx) -> void {
            if (depth == n - m) {
                for (int k = 0; k < 3; ++k)
                    out[vids[k]] += nu.values[idx] * (s[k][0] + s[k][1] + s[k][2]) / 3;
                return;
            }
            std::array<Triple, 3> c0, c1, c2;
            for (int k = 0; k < 3; ++k) {
                auto mid = sg_midpoint_rule(s[k][0], s[k][1], s[k][2]);
                c0[k] = {s[k][0], mid[0], mid[1]};
                c1[k] = {mid[0], s[k][1], mid[2]};
                c2[k] = {mid[1], mid[2], s[k][2]};
            }
            self(self, c0, depth + 1, idx * 3);
            self(self, c1, depth + 1, idx * 3 + 1);
            self(self, c2, depth + 1, idx * 3 + 2);
        };
        walk(walk, spline, 0, ci);
    }
    return out;
}

std::vector<Rat> standard_spline_weights(const Gasket& g, int m) {
    require_sg(g, "standard_spline_weights");
    const Complex& cm = g.at(m);
    std::vector<Rat> out(cm.ncells(0), Rat(0));
    const Rat cell_mass = pow_rat(Rat(1, 3), m);
    const long ncell = g.cell_count(m);
    // On each cell the spline is harmonic, and the integral of a harmonic
    // function over a cell is the cell mass times the mean corner value.
    for (long ci = 0; ci < ncell; ++ci) {
        Word w = Word::from_index(ci, m, 3);
        for (int corner = 0; corner < 3; ++corner) out[g.vertex_index(m, w, corner)] += cell_mass / 3;
    }
    return out;
}

KForm delta1_prime(const Gasket& g, const KForm& f1, const std::vector<Rat>& mu0_prime) {
    require_sg(g, "delta1_prime");
    const Complex& c = *f1.complex;
    if (f1.degree != 1) throw std::invalid_argument("delta1_prime: expects a 1-form");
    if (mu0_prime.size() != static_cast<std::size_t>(c.ncells(0)))
        throw std::invalid_argument("delta1_prime: weight vector size mismatch");
    const Rat factor = pow_rat(Rat(5, 3), c.level);
    KForm out = zero_form(c, 0);
    for (int v = 0; v < c.ncells(0); ++v) {
        Rat acc(0);
        for (auto [e, s] : c.incidence[0].upper_of_lower[v]) acc += s > 0 ? f1.values[e] : -f1.values[e];
        out.values[v] = factor * acc / mu0_prime[v];
    }
    return out;
}

} // namespace hg::measure
