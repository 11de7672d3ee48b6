#include "hg/sg3_harmonic.hpp"

#include <algorithm>
#include <stdexcept>

#include "hg/linalg.hpp"

namespace hg::sg3 {

namespace {

void require_sg3(const Gasket& g, const char* where) {
    if (g.family() != Family::SG3) throw std::invalid_argument(std::string(where) + ": SG3 only");
}

using Perm = std::array<int, 4>;

bool is_even(const Perm& p) {
    int inv = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 == 0;
}

const std::vector<Perm>& rotations() {
    static const std::vector<Perm> perms = [] {
        std::vector<Perm> out;
        Perm p{0, 1, 2, 3};
        do {
            if (is_even(p)) out.push_back(p);
        } while (std::next_permutation(p.begin(), p.end()));
        std::sort(out.begin(), out.end());
        return out;
    }();
    return perms;
}

Perm inverse(const Perm& p) {
    Perm inv{};
    for (int i = 0; i < 4; ++i) inv[p[i]] = i;
    return inv;
}

// Rotation of a level-1 form: child simplices permute along with corners.
KForm rotate_level1(const Gasket& g, const KForm& f, const Perm& p) {
    KForm out = zero_form(*f.complex, 1);
    Perm q = inverse(p);
    for (int child = 0; child < 4; ++child)
        for (int pos = 0; pos < 6; ++pos) {
            auto [a, b] = g.edge_corners(pos);
            int pa = q[a], pb = q[b];
            Rat v = f.values[q[child] * 6 + g.edge_pos(pa, pb)];
            out.values[child * 6 + pos] = pa < pb ? v : -v;
        }
    return out;
}

// Unweighted vertex sums of a rotated seed at the four corners.
std::array<Rat, 4> vertex_sums0(const Gasket& g, const KForm& f) {
    std::array<Rat, 4> s{Rat(0), Rat(0), Rat(0), Rat(0)};
    for (int pos = 0; pos < 6; ++pos) {
        auto [a, b] = g.edge_corners(pos);
        s[a] -= f.values[pos];
        s[b] += f.values[pos];
    }
    return s;
}

} // namespace

KForm base_form(const Gasket& g) {
    require_sg3(g, "base_form");
    const Complex& c0 = g.at(0);
    // Stack the face-sum rows over the vertex-sum rows; level-0 weights are
    // all 1, so the complex coderivative is already the unweighted one.
    RatMat dm = d_matrix(c0, 1);
    RatMat del = delta_matrix(c0, 1);
    RatMat stacked(8, 6);
    for (int r = 0; r < 4; ++r)
        for (int cc = 0; cc < 6; ++cc) {
            stacked(r, cc) = dm(r, cc);
            stacked(r + 4, cc) = del(r, cc);
        }
    std::vector<Rat> rhs{Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(2), Rat(-2)};
    if (!nullspace(stacked).empty()) throw std::logic_error("base_form: solution is not unique");
    auto x = solve(stacked, rhs);
    if (!x) throw std::logic_error("base_form: constraint system inconsistent");
    return KForm{1 /*degree*/, std::move(*x), &c0};
}

KForm rotate_base(const Gasket& g, const KForm& f, const Perm& perm) {
    require_sg3(g, "rotate_base");
    if (!is_even(perm)) throw std::invalid_argument("rotate_base: only rotations (even permutations) are allowed");
    KForm out = zero_form(*f.complex, 1);
    Perm q = inverse(perm);
    for (int pos = 0; pos < 6; ++pos) {
        auto [a, b] = g.edge_corners(pos);
        int pa = q[a], pb = q[b];
        Rat v = f.values[g.edge_pos(pa, pb)];
        out.values[pos] = pa < pb ? v : -v;
    }
    return out;
}

std::array<KForm, 4> placements(const Gasket& g) {
    require_sg3(g, "placements");
    const Complex& c1 = g.at(1);
    const KForm seed = base_form(g);

    // Rotated seed whose vertex sums are +2 at `plus`, -2 at `minus`, zero at
    // the remaining pair. Exactly one rotation realizes each target.
    auto seed_with_sums = [&](int plus, int minus) -> KForm {
        for (const Perm& p : rotations()) {
            if (p[2] != plus || p[3] != minus) continue;
            return rotate_base(g, seed, p);
        }
        throw std::logic_error("placements: no rotation matches the vertex-sum target");
    };

    // Placement with zero form in the top sub-simplex: seat seeds in children
    // 1..3 so that all junction sums cancel. The per-child sign pattern has a
    // single free choice; take s = +1.
    auto assemble = [&](int zero_child, const std::array<int, 3>& signs) -> KForm {
        KForm out = zero_form(c1, 1);
        int k = 0;
        for (int child = 0; child < 4; ++child) {
            if (child == zero_child) continue;
            std::array<int, 2> others{};
            int o = 0;
            for (int v = 0; v < 4; ++v)
                if (v != child && v != zero_child) others[o++] = v;
            int plus = signs[k] > 0 ? others[0] : others[1];
            int minus = signs[k] > 0 ? others[1] : others[0];
            KForm piece = seed_with_sums(plus, minus);
            auto sums = vertex_sums0(g, piece);
            if (sums[child] != 0 || sums[zero_child] != 0)
                throw std::logic_error("placements: rotated seed has sums at the wrong corners");
            for (int pos = 0; pos < 6; ++pos) out.values[child * 6 + pos] = piece.values[pos];
            ++k;
        }
        return out;
    };

    auto is_harmonic = [&](const KForm& f) {
        return d(c1, f).is_zero() && delta(c1, f).is_zero();
    };

    KForm b0;
    bool found = false;
    for (int bits = 0; bits < 8 && !found; ++bits) {
        std::array<int, 3> signs{(bits & 4) ? -1 : 1, (bits & 2) ? -1 : 1, (bits & 1) ? -1 : 1};
        KForm cand = assemble(0, signs);
        if (is_harmonic(cand)) {
            b0 = std::move(cand);
            found = true;
        }
    }
    if (!found) throw std::logic_error("placements: no harmonic assembly exists");

    // The other three placements are rotation images of the first, chosen so
    // that the four sum to zero.
    std::array<std::vector<KForm>, 4> options;
    options[0].push_back(b0);
    for (int t = 1; t < 4; ++t)
        for (const Perm& p : rotations())
            if (p[0] == t) options[t].push_back(rotate_level1(g, b0, p));

    for (const KForm& c1f : options[1])
        for (const KForm& c2f : options[2])
            for (const KForm& c3f : options[3]) {
                KForm total = add(add(b0, c1f), add(c2f, c3f));
                if (total.is_zero()) {
                    if (!is_harmonic(c1f) || !is_harmonic(c2f) || !is_harmonic(c3f))
                        throw std::logic_error("placements: rotated placement lost harmonicity");
                    return {b0, c1f, c2f, c3f};
                }
            }
    throw std::logic_error("placements: no coherent rotation family sums to zero");
}

std::vector<TetraForm> level1_basis(const Gasket& g) {
    const Complex& c1 = g.at(1);
    auto b = placements(g);
    std::vector<TetraForm> basis;
    std::vector<KForm> ortho;
    for (int i = 1; i <= 3; ++i) {
        KForm v = b[i];
        for (const KForm& u : ortho) {
            Rat coef = inner(c1, v, u) / inner(c1, u, u);
            v = sub(v, scale(u, coef));
        }
        if (v.is_zero()) throw std::logic_error("level1_basis: placements span less than three dimensions");
        v.values = integer_normalize(v.values);
        ortho.push_back(v);
        basis.push_back(TetraForm{1, std::move(v), "A" + std::to_string(i)});
    }
    return basis;
}

std::array<Rat, 6> harmonic_map_extend(const std::array<Rat, 4>& vertex_values) {
    return sg3_midpoint_rule(vertex_values);
}

TetraForm extend_form(const Gasket& g, const TetraForm& h) {
    require_sg3(g, "extend_form");
    const int m = h.level;
    const Complex& coarse = g.at(m);
    if (!d(coarse, h.form).is_zero()) throw std::invalid_argument("extend_form: input form is not closed");
    const Complex& fine = g.at(m + 1);
    KForm out = zero_form(fine, 1);
    const long ncell = g.cell_count(m);
    for (long ci = 0; ci < ncell; ++ci) {
        auto parent = [&](int a, int b) -> Rat {
            Rat v = h.form.values[ci * 6 + g.edge_pos(a, b)];
            return a < b ? v : -v;
        };
        for (int child = 0; child < 4; ++child) {
            for (int pos = 0; pos < 6; ++pos) {
                auto [a, b] = g.edge_corners(pos);
                Rat val;
                if (a == child || b == child) {
                    const int other = a == child ? b : a;
                    std::array<int, 2> rest{};
                    int o = 0;
                    for (int v = 0; v < 4; ++v)
                        if (v != child && v != other) rest[o++] = v;
                    val = parent(child, other) / 3 + (parent(child, rest[0]) + parent(child, rest[1])) / 6;
                    if (b == child) val = -val;  // edge runs from the midpoint into the corner
                } else {
                    val = parent(a, b) / 6;
                }
                out.values[(ci * 4 + child) * 6 + pos] = val;
            }
        }
    }
    return {m + 1, std::move(out), h.provenance};
}

TetraForm extend_to(const Gasket& g, const TetraForm& h, int level) {
    TetraForm cur = h;
    while (cur.level < level) cur = extend_form(g, cur);
    if (cur.level != level) throw std::invalid_argument("extend_to: form already above the target level");
    return cur;
}

std::vector<TetraForm> basis(const Gasket& g, int m) {
    require_sg3(g, "basis");
    if (m < 1) throw std::invalid_argument("basis: level must be at least 1");
    auto a = level1_basis(g);
    std::vector<TetraForm> out;
    for (const Word& w : words_up_to(m - 1, 4)) {
        const int seat_level = w.length() + 1;
        for (const TetraForm& aj : a) {
            KForm f = zero_form(g.at(seat_level), 1);
            for (int child = 0; child < 4; ++child)
                for (int pos = 0; pos < 6; ++pos)
                    f.values[g.edge_index(w.child(child), pos)] = aj.form.values[child * 6 + pos];
            TetraForm seated{seat_level, std::move(f), aj.provenance + "@" + w.str()};
            out.push_back(extend_to(g, seated, m));
        }
    }
    return out;
}

Chain face_cycle_chain(const Gasket& g, const Word& w, int face) {
    require_sg3(g, "face_cycle_chain");
    auto [a, b, c] = g.face_vertices(face);
    std::vector<std::pair<int, Rat>> terms;
    auto leg = [&](int child, int from, int to) {
        terms.emplace_back(static_cast<int>(g.edge_index(w.child(child), g.edge_pos(from, to))),
                           Rat(from < to ? 1 : -1));
    };
    leg(b, a, c);  // midpoint of (a,b) to midpoint of (b,c)
    leg(c, b, a);  // midpoint of (b,c) to midpoint of (c,a)
    leg(a, c, b);  // midpoint of (c,a) back to midpoint of (a,b)
    return make_chain(1, std::move(terms));
}

std::array<Rat, 4> face_cycle_integrals(const Gasket& g, const TetraForm& h, const Word& w) {
    if (w.length() >= h.level)
        throw std::invalid_argument("face_cycle_integrals: word must be shorter than the form level");
    std::array<Rat, 4> out;
    for (int face = 0; face < 4; ++face) {
        Chain cyc = g.refine_edge_chain(face_cycle_chain(g, w, face), w.length() + 1, h.level);
        out[face] = integrate(*h.form.complex, h.form, cyc);
    }
    return out;
}

} // namespace hg::sg3
