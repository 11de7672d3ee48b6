#include "hg/gasket.hpp"

#include <algorithm>
#include <map>

namespace hg {

namespace {

// SG3 base edges in canonical order; an edge's native orientation runs from
// the smaller corner to the larger.
constexpr int kSg3EdgePairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

// SG3 base faces oriented as viewed from outside the simplex.
constexpr int kSg3FaceVerts[4][3] = {{0, 1, 2}, {1, 0, 3}, {2, 3, 0}, {3, 2, 1}};

int sg3_edge_pos(int a, int b) {
    if (a > b) std::swap(a, b);
    for (int p = 0; p < 6; ++p)
        if (kSg3EdgePairs[p][0] == a && kSg3EdgePairs[p][1] == b) return p;
    throw std::logic_error("sg3_edge_pos: bad corner pair");
}

} // namespace

std::array<Rat, 3> sg_midpoint_rule(const Rat& a, const Rat& b, const Rat& c) {
    return {(2 * a + 2 * b + c) / 5, (2 * a + 2 * c + b) / 5, (2 * b + 2 * c + a) / 5};
}

std::array<Rat, 6> sg3_midpoint_rule(const std::array<Rat, 4>& h) {
    std::array<Rat, 6> out;
    Rat total = h[0] + h[1] + h[2] + h[3];
    for (int p = 0; p < 6; ++p) {
        int i = kSg3EdgePairs[p][0], j = kSg3EdgePairs[p][1];
        out[p] = (h[i] + h[j]) / 3 + (total - h[i] - h[j]) / 6;
    }
    return out;
}

Gasket::Gasket(Family family, long cell_cap, std::optional<Rat> edge_weight_factor)
    : family_(family), cell_cap_(cell_cap) {
    if (family == Family::SG) {
        n_ = 3;
        epc_ = 3;
        fpc_ = 1;
        top_ = 2;
        edge_factor_ = edge_weight_factor.value_or(Rat(5, 3));
    } else {
        n_ = 4;
        epc_ = 6;
        fpc_ = 4;
        top_ = 3;
        edge_factor_ = edge_weight_factor.value_or(Rat(3, 2));
    }
    if (edge_factor_ <= 0) throw std::invalid_argument("Gasket: edge weight factor must be positive");
}

long Gasket::cell_count(int level) const {
    long c = 1;
    for (int i = 0; i < level; ++i) c *= n_;
    return c;
}

std::pair<int, int> Gasket::edge_corners(int pos) const {
    if (family_ == Family::SG) return {pos, (pos + 1) % 3};
    return {kSg3EdgePairs[pos][0], kSg3EdgePairs[pos][1]};
}

int Gasket::edge_pos(int a, int b) const {
    for (int p = 0; p < epc_; ++p) {
        auto [t, h] = edge_corners(p);
        if ((t == a && h == b) || (t == b && h == a)) return p;
    }
    throw std::invalid_argument("edge_pos: corners do not span a base edge");
}

std::array<int, 3> Gasket::face_vertices(int pos) const {
    if (family_ != Family::SG3) throw std::invalid_argument("face_vertices: SG3 only");
    return {kSg3FaceVerts[pos][0], kSg3FaceVerts[pos][1], kSg3FaceVerts[pos][2]};
}

const Complex& Gasket::at(int level) const {
    if (level < 0) throw std::invalid_argument("Gasket::at: negative level");
    if (static_cast<std::size_t>(level) >= cache_.size()) {
        cache_.resize(level + 1);
        vertex_ids_.resize(level + 1);
        vertex_addrs_.resize(level + 1);
    }
    if (!cache_[level]) build_level(level);
    return *cache_[level];
}

void Gasket::build_vertex_table(int level) const {
    const long ncell = cell_count(level);
    std::vector<int> table(ncell * n_, -1);
    std::vector<std::pair<Word, int>> addrs;
    std::map<std::pair<Word, int>, int> ids;
    for (long ci = 0; ci < ncell; ++ci) {
        Word w = Word::from_index(ci, level, n_);
        for (int corner = 0; corner < n_; ++corner) {
            auto key = canonical_vertex(w, corner);
            auto [it, fresh] = ids.try_emplace(key, static_cast<int>(addrs.size()));
            if (fresh) addrs.push_back(key);
            table[ci * n_ + corner] = it->second;
        }
    }
    vertex_ids_[level] = std::move(table);
    vertex_addrs_[level] = std::move(addrs);
}

int Gasket::vertex_index(int level, const Word& w, int corner) const {
    at(level);
    if (w.length() != level) throw std::invalid_argument("vertex_index: word length != level");
    return vertex_ids_[level][w.index(n_) * n_ + corner];
}

long Gasket::resolve(int degree, const Word& w, int base_index, int level) const {
    if (w.length() != level) throw std::invalid_argument("resolve: word length != target level");
    for (std::uint8_t s : w.symbols)
        if (s >= n_) throw std::invalid_argument("resolve: word symbol out of range");
    const int base_count = degree == 0 ? n_ : degree == 1 ? epc_ : (degree == top_ ? 1 : fpc_);
    if (degree < 0 || degree > top_ || base_index < 0 || base_index >= base_count)
        throw std::invalid_argument("resolve: bad base cell");
    if (degree == 0) return vertex_index(level, w, base_index);
    if (degree == 1) return edge_index(w, base_index);
    if (degree == top_) return cell_index(w);
    return face_index(w, base_index);  // SG3 degree 2
}

void Gasket::build_level(int level) const {
    long ncell = 1;
    for (int i = 0; i < level; ++i) {
        ncell *= n_;
        if (ncell * epc_ > cell_cap_)
            throw resource_error("level " + std::to_string(level) + " exceeds the cell cap");
    }
    build_vertex_table(level);

    auto cx = std::make_unique<Complex>();
    cx->family = family_ == Family::SG ? "sg" : "sg3";
    cx->level = level;
    cx->id = cx->family + ":" + std::to_string(level);
    cx->max_degree = top_;
    cx->cells.resize(top_ + 1);
    cx->weights.resize(top_ + 1);
    cx->incidence.resize(top_);

    const auto& addrs = vertex_addrs_[level];
    const int nvert = static_cast<int>(addrs.size());
    for (int v = 0; v < nvert; ++v) {
        auto& [w, corner] = addrs[v];
        cx->cells[0].push_back({0, v, w.str() + ":" + std::to_string(corner)});
    }
    for (long ci = 0; ci < ncell; ++ci) {
        Word w = Word::from_index(ci, level, n_);
        for (int p = 0; p < epc_; ++p)
            cx->cells[1].push_back({1, static_cast<int>(ci * epc_ + p), w.str() + ":e" + std::to_string(p)});
        if (family_ == Family::SG3)
            for (int p = 0; p < fpc_; ++p)
                cx->cells[2].push_back({2, static_cast<int>(ci * fpc_ + p), w.str() + ":f" + std::to_string(p)});
        cx->cells[top_].push_back({top_, static_cast<int>(ci), w.str()});
    }

    // vertex <-> edge incidence
    cx->incidence[0].resize(nvert, ncell * epc_);
    for (long ci = 0; ci < ncell; ++ci)
        for (int p = 0; p < epc_; ++p) {
            auto [tail, head] = edge_corners(p);
            const long e = ci * epc_ + p;
            cx->incidence[0].add(vertex_ids_[level][ci * n_ + tail], e, -1);
            cx->incidence[0].add(vertex_ids_[level][ci * n_ + head], e, +1);
        }

    if (family_ == Family::SG) {
        // edge <-> face: the three edges of a cell run counterclockwise
        cx->incidence[1].resize(ncell * epc_, ncell);
        for (long ci = 0; ci < ncell; ++ci)
            for (int p = 0; p < 3; ++p) cx->incidence[1].add(ci * 3 + p, ci, +1);
    } else {
        cx->incidence[1].resize(ncell * epc_, ncell * fpc_);
        cx->incidence[2].resize(ncell * fpc_, ncell);
        for (long ci = 0; ci < ncell; ++ci) {
            for (int fp = 0; fp < 4; ++fp) {
                const int* f = kSg3FaceVerts[fp];
                for (int k = 0; k < 3; ++k) {
                    int a = f[k], b = f[(k + 1) % 3];
                    int sign = a < b ? +1 : -1;
                    cx->incidence[1].add(ci * epc_ + sg3_edge_pos(a, b), ci * fpc_ + fp, sign);
                }
                cx->incidence[2].add(ci * fpc_ + fp, ci, +1);
            }
        }
    }

    // Weights: most symmetric level-0 choice transported level by level.
    const Rat third(1, 3), quarter(1, 4);
    cx->weights[0].assign(nvert, Rat(0));
    if (family_ == Family::SG) {
        Rat boundary_w = level == 0 ? third : pow_rat(third, level);
        Rat interior_w = 2 * pow_rat(third, level);
        for (int v = 0; v < nvert; ++v) {
            auto& [w, corner] = addrs[v];
            bool on_v0 = std::all_of(w.symbols.begin(), w.symbols.end(),
                                     [&](std::uint8_t s) { return s == corner; });
            cx->weights[0][v] = on_v0 ? boundary_w : interior_w;
        }
        cx->weights[1].assign(ncell * epc_, pow_rat(Rat(5, 3), level));
        cx->weights[2].assign(ncell, pow_rat(third, level));
    } else {
        Rat boundary_w = pow_rat(quarter, level);
        for (int v = 0; v < nvert; ++v) {
            auto& [w, corner] = addrs[v];
            bool on_v0 = std::all_of(w.symbols.begin(), w.symbols.end(),
                                     [&](std::uint8_t s) { return s == corner; });
            cx->weights[0][v] = on_v0 ? boundary_w : 2 * boundary_w;
        }
        cx->weights[1].assign(ncell * epc_, pow_rat(Rat(3, 2), level));
        cx->weights[2].assign(ncell * fpc_, pow_rat(quarter, level));
        cx->weights[3].assign(ncell, pow_rat(quarter, level));
    }

    cache_[level] = std::move(cx);
}

std::array<EdgeAddress, 2> Gasket::edge_children(const EdgeAddress& e) const {
    auto [tail, head] = edge_corners(e.pos);
    return {EdgeAddress{e.word.child(tail), e.pos}, EdgeAddress{e.word.child(head), e.pos}};
}

Chain Gasket::refine_edge_chain(const Chain& ch, int from_level, int to_level) const {
    if (to_level < from_level) throw std::invalid_argument("refine_edge_chain: target level too small");
    Chain cur = ch;
    for (int lvl = from_level; lvl < to_level; ++lvl) {
        std::vector<std::pair<int, Rat>> next;
        for (auto& [idx, a] : cur.terms) {
            Word w = Word::from_index(idx / epc_, lvl, n_);
            auto kids = edge_children({w, static_cast<int>(idx % epc_)});
            for (auto& k : kids) next.emplace_back(static_cast<int>(edge_index(k.word, k.pos)), a);
        }
        cur = make_chain(1, std::move(next));
    }
    return cur;
}

Chain Gasket::boundary_chain(int level) const {
    if (family_ != Family::SG) throw std::invalid_argument("boundary_chain: only defined for SG");
    Chain base = make_chain(1, {{0, Rat(1)}, {1, Rat(1)}, {2, Rat(1)}});
    return refine_edge_chain(base, 0, level);
}

CellMeasure Gasket::standard_measure(int level) const {
    CellMeasure m{family_, level, {}};
    m.values.assign(cell_count(level), pow_rat(Rat(1, n_), level));
    return m;
}

CellMeasure Gasket::refine(const CellMeasure& m) const {
    CellMeasure out{family_, m.level + 1, {}};
    out.values.assign(m.values.size() * n_, Rat(0));
    for (std::size_t i = 0; i < m.values.size(); ++i)
        for (int j = 0; j < n_; ++j) out.values[i * n_ + j] = m.values[i] / n_;
    return out;
}

Rat Gasket::graph_energy(const KForm& f0) const {
    if (f0.degree != 0) throw std::invalid_argument("graph_energy: expects a 0-form");
    const Complex& c = *f0.complex;
    KForm df = d(c, f0);
    return inner(c, df, df);
}

KForm Gasket::kigami_laplacian0(const KForm& f0) const {
    const Complex& c = *f0.complex;
    if (f0.degree != 0) throw std::invalid_argument("kigami_laplacian0: expects a 0-form");
    KForm out = zero_form(c, 0);
    for (int v = 0; v < c.ncells(0); ++v) {
        Rat acc(0);
        for (auto [e, s] : c.incidence[0].upper_of_lower[v]) {
            // the other endpoint of e
            for (auto [u, su] : c.incidence[0].lower_of_upper[e])
                if (u != v) acc += c.weights[1][e] * (f0.values[v] - f0.values[u]);
        }
        out.values[v] = acc / c.weights[0][v];
    }
    return out;
}

std::vector<Rat> Gasket::extend_harmonic0(int m, const std::vector<Rat>& values) const {
    const Complex& fine = at(m + 1);
    at(m);
    if (values.size() != static_cast<std::size_t>(at(m).ncells(0)))
        throw std::invalid_argument("extend_harmonic0: value count != vertex count");
    std::vector<Rat> out(fine.ncells(0), Rat(0));
    const long ncell = cell_count(m);
    for (long ci = 0; ci < ncell; ++ci) {
        Word w = Word::from_index(ci, m, n_);
        std::vector<Rat> corner(n_);
        for (int c = 0; c < n_; ++c) corner[c] = values[vertex_ids_[m][ci * n_ + c]];
        for (int c = 0; c < n_; ++c) out[vertex_index(m + 1, w.child(c), c)] = corner[c];
        if (family_ == Family::SG) {
            auto mid = sg_midpoint_rule(corner[0], corner[1], corner[2]);
            out[vertex_index(m + 1, w.child(0), 1)] = mid[0];
            out[vertex_index(m + 1, w.child(0), 2)] = mid[1];
            out[vertex_index(m + 1, w.child(1), 2)] = mid[2];
        } else {
            auto mid = sg3_midpoint_rule({corner[0], corner[1], corner[2], corner[3]});
            for (int p = 0; p < 6; ++p) {
                auto [i, j] = edge_corners(p);
                out[vertex_index(m + 1, w.child(i), j)] = mid[p];
            }
        }
    }
    return out;
}

std::vector<Rat> Gasket::harmonic0_values(const std::vector<Rat>& corner_values, int level) const {
    if (corner_values.size() != static_cast<std::size_t>(n_))
        throw std::invalid_argument("harmonic0_values: need one value per corner");
    std::vector<Rat> vals = corner_values;  // level-0 vertex ids are the corners in order
    for (int m = 0; m < level; ++m) vals = extend_harmonic0(m, vals);
    return vals;
}

} // namespace hg
