#include "qdomain/random.hpp"

#include "qdomain/lift.hpp"

#include <algorithm>
#include <numeric>

namespace qdomain::rnd {

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Matrix random_matrix(Rng& rng, int rows, int cols) {
    std::normal_distribution<double> g(0.0, 1.0);
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = cdouble(g(rng), g(rng));
    return m;
}

Matrix random_unitary(Rng& rng, int n) {
    Eigen::HouseholderQR<Matrix> qr(random_matrix(rng, n, n));
    Matrix q = qr.householderQ() * Matrix::Identity(n, n);
    // fix the phases so the distribution does not depend on the QR convention
    const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int j = 0; j < n; ++j) {
        const double a = std::abs(r(j, j));
        if (a > 0) q.col(j) *= r(j, j) / a;
    }
    return q;
}

OperatorSubspace random_subspace(Rng& rng, int dom_dim, int cod_dim, int k) {
    k = std::clamp(k, 0, dom_dim * cod_dim);
    std::vector<Matrix> span;
    for (int i = 0; i < k; ++i) span.push_back(random_matrix(rng, cod_dim, dom_dim));
    return OperatorSubspace::span(span, dom_dim, cod_dim);
}

QuantumSet random_qset(Rng& rng, int min_atoms, int max_atoms, int max_dim, const std::string& prefix) {
    QuantumSet x;
    const int n = uniform_int(rng, min_atoms, max_atoms);
    for (int i = 1; i <= n; ++i) x.add(prefix + std::to_string(i), uniform_int(rng, 1, max_dim));
    return x;
}

BinaryRelation random_relation(Rng& rng, const QuantumSet& x, const QuantumSet& y, double density, int max_comp_dim) {
    BinaryRelation r(x, y);
    for (const auto& [a, da] : x)
        for (const auto& [b, db] : y)
            if (coin(rng, density)) r.set(a, b, random_subspace(rng, da, db, uniform_int(rng, 1, max_comp_dim)));
    return r;
}

// ---------------------------------------------------------------------------

BinaryRelation BlockFunction::relation() const {
    BinaryRelation r(dom, cod);
    for (const auto& [h, list] : blocks) {
        std::map<AtomId, std::vector<Matrix>> by_target;
        for (const auto& b : list) by_target[b.target].push_back(b.rows);
        for (const auto& [y, span] : by_target) r.set(h, y, OperatorSubspace::span(span, dom.dim(h), cod.dim(y)));
    }
    return r;
}

namespace {

// Target atoms (with repetition) whose dimensions sum to d, chosen at random.
std::optional<std::vector<AtomId>> random_split(Rng& rng, int d, const QuantumSet& y) {
    std::vector<bool> reach(d + 1, false);
    reach[0] = true;
    for (int s = 1; s <= d; ++s)
        for (const auto& [a, da] : y)
            if (da <= s && reach[s - da]) reach[s] = true;
    if (!reach[d]) return std::nullopt;
    std::vector<AtomId> out;
    int left = d;
    while (left > 0) {
        std::vector<AtomId> ok;
        for (const auto& [a, da] : y)
            if (da <= left && reach[left - da]) ok.push_back(a);
        const AtomId pick = ok[uniform_int(rng, 0, static_cast<int>(ok.size()) - 1)];
        out.push_back(pick);
        left -= y.dim(pick);
    }
    return out;
}

std::vector<Block> blocks_for(Rng& rng, int d, const std::vector<AtomId>& targets, const QuantumSet& y) {
    const Matrix u = random_unitary(rng, d);
    std::vector<Block> out;
    int row = 0;
    for (const auto& t : targets) {
        const int m = y.dim(t);
        out.push_back(Block{t, u.middleRows(row, m)});
        row += m;
    }
    return out;
}

}  // namespace

std::optional<BlockFunction> random_block_function(Rng& rng, const QuantumSet& x, const QuantumSet& y) {
    BlockFunction f{x, y, {}};
    for (const auto& [h, d] : x) {
        auto split = random_split(rng, d, y);
        if (!split) return std::nullopt;
        f.blocks[h] = blocks_for(rng, d, *split, y);
    }
    return f;
}

std::optional<BinaryRelation> random_function(Rng& rng, const QuantumSet& x, const QuantumSet& y) {
    auto f = random_block_function(rng, x, y);
    if (!f) return std::nullopt;
    return f->relation();
}

// ---------------------------------------------------------------------------

ClassicalPoset random_classical_poset(Rng& rng, int min_n, int max_n, const std::string& prefix) {
    const int n = uniform_int(rng, min_n, max_n);
    std::vector<std::string> el;
    for (int i = 1; i <= n; ++i) el.push_back(prefix + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> pairs;
    // edges only from lower to higher index keep it acyclic
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng, 0.45)) pairs.emplace_back(el[i], el[j]);
    return classical_poset(el, pairs);
}

namespace {

// C1 + span{U E_ij U^dagger} for a set of strictly upper index pairs closed under products.
QuantumPoset triangular_order(Rng& rng, int n, const AtomId& id) {
    static const std::vector<std::vector<std::pair<int, int>>> algebras3 = {
        {{0, 1}}, {{1, 2}}, {{0, 2}}, {{0, 1}, {0, 2}}, {{0, 2}, {1, 2}}, {{0, 1}, {0, 2}, {1, 2}}};
    std::vector<std::pair<int, int>> pairs =
        n == 2 ? std::vector<std::pair<int, int>>{{0, 1}} : algebras3[uniform_int(rng, 0, 5)];
    const Matrix u = random_unitary(rng, n);
    std::vector<Matrix> span{Matrix::Identity(n, n)};
    for (const auto& [i, j] : pairs) {
        Matrix e = Matrix::Zero(n, n);
        e(i, j) = 1.0;
        span.push_back(u * e * u.adjoint());
    }
    BinaryRelation r(atomic(n, id), atomic(n, id));
    r.set(id, id, OperatorSubspace::span(span, n, n));
    return QuantumPoset(std::move(r));
}

QuantumPoset leaf(Rng& rng, bool small, const std::string& prefix) {
    switch (uniform_int(rng, 0, 3)) {
        case 0: return flat_order(random_qset(rng, 1, small ? 2 : 3, small ? 2 : 3, prefix));
        case 1: return classical_of_poset(random_classical_poset(rng, 1, small ? 2 : 4, prefix));
        case 2: return triangular_order(rng, 2, prefix + "h");
        default: return small ? triangular_order(rng, 2, prefix + "h") : triangular_order(rng, 3, prefix + "h");
    }
}

}  // namespace

QuantumPoset random_poset(Rng& rng, int depth, const std::string& prefix) {
    if (depth <= 0) return leaf(rng, false, prefix);
    switch (uniform_int(rng, 0, 4)) {
        case 0:
        case 1: return leaf(rng, false, prefix);
        case 2: return poset_product(leaf(rng, true, prefix + "l"), leaf(rng, true, prefix + "r"));
        case 3: return poset_coproduct({leaf(rng, true, prefix), leaf(rng, true, prefix)}, {"a", "b"}).poset;
        default: return lift_poset(random_poset(rng, depth - 1, prefix)).lifted;
    }
}

QuantumPoset random_poset_with_points(Rng& rng, const std::string& prefix) {
    switch (uniform_int(rng, 0, 3)) {
        case 0: return classical_of_poset(random_classical_poset(rng, 1, 3, prefix));
        case 1:
            return poset_coproduct({classical_of_poset(random_classical_poset(rng, 1, 2, prefix)),
                                    triangular_order(rng, 2, prefix + "h")},
                                   {"a", "b"})
                .poset;
        case 2: return lift_poset(leaf(rng, true, prefix)).lifted;
        default: {
            QuantumSet x = random_qset(rng, 1, 2, 2, prefix);
            x.add(prefix + "p", 1);
            return flat_order(x);
        }
    }
}

// ---------------------------------------------------------------------------

namespace {

// One ⊑-increment of f; returns f itself when nothing was found.
BlockFunction increment(Rng& rng, const BlockFunction& f, const QuantumPoset& target) {
    const QuantumSet& y = target.carrier();
    const BinaryRelation& s = target.order();
    const BinaryRelation fr = f.relation();
    const std::vector<AtomId> sources = f.dom.ids();
    for (int attempt = 0; attempt < 8; ++attempt) {
        BlockFunction g = f;
        const AtomId h = sources[uniform_int(rng, 0, static_cast<int>(sources.size()) - 1)];
        std::vector<Block>& list = g.blocks[h];
        const int op = uniform_int(rng, 0, 2);
        if (op == 0) {
            // move one block along an identity in S(X, X')
            Block& b = list[uniform_int(rng, 0, static_cast<int>(list.size()) - 1)];
            std::vector<AtomId> ok;
            for (const auto& [a, da] : y)
                if (a != b.target && da == y.dim(b.target) &&
                    contains_matrix(s.at(b.target, a), Matrix::Identity(da, da)))
                    ok.push_back(a);
            if (ok.empty()) continue;
            b.target = ok[uniform_int(rng, 0, static_cast<int>(ok.size()) - 1)];
        } else if (op == 1) {
            // merge some blocks into one atom through a random unitary
            const std::vector<AtomId> atoms = y.ids();
            const AtomId t = atoms[uniform_int(rng, 0, static_cast<int>(atoms.size()) - 1)];
            const int m = y.dim(t);
            std::vector<std::size_t> order(list.size());
            std::iota(order.begin(), order.end(), 0);
            std::shuffle(order.begin(), order.end(), rng);
            std::vector<std::size_t> chosen;
            int sum = 0;
            for (std::size_t i : order) {
                const int bi = static_cast<int>(list[i].rows.rows());
                if (sum + bi <= m) {
                    chosen.push_back(i);
                    sum += bi;
                }
                if (sum == m) break;
            }
            if (sum != m) continue;
            Matrix stacked(m, list.front().rows.cols());
            int row = 0;
            for (std::size_t i : chosen) {
                stacked.middleRows(row, list[i].rows.rows()) = list[i].rows;
                row += static_cast<int>(list[i].rows.rows());
            }
            std::sort(chosen.rbegin(), chosen.rend());
            for (std::size_t i : chosen) list.erase(list.begin() + static_cast<std::ptrdiff_t>(i));
            list.push_back(Block{t, random_unitary(rng, m) * stacked});
        } else {
            auto r = random_block_function(rng, f.dom, y);
            if (!r) continue;
            g = *r;
        }
        if (hom_leq(fr, g.relation(), target)) return g;
    }
    return f;
}

}  // namespace

std::optional<MonotoneChain> random_chain(Rng& rng, const QuantumSet& source, const QuantumPoset& target, int steps) {
    auto f = random_block_function(rng, source, target.carrier());
    if (!f) return std::nullopt;
    MonotoneChain c{source, target, {f->relation()}, true};
    for (int i = 1; i < steps; ++i) {
        if (!coin(rng, 0.2)) *f = increment(rng, *f, target);
        c.entries.push_back(f->relation());
    }
    c.entries.push_back(c.entries.back());
    return c;
}

std::optional<BinaryRelation> random_monotone(Rng& rng, const QuantumPoset& x, const QuantumPoset& y, int tries) {
    for (int i = 0; i < tries; ++i) {
        auto f = random_function(rng, x.carrier(), y.carrier());
        if (!f) break;
        if (is_monotone(*f, x, y)) return f;
    }
    const QuantumSet one = one_dim_part(y.carrier());
    if (!one.empty()) {
        const std::vector<AtomId> pts = one.ids();
        const AtomId p = pts[uniform_int(rng, 0, static_cast<int>(pts.size()) - 1)];
        return compose(point(y.carrier(), p), terminal_map(x.carrier()));
    }
    if (x.carrier() == y.carrier() && equals(x.order(), y.order())) return identity(x.carrier());
    return std::nullopt;
}

// ---------------------------------------------------------------------------

Partition random_partition(Rng& rng, int dim, int cells) {
    cells = std::clamp(cells, 1, dim);
    // cut points splitting the columns of a random unitary into nonempty groups
    std::vector<int> cut(dim - 1);
    std::iota(cut.begin(), cut.end(), 1);
    std::shuffle(cut.begin(), cut.end(), rng);
    cut.resize(cells - 1);
    cut.push_back(0);
    cut.push_back(dim);
    std::sort(cut.begin(), cut.end());
    const Matrix u = random_unitary(rng, dim);
    Partition p{dim, {}};
    for (int i = 0; i + 1 < static_cast<int>(cut.size()); ++i) {
        const Matrix cols = u.middleCols(cut[i], cut[i + 1] - cut[i]);
        p.cells.push_back(cols * cols.adjoint());
    }
    return p;
}

Labeling random_labeling(Rng& rng, const ClassicalPoset& s, int dim) {
    Labeling l{random_partition(rng, dim, uniform_int(rng, 1, dim)), s, {}};
    for (std::size_t i = 0; i < l.partition.cells.size(); ++i)
        l.label.push_back(s.elements[uniform_int(rng, 0, static_cast<int>(s.elements.size()) - 1)]);
    return l;
}

namespace {

std::optional<std::string> random_upper_bound(Rng& rng, const ClassicalPoset& s, const std::vector<std::string>& xs) {
    std::vector<std::string> ub;
    for (const auto& u : s.elements) {
        bool ok = true;
        for (const auto& x : xs) ok = ok && s.le(x, u);
        if (ok) ub.push_back(u);
    }
    if (ub.empty()) return std::nullopt;
    return ub[uniform_int(rng, 0, static_cast<int>(ub.size()) - 1)];
}

}  // namespace

std::vector<Labeling> random_labeling_chain(Rng& rng, const ClassicalPoset& s, int dim, int steps) {
    std::vector<Labeling> chain{random_labeling(rng, s, dim)};
    for (int i = 1; i < steps; ++i) {
        const Labeling& cur = chain.back();
        Labeling next = cur;
        const int op = uniform_int(rng, 0, 3);
        const int n = static_cast<int>(cur.label.size());
        if (op == 0) {
            const int k = uniform_int(rng, 0, n - 1);
            if (auto u = random_upper_bound(rng, s, {cur.label[k]})) next.label[k] = *u;
        } else if (op == 1 && n >= 2) {
            const int a = uniform_int(rng, 0, n - 1);
            int b = uniform_int(rng, 0, n - 2);
            if (b >= a) ++b;
            if (auto u = random_upper_bound(rng, s, {cur.label[a], cur.label[b]})) {
                next.partition.cells[a] += cur.partition.cells[b];
                next.label[a] = *u;
                next.partition.cells.erase(next.partition.cells.begin() + b);
                next.label.erase(next.label.begin() + b);
            }
        } else if (op == 2) {
            if (auto u = random_upper_bound(rng, s, cur.label)) {
                next.partition = random_partition(rng, dim, uniform_int(rng, 1, dim));
                next.label.assign(next.partition.cells.size(), *u);
            }
        }
        chain.push_back(std::move(next));
    }
    return chain;
}

}  // namespace qdomain::rnd
