#include "qdomain/partition.hpp"

#include "qdomain/tolerance.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace qdomain {

namespace {

double ptol(int dim) { return tolerance().eq * std::max(1, dim); }

bool orthogonal(const Matrix& p, const Matrix& q) { return (p * q).norm() <= ptol(static_cast<int>(p.rows())); }

// Orthonormal basis of the range of a projection (or any matrix).
Matrix range_basis(const Matrix& m) {
    SpanAccumulator acc(static_cast<int>(m.rows()));
    acc.add_columns(m);
    return acc.finish();
}

OperatorSubspace row_space(const Matrix& columns, int dim) {
    std::vector<Matrix> rows;
    for (int i = 0; i < columns.cols(); ++i) rows.push_back(columns.col(i).adjoint());
    return OperatorSubspace::span(rows, dim, 1);
}

}  // namespace

Matrix projection_onto(const Matrix& columns) {
    const Matrix q = range_basis(columns);
    return q * q.adjoint();
}

void validate_partition(const Partition& p) {
    if (p.dim < 1) throw Error(ErrorKind::InvalidArgument, "partition: dimension must be >= 1");
    const double tol = ptol(p.dim);
    Matrix sum = Matrix::Zero(p.dim, p.dim);
    for (std::size_t i = 0; i < p.cells.size(); ++i) {
        const Matrix& c = p.cells[i];
        const std::string name = "partition: cell " + std::to_string(i + 1);
        if (c.rows() != p.dim || c.cols() != p.dim) throw Error(ErrorKind::Dimension, name + " has the wrong shape");
        if (c.norm() <= tol) throw Error(ErrorKind::InvalidArgument, name + " is zero");
        if ((c - c.adjoint()).norm() > tol) throw Error(ErrorKind::InvalidArgument, name + " is not hermitian");
        if ((c * c - c).norm() > tol) throw Error(ErrorKind::InvalidArgument, name + " is not idempotent");
        for (std::size_t j = 0; j < i; ++j)
            if (!orthogonal(c, p.cells[j]))
                throw Error(ErrorKind::InvalidArgument,
                            name + " is not orthogonal to cell " + std::to_string(j + 1));
        sum += c;
    }
    if ((sum - Matrix::Identity(p.dim, p.dim)).norm() > tol)
        throw Error(ErrorKind::InvalidArgument, "partition: cells do not sum to the identity");
}

bool is_partition(const Partition& p) {
    try {
        validate_partition(p);
        return true;
    } catch (const Error&) {
        return false;
    }
}

Partition partition_of_subspaces(int dim, const std::vector<Matrix>& column_bases) {
    Partition p{dim, {}};
    for (const auto& b : column_bases) p.cells.push_back(projection_onto(b));
    validate_partition(p);
    return p;
}

bool same_partition(const Partition& a, const Partition& b) {
    if (a.dim != b.dim || a.cells.size() != b.cells.size()) return false;
    for (const auto& c : a.cells) {
        bool found = false;
        for (const auto& d : b.cells) found = found || (c - d).norm() <= ptol(a.dim);
        if (!found) return false;
    }
    return true;
}

bool refines(const Partition& p1, const Partition& p2) {
    if (p1.dim != p2.dim) throw Error(ErrorKind::Dimension, "refines: partitions of different spaces");
    for (const auto& a : p1.cells) {
        bool under = false;
        for (const auto& b : p2.cells) under = under || (b * a - a).norm() <= ptol(p1.dim);
        if (!under) return false;
    }
    return true;
}

Partition sup_partitions(const std::vector<Partition>& family) {
    if (family.empty()) throw Error(ErrorKind::InvalidArgument, "sup_partitions: empty family");
    const int dim = family.front().dim;
    std::vector<Matrix> cells;
    for (const auto& p : family) {
        if (p.dim != dim) throw Error(ErrorKind::Dimension, "sup_partitions: partitions of different spaces");
        cells.insert(cells.end(), p.cells.begin(), p.cells.end());
    }
    std::vector<std::size_t> parent(cells.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (std::size_t j = i + 1; j < cells.size(); ++j)
            if (!orthogonal(cells[i], cells[j])) parent[find(i)] = find(j);

    std::map<std::size_t, std::vector<std::size_t>> comps;
    for (std::size_t i = 0; i < cells.size(); ++i) comps[find(i)].push_back(i);
    Partition out{dim, {}};
    for (const auto& [root, members] : comps) {
        Matrix stacked(dim, dim * static_cast<int>(members.size()));
        for (std::size_t k = 0; k < members.size(); ++k) stacked.middleCols(dim * k, dim) = cells[members[k]];
        out.cells.push_back(projection_onto(stacked));
    }
    validate_partition(out);
    return out;
}

std::vector<std::string> cell_tokens(const Partition& p) {
    std::vector<std::string> t;
    for (std::size_t i = 0; i < p.cells.size(); ++i) t.push_back("p" + std::to_string(i + 1));
    return t;
}

BinaryRelation m_p(const Partition& p, const AtomId& atom) {
    validate_partition(p);
    const std::vector<std::string> tokens = cell_tokens(p);
    BinaryRelation m(atomic(p.dim, atom), classical_of_set(tokens));
    for (std::size_t i = 0; i < p.cells.size(); ++i) m.set(atom, tokens[i], row_space(range_basis(p.cells[i]), p.dim));
    const FunctionReport rep = function_report(m);
    if (!rep.is_function || !rep.is_surjective)
        throw Error(ErrorKind::Verification, "m_p: M_P is not a surjective function");
    return m;
}

void validate_labeling(const Labeling& l) {
    validate_partition(l.partition);
    if (l.label.size() != l.partition.cells.size())
        throw Error(ErrorKind::InvalidArgument, "labeling: one label per cell required");
    std::set<std::string> el(l.poset.elements.begin(), l.poset.elements.end());
    for (const auto& s : l.label)
        if (!el.count(s)) throw Error(ErrorKind::InvalidArgument, "labeling: unknown label '" + s + "'");
}

BinaryRelation labeling_function(const Labeling& l, const AtomId& atom) {
    validate_labeling(l);
    const int d = l.partition.dim;
    BinaryRelation f(atomic(d, atom), classical_of_set(l.poset.elements));
    std::map<std::string, Matrix> cols;
    for (std::size_t i = 0; i < l.label.size(); ++i) {
        const Matrix b = range_basis(l.partition.cells[i]);
        auto it = cols.find(l.label[i]);
        if (it == cols.end()) cols.emplace(l.label[i], b);
        else {
            Matrix joined(d, it->second.cols() + b.cols());
            joined << it->second, b;
            it->second = joined;
        }
    }
    for (const auto& [s, c] : cols) f.set(atom, s, row_space(c, d));
    return f;
}

Labeling factor_via_partition(const BinaryRelation& f, const ClassicalPoset& s) {
    if (f.dom().size() != 1) throw Error(ErrorKind::InvalidArgument, "factor_via_partition: source must be atomic");
    require_same(f.cod(), classical_of_set(s.elements), "factor_via_partition");
    require_function(f, "factor_via_partition");
    const AtomId h = f.dom().begin()->first;
    const int d = f.dom().begin()->second;
    Labeling out{Partition{d, {}}, s, {}};
    for (const auto& e : s.elements) {
        const OperatorSubspace c = f.at(h, e);
        if (c.is_zero()) continue;
        const Matrix v = row_support(c).vectors();
        out.partition.cells.push_back(v * v.adjoint());
        out.label.push_back(e);
    }
    validate_labeling(out);
    if (auto diff = first_difference(labeling_function(out, h), f))
        throw Error(ErrorKind::Verification, "factor_via_partition: `f∘M_P differs from F at (" + diff->x + ", " +
                                                 diff->y + ")");
    return out;
}

bool leq_via_cells(const Labeling& a, const Labeling& b) {
    if (a.poset.elements != b.poset.elements || a.poset.leq != b.poset.leq)
        throw Error(ErrorKind::ObjectMismatch, "leq_via_cells: labelings into different posets");
    if (a.partition.dim != b.partition.dim)
        throw Error(ErrorKind::Dimension, "leq_via_cells: partitions of different spaces");
    for (std::size_t i = 0; i < a.partition.cells.size(); ++i)
        for (std::size_t j = 0; j < b.partition.cells.size(); ++j)
            if (!orthogonal(a.partition.cells[i], b.partition.cells[j]) && !a.poset.le(a.label[i], b.label[j]))
                return false;
    return true;
}

MonotoneChain labeling_chain(const std::vector<Labeling>& chain, const AtomId& atom) {
    if (chain.empty()) throw Error(ErrorKind::InvalidArgument, "labeling_chain: empty chain");
    MonotoneChain c{atomic(chain.front().partition.dim, atom), classical_of_poset(chain.front().poset), {}, true};
    for (const auto& l : chain) c.entries.push_back(labeling_function(l, atom));
    c.entries.push_back(c.entries.back());
    return c;
}

ClassicalChainLimit chain_limit_classical(const std::vector<Labeling>& chain, const AtomId& atom) {
    if (chain.empty()) throw Error(ErrorKind::InvalidArgument, "chain_limit_classical: empty chain");
    for (const auto& l : chain) validate_labeling(l);
    for (std::size_t i = 1; i < chain.size(); ++i)
        if (!leq_via_cells(chain[i - 1], chain[i]))
            throw Error(ErrorKind::NotMonotone, "chain_limit_classical: entry " + std::to_string(i) +
                                                    " is not below entry " + std::to_string(i + 1));
    const ClassicalPoset& s = chain.front().poset;
    const Labeling& last = chain.back();

    ClassicalChainLimit out{Labeling{last.partition, s, {}}, {}, true};
    for (const auto& pinf : last.partition.cells) {
        // every walk p_1, p_2, ... with consecutive cells and each cell not orthogonal to p_inf
        std::set<std::string> sups;
        std::vector<std::string> labels;
        std::function<void(std::size_t, const Matrix*)> walk = [&](std::size_t i, const Matrix* prev) {
            if (i == chain.size()) {
                auto sup = s.sup(labels);
                if (!sup) throw Error(ErrorKind::InvalidArgument, "chain_limit_classical: labels have no supremum");
                sups.insert(*sup);
                return;
            }
            const Labeling& li = chain[i];
            for (std::size_t k = 0; k < li.partition.cells.size(); ++k) {
                const Matrix& p = li.partition.cells[k];
                if (orthogonal(p, pinf) || (prev && orthogonal(*prev, p))) continue;
                labels.push_back(li.label[k]);
                walk(i + 1, &p);
                labels.pop_back();
            }
        };
        walk(0, nullptr);
        if (sups.empty()) throw Error(ErrorKind::Verification, "chain_limit_classical: no admissible walk to a cell");
        if (sups.size() > 1) out.well_defined = false;
        out.limit.label.push_back(*sups.begin());
    }
    out.function = labeling_function(out.limit, atom);
    if (!is_limit(labeling_chain(chain, atom), out.function))
        throw Error(ErrorKind::Verification, "chain_limit_classical: F_i does not converge to the constructed F_∞");
    return out;
}

}  // namespace qdomain
