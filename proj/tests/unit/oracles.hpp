#pragma once

// Reference computations used to check the library. They share no code
// with it beyond reading basis matrices: spans are compared by the rank of
// stacked vectorizations through a pivoted QR, never through the SVD path.

#include "qdomain/relation.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using qdomain::BinaryRelation;
using qdomain::Matrix;
using qdomain::OperatorSubspace;

inline Eigen::MatrixXcd stack(const std::vector<Matrix>& ms) {
    if (ms.empty()) return {};
    const Eigen::Index n = ms[0].size();
    Eigen::MatrixXcd out(n, static_cast<Eigen::Index>(ms.size()));
    for (std::size_t k = 0; k < ms.size(); ++k)
        for (Eigen::Index c = 0; c < ms[k].cols(); ++c)
            for (Eigen::Index r = 0; r < ms[k].rows(); ++r) out(r + c * ms[k].rows(), static_cast<Eigen::Index>(k)) = ms[k](r, c);
    return out;
}

inline int rank(const std::vector<Matrix>& ms) {
    if (ms.empty()) return 0;
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(stack(ms));
    qr.setThreshold(1e-8);
    return static_cast<int>(qr.rank());
}

inline std::vector<Matrix> cat(std::vector<Matrix> a, const std::vector<Matrix>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

inline bool same_span(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
    const int ra = rank(a), rb = rank(b), rab = rank(cat(a, b));
    return ra == rab && rb == rab;
}

inline bool in_span(const std::vector<Matrix>& a, const Matrix& m) { return rank(a) == rank(cat(a, {m})); }

// Classical Gram-Schmidt on vectorized matrices.
inline std::vector<Matrix> gram_schmidt(const std::vector<Matrix>& ms) {
    std::vector<Matrix> out;
    for (const auto& m : ms) {
        Matrix v = m;
        for (const auto& q : out) v -= (q.adjoint() * v).trace() * q;
        const double n = v.norm();
        if (n > 1e-9) out.push_back(v / n);
    }
    return out;
}

inline bool span_equals(const OperatorSubspace& s, const std::vector<Matrix>& span) {
    return same_span(s.basis(), span);
}

inline std::vector<Matrix> products(const std::vector<Matrix>& bs, const std::vector<Matrix>& as) {
    std::vector<Matrix> out;
    for (const auto& b : bs)
        for (const auto& a : as) out.push_back(b * a);
    return out;
}

inline std::vector<Matrix> daggers(const std::vector<Matrix>& ms) {
    std::vector<Matrix> out;
    for (const auto& m : ms) out.push_back(m.adjoint());
    return out;
}

inline std::vector<Matrix> krons(const std::vector<Matrix>& as, const std::vector<Matrix>& bs) {
    std::vector<Matrix> out;
    for (const auto& a : as)
        for (const auto& b : bs) {
            Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
            for (Eigen::Index i = 0; i < a.rows(); ++i)
                for (Eigen::Index j = 0; j < a.cols(); ++j) k.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
            out.push_back(k);
        }
    return out;
}

// Componentwise span comparison of two relations on the same sets.
inline bool rel_equal(const BinaryRelation& r, const BinaryRelation& s) {
    if (r.dom() != s.dom() || r.cod() != s.cod()) return false;
    for (const auto& [x, dx] : r.dom())
        for (const auto& [y, dy] : r.cod())
            if (!same_span(r.at(x, y).basis(), s.at(x, y).basis())) return false;
    return true;
}

// (S o R)(X, Z) as the span of all products over Y.
inline bool compose_matches(const BinaryRelation& out, const BinaryRelation& s, const BinaryRelation& r) {
    for (const auto& [x, dx] : r.dom())
        for (const auto& [z, dz] : s.cod()) {
            std::vector<Matrix> span;
            for (const auto& [y, dy] : r.cod()) span = cat(span, products(s.at(y, z).basis(), r.at(x, y).basis()));
            if (!same_span(out.at(x, z).basis(), span)) return false;
        }
    return true;
}

using Pairs = std::set<std::pair<std::string, std::string>>;

inline Pairs bool_compose(const Pairs& s, const Pairs& r) {
    Pairs out;
    for (const auto& [a, b] : r)
        for (const auto& [c, d] : s)
            if (b == c) out.emplace(a, d);
    return out;
}

// Pairs (a, b) with a nonzero component, for relations between classical sets.
inline Pairs support(const BinaryRelation& r) {
    Pairs out;
    for (const auto& [x, dx] : r.dom())
        for (const auto& [y, dy] : r.cod())
            if (rank(r.at(x, y).basis()) > 0) out.emplace(x, y);
    return out;
}

}  // namespace oracle
