#include "qdomain/function.hpp"

#include "qdomain/tolerance.hpp"

#include <algorithm>
#include <sstream>

namespace qdomain {

FunctionReport function_report(const BinaryRelation& f) {
    FunctionReport rep;
    const BinaryRelation fd = dagger(f);
    const BinaryRelation ff = compose(fd, f);   // on dom
    const BinaryRelation gg = compose(f, fd);   // on cod

    bool lower = true;
    for (const auto& [x, d] : f.dom()) {
        if (!contains_matrix(ff.at(x, x), Matrix::Identity(d, d))) {
            lower = false;
            rep.violations.push_back("F^dagger.F >= I fails at (" + x + ", " + x + "): dim " +
                                     std::to_string(ff.at(x, x).dim()));
            break;
        }
    }
    bool upper = true;
    for (const auto& [key, sub] : gg.components()) {
        const bool diag = key.first == key.second;
        if (!diag || !leq(sub, OperatorSubspace::scalars(sub.dom_dim()))) {
            upper = false;
            rep.violations.push_back("F.F^dagger <= I fails at (" + key.first + ", " + key.second + "): dim " +
                                     std::to_string(sub.dim()));
            break;
        }
    }
    rep.is_function = lower && upper;
    rep.range = range(f);
    if (rep.is_function) {
        rep.is_injective = equals(ff, identity(f.dom()));
        rep.is_surjective = equals(gg, identity(f.cod()));
        rep.is_bijective = rep.is_injective && rep.is_surjective;
    }
    return rep;
}

bool is_function(const BinaryRelation& f) { return function_report(f).is_function; }

QuantumSet range(const BinaryRelation& f) {
    QuantumSet out;
    for (const auto& [key, sub] : f.components())
        if (!out.has(key.second)) out.add(key.second, f.cod().dim(key.second));
    return out;
}

void require_function(const BinaryRelation& f, const char* op) {
    const FunctionReport rep = function_report(f);
    if (!rep.is_function)
        throw Error(ErrorKind::NotAFunction,
                    std::string(op) + ": not a function" + (rep.violations.empty() ? "" : ": " + rep.violations.front()));
}

RangeFactorization factor_through_range(const BinaryRelation& f) {
    require_function(f, "factor_through_range");
    const QuantumSet ran = range(f);
    RangeFactorization out{inclusion(ran, f.cod()), corestrict(f, ran)};
    if (!equals(compose(out.inclusion, out.surjection), f))
        throw Error(ErrorKind::Verification, "factor_through_range: J o F-bar != F");
    return out;
}

BinaryRelation corestrict_function(const BinaryRelation& f, const QuantumSet& w) {
    require_function(f, "corestrict_function");
    if (!is_subset(w, f.cod())) throw Error(ErrorKind::InvalidArgument, "corestrict_function: W is not a subset of the target");
    for (const auto& [a, d] : range(f))
        if (!w.has(a))
            throw Error(ErrorKind::InvalidArgument, "corestrict_function: range atom '" + a + "' is not in W");
    return corestrict(f, w);
}

BinaryRelation classical_function(const std::vector<std::string>& dom, const std::vector<std::string>& cod,
                                  const std::map<std::string, std::string>& f) {
    BoolRelation r{dom, cod, {}};
    for (const auto& s : dom) {
        auto it = f.find(s);
        if (it == f.end()) throw Error(ErrorKind::InvalidArgument, "classical_function: no image for '" + s + "'");
        r.pairs.emplace(s, it->second);
    }
    return classical_of_relation(r);
}

// ---------------------------------------------------------------------------

QuantumSet TaggedCoproduct::total() const { return coproduct(parts, tags); }

AtomId TaggedCoproduct::id(std::size_t i, const AtomId& inner) const { return ids::tagged(tags.at(i), inner); }

std::optional<std::pair<std::size_t, AtomId>> TaggedCoproduct::locate(const AtomId& id) const {
    auto split = ids::split_tagged(id);
    if (!split) return std::nullopt;
    for (std::size_t i = 0; i < tags.size(); ++i)
        if (tags[i] == split->first && parts[i].has(split->second)) return std::make_pair(i, split->second);
    return std::nullopt;
}

BinaryRelation TaggedCoproduct::injection(std::size_t i) const {
    BinaryRelation j(parts.at(i), total());
    for (const auto& [a, d] : parts[i]) j.set(a, id(i, a), OperatorSubspace::scalars(d));
    return j;
}

OperatorSubspace Decomposition::part(std::size_t i) const {
    SpanAccumulator acc(static_cast<int>(bases.at(i).rows()));
    acc.add_columns(bases[i]);
    return OperatorSubspace::from_canonical(1, static_cast<int>(bases[i].rows()), acc.finish());
}

namespace {

Decomposition build_decomposition(const QuantumSet& source, const AtomId& atom, std::vector<std::string> tags,
                                  std::vector<Matrix> bases) {
    Decomposition d;
    d.source = source;
    d.atom = atom;
    d.tags = std::move(tags);
    d.bases = std::move(bases);
    for (std::size_t i = 0; i < d.tags.size(); ++i)
        d.target.add(ids::tagged(d.tags[i], atom), static_cast<int>(d.bases[i].cols()));
    d.relation = BinaryRelation(d.source, d.target);
    for (std::size_t i = 0; i < d.tags.size(); ++i)
        d.relation.set(atom, ids::tagged(d.tags[i], atom), OperatorSubspace::span_of(d.bases[i].adjoint()));
    return d;
}

}  // namespace

bool is_decomposition(const Decomposition& d) {
    const int h = d.source.dim(d.atom);
    int total = 0;
    for (std::size_t i = 0; i < d.bases.size(); ++i) {
        total += static_cast<int>(d.bases[i].cols());
        for (std::size_t j = i + 1; j < d.bases.size(); ++j)
            if ((d.bases[i].adjoint() * d.bases[j]).norm() > tolerance().eq) return false;
        if ((d.bases[i].adjoint() * d.bases[i] - Matrix::Identity(d.bases[i].cols(), d.bases[i].cols())).norm() >
            tolerance().eq)
            return false;
    }
    if (total != h) return false;
    const FunctionReport rep = function_report(d.relation);
    return rep.is_function && rep.is_surjective;
}

BinaryRelation reassemble(const Decomposition& d, const std::vector<std::size_t>& summand,
                          const std::vector<BinaryRelation>& parts, const TaggedCoproduct& cod) {
    BinaryRelation sum(d.target, cod.total());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const AtomId src = ids::tagged(d.tags[i], d.atom);
        for (const auto& [key, sub] : parts[i].components()) sum.set(src, cod.id(summand[i], key.second), sub);
    }
    return compose(sum, d.relation);
}

CoproductDecomposition decompose_over_coproduct(const BinaryRelation& f, const TaggedCoproduct& cod,
                                                const std::map<std::string, Matrix>* fixed) {
    if (f.dom().size() != 1) throw Error(ErrorKind::InvalidArgument, "decompose_over_coproduct: source must be atomic");
    require_same(f.cod(), cod.total(), "decompose_over_coproduct");
    require_function(f, "decompose_over_coproduct");
    const AtomId h = f.dom().begin()->first;
    const int dh = f.dom().begin()->second;

    std::vector<std::string> tags;
    std::vector<Matrix> bases;
    std::vector<std::size_t> summand;
    for (std::size_t i = 0; i < cod.parts.size(); ++i) {
        SpanAccumulator acc(dh);
        for (const auto& [y, dy] : cod.parts[i]) {
            const OperatorSubspace c = f.at(h, cod.id(i, y));
            if (!c.is_zero()) acc.add_columns(row_support(c).vectors());
        }
        Matrix v = acc.finish();
        if (v.cols() == 0) continue;
        if (fixed) {
            auto it = fixed->find(cod.tags[i]);
            bool same = it != fixed->end() && it->second.cols() == v.cols();
            if (same) {
                // same column space: projecting v onto the supplied basis loses nothing
                const Matrix& w = it->second;
                same = (v - w * (w.adjoint() * v)).norm() <= tolerance().eq * std::max(1.0, v.norm());
            }
            if (!same)
                throw Error(ErrorKind::Verification,
                            "decompose_over_coproduct: part '" + cod.tags[i] + "' differs from the supplied basis");
            v = it->second;
        }
        tags.push_back(cod.tags[i]);
        bases.push_back(v);
        summand.push_back(i);
    }

    CoproductDecomposition out;
    out.decomposition = build_decomposition(f.dom(), h, tags, bases);
    out.summand = summand;
    for (std::size_t k = 0; k < tags.size(); ++k) {
        const std::size_t i = summand[k];
        BinaryRelation part(atomic(static_cast<int>(bases[k].cols()), h), cod.parts[i]);
        for (const auto& [y, dy] : cod.parts[i]) {
            const OperatorSubspace c = f.at(h, cod.id(i, y));
            if (!c.is_zero()) part.set(h, y, right_multiply(c, bases[k]));
        }
        out.parts.push_back(std::move(part));
    }

    if (!is_decomposition(out.decomposition))
        throw Error(ErrorKind::Verification, "decompose_over_coproduct: parts are not an orthogonal splitting of " + h);
    for (std::size_t k = 0; k < out.parts.size(); ++k)
        if (!is_function(out.parts[k]))
            throw Error(ErrorKind::Verification, "decompose_over_coproduct: part '" + tags[k] + "' is not a function");
    if (auto diff = first_difference(reassemble(out.decomposition, out.summand, out.parts, cod), f))
        throw Error(ErrorKind::Verification, "decompose_over_coproduct: reassembly differs at (" + diff->x + ", " +
                                                 diff->y + ")");
    return out;
}

// ---------------------------------------------------------------------------

BinaryRelation projection_P(const QuantumSet& x, const QuantumSet& y) {
    BinaryRelation p(product(x, y), x);
    for (const auto& [a, da] : x) {
        for (const auto& [b, db] : y) {
            std::vector<Matrix> span;
            for (int j = 0; j < db; ++j) {
                Matrix m = Matrix::Zero(da, da * db);
                for (int i = 0; i < da; ++i) m(i, i * db + j) = 1.0;
                span.push_back(m);
            }
            p.set(ids::tensor(a, b), a, OperatorSubspace::span(span, da * db, da));
        }
    }
    return p;
}

BinaryRelation projection_Q(const QuantumSet& x, const QuantumSet& y) {
    BinaryRelation q(product(x, y), y);
    for (const auto& [a, da] : x) {
        for (const auto& [b, db] : y) {
            std::vector<Matrix> span;
            for (int i = 0; i < da; ++i) {
                Matrix m = Matrix::Zero(db, da * db);
                for (int j = 0; j < db; ++j) m(j, i * db + j) = 1.0;
                span.push_back(m);
            }
            q.set(ids::tensor(a, b), b, OperatorSubspace::span(span, da * db, db));
        }
    }
    return q;
}

BinaryRelation pair(const BinaryRelation& f, const BinaryRelation& g) {
    require_same(f.dom(), g.dom(), "pair");
    const BinaryRelation p = projection_P(f.cod(), g.cod());
    const BinaryRelation q = projection_Q(f.cod(), g.cod());
    const BinaryRelation e = meet(compose(dagger(p), f), compose(dagger(q), g));
    const FunctionReport rep = function_report(e);
    if (!rep.is_function)
        throw PairingError(PairingFailure::CandidateNotFunction,
                           "incompatible-or-unrepresentable: candidate not a function" +
                               (rep.violations.empty() ? std::string() : " (" + rep.violations.front() + ")"));
    if (!equals(compose(p, e), f) || !equals(compose(q, e), g))
        throw PairingError(PairingFailure::ProjectionsDisagree, "incompatible-or-unrepresentable: projections disagree");
    return e;
}

BinaryRelation terminal_map(const QuantumSet& x) {
    BinaryRelation t(x, unit_set());
    for (const auto& [a, d] : x) t.set(a, ids::unit, OperatorSubspace::full(d, 1));
    return t;
}

BinaryRelation point(const QuantumSet& x, const AtomId& atom) {
    if (x.dim(atom) != 1) throw Error(ErrorKind::InvalidArgument, "point: atom '" + atom + "' is not one-dimensional");
    BinaryRelation b(unit_set(), x);
    b.set(ids::unit, atom, OperatorSubspace::full(1, 1));
    return b;
}

Points points(const QuantumSet& x) {
    Points p;
    p.one_dim = one_dim_part(x);
    p.atoms = p.one_dim.ids();
    p.classical = classical_of_set(p.atoms);
    p.b_relation = BinaryRelation(p.one_dim, p.classical);
    for (const auto& a : p.atoms) p.b_relation.set(a, a, OperatorSubspace::full(1, 1));
    return p;
}

}  // namespace qdomain
