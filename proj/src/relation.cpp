#include "qdomain/relation.hpp"

#include "qdomain/error.hpp"

#include <sstream>

namespace qdomain {

void require_same(const QuantumSet& a, const QuantumSet& b, const char* op) {
    if (a != b) {
        std::ostringstream os;
        os << op << ": object mismatch " << describe(a) << " vs " << describe(b);
        throw Error(ErrorKind::ObjectMismatch, os.str());
    }
}

BinaryRelation::BinaryRelation(QuantumSet dom, QuantumSet cod) : dom_(std::move(dom)), cod_(std::move(cod)) {}

OperatorSubspace BinaryRelation::at(const AtomId& x, const AtomId& y) const {
    auto it = comp_.find({x, y});
    if (it != comp_.end()) return it->second;
    return OperatorSubspace::zero(dom_.dim(x), cod_.dim(y));
}

void BinaryRelation::set(const AtomId& x, const AtomId& y, const OperatorSubspace& s) {
    if (!dom_.has(x)) throw Error(ErrorKind::InvalidArgument, "relation: unknown source atom '" + x + "'");
    if (!cod_.has(y)) throw Error(ErrorKind::InvalidArgument, "relation: unknown target atom '" + y + "'");
    if (s.dom_dim() != dom_.dim(x) || s.cod_dim() != cod_.dim(y)) {
        std::ostringstream os;
        os << "relation: component (" << x << ", " << y << ") must be " << cod_.dim(y) << "x" << dom_.dim(x)
           << ", got " << s.cod_dim() << "x" << s.dom_dim();
        throw Error(ErrorKind::Dimension, os.str());
    }
    if (s.is_zero()) comp_.erase({x, y});
    else comp_[{x, y}] = s;
}

void BinaryRelation::add(const AtomId& x, const AtomId& y, const OperatorSubspace& s) {
    auto it = comp_.find({x, y});
    if (it == comp_.end()) set(x, y, s);
    else set(x, y, qdomain::join(it->second, s));
}

bool BinaryRelation::is_zero_at(const AtomId& x, const AtomId& y) const { return comp_.find({x, y}) == comp_.end(); }

BinaryRelation zero_relation(const QuantumSet& dom, const QuantumSet& cod) { return BinaryRelation(dom, cod); }

BinaryRelation identity(const QuantumSet& x) {
    BinaryRelation r(x, x);
    for (const auto& [a, d] : x) r.set(a, a, OperatorSubspace::scalars(d));
    return r;
}

BinaryRelation top_relation(const QuantumSet& dom, const QuantumSet& cod) {
    BinaryRelation r(dom, cod);
    for (const auto& [a, da] : dom)
        for (const auto& [b, db] : cod) r.set(a, b, OperatorSubspace::full(da, db));
    return r;
}

BinaryRelation inclusion(const QuantumSet& w, const QuantumSet& x) {
    if (!is_subset(w, x)) throw Error(ErrorKind::InvalidArgument, "inclusion: " + describe(w) + " is not a subset of " + describe(x));
    BinaryRelation r(w, x);
    for (const auto& [a, d] : w) r.set(a, a, OperatorSubspace::scalars(d));
    return r;
}

BinaryRelation compose(const BinaryRelation& s, const BinaryRelation& r) {
    require_same(r.cod(), s.dom(), "compose");
    std::map<AtomId, std::vector<std::pair<AtomId, const OperatorSubspace*>>> by_source;
    for (const auto& [key, sub] : s.components()) by_source[key.first].emplace_back(key.second, &sub);

    std::map<BinaryRelation::Key, SpanAccumulator> acc;
    for (const auto& [key, rsub] : r.components()) {
        auto it = by_source.find(key.second);
        if (it == by_source.end()) continue;
        for (const auto& [z, ssub] : it->second) {
            BinaryRelation::Key k{key.first, z};
            auto a = acc.find(k);
            if (a == acc.end()) a = acc.emplace(k, SpanAccumulator(r.dom().dim(key.first) * s.cod().dim(z))).first;
            accumulate_product(a->second, *ssub, rsub);
        }
    }
    BinaryRelation out(r.dom(), s.cod());
    for (auto& [k, a] : acc) {
        const int dx = r.dom().dim(k.first), dz = s.cod().dim(k.second);
        out.set(k.first, k.second, OperatorSubspace::from_canonical(dx, dz, a.finish()));
    }
    return out;
}

BinaryRelation dagger(const BinaryRelation& r) {
    BinaryRelation out(r.cod(), r.dom());
    for (const auto& [key, sub] : r.components()) out.set(key.second, key.first, dagger(sub));
    return out;
}

bool leq(const BinaryRelation& r, const BinaryRelation& s) { return !first_excess(r, s).has_value(); }

bool equals(const BinaryRelation& r, const BinaryRelation& s) { return !first_difference(r, s).has_value(); }

std::optional<Difference> first_excess(const BinaryRelation& r, const BinaryRelation& s) {
    require_same(r.dom(), s.dom(), "leq");
    require_same(r.cod(), s.cod(), "leq");
    for (const auto& [key, sub] : r.components()) {
        const OperatorSubspace other = s.at(key.first, key.second);
        if (!contains(other, sub)) return Difference{key.first, key.second, sub.dim(), other.dim()};
    }
    return std::nullopt;
}

std::vector<Difference> all_differences(const BinaryRelation& r, const BinaryRelation& s) {
    require_same(r.dom(), s.dom(), "equals");
    require_same(r.cod(), s.cod(), "equals");
    std::set<BinaryRelation::Key> keys;
    for (const auto& kv : r.components()) keys.insert(kv.first);
    for (const auto& kv : s.components()) keys.insert(kv.first);
    std::vector<Difference> out;
    for (const auto& [x, y] : keys) {
        const OperatorSubspace a = r.at(x, y), b = s.at(x, y);
        if (!equals(a, b)) out.push_back(Difference{x, y, a.dim(), b.dim()});
    }
    return out;
}

std::optional<Difference> first_difference(const BinaryRelation& r, const BinaryRelation& s) {
    require_same(r.dom(), s.dom(), "equals");
    require_same(r.cod(), s.cod(), "equals");
    std::set<BinaryRelation::Key> keys;
    for (const auto& kv : r.components()) keys.insert(kv.first);
    for (const auto& kv : s.components()) keys.insert(kv.first);
    for (const auto& [x, y] : keys) {
        const OperatorSubspace a = r.at(x, y), b = s.at(x, y);
        if (!equals(a, b)) return Difference{x, y, a.dim(), b.dim()};
    }
    return std::nullopt;
}

BinaryRelation meet(const BinaryRelation& r, const BinaryRelation& s) {
    require_same(r.dom(), s.dom(), "meet");
    require_same(r.cod(), s.cod(), "meet");
    BinaryRelation out(r.dom(), r.cod());
    for (const auto& [key, sub] : r.components()) {
        if (s.is_zero_at(key.first, key.second)) continue;
        out.set(key.first, key.second, meet(sub, s.at(key.first, key.second)));
    }
    return out;
}

BinaryRelation join(const BinaryRelation& r, const BinaryRelation& s) {
    require_same(r.dom(), s.dom(), "join");
    require_same(r.cod(), s.cod(), "join");
    BinaryRelation out = r;
    for (const auto& [key, sub] : s.components()) out.add(key.first, key.second, sub);
    return out;
}

BinaryRelation monoidal(const BinaryRelation& r1, const BinaryRelation& r2) {
    BinaryRelation out(product(r1.dom(), r2.dom()), product(r1.cod(), r2.cod()));
    for (const auto& [k1, s1] : r1.components())
        for (const auto& [k2, s2] : r2.components())
            out.set(ids::tensor(k1.first, k2.first), ids::tensor(k1.second, k2.second), kron(s1, s2));
    return out;
}

BinaryRelation classical_of_relation(const BoolRelation& r) {
    BinaryRelation out(classical_of_set(r.dom), classical_of_set(r.cod));
    for (const auto& [s, t] : r.pairs) out.set(s, t, OperatorSubspace::full(1, 1));
    return out;
}

BoolRelation bool_compose(const BoolRelation& s, const BoolRelation& r) {
    BoolRelation out{r.dom, s.cod, {}};
    for (const auto& [a, b] : r.pairs)
        for (const auto& [c, d] : s.pairs)
            if (b == c) out.pairs.emplace(a, d);
    return out;
}

BinaryRelation restrict(const BinaryRelation& r, const QuantumSet& w) {
    if (!is_subset(w, r.dom())) throw Error(ErrorKind::InvalidArgument, "restrict: not a subset of the source");
    BinaryRelation out(w, r.cod());
    for (const auto& [key, sub] : r.components())
        if (w.has(key.first)) out.set(key.first, key.second, sub);
    return out;
}

BinaryRelation corestrict(const BinaryRelation& r, const QuantumSet& z) {
    if (!is_subset(z, r.cod())) throw Error(ErrorKind::InvalidArgument, "corestrict: not a subset of the target");
    BinaryRelation out(r.dom(), z);
    for (const auto& [key, sub] : r.components())
        if (z.has(key.second)) out.set(key.first, key.second, sub);
    return out;
}

BinaryRelation scalar_delta(bool equal) {
    BinaryRelation out(unit_set(), unit_set());
    if (equal) out.set(ids::unit, ids::unit, OperatorSubspace::full(1, 1));
    return out;
}

namespace {

QuantumSet map_set(const QuantumSet& x, const std::map<AtomId, AtomId>& m) {
    QuantumSet out;
    for (const auto& [a, d] : x) {
        auto it = m.find(a);
        out.add(it == m.end() ? a : it->second, d);
    }
    return out;
}

AtomId map_id(const AtomId& a, const std::map<AtomId, AtomId>& m) {
    auto it = m.find(a);
    return it == m.end() ? a : it->second;
}

}  // namespace

BinaryRelation relabel(const BinaryRelation& r, const std::map<AtomId, AtomId>& dom_map,
                       const std::map<AtomId, AtomId>& cod_map) {
    BinaryRelation out(map_set(r.dom(), dom_map), map_set(r.cod(), cod_map));
    for (const auto& [key, sub] : r.components()) out.set(map_id(key.first, dom_map), map_id(key.second, cod_map), sub);
    return out;
}

BinaryRelation relabeling(const QuantumSet& x, const std::map<AtomId, AtomId>& mapping) {
    BinaryRelation out(x, map_set(x, mapping));
    for (const auto& [a, d] : x) out.set(a, map_id(a, mapping), OperatorSubspace::scalars(d));
    return out;
}

BinaryRelation coproduct_relation(const std::vector<BinaryRelation>& parts, const std::vector<std::string>& tags) {
    std::vector<QuantumSet> doms, cods;
    for (const auto& p : parts) {
        doms.push_back(p.dom());
        cods.push_back(p.cod());
    }
    BinaryRelation out(coproduct(doms, tags), coproduct(cods, tags));
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (const auto& [key, sub] : parts[i].components())
            out.set(ids::tagged(tags[i], key.first), ids::tagged(tags[i], key.second), sub);
    return out;
}

BinaryRelation disjoint_union_relation(const std::vector<BinaryRelation>& parts) {
    std::vector<QuantumSet> doms, cods;
    for (const auto& p : parts) {
        doms.push_back(p.dom());
        cods.push_back(p.cod());
    }
    BinaryRelation out(disjoint_union(doms), disjoint_union(cods));
    for (const auto& p : parts)
        for (const auto& [key, sub] : p.components()) out.set(key.first, key.second, sub);
    return out;
}

std::string describe(const BinaryRelation& r) {
    std::ostringstream os;
    os << describe(r.dom()) << " -> " << describe(r.cod()) << " [";
    bool first = true;
    for (const auto& [key, sub] : r.components()) {
        os << (first ? "" : ", ") << "(" << key.first << "," << key.second << "):" << sub.dim();
        first = false;
    }
    os << "]";
    return os.str();
}

}  // namespace qdomain
