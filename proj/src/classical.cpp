#include "qdomain/classical.hpp"

namespace qdomain {

QuantumPoset embed(const ClassicalPoset& s) { return classical_of_poset(s); }

ClassicalPoset extract(const QuantumPoset& x) {
    const Points p = points(x.carrier());
    ClassicalPoset s{p.atoms, {}};
    for (const auto& a : p.atoms)
        for (const auto& b : p.atoms)
            if (!x.order().is_zero_at(a, b)) s.leq.emplace(a, b);
    if (!s.is_partial_order()) throw Error(ErrorKind::Verification, "extract: points do not form a partial order");
    return s;
}

bool b_is_order_iso(const QuantumPoset& x) {
    const ClassicalPoset s = extract(x);
    for (const auto& a : s.elements)
        for (const auto& b : s.elements)
            if (s.le(a, b) != hom_leq(point(x.carrier(), a), point(x.carrier(), b), x)) return false;
    return true;
}

bool B_is_order_iso(const QuantumPoset& x) {
    const Points p = points(x.carrier());
    const QuantumPoset one = relative_order(x, p.one_dim);
    return is_order_iso(p.b_relation, one, embed(extract(x)));
}

BinaryRelation eta(const ClassicalPoset& s, const std::string& element) {
    return point(classical_of_set(s.elements), element);
}

BinaryRelation transpose(const ClassicalPoset& s, const QuantumPoset& x, const std::map<std::string, AtomId>& f) {
    const Points p = points(x.carrier());
    const ClassicalPoset pts = extract(x);
    if (!is_monotone_map(s, pts, f)) throw Error(ErrorKind::NotMonotone, "transpose: f is not monotone");
    const BinaryRelation fq = classical_function(s.elements, p.atoms, f);
    const BinaryRelation j1 = inclusion(p.one_dim, x.carrier());
    const BinaryRelation out = compose(j1, compose(dagger(p.b_relation), fq));
    for (const auto& e : s.elements)
        if (!equals(compose(out, eta(s, e)), point(x.carrier(), f.at(e))))
            throw Error(ErrorKind::Verification, "transpose: F∘η(" + e + ") differs from the point f(" + e + ")");
    if (!is_monotone(out, embed(s), x)) throw Error(ErrorKind::Verification, "transpose: F is not monotone");
    return out;
}

std::string pair_token(const std::string& s, const std::string& t) { return "(" + s + "," + t + ")"; }

ClassicalPoset product_poset(const ClassicalPoset& s, const ClassicalPoset& t) {
    ClassicalPoset out;
    for (const auto& a : s.elements)
        for (const auto& b : t.elements) out.elements.push_back(pair_token(a, b));
    for (const auto& [a1, a2] : s.leq)
        for (const auto& [b1, b2] : t.leq) out.leq.emplace(pair_token(a1, b1), pair_token(a2, b2));
    return out;
}

BinaryRelation strong_monoidal_iso(const ClassicalPoset& s, const ClassicalPoset& t) {
    const QuantumPoset qs = embed(s), qt = embed(t);
    const QuantumPoset prod = poset_product(qs, qt);
    const QuantumPoset target = embed(product_poset(s, t));
    std::map<AtomId, AtomId> m;
    for (const auto& a : s.elements)
        for (const auto& b : t.elements) m[ids::tensor(a, b)] = pair_token(a, b);
    const BinaryRelation g = relabeling(prod.carrier(), m);
    if (!equals(compose(g, prod.order()), compose(target.order(), g)))
        throw Error(ErrorKind::Verification, "strong_monoidal_iso: G does not intertwine the orders");
    if (!is_order_iso(g, prod, target)) throw Error(ErrorKind::Verification, "strong_monoidal_iso: G is not an order iso");
    return g;
}

bool factors_through_classical_part(const BinaryRelation& f) {
    for (const auto& [key, sub] : f.components())
        if (f.cod().dim(key.second) != 1) return false;
    return true;
}

}  // namespace qdomain
