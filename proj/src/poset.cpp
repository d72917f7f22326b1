#include "qdomain/poset.hpp"

#include <functional>
#include <sstream>

namespace qdomain {

namespace {

std::string witness(const char* axiom, const Difference& d) {
    std::ostringstream os;
    os << axiom << " fails at (" << d.x << ", " << d.y << "): dim " << d.dim_r << " vs " << d.dim_s;
    return os.str();
}

}  // namespace

OrderReport order_report(const BinaryRelation& r) {
    require_same(r.dom(), r.cod(), "order_report");
    OrderReport rep;
    const BinaryRelation id = identity(r.dom());
    auto refl = first_excess(id, r);
    rep.reflexive = !refl;
    if (refl) rep.witnesses.push_back(witness("reflexivity", *refl));
    auto trans = first_excess(compose(r, r), r);
    rep.transitive = !trans;
    if (trans) rep.witnesses.push_back(witness("transitivity", *trans));
    auto anti = first_excess(meet(r, dagger(r)), id);
    rep.antisymmetric = !anti;
    if (anti) rep.witnesses.push_back(witness("antisymmetry", *anti));
    return rep;
}

QuantumPoset::QuantumPoset(BinaryRelation r) : order_(std::move(r)) {
    const OrderReport rep = order_report(order_);
    if (!rep.ok()) throw Error(ErrorKind::Verification, "not an order: " + rep.witnesses.front());
}

bool hom_leq(const BinaryRelation& f, const BinaryRelation& g, const QuantumPoset& y) {
    require_same(f.cod(), y.carrier(), "hom_leq");
    return leq(compose(g, dagger(f)), y.order());
}

bool HomLeqCheck::agree() const {
    return g_fdag_le_s == g_le_sf && g_le_sf == f_le_sdag_g && f_le_sdag_g == sg_le_sf && sg_le_sf == sdag_f_le_sdag_g;
}

HomLeqCheck hom_leq_check(const BinaryRelation& f, const BinaryRelation& g, const QuantumPoset& y) {
    require_function(f, "hom_leq");
    require_function(g, "hom_leq");
    const BinaryRelation& s = y.order();
    const BinaryRelation sd = dagger(s);
    const BinaryRelation sf = compose(s, f);
    const BinaryRelation sdg = compose(sd, g);
    HomLeqCheck c;
    c.g_fdag_le_s = leq(compose(g, dagger(f)), s);
    c.g_le_sf = leq(g, sf);
    c.f_le_sdag_g = leq(f, sdg);
    c.sg_le_sf = leq(compose(s, g), sf);
    c.sdag_f_le_sdag_g = leq(compose(sd, f), sdg);
    return c;
}

bool is_monotone(const BinaryRelation& f, const QuantumPoset& x, const QuantumPoset& y) {
    require_same(f.dom(), x.carrier(), "is_monotone");
    require_same(f.cod(), y.carrier(), "is_monotone");
    require_function(f, "is_monotone");
    return leq(compose(f, x.order()), compose(y.order(), f));
}

bool is_order_embedding(const BinaryRelation& f, const QuantumPoset& x, const QuantumPoset& y) {
    require_same(f.dom(), x.carrier(), "is_order_embedding");
    require_same(f.cod(), y.carrier(), "is_order_embedding");
    require_function(f, "is_order_embedding");
    return equals(x.order(), compose(dagger(f), compose(y.order(), f)));
}

bool is_order_iso(const BinaryRelation& f, const QuantumPoset& x, const QuantumPoset& y) {
    return is_order_embedding(f, x, y) && function_report(f).is_surjective;
}

QuantumPoset poset_product(const QuantumPoset& x, const QuantumPoset& y) {
    return QuantumPoset(monoidal(x.order(), y.order()));
}

TaggedCoproduct PosetCoproduct::summands() const {
    TaggedCoproduct t;
    t.tags = tags;
    for (const auto& p : parts) t.parts.push_back(p.carrier());
    return t;
}

PosetCoproduct poset_coproduct(const std::vector<QuantumPoset>& parts, const std::vector<std::string>& tags) {
    std::vector<BinaryRelation> orders;
    for (const auto& p : parts) orders.push_back(p.order());
    PosetCoproduct out{tags, parts, QuantumPoset(coproduct_relation(orders, tags))};
    return out;
}

QuantumPoset relative_order(const QuantumPoset& y, const QuantumSet& w) {
    return QuantumPoset(corestrict(restrict(y.order(), w), w));
}

QuantumPoset flat_order(const QuantumSet& x) { return QuantumPoset(identity(x)); }

// ---------------------------------------------------------------------------

bool ClassicalPoset::is_partial_order() const {
    std::set<std::string> el(elements.begin(), elements.end());
    if (el.size() != elements.size()) return false;
    for (const auto& [a, b] : leq)
        if (!el.count(a) || !el.count(b)) return false;
    for (const auto& a : elements)
        if (!le(a, a)) return false;
    for (const auto& [a, b] : leq) {
        if (a != b && le(b, a)) return false;
        for (const auto& c : elements)
            if (le(b, c) && !le(a, c)) return false;
    }
    return true;
}

std::optional<std::string> ClassicalPoset::sup(const std::vector<std::string>& xs) const {
    std::vector<std::string> ub;
    for (const auto& u : elements) {
        bool upper = true;
        for (const auto& x : xs) upper = upper && le(x, u);
        if (upper) ub.push_back(u);
    }
    for (const auto& u : ub) {
        bool least = true;
        for (const auto& v : ub) least = least && le(u, v);
        if (least) return u;
    }
    return std::nullopt;
}

std::optional<std::string> ClassicalPoset::least() const { return sup({}); }

ClassicalPoset classical_poset(const std::vector<std::string>& elements,
                               const std::vector<std::pair<std::string, std::string>>& pairs) {
    ClassicalPoset s{elements, {}};
    for (const auto& e : elements) s.leq.emplace(e, e);
    for (const auto& p : pairs) s.leq.insert(p);
    // Warshall closure
    for (const auto& k : elements)
        for (const auto& i : elements)
            if (s.le(i, k))
                for (const auto& j : elements)
                    if (s.le(k, j)) s.leq.emplace(i, j);
    if (!s.is_partial_order()) throw Error(ErrorKind::InvalidArgument, "classical poset: relation is not a partial order");
    return s;
}

BoolRelation as_bool_relation(const ClassicalPoset& s) { return BoolRelation{s.elements, s.elements, s.leq}; }

QuantumPoset classical_of_poset(const ClassicalPoset& s) {
    return QuantumPoset(classical_of_relation(as_bool_relation(s)));
}

bool is_monotone_map(const ClassicalPoset& s, const ClassicalPoset& t, const std::map<std::string, std::string>& g) {
    for (const auto& [a, b] : s.leq)
        if (!t.le(g.at(a), g.at(b))) return false;
    return true;
}

}  // namespace qdomain
