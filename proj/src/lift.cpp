#include "qdomain/lift.hpp"

#include <sstream>

namespace qdomain {

LiftedSet lift_set(const QuantumSet& x) {
    LiftedSet out{x, fresh_bottom(x)};
    out.set.add(out.bottom, 1);
    return out;
}

AtomId bottom_of(const QuantumSet& lifted) {
    auto b = newest_bottom(lifted);
    if (!b || lifted.dim(*b) != 1) throw Error(ErrorKind::InvalidArgument, "not a lifted quantum set: " + describe(lifted));
    return *b;
}

QuantumSet unlift(const QuantumSet& lifted) { return remove_atom(lifted, bottom_of(lifted)); }

LiftedPoset lift_poset(const QuantumPoset& x) {
    const LiftedSet l = lift_set(x.carrier());
    BinaryRelation r(l.set, l.set);
    for (const auto& [key, sub] : x.order().components()) r.set(key.first, key.second, sub);
    for (const auto& [a, d] : l.set) r.set(l.bottom, a, OperatorSubspace::full(1, d));
    return LiftedPoset{x, QuantumPoset(std::move(r)), l.bottom};
}

BinaryRelation lift_morphism(const BinaryRelation& f) {
    const LiftedSet d = lift_set(f.dom());
    const LiftedSet c = lift_set(f.cod());
    BinaryRelation out(d.set, c.set);
    for (const auto& [key, sub] : f.components()) out.set(key.first, key.second, sub);
    out.set(d.bottom, c.bottom, OperatorSubspace::full(1, 1));
    return out;
}

BinaryRelation unit(const QuantumSet& x) { return inclusion(x, lift_set(x).set); }

BinaryRelation mult(const QuantumSet& x) {
    const LiftedSet inner = lift_set(x);
    const LiftedSet outer = lift_set(inner.set);
    BinaryRelation m(outer.set, inner.set);
    for (const auto& [a, d] : inner.set) m.set(a, a, OperatorSubspace::scalars(d));
    m.set(outer.bottom, inner.bottom, OperatorSubspace::full(1, 1));
    return m;
}

BinaryRelation double_strength(const QuantumSet& x, const QuantumSet& y) {
    const LiftedSet lx = lift_set(x), ly = lift_set(y);
    const LiftedSet lxy = lift_set(product(x, y));
    BinaryRelation k(product(lx.set, ly.set), lxy.set);
    for (const auto& [a, da] : lx.set)
        for (const auto& [b, db] : ly.set) {
            const AtomId ab = ids::tensor(a, b);
            if (a == lx.bottom || b == ly.bottom) k.set(ab, lxy.bottom, OperatorSubspace::full(da * db, 1));
            else k.set(ab, ab, OperatorSubspace::scalars(da * db));
        }
    return k;
}

BinaryRelation kleisli_compose(const BinaryRelation& g, const BinaryRelation& f) {
    require_same(f.cod(), lift_set(g.dom()).set, "kleisli_compose");
    const QuantumSet z = unlift(g.cod());
    require_same(g.cod(), lift_set(z).set, "kleisli_compose");
    return compose(mult(z), compose(lift_morphism(g), f));
}

BinaryRelation kleisli_tensor(const BinaryRelation& f, const BinaryRelation& g) {
    const QuantumSet x = unlift(f.cod()), y = unlift(g.cod());
    return compose(double_strength(x, y), monoidal(f, g));
}

PointednessReport pointedness_report(const QuantumPoset& x) {
    PointednessReport rep;
    for (const auto& [b, db] : x.carrier()) {
        if (db != 1) continue;
        bool full = true;
        for (const auto& [a, da] : x.carrier()) full = full && x.order().at(b, a).is_full();
        if (!full) continue;
        rep.is_pointed = true;
        rep.bottom = b;
        rep.b = point(x.carrier(), b);
        rep.base = relative_order(x, remove_atom(x.carrier(), b));
        break;
    }
    return rep;
}

BinaryRelation bottom_map(const PointednessReport& x, const QuantumSet& y) {
    if (!x.is_pointed) throw Error(ErrorKind::InvalidArgument, "bottom_map: poset is not pointed");
    return compose(x.b, terminal_map(y));
}

bool is_strict(const BinaryRelation& f, const QuantumPoset& x, const QuantumPoset& y) {
    require_same(f.dom(), x.carrier(), "is_strict");
    require_same(f.cod(), y.carrier(), "is_strict");
    const PointednessReport px = pointedness_report(x), py = pointedness_report(y);
    if (!px.is_pointed || !py.is_pointed) throw Error(ErrorKind::InvalidArgument, "is_strict: endpoints must be pointed");
    bool criterion = true;
    for (const auto& [a, d] : y.carrier()) {
        const OperatorSubspace c = f.at(*px.bottom, a);
        criterion = criterion && (a == *py.bottom ? c.is_full() : c.is_zero());
    }
    const bool composite = equals(compose(f, px.b), py.b);
    if (criterion != composite)
        throw Error(ErrorKind::Verification, "is_strict: component criterion and F∘B_X = B_Y disagree");
    return criterion;
}

EpZeroReport ep_zero(const QuantumPoset& x) {
    const QuantumSet& carrier = x.carrier();
    const QuantumSet empty;
    const LiftedSet lx = lift_set(carrier);
    const LiftedSet le = lift_set(empty);
    EpZeroReport rep;
    rep.e = BinaryRelation(empty, lx.set);
    rep.bang = BinaryRelation(carrier, le.set);
    for (const auto& [a, d] : carrier) rep.bang.set(a, le.bottom, OperatorSubspace::full(d, 1));

    rep.bang_after_e_is_identity = equals(kleisli_compose(rep.bang, rep.e), unit(empty));
    rep.e_after_bang = kleisli_compose(rep.e, rep.bang);
    const BinaryRelation least = compose(point(lx.set, lx.bottom), terminal_map(carrier));
    rep.e_after_bang_is_bottom = equals(rep.e_after_bang, least);
    rep.below_unit = hom_leq(rep.e_after_bang, unit(carrier), lift_poset(x).lifted);
    return rep;
}

bool check_order_reflection(const BinaryRelation& f1, const BinaryRelation& f2, const BinaryRelation& g1,
                            const BinaryRelation& g2, const QuantumPoset& x, const QuantumPoset& y) {
    const LiftedPoset lx = lift_poset(x), ly = lift_poset(y);
    for (const auto* f : {&f1, &f2}) {
        require_same(f->dom(), unit_set(), "check_order_reflection");
        require_same(f->cod(), lx.lifted.carrier(), "check_order_reflection");
    }
    for (const auto* g : {&g1, &g2}) {
        require_same(g->dom(), unit_set(), "check_order_reflection");
        require_same(g->cod(), ly.lifted.carrier(), "check_order_reflection");
    }
    if (!f1.is_zero_at(ids::unit, lx.bottom) || !g1.is_zero_at(ids::unit, ly.bottom))
        throw Error(ErrorKind::InvalidArgument, "check_order_reflection: F1 and G1 must not be bottom");
    const LiftedPoset lxy = lift_poset(poset_product(x, y));
    if (!hom_leq(kleisli_tensor(f1, g1), kleisli_tensor(f2, g2), lxy.lifted)) return true;
    return hom_leq(f1, f2, lx.lifted) && hom_leq(g1, g2, ly.lifted);
}

BinaryRelation limit_in_lift(const MonotoneChain& c, const QuantumPoset& x) {
    if (c.source.size() != 1) throw Error(ErrorKind::InvalidArgument, "limit_in_lift: source must be atomic");
    const LiftedPoset lx = lift_poset(x);
    require_same(c.target.carrier(), lx.lifted.carrier(), "limit_in_lift");
    if (!equals(c.target.order(), lx.lifted.order()))
        throw Error(ErrorKind::ObjectMismatch, "limit_in_lift: target order is not the lifted order");
    validate_chain(c);
    const AtomId h = c.source.begin()->first;
    const AtomId bot = lx.bottom;

    // Y_n, the part of H sent to ⊥, shrinks along the chain
    std::vector<OperatorSubspace> ys;
    for (const auto& e : c.entries) ys.push_back(row_support(e.at(h, bot)));
    for (std::size_t n = 1; n < ys.size(); ++n)
        if (!leq(ys[n], ys[n - 1]))
            throw Error(ErrorKind::Verification, "limit_in_lift: bottom part grows at entry " + std::to_string(n + 1));
    std::size_t k = ys.size() - 1;
    while (k > 0 && equals(ys[k - 1], ys.back())) --k;

    const Matrix vx = complement(ys.back()).vectors();
    BinaryRelation out(c.source, c.target.carrier());
    if (vx.cols() > 0) {
        MonotoneChain upper{atomic(static_cast<int>(vx.cols()), h), x, {}, c.tail_constant};
        for (std::size_t n = k; n < c.entries.size(); ++n) {
            BinaryRelation fn(upper.source, x.carrier());
            for (const auto& [a, d] : x.carrier()) {
                const OperatorSubspace comp = c.entries[n].at(h, a);
                if (!comp.is_zero()) fn.set(h, a, right_multiply(comp, vx));
            }
            upper.entries.push_back(std::move(fn));
        }
        const BinaryRelation lim = compute_limit(upper).limit;
        for (const auto& [key, sub] : lim.components()) out.set(h, key.second, right_multiply(sub, vx.adjoint()));
    }
    out.set(h, bot, c.entries.back().at(h, bot));

    if (auto d = first_difference(out, compute_limit(c).limit)) {
        std::ostringstream os;
        os << "limit_in_lift: disagrees with direct limit at (" << d->x << ", " << d->y << ")";
        throw Error(ErrorKind::Verification, os.str());
    }
    return out;
}

}  // namespace qdomain
