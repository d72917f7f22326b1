#include "oracles.hpp"

#include "qdomain/cpo.hpp"
#include "qdomain/lift.hpp"
#include "qdomain/random.hpp"

#include <doctest.h>

using namespace qdomain;

namespace {

std::vector<MonotoneChain> chains_into(rnd::Rng& rng, const QuantumPoset& y, int count) {
    std::vector<MonotoneChain> out;
    for (int i = 0; i < count * 4 && static_cast<int>(out.size()) < count; ++i)
        if (auto c = rnd::random_chain(rng, atomic(rnd::uniform_int(rng, 1, 2), "H"), y, 2)) out.push_back(*c);
    return out;
}

}  // namespace

TEST_SUITE("lift") {

TEST_CASE("bottoms are numbered above existing ones") {
    const QuantumSet x = atomic(2);
    const LiftedSet a = lift_set(x);
    CHECK(a.bottom == ids::bottom(1));
    const LiftedSet b = lift_set(a.set);
    CHECK(b.bottom == ids::bottom(2));
    CHECK(bottom_of(b.set) == b.bottom);
    CHECK(unlift(b.set) == a.set);
    CHECK_THROWS_AS(bottom_of(x), Error);
}

TEST_CASE("the multiplication table") {
    const QuantumSet x = atomic(2);
    const BinaryRelation m = mult(x);
    const AtomId inner = ids::bottom(1), outer = ids::bottom(2);
    CHECK(equals(m.at("H", "H"), OperatorSubspace::scalars(2)));
    CHECK(m.at(inner, inner).is_full());
    CHECK(m.at(outer, inner).is_full());
    CHECK(m.is_zero_at(outer, "H"));
    CHECK(m.is_zero_at(inner, "H"));
    CHECK(m.is_zero_at("H", inner));
    CHECK(is_function(m));
}

TEST_CASE("monad laws") {
    rnd::Rng rng(100);
    for (int i = 0; i < 15; ++i) {
        const QuantumSet x = rnd::random_qset(rng, 1, 3, 2);
        const QuantumSet xl = lift_set(x).set;
        const BinaryRelation id = identity(xl);
        CHECK(equals(compose(mult(x), unit(xl)), id));
        CHECK(equals(compose(mult(x), lift_morphism(unit(x))), id));
        CHECK(equals(compose(mult(x), mult(xl)), compose(mult(x), lift_morphism(mult(x)))));
        const QuantumSet y = rnd::random_qset(rng, 1, 3, 2, "y");
        if (auto f = rnd::random_function(rng, x, y)) {
            CHECK(equals(compose(unit(y), *f), compose(lift_morphism(*f), unit(x))));
            CHECK(equals(compose(mult(y), lift_morphism(lift_morphism(*f))), compose(lift_morphism(*f), mult(x))));
            CHECK(equals(lift_morphism(identity(x)), id));
        }
    }
}

TEST_CASE("double strength") {
    rnd::Rng rng(101);
    int checked = 0;
    for (int i = 0; i < 30; ++i) {
        const QuantumSet x = rnd::random_qset(rng, 1, 2, 2, "x"), y = rnd::random_qset(rng, 1, 2, 2, "y");
        const BinaryRelation k = double_strength(x, y);
        CHECK(is_function(k));
        CHECK(equals(compose(k, monoidal(unit(x), unit(y))), unit(product(x, y))));
        const QuantumSet x2 = rnd::random_qset(rng, 1, 2, 2, "u"), y2 = rnd::random_qset(rng, 1, 2, 2, "v");
        auto f = rnd::random_function(rng, x, x2);
        auto g = rnd::random_function(rng, y, y2);
        if (!f || !g) continue;
        ++checked;
        CHECK(equals(compose(double_strength(x2, y2), monoidal(lift_morphism(*f), lift_morphism(*g))),
                     compose(lift_morphism(monoidal(*f, *g)), k)));
    }
    CHECK(checked > 5);
}

TEST_CASE("Kleisli category") {
    rnd::Rng rng(102);
    int checked = 0;
    for (int i = 0; i < 40; ++i) {
        const QuantumSet x = rnd::random_qset(rng, 1, 2, 2, "x"), y = rnd::random_qset(rng, 1, 2, 2, "y"),
                         z = rnd::random_qset(rng, 1, 2, 2, "z"), w = rnd::random_qset(rng, 1, 2, 2, "w");
        auto f = rnd::random_function(rng, x, lift_set(y).set);
        auto g = rnd::random_function(rng, y, lift_set(z).set);
        auto h = rnd::random_function(rng, z, lift_set(w).set);
        if (!f) continue;
        CHECK(equals(kleisli_compose(unit(y), *f), *f));
        CHECK(equals(kleisli_compose(*f, unit(x)), *f));
        if (!g || !h) continue;
        ++checked;
        const BinaryRelation gf = kleisli_compose(*g, *f);
        CHECK(is_function(gf));
        CHECK(equals(kleisli_compose(*h, gf), kleisli_compose(kleisli_compose(*h, *g), *f)));
    }
    CHECK(checked > 3);
}

TEST_CASE("lifted posets are pointed") {
    rnd::Rng rng(103);
    for (int i = 0; i < 15; ++i) {
        const QuantumPoset x = rnd::random_poset(rng, 1);
        const LiftedPoset l = lift_poset(x);
        const PointednessReport p = pointedness_report(l.lifted);
        REQUIRE(p.is_pointed);
        CHECK(*p.bottom == l.bottom);
        CHECK(equals(p.base->order(), x.order()));
        for (int k = 0; k < 4; ++k)
            if (auto g = rnd::random_function(rng, unit_set(), l.lifted.carrier())) CHECK(hom_leq(p.b, *g, l.lifted));
        const QuantumSet src = rnd::random_qset(rng, 1, 2, 2, "s");
        const BinaryRelation bm = bottom_map(p, src);
        for (int k = 0; k < 4; ++k)
            if (auto g = rnd::random_function(rng, src, l.lifted.carrier())) CHECK(hom_leq(bm, *g, l.lifted));
    }
    QuantumSet two;
    two.add("a", 1);
    two.add("b", 1);
    CHECK_FALSE(pointedness_report(flat_order(two)).is_pointed);
    CHECK_FALSE(pointedness_report(flat_order(atomic(2))).is_pointed);
    CHECK(pointedness_report(flat_order(atomic(1))).is_pointed);
    CHECK_THROWS_AS(bottom_map(pointedness_report(flat_order(two)), two), Error);
}

TEST_CASE("strict maps") {
    rnd::Rng rng(104);
    for (int i = 0; i < 10; ++i) {
        const QuantumPoset x = rnd::random_poset(rng, 1, "x"), y = rnd::random_poset(rng, 1, "y");
        auto f = rnd::random_function(rng, x.carrier(), y.carrier());
        if (!f) continue;
        CHECK(is_strict(lift_morphism(*f), lift_poset(x).lifted, lift_poset(y).lifted));
    }
    QuantumSet s;
    s.add("a", 1);
    const LiftedPoset l = lift_poset(flat_order(s));
    BinaryRelation c(l.lifted.carrier(), l.lifted.carrier());
    c.set("a", "a", OperatorSubspace::scalars(1));
    c.set(l.bottom, "a", OperatorSubspace::scalars(1));
    CHECK_FALSE(is_strict(c, l.lifted, l.lifted));
    BinaryRelation swap(l.lifted.carrier(), l.lifted.carrier());
    swap.set("a", l.bottom, OperatorSubspace::scalars(1));
    swap.set(l.bottom, "a", OperatorSubspace::scalars(1));
    CHECK_FALSE(is_strict(swap, l.lifted, l.lifted));
}

TEST_CASE("the empty set as zero object") {
    const EpZeroReport h2 = ep_zero(flat_order(atomic(2)));
    CHECK(h2.ok());
    CHECK(h2.e.components().empty());
    CHECK(h2.bang.at("H", ids::bottom(1)).is_full());
    rnd::Rng rng(105);
    for (int i = 0; i < 15; ++i) CHECK(ep_zero(rnd::random_poset(rng, 1)).ok());
    CHECK(ep_zero(flat_order(QuantumSet{})).ok());
}

TEST_CASE("order reflection for the Kleisli tensor") {
    rnd::Rng rng(106);
    int checked = 0;
    for (int i = 0; i < 20; ++i) {
        const QuantumPoset x = rnd::random_poset_with_points(rng, "x"), y = rnd::random_poset_with_points(rng, "y");
        const LiftedPoset lx = lift_poset(x), ly = lift_poset(y);
        const Points px = points(x.carrier()), py = points(y.carrier());
        for (const auto& a1 : px.atoms)
            for (const auto& b1 : py.atoms)
                for (const auto& a2 : points(lx.lifted.carrier()).atoms)
                    for (const auto& b2 : points(ly.lifted.carrier()).atoms) {
                        const BinaryRelation f1 = point(lx.lifted.carrier(), a1), f2 = point(lx.lifted.carrier(), a2);
                        const BinaryRelation g1 = point(ly.lifted.carrier(), b1), g2 = point(ly.lifted.carrier(), b2);
                        CHECK(check_order_reflection(f1, f2, g1, g2, x, y));
                        ++checked;
                    }
        const BinaryRelation bot = point(lx.lifted.carrier(), lx.bottom);
        const BinaryRelation g = point(ly.lifted.carrier(), ly.bottom);
        CHECK_THROWS_AS(check_order_reflection(bot, bot, g, g, x, y), Error);
    }
    CHECK(checked > 20);
}

TEST_CASE("limits in the lift") {
    rnd::Rng rng(107);
    int checked = 0;
    for (int i = 0; i < 30; ++i) {
        const QuantumPoset x = rnd::random_poset(rng, 1);
        const LiftedPoset l = lift_poset(x);
        auto c = rnd::random_chain(rng, atomic(rnd::uniform_int(rng, 1, 3)), l.lifted, 3);
        if (!c) continue;
        ++checked;
        BinaryRelation lim;
        CHECK_NOTHROW(lim = limit_in_lift(*c, x));
        CHECK(equals(lim, compute_limit(*c).limit));
    }
    CHECK(checked > 10);
}

TEST_CASE("the unit is an order embedding") {
    rnd::Rng rng(108);
    for (int i = 0; i < 15; ++i) {
        const QuantumPoset x = rnd::random_poset(rng, 1);
        const LiftedPoset l = lift_poset(x);
        const BinaryRelation j = unit(x.carrier());
        CHECK(is_order_embedding(j, x, l.lifted));
        CHECK(equals(compose(l.lifted.order(), j), compose(j, x.order())));
        CHECK(is_monotone(j, x, l.lifted));
    }
}

TEST_CASE("M and K are Scott continuous") {
    rnd::Rng rng(109);
    for (int i = 0; i < 6; ++i) {
        const QuantumPoset x = rnd::random_poset(rng, 1, "x");
        const LiftedPoset l = lift_poset(x);
        const LiftedPoset ll = lift_poset(l.lifted);
        const auto cs = chains_into(rng, ll.lifted, 3);
        CHECK(verify_scott_continuous(mult(x.carrier()), ll.lifted, l.lifted, cs).passed);
        const QuantumPoset y = rnd::random_poset(rng, 1, "y");
        const LiftedPoset ly = lift_poset(y);
        const QuantumPoset dom = poset_product(l.lifted, ly.lifted);
        const LiftedPoset target = lift_poset(poset_product(x, y));
        const BinaryRelation k = double_strength(x.carrier(), y.carrier());
        CHECK(is_monotone(k, dom, target.lifted));
        CHECK(verify_scott_continuous(k, dom, target.lifted, chains_into(rng, dom, 3)).passed);
    }
}

}  // TEST_SUITE
