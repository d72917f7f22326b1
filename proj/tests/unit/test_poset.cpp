#include "oracles.hpp"

#include "qdomain/examples.hpp"
#include "qdomain/lift.hpp"
#include "qdomain/poset.hpp"
#include "qdomain/random.hpp"

#include <doctest.h>

using namespace qdomain;

namespace {

std::map<std::string, std::string> random_map(rnd::Rng& rng, const ClassicalPoset& s, const ClassicalPoset& t) {
    std::map<std::string, std::string> g;
    for (const auto& x : s.elements)
        g[x] = t.elements[static_cast<std::size_t>(rnd::uniform_int(rng, 0, static_cast<int>(t.elements.size()) - 1))];
    return g;
}

bool classical_monotone(const ClassicalPoset& s, const ClassicalPoset& t, const std::map<std::string, std::string>& g) {
    for (const auto& a : s.elements)
        for (const auto& b : s.elements)
            if (s.le(a, b) && !t.le(g.at(a), g.at(b))) return false;
    return true;
}

}  // namespace

TEST_SUITE("qpos") {

TEST_CASE("order reports") {
    CHECK(order_report(examples::v_order().order()).ok());
    rnd::Rng rng(60);
    const QuantumSet x = rnd::random_qset(rng, 1, 3, 3);
    CHECK(order_report(identity(x)).ok());
    BinaryRelation a(atomic(2), atomic(2));
    a.set("H", "H", OperatorSubspace::span_of(examples::nilpotent()));
    const OrderReport r = order_report(a);
    CHECK_FALSE(r.reflexive);
    CHECK_FALSE(r.witnesses.empty());
    BinaryRelation full(atomic(2), atomic(2));
    full.set("H", "H", OperatorSubspace::full(2, 2));
    const OrderReport f = order_report(full);
    CHECK(f.reflexive);
    CHECK(f.transitive);
    CHECK_FALSE(f.antisymmetric);
    CHECK_THROWS_AS(QuantumPoset{full}, Error);
}

TEST_CASE("hom order on the example chain") {
    const QuantumPoset r = examples::sup_order();
    CHECK(hom_leq(examples::k_map(r, "1"), examples::k_map(r, "2"), r));
    CHECK_FALSE(hom_leq(examples::k_map(r, "2"), examples::k_map(r, "1"), r));
    CHECK(hom_leq(examples::k_map(r, "3"), examples::k_map(r, "3"), r));
    CHECK(hom_leq_check(examples::k_map(r, "1"), examples::k_map(r, "∞"), r).agree());
}

TEST_CASE("the five forms of the hom order agree") {
    rnd::Rng rng(61);
    int compared = 0;
    for (int i = 0; i < 60; ++i) {
        const QuantumPoset y = rnd::random_poset(rng, 1);
        const QuantumSet x = rnd::random_qset(rng, 1, 2, 2, "s");
        auto f = rnd::random_function(rng, x, y.carrier());
        auto g = rnd::random_function(rng, x, y.carrier());
        if (!f || !g) continue;
        ++compared;
        const HomLeqCheck c = hom_leq_check(*f, *g, y);
        CHECK(c.agree());
        CHECK(hom_leq(*f, *f, y));
        if (hom_leq(*f, *g, y) && hom_leq(*g, *f, y)) CHECK(equals(*f, *g));
    }
    CHECK(compared > 20);
}

TEST_CASE("monotone maps, embeddings, isos") {
    rnd::Rng rng(62);
    const QuantumPoset x = rnd::random_poset(rng, 1);
    CHECK(is_order_iso(identity(x.carrier()), x, x));
    const LiftedPoset l = lift_poset(x);
    CHECK(is_order_embedding(unit(x.carrier()), x, l.lifted));
    CHECK_FALSE(is_order_iso(unit(x.carrier()), x, l.lifted));
    for (int i = 0; i < 30; ++i) {
        const ClassicalPoset s = rnd::random_classical_poset(rng, 1, 4, "s");
        const ClassicalPoset t = rnd::random_classical_poset(rng, 1, 4, "t");
        const auto g = random_map(rng, s, t);
        const BinaryRelation q = classical_function(s.elements, t.elements, g);
        CHECK(is_monotone(q, classical_of_poset(s), classical_of_poset(t)) == classical_monotone(s, t, g));
        CHECK(is_monotone_map(s, t, g) == classical_monotone(s, t, g));
    }
}

TEST_CASE("constructions") {
    const QuantumPoset s = examples::nbar_times_v();
    CHECK(s.carrier().size() == 6);
    rnd::Rng rng(63);
    const QuantumSet a = rnd::random_qset(rng, 1, 2, 2, "a"), b = rnd::random_qset(rng, 1, 2, 2, "b");
    const PosetCoproduct c = poset_coproduct({flat_order(a), flat_order(b)}, {"l", "r"});
    CHECK(equals(c.poset.order(), flat_order(coproduct({a, b}, {"l", "r"})).order()));
    for (int i = 0; i < 20; ++i) {
        const ClassicalPoset p = rnd::random_classical_poset(rng, 2, 5, "e");
        std::vector<std::string> keep;
        for (const auto& e : p.elements)
            if (rnd::coin(rng, 0.6)) keep.push_back(e);
        if (keep.empty()) keep.push_back(p.elements.front());
        const QuantumPoset rel = relative_order(classical_of_poset(p), classical_of_set(keep));
        for (const auto& u : keep)
            for (const auto& v : keep) CHECK(!rel.order().is_zero_at(u, v) == p.le(u, v));
    }
    for (int i = 0; i < 10; ++i) {
        const QuantumPoset x = rnd::random_poset(rng, 1, "x"), y = rnd::random_poset(rng, 1, "y");
        CHECK(order_report(poset_product(x, y).order()).ok());
        CHECK(order_report(poset_coproduct({x, y}, {"a", "b"}).poset.order()).ok());
    }
}

TEST_CASE("multiplication by monotone functions preserves the hom order") {
    rnd::Rng rng(64);
    int checked = 0;
    for (int i = 0; i < 60 && checked < 20; ++i) {
        const QuantumPoset y = rnd::random_poset(rng, 1, "y"), z = rnd::random_poset(rng, 1, "z");
        const QuantumSet x = rnd::random_qset(rng, 1, 1, 2, "s");
        auto f = rnd::random_function(rng, x, y.carrier());
        auto g = rnd::random_function(rng, x, y.carrier());
        auto h = rnd::random_monotone(rng, y, z);
        if (!f || !g || !h || !hom_leq(*f, *g, y)) continue;
        ++checked;
        CHECK(hom_leq(compose(*h, *f), compose(*h, *g), z));
        const BinaryRelation pre = compose(*f, identity(x));
        CHECK(hom_leq(pre, *g, y));
    }
    CHECK(checked > 0);
}

TEST_CASE("classical posets embed fully faithfully") {
    rnd::Rng rng(65);
    for (int i = 0; i < 20; ++i) {
        const ClassicalPoset s = rnd::random_classical_poset(rng, 1, 4, "s");
        const QuantumPoset q = classical_of_poset(s);
        for (const auto& a : s.elements)
            for (const auto& b : s.elements) {
                CHECK(!q.order().is_zero_at(a, b) == s.le(a, b));
                CHECK(hom_leq(point(q.carrier(), a), point(q.carrier(), b), q) == s.le(a, b));
            }
    }
    const ClassicalPoset chain = classical_poset({"0", "1", "2"}, {{"0", "1"}, {"1", "2"}});
    CHECK(chain.le("0", "2"));
    CHECK(chain.sup({"0", "1"}) == std::string("1"));
    CHECK(chain.least() == std::string("0"));
    CHECK_THROWS_AS(classical_poset({"a", "b"}, {{"a", "b"}, {"b", "a"}}), Error);
}

}  // TEST_SUITE
