#include "oracles.hpp"

#include "qdomain/classical.hpp"
#include "qdomain/cpo.hpp"
#include "qdomain/examples.hpp"
#include "qdomain/random.hpp"

#include <doctest.h>

#include <functional>

using namespace qdomain;

namespace {

bool same_poset(const ClassicalPoset& a, const ClassicalPoset& b) {
    std::set<std::string> ea(a.elements.begin(), a.elements.end()), eb(b.elements.begin(), b.elements.end());
    return ea == eb && a.leq == b.leq;
}

// Every token map S -> T.
std::vector<std::map<std::string, std::string>> all_maps(const ClassicalPoset& s, const ClassicalPoset& t) {
    std::vector<std::map<std::string, std::string>> out;
    std::map<std::string, std::string> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == s.elements.size()) {
            out.push_back(cur);
            return;
        }
        for (const auto& b : t.elements) {
            cur[s.elements[i]] = b;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

}  // namespace

TEST_SUITE("classical") {

TEST_CASE("embed and extract") {
    rnd::Rng rng(110);
    for (int i = 0; i < 20; ++i) {
        const ClassicalPoset s = rnd::random_classical_poset(rng, 1, 4, "s");
        CHECK(same_poset(extract(embed(s)), s));
    }
    CHECK(extract(flat_order(atomic(2))).elements.empty());
    CHECK(embed(ClassicalPoset{}).carrier().empty());
    const ClassicalPoset v = extract(examples::v_order());
    CHECK(v.elements.empty());
}

TEST_CASE("points and the maps b and B") {
    rnd::Rng rng(111);
    for (int i = 0; i < 20; ++i) {
        const QuantumPoset x = rnd::random_poset_with_points(rng);
        CHECK(b_is_order_iso(x));
        CHECK(B_is_order_iso(x));
        CHECK(is_function(points(x.carrier()).b_relation));
    }
}

TEST_CASE("eta and transposes") {
    rnd::Rng rng(112);
    int checked = 0;
    for (int i = 0; i < 20; ++i) {
        const ClassicalPoset s = rnd::random_classical_poset(rng, 1, 3, "s");
        const QuantumPoset x = rnd::random_poset_with_points(rng);
        const ClassicalPoset pts = extract(x);
        for (const auto& e : s.elements) CHECK(is_function(eta(s, e)));
        for (const auto& f : all_maps(s, pts)) {
            if (!is_monotone_map(s, pts, f)) {
                CHECK_THROWS_AS(transpose(s, x, f), Error);
                continue;
            }
            ++checked;
            const BinaryRelation t = transpose(s, x, f);
            for (const auto& e : s.elements) CHECK(equals(compose(t, eta(s, e)), point(x.carrier(), f.at(e))));
            // uniqueness among the functions out of `S that classify the same points
            for (const auto& g : all_maps(s, pts)) {
                if (g == f || !is_monotone_map(s, pts, g)) continue;
                bool same = true;
                const BinaryRelation tg = transpose(s, x, g);
                for (const auto& e : s.elements) same = same && equals(compose(tg, eta(s, e)), point(x.carrier(), f.at(e)));
                CHECK_FALSE(same);
            }
        }
    }
    CHECK(checked > 10);
}

TEST_CASE("products are preserved") {
    rnd::Rng rng(113);
    for (int i = 0; i < 15; ++i) {
        const ClassicalPoset s = rnd::random_classical_poset(rng, 1, 3, "s");
        const ClassicalPoset t = rnd::random_classical_poset(rng, 1, 3, "t");
        const BinaryRelation g = strong_monoidal_iso(s, t);
        CHECK(function_report(g).is_bijective);
        // symmetry: swapping factors on both sides commutes with G
        const BinaryRelation gt = strong_monoidal_iso(t, s);
        std::map<AtomId, AtomId> sw_q, sw_c;
        for (const auto& a : s.elements)
            for (const auto& b : t.elements) {
                sw_q[ids::tensor(a, b)] = ids::tensor(b, a);
                sw_c[pair_token(a, b)] = pair_token(b, a);
            }
        const QuantumSet st = product(classical_of_set(s.elements), classical_of_set(t.elements));
        const QuantumSet pst = classical_of_set(product_poset(s, t).elements);
        CHECK(equals(compose(gt, relabeling(st, sw_q)), compose(relabeling(pst, sw_c), g)));
    }
}

TEST_CASE("the embedding is full and faithful") {
    rnd::Rng rng(114);
    for (int i = 0; i < 15; ++i) {
        const ClassicalPoset s = rnd::random_classical_poset(rng, 1, 3, "s");
        const ClassicalPoset t = rnd::random_classical_poset(rng, 1, 3, "t");
        for (const auto& g : all_maps(s, t)) {
            const BinaryRelation q = classical_function(s.elements, t.elements, g);
            CHECK(is_monotone(q, embed(s), embed(t)) == is_monotone_map(s, t, g));
        }
        // every function between classical sets is classical
        for (int k = 0; k < 5; ++k)
            if (auto f = rnd::random_function(rng, classical_of_set(s.elements), classical_of_set(t.elements))) {
                bool matched = false;
                for (const auto& g : all_maps(s, t))
                    matched = matched || equals(*f, classical_function(s.elements, t.elements, g));
                CHECK(matched);
            }
    }
}

TEST_CASE("classical maps are Scott continuous") {
    rnd::Rng rng(115);
    for (int i = 0; i < 10; ++i) {
        const ClassicalPoset s = rnd::random_classical_poset(rng, 1, 3, "s");
        const ClassicalPoset t = rnd::random_classical_poset(rng, 1, 3, "t");
        for (const auto& g : all_maps(s, t)) {
            if (!is_monotone_map(s, t, g)) continue;
            std::vector<MonotoneChain> cs;
            for (int k = 0; k < 3; ++k)
                if (auto c = rnd::random_chain(rng, atomic(1), embed(s), 2)) cs.push_back(*c);
            CHECK(verify_scott_continuous(classical_function(s.elements, t.elements, g), embed(s), embed(t), cs).passed);
            break;
        }
    }
}

TEST_CASE("the classical part is closed under limits") {
    rnd::Rng rng(116);
    int checked = 0;
    for (int i = 0; i < 30; ++i) {
        const QuantumPoset x = rnd::random_poset_with_points(rng);
        const Points p = points(x.carrier());
        const QuantumPoset rel = relative_order(x, p.one_dim);
        auto c = rnd::random_chain(rng, atomic(1), rel, 3);
        if (!c) continue;
        ++checked;
        MonotoneChain outer{c->source, x, {}, true};
        const BinaryRelation j1 = inclusion(p.one_dim, x.carrier());
        for (const auto& e : c->entries) outer.entries.push_back(compose(j1, e));
        const BinaryRelation lim = compute_limit(outer).limit;
        CHECK(factors_through_classical_part(lim));
        CHECK(equals(lim, compose(j1, compute_limit(*c).limit)));
        CHECK(verify_scott_continuous(j1, rel, x, {*c}).passed);
    }
    CHECK(checked > 10);
}

}  // TEST_SUITE
