#include "oracles.hpp"

#include "qdomain/examples.hpp"
#include "qdomain/function.hpp"
#include "qdomain/random.hpp"

#include <doctest.h>

using namespace qdomain;

namespace {

std::vector<std::string> tokens(const std::string& p, int n) {
    std::vector<std::string> t;
    for (int i = 0; i < n; ++i) t.push_back(p + std::to_string(i));
    return t;
}

std::map<std::string, std::string> random_map(rnd::Rng& rng, const std::vector<std::string>& a,
                                              const std::vector<std::string>& b) {
    std::map<std::string, std::string> f;
    for (const auto& x : a) f[x] = b[static_cast<std::size_t>(rnd::uniform_int(rng, 0, static_cast<int>(b.size()) - 1))];
    return f;
}

BinaryRelation random_fn(rnd::Rng& rng, const QuantumSet& x, const QuantumSet& y) {
    auto f = rnd::random_function(rng, x, y);
    REQUIRE(f.has_value());
    return *f;
}

}  // namespace

TEST_SUITE("qfun") {

TEST_CASE("worked functions") {
    const FunctionReport h = function_report(examples::hadamard());
    CHECK(h.is_function);
    CHECK(h.is_bijective);
    const FunctionReport m = function_report(examples::measurement());
    CHECK(m.is_function);
    CHECK(m.is_surjective);
    CHECK_FALSE(m.is_injective);
    CHECK(m.range == classical_of_set({"1", "-1"}));
    BinaryRelation full(atomic(2), atomic(2));
    full.set("H", "H", OperatorSubspace::full(2, 2));
    const FunctionReport f = function_report(full);
    CHECK_FALSE(f.is_function);
    CHECK_FALSE(f.violations.empty());
}

TEST_CASE("factor through range") {
    const BinaryRelation f2 = examples::measurement();
    const RangeFactorization r = factor_through_range(f2);
    CHECK(r.inclusion.dom() == classical_of_set({"1", "-1"}));
    CHECK(equals(r.surjection, f2));
    const QuantumSet x = atomic(3);
    const RangeFactorization id = factor_through_range(identity(x));
    CHECK(equals(id.inclusion, identity(x)));
    CHECK(equals(id.surjection, identity(x)));
    rnd::Rng rng(50);
    for (int i = 0; i < 20; ++i) {
        const QuantumSet a = rnd::random_qset(rng, 1, 2, 3, "a"), b = rnd::random_qset(rng, 1, 4, 2, "b");
        auto g = rnd::random_function(rng, a, b);
        if (!g) continue;
        const RangeFactorization rf = factor_through_range(*g);
        CHECK(equals(compose(rf.inclusion, rf.surjection), *g));
        CHECK(function_report(rf.surjection).is_surjective);
        CHECK(function_report(rf.inclusion).is_injective);
    }
    BinaryRelation bad(atomic(2), atomic(2));
    bad.set("H", "H", OperatorSubspace::full(2, 2));
    CHECK_THROWS_AS(factor_through_range(bad), Error);
}

TEST_CASE("corestriction") {
    const BinaryRelation f2 = examples::measurement();
    CHECK(equals(corestrict_function(f2, range(f2)), factor_through_range(f2).surjection));
    CHECK_THROWS_AS(corestrict_function(f2, classical_of_set({"1"})), Error);
    const QuantumSet x = classical_of_set({"a", "b", "c"});
    const QuantumSet w = classical_of_set({"a", "b"});
    CHECK(equals(corestrict_function(inclusion(w, x), w), identity(w)));
    rnd::Rng rng(51);
    for (int i = 0; i < 10; ++i) {
        const QuantumSet a = atomic(1, "p");
        const BinaryRelation g = random_fn(rng, a, x);
        const QuantumSet& big = x;  // strictly larger than the one-point range
        const BinaryRelation into = compose(inclusion(range(g), x), corestrict_function(g, range(g)));
        CHECK(equals(into, g));
        CHECK_FALSE(function_report(corestrict_function(g, big)).is_surjective);
    }
}

TEST_CASE("classical functions") {
    rnd::Rng rng(52);
    for (int i = 0; i < 20; ++i) {
        const auto a = tokens("a", rnd::uniform_int(rng, 1, 3)), b = tokens("b", rnd::uniform_int(rng, 1, 3));
        const auto f = random_map(rng, a, b);
        const BinaryRelation q = classical_function(a, b, f);
        CHECK(is_function(q));
        oracle::Pairs want;
        for (const auto& [x, y] : f) want.emplace(x, y);
        CHECK(oracle::support(q) == want);
    }
}

TEST_CASE("decomposition of the measurement") {
    const TaggedCoproduct cod{{"p", "m"}, {classical_of_set({"1"}), classical_of_set({"-1"})}};
    BinaryRelation f(atomic(2), cod.total());
    f.set("H", cod.id(0, "1"), examples::measurement().at("H", "1"));
    f.set("H", cod.id(1, "-1"), examples::measurement().at("H", "-1"));
    const CoproductDecomposition d = decompose_over_coproduct(f, cod);
    REQUIRE(d.parts.size() == 2);
    CHECK(is_decomposition(d.decomposition));
    CHECK(function_report(d.decomposition.relation).is_surjective);
    Matrix e1 = Matrix::Zero(2, 1), e2 = Matrix::Zero(2, 1);
    e1(0, 0) = 1.0;
    e2(1, 0) = 1.0;
    CHECK(oracle::same_span({d.decomposition.bases[0]}, {e1}));
    CHECK(oracle::same_span({d.decomposition.bases[1]}, {e2}));
    CHECK(equals(reassemble(d.decomposition, d.summand, d.parts, cod), f));
}

TEST_CASE("single-summand decomposition is trivial") {
    const TaggedCoproduct cod{{"only"}, {atomic(2, "K")}};
    BinaryRelation f(atomic(2), cod.total());
    f.set("H", cod.id(0, "K"), OperatorSubspace::scalars(2));
    const CoproductDecomposition d = decompose_over_coproduct(f, cod);
    CHECK(d.parts.size() == 1);
    CHECK(d.decomposition.bases[0].cols() == 2);
}

TEST_CASE("random block functions round-trip through decompositions") {
    rnd::Rng rng(53);
    int tried = 0;
    for (int i = 0; i < 40 && tried < 15; ++i) {
        const QuantumSet y0 = rnd::random_qset(rng, 1, 2, 2, "u"), y1 = rnd::random_qset(rng, 1, 2, 2, "v");
        const TaggedCoproduct cod{{"s", "t"}, {y0, y1}};
        const QuantumSet h = atomic(rnd::uniform_int(rng, 1, 4));
        auto f = rnd::random_function(rng, h, cod.total());
        if (!f) continue;
        ++tried;
        const CoproductDecomposition d = decompose_over_coproduct(*f, cod);
        CHECK(is_decomposition(d.decomposition));
        for (const auto& p : d.parts) CHECK(is_function(p));
        CHECK(equals(reassemble(d.decomposition, d.summand, d.parts, cod), *f));
        for (std::size_t a = 0; a < d.decomposition.bases.size(); ++a)
            for (std::size_t b = a + 1; b < d.decomposition.bases.size(); ++b)
                CHECK((d.decomposition.bases[a].adjoint() * d.decomposition.bases[b]).norm() < 1e-9);
    }
    CHECK(tried > 0);
}

TEST_CASE("projections") {
    rnd::Rng rng(54);
    for (int i = 0; i < 15; ++i) {
        const QuantumSet x = rnd::random_qset(rng, 1, 2, 3, "x"), y = rnd::random_qset(rng, 1, 2, 3, "y");
        CHECK(function_report(projection_P(x, y)).is_surjective);
        CHECK(function_report(projection_Q(x, y)).is_surjective);
    }
    const QuantumSet x = rnd::random_qset(rng, 2, 2, 3, "x");
    const BinaryRelation p = projection_P(x, unit_set());
    std::map<AtomId, AtomId> m;
    for (const auto& [id, d] : x) m[ids::tensor(id, ids::unit)] = id;
    CHECK(equals(p, relabeling(product(x, unit_set()), m)));
    for (int i = 0; i < 15; ++i) {
        const auto w = tokens("w", rnd::uniform_int(rng, 1, 3)), a = tokens("a", rnd::uniform_int(rng, 1, 3)),
                   b = tokens("b", rnd::uniform_int(rng, 1, 3));
        const auto f = random_map(rng, w, a), g = random_map(rng, w, b);
        const BinaryRelation fq = classical_function(w, a, f), gq = classical_function(w, b, g);
        const QuantumSet qa = classical_of_set(a), qb = classical_of_set(b);
        std::vector<std::string> ab;
        std::map<std::string, std::string> fg;
        for (const auto& s : a)
            for (const auto& t : b) ab.push_back(ids::tensor(s, t));
        for (const auto& s : w) fg[s] = ids::tensor(f.at(s), g.at(s));
        const BinaryRelation pairq = classical_function(w, ab, fg);
        CHECK(equals(compose(projection_P(qa, qb), pairq), fq));
        CHECK(equals(compose(projection_Q(qa, qb), pairq), gq));
        CHECK(equals(pair(fq, gq), pairq));
    }
}

TEST_CASE("no cloning") {
    const BinaryRelation i = identity(atomic(2));
    CHECK_THROWS_AS(pair(i, i), PairingError);
    try {
        (void)pair(i, i);
    } catch (const PairingError& e) {
        CHECK(std::string(e.what()).find("incompatible-or-unrepresentable") != std::string::npos);
    }
}

TEST_CASE("pairing with a constant point succeeds") {
    rnd::Rng rng(55);
    for (int i = 0; i < 10; ++i) {
        const QuantumSet w = rnd::random_qset(rng, 1, 2, 3, "w");
        const QuantumSet y = classical_of_set({"p", "q"});
        const BinaryRelation f = identity(w);
        const BinaryRelation g = compose(point(y, "q"), terminal_map(w));
        const BinaryRelation e = pair(f, g);
        CHECK(is_function(e));
        CHECK(equals(compose(projection_P(w, y), e), f));
        CHECK(equals(compose(projection_Q(w, y), e), g));
    }
}

TEST_CASE("points") {
    CHECK(points(atomic(2)).atoms.empty());
    const QuantumSet s = classical_of_set({"a", "b", "c"});
    const Points p = points(s);
    CHECK(p.atoms.size() == 3);
    CHECK(function_report(p.b_relation).is_bijective);
    const QuantumSet mixed = disjoint_union({atomic(2), classical_of_set({"x"})});
    CHECK(points(mixed).atoms == std::vector<AtomId>{"x"});
    CHECK(function_report(points(mixed).b_relation).is_bijective);
    const BinaryRelation bang = terminal_map(mixed);
    CHECK(is_function(bang));
    CHECK(bang.at("H", ids::unit).is_full());
}

TEST_CASE("function properties") {
    rnd::Rng rng(56);
    for (int i = 0; i < 30; ++i) {
        const QuantumSet x = rnd::random_qset(rng, 1, 2, 3, "x"), y = rnd::random_qset(rng, 1, 3, 2, "y"),
                         z = rnd::random_qset(rng, 1, 3, 2, "z");
        auto f = rnd::random_function(rng, x, y);
        auto g = rnd::random_function(rng, y, z);
        if (!f || !g) continue;
        const BinaryRelation gf = compose(*g, *f);
        CHECK(is_function(gf));
        CHECK(is_subset(range(gf), range(*g)));
        if (function_report(*f).is_surjective) CHECK(range(gf) == range(*g));
        const FunctionReport rep = function_report(*f);
        if (rep.is_bijective) {
            CHECK(equals(compose(dagger(*f), *f), identity(x)));
            CHECK(equals(compose(*f, dagger(*f)), identity(y)));
        }
    }
    // A unitary on one atom is a bijection whose inverse is its dagger.
    const Matrix u = rnd::random_unitary(rng, 3);
    BinaryRelation f(atomic(3), atomic(3));
    f.set("H", "H", OperatorSubspace::span_of(u));
    CHECK(function_report(f).is_bijective);
    CHECK(equals(compose(dagger(f), f), identity(atomic(3))));
}

TEST_CASE("epi-mono factorization and diagonal fill") {
    rnd::Rng rng(57);
    for (int i = 0; i < 20; ++i) {
        const QuantumSet x = rnd::random_qset(rng, 1, 2, 2, "x"), y = rnd::random_qset(rng, 1, 4, 2, "y");
        auto f = rnd::random_function(rng, x, y);
        if (!f) continue;
        const RangeFactorization rf = factor_through_range(*f);
        // Square E' then M' equal to F with E' surjective, M' injective:
        // take E' = F-bar and M' = J_F; the fill is the identity on the range.
        const BinaryRelation e = rf.surjection, m = rf.inclusion;
        const BinaryRelation fill = corestrict_function(m, range(*f));
        CHECK(equals(compose(fill, e), rf.surjection));
        CHECK(equals(compose(m, fill), rf.inclusion));
        CHECK(function_report(fill).is_bijective);
    }
}

}  // TEST_SUITE
