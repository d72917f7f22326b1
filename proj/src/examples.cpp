#include "qdomain/examples.hpp"

namespace qdomain::examples {

Matrix nilpotent() {
    Matrix a = Matrix::Zero(2, 2);
    a(0, 1) = 1.0;
    return a;
}

Matrix hadamard_matrix() {
    Matrix h(2, 2);
    h << 1.0, 1.0, 1.0, -1.0;
    return h;
}

QuantumPoset v_order() {
    const QuantumSet h = atomic(2, "H");
    BinaryRelation v(h, h);
    v.set("H", "H", OperatorSubspace::span({Matrix::Identity(2, 2), nilpotent()}, 2, 2));
    return QuantumPoset(std::move(v));
}

std::vector<std::string> nbar_tokens(int n) {
    std::vector<std::string> t;
    for (int i = 1; i <= n; ++i) t.push_back(std::to_string(i));
    t.push_back("∞");
    return t;
}

ClassicalPoset nbar(int n) {
    const std::vector<std::string> t = nbar_tokens(n);
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t i = 0; i + 1 < t.size(); ++i) pairs.emplace_back(t[i], t[i + 1]);
    return classical_poset(t, pairs);
}

AtomId x_atom(const std::string& i) { return "X_" + i; }

QuantumPoset nbar_times_v(int n) {
    const QuantumPoset prod = poset_product(classical_of_poset(nbar(n)), v_order());
    std::map<AtomId, AtomId> m;
    for (const auto& t : nbar_tokens(n)) m[ids::tensor(t, "H")] = x_atom(t);
    return QuantumPoset(relabel(prod.order(), m, m));
}

QuantumPoset sup_order(int n) {
    BinaryRelation r = nbar_times_v(n).order();
    const AtomId inf = x_atom("∞");
    r.set(inf, inf, OperatorSubspace::scalars(2));
    return QuantumPoset(std::move(r));
}

BinaryRelation k_map(const QuantumPoset& target, const std::string& i) {
    BinaryRelation k(atomic(2, "H"), target.carrier());
    k.set("H", x_atom(i), OperatorSubspace::scalars(2));
    return k;
}

MonotoneChain k_chain(const QuantumPoset& target, int n) {
    MonotoneChain c{atomic(2, "H"), target, {}, true};
    for (int i = 1; i <= n; ++i) c.entries.push_back(k_map(target, std::to_string(i)));
    c.entries.push_back(c.entries.back());
    return c;
}

BinaryRelation hadamard() {
    const QuantumSet h = atomic(2, "H");
    BinaryRelation f(h, h);
    f.set("H", "H", OperatorSubspace::span_of(hadamard_matrix()));
    return f;
}

std::vector<std::string> measurement_outcomes() { return {"1", "-1"}; }

BinaryRelation measurement() {
    BinaryRelation f(atomic(2, "H"), classical_of_set(measurement_outcomes()));
    Matrix e1(1, 2), e2(1, 2);
    e1 << 1.0, 0.0;
    e2 << 0.0, 1.0;
    f.set("H", "1", OperatorSubspace::span_of(e1));
    f.set("H", "-1", OperatorSubspace::span_of(e2));
    return f;
}

}  // namespace qdomain::examples
