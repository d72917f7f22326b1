#pragma once

#include "qdomain/cpo.hpp"
#include "qdomain/poset.hpp"

#include <string>
#include <vector>

// The worked examples: the order V on a qubit, the orders on `N̄ × H
// (truncated to 1..n and ∞), the chain K_n, the Hadamard function and the
// standard qubit measurement.
namespace qdomain::examples {

Matrix nilpotent();  // a = [[0, 1], [0, 0]]
Matrix hadamard_matrix();

// V(H, H) = C a + C 1 on the atom "H" of dimension 2.
QuantumPoset v_order();

// Tokens "1", ..., "n", "∞" with the usual order.
std::vector<std::string> nbar_tokens(int n = 5);
ClassicalPoset nbar(int n = 5);

// Atom X_i of `N̄ × H, named "X_i".
AtomId x_atom(const std::string& i);

// S = `⊑ × V with atoms relabelled to X_i.
QuantumPoset nbar_times_v(int n = 5);
// R: equal to S except R(X_∞, X_∞) = C 1.
QuantumPoset sup_order(int n = 5);

// K_i : H -> X with K_i(H, X_i) = C 1 only (i a token of nbar).
BinaryRelation k_map(const QuantumPoset& target, const std::string& i);
// K_1, ..., K_n, K_n into the given target (tail constant).
MonotoneChain k_chain(const QuantumPoset& target, int n = 5);

// F_1(H, H) = C [[1, 1], [1, -1]].
BinaryRelation hadamard();
// F_2 : H -> `{1, -1}, F_2(H, 1) = C [1 0], F_2(H, -1) = C [0 1].
BinaryRelation measurement();
std::vector<std::string> measurement_outcomes();

}  // namespace qdomain::examples
