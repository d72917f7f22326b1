#pragma once

#include "qdomain/poset.hpp"

#include <map>
#include <string>

namespace qdomain {

// `S with `⊑.
QuantumPoset embed(const ClassicalPoset& s);
// The one-dimensional atoms of X with a ⊑ b iff R(a, b) != 0; tokens are atom ids.
ClassicalPoset extract(const QuantumPoset& x);

// b_X : points -> qSet(1, X): a ⊑ b in extract(X) iff b(a) ⊑ b(b) in the hom order.
bool b_is_order_iso(const QuantumPoset& x);
// B_X : X_1 -> `points is an order isomorphism for the relative order on X_1.
bool B_is_order_iso(const QuantumPoset& x);

// η_S(s) = `⌜s⌝ : 1 -> `S.
BinaryRelation eta(const ClassicalPoset& s, const std::string& element);

// F = J_1 o B_X^-1 o `f : `S -> X for a monotone f : S -> points(X).
// Checks F ∘ η_S(s) = b_X(f(s)) for every s and that F is monotone.
BinaryRelation transpose(const ClassicalPoset& s, const QuantumPoset& x, const std::map<std::string, AtomId>& f);

ClassicalPoset product_poset(const ClassicalPoset& s, const ClassicalPoset& t);
// Token of the pair (s, t) in product_poset.
std::string pair_token(const std::string& s, const std::string& t);
// G : `S × `T -> `(S × T), verified to be an order isomorphism.
BinaryRelation strong_monoidal_iso(const ClassicalPoset& s, const ClassicalPoset& t);

// Whether F lands in the one-dimensional part of its target.
bool factors_through_classical_part(const BinaryRelation& f);

}  // namespace qdomain
