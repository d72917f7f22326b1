#pragma once

#include "qdomain/cpo.hpp"
#include "qdomain/poset.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qdomain {

// X ⊎ {⊥k}, k one above every bottom index already in X. The bottom of a
// lifted carrier is therefore its ⊥k with the largest k.
struct LiftedSet {
    QuantumSet set;
    AtomId bottom;
};
LiftedSet lift_set(const QuantumSet& x);
// Bottom of a carrier produced by lift_set; throws if it has none.
AtomId bottom_of(const QuantumSet& lifted);
// The carrier with its newest bottom removed.
QuantumSet unlift(const QuantumSet& lifted);

struct LiftedPoset {
    QuantumPoset base;
    QuantumPoset lifted;
    AtomId bottom;
};
// R_⊥: R on X, the full row L(⊥, X) from ⊥, zero into ⊥ otherwise.
LiftedPoset lift_poset(const QuantumPoset& x);

// F_⊥ = F ⊎ I_1 : X_⊥ -> Y_⊥.
BinaryRelation lift_morphism(const BinaryRelation& f);
// H_X = J_X : X -> X_⊥.
BinaryRelation unit(const QuantumSet& x);
// M_X : X_⊥⊥ -> X_⊥; the outer bottom goes to the inner one.
BinaryRelation mult(const QuantumSet& x);
// K : X_⊥ × Y_⊥ -> (X × Y)_⊥.
BinaryRelation double_strength(const QuantumSet& x, const QuantumSet& y);

// Kleisli maps are plain functions X -> Y_⊥.
// g ∙ f = M_Z o G_⊥ o f for f : X -> Y_⊥, g : Y -> Z_⊥.
BinaryRelation kleisli_compose(const BinaryRelation& g, const BinaryRelation& f);
// F ⊙ G = K o (F × G) for F : X -> X'_⊥, G : Y -> Y'_⊥.
BinaryRelation kleisli_tensor(const BinaryRelation& f, const BinaryRelation& g);

struct PointednessReport {
    bool is_pointed = false;
    std::optional<AtomId> bottom;
    BinaryRelation b;                   // B_X : 1 -> X
    std::optional<QuantumPoset> base;   // X without its bottom, relative order
};
PointednessReport pointedness_report(const QuantumPoset& x);
// B_{Y,X} = B_X o !_Y, the least element of qSet(Y, X) for pointed X.
BinaryRelation bottom_map(const PointednessReport& x, const QuantumSet& y);

// F(⊥, Y) = δ_{Y,⊥} L(⊥, Y); cross-checked against F o B_X = B_Y.
bool is_strict(const BinaryRelation& f, const QuantumPoset& x, const QuantumPoset& y);

struct EpZeroReport {
    BinaryRelation e;       // E : ∅ -> X_⊥
    BinaryRelation bang;    // ! : X -> ∅_⊥
    BinaryRelation e_after_bang;  // E ∙ !
    bool bang_after_e_is_identity = false;
    bool e_after_bang_is_bottom = false;  // equals B_{X, X_⊥}
    bool below_unit = false;              // E ∙ ! ⊑ H_X
    bool ok() const { return bang_after_e_is_identity && e_after_bang_is_bottom && below_unit; }
};
EpZeroReport ep_zero(const QuantumPoset& x);

// F1 ⊙ G1 ⊑ F2 ⊙ G2 implies F1 ⊑ F2 and G1 ⊑ G2, for points
// F_i : 1 -> X_⊥, G_i : 1 -> Y_⊥ with F1, G1 not bottom.
bool check_order_reflection(const BinaryRelation& f1, const BinaryRelation& f2, const BinaryRelation& g1,
                            const BinaryRelation& g2, const QuantumPoset& x, const QuantumPoset& y);

// Limit of E_n : H -> X_⊥ by splitting H into the part sent to ⊥ and the rest.
BinaryRelation limit_in_lift(const MonotoneChain& c, const QuantumPoset& x);

}  // namespace qdomain
