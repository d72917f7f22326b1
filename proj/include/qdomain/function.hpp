#pragma once

#include "qdomain/error.hpp"
#include "qdomain/relation.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qdomain {

struct FunctionReport {
    bool is_function = false;
    bool is_injective = false;
    bool is_surjective = false;
    bool is_bijective = false;
    QuantumSet range;
    std::vector<std::string> violations;
};

// F is a function when F^dagger.F >= I and F.F^dagger <= I.
FunctionReport function_report(const BinaryRelation& f);
bool is_function(const BinaryRelation& f);
// Atoms Y with F(X, Y) nonzero for some X.
QuantumSet range(const BinaryRelation& f);
void require_function(const BinaryRelation& f, const char* op);

struct RangeFactorization {
    BinaryRelation inclusion;   // J_F : ran F -> cod
    BinaryRelation surjection;  // F-bar : dom -> ran F
};
RangeFactorization factor_through_range(const BinaryRelation& f);
// The unique G with F = J_W o G; requires ran F within W.
BinaryRelation corestrict_function(const BinaryRelation& f, const QuantumSet& w);

// The function `f between classical quantum sets given by a token map.
BinaryRelation classical_function(const std::vector<std::string>& dom, const std::vector<std::string>& cod,
                                  const std::map<std::string, std::string>& f);

// A coproduct presented with its summands, atom ids tagged as ⟨tag|id⟩.
struct TaggedCoproduct {
    std::vector<std::string> tags;
    std::vector<QuantumSet> parts;

    QuantumSet total() const;
    AtomId id(std::size_t i, const AtomId& inner) const;
    // (summand index, inner id) of a total atom id.
    std::optional<std::pair<std::size_t, AtomId>> locate(const AtomId& id) const;
    BinaryRelation injection(std::size_t i) const;
};

// D : H -> coproduct of atomic sets X_a, D(H, X_a) = C.V_a^dagger where the
// columns of V_a are an orthonormal basis of the part X_a of H.
struct Decomposition {
    QuantumSet source;
    AtomId atom;
    std::vector<std::string> tags;   // nonzero parts only
    std::vector<Matrix> bases;       // V_a, dim H x dim X_a
    QuantumSet target;               // atoms ⟨tag|atom⟩
    BinaryRelation relation;

    OperatorSubspace part(std::size_t i) const;
};

struct CoproductDecomposition {
    Decomposition decomposition;
    std::vector<std::size_t> summand;     // summand index per part
    std::vector<BinaryRelation> parts;   // F_a : X_a -> Y_a
};

// Splits F : H -> coproduct by the row supports of its blocks. When fixed is
// given, it supplies the basis V_a for each tag (used to keep a common basis
// along a chain). Verifies (⊎ F_a) o D = F.
CoproductDecomposition decompose_over_coproduct(const BinaryRelation& f, const TaggedCoproduct& cod,
                                                const std::map<std::string, Matrix>* fixed = nullptr);
// (⊎ F_a) o D with the parts' targets placed in their summands.
BinaryRelation reassemble(const Decomposition& d, const std::vector<std::size_t>& summand,
                          const std::vector<BinaryRelation>& parts, const TaggedCoproduct& cod);
bool is_decomposition(const Decomposition& d);

// P(⟨X⊗Y⟩, X) = C1_X ⊗ L(Y, C) and Q(⟨X⊗Y⟩, Y) = L(X, C) ⊗ C1_Y.
BinaryRelation projection_P(const QuantumSet& x, const QuantumSet& y);
BinaryRelation projection_Q(const QuantumSet& x, const QuantumSet& y);

enum class PairingFailure { CandidateNotFunction, ProjectionsDisagree };

class PairingError : public Error {
public:
    PairingError(PairingFailure reason, const std::string& what) : Error(ErrorKind::Pairing, what), reason_(reason) {}
    PairingFailure reason() const { return reason_; }

private:
    PairingFailure reason_;
};

// The candidate meet(P^dagger o F, Q^dagger o G), returned only when it is a
// function projecting onto F and G.
BinaryRelation pair(const BinaryRelation& f, const BinaryRelation& g);

BinaryRelation terminal_map(const QuantumSet& x);
// b(X) : 1 -> X for a one-dimensional atom X.
BinaryRelation point(const QuantumSet& x, const AtomId& atom);

struct Points {
    std::vector<AtomId> atoms;  // one-dimensional atoms, in id order
    QuantumSet one_dim;         // X_1
    QuantumSet classical;       // `points, tokens are the atom ids
    BinaryRelation b_relation;  // B : X_1 -> `points
};
Points points(const QuantumSet& x);

}  // namespace qdomain
