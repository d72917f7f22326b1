#pragma once

#include "qdomain/poset.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace qdomain {

// K_1 ⊑ K_2 ⊑ ... : source -> target. With tail_constant the sequence is
// understood to repeat its last entry forever.
struct MonotoneChain {
    QuantumSet source;
    QuantumPoset target;
    std::vector<BinaryRelation> entries;
    bool tail_constant = false;
};

// Functions with the right shapes, consecutive ⊑, equal last two entries
// when tail_constant. Throws NotAFunction, NotMonotone or InvalidArgument.
void validate_chain(const MonotoneChain& c);

struct MeetResult {
    BinaryRelation meet;  // meet over n of R o K_n
    std::size_t index = 0;  // 1-based; the meet is constant from here on
};
MeetResult descending_meet(const MonotoneChain& c);

struct LimitCheck {
    bool is_limit = false;
    BinaryRelation image;   // R o K
    BinaryRelation meet;
    // (x, y, dim R o K, dim meet). Prefers a pair where R o K is nonzero,
    // since a support mismatch alone is less telling than a smaller component.
    std::optional<Difference> witness;
    std::vector<Difference> differences;
};
LimitCheck check_limit(const MonotoneChain& c, const BinaryRelation& k);
bool is_limit(const MonotoneChain& c, const BinaryRelation& k);

struct LimitResult {
    BinaryRelation limit;
    std::size_t index = 0;
};
// The entry at the stabilization index, verified. Needs tail_constant.
LimitResult compute_limit(const MonotoneChain& c);
// Splits along the atoms of the source, takes per-atom limits, reassembles.
BinaryRelation extend_limit_to_general_source(const MonotoneChain& c);

// The chain F o K_n into F's target.
MonotoneChain push_forward(const BinaryRelation& f, const QuantumPoset& y, const MonotoneChain& c);

struct ScottReport {
    bool passed = true;
    std::size_t chains = 0;
    std::vector<std::string> failures;
};
// F o K_n ↗ F o K_inf for each chain; F must be monotone.
ScottReport verify_scott_continuous(const BinaryRelation& f, const QuantumPoset& x, const QuantumPoset& y,
                                    const std::vector<MonotoneChain>& chains);

// Chains into X x Y. Returns (F_inf x G_inf) o (F_l^dagger x G_l^dagger) o E_l.
struct ProductLimit {
    BinaryRelation limit;
    BinaryRelation first, second;  // F_inf, G_inf
    std::size_t index = 0;         // l
};
ProductLimit limit_in_product(const MonotoneChain& c, const QuantumPoset& x, const QuantumPoset& y);

// Chains from an atomic source into a coproduct of posets.
BinaryRelation limit_in_coproduct(const MonotoneChain& c, const PosetCoproduct& y);

enum class Variable { First, Second };
// D o (K_n x I) ↗ D o (K_inf x I) (or the mirror) for each chain into the chosen factor.
ScottReport scott_in_variable(const BinaryRelation& d, Variable which, const QuantumPoset& x, const QuantumPoset& y,
                              const QuantumPoset& z, const std::vector<MonotoneChain>& chains);

// For W a subset of Y: the relative order is an order and limits of chains
// in W, taken in Y, stay in W and are limits there.
bool sub_cpo_check_finite(const QuantumSet& w, const QuantumPoset& y, const std::vector<MonotoneChain>& chains);

}  // namespace qdomain
