#pragma once

#include "qdomain/qset.hpp"
#include "qdomain/subspace.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace qdomain {

// A matrix of operator subspaces R(X, Y) between two quantum sets. Absent
// entries are the zero subspace; nothing distinguishes them from stored zeros.
class BinaryRelation {
public:
    using Key = std::pair<AtomId, AtomId>;  // (source atom, target atom)

    BinaryRelation() = default;
    BinaryRelation(QuantumSet dom, QuantumSet cod);

    const QuantumSet& dom() const { return dom_; }
    const QuantumSet& cod() const { return cod_; }

    OperatorSubspace at(const AtomId& x, const AtomId& y) const;
    void set(const AtomId& x, const AtomId& y, const OperatorSubspace& s);
    // Joins s into the current component.
    void add(const AtomId& x, const AtomId& y, const OperatorSubspace& s);
    bool is_zero_at(const AtomId& x, const AtomId& y) const;
    // Nonzero components only.
    const std::map<Key, OperatorSubspace>& components() const { return comp_; }

private:
    QuantumSet dom_;
    QuantumSet cod_;
    std::map<Key, OperatorSubspace> comp_;
};

BinaryRelation zero_relation(const QuantumSet& dom, const QuantumSet& cod);
BinaryRelation identity(const QuantumSet& x);
// Every component full.
BinaryRelation top_relation(const QuantumSet& dom, const QuantumSet& cod);
// J: W -> X for W a subset of X.
BinaryRelation inclusion(const QuantumSet& w, const QuantumSet& x);

// (S o R)(X, Z) = join over Y of S(Y, Z).R(X, Y).
BinaryRelation compose(const BinaryRelation& s, const BinaryRelation& r);
BinaryRelation dagger(const BinaryRelation& r);
bool leq(const BinaryRelation& r, const BinaryRelation& s);
bool equals(const BinaryRelation& r, const BinaryRelation& s);
BinaryRelation meet(const BinaryRelation& r, const BinaryRelation& s);
BinaryRelation join(const BinaryRelation& r, const BinaryRelation& s);
// (R1 x R2)(X1⊗X2, Y1⊗Y2) = R1(X1, Y1) ⊗ R2(X2, Y2).
BinaryRelation monoidal(const BinaryRelation& r1, const BinaryRelation& r2);

// Classical relations on token sets.
struct BoolRelation {
    std::vector<std::string> dom;
    std::vector<std::string> cod;
    std::set<std::pair<std::string, std::string>> pairs;
};
BinaryRelation classical_of_relation(const BoolRelation& r);
BoolRelation bool_compose(const BoolRelation& s, const BoolRelation& r);

// R restricted along J_W (R o J_W) and corestricted (J_Z^dagger o R).
BinaryRelation restrict(const BinaryRelation& r, const QuantumSet& w);
BinaryRelation corestrict(const BinaryRelation& r, const QuantumSet& z);
// The scalar on 1 that is the top relation if equal is true and zero otherwise.
BinaryRelation scalar_delta(bool equal);
template <class T>
BinaryRelation scalar_delta(const T& a, const T& b) { return scalar_delta(a == b); }

// Relabels atoms through bijections given as maps old id -> new id.
BinaryRelation relabel(const BinaryRelation& r, const std::map<AtomId, AtomId>& dom_map,
                       const std::map<AtomId, AtomId>& cod_map);
// The bijection X -> X' sending each atom to its image with component C.1.
BinaryRelation relabeling(const QuantumSet& x, const std::map<AtomId, AtomId>& mapping);

// Coproduct of relations over the tagged coproducts of their sources and targets.
BinaryRelation coproduct_relation(const std::vector<BinaryRelation>& parts, const std::vector<std::string>& tags);
// Same, for families with disjoint atom ids (no tagging).
BinaryRelation disjoint_union_relation(const std::vector<BinaryRelation>& parts);

// The first atom pair at which r and s differ, as (x, y, dim r, dim s).
struct Difference {
    AtomId x, y;
    int dim_r = 0, dim_s = 0;
};
std::optional<Difference> first_difference(const BinaryRelation& r, const BinaryRelation& s);
std::vector<Difference> all_differences(const BinaryRelation& r, const BinaryRelation& s);
// The first atom pair at which r is not below s.
std::optional<Difference> first_excess(const BinaryRelation& r, const BinaryRelation& s);

std::string describe(const BinaryRelation& r);
void require_same(const QuantumSet& a, const QuantumSet& b, const char* op);

}  // namespace qdomain
