#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qdomain {

using AtomId = std::string;

// Structured atom ids. Composite atoms carry their construction in the id so
// associativity and symmetry isomorphisms are real relabelings.
namespace ids {
AtomId tensor(const AtomId& l, const AtomId& r);   // ⟨l⊗r⟩
AtomId tagged(const std::string& tag, const AtomId& l);  // ⟨tag|l⟩
AtomId dual(const AtomId& l);                      // ⟨l*⟩
AtomId bottom(int k);                              // ⊥k
// k for an id of the form ⊥k.
std::optional<int> bottom_index(const AtomId& id);
extern const AtomId unit;                          // the atom of 1

std::optional<std::pair<AtomId, AtomId>> split_tensor(const AtomId& id);
std::optional<std::pair<std::string, AtomId>> split_tagged(const AtomId& id);
std::optional<AtomId> split_dual(const AtomId& id);
}  // namespace ids

// A finite family of nonzero finite-dimensional Hilbert spaces keyed by id.
class QuantumSet {
public:
    using Map = std::map<AtomId, int>;

    QuantumSet() = default;
    explicit QuantumSet(Map atoms);

    void add(const AtomId& id, int dim);
    bool has(const AtomId& id) const { return atoms_.count(id) != 0; }
    int dim(const AtomId& id) const;
    std::size_t size() const { return atoms_.size(); }
    bool empty() const { return atoms_.empty(); }
    std::vector<AtomId> ids() const;
    const Map& atoms() const { return atoms_; }
    Map::const_iterator begin() const { return atoms_.begin(); }
    Map::const_iterator end() const { return atoms_.end(); }

    bool operator==(const QuantumSet& o) const { return atoms_ == o.atoms_; }
    bool operator!=(const QuantumSet& o) const { return !(*this == o); }

private:
    Map atoms_;
};

QuantumSet atomic(int d, const AtomId& id = "H");
QuantumSet classical_of_set(const std::vector<std::string>& tokens);
QuantumSet unit_set();
QuantumSet product(const QuantumSet& x, const QuantumSet& y);
// Tagged disjoint union; tags must be distinct.
QuantumSet coproduct(const std::vector<QuantumSet>& family, const std::vector<std::string>& tags);
// Plain union of families the caller asserts are disjoint.
QuantumSet disjoint_union(const std::vector<QuantumSet>& family);
QuantumSet one_dim_part(const QuantumSet& x);
QuantumSet dual(const QuantumSet& x);
bool is_subset(const QuantumSet& x, const QuantumSet& y);
QuantumSet remove_atom(const QuantumSet& x, const AtomId& id);
// Smallest k with ⊥k not an atom of x.
// ⊥(k+1) for the largest k with ⊥k in x, so the newest bottom has the largest index.
AtomId fresh_bottom(const QuantumSet& x);
// The ⊥k of x with the largest k.
std::optional<AtomId> newest_bottom(const QuantumSet& x);

std::string describe(const QuantumSet& x);

}  // namespace qdomain
