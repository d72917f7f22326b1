#pragma once

#include "qdomain/cpo.hpp"
#include "qdomain/poset.hpp"

#include <string>
#include <vector>

namespace qdomain {

// Nonzero pairwise-orthogonal projections on C^dim summing to the identity.
struct Partition {
    int dim = 0;
    std::vector<Matrix> cells;
};

// Throws InvalidArgument with the failing condition.
void validate_partition(const Partition& p);
bool is_partition(const Partition& p);
// The partition whose cells project onto the given column subspaces.
Partition partition_of_subspaces(int dim, const std::vector<Matrix>& column_bases);
Matrix projection_onto(const Matrix& columns);
// Cells are equal as a set (order ignored).
bool same_partition(const Partition& a, const Partition& b);

// Every cell of p1 lies under some cell of p2.
bool refines(const Partition& p1, const Partition& p2);
// Least upper bound: cells are the joins over connected components of the
// graph in which two cells are adjacent when their product is nonzero.
Partition sup_partitions(const std::vector<Partition>& family);

// Tokens naming the cells of p in order: "p1", "p2", ...
std::vector<std::string> cell_tokens(const Partition& p);
// M_P : H -> `P with M_P(H, p) = L(H, C).p.
BinaryRelation m_p(const Partition& p, const AtomId& atom = "H");

struct Labeling {
    Partition partition;
    ClassicalPoset poset;
    std::vector<std::string> label;  // one token of poset per cell
};
void validate_labeling(const Labeling& l);
// `f o M_P : H -> `S.
BinaryRelation labeling_function(const Labeling& l, const AtomId& atom = "H");
// F = `f o M_P with p_s the projection onto the row support of F(H, s).
Labeling factor_via_partition(const BinaryRelation& f, const ClassicalPoset& s);
// f1(p1) ⊑ f2(p2) whenever p1 p2 != 0.
bool leq_via_cells(const Labeling& a, const Labeling& b);

struct ClassicalChainLimit {
    Labeling limit;          // (P_inf, f_inf)
    BinaryRelation function; // F_inf
    bool well_defined = true;  // every admissible walk gave the same label
};
// The chain must be monotone and is read as tail constant.
ClassicalChainLimit chain_limit_classical(const std::vector<Labeling>& chain, const AtomId& atom = "H");

// The monotone chain of functions `f_i o M_{P_i} into `S.
MonotoneChain labeling_chain(const std::vector<Labeling>& chain, const AtomId& atom = "H");

}  // namespace qdomain
