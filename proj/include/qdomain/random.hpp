#pragma once

#include "qdomain/cpo.hpp"
#include "qdomain/partition.hpp"
#include "qdomain/poset.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace qdomain::rnd {

using Rng = std::mt19937_64;

int uniform_int(Rng& rng, int lo, int hi);  // inclusive
bool coin(Rng& rng, double p = 0.5);

Matrix random_matrix(Rng& rng, int rows, int cols);
Matrix random_unitary(Rng& rng, int n);
// k-dimensional (clamped to the ambient dimension), spanned by random matrices.
OperatorSubspace random_subspace(Rng& rng, int dom_dim, int cod_dim, int k);

QuantumSet random_qset(Rng& rng, int min_atoms, int max_atoms, int max_dim, const std::string& prefix = "x");
// Each component nonzero with probability density, of dimension 1..max_comp_dim.
BinaryRelation random_relation(Rng& rng, const QuantumSet& x, const QuantumSet& y, double density = 0.5,
                               int max_comp_dim = 2);

// A function given by blocks: for each source atom H of dim d, a list of
// (target atom, rows) with rows a dim(target) x d matrix; stacking all rows
// of H gives a d x d unitary. F(H, Y) is the span of the blocks sent to Y.
struct Block {
    AtomId target;
    Matrix rows;
};
struct BlockFunction {
    QuantumSet dom, cod;
    std::map<AtomId, std::vector<Block>> blocks;

    BinaryRelation relation() const;
};
// Empty when some source dimension is not a sum of target dimensions.
std::optional<BlockFunction> random_block_function(Rng& rng, const QuantumSet& x, const QuantumSet& y);
std::optional<BinaryRelation> random_function(Rng& rng, const QuantumSet& x, const QuantumSet& y);

// Small random quantum posets: flat, classical, conjugated triangular orders
// on one atom, and products, coproducts and lifts of these. Larger depth
// allows more nesting.
QuantumPoset random_poset(Rng& rng, int depth = 1, const std::string& prefix = "x");
// Posets built only from one-dimensional atoms and small quantum churn,
// guaranteeing at least one one-dimensional atom.
QuantumPoset random_poset_with_points(Rng& rng, const std::string& prefix = "x");
ClassicalPoset random_classical_poset(Rng& rng, int min_n, int max_n, const std::string& prefix = "s");

// A monotone chain of the given length (plus a repeated last entry, so it is
// tail constant) from the source into the target; empty if no function exists.
std::optional<MonotoneChain> random_chain(Rng& rng, const QuantumSet& source, const QuantumPoset& target, int steps);
// A random monotone map by rejection sampling (plus constant maps as fallback).
std::optional<BinaryRelation> random_monotone(Rng& rng, const QuantumPoset& x, const QuantumPoset& y, int tries = 40);

Partition random_partition(Rng& rng, int dim, int cells);
Labeling random_labeling(Rng& rng, const ClassicalPoset& s, int dim);
// Monotone chain of labelings with the given number of entries.
std::vector<Labeling> random_labeling_chain(Rng& rng, const ClassicalPoset& s, int dim, int steps);

}  // namespace qdomain::rnd
