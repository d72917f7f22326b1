#pragma once

#include "qdomain/function.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace qdomain {

struct OrderReport {
    bool reflexive = false;
    bool transitive = false;
    bool antisymmetric = false;
    std::vector<std::string> witnesses;  // first failing atom pair per axiom

    bool ok() const { return reflexive && transitive && antisymmetric; }
};

// I <= R, R o R <= R, R meet R^dagger <= I.
OrderReport order_report(const BinaryRelation& r);

// A quantum set with a verified order. Only constructible from a passing report.
class QuantumPoset {
public:
    QuantumPoset() = default;
    // Throws Verification if r is not an order.
    explicit QuantumPoset(BinaryRelation r);

    const QuantumSet& carrier() const { return order_.dom(); }
    const BinaryRelation& order() const { return order_; }

private:
    BinaryRelation order_;
};

// F ⊑ G iff G o F^dagger <= S.
bool hom_leq(const BinaryRelation& f, const BinaryRelation& g, const QuantumPoset& y);

// All five equivalent forms of F ⊑ G, evaluated separately.
struct HomLeqCheck {
    bool g_fdag_le_s = false;      // G o F^dagger <= S
    bool g_le_sf = false;          // G <= S o F
    bool f_le_sdag_g = false;      // F <= S^dagger o G
    bool sg_le_sf = false;         // S o G <= S o F
    bool sdag_f_le_sdag_g = false; // S^dagger o F <= S^dagger o G

    bool agree() const;
    bool value() const { return g_fdag_le_s; }
};
HomLeqCheck hom_leq_check(const BinaryRelation& f, const BinaryRelation& g, const QuantumPoset& y);

// F o R <= S o F.
bool is_monotone(const BinaryRelation& f, const QuantumPoset& x, const QuantumPoset& y);
// R = F^dagger o S o F.
bool is_order_embedding(const BinaryRelation& f, const QuantumPoset& x, const QuantumPoset& y);
bool is_order_iso(const BinaryRelation& f, const QuantumPoset& x, const QuantumPoset& y);

QuantumPoset poset_product(const QuantumPoset& x, const QuantumPoset& y);

struct PosetCoproduct {
    std::vector<std::string> tags;
    std::vector<QuantumPoset> parts;
    QuantumPoset poset;

    TaggedCoproduct summands() const;
};
PosetCoproduct poset_coproduct(const std::vector<QuantumPoset>& parts, const std::vector<std::string>& tags);

// J^dagger o R o J on a subset W.
QuantumPoset relative_order(const QuantumPoset& y, const QuantumSet& w);
QuantumPoset flat_order(const QuantumSet& x);

// A finite poset on tokens; leq holds the pairs (a, b) with a ⊑ b.
struct ClassicalPoset {
    std::vector<std::string> elements;
    std::set<std::pair<std::string, std::string>> leq;

    bool le(const std::string& a, const std::string& b) const { return leq.count({a, b}) > 0; }
    bool is_partial_order() const;
    // The least upper bound of the given elements, if one exists.
    std::optional<std::string> sup(const std::vector<std::string>& xs) const;
    std::optional<std::string> least() const;
};

// Reflexive-transitive closure of the given pairs.
ClassicalPoset classical_poset(const std::vector<std::string>& elements,
                               const std::vector<std::pair<std::string, std::string>>& pairs);
BoolRelation as_bool_relation(const ClassicalPoset& s);
QuantumPoset classical_of_poset(const ClassicalPoset& s);
// Whether the token map g : S -> T is monotone.
bool is_monotone_map(const ClassicalPoset& s, const ClassicalPoset& t, const std::map<std::string, std::string>& g);

}  // namespace qdomain
