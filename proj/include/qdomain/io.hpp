#pragma once

#include "qdomain/cpo.hpp"
#include "qdomain/partition.hpp"
#include "qdomain/poset.hpp"

#include <json.hpp>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qdomain::io {

using Json = nlohmann::ordered_json;

// How a poset was declared. Structured kinds keep their parts so that
// product and coproduct limits can be computed from a loaded file.
enum class PosetKind { Order, Flat, Classical, Product, Coproduct, Lift };

struct PosetEntry {
    PosetKind kind = PosetKind::Order;
    QuantumPoset poset;
    std::vector<std::shared_ptr<PosetEntry>> parts;  // product: 2; coproduct: n; lift: 1
    std::vector<std::string> tags;                   // coproduct only
    std::optional<ClassicalPoset> classical;         // classical only

    PosetCoproduct as_coproduct() const;  // throws Input unless kind is Coproduct
};

struct ChainEntry {
    MonotoneChain chain;
    std::optional<BinaryRelation> candidate;  // a proposed limit to test
    std::shared_ptr<PosetEntry> target;
};

struct Document {
    std::string version = "1";
    Json metadata = Json::object();
    std::map<std::string, QuantumSet> qsets;
    std::map<std::string, ClassicalPoset> classical_posets;
    std::map<std::string, BinaryRelation> relations;
    std::map<std::string, std::shared_ptr<PosetEntry>> posets;
    std::map<std::string, Partition> partitions;
    std::map<std::string, ChainEntry> chains;
    std::map<std::string, Labeling> labelings;
    std::map<std::string, std::vector<Labeling>> labeling_chains;
    Json checks = Json::array();  // corpus checks, kept verbatim
};

// Throws Error(Input) with line and column for syntax errors and with the
// object path for semantic ones.
Document parse(const std::string& text);
Document load(const std::string& path);
Json to_json(const Document& d);
void save(const Document& d, const std::string& path);

Json to_json(const Matrix& m);
Json to_json(const QuantumSet& x);
Json to_json(const BinaryRelation& r);
Json to_json(const ClassicalPoset& s);
Json to_json(const Partition& p);
Json to_json(const PosetEntry& p);
Json to_json(const Labeling& l);

Matrix matrix_from_json(const Json& j, const std::string& where);
QuantumSet qset_from_json(const Json& j, const std::string& where);
BinaryRelation relation_from_json(const Json& j, const std::string& where, const QuantumSet* dom = nullptr,
                                  const QuantumSet* cod = nullptr);
ClassicalPoset classical_poset_from_json(const Json& j, const std::string& where);

}  // namespace qdomain::io
