#include "qdomain/qset.hpp"

#include "qdomain/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qdomain {

namespace ids {

namespace {
const std::string kOpen = "⟨";
const std::string kClose = "⟩";
const std::string kTensor = "⊗";
const std::string kBottom = "⊥";

bool starts_with(const std::string& s, std::size_t pos, const std::string& p) { return s.compare(pos, p.size(), p) == 0; }

// Strips the outer ⟨ ⟩ pair if it encloses the whole id.
std::optional<std::string> inner(const AtomId& id) {
    if (id.size() < kOpen.size() + kClose.size()) return std::nullopt;
    if (!starts_with(id, 0, kOpen) || id.compare(id.size() - kClose.size(), kClose.size(), kClose) != 0)
        return std::nullopt;
    const std::string body = id.substr(kOpen.size(), id.size() - kOpen.size() - kClose.size());
    int depth = 0;
    for (std::size_t i = 0; i < body.size();) {
        if (starts_with(body, i, kOpen)) { ++depth; i += kOpen.size(); }
        else if (starts_with(body, i, kClose)) {
            if (--depth < 0) return std::nullopt;
            i += kClose.size();
        } else ++i;
    }
    if (depth != 0) return std::nullopt;
    return body;
}

// Finds sep at bracket depth zero.
std::optional<std::size_t> find_top(const std::string& body, const std::string& sep) {
    int depth = 0;
    for (std::size_t i = 0; i < body.size();) {
        if (starts_with(body, i, kOpen)) { ++depth; i += kOpen.size(); }
        else if (starts_with(body, i, kClose)) { --depth; i += kClose.size(); }
        else if (depth == 0 && starts_with(body, i, sep)) return i;
        else ++i;
    }
    return std::nullopt;
}
}  // namespace

const AtomId unit = "ℂ";

AtomId tensor(const AtomId& l, const AtomId& r) { return kOpen + l + kTensor + r + kClose; }
AtomId tagged(const std::string& tag, const AtomId& l) { return kOpen + tag + "|" + l + kClose; }
AtomId dual(const AtomId& l) { return kOpen + l + "*" + kClose; }
AtomId bottom(int k) { return kBottom + std::to_string(k); }

std::optional<int> bottom_index(const AtomId& id) {
    if (!starts_with(id, 0, kBottom) || id.size() == kBottom.size()) return std::nullopt;
    int k = 0;
    for (std::size_t i = kBottom.size(); i < id.size(); ++i) {
        if (id[i] < '0' || id[i] > '9' || k > 100000) return std::nullopt;
        k = 10 * k + (id[i] - '0');
    }
    return k;
}

std::optional<std::pair<AtomId, AtomId>> split_tensor(const AtomId& id) {
    auto body = inner(id);
    if (!body) return std::nullopt;
    auto pos = find_top(*body, kTensor);
    if (!pos) return std::nullopt;
    return std::make_pair(body->substr(0, *pos), body->substr(*pos + kTensor.size()));
}

std::optional<std::pair<std::string, AtomId>> split_tagged(const AtomId& id) {
    auto body = inner(id);
    if (!body) return std::nullopt;
    if (find_top(*body, kTensor)) return std::nullopt;
    auto pos = find_top(*body, "|");
    if (!pos) return std::nullopt;
    return std::make_pair(body->substr(0, *pos), body->substr(*pos + 1));
}

std::optional<AtomId> split_dual(const AtomId& id) {
    auto body = inner(id);
    if (!body || body->empty() || body->back() != '*') return std::nullopt;
    if (find_top(*body, kTensor) || find_top(*body, "|")) return std::nullopt;
    return body->substr(0, body->size() - 1);
}

}  // namespace ids

QuantumSet::QuantumSet(Map atoms) {
    for (const auto& [id, d] : atoms) add(id, d);
}

void QuantumSet::add(const AtomId& id, int dim) {
    if (dim < 1) throw Error(ErrorKind::InvalidArgument, "atom '" + id + "' must have dimension >= 1");
    if (!atoms_.emplace(id, dim).second) throw Error(ErrorKind::InvalidArgument, "duplicate atom id '" + id + "'");
}

int QuantumSet::dim(const AtomId& id) const {
    auto it = atoms_.find(id);
    if (it == atoms_.end()) throw Error(ErrorKind::InvalidArgument, "unknown atom '" + id + "'");
    return it->second;
}

std::vector<AtomId> QuantumSet::ids() const {
    std::vector<AtomId> out;
    out.reserve(atoms_.size());
    for (const auto& kv : atoms_) out.push_back(kv.first);
    return out;
}

QuantumSet atomic(int d, const AtomId& id) {
    if (d < 1) throw Error(ErrorKind::InvalidArgument, "atomic: dimension must be >= 1");
    QuantumSet s;
    s.add(id, d);
    return s;
}

QuantumSet classical_of_set(const std::vector<std::string>& tokens) {
    QuantumSet s;
    for (const auto& t : tokens) s.add(t, 1);
    return s;
}

QuantumSet unit_set() { return atomic(1, ids::unit); }

QuantumSet product(const QuantumSet& x, const QuantumSet& y) {
    QuantumSet s;
    for (const auto& [a, da] : x)
        for (const auto& [b, db] : y) s.add(ids::tensor(a, b), da * db);
    return s;
}

QuantumSet coproduct(const std::vector<QuantumSet>& family, const std::vector<std::string>& tags) {
    if (family.size() != tags.size()) throw Error(ErrorKind::InvalidArgument, "coproduct: one tag per summand");
    std::set<std::string> seen;
    QuantumSet s;
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (!seen.insert(tags[i]).second) throw Error(ErrorKind::InvalidArgument, "coproduct: duplicate tag '" + tags[i] + "'");
        for (const auto& [a, d] : family[i]) s.add(ids::tagged(tags[i], a), d);
    }
    return s;
}

QuantumSet disjoint_union(const std::vector<QuantumSet>& family) {
    QuantumSet s;
    for (const auto& f : family)
        for (const auto& [a, d] : f) s.add(a, d);
    return s;
}

QuantumSet one_dim_part(const QuantumSet& x) {
    QuantumSet s;
    for (const auto& [a, d] : x)
        if (d == 1) s.add(a, 1);
    return s;
}

QuantumSet dual(const QuantumSet& x) {
    QuantumSet s;
    for (const auto& [a, d] : x) s.add(ids::dual(a), d);
    return s;
}

bool is_subset(const QuantumSet& x, const QuantumSet& y) {
    for (const auto& [a, d] : x) {
        auto it = y.atoms().find(a);
        if (it == y.atoms().end() || it->second != d) return false;
    }
    return true;
}

QuantumSet remove_atom(const QuantumSet& x, const AtomId& id) {
    QuantumSet s;
    for (const auto& [a, d] : x)
        if (a != id) s.add(a, d);
    return s;
}

AtomId fresh_bottom(const QuantumSet& x) {
    int top = 0;
    for (const auto& [a, d] : x)
        if (auto k = ids::bottom_index(a)) top = std::max(top, *k);
    return ids::bottom(top + 1);
}

std::optional<AtomId> newest_bottom(const QuantumSet& x) {
    std::optional<AtomId> out;
    int top = 0;
    for (const auto& [a, d] : x)
        if (auto k = ids::bottom_index(a); k && *k > top) {
            top = *k;
            out = a;
        }
    return out;
}

std::string describe(const QuantumSet& x) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [a, d] : x) {
        os << (first ? "" : ", ") << a << ":" << d;
        first = false;
    }
    os << "}";
    return os.str();
}

}  // namespace qdomain
