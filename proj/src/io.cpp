#include "qdomain/io.hpp"

#include "qdomain/lift.hpp"

#include <fstream>
#include <sstream>

namespace qdomain::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& msg) {
    throw Error(ErrorKind::Input, where + ": " + msg);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) fail(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing field \"") + key + "\"");
    return *it;
}

std::string str(const Json& j, const std::string& where) {
    if (!j.is_string()) fail(where, "expected a string");
    return j.get<std::string>();
}

std::vector<std::string> strings(const Json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(str(j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

cdouble entry(const Json& j, const std::string& where) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    fail(where, "matrix entry must be a number or [re, im]");
}

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

const char* kind_name(PosetKind k) {
    switch (k) {
        case PosetKind::Order: return "order";
        case PosetKind::Flat: return "flat";
        case PosetKind::Classical: return "classical";
        case PosetKind::Product: return "product";
        case PosetKind::Coproduct: return "coproduct";
        case PosetKind::Lift: return "lift";
    }
    return "order";
}

// Resolves string references against the tables already read.
struct Parser {
    Document& doc;

    QuantumSet qset(const Json& j, const std::string& where) {
        if (j.is_string()) {
            auto it = doc.qsets.find(j.get<std::string>());
            if (it == doc.qsets.end()) fail(where, "unknown qset \"" + j.get<std::string>() + "\"");
            return it->second;
        }
        return qset_from_json(j, where);
    }

    ClassicalPoset cposet(const Json& j, const std::string& where) {
        if (j.is_string()) {
            auto it = doc.classical_posets.find(j.get<std::string>());
            if (it == doc.classical_posets.end())
                fail(where, "unknown classical poset \"" + j.get<std::string>() + "\"");
            return it->second;
        }
        return classical_poset_from_json(j, where);
    }

    BinaryRelation relation(const Json& j, const std::string& where, const QuantumSet* dom = nullptr,
                            const QuantumSet* cod = nullptr) {
        if (j.is_string()) {
            auto it = doc.relations.find(j.get<std::string>());
            if (it == doc.relations.end()) fail(where, "unknown relation \"" + j.get<std::string>() + "\"");
            if ((dom && it->second.dom() != *dom) || (cod && it->second.cod() != *cod))
                fail(where, "relation \"" + j.get<std::string>() + "\" has the wrong source or target");
            return it->second;
        }
        if (!j.is_object()) fail(where, "expected a relation");
        std::optional<QuantumSet> d, c;
        if (j.contains("identity")) {
            const QuantumSet x = qset(j["identity"], where + ".identity");
            return identity(x);
        }
        if (j.contains("dom")) d = qset(j["dom"], where + ".dom");
        else if (dom) d = *dom;
        else fail(where, "missing field \"dom\"");
        if (j.contains("cod")) c = qset(j["cod"], where + ".cod");
        else if (cod) c = *cod;
        else fail(where, "missing field \"cod\"");
        if (dom && *d != *dom) fail(where, "source does not match the enclosing object");
        if (cod && *c != *cod) fail(where, "target does not match the enclosing object");
        Json inner = j;
        inner["dom"] = to_json(*d);
        inner["cod"] = to_json(*c);
        return relation_from_json(inner, where);
    }

    std::shared_ptr<PosetEntry> poset(const Json& j, const std::string& where) {
        if (j.is_string()) {
            auto it = doc.posets.find(j.get<std::string>());
            if (it == doc.posets.end()) fail(where, "unknown poset \"" + j.get<std::string>() + "\"");
            return it->second;
        }
        if (!j.is_object()) fail(where, "expected a poset");
        auto e = std::make_shared<PosetEntry>();
        try {
            if (j.contains("order")) {
                e->kind = PosetKind::Order;
                const BinaryRelation r = relation(j["order"], where + ".order");
                if (r.dom() != r.cod()) fail(where, "order must be a relation from a set to itself");
                e->poset = QuantumPoset(r);
            } else if (j.contains("flat")) {
                e->kind = PosetKind::Flat;
                e->poset = flat_order(qset(j["flat"], where + ".flat"));
            } else if (j.contains("classical")) {
                e->kind = PosetKind::Classical;
                e->classical = cposet(j["classical"], where + ".classical");
                e->poset = classical_of_poset(*e->classical);
            } else if (j.contains("product")) {
                e->kind = PosetKind::Product;
                const Json& ps = j["product"];
                if (!ps.is_array() || ps.size() != 2) fail(where, "product takes two posets");
                e->parts = {poset(ps[0], where + ".product[0]"), poset(ps[1], where + ".product[1]")};
                e->poset = poset_product(e->parts[0]->poset, e->parts[1]->poset);
            } else if (j.contains("coproduct")) {
                e->kind = PosetKind::Coproduct;
                const Json& ps = j["coproduct"];
                if (!ps.is_array() || ps.empty()) fail(where, "coproduct takes a nonempty array of posets");
                for (std::size_t i = 0; i < ps.size(); ++i)
                    e->parts.push_back(poset(ps[i], where + ".coproduct[" + std::to_string(i) + "]"));
                if (j.contains("tags")) {
                    e->tags = strings(j["tags"], where + ".tags");
                } else {
                    for (std::size_t i = 0; i < ps.size(); ++i) e->tags.push_back(std::to_string(i + 1));
                }
                if (e->tags.size() != e->parts.size()) fail(where, "one tag per summand");
                e->poset = e->as_coproduct().poset;
            } else if (j.contains("lift")) {
                e->kind = PosetKind::Lift;
                e->parts = {poset(j["lift"], where + ".lift")};
                e->poset = lift_poset(e->parts[0]->poset).lifted;
            } else {
                fail(where, "poset needs one of order, flat, classical, product, coproduct, lift");
            }
        } catch (const Error& err) {
            if (err.kind() == ErrorKind::Input) throw;
            fail(where, err.what());
        }
        return e;
    }

    Partition partition(const Json& j, const std::string& where) {
        if (j.is_string()) {
            auto it = doc.partitions.find(j.get<std::string>());
            if (it == doc.partitions.end()) fail(where, "unknown partition \"" + j.get<std::string>() + "\"");
            return it->second;
        }
        Partition p;
        const Json& cells = field(j, "cells", where);
        if (!cells.is_array()) fail(where + ".cells", "expected an array of matrices");
        for (std::size_t i = 0; i < cells.size(); ++i)
            p.cells.push_back(matrix_from_json(cells[i], where + ".cells[" + std::to_string(i) + "]"));
        if (j.contains("dim")) p.dim = j["dim"].get<int>();
        else if (!p.cells.empty()) p.dim = static_cast<int>(p.cells[0].rows());
        for (const auto& c : p.cells)
            if (c.rows() != p.dim || c.cols() != p.dim) fail(where, "cells must be dim x dim");
        try {
            validate_partition(p);
        } catch (const Error& err) {
            fail(where, err.what());
        }
        return p;
    }

    Labeling labeling(const Json& j, const std::string& where) {
        if (j.is_string()) {
            auto it = doc.labelings.find(j.get<std::string>());
            if (it == doc.labelings.end()) fail(where, "unknown labeling \"" + j.get<std::string>() + "\"");
            return it->second;
        }
        Labeling l{partition(field(j, "partition", where), where + ".partition"),
                   cposet(field(j, "poset", where), where + ".poset"),
                   strings(field(j, "label", where), where + ".label")};
        try {
            validate_labeling(l);
        } catch (const Error& err) {
            fail(where, err.what());
        }
        return l;
    }

    ChainEntry chain(const Json& j, const std::string& where) {
        ChainEntry c;
        c.chain.source = qset(field(j, "source", where), where + ".source");
        c.target = poset(field(j, "target", where), where + ".target");
        c.chain.target = c.target->poset;
        c.chain.tail_constant = j.value("tail_constant", false);
        const Json& es = field(j, "entries", where);
        if (!es.is_array() || es.empty()) fail(where + ".entries", "expected a nonempty array of relations");
        const QuantumSet& cod = c.chain.target.carrier();
        for (std::size_t i = 0; i < es.size(); ++i)
            c.chain.entries.push_back(relation(es[i], where + ".entries[" + std::to_string(i) + "]", &c.chain.source, &cod));
        if (j.contains("candidate")) c.candidate = relation(j["candidate"], where + ".candidate", &c.chain.source, &cod);
        try {
            validate_chain(c.chain);
        } catch (const Error& err) {
            fail(where, err.what());
        }
        return c;
    }
};

template <class F>
void each(const Json& root, const char* table, F&& f) {
    auto it = root.find(table);
    if (it == root.end()) return;
    if (!it->is_object()) fail(table, "expected an object of named entries");
    for (auto e = it->begin(); e != it->end(); ++e) f(e.key(), e.value(), std::string(table) + "." + e.key());
}

}  // namespace

PosetCoproduct PosetEntry::as_coproduct() const {
    if (kind != PosetKind::Coproduct) throw Error(ErrorKind::Input, "poset is not declared as a coproduct");
    std::vector<QuantumPoset> ps;
    for (const auto& p : parts) ps.push_back(p->poset);
    return poset_coproduct(ps, tags);
}

Matrix matrix_from_json(const Json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) fail(where, "matrix must be a nonempty array of rows");
    const std::size_t rows = j.size();
    if (!j[0].is_array()) fail(where, "matrix must be a nonempty array of rows");
    const std::size_t cols = j[0].size();
    if (cols == 0) fail(where, "matrix rows must be nonempty");
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const std::string w = where + "[" + std::to_string(r) + "]";
        if (!j[r].is_array() || j[r].size() != cols) fail(w, "ragged matrix row");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = entry(j[r][c], w + "[" + std::to_string(c) + "]");
    }
    return m;
}

QuantumSet qset_from_json(const Json& j, const std::string& where) {
    if (!j.is_object()) fail(where, "expected a quantum set");
    QuantumSet x;
    if (j.contains("classical")) {
        for (const auto& t : strings(j["classical"], where + ".classical")) {
            if (x.has(t)) fail(where, "duplicate atom \"" + t + "\"");
            x.add(t, 1);
        }
        return x;
    }
    const Json& atoms = field(j, "atoms", where);
    if (!atoms.is_array()) fail(where + ".atoms", "expected an array");
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        const std::string w = where + ".atoms[" + std::to_string(i) + "]";
        const std::string id = str(field(atoms[i], "id", w), w + ".id");
        const Json& d = field(atoms[i], "dim", w);
        if (!d.is_number_integer() || d.get<int>() < 1) fail(w, "dim must be a positive integer");
        if (x.has(id)) fail(w, "duplicate atom \"" + id + "\"");
        x.add(id, d.get<int>());
    }
    return x;
}

BinaryRelation relation_from_json(const Json& j, const std::string& where, const QuantumSet* dom,
                                  const QuantumSet* cod) {
    const QuantumSet d = dom ? *dom : qset_from_json(field(j, "dom", where), where + ".dom");
    const QuantumSet c = cod ? *cod : qset_from_json(field(j, "cod", where), where + ".cod");
    BinaryRelation r(d, c);
    if (!j.contains("components")) return r;
    const Json& comps = j["components"];
    if (!comps.is_array()) fail(where + ".components", "expected an array");
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const std::string w = where + ".components[" + std::to_string(i) + "]";
        const std::string x = str(field(comps[i], "from", w), w + ".from");
        const std::string y = str(field(comps[i], "to", w), w + ".to");
        if (!d.has(x)) fail(w, "unknown source atom \"" + x + "\"");
        if (!c.has(y)) fail(w, "unknown target atom \"" + y + "\"");
        const int dx = d.dim(x), dy = c.dim(y);
        const Json& comp = comps[i];
        if (comp.value("full", false)) {
            r.add(x, y, OperatorSubspace::full(dx, dy));
            continue;
        }
        if (comp.value("scalars", false)) {
            if (dx != dy) fail(w, "scalars need atoms of equal dimension");
            r.add(x, y, OperatorSubspace::scalars(dx));
            continue;
        }
        const Json& basis = field(comp, "basis", w);
        if (!basis.is_array()) fail(w + ".basis", "expected an array of matrices");
        std::vector<Matrix> span;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const std::string wb = w + ".basis[" + std::to_string(k) + "]";
            Matrix m = matrix_from_json(basis[k], wb);
            if (m.rows() != dy || m.cols() != dx)
                fail(wb, "expected " + std::to_string(dy) + "x" + std::to_string(dx) + " for (" + x + ", " + y +
                             "), got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
            span.push_back(std::move(m));
        }
        r.add(x, y, OperatorSubspace::span(span, dx, dy));
    }
    return r;
}

ClassicalPoset classical_poset_from_json(const Json& j, const std::string& where) {
    const std::vector<std::string> elems = strings(field(j, "elements", where), where + ".elements");
    std::vector<std::pair<std::string, std::string>> pairs;
    if (j.contains("leq")) {
        const Json& l = j["leq"];
        if (!l.is_array()) fail(where + ".leq", "expected an array of pairs");
        for (std::size_t i = 0; i < l.size(); ++i) {
            const auto p = strings(l[i], where + ".leq[" + std::to_string(i) + "]");
            if (p.size() != 2) fail(where + ".leq[" + std::to_string(i) + "]", "expected a pair");
            pairs.emplace_back(p[0], p[1]);
        }
    }
    try {
        return classical_poset(elems, pairs);
    } catch (const Error& err) {
        fail(where, err.what());
    }
}

Document parse(const std::string& text) {
    Json root;
    try {
        root = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, col] = line_col(text, e.byte);
        throw Error(ErrorKind::Input, "parse error at line " + std::to_string(line) + ", column " +
                                          std::to_string(col) + ": " + e.what());
    }
    if (!root.is_object()) throw Error(ErrorKind::Input, "document must be a JSON object");
    Document doc;
    Parser p{doc};
    try {
        if (root.contains("version")) doc.version = root["version"].is_string() ? root["version"].get<std::string>()
                                                                                 : root["version"].dump();
        if (root.contains("metadata")) doc.metadata = root["metadata"];
        each(root, "qsets", [&](const std::string& k, const Json& v, const std::string& w) {
            doc.qsets[k] = qset_from_json(v, w);
        });
        each(root, "classical_posets", [&](const std::string& k, const Json& v, const std::string& w) {
            doc.classical_posets[k] = classical_poset_from_json(v, w);
        });
        each(root, "relations", [&](const std::string& k, const Json& v, const std::string& w) {
            doc.relations[k] = p.relation(v, w);
        });
        each(root, "posets", [&](const std::string& k, const Json& v, const std::string& w) {
            doc.posets[k] = p.poset(v, w);
        });
        each(root, "partitions", [&](const std::string& k, const Json& v, const std::string& w) {
            doc.partitions[k] = p.partition(v, w);
        });
        each(root, "labelings", [&](const std::string& k, const Json& v, const std::string& w) {
            doc.labelings[k] = p.labeling(v, w);
        });
        each(root, "labeling_chains", [&](const std::string& k, const Json& v, const std::string& w) {
            const Json& es = field(v, "entries", w);
            if (!es.is_array() || es.empty()) fail(w + ".entries", "expected a nonempty array of labelings");
            std::vector<Labeling> ls;
            for (std::size_t i = 0; i < es.size(); ++i)
                ls.push_back(p.labeling(es[i], w + ".entries[" + std::to_string(i) + "]"));
            doc.labeling_chains[k] = std::move(ls);
        });
        each(root, "chains", [&](const std::string& k, const Json& v, const std::string& w) {
            doc.chains[k] = p.chain(v, w);
        });
        if (root.contains("checks")) doc.checks = root["checks"];
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::Input, std::string("schema error: ") + e.what());
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Input) throw;
        throw Error(ErrorKind::Input, e.what());
    }
    return doc;
}

Document load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Input, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse(ss.str());
    } catch (const Error& e) {
        throw Error(ErrorKind::Input, path + ": " + e.what());
    }
}

Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
        rows.push_back(row);
    }
    return rows;
}

Json to_json(const QuantumSet& x) {
    Json atoms = Json::array();
    for (const auto& [id, d] : x) atoms.push_back({{"id", id}, {"dim", d}});
    return {{"atoms", atoms}};
}

Json to_json(const BinaryRelation& r) {
    Json comps = Json::array();
    for (const auto& [key, sub] : r.components()) {
        Json basis = Json::array();
        for (const auto& m : sub.basis()) basis.push_back(to_json(m));
        comps.push_back({{"from", key.first}, {"to", key.second}, {"basis", basis}});
    }
    return {{"dom", to_json(r.dom())}, {"cod", to_json(r.cod())}, {"components", comps}};
}

Json to_json(const ClassicalPoset& s) {
    Json leq = Json::array();
    for (const auto& [a, b] : s.leq)
        if (a != b) leq.push_back(Json::array({a, b}));
    return {{"elements", s.elements}, {"leq", leq}};
}

Json to_json(const Partition& p) {
    Json cells = Json::array();
    for (const auto& c : p.cells) cells.push_back(to_json(c));
    return {{"dim", p.dim}, {"cells", cells}};
}

Json to_json(const PosetEntry& p) {
    Json j = Json::object();
    switch (p.kind) {
        case PosetKind::Order: j["order"] = to_json(p.poset.order()); break;
        case PosetKind::Flat: j["flat"] = to_json(p.poset.carrier()); break;
        case PosetKind::Classical: j["classical"] = to_json(*p.classical); break;
        case PosetKind::Product:
        case PosetKind::Coproduct: {
            Json parts = Json::array();
            for (const auto& q : p.parts) parts.push_back(to_json(*q));
            j[kind_name(p.kind)] = parts;
            if (p.kind == PosetKind::Coproduct) j["tags"] = p.tags;
            break;
        }
        case PosetKind::Lift: j["lift"] = to_json(*p.parts[0]); break;
    }
    return j;
}

Json to_json(const Labeling& l) {
    return {{"partition", to_json(l.partition)}, {"poset", to_json(l.poset)}, {"label", l.label}};
}

Json to_json(const Document& d) {
    Json j = Json::object();
    j["version"] = d.version;
    if (!d.metadata.empty()) j["metadata"] = d.metadata;
    auto table = [&](const char* name, const auto& m, auto&& conv) {
        if (m.empty()) return;
        Json t = Json::object();
        for (const auto& [k, v] : m) t[k] = conv(v);
        j[name] = t;
    };
    table("qsets", d.qsets, [](const QuantumSet& x) { return to_json(x); });
    table("classical_posets", d.classical_posets, [](const ClassicalPoset& s) { return to_json(s); });
    table("relations", d.relations, [](const BinaryRelation& r) { return to_json(r); });
    table("posets", d.posets, [](const std::shared_ptr<PosetEntry>& p) { return to_json(*p); });
    table("partitions", d.partitions, [](const Partition& p) { return to_json(p); });
    table("labelings", d.labelings, [](const Labeling& l) { return to_json(l); });
    table("labeling_chains", d.labeling_chains, [](const std::vector<Labeling>& ls) {
        Json es = Json::array();
        for (const auto& l : ls) es.push_back(to_json(l));
        return Json{{"entries", es}};
    });
    table("chains", d.chains, [](const ChainEntry& c) {
        Json es = Json::array();
        for (const auto& e : c.chain.entries) es.push_back(to_json(e));
        Json out{{"source", to_json(c.chain.source)},
                 {"target", to_json(*c.target)},
                 {"entries", es},
                 {"tail_constant", c.chain.tail_constant}};
        if (c.candidate) out["candidate"] = to_json(*c.candidate);
        return out;
    });
    if (!d.checks.empty()) j["checks"] = d.checks;
    return j;
}

void save(const Document& d, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::Input, "cannot write " + path);
    out << to_json(d).dump(2) << "\n";
}

}  // namespace qdomain::io
