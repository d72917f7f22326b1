#include "commands.hpp"

#include "qdomain/classical.hpp"
#include "qdomain/examples.hpp"
#include "qdomain/io.hpp"
#include "qdomain/lift.hpp"
#include "qdomain/random.hpp"
#include "qdomain/tolerance.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#ifndef QDOMAIN_CORPUS_DIR
#define QDOMAIN_CORPUS_DIR "corpus"
#endif

namespace qdomain::cli {

namespace {

using io::Json;

struct Report {
    bool pass = true;
    std::vector<std::string> lines;
    Json data = Json::object();

    void line(const std::string& s) { lines.push_back(s); }
};

struct Args {
    std::string command;
    std::vector<std::string> v;

    const std::string& file() const {
        if (v.empty()) throw Error(ErrorKind::Input, command + ": missing input file");
        return v[0];
    }
    std::optional<std::string> at(std::size_t i) const {
        if (i < v.size()) return v[i];
        return std::nullopt;
    }
};

// The named entry, or the only entry when no name is given.
template <class Map>
const typename Map::mapped_type& pick(const Map& m, const std::optional<std::string>& name, const char* what) {
    if (name) {
        auto it = m.find(*name);
        if (it == m.end()) throw Error(ErrorKind::Input, std::string("no ") + what + " named \"" + *name + "\"");
        return it->second;
    }
    if (m.size() != 1)
        throw Error(ErrorKind::Input, std::string("name a ") + what + " (the file has " + std::to_string(m.size()) + ")");
    return m.begin()->second;
}

template <class Map>
const typename Map::mapped_type& need(const Map& m, const std::optional<std::string>& name, const char* what) {
    if (!name) throw Error(ErrorKind::Input, std::string("missing ") + what + " name");
    return pick(m, name, what);
}

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string atoms_of(const QuantumSet& x) {
    std::string s = "{";
    bool first = true;
    for (const auto& [id, d] : x) {
        s += (first ? "" : ", ") + id;
        first = false;
    }
    return s + "}";
}

Json relation_report(const BinaryRelation& r) { return io::to_json(r); }

void relation_result(Report& rep, const std::string& label, const BinaryRelation& r) {
    rep.line(label + ": " + describe(r));
    rep.data["result"] = relation_report(r);
}

const QuantumPoset& poset_arg(const io::Document& d, const std::optional<std::string>& n) {
    return pick(d.posets, n, "poset")->poset;
}

// --- commands -------------------------------------------------------------

void check_order(const Args& a, Report& rep) {
    const io::Document d = io::load(a.file());
    const auto name = a.at(1);
    BinaryRelation r;
    if (name && d.relations.count(*name)) r = d.relations.at(*name);
    else if (name && d.posets.count(*name)) r = d.posets.at(*name)->poset.order();
    else if (!name && d.relations.size() == 1) r = d.relations.begin()->second;
    else if (!name && d.relations.empty() && d.posets.size() == 1) r = d.posets.begin()->second->poset.order();
    else throw Error(ErrorKind::Input, name ? "no relation or poset named \"" + *name + "\"" : "name a relation");
    if (r.dom() != r.cod()) throw Error(ErrorKind::Input, "an order needs a relation from a set to itself");
    const OrderReport o = order_report(r);
    rep.pass = o.ok();
    rep.line("reflexive: " + yes(o.reflexive));
    rep.line("transitive: " + yes(o.transitive));
    rep.line("antisymmetric: " + yes(o.antisymmetric));
    for (const auto& w : o.witnesses) rep.line("  " + w);
    rep.data["reflexive"] = o.reflexive;
    rep.data["transitive"] = o.transitive;
    rep.data["antisymmetric"] = o.antisymmetric;
    rep.data["witnesses"] = o.witnesses;
}

void check_function(const Args& a, Report& rep) {
    const io::Document d = io::load(a.file());
    const BinaryRelation& f = pick(d.relations, a.at(1), "relation");
    const FunctionReport r = function_report(f);
    rep.pass = r.is_function;
    rep.line("function: " + yes(r.is_function));
    for (const auto& v : r.violations) rep.line("  " + v);
    if (r.is_function) {
        rep.line("injective: " + yes(r.is_injective));
        rep.line("surjective: " + yes(r.is_surjective));
        rep.line("bijective: " + yes(r.is_bijective));
        rep.line("range: " + atoms_of(r.range));
    }
    rep.data["function"] = r.is_function;
    rep.data["injective"] = r.is_injective;
    rep.data["surjective"] = r.is_surjective;
    rep.data["bijective"] = r.is_bijective;
    rep.data["range"] = r.range.ids();
    rep.data["violations"] = r.violations;
}

void binary(const Args& a, Report& rep, const std::function<BinaryRelation(const BinaryRelation&, const BinaryRelation&)>& op) {
    const io::Document d = io::load(a.file());
    const BinaryRelation& s = need(d.relations, a.at(1), "relation");
    const BinaryRelation& r = need(d.relations, a.at(2), "relation");
    relation_result(rep, a.command, op(s, r));
}

void dagger_cmd(const Args& a, Report& rep) {
    const io::Document d = io::load(a.file());
    relation_result(rep, "dagger", dagger(pick(d.relations, a.at(1), "relation")));
}

std::string no_limit_message(const Difference& w) {
    return "no limit: R∘K_∞ ≠ ⋀ R∘K_n at (" + w.x + ", " + w.y + "): dim " + std::to_string(w.dim_r) + " vs " +
           std::to_string(w.dim_s);
}

void limit_cmd(const Args& a, Report& rep) {
    const io::Document d = io::load(a.file());
    const io::ChainEntry& c = pick(d.chains, a.at(1), "chain");
    if (c.candidate) {
        const LimitCheck chk = check_limit(c.chain, *c.candidate);
        rep.pass = chk.is_limit;
        rep.data["candidate"] = true;
        rep.data["is_limit"] = chk.is_limit;
        if (chk.is_limit) {
            rep.line("limit: the candidate is a limit");
        } else if (!chk.witness) {
            rep.line("no limit: the candidate is not a function");
        } else {
            rep.line(no_limit_message(*chk.witness));
            for (const auto& d : chk.differences)
                if (d.x != chk.witness->x || d.y != chk.witness->y)
                    rep.line("  also differs at (" + d.x + ", " + d.y + "): dim " + std::to_string(d.dim_r) + " vs " +
                             std::to_string(d.dim_s));
            rep.data["witness"] = {{"x", chk.witness->x}, {"y", chk.witness->y},
                                   {"dim_image", chk.witness->dim_r}, {"dim_meet", chk.witness->dim_s}};
        }
        return;
    }
    try {
        const LimitResult l = compute_limit(c.chain);
        rep.line("stabilizes at entry " + std::to_string(l.index));
        relation_result(rep, "limit", l.limit);
        rep.data["index"] = l.index;
        const bool sup = std::all_of(c.chain.entries.begin(), c.chain.entries.end(), [&](const BinaryRelation& k) {
            return hom_leq(k, l.limit, c.chain.target);
        });
        rep.line("upper bound: " + yes(sup));
        rep.data["upper_bound"] = sup;
        rep.pass = sup;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::Verification) throw;
        rep.pass = false;
        rep.line(e.what());
    }
}

void scott_cmd(const Args& a, Report& rep) {
    const io::Document d = io::load(a.file());
    const BinaryRelation& f = need(d.relations, a.at(1), "relation");
    const QuantumPoset& x = need(d.posets, a.at(2), "poset")->poset;
    const QuantumPoset& y = need(d.posets, a.at(3), "poset")->poset;
    std::vector<MonotoneChain> chains;
    if (a.v.size() > 4) {
        for (std::size_t i = 4; i < a.v.size(); ++i) chains.push_back(need(d.chains, a.at(i), "chain").chain);
    } else {
        for (const auto& [n, c] : d.chains)
            if (c.chain.target.carrier() == x.carrier() && equals(c.chain.target.order(), x.order()))
                chains.push_back(c.chain);
    }
    const ScottReport s = verify_scott_continuous(f, x, y, chains);
    rep.pass = s.passed;
    rep.line("chains: " + std::to_string(s.chains));
    rep.line("scott continuous: " + yes(s.passed));
    for (const auto& m : s.failures) rep.line("  " + m);
    rep.data["chains"] = s.chains;
    rep.data["failures"] = s.failures;
}

void coproduct_limit_cmd(const Args& a, Report& rep) {
    const io::Document d = io::load(a.file());
    const io::ChainEntry& c = pick(d.chains, a.at(1), "chain");
    const BinaryRelation l = limit_in_coproduct(c.chain, c.target->as_coproduct());
    relation_result(rep, "limit", l);
    rep.line("agrees with direct stabilization: yes");
}

void product_limit_cmd(const Args& a, Report& rep) {
    const io::Document d = io::load(a.file());
    const io::ChainEntry& c = pick(d.chains, a.at(1), "chain");
    if (c.target->kind != io::PosetKind::Product) throw Error(ErrorKind::Input, "chain target is not a product");
    const ProductLimit p = limit_in_product(c.chain, c.target->parts[0]->poset, c.target->parts[1]->poset);
    rep.line("index: " + std::to_string(p.index));
    rep.line("first: " + describe(p.first));
    rep.line("second: " + describe(p.second));
    relation_result(rep, "limit", p.limit);
    rep.data["index"] = p.index;
}

const io::PosetEntry* coproduct_for(const io::Document& d, const QuantumSet& carrier,
                                    const std::optional<std::string>& name) {
    if (name) return pick(d.posets, name, "poset").get();
    for (const auto& [n, p] : d.posets)
        if (p->kind == io::PosetKind::Coproduct && p->poset.carrier() == carrier) return p.get();
    throw Error(ErrorKind::Input, "no coproduct poset on the target of the function");
}

void factor_cmd(const Args& a, Report& rep) {
    if (a.v.empty()) throw Error(ErrorKind::Input, "factor: expected range, decomposition or partition");
    const std::string mode = a.v[0];
    Args rest{a.command, std::vector<std::string>(a.v.begin() + 1, a.v.end())};
    const io::Document d = io::load(rest.file());
    const BinaryRelation& f = pick(d.relations, rest.at(1), "relation");
    if (mode == "range") {
        const RangeFactorization r = factor_through_range(f);
        rep.line("range: " + atoms_of(r.inclusion.dom()));
        rep.line("surjection: " + describe(r.surjection));
        const bool ok = equals(compose(r.inclusion, r.surjection), f);
        rep.line("J∘F̄ = F: " + yes(ok));
        rep.pass = ok;
        rep.data["range"] = r.inclusion.dom().ids();
        rep.data["surjection"] = relation_report(r.surjection);
    } else if (mode == "decomposition") {
        const io::PosetEntry* cp = coproduct_for(d, f.cod(), rest.at(2));
        const PosetCoproduct pc = cp->as_coproduct();
        const CoproductDecomposition cd = decompose_over_coproduct(f, pc.summands());
        Json parts = Json::array();
        for (std::size_t i = 0; i < cd.parts.size(); ++i) {
            const std::string tag = cd.decomposition.tags[i];
            rep.line("part " + tag + " (dim " + std::to_string(cd.decomposition.bases[i].cols()) + "): " +
                     describe(cd.parts[i]));
            parts.push_back({{"tag", tag}, {"basis", io::to_json(cd.decomposition.bases[i])},
                             {"function", relation_report(cd.parts[i])}});
        }
        rep.line("decomposition: " + yes(is_decomposition(cd.decomposition)));
        rep.pass = is_decomposition(cd.decomposition);
        rep.data["parts"] = parts;
    } else if (mode == "partition") {
        ClassicalPoset s;
        if (rest.at(2)) {
            s = need(d.classical_posets, rest.at(2), "classical poset");
        } else {
            s = extract(flat_order(f.cod()));
        }
        const Labeling l = factor_via_partition(f, s);
        for (std::size_t i = 0; i < l.partition.cells.size(); ++i)
            rep.line("cell " + std::to_string(i + 1) + " (rank " +
                     std::to_string(static_cast<int>(std::lround(l.partition.cells[i].trace().real()))) + ") -> " +
                     l.label[i]);
        const bool ok = equals(labeling_function(l, f.dom().ids().front()), f);
        rep.line("`f∘M_P = F: " + yes(ok));
        rep.pass = ok;
        rep.data["labeling"] = io::to_json(l);
    } else {
        throw Error(ErrorKind::Input, "factor: unknown mode \"" + mode + "\"");
    }
}

void lift_cmd(const Args& a, Report& rep) {
    const io::Document d = io::load(a.file());
    const LiftedPoset l = lift_poset(poset_arg(d, a.at(1)));
    rep.line("bottom: " + l.bottom);
    rep.line("carrier: " + atoms_of(l.lifted.carrier()));
    relation_result(rep, "order", l.lifted.order());
    const PointednessReport p = pointedness_report(l.lifted);
    rep.line("pointed: " + yes(p.is_pointed));
    rep.pass = p.is_pointed;
    rep.data["bottom"] = l.bottom;
}

void kleisli_cmd(const Args& a, Report& rep) {
    const io::Document d = io::load(a.file());
    const BinaryRelation& g = need(d.relations, a.at(1), "relation");
    const BinaryRelation& f = need(d.relations, a.at(2), "relation");
    relation_result(rep, "g∙f", kleisli_compose(g, f));
}

void pointed_cmd(const Args& a, Report& rep) {
    const io::Document d = io::load(a.file());
    const PointednessReport p = pointedness_report(poset_arg(d, a.at(1)));
    rep.pass = p.is_pointed;
    rep.line("pointed: " + yes(p.is_pointed));
    if (p.bottom) rep.line("bottom: " + *p.bottom);
    rep.data["pointed"] = p.is_pointed;
    if (p.bottom) rep.data["bottom"] = *p.bottom;
}

void strict_cmd(const Args& a, Report& rep) {
    const io::Document d = io::load(a.file());
    const BinaryRelation& f = need(d.relations, a.at(1), "relation");
    const QuantumPoset& x = need(d.posets, a.at(2), "poset")->poset;
    const QuantumPoset& y = need(d.posets, a.at(3), "poset")->poset;
    const bool s = is_strict(f, x, y);
    rep.pass = s;
    rep.line("strict: " + yes(s));
    rep.data["strict"] = s;
}

void embed_cmd(const Args& a, Report& rep) {
    const io::Document d = io::load(a.file());
    const QuantumPoset q = embed(pick(d.classical_posets, a.at(1), "classical poset"));
    rep.line("carrier: " + atoms_of(q.carrier()));
    relation_result(rep, "order", q.order());
}

void extract_cmd(const Args& a, Report& rep) {
    const io::Document d = io::load(a.file());
    const ClassicalPoset s = extract(poset_arg(d, a.at(1)));
    std::string leq;
    for (const auto& [x, y] : s.leq)
        if (x != y) leq += (leq.empty() ? "" : ", ") + x + " ⊑ " + y;
    rep.line("elements: " + std::to_string(s.elements.size()));
    rep.line("order: " + (leq.empty() ? std::string("discrete") : leq));
    rep.data["result"] = io::to_json(s);
}

// --- corpus ---------------------------------------------------------------

struct CorpusCase {
    std::string name;
    std::function<std::string()> run;  // empty string on pass, else the reason
};

std::string expect(bool ok, const std::string& why) { return ok ? "" : why; }

std::vector<CorpusCase> builtin_cases(std::uint64_t seed) {
    namespace ex = examples;
    std::vector<CorpusCase> cs;
    cs.push_back({"V is an order on H", [] {
                      return expect(order_report(ex::v_order().order()).ok(), "V fails the order axioms");
                  }});
    cs.push_back({"`N̄×V is an order", [] {
                      return expect(order_report(ex::nbar_times_v().order()).ok(), "S fails the order axioms");
                  }});
    cs.push_back({"sup: R∘K_n table pattern", [] {
                      const QuantumPoset r = ex::sup_order();
                      const auto t = ex::nbar_tokens();
                      const OperatorSubspace v = ex::v_order().order().at("H", "H");
                      for (std::size_t n = 0; n + 1 < t.size(); ++n) {
                          const BinaryRelation img = compose(r.order(), ex::k_map(r, t[n]));
                          for (std::size_t j = 0; j < t.size(); ++j) {
                              const OperatorSubspace c = img.at("H", ex::x_atom(t[j]));
                              const bool ok = j >= n ? equals(c, v) : c.is_zero();
                              if (!ok) return "component (H, X_" + t[j] + ") of R∘K_" + t[n];
                          }
                      }
                      return std::string();
                  }});
    cs.push_back({"sup: R∘K_∞ ≠ ⋀ R∘K_n", [] {
                      const QuantumPoset r = ex::sup_order();
                      const LimitCheck c = check_limit(ex::k_chain(r), ex::k_map(r, "∞"));
                      if (c.is_limit) return std::string("K_∞ passed as a limit");
                      return expect(c.witness->x == "H" && c.witness->y == ex::x_atom("∞") && c.witness->dim_r == 1 &&
                                        c.witness->dim_s == 2,
                                    no_limit_message(*c.witness));
                  }});
    cs.push_back({"S: limit of K_n is K_5 and is the supremum", [] {
                      const QuantumPoset s = ex::nbar_times_v();
                      const MonotoneChain c = ex::k_chain(s);
                      const LimitResult l = compute_limit(c);
                      if (!equals(l.limit, ex::k_map(s, "5"))) return std::string("limit is not K_5");
                      for (const auto& k : c.entries)
                          if (!hom_leq(k, l.limit, s)) return std::string("limit is not an upper bound");
                      return std::string();
                  }});
    cs.push_back({"Hadamard is bijective", [] {
                      return expect(function_report(ex::hadamard()).is_bijective, "F_1 not bijective");
                  }});
    cs.push_back({"measurement is surjective, not injective", [] {
                      const FunctionReport r = function_report(ex::measurement());
                      return expect(r.is_function && r.is_surjective && !r.is_injective &&
                                        r.range == classical_of_set(ex::measurement_outcomes()),
                                    "F_2 report differs");
                  }});
    cs.push_back({"no cloning: pair(I, I) fails", [] {
                      const BinaryRelation i = identity(atomic(2, "H"));
                      try {
                          (void)pair(i, i);
                      } catch (const PairingError&) {
                          return std::string();
                      }
                      return std::string("pair(I, I) was accepted");
                  }});
    cs.push_back({"quantaloid laws on 20 seeded instances", [seed] {
                      rnd::Rng rng(seed);
                      for (int k = 0; k < 20; ++k) {
                          const QuantumSet x = rnd::random_qset(rng, 1, 3, 3, "x");
                          const QuantumSet y = rnd::random_qset(rng, 1, 3, 3, "y");
                          const QuantumSet z = rnd::random_qset(rng, 1, 2, 2, "z");
                          const BinaryRelation r = rnd::random_relation(rng, x, y);
                          const BinaryRelation r2 = rnd::random_relation(rng, x, y);
                          const BinaryRelation s = rnd::random_relation(rng, y, z);
                          const BinaryRelation t = rnd::random_relation(rng, z, x);
                          if (!equals(compose(t, compose(s, r)), compose(compose(t, s), r))) return std::string("associativity");
                          if (!equals(compose(identity(y), r), r) || !equals(compose(r, identity(x)), r))
                              return std::string("identity");
                          if (!equals(compose(s, join(r, r2)), join(compose(s, r), compose(s, r2))))
                              return std::string("join distributivity");
                          if (!equals(dagger(compose(s, r)), compose(dagger(r), dagger(s)))) return std::string("dagger");
                      }
                      return std::string();
                  }});
    return cs;
}

std::vector<std::filesystem::path> corpus_files(const std::string& dir) {
    std::vector<std::filesystem::path> out;
    if (!std::filesystem::is_directory(dir)) return out;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.path().extension() == ".json") out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
}

void corpus_cmd(const Args& a, const Options& opt, Report& rep) {
    const std::string dir = a.at(0).value_or(opt.corpus_dir.empty() ? QDOMAIN_CORPUS_DIR : opt.corpus_dir);
    Json rows = Json::array();
    std::size_t passed = 0, total = 0;
    auto record = [&](const std::string& name, const std::string& why) {
        ++total;
        if (why.empty()) ++passed;
        else rep.pass = false;
        rep.line(std::string(why.empty() ? "PASS  " : "FAIL  ") + name + (why.empty() ? "" : "  (" + why + ")"));
        rows.push_back({{"name", name}, {"pass", why.empty()}, {"detail", why}});
    };
    for (const auto& c : builtin_cases(opt.seed)) {
        std::string why;
        try {
            why = c.run();
        } catch (const std::exception& e) {
            why = e.what();
        }
        record(c.name, why);
    }
    for (const auto& path : corpus_files(dir)) {
        io::Document d;
        try {
            d = io::load(path.string());
        } catch (const Error& e) {
            record(path.filename().string(), e.what());
            continue;
        }
        for (const auto& chk : d.checks) {
            const std::string cmd = chk.value("command", "");
            std::vector<std::string> args;
            if (cmd == "factor") args.push_back(chk.value("mode", "range"));
            args.push_back(path.string());
            for (const auto& x : chk.value("args", Json::array())) args.push_back(x.get<std::string>());
            const int want = chk.value("expect", 0);
            std::ostringstream out, err;
            Options sub = opt;
            sub.json = false;
            const int got = run(cmd, args, sub, out, err);
            std::string why;
            if (got != want) why = "exit " + std::to_string(got) + ", expected " + std::to_string(want);
            if (why.empty() && chk.contains("output")) {
                const std::string needle = chk["output"].get<std::string>();
                if (out.str().find(needle) == std::string::npos) why = "output lacks \"" + needle + "\"";
            }
            std::string label = path.filename().string() + ": " + cmd;
            for (std::size_t i = cmd == "factor" ? 0 : 1; i < args.size(); ++i)
                if (i != (cmd == "factor" ? 1u : 0u)) label += " " + args[i];
            record(label, why);
        }
    }
    rep.line(std::to_string(passed) + "/" + std::to_string(total) + " passed");
    rep.data["cases"] = rows;
}

int exit_for(ErrorKind k) {
    switch (k) {
        case ErrorKind::NotAFunction:
        case ErrorKind::NotMonotone:
        case ErrorKind::Verification:
        case ErrorKind::Pairing: return CheckFailed;
        default: return InputError;
    }
}

}  // namespace

std::vector<std::string> command_names() {
    return {"check-order", "check-function", "compose", "meet", "join", "dagger", "tensor", "limit",
            "scott", "coproduct-limit", "product-limit", "factor", "lift", "kleisli-compose", "pointed",
            "strict", "embed", "extract", "corpus"};
}

int run(const std::string& command, const std::vector<std::string>& args, const Options& opt, std::ostream& out,
        std::ostream& err) {
    Report rep;
    const Args a{command, args};
    Tolerance tol = tolerance();
    if (opt.tol) tol.rel = *opt.tol;
    ScopedTolerance scope(tol);
    int code = Pass;
    try {
        if (command == "check-order") check_order(a, rep);
        else if (command == "check-function") check_function(a, rep);
        else if (command == "compose") binary(a, rep, [](const auto& s, const auto& r) { return compose(s, r); });
        else if (command == "meet") binary(a, rep, [](const auto& s, const auto& r) { return meet(s, r); });
        else if (command == "join") binary(a, rep, [](const auto& s, const auto& r) { return join(s, r); });
        else if (command == "tensor") binary(a, rep, [](const auto& s, const auto& r) { return monoidal(s, r); });
        else if (command == "dagger") dagger_cmd(a, rep);
        else if (command == "limit") limit_cmd(a, rep);
        else if (command == "scott") scott_cmd(a, rep);
        else if (command == "coproduct-limit") coproduct_limit_cmd(a, rep);
        else if (command == "product-limit") product_limit_cmd(a, rep);
        else if (command == "factor") factor_cmd(a, rep);
        else if (command == "lift") lift_cmd(a, rep);
        else if (command == "kleisli-compose") kleisli_cmd(a, rep);
        else if (command == "pointed") pointed_cmd(a, rep);
        else if (command == "strict") strict_cmd(a, rep);
        else if (command == "embed") embed_cmd(a, rep);
        else if (command == "extract") extract_cmd(a, rep);
        else if (command == "corpus") corpus_cmd(a, opt, rep);
        else throw Error(ErrorKind::Input, "unknown command \"" + command + "\"");
        code = rep.pass ? Pass : CheckFailed;
    } catch (const Error& e) {
        code = exit_for(e.kind());
        rep.pass = false;
        if (code == InputError) {
            err << "error: " << e.what() << "\n";
            if (!opt.json) return code;
            rep.data["error"] = e.what();
        } else {
            rep.line(e.what());
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        code = InputError;
        if (!opt.json) return code;
        rep.data["error"] = e.what();
    }
    if (opt.json) {
        Json j{{"command", command}, {"status", code == Pass ? "pass" : code == CheckFailed ? "fail" : "error"},
               {"exit", code}, {"lines", rep.lines}};
        for (auto it = rep.data.begin(); it != rep.data.end(); ++it) j[it.key()] = it.value();
        out << j.dump(2) << "\n";
    } else {
        for (const auto& l : rep.lines) out << l << "\n";
        if (command != "corpus") out << (code == Pass ? "PASS" : "FAIL") << "\n";
    }
    return code;
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"qdomain: finite quantum domain theory checker"};
    Options opt;
    std::string command;
    std::vector<std::string> args;
    double tol = 0.0;
    app.add_flag("--json", opt.json, "Emit a JSON report");
    auto* tol_opt = app.add_option("--tol", tol, "Relative singular value cutoff (also QDOMAIN_TOL)");
    app.add_option("--seed", opt.seed, "Seed for randomized corpus entries");
    app.add_option("--corpus", opt.corpus_dir, "Directory of corpus files");
    app.add_option("command", command, "Command to run")->required();
    app.add_option("args", args, "File and object names");
    app.footer("Commands: check-order check-function compose meet join dagger tensor limit scott coproduct-limit\n"
               "  product-limit factor {range|decomposition|partition} lift kleisli-compose pointed strict\n"
               "  embed extract corpus\nExit status: 0 pass, 1 check failed, 2 input error.");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? Pass : InputError;
    }
    if (tol_opt->count() > 0) {
        opt.tol = tol;
    } else if (const char* env = std::getenv("QDOMAIN_TOL")) {
        try {
            opt.tol = std::stod(env);
        } catch (const std::exception&) {
            err << "error: QDOMAIN_TOL is not a number\n";
            return InputError;
        }
    }
    if (opt.tol && !(*opt.tol > 0.0 && *opt.tol < 1.0)) {
        err << "error: tolerance must lie in (0, 1)\n";
        return InputError;
    }
    return run(command, args, opt, out, err);
}

}  // namespace qdomain::cli
