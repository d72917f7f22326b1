#include "qdomain/cpo.hpp"

#include <algorithm>
#include <sstream>

namespace qdomain {

namespace {

std::string where(const Difference& d) {
    std::ostringstream os;
    os << "(" << d.x << ", " << d.y << "): dim " << d.dim_r << " vs " << d.dim_s;
    return os.str();
}

}  // namespace

void validate_chain(const MonotoneChain& c) {
    if (c.entries.empty()) throw Error(ErrorKind::InvalidArgument, "chain: no entries");
    for (std::size_t n = 0; n < c.entries.size(); ++n) {
        const BinaryRelation& k = c.entries[n];
        require_same(k.dom(), c.source, "chain");
        require_same(k.cod(), c.target.carrier(), "chain");
        const FunctionReport rep = function_report(k);
        if (!rep.is_function)
            throw Error(ErrorKind::NotAFunction, "chain: entry " + std::to_string(n + 1) + " is not a function: " +
                                                     rep.violations.front());
        if (n > 0 && !hom_leq(c.entries[n - 1], k, c.target))
            throw Error(ErrorKind::NotMonotone, "chain: entry " + std::to_string(n) + " is not below entry " +
                                                    std::to_string(n + 1));
    }
    if (c.tail_constant && c.entries.size() >= 2 &&
        !equals(c.entries[c.entries.size() - 2], c.entries.back()))
        throw Error(ErrorKind::InvalidArgument, "chain: tail_constant set but the last two entries differ");
}

MeetResult descending_meet(const MonotoneChain& c) {
    validate_chain(c);
    const BinaryRelation& r = c.target.order();
    MeetResult out{compose(r, c.entries.front()), 1};
    for (std::size_t n = 1; n < c.entries.size(); ++n) {
        BinaryRelation next = meet(out.meet, compose(r, c.entries[n]));
        if (!equals(next, out.meet)) {
            out.meet = std::move(next);
            out.index = n + 1;
        }
    }
    return out;
}

LimitCheck check_limit(const MonotoneChain& c, const BinaryRelation& k) {
    require_same(k.dom(), c.source, "is_limit");
    require_same(k.cod(), c.target.carrier(), "is_limit");
    LimitCheck out;
    out.meet = descending_meet(c).meet;
    out.image = compose(c.target.order(), k);
    out.differences = all_differences(out.image, out.meet);
    for (const auto& d : out.differences)
        if (d.dim_r > 0) {
            out.witness = d;
            break;
        }
    if (!out.witness && !out.differences.empty()) out.witness = out.differences.front();
    out.is_limit = out.differences.empty() && is_function(k);
    return out;
}

bool is_limit(const MonotoneChain& c, const BinaryRelation& k) { return check_limit(c, k).is_limit; }

LimitResult compute_limit(const MonotoneChain& c) {
    if (!c.tail_constant) throw Error(ErrorKind::InvalidArgument, "compute_limit: chain is not marked tail_constant");
    const MeetResult m = descending_meet(c);
    const BinaryRelation& k = c.entries[m.index - 1];
    const BinaryRelation image = compose(c.target.order(), k);
    if (auto d = first_difference(image, m.meet))
        throw Error(ErrorKind::Verification, "no limit among provided entries: R∘K ≠ ⋀ R∘K_n at " + where(*d));
    return LimitResult{k, m.index};
}

BinaryRelation extend_limit_to_general_source(const MonotoneChain& c) {
    validate_chain(c);
    BinaryRelation out(c.source, c.target.carrier());
    for (const auto& [a, d] : c.source) {
        const QuantumSet w = atomic(d, a);
        MonotoneChain part{w, c.target, {}, c.tail_constant};
        for (const auto& k : c.entries) part.entries.push_back(restrict(k, w));
        const BinaryRelation lim = compute_limit(part).limit;
        for (const auto& [key, sub] : lim.components()) out.set(key.first, key.second, sub);
    }
    if (!is_limit(c, out)) throw Error(ErrorKind::Verification, "extend_limit: reassembled relation is not a limit");
    return out;
}

MonotoneChain push_forward(const BinaryRelation& f, const QuantumPoset& y, const MonotoneChain& c) {
    require_same(f.cod(), y.carrier(), "push_forward");
    MonotoneChain out{c.source, y, {}, c.tail_constant};
    for (const auto& k : c.entries) out.entries.push_back(compose(f, k));
    return out;
}

ScottReport verify_scott_continuous(const BinaryRelation& f, const QuantumPoset& x, const QuantumPoset& y,
                                    const std::vector<MonotoneChain>& chains) {
    if (!is_monotone(f, x, y)) throw Error(ErrorKind::NotMonotone, "verify_scott_continuous: F is not monotone");
    ScottReport rep;
    for (std::size_t i = 0; i < chains.size(); ++i) {
        const MonotoneChain& c = chains[i];
        require_same(c.target.carrier(), x.carrier(), "verify_scott_continuous");
        const BinaryRelation lim = compute_limit(c).limit;
        const LimitCheck lc = check_limit(push_forward(f, y, c), compose(f, lim));
        ++rep.chains;
        if (!lc.is_limit) {
            rep.passed = false;
            rep.failures.push_back("chain " + std::to_string(i + 1) + ": F∘K_n does not converge to F∘K_∞" +
                                   (lc.witness ? " at " + where(*lc.witness) : std::string()));
        }
    }
    return rep;
}

ProductLimit limit_in_product(const MonotoneChain& c, const QuantumPoset& x, const QuantumPoset& y) {
    require_same(c.target.carrier(), product(x.carrier(), y.carrier()), "limit_in_product");
    if (!equals(c.target.order(), monoidal(x.order(), y.order())))
        throw Error(ErrorKind::ObjectMismatch, "limit_in_product: target order is not the product order");
    const BinaryRelation p = projection_P(x.carrier(), y.carrier());
    const BinaryRelation q = projection_Q(x.carrier(), y.carrier());
    const MonotoneChain fc = push_forward(p, x, c);
    const MonotoneChain gc = push_forward(q, y, c);
    const LimitResult fl = compute_limit(fc);
    const LimitResult gl = compute_limit(gc);
    const std::size_t l = std::max(fl.index, gl.index);

    ProductLimit out;
    out.first = fl.limit;
    out.second = gl.limit;
    out.index = l;
    const BinaryRelation& el = c.entries[l - 1];
    const BinaryRelation back = monoidal(dagger(fc.entries[l - 1]), dagger(gc.entries[l - 1]));
    out.limit = compose(monoidal(fl.limit, gl.limit), compose(back, el));

    if (!equals(compose(p, out.limit), out.first) || !equals(compose(q, out.limit), out.second))
        throw Error(ErrorKind::Verification, "limit_in_product: projections of E_∞ differ from the factor limits");
    if (auto d = first_difference(out.limit, compute_limit(c).limit))
        throw Error(ErrorKind::Verification, "limit_in_product: formula disagrees with direct limit at " + where(*d));
    return out;
}

namespace {

bool same_split(const Decomposition& a, const Decomposition& b) {
    if (a.tags != b.tags) return false;
    for (std::size_t i = 0; i < a.tags.size(); ++i)
        if (!equals(a.part(i), b.part(i))) return false;
    return true;
}

}  // namespace

BinaryRelation limit_in_coproduct(const MonotoneChain& c, const PosetCoproduct& y) {
    if (c.source.size() != 1) throw Error(ErrorKind::InvalidArgument, "limit_in_coproduct: source must be atomic");
    require_same(c.target.carrier(), y.poset.carrier(), "limit_in_coproduct");
    validate_chain(c);
    const TaggedCoproduct cod = y.summands();

    const CoproductDecomposition first = decompose_over_coproduct(c.entries.front(), cod);
    for (std::size_t n = 1; n < c.entries.size(); ++n)
        if (!same_split(first.decomposition, decompose_over_coproduct(c.entries[n], cod).decomposition))
            throw Error(ErrorKind::Verification,
                        "limit_in_coproduct: decomposition drift at entry " + std::to_string(n + 1));

    std::map<std::string, Matrix> fixed;
    for (std::size_t i = 0; i < first.decomposition.tags.size(); ++i)
        fixed[first.decomposition.tags[i]] = first.decomposition.bases[i];

    const AtomId& h = first.decomposition.atom;
    std::vector<MonotoneChain> parts;
    for (std::size_t i = 0; i < first.summand.size(); ++i)
        parts.push_back(MonotoneChain{atomic(static_cast<int>(first.decomposition.bases[i].cols()), h),
                                      y.parts[first.summand[i]], {}, c.tail_constant});
    for (const auto& e : c.entries) {
        const CoproductDecomposition d = decompose_over_coproduct(e, cod, &fixed);
        for (std::size_t i = 0; i < parts.size(); ++i) parts[i].entries.push_back(d.parts[i]);
    }
    std::vector<BinaryRelation> limits;
    for (const auto& p : parts) limits.push_back(compute_limit(p).limit);
    BinaryRelation out = reassemble(first.decomposition, first.summand, limits, cod);

    if (auto d = first_difference(out, compute_limit(c).limit))
        throw Error(ErrorKind::Verification, "limit_in_coproduct: disagrees with direct limit at " + where(*d));
    return out;
}

ScottReport scott_in_variable(const BinaryRelation& d, Variable which, const QuantumPoset& x, const QuantumPoset& y,
                              const QuantumPoset& z, const std::vector<MonotoneChain>& chains) {
    require_same(d.dom(), product(x.carrier(), y.carrier()), "scott_in_variable");
    require_same(d.cod(), z.carrier(), "scott_in_variable");
    require_function(d, "scott_in_variable");
    const QuantumPoset& factor = which == Variable::First ? x : y;
    const BinaryRelation other = identity(which == Variable::First ? y.carrier() : x.carrier());
    auto widen = [&](const BinaryRelation& k) {
        return compose(d, which == Variable::First ? monoidal(k, other) : monoidal(other, k));
    };

    ScottReport rep;
    for (std::size_t i = 0; i < chains.size(); ++i) {
        const MonotoneChain& c = chains[i];
        require_same(c.target.carrier(), factor.carrier(), "scott_in_variable");
        const BinaryRelation lim = compute_limit(c).limit;
        MonotoneChain wide{which == Variable::First ? product(c.source, y.carrier()) : product(x.carrier(), c.source),
                           z, {}, c.tail_constant};
        for (const auto& k : c.entries) wide.entries.push_back(widen(k));
        const LimitCheck lc = check_limit(wide, widen(lim));
        ++rep.chains;
        if (!lc.is_limit) {
            rep.passed = false;
            rep.failures.push_back("chain " + std::to_string(i + 1) + (lc.witness ? ": " + where(*lc.witness) : ""));
        }
    }
    return rep;
}

bool sub_cpo_check_finite(const QuantumSet& w, const QuantumPoset& y, const std::vector<MonotoneChain>& chains) {
    if (!is_subset(w, y.carrier())) return false;
    QuantumPoset rel;
    try {
        rel = relative_order(y, w);
    } catch (const Error&) {
        return false;
    }
    const BinaryRelation j = inclusion(w, y.carrier());
    for (const auto& c : chains) {
        MonotoneChain inner{c.source, rel, c.entries, c.tail_constant};
        const BinaryRelation lim = compute_limit(inner).limit;
        const BinaryRelation outer = compute_limit(push_forward(j, y, inner)).limit;
        if (!is_subset(range(outer), w) || !equals(outer, compose(j, lim))) return false;
    }
    return true;
}

}  // namespace qdomain
