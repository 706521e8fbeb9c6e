#include "mall/bdd_slicing.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <vector>

#include "mall/error.hpp"

namespace mall {

const Bdd &BddSlicing::at(const DualPair &pair) const {
    auto it = entries.find(pair);
    if(it == entries.end())
        throw PreconditionError("pair " + print_pair(pair) + " is not a dual pair of \"" +
                                print_sequent(conclusion) + "\"");
    return it->second;
}

namespace {

using Entries = std::map<DualPair, Bdd>;
using Traced = std::vector<std::optional<AtomOccurrence>>;

const Bdd &lookup(const Entries &e, const AtomOccurrence &a, const AtomOccurrence &b) {
    return e.at(DualPair(a, b));
}

// Which part of a with conclusion an occurrence sits in.
enum class WithSide { Context, Left, Right };

WithSide with_side(const Traced &t) {
    if(t[0] && t[1])
        return WithSide::Context;
    return t[0] ? WithSide::Left : WithSide::Right;
}

Entries compute(const Proof &p) {
    Entries out;
    const std::vector<DualPair> pairs = dual_pairs(p.conclusion());
    if(p.rule() == RuleKind::Axiom) {
        for(const DualPair &pair : pairs)
            out.emplace(pair, Bdd::one());
        return out;
    }

    std::vector<Entries> premises;
    premises.reserve(p.arity());
    for(std::size_t i = 0; i < p.arity(); ++i)
        premises.push_back(compute(p.premise(i)));

    for(const DualPair &pair : pairs) {
        const Traced a = trace_occurrence(p, pair.first());
        const Traced b = trace_occurrence(p, pair.second());
        switch(p.rule()) {
        case RuleKind::Axiom:
            break;
        case RuleKind::Exchange:
        case RuleKind::Par:
        case RuleKind::PlusLeft:
        case RuleKind::PlusRight:
            out.emplace(pair, a[0] && b[0] ? lookup(premises[0], *a[0], *b[0]) : Bdd::zero());
            break;
        case RuleKind::Tensor:
            if(a[0] && b[0])
                out.emplace(pair, lookup(premises[0], *a[0], *b[0]));
            else if(a[1] && b[1])
                out.emplace(pair, lookup(premises[1], *a[1], *b[1]));
            else
                out.emplace(pair, Bdd::zero());
            break;
        case RuleKind::With: {
            const WithSide sa = with_side(a);
            const WithSide sb = with_side(b);
            const bool in_left = sa == WithSide::Left || sb == WithSide::Left;
            const bool in_right = sa == WithSide::Right || sb == WithSide::Right;
            const std::string &x = p.name();
            if(in_left && in_right)
                out.emplace(pair, Bdd::zero());
            else if(in_left)
                out.emplace(pair, Bdd::ite(x, lookup(premises[0], *a[0], *b[0]), Bdd::zero()));
            else if(in_right)
                out.emplace(pair, Bdd::ite(x, Bdd::zero(), lookup(premises[1], *a[1], *b[1])));
            else
                out.emplace(pair, Bdd::ite(x, lookup(premises[0], *a[0], *b[0]),
                                           lookup(premises[1], *a[1], *b[1])));
            break;
        }
        }
    }
    return out;
}

using MaybeOcc = std::optional<AtomOccurrence>;

Traced trace_or_absent(const Proof &p, const MaybeOcc &o) {
    if(!o)
        return Traced(p.arity());
    return trace_occurrence(p, *o);
}

Bdd translate(const Proof &p, const MaybeOcc &a, const MaybeOcc &b) {
    if(p.rule() == RuleKind::Axiom)
        return a && b ? Bdd::one() : Bdd::zero();

    const Traced ta = trace_or_absent(p, a);
    const Traced tb = trace_or_absent(p, b);
    switch(p.rule()) {
    case RuleKind::Axiom:
        break;
    case RuleKind::Exchange:
        return translate(p.premise(0), ta[0], tb[0]);
    case RuleKind::Par:
    case RuleKind::PlusLeft:
    case RuleKind::PlusRight:
        return Bdd::dont_care(Selector::constant(true), translate(p.premise(0), ta[0], tb[0]));
    case RuleKind::Tensor: {
        // Pairs split across the premises, or absent, take the left branch.
        const bool right_side = ta[1] && tb[1];
        return Bdd::ite(Selector::constant(!right_side), translate(p.premise(0), ta[0], tb[0]),
                        translate(p.premise(1), ta[1], tb[1]));
    }
    case RuleKind::With:
        return Bdd::ite(p.name(), translate(p.premise(0), ta[0], tb[0]), translate(p.premise(1), ta[1], tb[1]));
    }
    return Bdd::zero();
}

void require_same_conclusion(const Proof &p, const Proof &q) {
    if(!(p.conclusion() == q.conclusion()))
        throw PreconditionError("proofs have different conclusions: \"" + print_sequent(p.conclusion()) +
                                "\" vs \"" + print_sequent(q.conclusion()) + "\"");
}

} // namespace

BddSlicing bdd_slicing(const Proof &p) {
    require_valid(p);
    return {p.conclusion(), compute(p)};
}

Bdd bdd_slicing_local(const Proof &p, const DualPair &pair) {
    require_valid(p);
    const std::vector<DualPair> pairs = dual_pairs(p.conclusion());
    if(!std::binary_search(pairs.begin(), pairs.end(), pair))
        throw PreconditionError("pair " + print_pair(pair) + " is not a dual pair of \"" +
                                print_sequent(p.conclusion()) + "\"");
    return translate(p, pair.first(), pair.second());
}

bool proof_equiv(const Proof &p, const Proof &q, const ProofEquivOptions &options) {
    require_valid(p);
    require_valid(q);
    require_same_conclusion(p, q);

    const std::vector<DualPair> pairs = dual_pairs(p.conclusion());
    std::vector<Bdd> left, right;
    left.reserve(pairs.size());
    right.reserve(pairs.size());
    if(options.local) {
        for(const DualPair &pair : pairs) {
            left.push_back(translate(p, pair.first(), pair.second()));
            right.push_back(translate(q, pair.first(), pair.second()));
        }
    } else {
        const Entries ep = compute(p);
        const Entries eq = compute(q);
        for(const DualPair &pair : pairs) {
            left.push_back(ep.at(pair));
            right.push_back(eq.at(pair));
        }
    }

    const auto n = static_cast<std::ptrdiff_t>(pairs.size());
    if(options.exec == Exec::Serial) {
        for(std::ptrdiff_t i = 0; i < n; ++i)
            if(!bdd_equiv(left[static_cast<std::size_t>(i)], right[static_cast<std::size_t>(i)], Exec::Serial))
                return false;
        return true;
    }
    std::atomic<bool> ok{true};
#pragma omp parallel for schedule(dynamic)
    for(std::ptrdiff_t i = 0; i < n; ++i) {
        if(!ok.load(std::memory_order_relaxed))
            continue;
        const auto k = static_cast<std::size_t>(i);
        if(!bdd_equiv(left[k], right[k], Exec::Serial))
            ok.store(false, std::memory_order_relaxed);
    }
    return ok.load();
}

bool proof_equiv_oracle(const Proof &p, const Proof &q, const SlicingOptions &options) {
    require_valid(p);
    require_valid(q);
    require_same_conclusion(p, q);
    return slicings_equal(slicing(p, options), slicing(q, options));
}

} // namespace mall
