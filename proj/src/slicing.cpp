#include "mall/slicing.hpp"

#include <algorithm>
#include <iterator>

#include "mall/error.hpp"

namespace mall {

Linking::Linking(std::vector<DualPair> pairs) : pairs_(std::move(pairs)) {
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

bool Linking::contains(const DualPair &p) const {
    return std::binary_search(pairs_.begin(), pairs_.end(), p);
}

Linking Linking::join(const Linking &a, const Linking &b) {
    Linking out;
    out.pairs_.reserve(a.size() + b.size());
    std::set_union(a.pairs_.begin(), a.pairs_.end(), b.pairs_.begin(), b.pairs_.end(),
                   std::back_inserter(out.pairs_));
    return out;
}

namespace {

using LinkingSet = std::set<Linking>;

LinkingSet relocate(const Proof &p, std::size_t premise, const LinkingSet &in) {
    LinkingSet out;
    for(const Linking &l : in) {
        std::vector<DualPair> moved;
        moved.reserve(l.size());
        for(const DualPair &pair : l.pairs())
            moved.emplace_back(lift_occurrence(p, premise, pair.first()),
                               lift_occurrence(p, premise, pair.second()));
        out.insert(Linking(std::move(moved)));
    }
    return out;
}

LinkingSet compute(const Proof &p) {
    switch(p.rule()) {
    case RuleKind::Axiom:
        return {Linking({DualPair({0, ""}, {1, ""})})};
    case RuleKind::Exchange:
    case RuleKind::Par:
    case RuleKind::PlusLeft:
    case RuleKind::PlusRight:
        return relocate(p, 0, compute(p.premise(0)));
    case RuleKind::Tensor: {
        const LinkingSet left = relocate(p, 0, compute(p.premise(0)));
        const LinkingSet right = relocate(p, 1, compute(p.premise(1)));
        LinkingSet out;
        for(const Linking &l : left)
            for(const Linking &r : right)
                out.insert(Linking::join(l, r));
        return out;
    }
    case RuleKind::With: {
        LinkingSet out = relocate(p, 0, compute(p.premise(0)));
        out.merge(relocate(p, 1, compute(p.premise(1))));
        return out;
    }
    }
    return {};
}

} // namespace

Slicing slicing(const Proof &p, const SlicingOptions &options) {
    require_valid(p);
    const std::size_t withs = p.conclusion().labels().size();
    if(withs > options.max_withs)
        throw CapExceeded("slicing refused: " + std::to_string(withs) + " with connectives exceed the cap of " +
                          std::to_string(options.max_withs));
    return {p.conclusion(), compute(p)};
}

bool slicings_equal(const Slicing &a, const Slicing &b) {
    if(!(a.conclusion == b.conclusion))
        throw PreconditionError("slicings are over different conclusions: \"" + print_sequent(a.conclusion) +
                                "\" vs \"" + print_sequent(b.conclusion) + "\"");
    return a.linkings == b.linkings;
}

} // namespace mall
