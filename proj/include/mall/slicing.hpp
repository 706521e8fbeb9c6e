#pragma once

// Explicit slicing semantics: a proof denotes the set of axiom linkings of its
// additive slices. Exponential in the number of with labels, so it is guarded
// by a cap and used as a ground-truth oracle.

#include <cstddef>
#include <set>
#include <vector>

#include "mall/formula.hpp"
#include "mall/proof.hpp"

namespace mall {

/// A set of dual pairs over one conclusion, kept sorted.
class Linking {
public:
    Linking() = default;
    explicit Linking(std::vector<DualPair> pairs);

    const std::vector<DualPair> &pairs() const noexcept { return pairs_; }
    std::size_t size() const noexcept { return pairs_.size(); }
    bool contains(const DualPair &p) const;

    /// Union of two linkings with disjoint occurrences.
    static Linking join(const Linking &a, const Linking &b);

    friend auto operator<=>(const Linking &, const Linking &) = default;
    friend bool operator==(const Linking &, const Linking &) = default;

private:
    std::vector<DualPair> pairs_;
};

struct Slicing {
    Sequent conclusion;
    std::set<Linking> linkings;
};

struct SlicingOptions {
    std::size_t max_withs = 20;
};

/// Throws PreconditionError on invalid proofs and CapExceeded when the
/// conclusion carries more than `max_withs` with labels.
Slicing slicing(const Proof &p, const SlicingOptions &options = {});

/// Set equality; throws PreconditionError when the conclusions differ.
bool slicings_equal(const Slicing &a, const Slicing &b);

} // namespace mall
