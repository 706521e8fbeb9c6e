#pragma once

// BDD slicings: one read-once BDD over the with labels per dual pair of the
// conclusion. Equivalence of proofs reduces to entrywise BDD equivalence.

#include <map>

#include "mall/bdd.hpp"
#include "mall/formula.hpp"
#include "mall/proof.hpp"
#include "mall/slicing.hpp"

namespace mall {

struct BddSlicing {
    Sequent conclusion;
    std::map<DualPair, Bdd> entries; // total on dual_pairs(conclusion)

    const Bdd &at(const DualPair &pair) const;
};

/// Inductive construction, rule by rule. Pairs split across the two sides of
/// a with (one atom under each side) get 0.
BddSlicing bdd_slicing(const Proof &p);

/// Node-by-node translation of the proof tree for a single pair: the
/// matching axiom becomes 1, other axioms 0, par/plus become DontCare(1, .),
/// tensor becomes Ite(1|0, ., .) by the side holding the pair, with x
/// becomes Ite(x, ., .), exchange vanishes. Equivalent to bdd_slicing(p)[pair].
Bdd bdd_slicing_local(const Proof &p, const DualPair &pair);

struct ProofEquivOptions {
    Exec exec = Exec::Parallel;
    /// Build entries with bdd_slicing_local instead of bdd_slicing.
    bool local = false;
};

/// Decides proof equivalence through BDD slicings. Throws PreconditionError
/// on invalid proofs or differing conclusions.
bool proof_equiv(const Proof &p, const Proof &q, const ProofEquivOptions &options = {});

/// Decides proof equivalence by comparing explicit slicings.
bool proof_equiv_oracle(const Proof &p, const Proof &q, const SlicingOptions &options = {});

} // namespace mall
