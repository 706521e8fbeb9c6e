#pragma once

// Two constructive reductions: ordered BDDs into MALL⁻ proofs whose
// equivalence mirrors BDD equivalence, and vertex order on a directed line
// into a pair of ordered BDDs.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mall/bdd.hpp"
#include "mall/formula.hpp"
#include "mall/proof.hpp"

namespace mall {

/// Atom standing for the encoded function (the formula is (plus b b)).
inline constexpr const char *kValueAtom = "b";
/// Atom of the i-th with connective, 1-based: "a1", "a2", ...
std::string level_atom(std::size_t i);

/// (plus b b), T_n, (with x1 a1 a1), ..., (with xn an an) where
/// T_0 = ~b and T_i = (tensor T_{i-1} ~ai). `labels[i-1]` labels the i-th
/// with. Throws PreconditionError on a size mismatch or repeated labels.
Sequent encoding_sequent(std::size_t n, const std::vector<std::string> &labels);

/// Labels of encoding_sequent for an order listed outermost first.
std::vector<std::string> encoding_labels(const VarOrder &order);

/// Proof of encoding_sequent(|order|, encoding_labels(order)) encoding phi.
/// Throws PreconditionError unless is_obdd(phi, order).
Proof encode_obdd(const Bdd &phi, const VarOrder &order);

struct ClaimResult {
    std::string claim;
    bool passed = false;
    std::string detail;
};

struct EncodingReport {
    std::vector<ClaimResult> claims;
    bool all_passed() const;
};

/// Checks the BDD slicing of encode_obdd(phi, order) against phi: the linked
/// copy of b carries phi itself (structurally, once DontCare nodes and
/// constant selectors are collapsed), the other copy carries a BDD equivalent
/// to the negation, and the two copies of ai carry xi and its negation.
EncodingReport check_encoding_slicing(const Bdd &phi, const VarOrder &order);

struct LineGraph {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    std::string begin;
    std::string exit;
};

struct OrdInstance {
    LineGraph graph;
    std::string f;
    std::string s;
};

/// Vertices from begin to exit. Throws PreconditionError unless the graph
/// is a line.
std::vector<std::string> line_order(const LineGraph &g);

/// Does f come strictly before s along the line?
bool ord_oracle(const OrdInstance &inst);

struct OrdReduction {
    Bdd rewired;
    Bdd plain;
    VarOrder order;
};

/// Three-copy gadget: plain and rewired diagrams are equivalent iff f < s.
/// Rejects instances where f or s is the begin or exit vertex.
OrdReduction ord_to_obdd(const OrdInstance &inst);

} // namespace mall
