#pragma once

// MALL⁻ sequent-calculus proofs. Principal formulas of the tensor and with
// rules sit in the last position of their premises; explicit exchange nodes
// do any rearranging. Positions are 0-based.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mall/formula.hpp"

namespace mall {

enum class RuleKind { Axiom, Exchange, Par, Tensor, PlusLeft, PlusRight, With };

class Proof {
public:
    /// ⊢ a, ~a
    static Proof axiom(std::string atom);
    /// Swaps positions k and k+1.
    static Proof exchange(std::size_t k, Proof body);
    /// Merges positions k and k+1 into (par A B) at k.
    static Proof par(std::size_t k, Proof body);
    /// ⊢ Γ,A and ⊢ Δ,B give ⊢ Γ,Δ,(tensor A B).
    static Proof tensor(Proof left, Proof right);
    /// A at k becomes (plus A other).
    static Proof plus_left(Formula other, std::size_t k, Proof body);
    /// B at k becomes (plus other B).
    static Proof plus_right(Formula other, std::size_t k, Proof body);
    /// ⊢ Γ,A and ⊢ Γ,B give ⊢ Γ,(with label A B).
    static Proof with(std::string label, Proof left, Proof right);

    RuleKind rule() const noexcept;
    /// Atom name (axiom) or label (with); empty otherwise.
    const std::string &name() const noexcept;
    std::size_t position() const noexcept;
    /// The introduced side of a plus rule.
    const Formula &side_formula() const;
    std::size_t arity() const noexcept;
    const Proof &premise(std::size_t i) const;

    /// Conclusion computed bottom-up from the rule schemas. When a schema
    /// cannot be applied (position out of range, empty premise) the node
    /// records a defect and falls back to a best-effort sequent.
    const Sequent &conclusion() const noexcept;
    const std::string &defect() const noexcept;

    /// True when both handles refer to the same node.
    bool same_node(const Proof &other) const noexcept { return node_ == other.node_; }

private:
    struct Node;
    explicit Proof(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

inline const Sequent &conclusion(const Proof &p) noexcept { return p.conclusion(); }

struct RuleViolation {
    std::vector<std::size_t> path; // child indices from the root
    std::string message;
    std::string expected;
    std::string actual;
};

/// Every schema violation in the tree; empty means the proof is valid.
std::vector<RuleViolation> validate_proof(const Proof &p);
bool is_valid(const Proof &p);
/// Throws PreconditionError describing the first violation.
void require_valid(const Proof &p);

/// Image of a conclusion occurrence in each premise (nullopt when the
/// occurrence belongs to a formula the premise does not contain).
std::vector<std::optional<AtomOccurrence>> trace_occurrence(const Proof &p, const AtomOccurrence &o);

/// Inverse direction: where a premise occurrence lands in the conclusion.
AtomOccurrence lift_occurrence(const Proof &p, std::size_t premise, const AtomOccurrence &o);

std::size_t count_with_rules(const Proof &p);
std::size_t count_nodes(const Proof &p);

std::string print_proof(const Proof &p);
std::string print_violation(const RuleViolation &v);
Proof parse_proof(std::string_view text);

} // namespace mall
