#pragma once

// MALL⁻ formulas, sequents and atom-occurrence addressing.

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace mall {

class Lexer;

enum class FormulaKind { Atom, DualAtom, Par, Tensor, Plus, With };

/// Immutable formula tree. Copies share structure; equality is structural.
class Formula {
public:
    static Formula atom(std::string name);
    static Formula dual(std::string name);
    static Formula par(Formula left, Formula right);
    static Formula tensor(Formula left, Formula right);
    static Formula plus(Formula left, Formula right);
    static Formula with(std::string label, Formula left, Formula right);

    FormulaKind kind() const noexcept;
    bool is_literal() const noexcept;
    /// Atom name for literals, label for With nodes, empty otherwise.
    const std::string &name() const noexcept;
    const Formula &left() const;
    const Formula &right() const;

    /// Subformula reached by following an l/r path; throws PreconditionError
    /// when the path leaves the tree.
    const Formula &at(std::string_view path) const;

    /// Labels of all With nodes, in left-to-right preorder.
    void collect_labels(std::vector<std::string> &out) const;

    friend bool operator==(const Formula &a, const Formula &b);

private:
    struct Node;
    Formula() = default;
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

class Sequent {
public:
    Sequent() = default;
    explicit Sequent(std::vector<Formula> formulas) : formulas_(std::move(formulas)) {}

    std::size_t size() const noexcept { return formulas_.size(); }
    bool empty() const noexcept { return formulas_.empty(); }
    const Formula &operator[](std::size_t i) const { return formulas_.at(i); }
    const Formula &back() const { return formulas_.back(); }
    auto begin() const noexcept { return formulas_.begin(); }
    auto end() const noexcept { return formulas_.end(); }
    const std::vector<Formula> &formulas() const noexcept { return formulas_; }

    /// All With labels in the sequent (with repetitions, if any).
    std::vector<std::string> labels() const;
    /// Labels that occur more than once, sorted.
    std::vector<std::string> duplicate_labels() const;

    friend bool operator==(const Sequent &, const Sequent &) = default;

private:
    std::vector<Formula> formulas_;
};

/// Position of an atom leaf: formula index in the sequent plus an l/r path.
struct AtomOccurrence {
    std::size_t formula = 0;
    std::string path;

    friend auto operator<=>(const AtomOccurrence &, const AtomOccurrence &) = default;
    friend bool operator==(const AtomOccurrence &, const AtomOccurrence &) = default;
};

/// Unordered pair of dual atom occurrences, stored with first < second.
class DualPair {
public:
    DualPair(AtomOccurrence a, AtomOccurrence b);

    const AtomOccurrence &first() const noexcept { return first_; }
    const AtomOccurrence &second() const noexcept { return second_; }

    friend auto operator<=>(const DualPair &, const DualPair &) = default;
    friend bool operator==(const DualPair &, const DualPair &) = default;

private:
    AtomOccurrence first_;
    AtomOccurrence second_;
};

/// Resolve an occurrence; throws PreconditionError if out of range or if the
/// addressed node is not a literal.
const Formula &resolve(const Sequent &s, const AtomOccurrence &o);

/// Every atom leaf of the sequent, in (formula, path) order.
std::vector<AtomOccurrence> atom_occurrences(const Sequent &s);

/// All pairs {Atom n, DualAtom n} over the sequent, sorted.
std::vector<DualPair> dual_pairs(const Sequent &s);

bool is_identifier(std::string_view s) noexcept;

std::string print_formula(const Formula &f);
std::string print_sequent(const Sequent &s);
std::string print_occurrence(const AtomOccurrence &o);
std::string print_pair(const DualPair &p);

Formula parse_formula(std::string_view text);
/// Read one formula from a token stream (used by the proof reader).
Formula read_formula(Lexer &lex);
Sequent parse_sequent(std::string_view text);

} // namespace mall
