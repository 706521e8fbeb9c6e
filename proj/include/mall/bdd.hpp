#pragma once

// Tree-shaped binary decision diagrams (no sharing, no reduction) with
// IfThenElse and DontCare nodes whose selectors may be constants.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace mall {

class Selector {
public:
    static Selector variable(std::string name);
    static Selector constant(bool value);

    bool is_constant() const noexcept { return !name_.has_value(); }
    bool constant_value() const noexcept { return value_; }
    /// Variable name; empty for constants.
    const std::string &name() const noexcept;

    friend bool operator==(const Selector &, const Selector &) = default;

private:
    Selector() = default;
    std::optional<std::string> name_;
    bool value_ = false;
};

enum class BddKind { Zero, One, Ite, DontCare };

class Bdd {
public:
    static Bdd zero();
    static Bdd one();
    static Bdd constant(bool value) { return value ? one() : zero(); }
    static Bdd ite(Selector x, Bdd then_branch, Bdd else_branch);
    static Bdd ite(std::string var, Bdd then_branch, Bdd else_branch);
    static Bdd dont_care(Selector x, Bdd body);
    static Bdd dont_care(std::string var, Bdd body);

    BddKind kind() const noexcept;
    bool is_leaf() const noexcept { return kind() == BddKind::Zero || kind() == BddKind::One; }
    const Selector &selector() const;
    const Bdd &then_branch() const;
    const Bdd &else_branch() const;
    /// Child of a DontCare node.
    const Bdd &body() const { return then_branch(); }

    friend bool operator==(const Bdd &a, const Bdd &b);

private:
    struct Node;
    Bdd() = default;
    explicit Bdd(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Assignment of bits to variable names.
class Valuation {
public:
    Valuation() = default;
    Valuation(std::initializer_list<std::pair<const std::string, bool>> init) : bits_(init) {}

    void set(const std::string &var, bool value) { bits_[var] = value; }
    bool contains(const std::string &var) const { return bits_.count(var) != 0; }
    /// Throws PreconditionError for unbound variables.
    bool get(const std::string &var) const;
    const std::map<std::string, bool> &bits() const noexcept { return bits_; }

private:
    std::map<std::string, bool> bits_;
};

struct Literal {
    std::string var;
    bool positive = true;

    friend auto operator<=>(const Literal &, const Literal &) = default;
    friend bool operator==(const Literal &, const Literal &) = default;
};

/// Conjunction of literals, at most one per variable, sorted by name.
class Monomial {
public:
    Monomial() = default;
    /// Throws PreconditionError if a variable occurs with both signs.
    explicit Monomial(std::vector<Literal> literals);

    const std::vector<Literal> &literals() const noexcept { return literals_; }
    bool empty() const noexcept { return literals_.empty(); }
    std::optional<bool> sign_of(std::string_view var) const;

    friend bool operator==(const Monomial &, const Monomial &) = default;

private:
    std::vector<Literal> literals_;
};

/// Variable order listed outermost first.
class VarOrder {
public:
    VarOrder() = default;
    /// Throws PreconditionError on repeated names.
    explicit VarOrder(std::vector<std::string> variables);

    const std::vector<std::string> &variables() const noexcept { return variables_; }
    std::size_t size() const noexcept { return variables_.size(); }

private:
    std::vector<std::string> variables_;
};

enum class Exec { Parallel, Serial };

struct OracleOptions {
    std::size_t max_vars = 22;
    Exec exec = Exec::Parallel;
};

bool eval(const Bdd &b, const Valuation &v);
bool eval(const Monomial &m, const Valuation &v);

/// Every variable used as a selector (IfThenElse or DontCare).
std::set<std::string> variables(const Bdd &b);

/// Exhaustive check over all 2^|vars| valuations. Throws CapExceeded when
/// |vars| > max_vars and PreconditionError when vars misses a variable.
bool bdd_equiv_oracle(const Bdd &a, const Bdd &b, const std::set<std::string> &vars,
                      const OracleOptions &options = {});
/// Same, over the union of both variable sets.
bool bdd_equiv_oracle(const Bdd &a, const Bdd &b, const OracleOptions &options = {});

/// Swaps Zero and One leaves; selectors are untouched.
Bdd negate(const Bdd &b);

/// One monomial per reachable One leaf, in then-before-else order. Walks that
/// contradict themselves (constant selector on the dead side, or a variable
/// tested twice with opposite outcomes) are unsatisfiable and dropped.
std::vector<Monomial> to_monomials(const Bdd &b);

bool monomials_conflict(const Monomial &a, const Monomial &b);

/// Decides a ~ b by checking that every monomial of a conflicts with every
/// monomial of negate(b), and symmetrically.
bool bdd_equiv(const Bdd &a, const Bdd &b, Exec exec = Exec::Parallel);

bool is_read_once(const Bdd &b);
bool is_obdd(const Bdd &b, const VarOrder &order);

/// Removes DontCare nodes and resolves IfThenElse on constant selectors.
Bdd collapse_constants(const Bdd &b);

std::size_t bdd_size(const Bdd &b);

std::string print_bdd(const Bdd &b);
std::string print_monomial(const Monomial &m);
std::string print_dnf(const std::vector<Monomial> &ms);
Bdd parse_bdd(std::string_view text);

} // namespace mall
