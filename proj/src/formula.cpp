#include "mall/formula.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "mall/error.hpp"
#include "mall/lexer.hpp"

namespace mall {

struct Formula::Node {
    FormulaKind kind;
    std::string name;
    Formula left;
    Formula right;
};

Formula Formula::atom(std::string name) {
    return Formula(std::make_shared<const Node>(Node{FormulaKind::Atom, std::move(name), {}, {}}));
}

Formula Formula::dual(std::string name) {
    return Formula(std::make_shared<const Node>(Node{FormulaKind::DualAtom, std::move(name), {}, {}}));
}

Formula Formula::par(Formula left, Formula right) {
    return Formula(std::make_shared<const Node>(Node{FormulaKind::Par, {}, std::move(left), std::move(right)}));
}

Formula Formula::tensor(Formula left, Formula right) {
    return Formula(std::make_shared<const Node>(Node{FormulaKind::Tensor, {}, std::move(left), std::move(right)}));
}

Formula Formula::plus(Formula left, Formula right) {
    return Formula(std::make_shared<const Node>(Node{FormulaKind::Plus, {}, std::move(left), std::move(right)}));
}

Formula Formula::with(std::string label, Formula left, Formula right) {
    return Formula(std::make_shared<const Node>(
        Node{FormulaKind::With, std::move(label), std::move(left), std::move(right)}));
}

FormulaKind Formula::kind() const noexcept { return node_->kind; }

bool Formula::is_literal() const noexcept {
    return node_->kind == FormulaKind::Atom || node_->kind == FormulaKind::DualAtom;
}

const std::string &Formula::name() const noexcept { return node_->name; }

const Formula &Formula::left() const {
    if(is_literal())
        throw PreconditionError("literal has no subformulas");
    return node_->left;
}

const Formula &Formula::right() const {
    if(is_literal())
        throw PreconditionError("literal has no subformulas");
    return node_->right;
}

const Formula &Formula::at(std::string_view path) const {
    const Formula *f = this;
    for(char c : path) {
        if(f->is_literal())
            throw PreconditionError("occurrence path descends below a literal");
        if(c == 'l')
            f = &f->node_->left;
        else if(c == 'r')
            f = &f->node_->right;
        else
            throw PreconditionError("occurrence path must be over {l, r}");
    }
    return *f;
}

void Formula::collect_labels(std::vector<std::string> &out) const {
    if(is_literal())
        return;
    if(kind() == FormulaKind::With)
        out.push_back(name());
    node_->left.collect_labels(out);
    node_->right.collect_labels(out);
}

bool operator==(const Formula &a, const Formula &b) {
    if(a.node_ == b.node_)
        return true;
    if(a.kind() != b.kind() || a.name() != b.name())
        return false;
    if(a.is_literal())
        return true;
    return a.node_->left == b.node_->left && a.node_->right == b.node_->right;
}

std::vector<std::string> Sequent::labels() const {
    std::vector<std::string> out;
    for(const Formula &f : formulas_)
        f.collect_labels(out);
    return out;
}

std::vector<std::string> Sequent::duplicate_labels() const {
    std::map<std::string, int> count;
    for(const std::string &l : labels())
        ++count[l];
    std::vector<std::string> dups;
    for(const auto &[label, n] : count)
        if(n > 1)
            dups.push_back(label);
    return dups;
}

DualPair::DualPair(AtomOccurrence a, AtomOccurrence b) {
    if(b < a)
        std::swap(a, b);
    first_ = std::move(a);
    second_ = std::move(b);
}

const Formula &resolve(const Sequent &s, const AtomOccurrence &o) {
    if(o.formula >= s.size())
        throw PreconditionError("occurrence " + print_occurrence(o) + " is out of range");
    const Formula &f = s[o.formula].at(o.path);
    if(!f.is_literal())
        throw PreconditionError("occurrence " + print_occurrence(o) + " is not an atom");
    return f;
}

namespace {

void collect_leaves(const Formula &f, std::size_t index, std::string &path,
                    std::vector<AtomOccurrence> &out) {
    if(f.is_literal()) {
        out.push_back({index, path});
        return;
    }
    path.push_back('l');
    collect_leaves(f.left(), index, path, out);
    path.back() = 'r';
    collect_leaves(f.right(), index, path, out);
    path.pop_back();
}

} // namespace

std::vector<AtomOccurrence> atom_occurrences(const Sequent &s) {
    std::vector<AtomOccurrence> out;
    std::string path;
    for(std::size_t i = 0; i < s.size(); ++i)
        collect_leaves(s[i], i, path, out);
    return out;
}

std::vector<DualPair> dual_pairs(const Sequent &s) {
    // Leaves come out in (formula, path) order, so i < j is already canonical.
    const std::vector<AtomOccurrence> leaves = atom_occurrences(s);
    std::vector<DualPair> pairs;
    for(std::size_t i = 0; i < leaves.size(); ++i) {
        const Formula &a = resolve(s, leaves[i]);
        for(std::size_t j = i + 1; j < leaves.size(); ++j) {
            const Formula &b = resolve(s, leaves[j]);
            if(a.name() == b.name() && a.kind() != b.kind())
                pairs.emplace_back(leaves[i], leaves[j]);
        }
    }
    assert(std::is_sorted(pairs.begin(), pairs.end()));
    return pairs;
}

bool is_identifier(std::string_view s) noexcept {
    if(s.empty())
        return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    });
}

namespace {

void print_to(const Formula &f, std::string &out) {
    switch(f.kind()) {
    case FormulaKind::Atom:
        out += f.name();
        return;
    case FormulaKind::DualAtom:
        out += '~';
        out += f.name();
        return;
    case FormulaKind::Par: out += "(par "; break;
    case FormulaKind::Tensor: out += "(tensor "; break;
    case FormulaKind::Plus: out += "(plus "; break;
    case FormulaKind::With:
        out += "(with ";
        out += f.name();
        out += ' ';
        break;
    }
    print_to(f.left(), out);
    out += ' ';
    print_to(f.right(), out);
    out += ')';
}

} // namespace

std::string print_formula(const Formula &f) {
    std::string out;
    print_to(f, out);
    return out;
}

std::string print_sequent(const Sequent &s) {
    std::string out;
    for(std::size_t i = 0; i < s.size(); ++i) {
        if(i)
            out += ", ";
        print_to(s[i], out);
    }
    return out;
}

std::string print_occurrence(const AtomOccurrence &o) {
    return "(" + std::to_string(o.formula) + ",\"" + o.path + "\")";
}

std::string print_pair(const DualPair &p) {
    return "{" + print_occurrence(p.first()) + "," + print_occurrence(p.second()) + "}";
}

Formula read_formula(Lexer &lex) {
    const Token t = lex.next();
    switch(t.kind) {
    case TokenKind::Ident:
        return Formula::atom(std::string(t.text));
    case TokenKind::Tilde:
        return Formula::dual(std::string(lex.expect(TokenKind::Ident, "an atom name").text));
    case TokenKind::LParen:
        break;
    default:
        lex.fail(t, "expected a formula, found " + describe(t));
    }
    const Token head = lex.expect(TokenKind::Ident, "a connective");
    Formula result = Formula::atom("_");
    if(head.text == "with") {
        std::string label(lex.expect(TokenKind::Ident, "a label").text);
        Formula l = read_formula(lex);
        Formula r = read_formula(lex);
        result = Formula::with(std::move(label), std::move(l), std::move(r));
    } else if(head.text == "par" || head.text == "tensor" || head.text == "plus") {
        Formula l = read_formula(lex);
        Formula r = read_formula(lex);
        if(head.text == "par")
            result = Formula::par(std::move(l), std::move(r));
        else if(head.text == "tensor")
            result = Formula::tensor(std::move(l), std::move(r));
        else
            result = Formula::plus(std::move(l), std::move(r));
    } else {
        lex.fail(head, "unknown connective " + describe(head));
    }
    lex.expect(TokenKind::RParen, "')'");
    return result;
}

Formula parse_formula(std::string_view text) {
    Lexer lex(text);
    Formula f = read_formula(lex);
    lex.expect_end();
    return f;
}

Sequent parse_sequent(std::string_view text) {
    Lexer lex(text);
    std::vector<Formula> formulas;
    if(lex.peek().kind == TokenKind::End)
        return Sequent{};
    formulas.push_back(read_formula(lex));
    while(lex.peek().kind == TokenKind::Comma) {
        lex.next();
        formulas.push_back(read_formula(lex));
    }
    lex.expect_end();
    return Sequent(std::move(formulas));
}

} // namespace mall
