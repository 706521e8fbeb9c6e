#include "mall/proof.hpp"

#include "mall/error.hpp"
#include "mall/lexer.hpp"

namespace mall {

struct Proof::Node {
    RuleKind rule;
    std::string name;
    std::size_t position = 0;
    std::optional<Formula> side;
    std::vector<Proof> premises;
    Sequent conclusion;
    std::string defect;
};

namespace {

std::vector<Formula> without_last(const Sequent &s) {
    return {s.begin(), s.end() - 1};
}

} // namespace

Proof Proof::axiom(std::string atom) {
    auto n = std::make_shared<Node>();
    n->rule = RuleKind::Axiom;
    if(!is_identifier(atom))
        n->defect = "axiom atom '" + atom + "' is not an identifier";
    n->conclusion = Sequent({Formula::atom(atom), Formula::dual(atom)});
    n->name = std::move(atom);
    return Proof(std::move(n));
}

Proof Proof::exchange(std::size_t k, Proof body) {
    auto n = std::make_shared<Node>();
    n->rule = RuleKind::Exchange;
    n->position = k;
    std::vector<Formula> c = body.conclusion().formulas();
    if(k + 1 < c.size())
        std::swap(c[k], c[k + 1]);
    else
        n->defect = "exchange position " + std::to_string(k) + " out of range";
    n->conclusion = Sequent(std::move(c));
    n->premises.push_back(std::move(body));
    return Proof(std::move(n));
}

Proof Proof::par(std::size_t k, Proof body) {
    auto n = std::make_shared<Node>();
    n->rule = RuleKind::Par;
    n->position = k;
    std::vector<Formula> c = body.conclusion().formulas();
    if(k + 1 < c.size()) {
        c[k] = Formula::par(c[k], c[k + 1]);
        c.erase(c.begin() + static_cast<std::ptrdiff_t>(k) + 1);
    } else {
        n->defect = "par position " + std::to_string(k) + " out of range";
    }
    n->conclusion = Sequent(std::move(c));
    n->premises.push_back(std::move(body));
    return Proof(std::move(n));
}

Proof Proof::tensor(Proof left, Proof right) {
    auto n = std::make_shared<Node>();
    n->rule = RuleKind::Tensor;
    const Sequent &l = left.conclusion();
    const Sequent &r = right.conclusion();
    std::vector<Formula> c;
    if(l.empty() || r.empty()) {
        n->defect = "tensor premise has an empty conclusion";
        c = l.formulas();
        c.insert(c.end(), r.begin(), r.end());
    } else {
        c = without_last(l);
        c.insert(c.end(), r.begin(), r.end() - 1);
        c.push_back(Formula::tensor(l.back(), r.back()));
    }
    n->conclusion = Sequent(std::move(c));
    n->premises.push_back(std::move(left));
    n->premises.push_back(std::move(right));
    return Proof(std::move(n));
}

Proof Proof::plus_left(Formula other, std::size_t k, Proof body) {
    auto n = std::make_shared<Node>();
    n->rule = RuleKind::PlusLeft;
    n->position = k;
    std::vector<Formula> c = body.conclusion().formulas();
    if(k < c.size())
        c[k] = Formula::plus(c[k], other);
    else
        n->defect = "plus position " + std::to_string(k) + " out of range";
    n->side = std::move(other);
    n->conclusion = Sequent(std::move(c));
    n->premises.push_back(std::move(body));
    return Proof(std::move(n));
}

Proof Proof::plus_right(Formula other, std::size_t k, Proof body) {
    auto n = std::make_shared<Node>();
    n->rule = RuleKind::PlusRight;
    n->position = k;
    std::vector<Formula> c = body.conclusion().formulas();
    if(k < c.size())
        c[k] = Formula::plus(other, c[k]);
    else
        n->defect = "plus position " + std::to_string(k) + " out of range";
    n->side = std::move(other);
    n->conclusion = Sequent(std::move(c));
    n->premises.push_back(std::move(body));
    return Proof(std::move(n));
}

Proof Proof::with(std::string label, Proof left, Proof right) {
    auto n = std::make_shared<Node>();
    n->rule = RuleKind::With;
    const Sequent &l = left.conclusion();
    const Sequent &r = right.conclusion();
    if(!is_identifier(label))
        n->defect = "with label '" + label + "' is not an identifier";
    if(l.empty() || r.empty()) {
        n->defect = "with premise has an empty conclusion";
        n->conclusion = l;
    } else {
        std::vector<Formula> c = without_last(l);
        c.push_back(Formula::with(label, l.back(), r.back()));
        n->conclusion = Sequent(std::move(c));
    }
    n->name = std::move(label);
    n->premises.push_back(std::move(left));
    n->premises.push_back(std::move(right));
    return Proof(std::move(n));
}

RuleKind Proof::rule() const noexcept { return node_->rule; }
const std::string &Proof::name() const noexcept { return node_->name; }
std::size_t Proof::position() const noexcept { return node_->position; }

const Formula &Proof::side_formula() const {
    if(!node_->side)
        throw PreconditionError("only plus rules carry a side formula");
    return *node_->side;
}

std::size_t Proof::arity() const noexcept { return node_->premises.size(); }
const Proof &Proof::premise(std::size_t i) const { return node_->premises.at(i); }
const Sequent &Proof::conclusion() const noexcept { return node_->conclusion; }
const std::string &Proof::defect() const noexcept { return node_->defect; }

namespace {

void validate_node(const Proof &p, std::vector<std::size_t> &path, std::vector<RuleViolation> &out) {
    if(!p.defect().empty())
        out.push_back({path, p.defect(), {}, print_sequent(p.conclusion())});
    if(p.rule() == RuleKind::With && p.defect().empty()) {
        const Sequent &l = p.premise(0).conclusion();
        const Sequent &r = p.premise(1).conclusion();
        const Sequent lctx(without_last(l));
        const Sequent rctx(without_last(r));
        if(!(lctx == rctx))
            out.push_back({path, "with premises do not share their context",
                           print_sequent(lctx), print_sequent(rctx)});
    }
    for(std::size_t i = 0; i < p.arity(); ++i) {
        path.push_back(i);
        validate_node(p.premise(i), path, out);
        path.pop_back();
    }
}

} // namespace

std::vector<RuleViolation> validate_proof(const Proof &p) {
    std::vector<RuleViolation> out;
    std::vector<std::size_t> path;
    validate_node(p, path, out);
    for(const std::string &label : p.conclusion().duplicate_labels())
        out.push_back({{}, "duplicate with label " + label, "pairwise distinct labels",
                       print_sequent(p.conclusion())});
    return out;
}

bool is_valid(const Proof &p) { return validate_proof(p).empty(); }

void require_valid(const Proof &p) {
    const auto violations = validate_proof(p);
    if(!violations.empty())
        throw PreconditionError("invalid proof: " + print_violation(violations.front()));
}

std::vector<std::optional<AtomOccurrence>> trace_occurrence(const Proof &p, const AtomOccurrence &o) {
    resolve(p.conclusion(), o);
    if(!p.defect().empty())
        throw PreconditionError("cannot trace through a malformed rule: " + p.defect());

    const std::size_t k = p.position();
    const std::size_t i = o.formula;
    std::vector<std::optional<AtomOccurrence>> out;
    switch(p.rule()) {
    case RuleKind::Axiom:
        break;
    case RuleKind::Exchange: {
        std::size_t j = i == k ? k + 1 : i == k + 1 ? k : i;
        out.push_back(AtomOccurrence{j, o.path});
        break;
    }
    case RuleKind::Par:
        if(i < k)
            out.push_back(o);
        else if(i == k)
            out.push_back(AtomOccurrence{o.path[0] == 'l' ? k : k + 1, o.path.substr(1)});
        else
            out.push_back(AtomOccurrence{i + 1, o.path});
        break;
    case RuleKind::PlusLeft:
    case RuleKind::PlusRight:
        if(i != k) {
            out.push_back(o);
        } else {
            const char kept = p.rule() == RuleKind::PlusLeft ? 'l' : 'r';
            if(o.path[0] == kept)
                out.push_back(AtomOccurrence{k, o.path.substr(1)});
            else
                out.push_back(std::nullopt);
        }
        break;
    case RuleKind::Tensor: {
        const std::size_t gamma = p.premise(0).conclusion().size() - 1;
        const std::size_t last = p.conclusion().size() - 1;
        if(i < gamma) {
            out = {o, std::nullopt};
        } else if(i < last) {
            out = {std::nullopt, AtomOccurrence{i - gamma, o.path}};
        } else {
            const std::size_t delta = p.premise(1).conclusion().size() - 1;
            if(o.path[0] == 'l')
                out = {AtomOccurrence{gamma, o.path.substr(1)}, std::nullopt};
            else
                out = {std::nullopt, AtomOccurrence{delta, o.path.substr(1)}};
        }
        break;
    }
    case RuleKind::With: {
        const std::size_t last = p.conclusion().size() - 1;
        if(i < last)
            out = {o, o};
        else if(o.path[0] == 'l')
            out = {AtomOccurrence{last, o.path.substr(1)}, std::nullopt};
        else
            out = {std::nullopt, AtomOccurrence{last, o.path.substr(1)}};
        break;
    }
    }
    return out;
}

AtomOccurrence lift_occurrence(const Proof &p, std::size_t premise, const AtomOccurrence &o) {
    if(premise >= p.arity())
        throw PreconditionError("premise index out of range");
    resolve(p.premise(premise).conclusion(), o);
    if(!p.defect().empty())
        throw PreconditionError("cannot relocate through a malformed rule: " + p.defect());

    const std::size_t k = p.position();
    const std::size_t i = o.formula;
    switch(p.rule()) {
    case RuleKind::Axiom:
        break;
    case RuleKind::Exchange:
        return {i == k ? k + 1 : i == k + 1 ? k : i, o.path};
    case RuleKind::Par:
        if(i < k)
            return o;
        if(i == k)
            return {k, "l" + o.path};
        if(i == k + 1)
            return {k, "r" + o.path};
        return {i - 1, o.path};
    case RuleKind::PlusLeft:
        return i == k ? AtomOccurrence{k, "l" + o.path} : o;
    case RuleKind::PlusRight:
        return i == k ? AtomOccurrence{k, "r" + o.path} : o;
    case RuleKind::Tensor: {
        const std::size_t gamma = p.premise(0).conclusion().size() - 1;
        const std::size_t last = p.conclusion().size() - 1;
        if(premise == 0)
            return i < gamma ? o : AtomOccurrence{last, "l" + o.path};
        const std::size_t delta = p.premise(1).conclusion().size() - 1;
        return i < delta ? AtomOccurrence{gamma + i, o.path} : AtomOccurrence{last, "r" + o.path};
    }
    case RuleKind::With: {
        const std::size_t last = p.conclusion().size() - 1;
        if(i < last)
            return o;
        return {last, (premise == 0 ? "l" : "r") + o.path};
    }
    }
    throw PreconditionError("axioms have no premises");
}

std::size_t count_with_rules(const Proof &p) {
    std::size_t n = p.rule() == RuleKind::With ? 1 : 0;
    for(std::size_t i = 0; i < p.arity(); ++i)
        n += count_with_rules(p.premise(i));
    return n;
}

std::size_t count_nodes(const Proof &p) {
    std::size_t n = 1;
    for(std::size_t i = 0; i < p.arity(); ++i)
        n += count_nodes(p.premise(i));
    return n;
}

namespace {

void print_to(const Proof &p, std::string &out) {
    switch(p.rule()) {
    case RuleKind::Axiom:
        out += "(ax " + p.name() + ")";
        return;
    case RuleKind::Exchange:
        out += "(ex " + std::to_string(p.position()) + " ";
        break;
    case RuleKind::Par:
        out += "(par " + std::to_string(p.position()) + " ";
        break;
    case RuleKind::PlusLeft:
    case RuleKind::PlusRight:
        out += p.rule() == RuleKind::PlusLeft ? "(plusL " : "(plusR ";
        out += print_formula(p.side_formula());
        out += " " + std::to_string(p.position()) + " ";
        break;
    case RuleKind::Tensor:
        out += "(tensor ";
        break;
    case RuleKind::With:
        out += "(with " + p.name() + " ";
        break;
    }
    for(std::size_t i = 0; i < p.arity(); ++i) {
        if(i)
            out += ' ';
        print_to(p.premise(i), out);
    }
    out += ')';
}

Proof read_proof(Lexer &lex) {
    lex.expect(TokenKind::LParen, "'('");
    const Token head = lex.expect(TokenKind::Ident, "a rule name");
    std::optional<Proof> result;
    if(head.text == "ax") {
        result = Proof::axiom(std::string(lex.expect(TokenKind::Ident, "an atom name").text));
    } else if(head.text == "ex" || head.text == "par") {
        const std::size_t k = lex.expect_number();
        Proof body = read_proof(lex);
        result = head.text == "ex" ? Proof::exchange(k, std::move(body)) : Proof::par(k, std::move(body));
    } else if(head.text == "tensor") {
        Proof l = read_proof(lex);
        Proof r = read_proof(lex);
        result = Proof::tensor(std::move(l), std::move(r));
    } else if(head.text == "plusL" || head.text == "plusR") {
        Formula other = read_formula(lex);
        const std::size_t k = lex.expect_number();
        Proof body = read_proof(lex);
        result = head.text == "plusL" ? Proof::plus_left(std::move(other), k, std::move(body))
                                      : Proof::plus_right(std::move(other), k, std::move(body));
    } else if(head.text == "with") {
        std::string label(lex.expect(TokenKind::Ident, "a label").text);
        Proof l = read_proof(lex);
        Proof r = read_proof(lex);
        result = Proof::with(std::move(label), std::move(l), std::move(r));
    } else {
        lex.fail(head, "unknown rule " + describe(head));
    }
    lex.expect(TokenKind::RParen, "')'");
    return *result;
}

} // namespace

std::string print_proof(const Proof &p) {
    std::string out;
    print_to(p, out);
    return out;
}

std::string print_violation(const RuleViolation &v) {
    std::string where = "root";
    if(!v.path.empty()) {
        where = "node";
        for(std::size_t i : v.path)
            where += "/" + std::to_string(i);
    }
    std::string out = where + ": " + v.message;
    if(!v.expected.empty() || !v.actual.empty())
        out += " (expected \"" + v.expected + "\", actual \"" + v.actual + "\")";
    return out;
}

Proof parse_proof(std::string_view text) {
    Lexer lex(text);
    Proof p = read_proof(lex);
    lex.expect_end();
    return p;
}

} // namespace mall
