#include "mall/bdd.hpp"

#include <algorithm>

#include "mall/error.hpp"
#include "mall/kernels.hpp"
#include "mall/lexer.hpp"

namespace mall {

Selector Selector::variable(std::string name) {
    Selector s;
    s.name_ = std::move(name);
    return s;
}

Selector Selector::constant(bool value) {
    Selector s;
    s.value_ = value;
    return s;
}

const std::string &Selector::name() const noexcept {
    static const std::string none;
    return name_ ? *name_ : none;
}

struct Bdd::Node {
    BddKind kind;
    Selector selector;
    Bdd then_branch;
    Bdd else_branch;
};

Bdd Bdd::zero() {
    static const Bdd z(std::make_shared<const Node>(Node{BddKind::Zero, Selector::constant(false), {}, {}}));
    return z;
}

Bdd Bdd::one() {
    static const Bdd o(std::make_shared<const Node>(Node{BddKind::One, Selector::constant(true), {}, {}}));
    return o;
}

Bdd Bdd::ite(Selector x, Bdd then_branch, Bdd else_branch) {
    return Bdd(std::make_shared<const Node>(
        Node{BddKind::Ite, std::move(x), std::move(then_branch), std::move(else_branch)}));
}

Bdd Bdd::ite(std::string var, Bdd then_branch, Bdd else_branch) {
    return ite(Selector::variable(std::move(var)), std::move(then_branch), std::move(else_branch));
}

Bdd Bdd::dont_care(Selector x, Bdd body) {
    return Bdd(std::make_shared<const Node>(Node{BddKind::DontCare, std::move(x), std::move(body), {}}));
}

Bdd Bdd::dont_care(std::string var, Bdd body) {
    return dont_care(Selector::variable(std::move(var)), std::move(body));
}

BddKind Bdd::kind() const noexcept { return node_->kind; }

const Selector &Bdd::selector() const {
    if(is_leaf())
        throw PreconditionError("constant BDD has no selector");
    return node_->selector;
}

const Bdd &Bdd::then_branch() const {
    if(is_leaf())
        throw PreconditionError("constant BDD has no children");
    return node_->then_branch;
}

const Bdd &Bdd::else_branch() const {
    if(kind() != BddKind::Ite)
        throw PreconditionError("only IfThenElse nodes have an else branch");
    return node_->else_branch;
}

bool operator==(const Bdd &a, const Bdd &b) {
    if(a.node_ == b.node_)
        return true;
    if(a.kind() != b.kind())
        return false;
    switch(a.kind()) {
    case BddKind::Zero:
    case BddKind::One:
        return true;
    case BddKind::DontCare:
        return a.node_->selector == b.node_->selector && a.node_->then_branch == b.node_->then_branch;
    case BddKind::Ite:
        return a.node_->selector == b.node_->selector && a.node_->then_branch == b.node_->then_branch &&
               a.node_->else_branch == b.node_->else_branch;
    }
    return false;
}

bool Valuation::get(const std::string &var) const {
    auto it = bits_.find(var);
    if(it == bits_.end())
        throw PreconditionError("unbound variable " + var);
    return it->second;
}

Monomial::Monomial(std::vector<Literal> literals) : literals_(std::move(literals)) {
    std::sort(literals_.begin(), literals_.end());
    literals_.erase(std::unique(literals_.begin(), literals_.end()), literals_.end());
    for(std::size_t i = 1; i < literals_.size(); ++i)
        if(literals_[i].var == literals_[i - 1].var)
            throw PreconditionError("monomial contains both " + literals_[i].var + " and its negation");
}

std::optional<bool> Monomial::sign_of(std::string_view var) const {
    auto it = std::lower_bound(literals_.begin(), literals_.end(), var,
                               [](const Literal &l, std::string_view v) { return l.var < v; });
    if(it == literals_.end() || it->var != var)
        return std::nullopt;
    return it->positive;
}

VarOrder::VarOrder(std::vector<std::string> variables) : variables_(std::move(variables)) {
    std::set<std::string> seen;
    for(const std::string &v : variables_)
        if(!seen.insert(v).second)
            throw PreconditionError("variable order repeats " + v);
}

namespace {

bool read(const Selector &s, const Valuation &v) {
    return s.is_constant() ? s.constant_value() : v.get(s.name());
}

void collect_vars(const Bdd &b, std::set<std::string> &out) {
    if(b.is_leaf())
        return;
    if(!b.selector().is_constant())
        out.insert(b.selector().name());
    collect_vars(b.then_branch(), out);
    if(b.kind() == BddKind::Ite)
        collect_vars(b.else_branch(), out);
}

} // namespace

bool eval(const Bdd &b, const Valuation &v) {
    const Bdd *n = &b;
    for(;;) {
        switch(n->kind()) {
        case BddKind::Zero: return false;
        case BddKind::One: return true;
        case BddKind::DontCare: n = &n->body(); break;
        case BddKind::Ite: n = read(n->selector(), v) ? &n->then_branch() : &n->else_branch(); break;
        }
    }
}

bool eval(const Monomial &m, const Valuation &v) {
    return std::all_of(m.literals().begin(), m.literals().end(),
                       [&](const Literal &l) { return v.get(l.var) == l.positive; });
}

std::set<std::string> variables(const Bdd &b) {
    std::set<std::string> out;
    collect_vars(b, out);
    return out;
}

bool bdd_equiv_oracle(const Bdd &a, const Bdd &b, const std::set<std::string> &vars,
                      const OracleOptions &options) {
    if(vars.size() > options.max_vars)
        throw CapExceeded("valuation oracle refused: " + std::to_string(vars.size()) +
                          " variables exceed the cap of " + std::to_string(options.max_vars));
    if(vars.size() > 62)
        throw CapExceeded("valuation oracle supports at most 62 variables");
    for(const Bdd *x : {&a, &b})
        for(const std::string &v : variables(*x))
            if(!vars.count(v))
                throw PreconditionError("variable " + v + " is missing from the valuation domain");
    const std::vector<std::string> order(vars.begin(), vars.end());
    const kernels::CompiledBdd ca(a, order);
    const kernels::CompiledBdd cb(b, order);
    const auto n = static_cast<unsigned>(order.size());
    return options.exec == Exec::Parallel ? kernels::agree_everywhere(ca, cb, n)
                                          : kernels::serial::agree_everywhere(ca, cb, n);
}

bool bdd_equiv_oracle(const Bdd &a, const Bdd &b, const OracleOptions &options) {
    std::set<std::string> vars = variables(a);
    vars.merge(variables(b));
    return bdd_equiv_oracle(a, b, vars, options);
}

Bdd negate(const Bdd &b) {
    switch(b.kind()) {
    case BddKind::Zero: return Bdd::one();
    case BddKind::One: return Bdd::zero();
    case BddKind::DontCare: return Bdd::dont_care(b.selector(), negate(b.body()));
    case BddKind::Ite: return Bdd::ite(b.selector(), negate(b.then_branch()), negate(b.else_branch()));
    }
    return b;
}

namespace {

class MonomialWalk {
public:
    std::vector<Monomial> run(const Bdd &b) {
        walk(b);
        return std::move(out_);
    }

private:
    void walk(const Bdd &b) {
        switch(b.kind()) {
        case BddKind::Zero:
            return;
        case BddKind::One: {
            std::vector<Literal> lits;
            lits.reserve(path_.size());
            for(const auto &[var, sign] : path_)
                lits.push_back({var, sign});
            out_.emplace_back(std::move(lits));
            return;
        }
        case BddKind::DontCare:
            walk(b.body());
            return;
        case BddKind::Ite:
            branch(b.selector(), true, b.then_branch());
            branch(b.selector(), false, b.else_branch());
            return;
        }
    }

    void branch(const Selector &s, bool taken, const Bdd &child) {
        if(s.is_constant()) {
            if(s.constant_value() == taken)
                walk(child);
            return;
        }
        auto [it, inserted] = path_.emplace(s.name(), taken);
        if(!inserted) {
            if(it->second == taken)
                walk(child);
            return;
        }
        walk(child);
        path_.erase(it);
    }

    std::map<std::string, bool> path_;
    std::vector<Monomial> out_;
};

} // namespace

std::vector<Monomial> to_monomials(const Bdd &b) { return MonomialWalk().run(b); }

bool monomials_conflict(const Monomial &a, const Monomial &b) {
    auto i = a.literals().begin();
    auto j = b.literals().begin();
    while(i != a.literals().end() && j != b.literals().end()) {
        const int c = i->var.compare(j->var);
        if(c < 0) {
            ++i;
        } else if(c > 0) {
            ++j;
        } else {
            if(i->positive != j->positive)
                return true;
            ++i;
            ++j;
        }
    }
    return false;
}

bool bdd_equiv(const Bdd &a, const Bdd &b, Exec exec) {
    auto check = exec == Exec::Parallel ? &kernels::all_pairs_conflict : &kernels::serial::all_pairs_conflict;
    // a ~ b iff a.¬b ~ 0 and b.¬a ~ 0.
    const std::vector<Monomial> pos_a = to_monomials(a);
    const std::vector<Monomial> neg_b = to_monomials(negate(b));
    if(!check(neg_b, pos_a))
        return false;
    const std::vector<Monomial> pos_b = to_monomials(b);
    const std::vector<Monomial> neg_a = to_monomials(negate(a));
    return check(neg_a, pos_b);
}

namespace {

bool read_once_from(const Bdd &b, std::set<std::string> &seen) {
    switch(b.kind()) {
    case BddKind::Zero:
    case BddKind::One:
        return true;
    case BddKind::DontCare:
        return read_once_from(b.body(), seen);
    case BddKind::Ite:
        break;
    }
    const Selector &s = b.selector();
    if(s.is_constant())
        return read_once_from(b.then_branch(), seen) && read_once_from(b.else_branch(), seen);
    if(!seen.insert(s.name()).second)
        return false;
    const bool ok = read_once_from(b.then_branch(), seen) && read_once_from(b.else_branch(), seen);
    seen.erase(s.name());
    return ok;
}

bool obdd_from(const Bdd &b, const std::vector<std::string> &order, std::size_t level) {
    if(level == order.size())
        return b.is_leaf();
    if(b.is_leaf())
        return false;
    const Selector &s = b.selector();
    if(s.is_constant() || s.name() != order[level])
        return false;
    if(b.kind() == BddKind::DontCare)
        return obdd_from(b.body(), order, level + 1);
    return obdd_from(b.then_branch(), order, level + 1) && obdd_from(b.else_branch(), order, level + 1);
}

} // namespace

bool is_read_once(const Bdd &b) {
    std::set<std::string> seen;
    return read_once_from(b, seen);
}

bool is_obdd(const Bdd &b, const VarOrder &order) { return obdd_from(b, order.variables(), 0); }

Bdd collapse_constants(const Bdd &b) {
    switch(b.kind()) {
    case BddKind::Zero:
    case BddKind::One:
        return b;
    case BddKind::DontCare:
        return collapse_constants(b.body());
    case BddKind::Ite:
        break;
    }
    const Selector &s = b.selector();
    if(s.is_constant())
        return collapse_constants(s.constant_value() ? b.then_branch() : b.else_branch());
    return Bdd::ite(s, collapse_constants(b.then_branch()), collapse_constants(b.else_branch()));
}

std::size_t bdd_size(const Bdd &b) {
    switch(b.kind()) {
    case BddKind::Zero:
    case BddKind::One:
        return 1;
    case BddKind::DontCare:
        return 1 + bdd_size(b.body());
    case BddKind::Ite:
        return 1 + bdd_size(b.then_branch()) + bdd_size(b.else_branch());
    }
    return 0;
}

namespace {

std::string print_selector(const Selector &s) {
    if(s.is_constant())
        return s.constant_value() ? "1" : "0";
    return s.name();
}

void print_to(const Bdd &b, std::string &out) {
    switch(b.kind()) {
    case BddKind::Zero: out += '0'; return;
    case BddKind::One: out += '1'; return;
    case BddKind::DontCare:
        out += "(dc " + print_selector(b.selector()) + " ";
        print_to(b.body(), out);
        out += ')';
        return;
    case BddKind::Ite:
        out += "(ite " + print_selector(b.selector()) + " ";
        print_to(b.then_branch(), out);
        out += ' ';
        print_to(b.else_branch(), out);
        out += ')';
        return;
    }
}

Selector read_selector(Lexer &lex) {
    const Token t = lex.expect(TokenKind::Ident, "a selector");
    if(t.text == "0" || t.text == "1")
        return Selector::constant(t.text == "1");
    return Selector::variable(std::string(t.text));
}

Bdd read_bdd(Lexer &lex) {
    const Token t = lex.next();
    if(t.kind == TokenKind::Ident && (t.text == "0" || t.text == "1"))
        return Bdd::constant(t.text == "1");
    if(t.kind != TokenKind::LParen)
        lex.fail(t, "expected a BDD, found " + describe(t));
    const Token head = lex.expect(TokenKind::Ident, "'ite' or 'dc'");
    std::optional<Bdd> out;
    if(head.text == "ite") {
        Selector s = read_selector(lex);
        Bdd t_branch = read_bdd(lex);
        Bdd e_branch = read_bdd(lex);
        out = Bdd::ite(std::move(s), std::move(t_branch), std::move(e_branch));
    } else if(head.text == "dc") {
        Selector s = read_selector(lex);
        out = Bdd::dont_care(std::move(s), read_bdd(lex));
    } else {
        lex.fail(head, "expected 'ite' or 'dc', found " + describe(head));
    }
    lex.expect(TokenKind::RParen, "')'");
    return *out;
}

} // namespace

std::string print_bdd(const Bdd &b) {
    std::string out;
    print_to(b, out);
    return out;
}

std::string print_monomial(const Monomial &m) {
    if(m.empty())
        return "1";
    std::string out;
    for(const Literal &l : m.literals()) {
        if(!out.empty())
            out += '.';
        if(!l.positive)
            out += '~';
        out += l.var;
    }
    return out;
}

std::string print_dnf(const std::vector<Monomial> &ms) {
    if(ms.empty())
        return "0";
    std::string out;
    for(const Monomial &m : ms) {
        if(!out.empty())
            out += " + ";
        out += print_monomial(m);
    }
    return out;
}

Bdd parse_bdd(std::string_view text) {
    Lexer lex(text);
    Bdd b = read_bdd(lex);
    lex.expect_end();
    return b;
}

} // namespace mall
