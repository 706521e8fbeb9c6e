#include "mall/reductions.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "mall/bdd_slicing.hpp"
#include "mall/error.hpp"

namespace mall {

std::string level_atom(std::size_t i) { return "a" + std::to_string(i); }

Sequent encoding_sequent(std::size_t n, const std::vector<std::string> &labels) {
    if(labels.size() != n)
        throw PreconditionError("encoding needs exactly " + std::to_string(n) + " labels");
    std::set<std::string> seen;
    for(const std::string &l : labels) {
        if(!is_identifier(l))
            throw PreconditionError("label '" + l + "' is not an identifier");
        if(!seen.insert(l).second)
            throw PreconditionError("duplicate label " + l);
    }
    Formula chain = Formula::dual(kValueAtom);
    for(std::size_t i = 1; i <= n; ++i)
        chain = Formula::tensor(chain, Formula::dual(level_atom(i)));
    std::vector<Formula> fs{Formula::plus(Formula::atom(kValueAtom), Formula::atom(kValueAtom)), chain};
    for(std::size_t i = 1; i <= n; ++i)
        fs.push_back(Formula::with(labels[i - 1], Formula::atom(level_atom(i)), Formula::atom(level_atom(i))));
    return Sequent(std::move(fs));
}

std::vector<std::string> encoding_labels(const VarOrder &order) {
    return {order.variables().rbegin(), order.variables().rend()};
}

namespace {

// Bubble the formula at `from` to the last position with adjacent exchanges.
Proof move_to_last(Proof p, std::size_t from) {
    const std::size_t n = p.conclusion().size();
    for(std::size_t k = from; k + 1 < n; ++k)
        p = Proof::exchange(k, std::move(p));
    return p;
}

// Bubble the last formula down to position `to`.
Proof move_from_last(Proof p, std::size_t to) {
    const std::size_t n = p.conclusion().size();
    for(std::size_t k = n - 1; k > to; --k)
        p = Proof::exchange(k - 1, std::move(p));
    return p;
}

// Encodes phi over order[level..]; the variable read at this level is x_n
// with n = |order| - level.
Proof encode(const Bdd &phi, const std::vector<std::string> &order, std::size_t level) {
    const std::size_t n = order.size() - level;
    if(n == 0) {
        const Formula beta = Formula::atom(kValueAtom);
        Proof ax = Proof::axiom(kValueAtom);
        return phi.kind() == BddKind::One ? Proof::plus_right(beta, 0, std::move(ax))
                                          : Proof::plus_left(beta, 0, std::move(ax));
    }
    const std::string alpha = level_atom(n);
    const std::string &x = order[level];
    if(phi.kind() == BddKind::DontCare) {
        Proof inner = encode(phi.body(), order, level + 1);
        Proof with_axioms = Proof::with(x, Proof::exchange(0, Proof::axiom(alpha)),
                                        Proof::exchange(0, Proof::axiom(alpha)));
        Proof t = Proof::tensor(move_to_last(std::move(inner), 1), Proof::exchange(0, std::move(with_axioms)));
        return move_from_last(std::move(t), 1);
    }
    auto branch = [&](const Bdd &sub) {
        Proof inner = encode(sub, order, level + 1);
        Proof t = Proof::tensor(move_to_last(std::move(inner), 1), Proof::axiom(alpha));
        return move_from_last(std::move(t), 1);
    };
    return Proof::with(x, branch(phi.then_branch()), branch(phi.else_branch()));
}

std::string repeat_l(std::size_t n) { return std::string(n, 'l'); }

} // namespace

Proof encode_obdd(const Bdd &phi, const VarOrder &order) {
    if(!is_obdd(phi, order))
        throw PreconditionError("not an oBDD over the given order: " + print_bdd(phi));
    return encode(phi, order.variables(), 0);
}

bool EncodingReport::all_passed() const {
    return std::all_of(claims.begin(), claims.end(), [](const ClaimResult &c) { return c.passed; });
}

EncodingReport check_encoding_slicing(const Bdd &phi, const VarOrder &order) {
    EncodingReport report;
    const Proof proof = encode_obdd(phi, order);
    const BddSlicing slicing = bdd_slicing(proof);
    const std::size_t n = order.size();
    const std::vector<std::string> labels = encoding_labels(order);

    const AtomOccurrence beta_dual{1, repeat_l(n)};
    const Bdd &linked = slicing.at(DualPair({0, "r"}, beta_dual));
    const Bdd &unlinked = slicing.at(DualPair({0, "l"}, beta_dual));

    report.claims.push_back({"linked copy of b carries phi", collapse_constants(linked) == collapse_constants(phi),
                             print_bdd(linked)});
    report.claims.push_back({"other copy of b carries the negation", bdd_equiv(unlinked, negate(phi)),
                             print_bdd(unlinked)});

    ClaimResult left{"left copy of ai carries xi", true, {}};
    ClaimResult right{"right copy of ai carries the negation of xi", true, {}};
    for(std::size_t i = 1; i <= n; ++i) {
        const AtomOccurrence alpha_dual{1, repeat_l(n - i) + "r"};
        const std::string &x = labels[i - 1];
        const Bdd &l = slicing.at(DualPair(alpha_dual, {1 + i, "l"}));
        const Bdd &r = slicing.at(DualPair(alpha_dual, {1 + i, "r"}));
        if(!bdd_equiv(l, Bdd::ite(x, Bdd::one(), Bdd::zero()))) {
            left.passed = false;
            left.detail += level_atom(i) + ": " + print_bdd(l) + " ";
        }
        if(!bdd_equiv(r, Bdd::ite(x, Bdd::zero(), Bdd::one()))) {
            right.passed = false;
            right.detail += level_atom(i) + ": " + print_bdd(r) + " ";
        }
    }
    report.claims.push_back(std::move(left));
    report.claims.push_back(std::move(right));
    return report;
}

std::vector<std::string> line_order(const LineGraph &g) {
    auto fail = [](const std::string &why) -> void { throw PreconditionError("graph is not a line: " + why); };
    if(g.vertices.size() < 2)
        fail("it needs at least a begin and an exit vertex");
    std::map<std::string, std::size_t> in, out;
    std::map<std::string, std::string> next;
    for(const std::string &v : g.vertices) {
        if(!is_identifier(v))
            fail("vertex name '" + v + "' is not an identifier");
        if(!in.emplace(v, 0).second)
            fail("vertex " + v + " is listed twice");
        out.emplace(v, 0);
    }
    for(const auto &[u, v] : g.edges) {
        if(!in.count(u) || !in.count(v))
            fail("edge " + u + "->" + v + " mentions an unknown vertex");
        ++out[u];
        ++in[v];
        next[u] = v;
    }
    if(!in.count(g.begin) || !in.count(g.exit))
        fail("begin or exit is not a vertex");
    if(g.begin == g.exit)
        fail("begin and exit coincide");
    for(const std::string &v : g.vertices) {
        const std::size_t want_in = v == g.begin ? 0 : 1;
        const std::size_t want_out = v == g.exit ? 0 : 1;
        if(in[v] != want_in || out[v] != want_out)
            fail("vertex " + v + " has in/out degree " + std::to_string(in[v]) + "/" + std::to_string(out[v]));
    }
    std::vector<std::string> order{g.begin};
    while(order.back() != g.exit) {
        order.push_back(next.at(order.back()));
        if(order.size() > g.vertices.size())
            fail("it contains a cycle");
    }
    if(order.size() != g.vertices.size())
        fail("it is not connected");
    return order;
}

namespace {

std::size_t index_of(const std::vector<std::string> &order, const std::string &v) {
    auto it = std::find(order.begin(), order.end(), v);
    if(it == order.end())
        throw PreconditionError("vertex " + v + " is not in the graph");
    return static_cast<std::size_t>(it - order.begin());
}

std::string fresh_name(std::string base, const std::set<std::string> &taken) {
    while(taken.count(base))
        base = "_" + base;
    return base;
}

} // namespace

bool ord_oracle(const OrdInstance &inst) {
    const std::vector<std::string> order = line_order(inst.graph);
    if(inst.f == inst.s)
        throw PreconditionError("f and s must be distinct");
    return index_of(order, inst.f) < index_of(order, inst.s);
}

OrdReduction ord_to_obdd(const OrdInstance &inst) {
    const std::vector<std::string> line = line_order(inst.graph);
    if(inst.f == inst.s)
        throw PreconditionError("f and s must be distinct");
    index_of(line, inst.f);
    index_of(line, inst.s);
    for(const std::string *v : {&inst.f, &inst.s})
        if(*v == inst.graph.begin || *v == inst.graph.exit)
            throw PreconditionError("f and s must differ from the begin and exit vertices");

    const std::set<std::string> taken(line.begin(), line.end());
    const std::string x = fresh_name("x", taken);
    const std::string y = fresh_name("y", taken);

    // Copy c of vertex line[j] continues in copy step(c) of line[j + 1].
    using Step = std::array<std::size_t, 3>;
    constexpr Step identity{0, 1, 2};
    constexpr Step at_f{1, 2, 0};
    constexpr Step at_s{1, 0, 2};

    auto build = [&](bool rewire) {
        const std::size_t m = line.size() - 1; // exit index
        std::array<Bdd, 3> level{Bdd::one(), Bdd::zero(), Bdd::zero()};
        for(std::size_t j = m; j-- > 0;) {
            const Step &step = !rewire ? identity : line[j] == inst.f ? at_f : line[j] == inst.s ? at_s : identity;
            std::array<Bdd, 3> up{Bdd::dont_care(line[j], level[step[0]]), Bdd::dont_care(line[j], level[step[1]]),
                                  Bdd::dont_care(line[j], level[step[2]])};
            level = std::move(up);
        }
        return Bdd::ite(x, Bdd::dont_care(y, level[0]), Bdd::ite(y, level[1], level[2]));
    };

    std::vector<std::string> vars{x, y};
    vars.insert(vars.end(), line.begin(), line.end() - 1);
    return {build(true), build(false), VarOrder(std::move(vars))};
}

} // namespace mall
