#include "mall/export.hpp"

#include <sstream>

#include "mall/error.hpp"

namespace mall {

Json to_json(const AtomOccurrence &o) {
    Json j;
    j["formula"] = o.formula;
    j["path"] = o.path;
    return j;
}

Json to_json(const DualPair &p) { return Json::array({to_json(p.first()), to_json(p.second())}); }

Json to_json(const Linking &l) {
    Json j = Json::array();
    for(const DualPair &p : l.pairs())
        j.push_back(to_json(p));
    return j;
}

Json to_json(const Slicing &s) {
    Json j = Json::array();
    for(const Linking &l : s.linkings)
        j.push_back(to_json(l));
    return j;
}

Json to_json(const BddSlicing &s) {
    Json j = Json::array();
    for(const auto &[pair, bdd] : s.entries) {
        Json e;
        e["pair"] = to_json(pair);
        e["bdd"] = print_bdd(bdd);
        j.push_back(std::move(e));
    }
    return j;
}

namespace {

Json selector_json(const Selector &s) {
    if(s.is_constant())
        return s.constant_value() ? 1 : 0;
    return s.name();
}

} // namespace

Json to_json(const Bdd &b) {
    Json j;
    switch(b.kind()) {
    case BddKind::Zero: return 0;
    case BddKind::One: return 1;
    case BddKind::DontCare:
        j["dc"] = selector_json(b.selector());
        j["body"] = to_json(b.body());
        return j;
    case BddKind::Ite:
        j["ite"] = selector_json(b.selector());
        j["then"] = to_json(b.then_branch());
        j["else"] = to_json(b.else_branch());
        return j;
    }
    return j;
}

Json to_json(const Monomial &m) {
    Json j = Json::array();
    for(const Literal &l : m.literals())
        j.push_back((l.positive ? "" : "~") + l.var);
    return j;
}

Json to_json(const RuleViolation &v) {
    Json j;
    j["path"] = v.path;
    j["message"] = v.message;
    j["expected"] = v.expected;
    j["actual"] = v.actual;
    return j;
}

Json to_json(const OrdInstance &inst) {
    Json j;
    j["vertices"] = inst.graph.vertices;
    Json edges = Json::array();
    for(const auto &[u, v] : inst.graph.edges)
        edges.push_back(Json::array({u, v}));
    j["edges"] = std::move(edges);
    j["begin"] = inst.graph.begin;
    j["exit"] = inst.graph.exit;
    j["f"] = inst.f;
    j["s"] = inst.s;
    return j;
}

namespace {

void dot_node(const Bdd &b, std::size_t &counter, std::ostringstream &out) {
    const std::size_t id = counter++;
    switch(b.kind()) {
    case BddKind::Zero:
    case BddKind::One:
        out << "  n" << id << " [shape=box,label=\"" << (b.kind() == BddKind::One ? 1 : 0) << "\"];\n";
        return;
    case BddKind::DontCare: {
        out << "  n" << id << " [shape=ellipse,label=\"dc " << selector_json(b.selector()).dump() << "\"];\n";
        const std::size_t child = counter;
        dot_node(b.body(), counter, out);
        out << "  n" << id << " -> n" << child << ";\n";
        return;
    }
    case BddKind::Ite: {
        out << "  n" << id << " [shape=ellipse,label=" << selector_json(b.selector()).dump() << "];\n";
        const std::size_t t = counter;
        dot_node(b.then_branch(), counter, out);
        const std::size_t e = counter;
        dot_node(b.else_branch(), counter, out);
        out << "  n" << id << " -> n" << t << " [style=solid];\n";
        out << "  n" << id << " -> n" << e << " [style=dashed];\n";
        return;
    }
    }
}

template<typename T>
T field(const nlohmann::json &j, const char *key) {
    if(!j.is_object() || !j.contains(key))
        throw PreconditionError(std::string("line graph JSON is missing \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch(const nlohmann::json::exception &) {
        throw PreconditionError(std::string("line graph JSON field \"") + key + "\" has the wrong type");
    }
}

} // namespace

std::string to_dot(const Bdd &b) {
    std::ostringstream out;
    out << "digraph bdd {\n";
    std::size_t counter = 0;
    dot_node(b, counter, out);
    out << "}\n";
    return out.str();
}

OrdInstance ord_instance_from_json(const nlohmann::json &j) {
    OrdInstance inst;
    inst.graph.vertices = field<std::vector<std::string>>(j, "vertices");
    for(const auto &e : field<std::vector<std::vector<std::string>>>(j, "edges")) {
        if(e.size() != 2)
            throw PreconditionError("line graph edges must be [from, to] pairs");
        inst.graph.edges.emplace_back(e[0], e[1]);
    }
    inst.graph.begin = field<std::string>(j, "begin");
    inst.graph.exit = field<std::string>(j, "exit");
    inst.f = field<std::string>(j, "f");
    inst.s = field<std::string>(j, "s");
    return inst;
}

} // namespace mall
