#pragma once

// JSON and DOT renderings of the library's values, plus the line-graph
// instance reader.

#include <string>

#include <json.hpp>

#include "mall/bdd.hpp"
#include "mall/bdd_slicing.hpp"
#include "mall/reductions.hpp"
#include "mall/slicing.hpp"

namespace mall {

using Json = nlohmann::ordered_json;

Json to_json(const AtomOccurrence &o);
/// Two occurrences in canonical order.
Json to_json(const DualPair &p);
Json to_json(const Linking &l);
/// Array of linkings in canonical order.
Json to_json(const Slicing &s);
/// Array of {"pair": ..., "bdd": "<text>"}.
Json to_json(const BddSlicing &s);
/// Mirrors the tree: {"ite": sel, "then": .., "else": ..}, {"dc": sel, "body": ..}, 0 or 1.
Json to_json(const Bdd &b);
Json to_json(const Monomial &m);
Json to_json(const RuleViolation &v);
Json to_json(const OrdInstance &inst);

/// Tree rendering: one node per BDD node, solid then-edges, dashed else-edges.
std::string to_dot(const Bdd &b);

/// Reads {"vertices", "edges", "begin", "exit", "f", "s"}; throws
/// PreconditionError on a missing or mistyped field.
OrdInstance ord_instance_from_json(const nlohmann::json &j);

} // namespace mall
