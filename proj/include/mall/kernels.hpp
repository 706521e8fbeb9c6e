#pragma once

// Data-parallel inner loops behind the equivalence procedures. Each kernel
// has an OpenMP version and a serial reference with identical results.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mall/bdd.hpp"

namespace mall::kernels {

/// A BDD flattened into an index-addressed array over numbered variables.
class CompiledBdd {
public:
    /// `vars` fixes the bit index of each variable (bit i of a mask is vars[i]).
    CompiledBdd(const Bdd &b, const std::vector<std::string> &vars);

    bool eval(std::uint64_t mask) const noexcept;

private:
    struct Node {
        std::int32_t var;  // >= 0 variable bit, -1 constant false, -2 constant true
        std::int32_t then; // child index, or -1 / -2 for leaves 0 / 1
        std::int32_t other;
    };
    std::int32_t add(const Bdd &b, const std::vector<std::string> &vars);

    std::vector<Node> nodes_;
    std::int32_t root_ = -1;
};

/// True iff every (a, b) monomial pair is in conflict.
bool all_pairs_conflict(std::span<const Monomial> a, std::span<const Monomial> b);

/// True iff both diagrams agree on every mask in [0, 2^nvars).
bool agree_everywhere(const CompiledBdd &a, const CompiledBdd &b, unsigned nvars);

namespace serial {

bool all_pairs_conflict(std::span<const Monomial> a, std::span<const Monomial> b);
bool agree_everywhere(const CompiledBdd &a, const CompiledBdd &b, unsigned nvars);

} // namespace serial

} // namespace mall::kernels
