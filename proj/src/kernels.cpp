#include "mall/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>

#include "mall/error.hpp"

namespace mall::kernels {

CompiledBdd::CompiledBdd(const Bdd &b, const std::vector<std::string> &vars) { root_ = add(b, vars); }

std::int32_t CompiledBdd::add(const Bdd &b, const std::vector<std::string> &vars) {
    switch(b.kind()) {
    case BddKind::Zero: return -1;
    case BddKind::One: return -2;
    case BddKind::DontCare: return add(b.body(), vars);
    case BddKind::Ite: break;
    }
    const Selector &s = b.selector();
    std::int32_t var;
    if(s.is_constant()) {
        var = s.constant_value() ? -2 : -1;
    } else {
        auto it = std::find(vars.begin(), vars.end(), s.name());
        if(it == vars.end())
            throw PreconditionError("variable " + s.name() + " is missing from the valuation domain");
        var = static_cast<std::int32_t>(it - vars.begin());
    }
    const std::int32_t t = add(b.then_branch(), vars);
    const std::int32_t e = add(b.else_branch(), vars);
    nodes_.push_back({var, t, e});
    return static_cast<std::int32_t>(nodes_.size() - 1);
}

bool CompiledBdd::eval(std::uint64_t mask) const noexcept {
    std::int32_t at = root_;
    while(at >= 0) {
        const Node &n = nodes_[static_cast<std::size_t>(at)];
        const bool bit = n.var >= 0 ? ((mask >> n.var) & 1u) != 0 : n.var == -2;
        at = bit ? n.then : n.other;
    }
    return at == -2;
}

bool all_pairs_conflict(std::span<const Monomial> a, std::span<const Monomial> b) {
    const auto rows = static_cast<std::ptrdiff_t>(a.size());
    std::atomic<bool> ok{true};
#pragma omp parallel for schedule(dynamic, 16)
    for(std::ptrdiff_t i = 0; i < rows; ++i) {
        if(!ok.load(std::memory_order_relaxed))
            continue;
        for(const Monomial &m : b) {
            if(!monomials_conflict(a[static_cast<std::size_t>(i)], m)) {
                ok.store(false, std::memory_order_relaxed);
                break;
            }
        }
    }
    return ok.load();
}

bool agree_everywhere(const CompiledBdd &a, const CompiledBdd &b, unsigned nvars) {
    const auto total = static_cast<std::int64_t>(std::uint64_t{1} << nvars);
    std::atomic<bool> ok{true};
#pragma omp parallel for schedule(static, 4096)
    for(std::int64_t m = 0; m < total; ++m) {
        if(!ok.load(std::memory_order_relaxed))
            continue;
        const auto mask = static_cast<std::uint64_t>(m);
        if(a.eval(mask) != b.eval(mask))
            ok.store(false, std::memory_order_relaxed);
    }
    return ok.load();
}

namespace serial {

bool all_pairs_conflict(std::span<const Monomial> a, std::span<const Monomial> b) {
    for(const Monomial &x : a)
        for(const Monomial &y : b)
            if(!monomials_conflict(x, y))
                return false;
    return true;
}

bool agree_everywhere(const CompiledBdd &a, const CompiledBdd &b, unsigned nvars) {
    const std::uint64_t total = std::uint64_t{1} << nvars;
    for(std::uint64_t m = 0; m < total; ++m)
        if(a.eval(m) != b.eval(m))
            return false;
    return true;
}

} // namespace serial

} // namespace mall::kernels
