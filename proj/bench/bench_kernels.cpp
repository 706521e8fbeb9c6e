// Parallel kernels against their serial references.

#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "mall/bdd.hpp"
#include "mall/bdd_slicing.hpp"
#include "mall/kernels.hpp"
#include "mall/proof.hpp"

using namespace mall;

namespace {

std::vector<std::string> vars_up_to(int n) {
    std::vector<std::string> v;
    for(int i = 0; i < n; ++i)
        v.push_back("v" + std::to_string(i));
    return v;
}

// Complete tree over `vars` with random leaves: 2^n monomials.
Bdd full_tree(const std::vector<std::string> &vars, std::size_t level, std::mt19937_64 &rng) {
    if(level == vars.size())
        return Bdd::constant(rng() & 1U);
    Bdd t = full_tree(vars, level + 1, rng);
    Bdd e = full_tree(vars, level + 1, rng);
    return Bdd::ite(vars[level], std::move(t), std::move(e));
}

struct ConflictInput {
    std::vector<Monomial> a, b;
};

ConflictInput conflict_input(int nvars) {
    std::mt19937_64 rng(7);
    const Bdd f = full_tree(vars_up_to(nvars), 0, rng);
    return {to_monomials(negate(f)), to_monomials(f)};
}

void BM_ConflictParallel(benchmark::State &state) {
    const auto in = conflict_input(static_cast<int>(state.range(0)));
    for(auto _ : state)
        benchmark::DoNotOptimize(kernels::all_pairs_conflict(in.a, in.b));
    state.SetItemsProcessed(state.iterations() * in.a.size() * in.b.size());
}

void BM_ConflictSerial(benchmark::State &state) {
    const auto in = conflict_input(static_cast<int>(state.range(0)));
    for(auto _ : state)
        benchmark::DoNotOptimize(kernels::serial::all_pairs_conflict(in.a, in.b));
    state.SetItemsProcessed(state.iterations() * in.a.size() * in.b.size());
}

struct EnumInput {
    kernels::CompiledBdd a, b;
    unsigned n;
};

EnumInput enum_input(int nvars) {
    std::mt19937_64 rng(11);
    const auto vars = vars_up_to(nvars);
    // Equivalent pair so the scan cannot stop early.
    Bdd f = full_tree(vars, 0, rng);
    Bdd g = Bdd::dont_care(vars.front(), f);
    return {kernels::CompiledBdd(f, vars), kernels::CompiledBdd(g, vars), static_cast<unsigned>(nvars)};
}

void BM_EnumerateParallel(benchmark::State &state) {
    const auto in = enum_input(static_cast<int>(state.range(0)));
    for(auto _ : state)
        benchmark::DoNotOptimize(kernels::agree_everywhere(in.a, in.b, in.n));
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << in.n));
}

void BM_EnumerateSerial(benchmark::State &state) {
    const auto in = enum_input(static_cast<int>(state.range(0)));
    for(auto _ : state)
        benchmark::DoNotOptimize(kernels::serial::agree_everywhere(in.a, in.b, in.n));
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << in.n));
}

Proof blowup(std::size_t n) {
    auto block = [](std::size_t i) {
        return Proof::with("x" + std::to_string(i), Proof::axiom("a"), Proof::axiom("a"));
    };
    Proof p = block(1);
    for(std::size_t i = 2; i <= n; ++i)
        p = Proof::tensor(std::move(p), block(i));
    return p;
}

void BM_ProofEquivParallel(benchmark::State &state) {
    const Proof p = blowup(static_cast<std::size_t>(state.range(0)));
    for(auto _ : state)
        benchmark::DoNotOptimize(proof_equiv(p, p, {Exec::Parallel, false}));
}

void BM_ProofEquivSerial(benchmark::State &state) {
    const Proof p = blowup(static_cast<std::size_t>(state.range(0)));
    for(auto _ : state)
        benchmark::DoNotOptimize(proof_equiv(p, p, {Exec::Serial, false}));
}

} // namespace

BENCHMARK(BM_ConflictParallel)->Arg(8)->Arg(10)->Arg(12);
BENCHMARK(BM_ConflictSerial)->Arg(8)->Arg(10)->Arg(12);
BENCHMARK(BM_EnumerateParallel)->Arg(16)->Arg(20);
BENCHMARK(BM_EnumerateSerial)->Arg(16)->Arg(20);
BENCHMARK(BM_ProofEquivParallel)->Arg(8)->Arg(16);
BENCHMARK(BM_ProofEquivSerial)->Arg(8)->Arg(16);

BENCHMARK_MAIN();
