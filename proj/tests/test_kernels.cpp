#include <doctest.h>

#include "mall/kernels.hpp"
#include "testgen.hpp"

using namespace mall;

TEST_SUITE("kernels") {

TEST_CASE("compiled evaluation matches tree evaluation") {
    testgen::Rng r(31);
    for(int i = 0; i < 300; ++i) {
        const auto vars = testgen::var_names(testgen::between(r, 1, 8));
        const Bdd b = testgen::random_read_once(r, vars, vars);
        const kernels::CompiledBdd c(b, vars);
        for(std::uint64_t m = 0; m < (std::uint64_t{1} << vars.size()); ++m)
            CHECK(c.eval(m) == eval(b, testgen::valuation_of(vars, m)));
    }
}

TEST_CASE("parallel and serial kernels agree") {
    testgen::Rng r(32);
    for(int i = 0; i < 500; ++i) {
        const auto vars = testgen::var_names(testgen::between(r, 1, 8));
        const auto [a, b] = testgen::random_bdd_pair(r, 8);
        std::vector<std::string> all(vars);
        for(const auto &v : variables(a))
            if(std::find(all.begin(), all.end(), v) == all.end())
                all.push_back(v);
        for(const auto &v : variables(b))
            if(std::find(all.begin(), all.end(), v) == all.end())
                all.push_back(v);
        const kernels::CompiledBdd ca(a, all), cb(b, all);
        const auto n = static_cast<unsigned>(all.size());
        CHECK(kernels::agree_everywhere(ca, cb, n) == kernels::serial::agree_everywhere(ca, cb, n));

        const auto ma = to_monomials(negate(b));
        const auto mb = to_monomials(a);
        CHECK(kernels::all_pairs_conflict(ma, mb) == kernels::serial::all_pairs_conflict(ma, mb));
    }
}

TEST_CASE("conflict kernel on empty and large inputs") {
    std::vector<Monomial> none;
    std::vector<Monomial> one{Monomial()};
    CHECK(kernels::all_pairs_conflict(none, one));
    CHECK(!kernels::all_pairs_conflict(one, one));
    testgen::Rng r(33);
    const auto vars = testgen::var_names(10);
    std::vector<Monomial> pos, neg;
    for(int i = 0; i < 300; ++i) {
        auto m = testgen::random_monomial(r, vars).literals();
        m.erase(std::remove_if(m.begin(), m.end(), [](const Literal &l) { return l.var == "x1"; }), m.end());
        auto p = m, n = m;
        p.push_back({"x1", true});
        n.push_back({"x1", false});
        pos.emplace_back(p);
        neg.emplace_back(n);
    }
    CHECK(kernels::all_pairs_conflict(pos, neg));
    CHECK(kernels::serial::all_pairs_conflict(pos, neg));
    neg.push_back(Monomial());
    CHECK(!kernels::all_pairs_conflict(pos, neg));
    CHECK(!kernels::serial::all_pairs_conflict(pos, neg));
}

}
