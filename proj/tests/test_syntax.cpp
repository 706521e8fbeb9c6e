#include <doctest.h>

#include "mall/error.hpp"
#include "mall/formula.hpp"
#include "testgen.hpp"

using namespace mall;

namespace {

Formula random_formula(testgen::Rng &r, testgen::Labels &labels, int depth) {
    if(depth == 0 || testgen::coin(r, 0.3)) {
        const std::string name = testgen::pick_from(r, std::vector<std::string>{"a", "b", "c_1", "Z9"});
        return testgen::coin(r) ? Formula::atom(name) : Formula::dual(name);
    }
    Formula l = random_formula(r, labels, depth - 1);
    Formula rr = random_formula(r, labels, depth - 1);
    switch(testgen::pick(r, 4)) {
    case 0:
        return Formula::par(l, rr);
    case 1:
        return Formula::tensor(l, rr);
    case 2:
        return Formula::plus(l, rr);
    default:
        return Formula::with(labels.fresh(), l, rr);
    }
}

std::size_t naive_pair_count(const Sequent &s) {
    const auto occ = atom_occurrences(s);
    std::size_t n = 0;
    for(std::size_t i = 0; i < occ.size(); ++i)
        for(std::size_t j = 0; j < occ.size(); ++j) {
            const Formula &a = resolve(s, occ[i]);
            const Formula &b = resolve(s, occ[j]);
            if(a.kind() == FormulaKind::Atom && b.kind() == FormulaKind::DualAtom && a.name() == b.name())
                ++n;
        }
    return n;
}

} // namespace

TEST_SUITE("syntax") {

TEST_CASE("parse atomic and compound formulas") {
    CHECK(parse_formula("a") == Formula::atom("a"));
    CHECK(parse_formula("~a") == Formula::dual("a"));
    CHECK(parse_formula("(with x ~a ~b)") == Formula::with("x", Formula::dual("a"), Formula::dual("b")));
    CHECK(parse_formula("  ( tensor\n a\t(par ~b c) ) ") ==
          Formula::tensor(Formula::atom("a"), Formula::par(Formula::dual("b"), Formula::atom("c"))));
}

TEST_CASE("unbalanced parenthesis reports offset 7") {
    try {
        parse_formula("(par a");
        FAIL("expected a parse error");
    } catch(const ParseError &e) {
        CHECK(e.position() == 7);
        CHECK(std::string(e.what()).find("offset 7") != std::string::npos);
    }
}

TEST_CASE("malformed formulas are rejected") {
    for(const char *bad : {"", "(", ")", "(foo a b)", "(with a b)", "(par a b c)", "~(par a b)", "a b", "(with ~x a b)",
                           "~", "a-b", "(plus a)"})
        CHECK_THROWS_AS(parse_formula(bad), ParseError);
}

TEST_CASE("printing is canonical") {
    CHECK(print_formula(Formula::atom("a")) == "a");
    CHECK(print_formula(Formula::par(Formula::atom("a"), Formula::dual("a"))) == "(par a ~a)");
    CHECK(print_sequent(Sequent({Formula::atom("a"), Formula::dual("a")})) == "a, ~a");
    CHECK(print_sequent(parse_sequent("(plus a b) ,(with x ~a ~b)")) == "(plus a b), (with x ~a ~b)");
}

TEST_CASE("round trip on random formulas") {
    testgen::Rng r(7);
    for(int i = 0; i < 500; ++i) {
        testgen::Labels labels;
        const Formula f = random_formula(r, labels, 5);
        CHECK(parse_formula(print_formula(f)) == f);
    }
}

TEST_CASE("dual pairs of small sequents") {
    auto pairs = dual_pairs(parse_sequent("a, ~a"));
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0] == DualPair({0, ""}, {1, ""}));

    pairs = dual_pairs(parse_sequent("a, ~a, a"));
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0] == DualPair({0, ""}, {1, ""}));
    CHECK(pairs[1] == DualPair({1, ""}, {2, ""}));

    pairs = dual_pairs(parse_sequent("(par a ~a)"));
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0] == DualPair({0, "l"}, {0, "r"}));
}

TEST_CASE("dual pairs are canonical and symmetric") {
    const AtomOccurrence x{0, "r"}, y{2, "lr"};
    CHECK(DualPair(x, y) == DualPair(y, x));
    CHECK(DualPair(y, x).first() == x);
}

TEST_CASE("dual pair count matches a naive double loop") {
    testgen::Rng r(11);
    for(int i = 0; i < 300; ++i) {
        testgen::Labels labels;
        std::vector<Formula> fs;
        const std::size_t n = testgen::between(r, 1, 4);
        for(std::size_t k = 0; k < n; ++k)
            fs.push_back(random_formula(r, labels, 3));
        const Sequent s(fs);
        const auto pairs = dual_pairs(s);
        CHECK(pairs.size() == naive_pair_count(s));
        CHECK(std::is_sorted(pairs.begin(), pairs.end()));
        for(const DualPair &p : pairs) {
            const Formula &a = resolve(s, p.first());
            const Formula &b = resolve(s, p.second());
            CHECK(a.name() == b.name());
            CHECK(a.kind() != b.kind());
        }
    }
}

TEST_CASE("occurrence addressing") {
    const Sequent s = parse_sequent("(tensor (with x ~a ~b) d), ~d");
    CHECK(resolve(s, {0, "ll"}) == Formula::dual("a"));
    CHECK(resolve(s, {1, ""}) == Formula::dual("d"));
    CHECK_THROWS_AS(resolve(s, {0, "l"}), PreconditionError);
    CHECK_THROWS_AS(resolve(s, {2, ""}), PreconditionError);
    CHECK_THROWS_AS(resolve(s, {1, "l"}), PreconditionError);
    CHECK(atom_occurrences(s).size() == 4);
}

TEST_CASE("duplicate labels are found at sequent level") {
    const Sequent s = parse_sequent("(with x a a), (plus (with x ~a ~a) b)");
    CHECK(s.duplicate_labels() == std::vector<std::string>{"x"});
    CHECK(parse_sequent("(with x a a), (with y ~a ~a)").duplicate_labels().empty());
}

TEST_CASE("empty sequent text") {
    CHECK(parse_sequent("").empty());
    CHECK(parse_sequent("   ").empty());
    CHECK_THROWS_AS(parse_sequent("a,"), ParseError);
}

}
