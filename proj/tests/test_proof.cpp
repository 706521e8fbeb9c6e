#include <doctest.h>

#include "mall/error.hpp"
#include "mall/proof.hpp"
#include "testgen.hpp"

using namespace mall;

namespace {

const Formula a = Formula::atom("a");
const Formula b = Formula::atom("b");

bool has_message(const std::vector<RuleViolation> &vs, const std::string &needle) {
    for(const auto &v : vs)
        if(v.message.find(needle) != std::string::npos)
            return true;
    return false;
}

} // namespace

TEST_SUITE("proof") {

TEST_CASE("axiom and plus conclusions") {
    CHECK(print_sequent(Proof::axiom("a").conclusion()) == "a, ~a");
    CHECK(print_sequent(Proof::plus_left(b, 0, Proof::axiom("a")).conclusion()) == "(plus a b), ~a");
    CHECK(print_sequent(Proof::plus_right(a, 0, Proof::axiom("b")).conclusion()) == "(plus a b), ~b");
}

TEST_CASE("with rule over two plus premises") {
    const Proof p = Proof::with("x", Proof::plus_left(b, 0, Proof::axiom("a")), Proof::plus_right(a, 0, Proof::axiom("b")));
    CHECK(print_sequent(p.conclusion()) == "(plus a b), (with x ~a ~b)");
    CHECK(is_valid(p));
}

TEST_CASE("tensor and par schemas") {
    const Proof t = Proof::tensor(Proof::axiom("a"), Proof::axiom("b"));
    CHECK(print_sequent(t.conclusion()) == "a, b, (tensor ~a ~b)");
    const Proof p = Proof::par(0, Proof::axiom("a"));
    CHECK(print_sequent(p.conclusion()) == "(par a ~a)");
    CHECK(print_sequent(Proof::exchange(0, Proof::axiom("a")).conclusion()) == "~a, a");
}

TEST_CASE("validation accepts well formed proofs") {
    CHECK(validate_proof(Proof::axiom("a")).empty());
    CHECK(is_valid(testgen::worked_example_proof()));
    CHECK(is_valid(testgen::blowup_proof(4)));
}

TEST_CASE("with premises must share their context") {
    const auto vs = validate_proof(Proof::with("x", Proof::axiom("a"), Proof::axiom("b")));
    REQUIRE(!vs.empty());
    CHECK(vs[0].path.empty());
    CHECK(vs[0].expected == "a");
    CHECK(vs[0].actual == "b");
}

TEST_CASE("duplicate labels in the conclusion are violations") {
    const Proof w = Proof::with("x", Proof::axiom("a"), Proof::axiom("a"));
    const auto vs = validate_proof(Proof::tensor(w, w));
    CHECK(has_message(vs, "duplicate with label x"));
}

TEST_CASE("positions out of range are violations") {
    CHECK(!is_valid(Proof::exchange(1, Proof::axiom("a"))));
    CHECK(!is_valid(Proof::par(1, Proof::axiom("a"))));
    CHECK(!is_valid(Proof::plus_left(b, 2, Proof::axiom("a"))));
    const auto vs = validate_proof(Proof::with("x", Proof::axiom("a"), Proof::exchange(3, Proof::axiom("a"))));
    REQUIRE(!vs.empty());
    CHECK(vs[0].path == std::vector<std::size_t>{1});
    CHECK_THROWS_AS(require_valid(Proof::exchange(1, Proof::axiom("a"))), PreconditionError);
}

TEST_CASE("all violations are reported") {
    const Proof bad = Proof::tensor(Proof::par(4, Proof::axiom("a")), Proof::exchange(9, Proof::axiom("b")));
    CHECK(validate_proof(bad).size() >= 2);
}

TEST_CASE("trace through tensor routes to one premise") {
    // ⊢ a, b, (tensor ~a ~b): occurrence (1,"") lives in the right context.
    const Proof t = Proof::tensor(Proof::axiom("a"), Proof::axiom("b"));
    auto img = trace_occurrence(t, {1, ""});
    REQUIRE(img.size() == 2);
    CHECK(!img[0]);
    CHECK(img[1] == AtomOccurrence{0, ""});
    img = trace_occurrence(t, {2, "l"});
    CHECK(img[0] == AtomOccurrence{1, ""});
    CHECK(!img[1]);
    CHECK_THROWS_AS(trace_occurrence(t, {2, ""}), PreconditionError);
}

TEST_CASE("trace through with duplicates the context") {
    const Proof p = Proof::with("x", Proof::plus_left(b, 0, Proof::axiom("a")), Proof::plus_right(a, 0, Proof::axiom("b")));
    auto img = trace_occurrence(p, {0, "l"});
    CHECK(img[0] == AtomOccurrence{0, "l"});
    CHECK(img[1] == AtomOccurrence{0, "l"});
    img = trace_occurrence(p, {1, "r"});
    CHECK(!img[0]);
    CHECK(img[1] == AtomOccurrence{1, ""});
}

TEST_CASE("par merges two formulas") {
    // ⊢ (par a b), (tensor ~a ~b) from ⊢ a, b, (tensor ~a ~b)
    const Proof p = Proof::par(0, Proof::tensor(Proof::axiom("a"), Proof::axiom("b")));
    CHECK(lift_occurrence(p, 0, {1, ""}) == AtomOccurrence{0, "r"});
    CHECK(trace_occurrence(p, {0, "r"})[0] == AtomOccurrence{1, ""});
    CHECK(trace_occurrence(p, {1, "l"})[0] == AtomOccurrence{2, "l"});
}

TEST_CASE("lift inverts trace on random proofs") {
    testgen::Rng r(3);
    for(int i = 0; i < 200; ++i) {
        testgen::Labels labels;
        testgen::ProofGen gen(r, labels);
        const Proof p = gen.gen(testgen::between(r, 1, 12));
        REQUIRE(is_valid(p));
        for(const AtomOccurrence &o : atom_occurrences(p.conclusion())) {
            const auto img = trace_occurrence(p, o);
            for(std::size_t k = 0; k < img.size(); ++k)
                if(img[k])
                    CHECK(lift_occurrence(p, k, *img[k]) == o);
        }
    }
}

TEST_CASE("exchange keeps the dual pair count") {
    testgen::Rng r(5);
    for(int i = 0; i < 200; ++i) {
        testgen::Labels labels;
        testgen::ProofGen gen(r, labels);
        const Proof p = gen.gen(testgen::between(r, 1, 10));
        const std::size_t n = p.conclusion().size();
        if(n < 2)
            continue;
        const Proof q = Proof::exchange(testgen::pick(r, n - 1), p);
        CHECK(dual_pairs(q.conclusion()).size() == dual_pairs(p.conclusion()).size());
    }
}

TEST_CASE("generated proofs validate and schema-breaking edits do not") {
    testgen::Rng r(9);
    for(int i = 0; i < 300; ++i) {
        testgen::Labels labels;
        testgen::ProofGen gen(r, labels);
        const Proof p = gen.gen(testgen::between(r, 1, 12));
        CHECK(is_valid(p));
        const std::size_t n = p.conclusion().size();
        CHECK(!is_valid(Proof::exchange(n - 1, p)));
        CHECK(!is_valid(Proof::par(n - 1, p)));
        if(n >= 2)
            CHECK(!is_valid(Proof::with("zz", p, Proof::plus_left(a, 0, p))));
    }
}

TEST_CASE("proof text round trip") {
    testgen::Rng r(13);
    for(int i = 0; i < 300; ++i) {
        testgen::Labels labels;
        testgen::ProofGen gen(r, labels);
        const Proof p = gen.gen(testgen::between(r, 1, 12));
        const Proof q = parse_proof(print_proof(p));
        CHECK(print_proof(q) == print_proof(p));
        CHECK(q.conclusion() == p.conclusion());
    }
    CHECK(print_proof(parse_proof("(with x (plusL b 0 (ax a)) (plusR a 0 (ax b)))")) ==
          "(with x (plusL b 0 (ax a)) (plusR a 0 (ax b)))");
    CHECK_THROWS_AS(parse_proof("(ax a) (ax b)"), ParseError);
    CHECK_THROWS_AS(parse_proof("(ex -1 (ax a))"), ParseError);
    CHECK_THROWS_AS(parse_proof("(tensor (ax a))"), ParseError);
}

TEST_CASE("searched proofs conclude the requested sequent") {
    testgen::Rng r(17);
    for(int i = 0; i < 100; ++i) {
        testgen::Labels labels;
        testgen::ProofGen gen(r, labels);
        const Proof p = gen.gen(testgen::between(r, 1, 10));
        testgen::Prover prover(r, 100000);
        const auto q = prover.prove(p.conclusion());
        REQUIRE(q);
        CHECK(q->conclusion() == p.conclusion());
        CHECK(is_valid(*q));
    }
    testgen::Prover prover(r);
    CHECK(!prover.provable(parse_sequent("a, ~b")));
    CHECK(!prover.prove(parse_sequent("(tensor a b), ~a")));
}

}
