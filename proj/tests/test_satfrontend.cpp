#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>
#include <string>

#include "ovd/satfrontend.hpp"

using namespace ovd;

namespace {

CnfFormula random_cnf(int num_vars, int num_clauses, std::mt19937_64& rng) {
    CnfFormula f;
    f.num_vars = num_vars;
    for (int c = 0; c < num_clauses; ++c) {
        std::vector<int> clause;
        const int width = 1 + static_cast<int>(rng() % 3);
        for (int k = 0; k < width; ++k) {
            const int var = 1 + static_cast<int>(rng() % num_vars);
            clause.push_back(rng() % 2 ? var : -var);
        }
        f.clauses.push_back(std::move(clause));
    }
    return f;
}

}  // namespace

TEST_CASE("dimacs parsing") {
    SUBCASE("comments, multi-line clauses, negative literals") {
        std::istringstream in(
            "c a small formula\n"
            "p cnf 3 2\n"
            "1 -2\n"
            "0\n"
            "c trailing comment\n"
            "-1 2 3 0\n");
        const auto f = parse_dimacs(in);
        CHECK(f.num_vars == 3);
        REQUIRE(f.clauses.size() == 2);
        CHECK(f.clauses[0] == std::vector<int>{1, -2});
        CHECK(f.clauses[1] == std::vector<int>{-1, 2, 3});
    }
    SUBCASE("errors carry line numbers") {
        std::istringstream no_header("1 2 0\n");
        CHECK_THROWS_WITH_AS(parse_dimacs(no_header), "line 1: clause before 'p cnf' header",
                             ParseError);
        std::istringstream out_of_range("p cnf 2 1\n1 3 0\n");
        CHECK_THROWS_AS(parse_dimacs(out_of_range), ParseError);
        std::istringstream unterminated("p cnf 2 1\n1 2\n");
        CHECK_THROWS_AS(parse_dimacs(unterminated), ParseError);
        std::istringstream miscounted("p cnf 2 2\n1 0\n");
        CHECK_THROWS_AS(parse_dimacs(miscounted), ParseError);
        std::istringstream empty_clause("p cnf 2 1\n0\n");
        CHECK_THROWS_AS(parse_dimacs(empty_clause), ParseError);
    }
}

TEST_CASE("split groups cover the variables in order") {
    CnfFormula f;
    f.num_vars = 6;  // groups of sizes 2, 2, 1, 1
    f.clauses = {{1, -4}, {5, 6}, {-2, 3}};
    const auto lists = split_and_list(f);
    CHECK(lists[0].size() == 4);
    CHECK(lists[1].size() == 4);
    CHECK(lists[2].size() == 2);
    CHECK(lists[3].size() == 2);
    // Group 2 holds variable 5 alone; assignment 1 satisfies clause 1.
    CHECK(lists[2][1].bit(2) == 0);
    CHECK(lists[2][0].bit(2) == 1);
    // No assignment of group 2 touches clauses 0 or 2.
    for (const auto& v : lists[2]) {
        CHECK(v.bit(1) == 1);
        CHECK(v.bit(3) == 1);
    }
}

TEST_CASE("merged instance encodes satisfiability as a distinct quadruple") {
    SUBCASE("satisfiable") {
        CnfFormula f;
        f.num_vars = 4;
        f.clauses = {{1, 2}, {-3}, {4}};
        CHECK(brute_force_sat(f));
        const auto inst = merge_groups(split_and_list(f));
        CHECK(inst.l == 3 + 4);
        CHECK(classify(inst).tag == ClassTag::Distinct);
    }
    SUBCASE("unsatisfiable") {
        CnfFormula f;
        f.num_vars = 2;
        f.clauses = {{1}, {-1}, {2, -2}};
        CHECK_FALSE(brute_force_sat(f));
        const auto inst = merge_groups(split_and_list(f));
        CHECK(classify(inst).tag != ClassTag::Distinct);
    }
}

TEST_CASE("gadget coordinates force one vector per group") {
    CnfFormula f;
    f.num_vars = 4;
    f.clauses = {{1, -1}};  // tautology: every partial assignment satisfies it
    const auto lists = split_and_list(f);
    const auto inst = merge_groups(lists);
    // Two vectors from the same group share a 1 at that group's gadget
    // coordinate, so no orthogonal quadruple repeats a group.
    const auto cls = classify(inst);
    REQUIRE(cls.tag == ClassTag::Distinct);
    const auto w = *cls.witness;
    for (int g = 0; g < 4; ++g) {
        int count = 0;
        for (int x : w)
            if (inst.vectors[x].bit(1 + 1 + g) == 0) ++count;  // clause coord + gadget g
        CHECK(count == 1);
    }
}

TEST_CASE("caps are enforced") {
    CnfFormula f;
    f.num_vars = kMaxSplitVars + 1;
    f.clauses = {{1}};
    CHECK_THROWS_AS(split_and_list(f), ParameterError);
    CHECK_THROWS_AS(brute_force_sat(f), ParameterError);
}

TEST_CASE("equivalence on random formulas") {
    std::mt19937_64 rng(20240822);
    for (int trial = 0; trial < 60; ++trial) {
        const int num_vars = 4 + static_cast<int>(rng() % 7);
        const int num_clauses = 1 + static_cast<int>(rng() % 12);
        const auto f = random_cnf(num_vars, num_clauses, rng);
        const bool sat = brute_force_sat(f);
        const auto inst = merge_groups(split_and_list(f));
        CHECK(sat == (classify(inst).tag == ClassTag::Distinct));
    }
}
