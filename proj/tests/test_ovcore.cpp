#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "ovd/ovcore.hpp"

using namespace ovd;

TEST_CASE("bit vectors parse and index 1-based") {
    const auto v = BitVector::from_string("1101");
    CHECK(v.length() == 4);
    CHECK(v.bit(1) == 1);
    CHECK(v.bit(3) == 0);
    CHECK(v.to_string() == "1101");
    CHECK_THROWS_AS(BitVector::from_string("10a1"), ParseError);
}

TEST_CASE("instances deduplicate keeping first occurrence") {
    const auto inst = OvInstance::from_strings({"110", "101", "110", "011"});
    CHECK(inst.n() == 3);
    CHECK(inst.vectors[0].to_string() == "110");
    CHECK(inst.vectors[2].to_string() == "011");
    CHECK_THROWS_AS(OvInstance::from_strings({"110", "1010"}), DimensionError);
}

TEST_CASE("orthogonality is the all-zero-column test") {
    const auto a = BitVector::from_string("0111");
    const auto b = BitVector::from_string("1011");
    const auto c = BitVector::from_string("1101");
    const auto d = BitVector::from_string("1110");
    const BitVector quad[4] = {a, b, c, d};
    CHECK(is_orthogonal(quad));
    const BitVector tri[3] = {a, b, c};
    CHECK_FALSE(is_orthogonal(tri));  // position 4 is all ones
}

TEST_CASE("ind_min returns the least common-one position or throws") {
    const auto a = BitVector::from_string("0110");
    const auto b = BitVector::from_string("0111");
    CHECK(ind_min(a, b, b, a) == 2);
    const auto z1 = BitVector::from_string("0111");
    const auto z2 = BitVector::from_string("1011");
    const auto z3 = BitVector::from_string("1101");
    const auto z4 = BitVector::from_string("1110");
    CHECK_THROWS_AS(ind_min(z1, z2, z3, z4), UndefinedIndexError);
}

TEST_CASE("maj3") {
    CHECK(maj3(1, 1, 0) == 1);
    CHECK(maj3(1, 0, 0) == 0);
    CHECK(maj3(1, 1, 1) == 1);
}

TEST_CASE("classification covers all three classes") {
    SUBCASE("distinct quadruple") {
        const auto inst = OvInstance::from_strings({"0111", "1011", "1101", "1110"});
        const auto cls = classify(inst);
        CHECK(cls.tag == ClassTag::Distinct);
        REQUIRE(cls.witness.has_value());
        CHECK(*cls.witness == std::array<int, 4>{0, 1, 2, 3});
    }
    SUBCASE("orthogonal triple with only three vectors is degenerate") {
        const auto inst = OvInstance::from_strings({"110", "101", "011"});
        CHECK(classify(inst).tag == ClassTag::Degenerate);
    }
    SUBCASE("shared common-one column means none") {
        const auto inst = OvInstance::from_strings({"111", "110", "101"});
        CHECK(classify(inst).tag == ClassTag::None);
    }
    SUBCASE("an orthogonal triple among four distinct vectors yields distinct") {
        // Orthogonality is monotone: any fourth distinct vector completes a
        // distinct orthogonal quadruple, so this is not degenerate.
        const auto inst = OvInstance::from_strings({"110", "101", "011", "111"});
        CHECK(classify(inst).tag == ClassTag::Distinct);
    }
}

TEST_CASE("witness is lexicographically first") {
    const auto inst =
        OvInstance::from_strings({"1111", "0111", "1011", "1101", "1110"});
    const auto cls = classify(inst);
    REQUIRE(cls.tag == ClassTag::Distinct);
    CHECK(*cls.witness == std::array<int, 4>{1, 2, 3, 4});
}

TEST_CASE("find_orthogonal_tuple honors the distinctness flag") {
    const auto deg = OvInstance::from_strings({"110", "101", "011"});
    CHECK_FALSE(find_orthogonal_tuple(deg, 2, true).has_value());
    CHECK(find_orthogonal_tuple(deg, 3, true).has_value());
    // With repetition the orthogonal triple also witnesses k = 4.
    CHECK(find_orthogonal_tuple(deg, 4, false).has_value());
    CHECK_THROWS_AS(find_orthogonal_tuple(deg, 4, true), ParameterError);
}

TEST_CASE("generators are seed-deterministic") {
    for (std::uint64_t seed : {1ull, 42ull, 977ull}) {
        const auto a = gen_random(6, 5, 0.5, seed);
        const auto b = gen_random(6, 5, 0.5, seed);
        CHECK(a.vectors == b.vectors);
        const auto p = gen_planted_distinct(6, 5, seed);
        const auto q = gen_planted_distinct(6, 5, seed);
        CHECK(p.vectors == q.vectors);
    }
    const auto a = gen_random(6, 5, 0.5, 1);
    const auto b = gen_random(6, 5, 0.5, 2);
    CHECK(a.vectors != b.vectors);
}

TEST_CASE("no-instance generator delivers the NONE class in both modes") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto f = gen_no_instance(5, 4, NoInstanceMode::ForcedOne, seed);
        CHECK(classify(f).tag == ClassTag::None);
        const auto r = gen_no_instance(4, 4, NoInstanceMode::Rejection, seed);
        CHECK(classify(r).tag == ClassTag::None);
    }
}

TEST_CASE("planted generator plants the advertised quadruple") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        // l = 6 leaves two free positions, enough for three distinct fillers.
        const auto inst = gen_planted_distinct(7, 6, seed);
        CHECK(inst.n() == 7);
        const BitVector quad[4] = {inst.vectors[0], inst.vectors[1], inst.vectors[2],
                                   inst.vectors[3]};
        CHECK(is_orthogonal(quad));
        CHECK(classify(inst).tag == ClassTag::Distinct);
    }
    const auto tight = gen_planted_distinct(6, 5, 11);
    CHECK(tight.n() == 6);
    CHECK(classify(tight).tag == ClassTag::Distinct);
}

TEST_CASE("density extremes") {
    const auto ones = gen_random(3, 6, 1.0, 5);
    for (const auto& v : ones.vectors) CHECK(v.mask() == 0x3f);
    // Density 0 collapses to the single all-zero vector after deduplication.
    const auto zeros = gen_random(3, 6, 0.0, 5);
    CHECK(zeros.n() == 1);
    CHECK(zeros.vectors[0].mask() == 0);
}

TEST_CASE("ov text round-trip with comments") {
    std::istringstream in("# sample\n3 4\n0111\n# interior comment\n1011\n1101\n");
    const auto inst = read_ov(in);
    CHECK(inst.n() == 3);
    CHECK(inst.l == 4);
    std::ostringstream out;
    write_ov(out, inst);
    std::istringstream again(out.str());
    const auto inst2 = read_ov(again);
    CHECK(inst2.vectors == inst.vectors);
}

TEST_CASE("ov parser reports malformed input with line numbers") {
    std::istringstream bad("2 3\n101\n1x1\n");
    CHECK_THROWS_AS(read_ov(bad), ParseError);
    std::istringstream wrong_len("2 3\n101\n10\n");
    CHECK_THROWS_AS(read_ov(wrong_len), ParseError);
    std::istringstream truncated("3 3\n101\n");
    CHECK_THROWS_AS(read_ov(truncated), ParseError);
}
