#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <unordered_set>

#include "deldec/bitseq.hpp"

using namespace deldec;

namespace {

BitSeq bs(const char* s) { return BitSeq::parse(s); }

BitSeq from_mask(std::uint32_t mask, int len) {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(len));
    for (int t = 0; t < len; ++t) bits[static_cast<std::size_t>(t)] = (mask >> t) & 1;
    return BitSeq(std::move(bits));
}

bool one_deletion_apart(const BitSeq& shorter, const BitSeq& longer) {
    return shorter.size() + 1 == longer.size() && is_subsequence(shorter, longer);
}

}  // namespace

TEST_CASE("indicator10 examples") {
    CHECK(indicator10(bs("11001010")) == bs("0100101"));
    CHECK(indicator10(bs("0000")) == bs("000"));
    CHECK(indicator10(bs("1010")) == bs("101"));
    CHECK_THROWS_AS(indicator10(bs("1")), InvalidInput);
}

TEST_CASE("indicator01 examples") {
    CHECK(indicator01(bs("11001010")) == bs("0001010"));
    CHECK(indicator01(bs("111")) == bs("00"));
    CHECK(indicator01(bs("0101")) == bs("101"));
    CHECK_THROWS_AS(indicator01(bs("0")), InvalidInput);
}

TEST_CASE("delete_at examples") {
    std::vector<std::size_t> pos{1, 6};
    CHECK(delete_at(bs("11001010"), pos) == bs("100110"));
    CHECK(delete_at(bs("101"), {}) == bs("101"));
    std::vector<std::size_t> pos2{2, 3};
    CHECK(delete_at(bs("0110"), pos2) == bs("00"));
    std::vector<std::size_t> bad{0};
    CHECK_THROWS_AS(delete_at(bs("01"), bad), InvalidInput);
    std::vector<std::size_t> dup{1, 1};
    CHECK_THROWS_AS(delete_at(bs("01"), dup), InvalidInput);
}

TEST_CASE("is_subsequence examples") {
    CHECK(is_subsequence(bs("100110"), bs("11001010")));
    CHECK(is_subsequence(BitSeq(), bs("10")));
    CHECK(is_subsequence(BitSeq(), BitSeq()));
    CHECK_FALSE(is_subsequence(bs("111"), bs("1010")));
}

TEST_CASE("runs and reconstruct") {
    RunDecomposition r = runs(bs("11001010"));
    CHECK(r.first_symbol == 1);
    CHECK(r.run_lengths == std::vector<std::size_t>{2, 2, 1, 1, 1, 1});
    r = runs(bs("000"));
    CHECK(r.first_symbol == 0);
    CHECK(r.run_lengths == std::vector<std::size_t>{3});
    r = runs(bs("10"));
    CHECK(r.run_lengths == std::vector<std::size_t>{1, 1});
    CHECK_THROWS_AS(runs(BitSeq()), InvalidInput);

    // reconstruction is the identity, exhaustively to length 14
    for (int len = 1; len <= 14; ++len)
        for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
            const BitSeq c = from_mask(mask, len);
            CHECK(reconstruct(runs(c)) == c);
        }
}

TEST_CASE("subsequence_ball examples") {
    CHECK(subsequence_ball(bs("10"), 1) == std::vector<BitSeq>{bs("0"), bs("1")});
    CHECK(subsequence_ball(bs("000"), 1) == std::vector<BitSeq>{bs("00")});
    CHECK(subsequence_ball(bs("101"), 2) == std::vector<BitSeq>{bs("0"), bs("1")});
    CHECK_THROWS_AS(subsequence_ball(bs("10"), 3), InvalidInput);
    CHECK_THROWS_AS(subsequence_ball(BitSeq::zeros(30), 1), InvalidInput);
    CHECK(subsequence_ball(BitSeq::zeros(30), 1, true).size() == 1);
}

TEST_CASE("insertion_ball examples") {
    CHECK(insertion_ball(bs("1"), 1) == std::vector<BitSeq>{bs("01"), bs("10"), bs("11")});
    CHECK(insertion_ball(BitSeq(), 1) == std::vector<BitSeq>{bs("0"), bs("1")});
    CHECK(insertion_ball(bs("00"), 1) ==
          std::vector<BitSeq>{bs("000"), bs("001"), bs("010"), bs("100")});
}

TEST_CASE("in_deletion_ball examples") {
    CHECK(in_deletion_ball(bs("1010"), bs("1010"), 2));
    CHECK_FALSE(in_deletion_ball(bs("0000"), bs("1111"), 2));
    CHECK(in_deletion_ball(bs("11001010"), bs("10011000"), 2));  // both contain 100110
    CHECK(in_deletion_ball(bs("11001010"), bs("01001100"), 2) ==
          in_deletion_ball(bs("01001100"), bs("11001010"), 2));
    CHECK_THROWS_AS(in_deletion_ball(bs("10"), bs("1"), 1), InvalidInput);
}

TEST_CASE("one-deletion indicator correspondence, exhaustive to length 14") {
    for (int len = 2; len <= 14; ++len) {
        for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
            const BitSeq c = from_mask(mask, len);
            const BitSeq i10 = indicator10(c);
            const BitSeq i01 = indicator01(c);
            for (std::size_t t = 0; t + 1 < i10.size(); ++t) {
                REQUIRE(!(i10.raw()[t] && i10.raw()[t + 1]));
                REQUIRE(!(i01.raw()[t] && i01.raw()[t + 1]));
            }
            if (len < 3) continue;
            for (std::size_t p = 1; p <= c.size(); ++p) {
                std::vector<std::size_t> pos{p};
                const BitSeq d = delete_at(c, pos);
                REQUIRE(one_deletion_apart(indicator10(d), i10));
                REQUIRE(one_deletion_apart(indicator01(d), i01));
            }
        }
    }
}

TEST_CASE("is_subsequence agrees with ball membership up to length 10") {
    for (int len = 1; len <= 10; ++len) {
        for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
            const BitSeq c = from_mask(mask, len);
            for (int dl = 0; dl <= len; ++dl) {
                std::unordered_set<std::string> ball;
                for (const auto& s : subsequence_ball(c, static_cast<std::size_t>(len - dl)))
                    ball.insert(s.to_string());
                for (std::uint32_t dm = 0; dm < (1u << dl); ++dm) {
                    const BitSeq d = from_mask(dm, dl);
                    CHECK(is_subsequence(d, c) == (ball.count(d.to_string()) > 0));
                }
            }
        }
    }
}

TEST_CASE("bitstring text form") {
    CHECK(bs("0110").to_string() == "0110");
    CHECK(bs("0110").bit(1) == 0);
    CHECK(bs("0110").bit(2) == 1);
    CHECK_THROWS_AS(BitSeq::parse("01x"), InvalidInput);
}
