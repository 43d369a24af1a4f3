#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "deldec/indicator_recovery.hpp"
#include "deldec/oracle.hpp"

using namespace deldec;

namespace {

BitSeq bs(const char* s) { return BitSeq::parse(s); }

BitSeq from_mask(std::uint32_t mask, int len) {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(len));
    for (int t = 0; t < len; ++t) bits[static_cast<std::size_t>(t)] = (mask >> t) & 1;
    return BitSeq(std::move(bits));
}

SyndromeF f_of(const BitSeq& c) { return f_syndrome(c); }
SyndromeH h_of(const BitSeq& c) { return h_syndrome(c); }

const BitSeq kWorkedInd = bs("10001");  // indicator of the received d in the worked example

SyndromeF worked_f() {
    SyndromeF f;
    f.m = 8;
    f.r = {14, 46, 200};
    return f;
}

}  // namespace

TEST_CASE("insertion_index mapping") {
    CHECK(insertion_index(2, 8).pos == 6);
    CHECK(insertion_index(2, 8).bit == 0);
    CHECK(insertion_index(14, 8).pos == 7);
    CHECK(insertion_index(14, 8).bit == 1);
    CHECK(insertion_index(8, 8).pos == 1);
    CHECK(insertion_index(8, 8).bit == 1);
    CHECK_THROWS_AS(insertion_index(0, 8), InvalidInput);
    CHECK_THROWS_AS(insertion_index(15, 8), InvalidInput);
}

TEST_CASE("candidate construction") {
    CHECK(candidate(kWorkedInd, 7, 12) == bs("0100101"));
    CHECK_FALSE(candidate(kWorkedInd, 1, 14).has_value());
    CHECK(candidate(kWorkedInd, 2, 14) == bs("1000101"));
}

TEST_CASE("targets") {
    CHECK(targets(kWorkedInd, worked_f()).a == EntryTriple{8, 30, 144});
    SyndromeF zero;
    zero.m = 8;
    CHECK(targets(bs("00000"), zero).a == EntryTriple{0, 0, 0});
}

TEST_CASE("matrix entries match the worked example") {
    CHECK(matrix_entry(kWorkedInd, 2, 14) == EntryTriple{7, 28, 140});
    CHECK(matrix_entry(kWorkedInd, 7, 14) == EntryTriple{9, 36, 180});
    CHECK(matrix_entry(kWorkedInd, 7, 12) == EntryTriple{8, 30, 144});
    CHECK_FALSE(matrix_entry(kWorkedInd, 1, 14).has_value());
    // the (1,2) cell is zero for every received indicator
    CHECK(matrix_entry(kWorkedInd, 1, 2) == EntryTriple{0, 0, 0});
    CHECK(matrix_entry(bs("01010"), 1, 2) == EntryTriple{0, 0, 0});
}

TEST_CASE("closed form equals the defining route, exhaustive m <= 10") {
    for (int m = 4; m <= 10; ++m) {
        const int L = m - 3;
        for (std::uint32_t mask = 0; mask < (1u << L); ++mask) {
            bool adj = false;
            for (int t = 0; t + 1 < L; ++t)
                if (((mask >> t) & 3) == 3) adj = true;
            if (adj) continue;
            const BitSeq ind = from_mask(mask, L);
            for (std::int64_t i = 1; i <= 2 * m - 2; ++i)
                for (std::int64_t j = 1; j <= 2 * m - 2; ++j)
                    REQUIRE(matrix_entry(ind, i, j) == matrix_entry_direct(ind, i, j));
        }
    }
}

TEST_CASE("delta examples from the trace") {
    CHECK(delta_row(kWorkedInd, 2, 14) == EntryTriple{1, 6, 36});   // 8-7, 34-28, 176-140
    CHECK(delta_row(kWorkedInd, 6, 14) == EntryTriple{1, 2, 4});    // 9-8, 36-34, 180-176
    CHECK(delta_row(kWorkedInd, 3, 14) == EntryTriple{0, 0, 0});    // identical candidates
    CHECK_THROWS_AS(delta_row(kWorkedInd, 1, 13), StarAdjacency);   // upper neighbour (2,13) is star
}

TEST_CASE("deltas equal direct differences, exhaustive m <= 12") {
    for (int m = 4; m <= 12; ++m) {
        const int L = m - 3;
        for (std::uint32_t mask = 0; mask < (1u << L); ++mask) {
            bool adj = false;
            for (int t = 0; t + 1 < L; ++t)
                if (((mask >> t) & 3) == 3) adj = true;
            if (adj) continue;
            const BitSeq ind = from_mask(mask, L);
            for (std::int64_t i = 1; i <= 2 * m - 2; ++i) {
                for (std::int64_t j = 1; j <= 2 * m - 2; ++j) {
                    const auto here = matrix_entry(ind, i, j);
                    if (!here) continue;
                    if (i + 1 <= 2 * m - 2) {
                        const auto up = matrix_entry(ind, i + 1, j);
                        if (up) {
                            const auto d = delta_row(ind, i, j);
                            for (int e = 0; e < 3; ++e)
                                REQUIRE(d[e] == (*up)[e] - (*here)[e]);
                        }
                    }
                    if (j + 1 <= 2 * m - 2) {
                        const auto right = matrix_entry(ind, i, j + 1);
                        if (right) {
                            const auto d = delta_col(ind, i, j);
                            for (int e = 0; e < 3; ++e)
                                REQUIRE(d[e] == (*right)[e] - (*here)[e]);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("find_indicator reproduces the worked example") {
    std::ostringstream trace;
    const FindResult r = find_indicator(kWorkedInd, worked_f(), &trace);
    CHECK(candidate(kWorkedInd, r.i, r.j) == bs("0100101"));
    CHECK(r.visited <= 8 * 14);
    const std::string t = trace.str();
    for (const char* needle : {"x0=7 x1=28 x2=140", "x0=8 x1=34 x2=176", "x0=9 x1=36 x2=180",
                               "x0=8 x1=30 x2=144"})
        CHECK(t.find(needle) != std::string::npos);
}

TEST_CASE("find_indicator zero case") {
    SyndromeF zero;
    zero.m = 8;
    const FindResult r = find_indicator(bs("00000"), zero);
    CHECK(candidate(bs("00000"), r.i, r.j) == bs("0000000"));
}

TEST_CASE("find_indicator rejects inconsistent targets") {
    SyndromeF f;
    f.m = 8;
    f.r = {15, 63, 511};  // unreachable for the zero indicator
    CHECK_THROWS_AS(find_indicator(bs("00000"), f), DecodeFailure);
}

TEST_CASE("expand_candidates examples") {
    const auto cands_w = expand_candidates(bs("100110"), 7, 12, kWorkedInd);
    CHECK(cands_w.size() <= 4);
    bool has = false;
    for (const auto& c : cands_w) has = has || c == bs("11001010");
    CHECK(has);

    // zero indicator preimages of the all-zero remnant
    SyndromeF zero;
    zero.m = 8;
    const FindResult r = find_indicator(bs("00000"), zero);
    const auto zeros = expand_candidates(BitSeq::zeros(6), r.i, r.j, bs("00000"));
    bool haszero = false;
    for (const auto& c : zeros) haszero = haszero || c == BitSeq::zeros(8);
    CHECK(haszero);
    CHECK(zeros.size() <= 4);

    // m=4: remnant (1,0) with recovered indicator (1,0,1)
    const BitSeq ind = indicator10(bs("10"));
    SyndromeF f4 = f_of(bs("1010"));
    const FindResult r4 = find_indicator(ind, f4);
    CHECK(candidate(ind, r4.i, r4.j) == bs("101"));
    const auto cands = expand_candidates(bs("10"), r4.i, r4.j, ind);
    CHECK(cands == std::vector<BitSeq>{bs("1010")});
}

TEST_CASE("decode_two_deletions worked example") {
    SyndromeH h;
    h.m = 8;
    h.r = {2, 15};
    CHECK(decode_two_deletions(bs("100110"), worked_f(), h) == bs("11001010"));
}

TEST_CASE("decode_two_deletions exhaustive m <= 9 with visited bound") {
    for (int m = 4; m <= 9; ++m) {
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
            const BitSeq c = from_mask(mask, m);
            const SyndromeF f = f_of(c);
            const SyndromeH h = h_of(c);
            for (std::size_t p1 = 1; p1 <= c.size(); ++p1) {
                for (std::size_t p2 = p1 + 1; p2 <= c.size(); ++p2) {
                    std::vector<std::size_t> pos{p1, p2};
                    const BitSeq d = delete_at(c, pos);
                    const D2Result res = decode_two_deletions_ex(d, f, h);
                    REQUIRE(res.sequence == c);
                    REQUIRE(res.visited <= 8 * (2 * m - 2));
                }
            }
        }
    }
}

TEST_CASE("full-scan oracle agrees on the worked example") {
    const auto scan = oracle::find_indicator_full_scan(kWorkedInd, worked_f());
    REQUIRE(scan.has_value());
    CHECK(*scan == bs("0100101"));
}

TEST_CASE("monotone rows and columns on a sample") {
    const BitSeq ind = indicator10(bs("1001011010"));  // m = 12 context
    const int M = 2 * 12 - 2;
    for (int e = 0; e < 3; ++e) {
        for (std::int64_t i = 1; i <= M; ++i) {
            std::int64_t last = -1;
            for (std::int64_t j = 1; j <= M; ++j) {
                const auto entry = matrix_entry(ind, i, j);
                if (!entry) continue;
                REQUIRE((*entry)[e] >= last);
                last = (*entry)[e];
            }
        }
    }
}
