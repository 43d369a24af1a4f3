#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "deldec/codec.hpp"
#include "deldec/indicator_recovery.hpp"

using namespace deldec;

namespace {

BitSeq bs(const char* s) { return BitSeq::parse(s); }

BitSeq random_message(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::uint8_t> bits(n);
    for (auto& b : bits) b = rng() & 1;
    return BitSeq(std::move(bits));
}

}  // namespace

TEST_CASE("layout arithmetic") {
    const CodeLayout l8 = layout(8);
    CHECK(l8.layer1_widths == std::array<int, 5>{4, 6, 9, 2, 4});
    CHECK(l8.N1 == 25);
    CHECK(l8.N2 == 114);
    CHECK(l8.N == 147);

    const CodeLayout l1024 = layout(1024);
    CHECK(l1024.layer1_widths == std::array<int, 5>{11, 20, 30, 2, 11});
    CHECK(l1024.N1 == 74);

    CHECK_THROWS_AS(layout(7), InvalidInput);
    CHECK_THROWS_AS(layout((std::int64_t(1) << 20) + 1), InvalidInput);
}

TEST_CASE("pack/unpack syndromes") {
    const BitSeq c = bs("11001010");
    const auto lay = layout(8);
    const SyndromeF f = f_syndrome(c);
    const SyndromeH h = h_syndrome(c);
    const BitSeq packed = pack_syndromes(f, h, lay.layer1_widths);
    CHECK(packed.size() == 25);
    const auto [f2, h2] = unpack_syndromes(packed, lay.layer1_widths, 8);
    CHECK(f2 == f);
    CHECK(h2 == h);
}

TEST_CASE("r3 encode") {
    CHECK(r3_encode(bs("101")) == bs("111000111"));
    CHECK(r3_encode(BitSeq()) == BitSeq());
    CHECK(r3_encode(bs("00")) == bs("000000"));
}

TEST_CASE("r3 decode") {
    R3Decode r = r3_decode(bs("1100011"), 3);
    CHECK(r.s == bs("101"));
    CHECK(r.imputed_runs == std::vector<std::size_t>{1, 0, 1});

    r = r3_decode(r3_encode(bs("0110")), 4);
    CHECK(r.s == bs("0110"));
    for (auto p : r.imputed_runs) CHECK(p == 0);

    r = r3_decode(bs("1000111"), 3);
    CHECK(r.s == bs("101"));
    CHECK(r.imputed_runs == std::vector<std::size_t>{2, 0, 0});

    CHECK_THROWS_AS(r3_decode(bs("110001111"), 3), DecodeFailure);  // runs not multiples of 3
    CHECK_THROWS_AS(r3_decode(bs("11"), 3), InvalidInput);          // too short
}

TEST_CASE("encode is systematic with the documented layout") {
    const BitSeq c = bs("11001010");
    const BitSeq cw = encode(c);
    CHECK(cw.size() == 147);
    CHECK(cw.slice(1, 8) == c);
    const auto lay = layout(8);
    const auto [f, h] = unpack_syndromes(cw.slice(9, 8 + 25), lay.layer1_widths, 8);
    CHECK(f.r == std::array<std::int64_t, 3>{14, 46, 200});
    CHECK(h.r == std::array<std::int64_t, 2>{2, 15});
}

TEST_CASE("longest_r3_suffix") {
    CHECK(longest_r3_suffix(bs("10100"), bs("100")) == 3);
    CHECK(longest_r3_suffix(bs("110"), bs("00")) == 1);
    CHECK(longest_r3_suffix(bs("101"), bs("111")) == 1);
    CHECK(longest_r3_suffix(BitSeq(), bs("1")) == 0);
}

TEST_CASE("decode the worked-example corruption") {
    const BitSeq c = bs("11001010");
    const BitSeq cw = encode(c);
    std::vector<std::size_t> pos{1, 6};
    const DecodeReport rep = decode(delete_at(cw, pos), 8);
    CHECK(rep.message == c);
    CHECK(rep.path == DecodeReport::Path::general);
}

TEST_CASE("early-return fires when both deletions hit the repetition tail") {
    const BitSeq c = bs("10110001");
    const BitSeq cw = encode(c);
    // delete two bits late in the final repetition segment, past its first run
    std::vector<std::size_t> pos{cw.size(), cw.size() - 3};
    const DecodeReport rep = decode(delete_at(cw, pos), 8);
    CHECK(rep.message == c);
    CHECK(rep.path == DecodeReport::Path::early_return);

    DecodeOptions opt;
    opt.force_general_path = true;
    const DecodeReport gen = decode(delete_at(cw, pos), 8, opt);
    CHECK(gen.message == c);
    CHECK(gen.path == DecodeReport::Path::general);
}

TEST_CASE("intact and single-deletion words decode via trimming") {
    const BitSeq c = bs("01110010");
    const BitSeq cw = encode(c);
    CHECK(decode(cw, 8).message == c);
    CHECK(decode(cw, 8).trimmed == 2);
    std::vector<std::size_t> pos{17};
    CHECK(decode(delete_at(cw, pos), 8).message == c);
    CHECK_THROWS_AS(decode(cw.slice(1, cw.size() - 3), 8), InvalidInput);
}

TEST_CASE("layer-2 window always reconstructs the true second layer") {
    std::mt19937_64 rng(31337);
    const auto lay = layout(8);
    for (int trial = 0; trial < 200; ++trial) {
        const BitSeq c = random_message(rng, 8);
        const BitSeq cw = encode(c);
        const BitSeq truth = cw.slice(static_cast<std::size_t>(lay.n + lay.N1 + 1),
                                      static_cast<std::size_t>(lay.N));
        std::size_t p1 = 1 + rng() % cw.size(), p2 = 1 + rng() % cw.size();
        while (p2 == p1) p2 = 1 + rng() % cw.size();
        std::vector<std::size_t> pos{std::min(p1, p2), std::max(p1, p2)};
        const BitSeq d = delete_at(cw, pos);
        const BitSeq window = d.slice(d.size() - static_cast<std::size_t>(lay.N2 - 2) + 1, d.size());
        const R3Decode rep = r3_decode(window, static_cast<std::size_t>(lay.S2));
        REQUIRE(r3_encode(rep.s) == truth);
    }
}

TEST_CASE("sampled roundtrip n=8, both branch configurations") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 24; ++trial) {
        const BitSeq c = random_message(rng, 8);
        const BitSeq cw = encode(c);
        std::vector<std::vector<std::size_t>> patterns{{}};
        for (std::size_t i = 1; i <= cw.size(); i += 13) patterns.push_back({i});
        for (int s = 0; s < 40; ++s) {
            std::size_t p1 = 1 + rng() % cw.size(), p2 = 1 + rng() % cw.size();
            if (p1 == p2) continue;
            patterns.push_back({std::min(p1, p2), std::max(p1, p2)});
        }
        for (const auto& pat : patterns) {
            const BitSeq rx = delete_at(cw, pat);
            for (bool force : {false, true}) {
                DecodeOptions opt;
                opt.force_general_path = force;
                REQUIRE(decode(rx, 8, opt).message == c);
            }
        }
    }
}

TEST_CASE("largest supported message length") {
    std::mt19937_64 rng(5);
    const std::size_t n = std::size_t(1) << 20;
    const BitSeq c = random_message(rng, n);
    const BitSeq cw = encode(c);
    const auto lay = layout(static_cast<std::int64_t>(n));
    REQUIRE(cw.size() == static_cast<std::size_t>(lay.N));
    std::size_t p1 = 1 + rng() % cw.size(), p2 = 1 + rng() % cw.size();
    while (p2 == p1) p2 = 1 + rng() % cw.size();
    std::vector<std::size_t> pos{std::min(p1, p2), std::max(p1, p2)};
    CHECK(decode(delete_at(cw, pos), static_cast<std::int64_t>(n)).message == c);
}

TEST_CASE("sampled roundtrip for n in 9..16") {
    std::mt19937_64 rng(11);
    for (std::int64_t n = 9; n <= 16; ++n) {
        for (int trial = 0; trial < 6; ++trial) {
            const BitSeq c = random_message(rng, static_cast<std::size_t>(n));
            const BitSeq cw = encode(c);
            for (int s = 0; s < 25; ++s) {
                std::size_t p1 = 1 + rng() % cw.size(), p2 = 1 + rng() % cw.size();
                if (p1 == p2) continue;
                std::vector<std::size_t> pos{std::min(p1, p2), std::max(p1, p2)};
                REQUIRE(decode(delete_at(cw, pos), n).message == c);
            }
        }
    }
}
