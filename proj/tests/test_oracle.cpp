#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "deldec/oracle.hpp"

using namespace deldec;
namespace oc = deldec::oracle;

namespace {

BitSeq bs(const char* s) { return BitSeq::parse(s); }

}  // namespace

TEST_CASE("brute_decode worked example") {
    SyndromeF f;
    f.m = 8;
    f.r = {14, 46, 200};
    SyndromeH h;
    h.m = 8;
    h.r = {2, 15};
    CHECK(oc::brute_decode(bs("100110"), f, h) == bs("11001010"));

    SyndromeF fz;
    fz.m = 6;
    SyndromeH hz;
    hz.m = 6;
    CHECK(oc::brute_decode(bs("0000"), fz, hz) == bs("000000"));
}

TEST_CASE("brute_decode agrees with the fast decoder on a sweep") {
    for (std::uint32_t mask = 0; mask < (1u << 7); ++mask) {
        std::vector<std::uint8_t> bits(7);
        for (int t = 0; t < 7; ++t) bits[static_cast<std::size_t>(t)] = (mask >> t) & 1;
        const BitSeq c{bits};
        const SyndromeF f = f_syndrome(c);
        const SyndromeH h = h_syndrome(c);
        for (std::size_t p1 = 1; p1 <= 7; ++p1)
            for (std::size_t p2 = p1 + 1; p2 <= 7; ++p2) {
                std::vector<std::size_t> pos{p1, p2};
                const BitSeq d = delete_at(c, pos);
                REQUIRE(oc::brute_decode(d, f, h) == decode_two_deletions(d, f, h));
            }
    }
}

TEST_CASE("vt_decode_brute agrees with the single-pass decoder") {
    CHECK(oc::vt_decode_brute(bs("111"), 3, 4) == bs("1011"));
    for (int n = 2; n <= 9; ++n) {
        for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
            std::vector<std::uint8_t> bits(static_cast<std::size_t>(n - 1));
            for (int t = 0; t + 1 < n; ++t) bits[static_cast<std::size_t>(t)] = (mask >> t) & 1;
            const BitSeq d{bits};
            for (std::int64_t syn = 0; syn <= n; ++syn)
                REQUIRE(oc::vt_decode_brute(d, syn, static_cast<std::size_t>(n)) ==
                        vt_decode(d, syn, static_cast<std::size_t>(n)));
        }
    }
}

TEST_CASE("theorem-main sweep passes at small n") {
    for (int n : {4, 6, 8}) {
        const auto rep = oc::verify_theorem_main(n);
        CHECK(rep.pass());
        CHECK(rep.cases_checked == (1ULL << n));
    }
}

TEST_CASE("dropping the third moment breaks the theorem at n=9") {
    const auto rep = oc::verify_theorem_main(9, 2);
    CHECK_FALSE(rep.pass());
}

TEST_CASE("dropping an h component breaks the theorem") {
    CHECK_FALSE(oc::verify_theorem_main(5, 3).pass());
    CHECK_FALSE(oc::verify_theorem_main(4, 4).pass());
}

TEST_CASE("lemma sweeps pass at reduced bounds") {
    CHECK(oc::verify_lemma_g({10, 3}).pass());
    CHECK(oc::verify_indicator_lemmas(8).pass());

    // both conclusion branches of the g+ sweep must actually fire
    const auto gp = oc::verify_lemma_gplus({12, 3});
    CHECK(gp.pass());
    CHECK(gp.scope.find("alternating-branch=0") == std::string::npos);
    CHECK(gp.scope.find("alternating-branch=") != std::string::npos);
}

TEST_CASE("lemma-g sweep counts degenerate single-bit windows") {
    const auto rep = oc::verify_lemma_g({6, 1});
    CHECK(rep.pass());
    CHECK(rep.cases_checked > 0);
}

TEST_CASE("case identities hold on random instances") {
    const auto rep = oc::verify_case_identities(500, 16);
    CHECK(rep.pass());
    CHECK(rep.cases_checked == 1500);
    CHECK(oc::verify_case_identities(200, 32).pass());
}

TEST_CASE("roundtrip sweep with sampled pairs") {
    oc::RoundtripOptions opt;
    opt.messages = 12;
    opt.pair_samples = 30;
    CHECK(oc::verify_roundtrip(8, opt).pass());
    opt.force_general = true;
    CHECK(oc::verify_roundtrip(8, opt).pass());
}

TEST_CASE("report serialises to JSON") {
    const auto rep = oc::verify_theorem_main(4);
    const auto j = nlohmann::json::parse(rep.to_json_string());
    CHECK(j["pass"] == true);
    CHECK(j["cases_checked"] == 16);
    CHECK(j["scope"].get<std::string>().find("theorem-main") != std::string::npos);
    CHECK(j["counterexamples"].is_array());
}
