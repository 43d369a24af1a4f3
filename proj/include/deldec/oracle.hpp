#ifndef DELDEC_ORACLE_HPP
#define DELDEC_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "deldec/bitseq.hpp"
#include "deldec/indicator_recovery.hpp"
#include "deldec/syndrome.hpp"

namespace deldec::oracle {

inline constexpr std::uint64_t kDefaultSeed = 0xD31DEC0DEULL;

struct VerificationReport {
    std::string scope;
    std::uint64_t cases_checked = 0;
    std::vector<std::string> counterexamples;
    double elapsed_seconds = 0.0;
    bool pass() const { return counterexamples.empty(); }
    std::string to_json_string() const;
};

// Serial reference decoder: enumerate all two-insertion supersequences of d
// and keep the ones matching both syndromes. Exactly one must survive.
BitSeq brute_decode(const BitSeq& d, const SyndromeF& f, const SyndromeH& h);

// Serial reference for vt_decode: scan all single insertions.
BitSeq vt_decode_brute(const BitSeq& d, std::int64_t syndrome, std::size_t n);

// Full O(m^2) scan of the candidate matrices: returns the indicator carried
// by the cells matching the targets (with the adjacency condition), checking
// that all such cells agree.
std::optional<BitSeq> find_indicator_full_scan(const BitSeq& ind, const SyndromeF& f);

// Exhaustive confusability check for all length-n sequences: equal syndromes
// plus a shared (n-2)-subsequence must imply equality. drop_component in
// 0..4 removes one of (f0, f1, f2, h0, h1) from the bucketing key; -1 keeps
// all five.
VerificationReport verify_theorem_main(int n, int drop_component = -1, int jobs = 0);

struct LemmaGBounds {
    int n_max = 13;
    int s_max = 5;
};
VerificationReport verify_lemma_g(const LemmaGBounds& bounds = {}, int jobs = 0);

struct LemmaGPlusBounds {
    int n_max = 13;
    int s_max = 3;
};
VerificationReport verify_lemma_gplus(const LemmaGPlusBounds& bounds = {}, int jobs = 0);

// Exhaustive checks of the indicator lemmas over all confusable pairs of
// length n: 10-indicator recovery from f, 01-indicator recovery from h,
// reconstruction from both indicators, and the mod-3 weight lemma in both
// the 01 and 10 readings.
VerificationReport verify_indicator_lemmas(int n, int jobs = 0);

// Randomised check of the three appendix window identities relating
// indicator weighted-sum differences to g-expressions.
VerificationReport verify_case_identities(std::int64_t trials, int n,
                                          std::uint64_t seed = kDefaultSeed, int jobs = 0);

struct RoundtripOptions {
    std::int64_t messages = 0;      // 0: all 2^n messages
    std::int64_t pair_samples = 0;  // 0: every deletion pair, else sampled
    bool force_general = false;
    std::uint64_t seed = kDefaultSeed;
    int jobs = 0;
};

// Encode/corrupt/decode sweep: every message against deletion patterns of
// size 0, 1 and 2.
VerificationReport verify_roundtrip(std::int64_t n, const RoundtripOptions& options = {});

}  // namespace deldec::oracle

#endif
