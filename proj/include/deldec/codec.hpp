#ifndef DELDEC_CODEC_HPP
#define DELDEC_CODEC_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <utility>

#include "deldec/bitseq.hpp"
#include "deldec/syndrome.hpp"

namespace deldec {

// Derived length bookkeeping for the two-layer systematic codeword
//   E(c) = c | f(c) | h(c) | r3( f(L1) | h(L1) )
// where L1 is the packed first-layer redundancy. Field widths are the exact
// ceil-log2 of each modulus, packed big-endian.
struct CodeLayout {
    std::int64_t n = 0;
    std::array<int, 5> layer1_widths{};  // f0 f1 f2 h0 h1 over m = n
    std::int64_t N1 = 0;
    std::array<int, 5> layer2_widths{};  // same fields over m = N1
    std::int64_t S2 = 0;                 // sum of layer-2 widths
    std::int64_t N2 = 0;                 // 3 * S2
    std::int64_t N = 0;                  // n + N1 + N2
};

CodeLayout layout(std::int64_t n);

inline constexpr std::int64_t kMinMessageLength = 8;
inline constexpr std::int64_t kMaxMessageLength = std::int64_t(1) << 20;

// Big-endian fixed-width packing of the five syndrome fields.
BitSeq pack_syndromes(const SyndromeF& f, const SyndromeH& h, const std::array<int, 5>& widths);
// Inverse; validates each field against its modulus for length m.
std::pair<SyndromeF, SyndromeH> unpack_syndromes(const BitSeq& bits, const std::array<int, 5>& widths,
                                                 std::int64_t m);

// 3-fold repetition code.
BitSeq r3_encode(const BitSeq& s);

struct R3Decode {
    BitSeq s;
    std::vector<std::size_t> imputed_runs;  // missing bits per received run
};

// Decodes a subsequence of r3(s) missing at most two bits by rounding every
// run length up to a multiple of three.
R3Decode r3_decode(const BitSeq& d1, std::size_t m);

BitSeq encode(const BitSeq& c);

// Longest suffix of d that is a subsequence of tail (single reverse greedy
// pass over tail).
std::size_t longest_r3_suffix(const BitSeq& d, const BitSeq& tail);

struct DecodeOptions {
    bool force_general_path = false;
    std::ostream* trace = nullptr;
};

struct DecodeReport {
    BitSeq message;
    enum class Path { early_return, general } path = Path::general;
    std::size_t suffix_len = 0;        // L, general path only
    std::size_t trimmed = 0;           // trailing bits dropped to reach N-2
    std::int64_t visited_layer1 = 0;   // search steps in the layer-1 decode
    std::int64_t visited_message = 0;  // search steps in the message decode
};

// Two-stage meta decoder; accepts received lengths N-2..N.
DecodeReport decode(const BitSeq& received, std::int64_t n, const DecodeOptions& opt = {});

}  // namespace deldec

#endif
