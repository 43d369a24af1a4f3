#ifndef DELDEC_SYNDROME_HPP
#define DELDEC_SYNDROME_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <span>

#include "deldec/bitseq.hpp"

namespace deldec {

// Moment vector m^(e): entry i is sum_{t<=i} t^e (entry i = i for e = 0).
// Entries stay below length^3, so 64-bit integers are exact for the
// supported lengths (up to 2^20).
struct MomentVector {
    int order = 0;
    std::vector<std::int64_t> entries;
};

MomentVector moment(int order, std::int64_t length);

// Shared immutable cache of moment entries; entries are prefix-stable, so a
// single grown copy per order serves all lengths. Thread-safe.
std::shared_ptr<const std::vector<std::int64_t>> moment_cached(int order, std::size_t min_length);

// Higher-order parity syndrome of a length-m sequence, computed on its
// 10-indicator with moduli (2m, m^2, m^3).
struct SyndromeF {
    std::int64_t m = 0;
    std::array<std::int64_t, 3> r{0, 0, 0};
    std::array<std::int64_t, 3> moduli() const { return {2 * m, m * m, m * m * m}; }
};

// 01-indicator syndrome with moduli (3, 2m).
struct SyndromeH {
    std::int64_t m = 0;
    std::array<std::int64_t, 2> r{0, 0};
    std::array<std::int64_t, 2> moduli() const { return {3, 2 * m}; }
};

inline bool operator==(const SyndromeF& a, const SyndromeF& b) { return a.m == b.m && a.r == b.r; }
inline bool operator==(const SyndromeH& a, const SyndromeH& b) { return a.m == b.m && a.r == b.r; }

SyndromeF f_syndrome(const BitSeq& c);
SyndromeH h_syndrome(const BitSeq& c);

// Boundary difference form g_v(r, x); zero iff x is constant when v is
// strictly increasing. Defined as 0 for |x| <= 1 (the padded inner-product
// form collapses).
std::int64_t g_eval(std::span<const std::int64_t> v, std::int64_t r, std::span<const std::uint8_t> x);
std::int64_t g_eval(const MomentVector& v, std::int64_t r, const BitSeq& x);

// Varshamov-Tenengolts machinery, used as baseline and subroutine.
std::int64_t vt_syndrome(const BitSeq& c);

// Recovers the unique length-n supersequence of d whose VT syndrome matches.
// Single pass over the suffix weight counts; throws DecodeFailure when no
// insertion is consistent.
BitSeq vt_decode(const BitSeq& d, std::int64_t syndrome, std::size_t n);

}  // namespace deldec

#endif
