#ifndef DELDEC_INDICATOR_RECOVERY_HPP
#define DELDEC_INDICATOR_RECOVERY_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "deldec/bitseq.hpp"
#include "deldec/syndrome.hpp"

namespace deldec {

// Index i in [1, 2m-2] encodes one candidate insertion into a received
// 10-indicator of context length m: position p and inserted bit b.
//
// For 1 <= i <= m-1:    p = m - i, b = 0.
// For m <= i <= 2m-2:   p = i - m + 1, b = 1.
struct InsertionIndex {
    std::int64_t i = 0;
    std::int64_t pos = 0;
    int bit = 0;
};

InsertionIndex insertion_index(std::int64_t i, std::int64_t m);

using EntryTriple = std::array<std::int64_t, 3>;

struct TargetTriple {
    EntryTriple a{0, 0, 0};
};

// Candidate indicator d(i,j): the received indicator with bits b_i, b_j
// inserted at positions p_i, p_j (smaller position first). Empty optional is
// the star cell p_i == p_j.
std::optional<BitSeq> candidate(const BitSeq& ind, std::int64_t i, std::int64_t j);

// Residual weighted sums the recovered indicator must add on top of the
// received one, reduced into [0, modulus).
TargetTriple targets(const BitSeq& ind, const SyndromeF& f);

// A^(e)_{i,j} for e in {0,1,2}: closed-form route and the defining route
// (candidate dot moment minus received dot moment). Both agree on every
// non-star cell.
std::optional<EntryTriple> matrix_entry(const BitSeq& ind, std::int64_t i, std::int64_t j);
std::optional<EntryTriple> matrix_entry_direct(const BitSeq& ind, std::int64_t i, std::int64_t j);

// Constant-time neighbour differences A^(e)_{i+1,j} - A^(e)_{i,j} and
// A^(e)_{i,j+1} - A^(e)_{i,j}. Throws StarAdjacency when either cell is star.
EntryTriple delta_row(const BitSeq& ind, std::int64_t i, std::int64_t j);
EntryTriple delta_col(const BitSeq& ind, std::int64_t i, std::int64_t j);

// Saddleback search state over the virtual matrices A^(e).
struct SearchCursor {
    std::int64_t i = 0;
    std::int64_t j = 0;
    EntryTriple x{0, 0, 0};
    std::int64_t visited = 0;
};

struct FindResult {
    std::int64_t i = 0;
    std::int64_t j = 0;
    std::int64_t visited = 0;
};

// Finds a non-star cell whose entries equal the targets in all three
// coordinates and whose candidate has no adjacent ones. The traversal
// starts at (1, 2m-2) and evaluates O(m) cells; when `trace` is given, one
// line per evaluated cell is emitted in the form
//   i=.. j=.. d(i,j)=(..) x0=.. x1=.. x2=..
FindResult find_indicator(const BitSeq& ind, const SyndromeF& f, std::ostream* trace = nullptr);

// All length-(|d|+2) supersequences of d whose 10-indicator equals the
// candidate at cell (i,j). There are at most four.
std::vector<BitSeq> expand_candidates(const BitSeq& d, std::int64_t i, std::int64_t j,
                                      const BitSeq& ind);

struct D2Result {
    BitSeq sequence;
    std::int64_t visited = 0;
};

// The two-deletion decoder D2: recovers the unique length-m supersequence of
// d matching both syndromes. Work is linear in m.
D2Result decode_two_deletions_ex(const BitSeq& d, const SyndromeF& f, const SyndromeH& h,
                                 std::ostream* trace = nullptr);
BitSeq decode_two_deletions(const BitSeq& d, const SyndromeF& f, const SyndromeH& h);

}  // namespace deldec

#endif
