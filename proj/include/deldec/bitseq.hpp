#ifndef DELDEC_BITSEQ_HPP
#define DELDEC_BITSEQ_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "deldec/error.hpp"

namespace deldec {

// An ordered binary sequence. Positions in the public interface are 1-based
// throughout, matching the usual coding-theory convention.
class BitSeq {
public:
    BitSeq() = default;
    explicit BitSeq(std::vector<std::uint8_t> bits);

    static BitSeq zeros(std::size_t n) { return BitSeq(std::vector<std::uint8_t>(n, 0)); }
    static BitSeq ones(std::size_t n) { return BitSeq(std::vector<std::uint8_t>(n, 1)); }
    // Parses ASCII '0'/'1'; leftmost character is position 1.
    static BitSeq parse(std::string_view text);

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }

    // 1-based access.
    int bit(std::size_t pos) const {
        if (pos < 1 || pos > bits_.size()) throw InvalidInput("bit position out of range");
        return bits_[pos - 1];
    }
    void set_bit(std::size_t pos, int value) {
        if (pos < 1 || pos > bits_.size()) throw InvalidInput("bit position out of range");
        bits_[pos - 1] = static_cast<std::uint8_t>(value & 1);
    }
    void push_back(int value) { bits_.push_back(static_cast<std::uint8_t>(value & 1)); }

    const std::vector<std::uint8_t>& raw() const noexcept { return bits_; }
    std::span<const std::uint8_t> span() const noexcept { return bits_; }

    BitSeq slice(std::size_t first, std::size_t last) const;  // 1-based inclusive; empty if first > last
    BitSeq concat(const BitSeq& tail) const;

    std::string to_string() const;

    auto operator<=>(const BitSeq&) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

struct RunDecomposition {
    int first_symbol = 0;
    std::vector<std::size_t> run_lengths;
};

// 10- and 01-pattern indicators; output has length size()-1 and never
// contains two adjacent ones.
BitSeq indicator10(const BitSeq& c);
BitSeq indicator01(const BitSeq& c);

// Removes the given distinct 1-based positions, preserving order.
BitSeq delete_at(const BitSeq& c, std::span<const std::size_t> positions);

// Greedy left-to-right subsequence test.
bool is_subsequence(const BitSeq& d, const BitSeq& c);

RunDecomposition runs(const BitSeq& c);
BitSeq reconstruct(const RunDecomposition& r);

// Exhaustive deletion/insertion ball enumeration. Exponential in k; refuses
// sequences longer than kEnumerationLimit bits unless allow_large is set.
inline constexpr std::size_t kEnumerationLimit = 24;

std::vector<BitSeq> subsequence_ball(const BitSeq& c, std::size_t k, bool allow_large = false);
std::vector<BitSeq> insertion_ball(const BitSeq& d, std::size_t k, bool allow_large = false);

// True iff subsequence_ball(a,k) and subsequence_ball(b,k) intersect.
bool in_deletion_ball(const BitSeq& a, const BitSeq& b, std::size_t k, bool allow_large = false);

}  // namespace deldec

#endif
