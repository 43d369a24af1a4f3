#include "deldec/bitseq.hpp"

#include <algorithm>
#include <unordered_set>

namespace deldec {

BitSeq::BitSeq(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_)
        if (b > 1) throw InvalidInput("BitSeq element must be 0 or 1");
}

BitSeq BitSeq::parse(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (char ch : text) {
        if (ch == '0')
            bits.push_back(0);
        else if (ch == '1')
            bits.push_back(1);
        else
            throw InvalidInput("bitstring may contain only '0' and '1'");
    }
    return BitSeq(std::move(bits));
}

BitSeq BitSeq::slice(std::size_t first, std::size_t last) const {
    if (first < 1 || last > bits_.size()) throw InvalidInput("slice bounds out of range");
    if (first > last) return BitSeq();
    return BitSeq(std::vector<std::uint8_t>(bits_.begin() + first - 1, bits_.begin() + last));
}

BitSeq BitSeq::concat(const BitSeq& tail) const {
    std::vector<std::uint8_t> out = bits_;
    out.insert(out.end(), tail.bits_.begin(), tail.bits_.end());
    return BitSeq(std::move(out));
}

std::string BitSeq::to_string() const {
    std::string out(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i]) out[i] = '1';
    return out;
}

namespace {

BitSeq indicator(const BitSeq& c, int a, int b) {
    if (c.size() < 2) throw InvalidInput("indicator requires length >= 2");
    const auto& bits = c.raw();
    std::vector<std::uint8_t> out(bits.size() - 1);
    for (std::size_t t = 0; t + 1 < bits.size(); ++t)
        out[t] = (bits[t] == a && bits[t + 1] == b) ? 1 : 0;
    return BitSeq(std::move(out));
}

}  // namespace

BitSeq indicator10(const BitSeq& c) { return indicator(c, 1, 0); }
BitSeq indicator01(const BitSeq& c) { return indicator(c, 0, 1); }

BitSeq delete_at(const BitSeq& c, std::span<const std::size_t> positions) {
    std::vector<std::size_t> sorted(positions.begin(), positions.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 1 || sorted[i] > c.size()) throw InvalidInput("deletion position out of range");
        if (i > 0 && sorted[i] == sorted[i - 1]) throw InvalidInput("duplicate deletion position");
    }
    std::vector<std::uint8_t> out;
    out.reserve(c.size() - sorted.size());
    std::size_t next = 0;
    for (std::size_t pos = 1; pos <= c.size(); ++pos) {
        if (next < sorted.size() && sorted[next] == pos) {
            ++next;
            continue;
        }
        out.push_back(c.raw()[pos - 1]);
    }
    return BitSeq(std::move(out));
}

bool is_subsequence(const BitSeq& d, const BitSeq& c) {
    std::size_t j = 0;
    for (std::size_t i = 0; i < c.size() && j < d.size(); ++i)
        if (c.raw()[i] == d.raw()[j]) ++j;
    return j == d.size();
}

RunDecomposition runs(const BitSeq& c) {
    if (c.empty()) throw InvalidInput("runs of empty sequence");
    RunDecomposition out;
    out.first_symbol = c.raw()[0];
    std::size_t len = 1;
    for (std::size_t i = 1; i < c.size(); ++i) {
        if (c.raw()[i] == c.raw()[i - 1]) {
            ++len;
        } else {
            out.run_lengths.push_back(len);
            len = 1;
        }
    }
    out.run_lengths.push_back(len);
    return out;
}

BitSeq reconstruct(const RunDecomposition& r) {
    std::vector<std::uint8_t> out;
    std::uint8_t sym = static_cast<std::uint8_t>(r.first_symbol & 1);
    for (std::size_t len : r.run_lengths) {
        if (len == 0) throw InvalidInput("run length must be positive");
        out.insert(out.end(), len, sym);
        sym ^= 1;
    }
    return BitSeq(std::move(out));
}

namespace {

std::uint64_t pack_bits(const BitSeq& s) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < s.size(); ++i) v |= std::uint64_t(s.raw()[i]) << i;
    return v;
}

BitSeq unpack_bits(std::uint64_t v, std::size_t len) {
    std::vector<std::uint8_t> bits(len);
    for (std::size_t i = 0; i < len; ++i) bits[i] = (v >> i) & 1;
    return BitSeq(std::move(bits));
}

void check_enumeration_size(std::size_t len, bool allow_large, const char* what) {
    if (!allow_large && len > kEnumerationLimit)
        throw InvalidInput(std::string(what) + ": enumeration over length > 24 refused without allow_large");
    if (len > 63) throw InvalidInput(std::string(what) + ": enumeration limited to 63 bits");
}

// One layer of single-bit deletions on packed codes of a known length.
std::unordered_set<std::uint64_t> delete_layer(const std::unordered_set<std::uint64_t>& cur,
                                               std::size_t len) {
    std::unordered_set<std::uint64_t> next;
    next.reserve(cur.size() * len);
    const std::uint64_t all = len >= 64 ? ~0ULL : ((1ULL << (len - 1)) - 1);
    (void)all;
    for (std::uint64_t v : cur) {
        for (std::size_t i = 0; i < len; ++i) {
            std::uint64_t low = v & ((1ULL << i) - 1);
            std::uint64_t high = (v >> (i + 1)) << i;
            next.insert(low | high);
        }
    }
    return next;
}

}  // namespace

std::vector<BitSeq> subsequence_ball(const BitSeq& c, std::size_t k, bool allow_large) {
    if (k > c.size()) throw InvalidInput("subsequence_ball: k exceeds sequence length");
    check_enumeration_size(c.size(), allow_large, "subsequence_ball");
    std::unordered_set<std::uint64_t> cur{pack_bits(c)};
    std::size_t len = c.size();
    for (std::size_t step = 0; step < k; ++step) {
        cur = delete_layer(cur, len);
        --len;
    }
    std::vector<BitSeq> out;
    out.reserve(cur.size());
    for (std::uint64_t v : cur) out.push_back(unpack_bits(v, len));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BitSeq> insertion_ball(const BitSeq& d, std::size_t k, bool allow_large) {
    check_enumeration_size(d.size() + k, allow_large, "insertion_ball");
    std::unordered_set<std::uint64_t> cur{pack_bits(d)};
    std::size_t len = d.size();
    for (std::size_t step = 0; step < k; ++step) {
        std::unordered_set<std::uint64_t> next;
        next.reserve(cur.size() * (len + 1) * 2);
        for (std::uint64_t v : cur) {
            for (std::size_t i = 0; i <= len; ++i) {
                std::uint64_t low = v & ((1ULL << i) - 1);
                std::uint64_t high = (v >> i) << (i + 1);
                next.insert(low | high);                     // insert 0
                next.insert(low | high | (1ULL << i));       // insert 1
            }
        }
        cur = std::move(next);
        ++len;
    }
    std::vector<BitSeq> out;
    out.reserve(cur.size());
    for (std::uint64_t v : cur) out.push_back(unpack_bits(v, len));
    std::sort(out.begin(), out.end());
    return out;
}

bool in_deletion_ball(const BitSeq& a, const BitSeq& b, std::size_t k, bool allow_large) {
    if (a.size() != b.size()) throw InvalidInput("in_deletion_ball: length mismatch");
    if (k > a.size()) throw InvalidInput("in_deletion_ball: k exceeds length");
    check_enumeration_size(a.size(), allow_large, "in_deletion_ball");
    std::unordered_set<std::uint64_t> left{pack_bits(a)};
    std::size_t len = a.size();
    for (std::size_t step = 0; step < k; ++step) {
        left = delete_layer(left, len);
        --len;
    }
    std::unordered_set<std::uint64_t> right{pack_bits(b)};
    len = b.size();
    for (std::size_t step = 0; step < k; ++step) {
        right = delete_layer(right, len);
        --len;
    }
    for (std::uint64_t v : right)
        if (left.count(v)) return true;
    return false;
}

}  // namespace deldec
