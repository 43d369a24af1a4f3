#include "deldec/syndrome.hpp"

#include <mutex>

namespace deldec {

namespace {

constexpr std::int64_t kMaxLength = std::int64_t(1) << 20;

std::vector<std::int64_t> build_moment(int order, std::size_t length) {
    std::vector<std::int64_t> out(length);
    std::int64_t acc = 0;
    for (std::size_t i = 1; i <= length; ++i) {
        std::int64_t t = static_cast<std::int64_t>(i);
        std::int64_t pw = order == 0 ? 1 : (order == 1 ? t : t * t);
        acc += pw;
        out[i - 1] = order == 0 ? t : acc;
    }
    return out;
}

std::int64_t positive_mod(std::int64_t v, std::int64_t mod) {
    std::int64_t r = v % mod;
    return r < 0 ? r + mod : r;
}

}  // namespace

MomentVector moment(int order, std::int64_t length) {
    if (order < 0 || order > 2) throw InvalidInput("moment order must be 0, 1 or 2");
    if (length < 1 || length > kMaxLength) throw InvalidInput("moment length out of range");
    return MomentVector{order, build_moment(order, static_cast<std::size_t>(length))};
}

std::shared_ptr<const std::vector<std::int64_t>> moment_cached(int order, std::size_t min_length) {
    if (order < 0 || order > 2) throw InvalidInput("moment order must be 0, 1 or 2");
    static std::mutex mu;
    static std::shared_ptr<const std::vector<std::int64_t>> cache[3];
    std::lock_guard<std::mutex> lock(mu);
    if (!cache[order] || cache[order]->size() < min_length)
        cache[order] = std::make_shared<const std::vector<std::int64_t>>(
            build_moment(order, std::max<std::size_t>(min_length, 64)));
    return cache[order];
}

SyndromeF f_syndrome(const BitSeq& c) {
    if (c.size() < 3) throw InvalidInput("f_syndrome requires length >= 3");
    const std::int64_t m = static_cast<std::int64_t>(c.size());
    auto m1 = moment_cached(1, c.size() - 1);
    auto m2 = moment_cached(2, c.size() - 1);
    // exact accumulation before reduction; sums fit 128 bits with room
    __int128 s0 = 0, s1 = 0, s2 = 0;
    const auto& bits = c.raw();
    for (std::size_t t = 0; t + 1 < bits.size(); ++t) {
        if (bits[t] == 1 && bits[t + 1] == 0) {
            s0 += static_cast<std::int64_t>(t + 1);
            s1 += (*m1)[t];
            s2 += (*m2)[t];
        }
    }
    SyndromeF out;
    out.m = m;
    out.r[0] = static_cast<std::int64_t>(s0 % (2 * m));
    out.r[1] = static_cast<std::int64_t>(s1 % (m * m));
    out.r[2] = static_cast<std::int64_t>(s2 % (m * m * m));
    return out;
}

SyndromeH h_syndrome(const BitSeq& c) {
    if (c.size() < 3) throw InvalidInput("h_syndrome requires length >= 3");
    const std::int64_t m = static_cast<std::int64_t>(c.size());
    auto m1 = moment_cached(1, c.size() - 1);
    __int128 s0 = 0, s1 = 0;
    const auto& bits = c.raw();
    for (std::size_t t = 0; t + 1 < bits.size(); ++t) {
        if (bits[t] == 0 && bits[t + 1] == 1) {
            s0 += 1;
            s1 += (*m1)[t];
        }
    }
    SyndromeH out;
    out.m = m;
    out.r[0] = static_cast<std::int64_t>(s0 % 3);
    out.r[1] = static_cast<std::int64_t>(s1 % (2 * m));
    return out;
}

std::int64_t g_eval(std::span<const std::int64_t> v, std::int64_t r, std::span<const std::uint8_t> x) {
    const std::int64_t s = static_cast<std::int64_t>(x.size());
    if (r < 1 || r > static_cast<std::int64_t>(v.size()))
        throw InvalidInput("g_eval: r must be in [1, |v|]");
    if (r + s - 2 > static_cast<std::int64_t>(v.size()))
        throw InvalidInput("g_eval: r + |x| - 2 exceeds |v|");
    if (s <= 1) return 0;
    __int128 acc = static_cast<__int128>(x[0]) * v[r - 1];
    acc -= static_cast<__int128>(x[s - 1]) * v[r + s - 3];
    for (std::int64_t t = 2; t <= s - 1; ++t)
        if (x[t - 1]) acc += v[t + r - 2] - v[t + r - 3];
    return static_cast<std::int64_t>(acc);
}

std::int64_t g_eval(const MomentVector& v, std::int64_t r, const BitSeq& x) {
    return g_eval(std::span<const std::int64_t>(v.entries), r, x.span());
}

std::int64_t vt_syndrome(const BitSeq& c) {
    if (c.empty()) throw InvalidInput("vt_syndrome of empty sequence");
    const std::int64_t n = static_cast<std::int64_t>(c.size());
    __int128 acc = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c.raw()[i]) acc += static_cast<std::int64_t>(i + 1);
    return static_cast<std::int64_t>(acc % (n + 1));
}

BitSeq vt_decode(const BitSeq& d, std::int64_t syndrome, std::size_t n) {
    if (d.size() + 1 != n) throw InvalidInput("vt_decode: |d| must be n-1");
    const std::int64_t mod = static_cast<std::int64_t>(n) + 1;
    if (syndrome < 0 || syndrome >= mod) throw InvalidInput("vt_decode: syndrome out of range");
    std::int64_t weight = 0;
    __int128 received_sum = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d.raw()[i]) {
            ++weight;
            received_sum += static_cast<std::int64_t>(i + 1);
        }
    }
    const std::int64_t deficit =
        positive_mod(syndrome - static_cast<std::int64_t>(received_sum % mod), mod);

    // deficit = p*b + (# of ones of d at positions >= p). Values 0..weight
    // identify a 0-insertion, weight+1..n a 1-insertion.
    auto insert_at = [&](std::size_t p, int bit) {
        std::vector<std::uint8_t> out;
        out.reserve(n);
        out.insert(out.end(), d.raw().begin(), d.raw().begin() + (p - 1));
        out.push_back(static_cast<std::uint8_t>(bit));
        out.insert(out.end(), d.raw().begin() + (p - 1), d.raw().end());
        return BitSeq(std::move(out));
    };

    if (deficit <= weight) {
        // insert a 0 with exactly `deficit` ones to its right
        std::int64_t ones = 0;
        for (std::size_t p = d.size() + 1; p >= 1; --p) {
            if (ones == deficit) return insert_at(p, 0);
            if (p >= 2) ones += d.raw()[p - 2];
        }
        throw DecodeFailure("vt_decode: no consistent 0-insertion");
    }
    // insert a 1 at position p with p + suffix_ones(p) = deficit
    std::int64_t ones = 0;
    for (std::size_t p = d.size() + 1; p >= 1; --p) {
        if (static_cast<std::int64_t>(p) + ones == deficit) return insert_at(p, 1);
        if (p >= 2) ones += d.raw()[p - 2];
    }
    throw DecodeFailure("vt_decode: no consistent 1-insertion");
}

}  // namespace deldec
