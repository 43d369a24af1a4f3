#include "deldec/codec.hpp"

#include <numeric>

#include "deldec/indicator_recovery.hpp"

namespace deldec {

namespace {

int ceil_log2(std::int64_t x) {
    int w = 0;
    while ((std::int64_t(1) << w) < x) ++w;
    return w;
}

std::array<int, 5> widths_for(std::int64_t m) {
    return {ceil_log2(2 * m), ceil_log2(m * m), ceil_log2(m * m * m), 2, ceil_log2(2 * m)};
}

std::int64_t width_sum(const std::array<int, 5>& w) {
    return std::accumulate(w.begin(), w.end(), std::int64_t(0));
}

void append_field(std::vector<std::uint8_t>& out, std::int64_t value, int width) {
    for (int t = width - 1; t >= 0; --t) out.push_back(static_cast<std::uint8_t>((value >> t) & 1));
}

std::int64_t read_field(const BitSeq& bits, std::size_t& cursor, int width) {
    std::int64_t v = 0;
    for (int t = 0; t < width; ++t) v = (v << 1) | bits.raw()[cursor++];
    return v;
}

}  // namespace

CodeLayout layout(std::int64_t n) {
    if (n < kMinMessageLength || n > kMaxMessageLength)
        throw InvalidInput("layout: n must be in [8, 2^20]");
    CodeLayout out;
    out.n = n;
    out.layer1_widths = widths_for(n);
    out.N1 = width_sum(out.layer1_widths);
    out.layer2_widths = widths_for(out.N1);
    out.S2 = width_sum(out.layer2_widths);
    out.N2 = 3 * out.S2;
    out.N = n + out.N1 + out.N2;
    return out;
}

BitSeq pack_syndromes(const SyndromeF& f, const SyndromeH& h, const std::array<int, 5>& widths) {
    std::vector<std::uint8_t> out;
    out.reserve(static_cast<std::size_t>(width_sum(widths)));
    append_field(out, f.r[0], widths[0]);
    append_field(out, f.r[1], widths[1]);
    append_field(out, f.r[2], widths[2]);
    append_field(out, h.r[0], widths[3]);
    append_field(out, h.r[1], widths[4]);
    return BitSeq(std::move(out));
}

std::pair<SyndromeF, SyndromeH> unpack_syndromes(const BitSeq& bits, const std::array<int, 5>& widths,
                                                 std::int64_t m) {
    if (static_cast<std::int64_t>(bits.size()) != width_sum(widths))
        throw InvalidInput("unpack_syndromes: width mismatch");
    std::size_t cursor = 0;
    SyndromeF f;
    f.m = m;
    for (int e = 0; e < 3; ++e) f.r[e] = read_field(bits, cursor, widths[e]);
    SyndromeH h;
    h.m = m;
    h.r[0] = read_field(bits, cursor, widths[3]);
    h.r[1] = read_field(bits, cursor, widths[4]);
    const auto fm = f.moduli();
    for (int e = 0; e < 3; ++e)
        if (f.r[e] >= fm[e]) throw DecodeFailure("packed f field exceeds its modulus", "unpack");
    const auto hm = h.moduli();
    for (int e = 0; e < 2; ++e)
        if (h.r[e] >= hm[e]) throw DecodeFailure("packed h field exceeds its modulus", "unpack");
    return {f, h};
}

BitSeq r3_encode(const BitSeq& s) {
    std::vector<std::uint8_t> out;
    out.reserve(3 * s.size());
    for (auto b : s.raw()) out.insert(out.end(), 3, b);
    return BitSeq(std::move(out));
}

R3Decode r3_decode(const BitSeq& d1, std::size_t m) {
    if (m == 0) throw InvalidInput("r3_decode: m must be positive");
    if (d1.size() + 2 < 3 * m || d1.size() > 3 * m)
        throw InvalidInput("r3_decode: length must be within two of 3m");
    const RunDecomposition rd = runs(d1);
    const std::size_t want_pad = 3 * m - d1.size();
    R3Decode out;
    out.imputed_runs.reserve(rd.run_lengths.size());
    std::size_t total_pad = 0;
    std::vector<std::uint8_t> bits;
    bits.reserve(m);
    std::uint8_t sym = static_cast<std::uint8_t>(rd.first_symbol);
    for (std::size_t len : rd.run_lengths) {
        const std::size_t padded = 3 * ((len + 2) / 3);
        out.imputed_runs.push_back(padded - len);
        total_pad += padded - len;
        bits.insert(bits.end(), padded / 3, sym);
        sym ^= 1;
    }
    if (total_pad != want_pad)
        throw DecodeFailure("run padding does not account for the missing bits", "repetition");
    out.s = BitSeq(std::move(bits));
    return out;
}

BitSeq encode(const BitSeq& c) {
    const CodeLayout lay = layout(static_cast<std::int64_t>(c.size()));
    const BitSeq layer1 = pack_syndromes(f_syndrome(c), h_syndrome(c), lay.layer1_widths);
    const BitSeq layer2 = pack_syndromes(f_syndrome(layer1), h_syndrome(layer1), lay.layer2_widths);
    return c.concat(layer1).concat(r3_encode(layer2));
}

std::size_t longest_r3_suffix(const BitSeq& d, const BitSeq& tail) {
    std::size_t L = 0;
    std::size_t ti = tail.size();
    for (std::size_t di = d.size(); di >= 1; --di) {
        while (ti >= 1 && tail.raw()[ti - 1] != d.raw()[di - 1]) --ti;
        if (ti == 0) break;
        ++L;
        --ti;
    }
    return L;
}

DecodeReport decode(const BitSeq& received, std::int64_t n, const DecodeOptions& opt) {
    const CodeLayout lay = layout(n);
    const std::int64_t len = static_cast<std::int64_t>(received.size());
    if (len < lay.N - 2 || len > lay.N)
        throw InvalidInput("decode: received length must be within two of N");

    DecodeReport report;
    report.trimmed = static_cast<std::size_t>(len - (lay.N - 2));
    const BitSeq d = report.trimmed ? received.slice(1, static_cast<std::size_t>(lay.N - 2))
                                    : received;
    const std::size_t dlen = d.size();

    // layer 2: the last N2-2 received bits are always a two-deletion
    // subsequence of the repetition segment
    const BitSeq window2 = d.slice(dlen - static_cast<std::size_t>(lay.N2 - 2) + 1, dlen);
    const R3Decode rep = r3_decode(window2, static_cast<std::size_t>(lay.S2));
    auto [f2, h2] = unpack_syndromes(rep.s, lay.layer2_widths, lay.N1);

    if (!opt.force_general_path && rep.imputed_runs.front() == 0) {
        // both missing bits sit strictly after the window's first run, so
        // both deletions happened inside the repetition tail
        report.message = d.slice(1, static_cast<std::size_t>(n));
        report.path = DecodeReport::Path::early_return;
        return report;
    }

    report.path = DecodeReport::Path::general;
    const BitSeq tail = r3_encode(rep.s);
    const std::size_t L = longest_r3_suffix(d, tail);
    report.suffix_len = L;

    const std::int64_t lo = lay.N - lay.N1 + 1 - static_cast<std::int64_t>(L);
    const std::int64_t hi = lay.N - 2 - static_cast<std::int64_t>(L);
    if (lo < 1 || hi > static_cast<std::int64_t>(dlen))
        throw DecodeFailure("layer-1 window out of range", "layer1-window");
    const BitSeq window1 =
        d.slice(static_cast<std::size_t>(lo), static_cast<std::size_t>(hi));

    D2Result layer1;
    try {
        layer1 = decode_two_deletions_ex(window1, f2, h2, opt.trace);
    } catch (const DecodeFailure& e) {
        throw DecodeFailure(e.what(), "layer1-d2");
    }
    report.visited_layer1 = layer1.visited;
    auto [f1, h1] = unpack_syndromes(layer1.sequence, lay.layer1_widths, n);

    D2Result msg;
    try {
        msg = decode_two_deletions_ex(d.slice(1, static_cast<std::size_t>(n - 2)), f1, h1,
                                      opt.trace);
    } catch (const DecodeFailure& e) {
        throw DecodeFailure(e.what(), "message-d2");
    }
    report.visited_message = msg.visited;
    report.message = std::move(msg.sequence);
    return report;
}

}  // namespace deldec
