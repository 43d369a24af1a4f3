// Benchmark: the linear-time decoder against the brute-force reference, and
// the verification sweeps at one worker versus all cores.
#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "deldec/codec.hpp"
#include "deldec/indicator_recovery.hpp"
#include "deldec/oracle.hpp"

using Clock = std::chrono::steady_clock;

namespace {

double seconds(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

deldec::BitSeq random_seq(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::uint8_t> bits(n);
    for (auto& b : bits) b = rng() & 1;
    return deldec::BitSeq(std::move(bits));
}

void bench_decoder_vs_brute() {
    std::mt19937_64 rng(deldec::oracle::kDefaultSeed);
    std::printf("%-28s %12s %12s %10s\n", "d2 decode (1000 decodes)", "fast [s]", "brute [s]",
                "speedup");
    for (std::size_t m : {12, 16, 20}) {
        std::vector<deldec::BitSeq> ds;
        std::vector<deldec::SyndromeF> fs;
        std::vector<deldec::SyndromeH> hs;
        for (int t = 0; t < 1000; ++t) {
            auto c = random_seq(rng, m);
            std::size_t p1 = 1 + rng() % m, p2 = 1 + rng() % m;
            while (p2 == p1) p2 = 1 + rng() % m;
            std::vector<std::size_t> pos{std::min(p1, p2), std::max(p1, p2)};
            ds.push_back(deldec::delete_at(c, pos));
            fs.push_back(deldec::f_syndrome(c));
            hs.push_back(deldec::h_syndrome(c));
        }
        auto t0 = Clock::now();
        for (std::size_t t = 0; t < ds.size(); ++t)
            (void)deldec::decode_two_deletions(ds[t], fs[t], hs[t]);
        const double fast = seconds(t0);
        t0 = Clock::now();
        for (std::size_t t = 0; t < ds.size(); ++t)
            (void)deldec::oracle::brute_decode(ds[t], fs[t], hs[t]);
        const double brute = seconds(t0);
        std::printf("m=%-26zu %12.4f %12.4f %9.1fx\n", m, fast, brute, brute / fast);
    }
}

void bench_decoder_scaling() {
    std::mt19937_64 rng(deldec::oracle::kDefaultSeed + 1);
    std::printf("\n%-28s %12s %14s\n", "d2 decode scaling", "total [s]", "per-decode [us]");
    for (std::size_t n : {1u << 10, 1u << 12, 1u << 14, 1u << 16}) {
        std::vector<deldec::BitSeq> ds;
        std::vector<deldec::SyndromeF> fs;
        std::vector<deldec::SyndromeH> hs;
        for (int t = 0; t < 200; ++t) {
            auto c = random_seq(rng, n);
            std::size_t p1 = 1 + rng() % n, p2 = 1 + rng() % n;
            while (p2 == p1) p2 = 1 + rng() % n;
            std::vector<std::size_t> pos{std::min(p1, p2), std::max(p1, p2)};
            ds.push_back(deldec::delete_at(c, pos));
            fs.push_back(deldec::f_syndrome(c));
            hs.push_back(deldec::h_syndrome(c));
        }
        const auto t0 = Clock::now();
        for (std::size_t t = 0; t < ds.size(); ++t)
            (void)deldec::decode_two_deletions(ds[t], fs[t], hs[t]);
        const double total = seconds(t0);
        std::printf("n=%-26zu %12.4f %14.2f\n", n, total, 1e6 * total / 200.0);
    }
}

void bench_sweep_parallelism() {
    std::printf("\n%-28s %12s %12s\n", "sweep", "1 job [s]", "all jobs [s]");
    deldec::oracle::RoundtripOptions opt;
    opt.pair_samples = 40;
    opt.jobs = 1;
    auto r1 = deldec::oracle::verify_roundtrip(8, opt);
    opt.jobs = 0;
    auto rn = deldec::oracle::verify_roundtrip(8, opt);
    std::printf("%-28s %12.3f %12.3f\n", "roundtrip n=8 sampled", r1.elapsed_seconds,
                rn.elapsed_seconds);
    auto g1 = deldec::oracle::verify_lemma_g({12, 4}, 1);
    auto gn = deldec::oracle::verify_lemma_g({12, 4}, 0);
    std::printf("%-28s %12.3f %12.3f\n", "lemma-g n<=12", g1.elapsed_seconds, gn.elapsed_seconds);
}

}  // namespace

int main() {
    bench_decoder_vs_brute();
    bench_decoder_scaling();
    bench_sweep_parallelism();
    return 0;
}
