#include "deldec/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "deldec/codec.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace deldec::oracle {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int resolve_jobs(int jobs) {
#ifdef _OPENMP
    return jobs > 0 ? jobs : omp_get_max_threads();
#else
    (void)jobs;
    return 1;
#endif
}

BitSeq from_mask(std::uint64_t mask, int n) {
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) bits[static_cast<std::size_t>(t)] = (mask >> t) & 1;
    return BitSeq(std::move(bits));
}

// packed two-deletion ball of an n-bit mask
std::vector<std::uint64_t> del2_ball(std::uint64_t mask, int n) {
    std::unordered_set<std::uint64_t> one;
    for (int i = 0; i < n; ++i) {
        std::uint64_t low = mask & ((1ULL << i) - 1);
        std::uint64_t high = (mask >> (i + 1)) << i;
        one.insert(low | high);
    }
    std::unordered_set<std::uint64_t> two;
    for (std::uint64_t v : one) {
        for (int i = 0; i < n - 1; ++i) {
            std::uint64_t low = v & ((1ULL << i) - 1);
            std::uint64_t high = (v >> (i + 1)) << i;
            two.insert(low | high);
        }
    }
    std::vector<std::uint64_t> out(two.begin(), two.end());
    std::sort(out.begin(), out.end());
    return out;
}

bool confusable2(std::uint64_t a, std::uint64_t b, int n) {
    auto ba = del2_ball(a, n);
    auto bb = del2_ball(b, n);
    std::vector<std::uint64_t> inter;
    std::set_intersection(ba.begin(), ba.end(), bb.begin(), bb.end(), std::back_inserter(inter));
    return !inter.empty();
}

// packed two-insertion supersequence set of an L-bit mask
std::vector<std::uint64_t> ins2_ball(std::uint64_t mask, int L) {
    std::unordered_set<std::uint64_t> one;
    for (int i = 0; i <= L; ++i) {
        std::uint64_t low = mask & ((1ULL << i) - 1);
        std::uint64_t high = (mask >> i) << (i + 1);
        one.insert(low | high);
        one.insert(low | high | (1ULL << i));
    }
    std::unordered_set<std::uint64_t> two;
    for (std::uint64_t v : one) {
        for (int i = 0; i <= L + 1; ++i) {
            std::uint64_t low = v & ((1ULL << i) - 1);
            std::uint64_t high = (v >> i) << (i + 1);
            two.insert(low | high);
            two.insert(low | high | (1ULL << i));
        }
    }
    std::vector<std::uint64_t> out(two.begin(), two.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::string VerificationReport::to_json_string() const {
    nlohmann::json j;
    j["scope"] = scope;
    j["cases_checked"] = cases_checked;
    j["counterexamples"] = counterexamples;
    j["elapsed_seconds"] = elapsed_seconds;
    j["pass"] = pass();
    return j.dump();
}

BitSeq brute_decode(const BitSeq& d, const SyndromeF& f, const SyndromeH& h) {
    if (f.m != h.m) throw InvalidInput("brute_decode: mismatched syndrome lengths");
    if (f.m > 22) throw InvalidInput("brute_decode: m must be <= 22");
    if (static_cast<std::int64_t>(d.size()) != f.m - 2)
        throw InvalidInput("brute_decode: |d| must be m-2");
    std::vector<BitSeq> hits;
    for (const auto& c : insertion_ball(d, 2)) {
        if (f_syndrome(c) == f && h_syndrome(c) == h) hits.push_back(c);
    }
    if (hits.empty()) throw DecodeFailure("no supersequence matches both syndromes", "brute");
    if (hits.size() > 1)
        throw std::logic_error("brute_decode: multiple survivors (falsifies uniqueness)");
    return hits.front();
}

BitSeq vt_decode_brute(const BitSeq& d, std::int64_t syndrome, std::size_t n) {
    if (d.size() + 1 != n) throw InvalidInput("vt_decode_brute: |d| must be n-1");
    std::vector<BitSeq> hits;
    for (const auto& c : insertion_ball(d, 1))
        if (vt_syndrome(c) == syndrome) hits.push_back(c);
    if (hits.empty()) throw DecodeFailure("no supersequence matches the VT syndrome", "vt-brute");
    if (hits.size() > 1) throw std::logic_error("vt_decode_brute: multiple survivors");
    return hits.front();
}

std::optional<BitSeq> find_indicator_full_scan(const BitSeq& ind, const SyndromeF& f) {
    const std::int64_t m = static_cast<std::int64_t>(ind.size()) + 3;
    const auto a = targets(ind, f).a;
    std::optional<BitSeq> found;
    for (std::int64_t i = 1; i <= 2 * m - 2; ++i) {
        for (std::int64_t j = 1; j <= 2 * m - 2; ++j) {
            auto entry = matrix_entry(ind, i, j);
            if (!entry || *entry != a) continue;
            auto cand = candidate(ind, i, j);
            bool adjacent = false;
            for (std::size_t t = 0; t + 1 < cand->size(); ++t)
                if (cand->raw()[t] && cand->raw()[t + 1]) adjacent = true;
            if (adjacent) continue;
            if (found && *found != *cand)
                throw std::logic_error("full scan found two distinct matching indicators");
            found = *cand;
        }
    }
    return found;
}

VerificationReport verify_theorem_main(int n, int drop_component, int jobs) {
    if (n < 4 || n > 20) throw InvalidInput("verify_theorem_main: n must be in [4, 20]");
    const auto t0 = Clock::now();
    VerificationReport report;
    report.scope = "theorem-main n=" + std::to_string(n) +
                   (drop_component >= 0 ? " drop=" + std::to_string(drop_component) : "");

    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets;
    buckets.reserve(std::size_t(1) << n);
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        const BitSeq c = from_mask(mask, n);
        const SyndromeF f = f_syndrome(c);
        const SyndromeH h = h_syndrome(c);
        std::int64_t parts[5] = {f.r[0], f.r[1], f.r[2], h.r[0], h.r[1]};
        if (drop_component >= 0 && drop_component < 5) parts[drop_component] = 0;
        std::uint64_t key = 0;
        for (auto p : parts) key = key * 0x100000001b3ULL + static_cast<std::uint64_t>(p) + 1;
        buckets[key].push_back(static_cast<std::uint32_t>(mask));
    }

    std::vector<const std::vector<std::uint32_t>*> collide;
    for (const auto& [key, members] : buckets)
        if (members.size() > 1) collide.push_back(&members);

    report.cases_checked = 1ULL << n;
#pragma omp parallel for schedule(dynamic) num_threads(resolve_jobs(jobs))
    for (std::size_t b = 0; b < collide.size(); ++b) {
        const auto& members = *collide[b];
        for (std::size_t x = 0; x < members.size(); ++x) {
            for (std::size_t y = x + 1; y < members.size(); ++y) {
                if (confusable2(members[x], members[y], n)) {
#pragma omp critical
                    report.counterexamples.push_back(from_mask(members[x], n).to_string() + " " +
                                                     from_mask(members[y], n).to_string());
                }
            }
        }
    }
    report.elapsed_seconds = seconds_since(t0);
    return report;
}

VerificationReport verify_lemma_g(const LemmaGBounds& bounds, int jobs) {
    const auto t0 = Clock::now();
    VerificationReport report;
    report.scope = "lemma-g n<=" + std::to_string(bounds.n_max) +
                   " s<=" + std::to_string(bounds.s_max);
    auto m0 = moment_cached(0, static_cast<std::size_t>(bounds.n_max));
    auto m1 = moment_cached(1, static_cast<std::size_t>(bounds.n_max));

    std::uint64_t checked = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : checked) \
    num_threads(resolve_jobs(jobs))
    for (int n = 3; n <= bounds.n_max; ++n) {
        const std::int64_t L = n - 1;
        std::span<const std::int64_t> v0(m0->data(), static_cast<std::size_t>(L));
        std::span<const std::int64_t> v1(m1->data(), static_cast<std::size_t>(L));
        std::vector<std::uint8_t> x, y;
        for (int lam : {1, -1}) {
            for (int s1 = 1; s1 <= bounds.s_max; ++s1) {
                x.resize(static_cast<std::size_t>(s1));
                for (std::int64_t r1 = 1; r1 <= L && r1 + s1 - 2 <= L; ++r1) {
                    for (int s2 = 1; s2 <= bounds.s_max; ++s2) {
                        y.resize(static_cast<std::size_t>(s2));
                        for (std::int64_t r2 = std::max<std::int64_t>(r1 + s1 - 1, 1);
                             r2 <= L && r2 + s2 - 2 <= L; ++r2) {
                            for (std::uint32_t xm = 0; xm < (1u << s1); ++xm) {
                                for (int t = 0; t < s1; ++t) x[t] = (xm >> t) & 1;
                                const std::int64_t g0x = g_eval(v0, r1, x);
                                const std::int64_t g1x = g_eval(v1, r1, x);
                                for (std::uint32_t ym = 0; ym < (1u << s2); ++ym) {
                                    for (int t = 0; t < s2; ++t) y[t] = (ym >> t) & 1;
                                    ++checked;
                                    if (g0x + lam * g_eval(v0, r2, y) != 0) continue;
                                    if (g1x + lam * g_eval(v1, r2, y) != 0) continue;
                                    const bool xconst = xm == 0 || xm == (1u << s1) - 1;
                                    const bool yconst = ym == 0 || ym == (1u << s2) - 1;
                                    if (!xconst || !yconst) {
#pragma omp critical
                                        report.counterexamples.push_back(
                                            "n=" + std::to_string(n) + " lam=" + std::to_string(lam) +
                                            " r1=" + std::to_string(r1) + " x=" +
                                            BitSeq(x).to_string() + " r2=" + std::to_string(r2) +
                                            " y=" + BitSeq(y).to_string());
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    report.cases_checked = checked;
    report.elapsed_seconds = seconds_since(t0);
    return report;
}

VerificationReport verify_lemma_gplus(const LemmaGPlusBounds& bounds, int jobs) {
    const auto t0 = Clock::now();
    VerificationReport report;
    report.scope = "lemma-g+ n<=" + std::to_string(bounds.n_max) +
                   " s<=" + std::to_string(bounds.s_max);
    std::shared_ptr<const std::vector<std::int64_t>> mom[3];
    for (int e = 0; e < 3; ++e) mom[e] = moment_cached(e, static_cast<std::size_t>(bounds.n_max));

    std::uint64_t checked = 0, solutions = 0, alt_branch = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : checked, solutions, alt_branch) \
    num_threads(resolve_jobs(jobs))
    for (int n = 4; n <= bounds.n_max; ++n) {
        const std::int64_t L = n - 1;
        std::span<const std::int64_t> v[3] = {
            {mom[0]->data(), static_cast<std::size_t>(L)},
            {mom[1]->data(), static_cast<std::size_t>(L)},
            {mom[2]->data(), static_cast<std::size_t>(L)}};
        for (int s1 = 1; s1 <= bounds.s_max; ++s1) {
            for (int s2 = 1; s2 <= bounds.s_max; ++s2) {
                for (int s3 = 1; s3 <= bounds.s_max; ++s3) {
                    const int lx = s1 + s2 + 1, ly = 1 + s2 + s3;
                    std::vector<std::uint8_t> x(static_cast<std::size_t>(lx));
                    std::vector<std::uint8_t> y(static_cast<std::size_t>(ly));
                    for (std::int64_t r1 = 1; r1 + s1 + s2 + s3 <= L; ++r1) {
                        const std::int64_t r2 = r1 + s1;
                        for (std::uint32_t xm = 0; xm < (1u << lx); ++xm) {
                            for (int t = 0; t < lx; ++t) x[t] = (xm >> t) & 1;
                            bool adj = false;
                            for (int t = s1; t + 1 < s1 + s2; ++t)
                                if (x[t] && x[t + 1]) adj = true;
                            if (adj) continue;
                            for (int y1 = 0; y1 < 2; ++y1) {
                                for (std::uint32_t tm = 0; tm < (1u << s3); ++tm) {
                                    y[0] = static_cast<std::uint8_t>(y1);
                                    for (int t = 0; t < s2; ++t) y[1 + t] = x[s1 + t];
                                    for (int t = 0; t < s3; ++t) y[1 + s2 + t] = (tm >> t) & 1;
                                    ++checked;
                                    bool zero = true;
                                    for (int e = 0; e < 3 && zero; ++e)
                                        zero = g_eval(v[e], r1, x) + g_eval(v[e], r2, y) == 0;
                                    if (!zero) continue;
                                    ++solutions;
                                    bool allconst = true;
                                    for (int t = 0; t < lx; ++t) allconst &= x[t] == x[0];
                                    for (int t = 0; t < ly; ++t) allconst &= y[t] == x[0];
                                    bool alt = true;
                                    for (int t = 0; t < s1 + 1; ++t) alt &= x[t] == 1 - y[0];
                                    for (int t = s1; alt && t + 1 < s1 + s2; ++t)
                                        alt &= x[t] + x[t + 1] == 1;
                                    alt = alt && (x[s1 + s2] + y[s2] == 1);
                                    for (int t = s2; alt && t < s2 + s3; ++t)
                                        alt &= y[t] == y[s2 + s3];
                                    if (!allconst && alt) ++alt_branch;
                                    if (!allconst && !alt) {
#pragma omp critical
                                        report.counterexamples.push_back(
                                            "n=" + std::to_string(n) + " r1=" + std::to_string(r1) +
                                            " s=(" + std::to_string(s1) + "," + std::to_string(s2) +
                                            "," + std::to_string(s3) + ") x=" + BitSeq(x).to_string() +
                                            " y=" + BitSeq(y).to_string());
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    report.cases_checked = checked;
    report.scope += " solutions=" + std::to_string(solutions) +
                    " alternating-branch=" + std::to_string(alt_branch);
    report.elapsed_seconds = seconds_since(t0);
    return report;
}

VerificationReport verify_indicator_lemmas(int n, int jobs) {
    if (n < 4 || n > 16) throw InvalidInput("verify_indicator_lemmas: n must be in [4, 16]");
    const auto t0 = Clock::now();
    VerificationReport report;
    report.scope = "indicator-lemmas n=" + std::to_string(n);

    struct Memo {
        std::uint64_t fkey;
        std::uint32_t hkey;
        std::uint32_t i10, i01;
        std::int32_t w10, w01;
    };
    const std::uint64_t total = 1ULL << n;
    std::vector<Memo> memo(total);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        const BitSeq c = from_mask(mask, n);
        const SyndromeF f = f_syndrome(c);
        const SyndromeH h = h_syndrome(c);
        Memo& e = memo[mask];
        e.fkey = (static_cast<std::uint64_t>(f.r[0]) << 44) ^
                 (static_cast<std::uint64_t>(f.r[1]) << 22) ^ static_cast<std::uint64_t>(f.r[2]);
        e.hkey = static_cast<std::uint32_t>(h.r[0] * 4096 + h.r[1]);
        const BitSeq a10 = indicator10(c), a01 = indicator01(c);
        e.i10 = e.i01 = 0;
        e.w10 = e.w01 = 0;
        for (std::size_t t = 0; t < a10.size(); ++t) {
            e.i10 |= std::uint32_t(a10.raw()[t]) << t;
            e.i01 |= std::uint32_t(a01.raw()[t]) << t;
            e.w10 += a10.raw()[t];
            e.w01 += a01.raw()[t];
        }
    }

    std::uint64_t checked = 0;
    const std::int64_t esize = std::int64_t(1) << (n - 2);
#pragma omp parallel for schedule(dynamic) reduction(+ : checked) \
    num_threads(resolve_jobs(jobs))
    for (std::int64_t emask = 0; emask < esize; ++emask) {
        const auto sup = ins2_ball(static_cast<std::uint64_t>(emask), n - 2);
        for (std::size_t ai = 0; ai < sup.size(); ++ai) {
            for (std::size_t bi = ai + 1; bi < sup.size(); ++bi) {
                const Memo& A = memo[sup[ai]];
                const Memo& B = memo[sup[bi]];
                ++checked;
                std::string fail;
                if (A.fkey == B.fkey && A.i10 != B.i10) fail = "10indicator";
                if (fail.empty() && A.i10 == B.i10 && A.hkey == B.hkey && A.i01 != B.i01)
                    fail = "01indicator";
                if (fail.empty() && A.i10 == B.i10 && A.i01 == B.i01 && sup[ai] != sup[bi])
                    fail = "indicator";
                if (fail.empty() && (A.w01 - B.w01) % 3 == 0 && A.w01 != B.w01)
                    fail = "equivMod3[01]";
                if (fail.empty() && (A.w10 - B.w10) % 3 == 0 && A.w10 != B.w10)
                    fail = "equivMod3[10]";
                if (!fail.empty()) {
#pragma omp critical
                    report.counterexamples.push_back(fail + " " +
                                                     from_mask(sup[ai], n).to_string() + " " +
                                                     from_mask(sup[bi], n).to_string());
                }
            }
        }
    }
    report.cases_checked = checked;
    report.elapsed_seconds = seconds_since(t0);
    return report;
}

namespace {

// Window relations of the three confusability cases: u' copies u with the
// stated shifts, and the two marked positions stay free.
struct CaseInstance {
    std::vector<std::uint8_t> u, up;
    std::int64_t l1, l2, k1, k2;
};

}  // namespace

VerificationReport verify_case_identities(std::int64_t trials, int n, std::uint64_t seed,
                                          int jobs) {
    if (n < 6 || n > 64) throw InvalidInput("verify_case_identities: n must be in [6, 64]");
    if (trials < 1) throw InvalidInput("verify_case_identities: trials must be >= 1");
    const auto t0 = Clock::now();
    VerificationReport report;
    report.scope = "case-identities n=" + std::to_string(n) + " trials=" + std::to_string(trials) +
                   " seed=" + std::to_string(seed);
    const std::int64_t L = n - 1;
    std::shared_ptr<const std::vector<std::int64_t>> mom[3];
    for (int e = 0; e < 3; ++e) mom[e] = moment_cached(e, static_cast<std::size_t>(L));

    std::uint64_t checked = 0;
#pragma omp parallel num_threads(resolve_jobs(jobs))
    {
#ifdef _OPENMP
        const int tid = omp_get_thread_num();
        const int nthreads = omp_get_num_threads();
#else
        const int tid = 0;
        const int nthreads = 1;
#endif
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(tid) * 0x9E3779B97F4A7C15ULL);
        auto rbit = [&]() { return static_cast<std::uint8_t>(rng() & 1); };
        auto rpos = [&](std::int64_t lo, std::int64_t hi) {
            return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
        };
        std::uint64_t local = 0;
        for (std::int64_t trial = tid; trial < trials; trial += nthreads) {
            std::vector<std::uint8_t> u(static_cast<std::size_t>(L));
            for (auto& b : u) b = rbit();
            for (int which = 0; which < 3; ++which) {
                std::int64_t l1, l2, k1, k2;
                while (true) {
                    std::int64_t v[4] = {rpos(1, L), rpos(1, L), rpos(1, L), rpos(1, L)};
                    std::sort(v, v + 4);
                    if (which == 0) {  // (a): l1 <= l2 < k2 <= k1
                        l1 = v[0]; l2 = v[1]; k2 = v[2]; k1 = v[3];
                        if (l2 < k2) break;
                    } else if (which == 1) {  // (b): l1 <= l2 < k1 <= k2
                        l1 = v[0]; l2 = v[1]; k1 = v[2]; k2 = v[3];
                        if (l2 < k1) break;
                    } else {  // (c): l1 < k1 <= l2 < k2
                        l1 = v[0]; k1 = v[1]; l2 = v[2]; k2 = v[3];
                        if (l1 < k1 && l2 < k2) break;
                    }
                }
                std::vector<std::uint8_t> up = u;
                if (which == 0) {
                    for (std::int64_t t = l1; t <= l2 - 1; ++t) up[t - 1] = u[t];
                    for (std::int64_t s = k2 + 1; s <= k1; ++s) up[s - 1] = u[s - 2];
                } else if (which == 1) {
                    for (std::int64_t t = l1; t <= l2 - 1; ++t) up[t - 1] = u[t];
                    for (std::int64_t t = k1; t <= k2 - 1; ++t) up[t - 1] = u[t];
                } else {
                    for (std::int64_t t = l1; t <= k1 - 2; ++t) up[t - 1] = u[t];
                    for (std::int64_t t = l2 + 1; t <= k2 - 1; ++t) up[t - 1] = u[t];
                    for (std::int64_t t = k1 - 1; t <= l2 - 1; ++t) up[t - 1] = u[t + 1];
                }
                up[l2 - 1] = rbit();
                up[k2 - 1] = rbit();
                ++local;
                for (int e = 0; e < 3; ++e) {
                    std::span<const std::int64_t> ve(mom[e]->data(), static_cast<std::size_t>(L));
                    __int128 lhs = 0;
                    for (std::int64_t t = 1; t <= L; ++t)
                        lhs += static_cast<__int128>(u[t - 1] - up[t - 1]) * ve[t - 1];
                    std::vector<std::uint8_t> xa, xb;
                    std::int64_t ra, rb;
                    if (which == 0) {
                        xa.assign(u.begin() + (l1 - 1), u.begin() + l2);
                        xa.push_back(up[l2 - 1]);
                        xb.assign(up.begin() + (k2 - 1), up.begin() + k1);
                        xb.push_back(u[k1 - 1]);
                        ra = l1; rb = k2;
                    } else if (which == 1) {
                        xa.assign(u.begin() + (l1 - 1), u.begin() + l2);
                        xa.push_back(up[l2 - 1]);
                        xb.assign(u.begin() + (k1 - 1), u.begin() + k2);
                        xb.push_back(up[k2 - 1]);
                        ra = l1; rb = k1;
                    } else {
                        xa.assign(u.begin() + (l1 - 1), u.begin() + (k1 - 1));
                        xa.insert(xa.end(), u.begin() + k1, u.begin() + (l2 + 1));
                        xa.push_back(up[l2 - 1]);
                        xb.assign(u.begin() + (k1 - 1), u.begin() + k2);
                        xb.push_back(up[k2 - 1]);
                        ra = l1; rb = k1;
                    }
                    const std::int64_t ga = g_eval(ve, ra, xa);
                    const std::int64_t gb = g_eval(ve, rb, xb);
                    const __int128 rhs = which == 0 ? static_cast<__int128>(ga) - gb
                                                    : static_cast<__int128>(ga) + gb;
                    if (lhs != rhs) {
#pragma omp critical
                        report.counterexamples.push_back(
                            "case=" + std::string(1, char('a' + which)) + " e=" + std::to_string(e) +
                            " u=" + BitSeq(u).to_string() + " windows=(" + std::to_string(l1) + "," +
                            std::to_string(l2) + "," + std::to_string(k1) + "," +
                            std::to_string(k2) + ")");
                    }
                }
            }
        }
#pragma omp atomic
        checked += local;
    }
    report.cases_checked = checked;
    report.elapsed_seconds = seconds_since(t0);
    return report;
}

VerificationReport verify_roundtrip(std::int64_t n, const RoundtripOptions& options) {
    const auto t0 = Clock::now();
    const CodeLayout lay = layout(n);
    VerificationReport report;
    report.scope = "roundtrip n=" + std::to_string(n) + " N=" + std::to_string(lay.N) +
                   (options.force_general ? " force-general" : "") +
                   (options.pair_samples ? " pairs~" + std::to_string(options.pair_samples) : "") +
                   " seed=" + std::to_string(options.seed);

    std::vector<std::uint64_t> messages;
    if (options.messages == 0 || options.messages >= (std::int64_t(1) << n)) {
        if (n > 20) throw InvalidInput("verify_roundtrip: exhaustive messages need n <= 20");
        messages.resize(std::size_t(1) << n);
        for (std::size_t i = 0; i < messages.size(); ++i) messages[i] = i;
    } else {
        std::mt19937_64 rng(options.seed);
        messages.resize(static_cast<std::size_t>(options.messages));
        for (auto& m : messages)
            m = n >= 64 ? rng() : rng() & ((std::uint64_t(1) << n) - 1);
    }

    std::uint64_t checked = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : checked) \
    num_threads(resolve_jobs(options.jobs))
    for (std::size_t mi = 0; mi < messages.size(); ++mi) {
        const BitSeq msg = from_mask(messages[mi], static_cast<int>(n));
        const BitSeq cw = encode(msg);
        const std::size_t N = cw.size();
        DecodeOptions dopt;
        dopt.force_general_path = options.force_general;

        auto try_pattern = [&](std::size_t p1, std::size_t p2) {
            std::vector<std::size_t> pos;
            if (p1) pos.push_back(p1);
            if (p2) pos.push_back(p2);
            const BitSeq rx = delete_at(cw, pos);
            ++checked;
            std::string fail;
            try {
                const DecodeReport rep = decode(rx, n, dopt);
                if (rep.message != msg) fail = "got=" + rep.message.to_string();
            } catch (const std::exception& e) {
                fail = std::string("error=") + e.what();
            }
            if (!fail.empty()) {
#pragma omp critical
                if (report.counterexamples.size() < 64)
                    report.counterexamples.push_back("msg=" + msg.to_string() + " del=(" +
                                                     std::to_string(p1) + "," +
                                                     std::to_string(p2) + ") " + fail);
            }
        };

        try_pattern(0, 0);
        for (std::size_t i = 1; i <= N; ++i) try_pattern(i, 0);
        if (options.pair_samples == 0) {
            for (std::size_t i = 1; i <= N; ++i)
                for (std::size_t j = i + 1; j <= N; ++j) try_pattern(i, j);
        } else {
            std::mt19937_64 rng(options.seed ^ (messages[mi] * 0x9E3779B97F4A7C15ULL + 1));
            for (std::int64_t s = 0; s < options.pair_samples; ++s) {
                std::size_t i = 1 + rng() % N, j = 1 + rng() % N;
                if (i == j) continue;
                try_pattern(std::min(i, j), std::max(i, j));
            }
        }
    }
    report.cases_checked = checked;
    report.elapsed_seconds = seconds_since(t0);
    return report;
}

}  // namespace deldec::oracle
