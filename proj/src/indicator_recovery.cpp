#include "deldec/indicator_recovery.hpp"

#include <algorithm>
#include <ostream>
#include <string>

namespace deldec {

namespace {

struct PosBit {
    std::int64_t pos;
    int bit;
};

PosBit pos_bit(std::int64_t i, std::int64_t m) {
    if (i >= 1 && i <= m - 1) return {m - i, 0};
    return {i - m + 1, 1};
}

void check_index(std::int64_t i, std::int64_t m, const char* what) {
    if (i < 1 || i > 2 * m - 2) throw InvalidInput(std::string(what) + ": index out of [1, 2m-2]");
}

// Shared context for entry evaluation: the received indicator plus moment
// entries, with out-of-range indicator bits reading as zero.
struct EntryContext {
    const BitSeq& ind;
    std::int64_t m;        // original sequence length; indicator length is m-3
    std::int64_t klen;     // m-3
    std::shared_ptr<const std::vector<std::int64_t>> mom[3];

    explicit EntryContext(const BitSeq& received)
        : ind(received),
          m(static_cast<std::int64_t>(received.size()) + 3),
          klen(static_cast<std::int64_t>(received.size())) {
        if (m < 4) throw InvalidInput("received indicator must be nonempty (m >= 4)");
        for (int e = 0; e < 3; ++e) mom[e] = moment_cached(e, static_cast<std::size_t>(m - 1));
    }

    int bit(std::int64_t k) const {
        if (k < 1 || k > klen) return 0;
        return ind.raw()[static_cast<std::size_t>(k - 1)];
    }
    std::int64_t mval(int e, std::int64_t idx) const {  // m^(e)_idx, 1-based
        return (*mom[e])[static_cast<std::size_t>(idx - 1)];
    }
    static std::int64_t pw(int e, std::int64_t t) { return e == 0 ? 1 : (e == 1 ? t : t * t); }

    // Closed-form cell value, defined on star cells as well (where it equals
    // the limit used by the update rules; on non-star cells it is A^(e)_{i,j}).
    EntryTriple value(std::int64_t i, std::int64_t j) const {
        PosBit a = pos_bit(i, m), b = pos_bit(j, m);
        const std::int64_t u = std::min(a.pos, b.pos);
        const std::int64_t v = std::max(a.pos, b.pos);
        EntryTriple out{0, 0, 0};
        for (int e = 0; e < 3; ++e) {
            std::int64_t acc = 0;
            if (a.bit) acc += mval(e, a.pos);
            if (b.bit) acc += mval(e, b.pos);
            for (std::int64_t k = u; k <= klen; ++k)
                if (bit(k)) acc += pw(e, k + 1);
            for (std::int64_t k = std::max<std::int64_t>(v - 1, 1); k <= klen; ++k)
                if (bit(k)) acc += pw(e, k + 2);
            out[e] = acc;
        }
        return out;
    }

    // Adds value(..., new endpoint) - value(..., old endpoint) to x, where one
    // endpoint moves from (p,b) to (p2,b2) with |p2-p| <= 1 and the other stays
    // at q. O(1): the min/max windows shift by at most one indicator bit.
    void endpoint_delta(EntryTriple& x, PosBit from, PosBit to, std::int64_t q) const {
        const std::int64_t u = std::min(from.pos, q), u2 = std::min(to.pos, q);
        const std::int64_t v = std::max(from.pos, q), v2 = std::max(to.pos, q);
        for (int e = 0; e < 3; ++e) {
            std::int64_t acc = 0;
            if (to.bit) acc += mval(e, to.pos);
            if (from.bit) acc -= mval(e, from.pos);
            if (u2 == u - 1) acc += bit(u2) ? pw(e, u2 + 1) : 0;
            if (u2 == u + 1) acc -= bit(u) ? pw(e, u + 1) : 0;
            if (v2 == v - 1) acc += bit(v2 - 1) ? pw(e, v2 + 1) : 0;
            if (v2 == v + 1) acc -= bit(v - 1) ? pw(e, v + 1) : 0;
            x[e] += acc;
        }
    }

    // Candidate bit at position t after inserting bits at positions u < v.
    int candidate_bit(std::int64_t t, std::int64_t u, int bu, std::int64_t v, int bv) const {
        if (t < 1 || t > m - 1) return 0;
        if (t == u) return bu;
        if (t == v) return bv;
        if (t < u) return bit(t);
        if (t < v) return bit(t - 1);
        return bit(t - 2);
    }

    // Adjacency check restricted to the inserted positions; the
    // received indicator itself never has adjacent ones.
    bool no_adjacent_ones(std::int64_t i, std::int64_t j) const {
        PosBit a = pos_bit(i, m), b = pos_bit(j, m);
        std::int64_t u = a.pos, v = b.pos;
        int bu = a.bit, bv = b.bit;
        if (u > v) {
            std::swap(u, v);
            std::swap(bu, bv);
        }
        for (std::int64_t w : {u, v}) {
            if (candidate_bit(w, u, bu, v, bv) &&
                (candidate_bit(w - 1, u, bu, v, bv) || candidate_bit(w + 1, u, bu, v, bv)))
                return false;
        }
        return true;
    }
};

bool has_adjacent_ones(const BitSeq& s) {
    for (std::size_t t = 0; t + 1 < s.size(); ++t)
        if (s.raw()[t] && s.raw()[t + 1]) return true;
    return false;
}

std::int64_t positive_mod(std::int64_t v, std::int64_t mod) {
    std::int64_t r = v % mod;
    return r < 0 ? r + mod : r;
}

}  // namespace

InsertionIndex insertion_index(std::int64_t i, std::int64_t m) {
    if (m < 4) throw InvalidInput("insertion_index: m must be >= 4");
    check_index(i, m, "insertion_index");
    PosBit pb = pos_bit(i, m);
    return {i, pb.pos, pb.bit};
}

std::optional<BitSeq> candidate(const BitSeq& ind, std::int64_t i, std::int64_t j) {
    const std::int64_t m = static_cast<std::int64_t>(ind.size()) + 3;
    check_index(i, m, "candidate");
    check_index(j, m, "candidate");
    PosBit a = pos_bit(i, m), b = pos_bit(j, m);
    if (a.pos == b.pos) return std::nullopt;
    if (a.pos > b.pos) std::swap(a, b);
    std::vector<std::uint8_t> out;
    out.reserve(ind.size() + 2);
    const auto& r = ind.raw();
    out.insert(out.end(), r.begin(), r.begin() + (a.pos - 1));
    out.push_back(static_cast<std::uint8_t>(a.bit));
    out.insert(out.end(), r.begin() + (a.pos - 1), r.begin() + (b.pos - 2));
    out.push_back(static_cast<std::uint8_t>(b.bit));
    out.insert(out.end(), r.begin() + (b.pos - 2), r.end());
    return BitSeq(std::move(out));
}

TargetTriple targets(const BitSeq& ind, const SyndromeF& f) {
    if (f.m != static_cast<std::int64_t>(ind.size()) + 3)
        throw InvalidInput("targets: syndrome length does not match indicator context");
    EntryContext ctx(ind);
    const auto mods = f.moduli();
    TargetTriple out;
    for (int e = 0; e < 3; ++e) {
        __int128 dot = 0;
        for (std::int64_t k = 1; k <= ctx.klen; ++k)
            if (ctx.bit(k)) dot += ctx.mval(e, k);
        out.a[e] = positive_mod(static_cast<std::int64_t>((f.r[e] - dot) % mods[e]), mods[e]);
    }
    return out;
}

std::optional<EntryTriple> matrix_entry(const BitSeq& ind, std::int64_t i, std::int64_t j) {
    EntryContext ctx(ind);
    check_index(i, ctx.m, "matrix_entry");
    check_index(j, ctx.m, "matrix_entry");
    if (pos_bit(i, ctx.m).pos == pos_bit(j, ctx.m).pos) return std::nullopt;
    return ctx.value(i, j);
}

std::optional<EntryTriple> matrix_entry_direct(const BitSeq& ind, std::int64_t i, std::int64_t j) {
    auto cand = candidate(ind, i, j);
    if (!cand) return std::nullopt;
    EntryContext ctx(ind);
    EntryTriple out{0, 0, 0};
    for (int e = 0; e < 3; ++e) {
        __int128 acc = 0;
        for (std::size_t k = 0; k < cand->size(); ++k)
            if (cand->raw()[k]) acc += ctx.mval(e, static_cast<std::int64_t>(k + 1));
        for (std::int64_t k = 1; k <= ctx.klen; ++k)
            if (ctx.bit(k)) acc -= ctx.mval(e, k);
        out[e] = static_cast<std::int64_t>(acc);
    }
    return out;
}

namespace {

EntryTriple neighbour_delta(const BitSeq& ind, std::int64_t i, std::int64_t j, bool row) {
    EntryContext ctx(ind);
    const std::int64_t m = ctx.m;
    check_index(i, m, "delta");
    check_index(row ? i + 1 : j + 1, m, "delta");
    check_index(j, m, "delta");
    PosBit a = pos_bit(i, m), b = pos_bit(j, m);
    PosBit a2 = row ? pos_bit(i + 1, m) : a;
    PosBit b2 = row ? b : pos_bit(j + 1, m);
    if (a.pos == b.pos || a2.pos == b2.pos)
        throw StarAdjacency("delta across a star cell");
    EntryTriple x{0, 0, 0};
    if (row)
        ctx.endpoint_delta(x, a, a2, b.pos);
    else
        ctx.endpoint_delta(x, b, b2, a.pos);
    return x;
}

}  // namespace

EntryTriple delta_row(const BitSeq& ind, std::int64_t i, std::int64_t j) {
    return neighbour_delta(ind, i, j, true);
}

EntryTriple delta_col(const BitSeq& ind, std::int64_t i, std::int64_t j) {
    return neighbour_delta(ind, i, j, false);
}

namespace {

void emit_trace(std::ostream* trace, const EntryContext& ctx, std::int64_t i, std::int64_t j,
                const EntryTriple& x) {
    if (!trace) return;
    *trace << "i=" << i << " j=" << j << " d(i,j)=";
    PosBit a = pos_bit(i, ctx.m), b = pos_bit(j, ctx.m);
    if (a.pos == b.pos) {
        *trace << "*";
    } else {
        std::int64_t u = a.pos, v = b.pos;
        int bu = a.bit, bv = b.bit;
        if (u > v) {
            std::swap(u, v);
            std::swap(bu, bv);
        }
        *trace << "(";
        for (std::int64_t t = 1; t <= ctx.m - 1; ++t) {
            if (t > 1) *trace << ",";
            *trace << ctx.candidate_bit(t, u, bu, v, bv);
        }
        *trace << ")";
    }
    *trace << " x0=" << x[0] << " x1=" << x[1] << " x2=" << x[2] << "\n";
}

}  // namespace

// Saddleback traversal. A^(e) is non-decreasing along rows and columns over
// non-star cells, and equal entries within a row or column share their
// candidate, so it suffices to visit, for every column j from 2m-2 down to 1,
// the maximal-i non-star cell with A^(0) <= a_0 and run the full check there
// (plus at any equal-valued cells passed on the way up). Column entry
// normalisation descends when the entry cell is star or overshoots; climbing
// uses peeks so the cursor never commits to a cell above the target band.
FindResult find_indicator(const BitSeq& ind, const SyndromeF& f, std::ostream* trace) {
    if (has_adjacent_ones(ind))
        throw InvalidInput("find_indicator: received indicator has adjacent ones");
    EntryContext ctx(ind);
    const std::int64_t m = ctx.m;
    const std::int64_t top = 2 * m - 2;
    const TargetTriple target = targets(ind, f);
    const auto& a = target.a;

    auto is_star = [&](std::int64_t i, std::int64_t j) {
        return pos_bit(i, m).pos == pos_bit(j, m).pos;
    };
    auto step_i = [&](EntryTriple& x, std::int64_t i, std::int64_t di, std::int64_t j) {
        ctx.endpoint_delta(x, pos_bit(i, m), pos_bit(i + di, m), pos_bit(j, m).pos);
    };
    auto step_j = [&](EntryTriple& x, std::int64_t j, std::int64_t dj, std::int64_t i) {
        ctx.endpoint_delta(x, pos_bit(j, m), pos_bit(j + dj, m), pos_bit(i, m).pos);
    };

    SearchCursor cur;
    cur.i = 1;
    cur.j = top;
    cur.x = ctx.value(cur.i, cur.j);
    cur.visited = 1;
    emit_trace(trace, ctx, cur.i, cur.j, cur.x);

    auto full_check = [&]() {
        return !is_star(cur.i, cur.j) && cur.x == a && ctx.no_adjacent_ones(cur.i, cur.j);
    };

    while (true) {
        // normalise within the column: descend over stars and overshoots
        bool saw_overshoot = false;
        while ((is_star(cur.i, cur.j) || cur.x[0] > a[0]) && cur.i > 1) {
            if (!is_star(cur.i, cur.j)) saw_overshoot = true;
            step_i(cur.x, cur.i, -1, cur.j);
            --cur.i;
            ++cur.visited;
            emit_trace(trace, ctx, cur.i, cur.j, cur.x);
        }
        const bool blocked = is_star(cur.i, cur.j) || cur.x[0] > a[0];
        if (blocked && !is_star(cur.i, cur.j)) saw_overshoot = true;
        if (!blocked && full_check()) return {cur.i, cur.j, cur.visited};
        if (!saw_overshoot) {
            // climb to the column's maximal cell not exceeding a_0, peeking
            // past stars so an overshoot above never captures the cursor
            while (true) {
                std::int64_t i2 = cur.i;
                EntryTriple x2 = cur.x;
                bool found = false;
                while (i2 < top) {
                    step_i(x2, i2, +1, cur.j);
                    ++i2;
                    ++cur.visited;
                    emit_trace(trace, ctx, i2, cur.j, x2);
                    if (!is_star(i2, cur.j)) {
                        found = true;
                        break;
                    }
                }
                if (!found || x2[0] > a[0]) break;
                cur.i = i2;
                cur.x = x2;
                if (full_check()) return {cur.i, cur.j, cur.visited};
            }
        }
        if (cur.j == 1) break;
        step_j(cur.x, cur.j, -1, cur.i);
        --cur.j;
        ++cur.visited;
        emit_trace(trace, ctx, cur.i, cur.j, cur.x);
    }
    throw DecodeFailure("no cell matches the syndrome targets", "find-indicator");
}

// Enumerates every way of inserting two bits into d such that the result's
// 10-indicator equals the candidate at (i,j). Alignment DP over states
// (insertions used, previous bit) with leftmost-canonical insertions: a bit
// may only be inserted where it cannot be matched, so each valid sequence
// corresponds to exactly one path and the enumeration is linear.
std::vector<BitSeq> expand_candidates(const BitSeq& d, std::int64_t i, std::int64_t j,
                                      const BitSeq& ind) {
    auto K = candidate(ind, i, j);
    if (!K) throw InvalidInput("expand_candidates: star cell");
    const std::int64_t m = static_cast<std::int64_t>(ind.size()) + 3;
    if (static_cast<std::int64_t>(d.size()) != m - 2)
        throw InvalidInput("expand_candidates: |d| must be m-2");
    const auto& dk = d.raw();
    const auto& kk = K->raw();
    const std::int64_t ld = static_cast<std::int64_t>(dk.size());

    // state id = k*2 + prev, k in {0,1,2}; reach[t] is a bitmask of states
    // after placing t bits
    std::vector<std::uint8_t> reach(static_cast<std::size_t>(m) + 1, 0);
    auto pair_ok = [&](std::int64_t t, int prev, int curbit) {
        if (t < 2) return true;
        return (kk[static_cast<std::size_t>(t - 2)] == 1) == (prev == 1 && curbit == 0);
    };
    auto can_match = [&](std::int64_t jin, int curbit) {
        return jin + 1 <= ld && dk[static_cast<std::size_t>(jin)] == curbit;
    };

    // t = 1: no previous bit
    for (int cur = 0; cur < 2; ++cur) {
        if (can_match(0, cur)) reach[1] |= std::uint8_t(1u << (0 * 2 + cur));
        if (!can_match(0, cur)) reach[1] |= std::uint8_t(1u << (1 * 2 + cur));
    }
    for (std::int64_t t = 2; t <= m; ++t) {
        std::uint8_t out = 0;
        for (int k = 0; k < 3; ++k) {
            for (int prev = 0; prev < 2; ++prev) {
                if (!(reach[static_cast<std::size_t>(t - 1)] & (1u << (k * 2 + prev)))) continue;
                const std::int64_t jin = (t - 1) - k;
                for (int cur = 0; cur < 2; ++cur) {
                    if (!pair_ok(t, prev, cur)) continue;
                    if (can_match(jin, cur)) out |= std::uint8_t(1u << (k * 2 + cur));
                    else if (k < 2) out |= std::uint8_t(1u << ((k + 1) * 2 + cur));
                }
            }
        }
        reach[static_cast<std::size_t>(t)] = out;
    }

    // backward enumeration inside the forward-reachable set; every partial
    // path extends to a full one, so the live set never exceeds the number of
    // solutions (at most four). Partials are moved along their unique branch
    // and copied only when a path forks, keeping the pass linear.
    struct Partial {
        int k;
        int prev;
        std::vector<std::uint8_t> suffix;  // reversed
    };
    std::vector<Partial> live;
    for (int prev = 0; prev < 2; ++prev) {
        if (reach[static_cast<std::size_t>(m)] & (1u << (2 * 2 + prev))) {
            Partial p{2, prev, {}};
            p.suffix.reserve(static_cast<std::size_t>(m));
            p.suffix.push_back(static_cast<std::uint8_t>(prev));
            live.push_back(std::move(p));
        }
    }
    for (std::int64_t t = m; t >= 2; --t) {
        std::vector<Partial> next;
        next.reserve(live.size());
        for (auto& p : live) {
            const int cur = p.prev;
            int choice_k[6], choice_prev[6], nch = 0;
            for (int pk = 0; pk < 3; ++pk) {
                for (int pprev = 0; pprev < 2; ++pprev) {
                    if (!(reach[static_cast<std::size_t>(t - 1)] & (1u << (pk * 2 + pprev))))
                        continue;
                    if (!pair_ok(t, pprev, cur)) continue;
                    const std::int64_t jin = (t - 1) - pk;
                    const bool match = pk == p.k && can_match(jin, cur);
                    const bool insert = pk == p.k - 1 && !can_match(jin, cur);
                    if (!match && !insert) continue;
                    choice_k[nch] = pk;
                    choice_prev[nch] = pprev;
                    ++nch;
                }
            }
            for (int c = 1; c < nch; ++c) {
                Partial q{choice_k[c], choice_prev[c], p.suffix};
                q.suffix.push_back(static_cast<std::uint8_t>(choice_prev[c]));
                next.push_back(std::move(q));
            }
            if (nch >= 1) {
                p.k = choice_k[0];
                p.prev = choice_prev[0];
                p.suffix.push_back(static_cast<std::uint8_t>(choice_prev[0]));
                next.push_back(std::move(p));
            }
        }
        live = std::move(next);
    }
    std::vector<BitSeq> out;
    for (auto& p : live) {
        // the t = 1 step must itself be a valid transition from the source
        const int cur = p.suffix.back();
        const bool match = p.k == 0 && can_match(0, cur);
        const bool insert = p.k == 1 && !can_match(0, cur);
        if (!match && !insert) continue;
        std::vector<std::uint8_t> bits(p.suffix.rbegin(), p.suffix.rend());
        out.emplace_back(std::move(bits));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.empty()) throw DecodeFailure("no supersequence realises the indicator", "expand");
    return out;
}

D2Result decode_two_deletions_ex(const BitSeq& d, const SyndromeF& f, const SyndromeH& h,
                                 std::ostream* trace) {
    if (f.m != h.m) throw InvalidInput("decode_two_deletions: mismatched syndrome lengths");
    const std::int64_t m = f.m;
    if (m < 4) throw InvalidInput("decode_two_deletions: m must be >= 4");
    if (static_cast<std::int64_t>(d.size()) != m - 2)
        throw InvalidInput("decode_two_deletions: |d| must be m-2");

    const BitSeq ind = indicator10(d);
    const FindResult cell = find_indicator(ind, f, trace);
    const auto cands = expand_candidates(d, cell.i, cell.j, ind);

    const BitSeq* hit = nullptr;
    for (const auto& c : cands) {
        if (h_syndrome(c) == h) {
            if (hit) throw std::logic_error("decode_two_deletions: two candidates satisfy h");
            hit = &c;
        }
    }
    if (!hit) throw DecodeFailure("no candidate satisfies the h syndrome", "d2-h-check");
    return {*hit, cell.visited};
}

BitSeq decode_two_deletions(const BitSeq& d, const SyndromeF& f, const SyndromeH& h) {
    return decode_two_deletions_ex(d, f, h).sequence;
}

}  // namespace deldec
