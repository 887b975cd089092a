#pragma once

// Independent reference implementations used only by the tests. Nothing here calls into the
// library's path walker or weight code; band parity comes straight from the floor formula.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "rsos/qseries.hpp"

namespace oracle {

inline long fdiv(long a, long b)
{
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// band s lies between heights s and s+1; odd iff the floor of s*p/pp steps across it
inline std::optional<bool> band_odd(int p, int pp, int s)
{
    if (s < 1 || s > pp - 2) return std::nullopt;
    return fdiv(long(s + 1) * p, pp) != fdiv(long(s) * p, pp);
}

inline std::vector<std::pair<int, int>> coprime_models(int pp_lo, int pp_hi)
{
    std::vector<std::pair<int, int>> out;
    for (int pp = pp_lo; pp <= pp_hi; ++pp)
        for (int p = 1; p < pp; ++p)
            if (std::gcd(p, pp) == 1) out.push_back({p, pp});
    return out;
}

// every height sequence a = h_0, ..., h_L = b with unit steps inside 1..pp-1
inline void each_sequence(int pp, int a, int b, int L, const std::function<void(const std::vector<int>&)>& fn)
{
    std::vector<int> h{a};
    std::function<void()> rec = [&]() {
        int i = static_cast<int>(h.size()) - 1;
        if (i == L) {
            if (h.back() == b) fn(h);
            return;
        }
        if (std::abs(h.back() - b) > L - i) return;
        for (int d : {-1, 1}) {
            int x = h.back() + d;
            if (x < 1 || x > pp - 1) continue;
            h.push_back(x);
            rec();
            h.pop_back();
        }
    };
    rec();
}

// Scoring rule read from the vertex table: a local extremum scores in an even band, a straight
// vertex in an odd band; the band is the one holding the outgoing segment. The last vertex of a
// winged path scores iff it is an extremum.
struct Scored {
    std::vector<bool> scoring;  // index 0..L
    long weight = 0;
    int nonscoring = 0;
};

inline Scored score(int p, int pp, const std::vector<int>& h, int prev0, int next_last, bool wings)
{
    const int L = static_cast<int>(h.size()) - 1;
    Scored s;
    s.scoring.assign(L + 1, false);
    for (int i = 0; i <= L; ++i) {
        int prev = i > 0 ? h[i - 1] : prev0;
        int next = i < L ? h[i + 1] : next_last;
        bool extremum = (h[i] > prev) != (next > h[i]);
        bool sc;
        if (i == L && wings) {
            sc = extremum;
        } else {
            auto odd = band_odd(p, pp, std::min(h[i], next));
            sc = odd ? (extremum != *odd) : false;
        }
        s.scoring[i] = sc;
        if (!sc) ++s.nonscoring;
        if (sc && i >= 1) {
            // lattice coordinates of the vertex after a 45 degree rotation
            long x = (i - (h[i] - h[0])) / 2, y = (i + (h[i] - h[0])) / 2;
            s.weight += h[i] > h[i - 1] ? x : y;
        }
    }
    return s;
}

inline Scored score_postseg(int p, int pp, const std::vector<int>& h, int c)
{
    return score(p, pp, h, h[0], c, false);
}

inline Scored score_wings(int p, int pp, const std::vector<int>& h, int e, int f)
{
    return score(p, pp, h, h[0] + (e == 0 ? 1 : -1), h.back() + (f == 0 ? 1 : -1), true);
}

inline rsos::QuarterPoly chi(int p, int pp, int a, int b, int c, int L)
{
    rsos::QuarterPoly out;
    each_sequence(pp, a, b, L, [&](const std::vector<int>& h) { out.add_term(4 * score_postseg(p, pp, h, c).weight, 1); });
    return out;
}

// restricted to m non-scoring vertices (all m when mm is empty)
inline rsos::QuarterPoly chi_tilde(int p, int pp, int a, int b, int e, int f, int L, std::optional<int> mm = {},
                                   const std::set<int>& S = {})
{
    rsos::QuarterPoly out;
    each_sequence(pp, a, b, L, [&](const std::vector<int>& h) {
        for (int s : S)
            if (std::find(h.begin(), h.end(), s) == h.end()) return;
        Scored sc = score_wings(p, pp, h, e, f);
        if (!mm || sc.nonscoring == *mm) out.add_term(4 * sc.weight, 1);
    });
    return out;
}

// q-binomial by direct enumeration of partitions in a k x m box
inline rsos::QuarterPoly box(int k, int m)
{
    rsos::QuarterPoly out;
    std::function<void(int, int, long)> rec = [&](int parts_left, int cap, long size) {
        out.add_term(4 * size, 1);
        if (parts_left == 0) return;
        for (int x = 1; x <= cap; ++x) rec(parts_left - 1, x, size + x);
    };
    rec(k, m, 0);
    return out;
}

// all partitions with at most k parts, each at most m
inline std::vector<std::vector<int>> partitions_in_box(int k, int m)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int cap) {
        out.push_back(cur);
        if (static_cast<int>(cur.size()) == k) return;
        for (int x = 1; x <= cap; ++x) {
            cur.push_back(x);
            rec(x);
            cur.pop_back();
        }
    };
    rec(m);
    return out;
}

}  // namespace oracle
