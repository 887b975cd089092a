#include "rsos/transforms.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

namespace rsos {

namespace {

void require_wings(const Path& h)
{
    if (!h.has_wings()) throw std::invalid_argument("transform needs a path with wings (e, f)");
}

int sgn_e(int e) { return e == 0 ? 1 : -1; }

std::vector<char> statuses(const Path& h)
{
    std::vector<char> s(static_cast<std::size_t>(h.L() + 1));
    for (int i = 0; i <= h.L(); ++i) s[i] = classify_vertex(h, i).scoring ? 1 : 0;
    return s;
}

Path from_directions(const ModelShape& m, int start, const std::vector<int>& dirs, const Boundary& bd)
{
    std::vector<int> hs{start};
    for (int d : dirs) hs.push_back(hs.back() + d);
    Path out{m, std::move(hs), bd};
    validate(out);
    return out;
}

int leading_scoring_run(const std::vector<char>& st)
{
    int r = 0;
    while (r < static_cast<int>(st.size()) && st[r]) ++r;
    return r;
}

void check_partition(const std::vector<int>& lambda, int k, int m)
{
    if (static_cast<int>(lambda.size()) > k)
        throw std::invalid_argument("partition has more than k = " + std::to_string(k) + " parts");
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] < 0) throw std::invalid_argument("partition has a negative part");
        if (i > 0 && lambda[i] > lambda[i - 1]) throw std::invalid_argument("partition parts must be non-increasing");
    }
    if (!lambda.empty() && lambda[0] > m)
        throw std::invalid_argument("largest part exceeds m = " + std::to_string(m));
}

}  // namespace

Path b1(const Path& h)
{
    require_wings(h);
    const ModelShape& m = h.model;
    const ModelShape big(m.p, m.pp + m.p);
    const int e = h.e(), f = h.f();
    const int a1 = h.a() + static_cast<int>(floor_div(static_cast<long>(h.a()) * m.p, m.pp)) + e;
    const int L = h.L();
    if (L == 0) {
        if (e != f) throw std::invalid_argument("b1 is undefined for L = 0 with e != f");
        return make_path(big, {a1}, Wings{e, f});
    }
    const PathStats st = path_stats(h);
    const auto sc = statuses(h);
    // a straight segment is inserted before each scoring vertex
    std::vector<int> dirs;
    for (int i = 1; i <= L; ++i) {
        int d = h.heights[i] - h.heights[i - 1];
        dirs.push_back(d);
        if (sc[i]) dirs.push_back(d);
    }
    if ((e + st.d + st.pi) % 2 == 1) {
        if (st.pi == 1)
            dirs.insert(dirs.begin(), dirs.front());
        else
            dirs.erase(dirs.begin());
    }
    return from_directions(big, a1, dirs, Wings{e, f});
}

Path b2(const Path& h, int k)
{
    require_wings(h);
    if (k < 0) throw std::invalid_argument("particle count k must be >= 0");
    const ModelShape& m = h.model;
    if (m.pp <= 2 * m.p) throw std::invalid_argument("b2 needs p' > 2p");
    if (delta_ae(m, h.a(), h.e()) != 0) throw std::invalid_argument("b2 needs the pre-segment in an even band");
    const int s = sgn_e(h.e());
    std::vector<int> hs;
    for (int i = 0; i < k; ++i) {
        hs.push_back(h.a());
        hs.push_back(h.a() + s);
    }
    hs.insert(hs.end(), h.heights.begin(), h.heights.end());
    return make_path(m, std::move(hs), h.boundary);
}

bool particle_move(Path& h, int v, bool forward)
{
    const int L = h.L();
    // the scoring pair occupies (v, v+1); the triple in play starts at t0
    const int t0 = forward ? v : v - 1;
    if (t0 < 0 || t0 + 2 > L) return false;
    const auto before = statuses(h);
    const bool want_before = forward ? (before[t0] && before[t0 + 1] && !before[t0 + 2])
                                     : (!before[t0] && before[t0 + 1] && before[t0 + 2]);
    if (!want_before) return false;
    const int lo = std::max(t0, 1), hi = std::min(t0 + 2, L - 1);
    if (lo > hi) return false;
    const long w0 = weight_wtilde(h);
    const int span = hi - lo + 1;
    std::vector<int> found;
    Path trial = h;
    for (int mask = 0; mask < (1 << span); ++mask) {
        bool ok = true;
        for (int j = 0; j < span && ok; ++j) {
            int x = trial.heights[lo + j - 1] + ((mask >> j) & 1 ? 1 : -1);
            if (x < 1 || x > h.model.pp - 1) ok = false;
            trial.heights[lo + j] = x;
        }
        if (!ok || std::abs(trial.heights[hi + 1] - trial.heights[hi]) != 1) continue;
        if (trial.heights == h.heights) continue;
        const auto after = statuses(trial);
        bool good = forward ? (!after[t0] && after[t0 + 1] && after[t0 + 2])
                            : (after[t0] && after[t0 + 1] && !after[t0 + 2]);
        for (int i = 0; i <= L && good; ++i)
            if ((i < t0 || i > t0 + 2) && after[i] != before[i]) good = false;
        if (good && weight_wtilde(trial) == w0 + (forward ? 1 : -1)) found.push_back(mask);
    }
    if (found.empty()) return false;
    if (found.size() > 1) throw std::logic_error("particle move at vertex " + std::to_string(v) + " is ambiguous");
    for (int j = 0; j < span; ++j)
        h.heights[lo + j] = h.heights[lo + j - 1] + ((found[0] >> j) & 1 ? 1 : -1);
    return true;
}

namespace {

std::string move_kind(const Path& h, int t0)
{
    return (t0 == 0 || t0 + 2 == h.L()) ? "edge-move" : "move";
}

}  // namespace

TransformResult b3(const Path& h, int k, const std::vector<int>& lambda)
{
    require_wings(h);
    const ModelShape& m = h.model;
    if (m.pp <= 2 * m.p) throw std::invalid_argument("b3 needs p' > 2p");
    if (delta_ae(m, h.a(), h.e()) != 0 || delta_ae(m, h.b(), h.f()) != 0)
        throw std::invalid_argument("b3 needs pre- and post-segments in even bands");
    check_partition(lambda, k, path_stats(h).m);
    TransformResult res{h, {}};
    Path& cur = res.path;
    const int r = leading_scoring_run(statuses(cur));
    if (r < 2 * k || r > 2 * k + 2)
        throw std::invalid_argument("path does not open with k = " + std::to_string(k) + " inserted particles");
    const int L = cur.L();
    for (std::size_t i = 1; i <= lambda.size(); ++i) {
        int pos = r - 2 * static_cast<int>(i);
        for (int step = 0; step < lambda[i - 1]; ++step) {
            auto st = statuses(cur);
            if (pos + 2 > L) throw std::invalid_argument("particle move blocked at the right end");
            if (st[pos + 2]) {
                if (pos + 3 > L || st[pos + 3]) throw std::invalid_argument("particle move blocked by three scoring vertices");
                res.trace.push_back({pos, "relabel"});
                ++pos;
            }
            std::string kind = move_kind(cur, pos);
            if (!particle_move(cur, pos, true))
                throw std::logic_error("no particle move applies at vertex " + std::to_string(pos));
            res.trace.push_back({pos, kind});
            ++pos;
        }
    }
    return res;
}

TransformResult b_transform(const Path& h, int k, const std::vector<int>& lambda)
{
    Path hk = b2(b1(h), k);
    TransformResult res = b3(hk, k, lambda);
    std::vector<MoveRecord> trace;
    for (int i = 0; i < k; ++i) trace.push_back({0, "insert"});
    trace.insert(trace.end(), res.trace.begin(), res.trace.end());
    res.trace = std::move(trace);
    return res;
}

Path d_transform(const Path& h)
{
    require_wings(h);
    return make_path(h.model.dual(), h.heights, Wings{1 - h.e(), 1 - h.f()});
}

TransformResult bd_transform(const Path& h, int k, const std::vector<int>& lambda)
{
    require_wings(h);
    if (2 * h.model.p >= h.model.pp) throw std::invalid_argument("bd_transform needs 2p < p' for the input model");
    return b_transform(d_transform(h), k, lambda);
}

namespace {

// every path of the smaller model whose b1 image is h0
std::vector<Path> b1_preimages(const Path& h0)
{
    const ModelShape& big = h0.model;
    const ModelShape small(big.p, big.pp - big.p);
    const int e = h0.e(), f = h0.f();
    std::vector<int> starts;
    for (int a = 1; a <= small.pp - 1; ++a)
        if (a + floor_div(static_cast<long>(a) * small.p, small.pp) + e == h0.a()) starts.push_back(a);

    std::vector<std::vector<int>> widths_list;
    int d0 = 1;
    if (h0.L() == 0) {
        widths_list = {{}, {1}};
    } else {
        d0 = h0.heights[1] - h0.heights[0];
        const auto st = statuses(h0);
        std::vector<int> w, sc;
        int dir = 0;
        for (int i = 1; i <= h0.L(); ++i) {
            int s = h0.heights[i] - h0.heights[i - 1];
            if (s != dir) {
                w.push_back(0);
                sc.push_back(0);
                dir = s;
            }
            ++w.back();
            sc.back() += st[i];
        }
        for (int adj : {-1, 0, 1}) {
            std::vector<int> cand;
            bool ok = true;
            for (std::size_t i = 0; i < w.size(); ++i) {
                int x = w[i] - sc[i] + (i == 0 ? adj : 0);
                if (x <= 0) ok = false;
                cand.push_back(x);
            }
            if (ok) widths_list.push_back(cand);
        }
    }

    std::vector<Path> out;
    for (int a : starts) {
        for (const auto& ws : widths_list) {
            for (int dstart : (h0.L() == 0 ? std::vector<int>{1, -1} : std::vector<int>{d0})) {
                if (h0.L() == 0 && ws.empty() && dstart == -1) continue;
                std::vector<int> hs{a};
                int dir = dstart;
                for (int w : ws) {
                    for (int j = 0; j < w; ++j) hs.push_back(hs.back() + dir);
                    dir = -dir;
                }
                Path cand{small, hs, Wings{e, f}};
                try {
                    validate(cand);
                    if (b1(cand) == h0) out.push_back(cand);
                } catch (const std::invalid_argument&) {
                }
            }
        }
    }
    return out;
}

}  // namespace

Decomposition decompose(const Path& input, Direction dir)
{
    require_wings(input);
    const ModelShape& m = input.model;
    if (m.pp <= 2 * m.p) throw std::invalid_argument("decompose needs p' > 2p");
    if (delta_ae(m, input.a(), input.e()) != 0 || delta_ae(m, input.b(), input.f()) != 0)
        throw std::invalid_argument("decompose needs pre- and post-segments in even bands");
    const ModelShape small(m.p, m.pp - m.p);
    auto lift_source = [&](int x, int side) {
        for (int y = 1; y <= small.pp - 1; ++y)
            if (y + floor_div(static_cast<long>(y) * small.p, small.pp) + side == x) return y;
        return 0;
    };
    const int a0 = lift_source(input.a(), input.e()), b0 = lift_source(input.b(), input.f());
    if (a0 == 0 || b0 == 0) throw std::invalid_argument("endpoints are not b1 images of any (p, p'-p) path");
    // every other path over valid endpoints has a preimage; the exception sits over the undefined b1 case
    const bool over_undefined = a0 == b0 && input.e() != input.f();
    auto not_an_image = [&](const std::string& why) {
        if (over_undefined)
            throw std::invalid_argument("preimage would be the L = 0 path with e != f, on which b1 is undefined");
        throw std::logic_error(why);
    };
    Decomposition res{input, 0, {}, {}};
    Path cur = input;
    const int L = cur.L();

    // pack scoring pairs to the left, undoing particle moves
    int packed = 0;
    std::vector<int> counts;
    for (;;) {
        auto st = statuses(cur);
        int j = -1;
        for (int i = 2 * packed; i + 1 <= L; ++i)
            if (st[i] && st[i + 1]) {
                j = i;
                break;
            }
        if (j < 0) break;
        int pos = j, cnt = 0;
        while (pos > 2 * packed) {
            st = statuses(cur);
            if (st[pos - 1]) {
                res.trace.push_back({pos, "reverse-relabel"});
                --pos;
                continue;
            }
            std::string kind = "reverse-" + move_kind(cur, pos - 1);
            if (!particle_move(cur, pos, false))
                not_an_image("cannot reverse the particle move at vertex " + std::to_string(pos));
            res.trace.push_back({pos, kind});
            --pos;
            ++cnt;
        }
        counts.push_back(cnt);
        ++packed;
    }

    // leading even segments alternating in direction, starting against the pre-segment
    int s = 0;
    int prev = -sgn_e(cur.e());
    for (int i = 1; i <= L; ++i) {
        int d = cur.heights[i] - cur.heights[i - 1];
        auto odd = band_is_odd_or_none(m, std::min(cur.heights[i], cur.heights[i - 1]));
        if (d != -prev || !odd || *odd) break;
        prev = d;
        ++s;
    }
    const int k = s / 2;
    if (packed == k + 1) {
        if (counts.front() != 0) not_an_image("leading non-particle pair was displaced");
        counts.erase(counts.begin());
    } else if (packed != k) {
        not_an_image("particle count " + std::to_string(packed) + " disagrees with the leading run");
    }
    std::reverse(counts.begin(), counts.end());
    while (!counts.empty() && counts.back() == 0) counts.pop_back();
    res.k = k;
    res.lambda = counts;

    Path h0{m, std::vector<int>(cur.heights.begin() + 2 * k, cur.heights.end()), cur.boundary};
    auto pre = b1_preimages(h0);
    if (pre.empty()) not_an_image("no b1 preimage");
    if (pre.size() > 1) throw std::logic_error("expected one b1 preimage, found " + std::to_string(pre.size()));
    res.path = pre.front();
    if (dir == Direction::BD) res.path = d_transform(res.path);
    return res;
}

Path extend_left(const Path& h)
{
    require_wings(h);
    if (delta_ae(h.model, h.a(), h.e()) != 0) throw std::invalid_argument("extend_left needs the pre-segment in an even band");
    const int a1 = h.a() + sgn_e(h.e());
    if (a1 < 1 || a1 > h.model.pp - 1) throw std::invalid_argument("extend_left leaves the grid");
    std::vector<int> hs{a1};
    hs.insert(hs.end(), h.heights.begin(), h.heights.end());
    return make_path(h.model, std::move(hs), Wings{1 - h.e(), h.f()});
}

Path extend_right(const Path& h)
{
    require_wings(h);
    if (delta_ae(h.model, h.b(), h.f()) != 0)
        throw std::invalid_argument("extend_right needs the post-segment in an even band");
    const int b1 = h.b() + sgn_e(h.f());
    if (b1 < 1 || b1 > h.model.pp - 1) throw std::invalid_argument("extend_right leaves the grid");
    std::vector<int> hs = h.heights;
    hs.push_back(b1);
    return make_path(h.model, std::move(hs), Wings{h.e(), 1 - h.f()});
}

Path truncate_left(const Path& h)
{
    require_wings(h);
    const ModelShape& m = h.model;
    if (m.pp <= 2 * m.p) throw std::invalid_argument("truncate_left needs p' > 2p");
    if (!((h.a() == 1 && h.e() == 0) || (h.a() == m.pp - 1 && h.e() == 1)))
        throw std::invalid_argument("truncate_left needs (a, e) = (1, 0) or (p'-1, 1)");
    if (h.L() < 1) throw std::invalid_argument("truncate_left needs L >= 1");
    return make_path(m, std::vector<int>(h.heights.begin() + 1, h.heights.end()), Wings{1 - h.e(), h.f()});
}

Path truncate_right(const Path& h)
{
    require_wings(h);
    const ModelShape& m = h.model;
    if (m.pp <= 2 * m.p) throw std::invalid_argument("truncate_right needs p' > 2p");
    if (!((h.b() == 1 && h.f() == 0) || (h.b() == m.pp - 1 && h.f() == 1)))
        throw std::invalid_argument("truncate_right needs (b, f) = (1, 0) or (p'-1, 1)");
    if (h.L() < 1) throw std::invalid_argument("truncate_right needs L >= 1");
    return make_path(m, std::vector<int>(h.heights.begin(), h.heights.end() - 1), Wings{h.e(), 1 - h.f()});
}

namespace {

using GfKey = std::tuple<int, int, int, int, int, int, int, std::set<int>>;

const std::vector<QuarterPoly>& cached_by_m(const ModelShape& m, int a, int b, int e, int f, int L, const std::set<int>& S)
{
    static thread_local std::map<GfKey, std::vector<QuarterPoly>> cache;
    GfKey key{m.p, m.pp, a, b, e, f, L, S};
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, chi_tilde_by_m(m, a, b, e, f, L, S)).first;
    return it->second;
}

QuarterPoly restricted_at(const std::vector<QuarterPoly>& v, long m)
{
    return (m >= 0 && m < static_cast<long>(v.size())) ? v[m] : QuarterPoly{};
}

std::set<int> lift_set(const ModelShape& m, const std::set<int>& S, int a, int b)
{
    std::set<int> out;
    for (int s : S) {
        if (s < 2 || s > m.pp - 2 || !is_interfacial(m, s))
            throw std::invalid_argument("restriction height " + std::to_string(s) + " is not interfacial");
        if (s == a || s == b) throw std::invalid_argument("restriction heights must avoid a and b");
        out.insert(s + static_cast<int>(floor_div(static_cast<long>(s + 1) * m.p, m.pp)));
    }
    return out;
}

BijectionReport finish(QuarterPoly lhs, QuarterPoly rhs)
{
    BijectionReport r;
    r.pass = lhs == rhs;
    if (!r.pass) {
        QuarterPoly diff = lhs - rhs;
        long e = diff.min_quarter();
        r.message = "first mismatch at q^(" + std::to_string(e) + "/4): lhs " + lhs.coeff_quarter(e).get_str() +
                    ", rhs " + rhs.coeff_quarter(e).get_str();
    }
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    return r;
}

}  // namespace

BijectionReport verify_b_bijection(int p, int pp, int a, int b, int e, int f, int m0, int m1, const std::set<int>& S)
{
    const ModelShape small(p, pp);
    const ModelShape big(p, pp + p);
    if (a < 1 || a > pp - 1 || b < 1 || b > pp - 1) throw std::invalid_argument("a and b must lie in 1..p'-1");
    if (delta_ae(small, a, e) != 0) throw std::invalid_argument("verify_b_bijection needs delta_{a,e} = 0");
    if (m0 < 0 || m1 < 0) throw std::invalid_argument("m0 and m1 must be >= 0");
    const int a1 = a + static_cast<int>(floor_div(static_cast<long>(a) * p, pp)) + e;
    const int b1 = b + static_cast<int>(floor_div(static_cast<long>(b) * p, pp)) + f;
    const std::set<int> S1 = lift_set(small, S, a, b);

    QuarterPoly lhs = restricted_at(cached_by_m(big, a1, b1, e, f, m0, S1), m1);

    const long beta = beta_closed_form(small, a, b, e, f);
    const auto& inner = cached_by_m(small, a, b, e, f, m1, S);
    QuarterPoly rhs;
    for (long m = m0 % 2; m <= m1 + 1; m += 2) {
        const QuarterPoly& x = restricted_at(inner, m);
        if (x.is_zero()) continue;
        rhs += gaussian((m0 + m) / 2, m1) * x;
    }
    const long q4 = static_cast<long>(m0 - m1) * (m0 - m1) - beta * beta;
    return finish(std::move(lhs), shift(rhs, q4));
}

BijectionReport verify_bd_bijection(int p, int pp, int a, int b, int e, int f, int m0, int m1, const std::set<int>& S)
{
    if (!(p < pp && pp < 2 * p)) throw std::invalid_argument("verify_bd_bijection needs p < p' < 2p");
    const ModelShape mid(p, pp);
    const ModelShape small = mid.dual();
    const ModelShape big(p, pp + p);
    if (a < 1 || a > pp - 1 || b < 1 || b > pp - 1) throw std::invalid_argument("a and b must lie in 1..p'-1");
    if (delta_ae(small, a, e) != 0) throw std::invalid_argument("verify_bd_bijection needs delta_{a,e} = 0 in (p'-p, p')");
    if (m0 < 0 || m1 < 0) throw std::invalid_argument("m0 and m1 must be >= 0");
    const int a1 = a + 1 - e + static_cast<int>(floor_div(static_cast<long>(a) * p, pp));
    const int b1 = b + 1 - f + static_cast<int>(floor_div(static_cast<long>(b) * p, pp));
    const std::set<int> S1 = lift_set(mid, S, a, b);

    QuarterPoly lhs = restricted_at(cached_by_m(big, a1, b1, 1 - e, 1 - f, m0, S1), m1);

    const long alpha = b - a;
    const long beta = beta_closed_form(mid, a, b, 1 - e, 1 - f);
    const auto& inner = cached_by_m(small, a, b, e, f, m1, S);
    QuarterPoly rhs;
    const long par = ((m0 - m1) % 2 + 2) % 2;
    for (long m = par; m <= m1 + 1; m += 2) {
        const QuarterPoly& x = restricted_at(inner, m);
        if (x.is_zero()) continue;
        long top2 = m0 + m1 - m;
        if (top2 < 0) continue;
        rhs += gaussian(top2 / 2, m1) * invert_q(x);
    }
    const long q4 = static_cast<long>(m1) * m1 + static_cast<long>(m0 - m1) * (m0 - m1) - alpha * alpha - beta * beta;
    return finish(std::move(lhs), shift(rhs, q4));
}

}  // namespace rsos
