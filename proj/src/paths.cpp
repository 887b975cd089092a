#include "rsos/paths.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>

namespace rsos {

int Path::e() const
{
    if (!has_wings()) throw std::logic_error("path has a post-segment endpoint, not wings");
    return std::get<Wings>(boundary).e;
}

int Path::f() const
{
    if (!has_wings()) throw std::logic_error("path has a post-segment endpoint, not wings");
    return std::get<Wings>(boundary).f;
}

int Path::c() const
{
    if (has_wings()) throw std::logic_error("path has wings, not a post-segment endpoint");
    return std::get<PostSeg>(boundary).c;
}

void validate(const Path& h)
{
    const int top = h.model.pp - 1;
    if (h.heights.empty()) throw std::invalid_argument("path has no vertices");
    for (std::size_t i = 0; i < h.heights.size(); ++i) {
        int x = h.heights[i];
        if (x < 1 || x > top)
            throw std::invalid_argument("height range: h_" + std::to_string(i) + " = " + std::to_string(x) +
                                        " outside 1.." + std::to_string(top));
        if (i > 0 && std::abs(x - h.heights[i - 1]) != 1)
            throw std::invalid_argument("step size: |h_" + std::to_string(i) + " - h_" + std::to_string(i - 1) +
                                        "| = " + std::to_string(std::abs(x - h.heights[i - 1])));
    }
    if (auto* ps = std::get_if<PostSeg>(&h.boundary)) {
        if (std::abs(ps->c - h.b()) != 1 || ps->c < 1 || ps->c > top)
            throw std::invalid_argument("post-segment: c = " + std::to_string(ps->c) + " is not b +- 1 inside the grid");
    } else {
        const auto& w = std::get<Wings>(h.boundary);
        if ((w.e != 0 && w.e != 1) || (w.f != 0 && w.f != 1))
            throw std::invalid_argument("wings: e and f must be 0 or 1");
    }
}

Path make_path(const ModelShape& m, std::vector<int> heights, Boundary bd)
{
    Path h{m, std::move(heights), bd};
    validate(h);
    return h;
}

namespace {

// incoming and outgoing neighbour heights of vertex i
struct Neighbours {
    std::optional<int> prev;
    int next;
};

Neighbours neighbours(const Path& h, int i)
{
    const int L = h.L();
    Neighbours n{std::nullopt, 0};
    if (i > 0)
        n.prev = h.heights[i - 1];
    else if (h.has_wings())
        n.prev = h.a() + (h.e() == 0 ? 1 : -1);
    if (i < L)
        n.next = h.heights[i + 1];
    else if (h.has_wings())
        n.next = h.b() + (h.f() == 0 ? 1 : -1);
    else
        n.next = h.c();
    return n;
}

bool is_peak(Shape s) { return s == Shape::PeakUp || s == Shape::PeakDown; }

// weight of vertex i >= 1, given that it scores
long scoring_weight(const Path& h, int i)
{
    const int hi = h.heights[i];
    const bool in_up = hi > h.heights[i - 1];
    const long rel = hi - h.a();
    return in_up ? (i - rel) / 2 : (i + rel) / 2;
}

}  // namespace

VertexInfo classify_vertex(const Path& h, int i)
{
    if (i < 0 || i > h.L()) throw std::out_of_range("vertex index outside 0..L");
    Neighbours n = neighbours(h, i);
    if (!n.prev) throw std::invalid_argument("vertex 0 of a path without wings has no incoming segment");
    const int hi = h.heights[i];
    const bool in_up = hi > *n.prev;
    const bool out_up = n.next > hi;
    VertexInfo v;
    if (in_up == out_up)
        v.shape = in_up ? Shape::StraightUp : Shape::StraightDown;
    else
        v.shape = in_up ? Shape::PeakUp : Shape::PeakDown;
    v.odd = band_is_odd_or_none(h.model, std::min(hi, n.next));
    if (i == h.L() && h.has_wings())
        v.scoring = is_peak(v.shape);
    else if (v.odd)
        v.scoring = is_peak(v.shape) != *v.odd;
    return v;
}

std::vector<int> scoring_vertices(const Path& h)
{
    std::vector<int> out;
    for (int i = h.has_wings() ? 0 : 1; i <= h.L(); ++i)
        if (classify_vertex(h, i).scoring) out.push_back(i);
    return out;
}

namespace {

long weight_sum(const Path& h)
{
    long w = 0;
    for (int i = 1; i <= h.L(); ++i)
        if (classify_vertex(h, i).scoring) w += scoring_weight(h, i);
    return w;
}

}  // namespace

long weight_wt(const Path& h)
{
    if (h.has_wings()) throw std::invalid_argument("wt needs a post-segment endpoint c");
    return weight_sum(h);
}

long weight_wtilde(const Path& h)
{
    if (!h.has_wings()) throw std::invalid_argument("wtilde needs wings (e, f)");
    return weight_sum(h);
}

StrikingSequence striking_sequence(const Path& h)
{
    StrikingSequence ss;
    ss.e = h.e();
    ss.f = h.f();
    const int L = h.L();
    if (L == 0) {
        ss.d = ss.f;
        return ss;
    }
    ss.d = h.heights[1] > h.heights[0] ? 0 : 1;
    int dir = 0;
    for (int i = 1; i <= L; ++i) {
        int s = h.heights[i] - h.heights[i - 1];
        if (s != dir) {
            ss.columns.push_back({});
            dir = s;
        }
        if (classify_vertex(h, i).scoring)
            ++ss.columns.back().b;
        else
            ++ss.columns.back().a;
    }
    return ss;
}

long weight_from_striking(const StrikingSequence& ss)
{
    const auto& col = ss.columns;
    long total = 0;
    for (std::size_t i = 1; i <= col.size(); ++i) {
        long inner = 0;
        for (std::size_t j = i - 1; j >= 1; j -= 2) {
            inner += col[j - 1].w();
            if (j < 3) break;
        }
        total += col[i - 1].b * inner;
    }
    return total;
}

std::vector<int> rebuild_heights(const StrikingSequence& ss, int a)
{
    std::vector<int> out{a};
    int dir = ss.d == 0 ? 1 : -1;
    for (const auto& c : ss.columns) {
        for (int k = 0; k < c.w(); ++k) out.push_back(out.back() + dir);
        dir = -dir;
    }
    return out;
}

PathStats path_stats(const Path& h)
{
    PathStats s;
    const int e = h.e(), f = h.f();
    const int L = h.L();
    s.alpha = h.b() - h.a();
    const int h1 = L > 0 ? h.heights[1] : h.a() + (f == 0 ? 1 : -1);
    s.d = h1 > h.a() ? 0 : 1;
    // out of grid only for L = 0, where pi is not consulted
    s.pi = band_is_odd_or_none(h.model, std::min(h.a(), h1)).value_or(false) ? 1 : 0;
    if (L == 0) {
        s.m = std::abs(f - e);
        s.beta = f - e;
        return s;
    }
    StrikingSequence ss = striking_sequence(h);
    const int lead = (e + s.d + s.pi) % 2;
    s.m = lead;
    int bsum = 0;
    for (std::size_t i = 0; i < ss.columns.size(); ++i) {
        s.m += ss.columns[i].a;
        bsum += (i % 2 == 0 ? 1 : -1) * ss.columns[i].b;
    }
    s.beta = (s.d == 0 ? 1 : -1) * bsum + (lead ? (e == 0 ? 1 : -1) : 0);
    return s;
}

int beta_closed_form(const ModelShape& m, int a, int b, int e, int f)
{
    return static_cast<int>(floor_div(static_cast<long>(b) * m.p, m.pp) - floor_div(static_cast<long>(a) * m.p, m.pp)) +
           f - e;
}

namespace {

// depth-first walk over all height sequences; visit(heights) for each complete one
template <class Visit>
void walk(const ModelShape& m, int a, int b, int L, const std::set<int>& required, Visit&& visit)
{
    if (a < 1 || a > m.pp - 1 || b < 1 || b > m.pp - 1 || L < 0) return;
    if ((L + a - b) % 2 != 0) return;
    std::vector<int> h{a};
    h.reserve(static_cast<std::size_t>(L + 1));
    std::map<int, int> hits;
    for (int s : required) hits[s] = 0;
    int missing = static_cast<int>(required.size());
    auto touch = [&](int x, int delta) {
        auto it = hits.find(x);
        if (it == hits.end()) return;
        if (delta > 0 && it->second++ == 0) --missing;
        if (delta < 0 && --it->second == 0) ++missing;
    };
    touch(a, 1);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == L) {
            if (missing == 0 && h.back() == b) visit(h);
            return;
        }
        for (int step : {1, -1}) {
            int x = h.back() + step;
            if (x < 1 || x > m.pp - 1 || std::abs(x - b) > L - i - 1) continue;
            h.push_back(x);
            touch(x, 1);
            self(self, i + 1);
            touch(x, -1);
            h.pop_back();
        }
    };
    rec(rec, 0);
}

void check_interfacial(const ModelShape& m, const std::set<int>& S)
{
    for (int s : S)
        if (s < 2 || s > m.pp - 2 || !is_interfacial(m, s))
            throw std::invalid_argument("restriction height " + std::to_string(s) + " is not interfacial");
}

}  // namespace

std::vector<Path> enumerate(const ModelShape& m, int a, int b, const Boundary& bd, int L, const std::set<int>& required)
{
    std::vector<Path> out;
    if (auto* ps = std::get_if<PostSeg>(&bd))
        if (std::abs(ps->c - b) != 1 || ps->c < 1 || ps->c > m.pp - 1) return out;
    walk(m, a, b, L, required, [&](const std::vector<int>& h) { out.push_back(Path{m, h, bd}); });
    return out;
}

Int count_paths_oracle(const ModelShape& m, int a, int b, int L)
{
    if (L < 0) return 0;
    std::vector<Int> cur(static_cast<std::size_t>(m.pp + 1), 0);
    if (a >= 1 && a <= m.pp - 1) cur[a] = 1;
    for (int i = 0; i < L; ++i) {
        std::vector<Int> nxt(cur.size(), 0);
        for (int x = 1; x <= m.pp - 1; ++x) {
            if (x > 1) nxt[x] += cur[x - 1];
            if (x < m.pp - 1) nxt[x] += cur[x + 1];
        }
        cur.swap(nxt);
    }
    return (b >= 1 && b <= m.pp - 1) ? cur[b] : Int(0);
}

QuarterPoly chi_restricted(const ModelShape& m, int a, int b, int c, int L, const std::set<int>& required)
{
    QuarterPoly r;
    if (std::abs(c - b) != 1 || c < 1 || c > m.pp - 1) return r;
    Path scratch{m, {}, PostSeg{c}};
    walk(m, a, b, L, required, [&](const std::vector<int>& h) {
        scratch.heights = h;
        r.add_term(4 * weight_sum(scratch), 1);
    });
    return r;
}

QuarterPoly chi(const ModelShape& m, int a, int b, int c, int L) { return chi_restricted(m, a, b, c, L, {}); }

std::vector<QuarterPoly> chi_tilde_by_m(const ModelShape& m, int a, int b, int e, int f, int L, const std::set<int>& S)
{
    check_interfacial(m, S);
    std::vector<QuarterPoly> out(static_cast<std::size_t>(std::max(L, 0) + 2));
    Path scratch{m, {}, Wings{e, f}};
    walk(m, a, b, L, S, [&](const std::vector<int>& h) {
        scratch.heights = h;
        int nonscoring = 0;
        long w = 0;
        for (int i = 0; i <= L; ++i) {
            if (classify_vertex(scratch, i).scoring) {
                if (i > 0) w += scoring_weight(scratch, i);
            } else {
                ++nonscoring;
            }
        }
        out[nonscoring].add_term(4 * w, 1);
    });
    return out;
}

QuarterPoly chi_tilde_restricted(const ModelShape& m, int a, int b, int e, int f, int L, std::optional<int> mm,
                                 const std::set<int>& S)
{
    auto parts = chi_tilde_by_m(m, a, b, e, f, L, S);
    if (mm) {
        if (*mm < 0 || *mm >= static_cast<int>(parts.size())) return {};
        return parts[*mm];
    }
    QuarterPoly r;
    for (const auto& p : parts) r += p;
    return r;
}

QuarterPoly chi_tilde(const ModelShape& m, int a, int b, int e, int f, int L, std::optional<int> mm)
{
    return chi_tilde_restricted(m, a, b, e, f, L, mm, {});
}

}  // namespace rsos
