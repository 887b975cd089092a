#include "rsos/characters.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rsos {

int ground_state_r(int p, int pp, int b, int c)
{
    return static_cast<int>(floor_div(static_cast<long>(p) * c, pp)) + (b - c + 1) / 2;
}

QuarterPoly bosonic(int p, int pp, int a, int b, int c, int L)
{
    QuarterPoly res;
    if (L < 0 || (L + a - b) % 2 != 0) return res;
    const long r = ground_state_r(p, pp, b, c);
    const long K = (L + a - b) / 2;
    // lower indices K - pp*lam and K - pp*lam - a must reach [0, L]
    const long lo = floor_div(K - L - a, pp) - 1;
    const long hi = floor_div(K, pp) + 1;
    for (long lam = lo; lam <= hi; ++lam) {
        QuarterPoly g = gaussian(L, K - pp * lam);
        if (!g.is_zero()) res += shift(g, 4 * (lam * lam * p * pp + lam * (pp * r - static_cast<long>(p) * a)));
        g = gaussian(L, K - pp * lam - a);
        if (!g.is_zero()) res -= shift(g, 4 * ((lam * p + r) * (lam * pp + a)));
    }
    return res;
}

QuarterPoly rocha_caridi_truncated(int p, int pp, int r, int s, long N)
{
    if (N < 0) return {};
    std::vector<Int> part(static_cast<std::size_t>(N + 1), 0);
    part[0] = 1;
    for (long k = 1; k <= N; ++k)
        for (long n = k; n <= N; ++n) part[n] += part[n - k];

    QuarterPoly sum;
    const long lin = std::abs(static_cast<long>(pp) * r - static_cast<long>(p) * s) + std::abs(static_cast<long>(r)) +
                     std::abs(static_cast<long>(s)) + 1;
    const long bound = N + lin;
    for (long lam = -bound; lam <= bound; ++lam) {
        long e1 = lam * lam * p * pp + lam * (static_cast<long>(pp) * r - static_cast<long>(p) * s);
        long e2 = (lam * p + r) * (lam * pp + s);
        if (e1 <= N) sum.add_term(4 * e1, 1);
        if (e2 <= N) sum.add_term(4 * e2, -1);
    }
    QuarterPoly series;
    for (long n = 0; n <= N; ++n) series.add_term(4 * n, part[n]);
    return truncate(series * sum, N);
}

namespace {

bool is_zone_boundary(const TakahashiData& tak, int i)
{
    for (int k = 1; k <= tak.n; ++k)
        if (tak.tk[k] == i) return true;
    return false;
}

long c_entry(const TakahashiData& tak, int i, int j)
{
    const int d = j - i;
    if (is_zone_boundary(tak, i)) return d == -1 ? -1 : (d == 0 || d == 1) ? 1 : 0;
    return d == -1 ? -1 : d == 0 ? 2 : d == 1 ? -1 : 0;
}

void side_vectors(const TakahashiData& tak, const TakMember& mem, std::vector<long>& u, std::vector<long>& delta)
{
    const int t = tak.t;
    const int s = mem.sigma;
    u.assign(static_cast<std::size_t>(t + 1), 0);
    if (s >= 1) u[s] += 1;
    for (int k = 1; k <= tak.n; ++k) {
        int tk = tak.tk[k];
        if (s <= tk && tk < t && tk >= 1) u[tk] -= 1;
    }
    if (mem.which == Membership::InT) {
        delta = u;
        for (auto& x : delta) x = -x;
        return;
    }
    u[t] += 1;
    delta.assign(static_cast<std::size_t>(t + 1), 0);
    delta[t] -= 1;
    if (s >= 1) delta[s] += 1;
    for (int k = 1; k <= tak.n; ++k) {
        int tk = tak.tk[k];
        if (s <= tk && tk < t && tk >= 1) delta[tk] -= 1;
    }
}

}  // namespace

FermionicSystem build_system(int p, int pp, int a, int b, TakPreference pref)
{
    FermionicSystem sys;
    sys.tak = continued_fraction(p, pp);
    sys.a = a;
    sys.b = b;
    const TakahashiData& tak = sys.tak;
    const int t = tak.t;
    sys.member_L = takahashi_membership(tak, a, pref);
    sys.member_R = takahashi_membership(tak, b, pref);
    if (sys.member_L.which == Membership::Neither)
        throw std::invalid_argument("a = " + std::to_string(a) + " is in neither T nor T'");
    if (sys.member_R.which == Membership::Neither)
        throw std::invalid_argument("b = " + std::to_string(b) + " is in neither T nor T'");
    sys.k_L = zone_of(tak, sys.member_L.sigma);
    sys.k_R = zone_of(tak, sys.member_R.sigma);
    side_vectors(tak, sys.member_L, sys.u_L, sys.delta_L);
    side_vectors(tak, sys.member_R, sys.u_R, sys.delta_R);
    sys.u.resize(static_cast<std::size_t>(t + 1));
    for (int j = 0; j <= t; ++j) sys.u[j] = sys.u_L[j] + sys.u_R[j];

    sys.C.assign(static_cast<std::size_t>(t), std::vector<long>(static_cast<std::size_t>(t), 0));
    sys.C_hat = sys.C;
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < t; ++j) {
            sys.C[i][j] = c_entry(tak, i, j);
            sys.C_hat[i][j] = c_entry(tak, i + 1, j);
        }

    // C_hat is upper triangular with -1 on the diagonal, so back substitution works mod 2
    sys.Q.assign(static_cast<std::size_t>(t), 0);
    for (int r = t - 1; r >= 0; --r) {
        long s = sys.u[r + 1];
        for (int c = r + 1; c < t; ++c) s -= sys.C_hat[r][c] * sys.Q[c];
        sys.Q[r] = static_cast<int>(((s % 2) + 2) % 2);
    }

    sys.alpha.assign(static_cast<std::size_t>(t + 1), 0);
    sys.beta = sys.alpha;
    sys.gamma_seq = sys.alpha;
    sys.steps.assign(static_cast<std::size_t>(t), {});
    long al = 0, be = 0, ga = 0;
    for (int j = t; j >= 1; --j) {
        long b1 = be + sys.delta_L[j] - sys.delta_R[j];
        long g1 = ga + 2 * al * sys.delta_R[j];
        long a2 = al + b1;
        long g2 = g1 - b1 * b1;
        sys.steps[j - 1] = {a2, b1, g2};
        if (is_zone_boundary(tak, j - 1)) {
            al = a2;
            be = a2 - b1;
            ga = -a2 * a2 - g2;
        } else {
            al = a2;
            be = b1;
            ga = g2;
        }
        sys.alpha[j - 1] = al;
        sys.beta[j - 1] = be;
        sys.gamma_seq[j - 1] = ga;
    }
    sys.gamma = ga;
    return sys;
}

std::vector<long> flat_sharp(const TakahashiData& tak, const std::vector<long>& u, Mask mask)
{
    std::vector<long> out(u.size(), 0);
    for (int j = 1; j < tak.t && j < static_cast<int>(u.size()); ++j) {
        bool odd_zone = zone_of(tak, j) % 2 == 1;
        if (odd_zone == (mask == Mask::Flat)) out[j] = u[j];
    }
    return out;
}

CChoice c_from_b(int p, int pp, int b)
{
    TakahashiData tak = continued_fraction(p, pp);
    const int t1 = pp > 2 * p ? tak.tk[1] : tak.tk[2];
    if (b == 1) return {2, false};
    if (1 < b && b <= t1) return {b - 1, false};
    if (b == pp - 1) return {pp - 2, false};
    if (pp - t1 <= b && b < pp - 1) return {b + 1, false};
    // either neighbour gives the same generating function only when b is interfacial
    return {b + 1, is_interfacial(ModelShape(p, pp), b)};
}

std::vector<MnSolution> mn_solutions(const FermionicSystem& sys, int L, FermionicForm form)
{
    std::vector<MnSolution> out;
    const int t = sys.t();
    const auto& l = sys.tak.l;
    if (L < 0 || t < 1) return out;
    long twice_budget = L;
    for (int i = 1; i <= t; ++i) twice_budget += l[i] * sys.u[i];
    if (twice_budget % 2 != 0) return out;
    const long budget = twice_budget / 2;
    const bool modified = form == FermionicForm::Modified;

    // slack[j]: the most that n_1..n_{j-1} = -1 entries can hand back to the budget
    std::vector<long> slack(static_cast<std::size_t>(t + 1), 0);
    for (int j = 2; j <= t; ++j) slack[j] = slack[j - 1] + (modified ? l[j - 1] : 0);

    std::vector<long> m(static_cast<std::size_t>(t + 2), 0);  // m_0..m_{t+1}; m_t = m_{t+1} = 0
    std::vector<long> n(static_cast<std::size_t>(t), 0);
    auto C_at = [&](int i, int j) -> long { return (j >= 0 && j < t && i >= 0 && i <= t) ? c_entry(sys.tak, i, j) : 0; };

    auto rec = [&](auto&& self, int j, long remaining) -> void {
        if (j == 0) {
            if (m[0] == L && remaining == 0) {
                MnSolution s;
                s.m_hat.assign(m.begin(), m.begin() + t);
                s.n = n;
                out.push_back(std::move(s));
            }
            return;
        }
        const long base = C_at(j, j) * m[j] + C_at(j, j + 1) * m[j + 1] - sys.u[j];
        long lo = 0;
        if (modified && j < t && m[j] == 0) lo = -1;
        // m_{j-1} = base + 2 n_j >= 0
        lo = std::max(lo, -floor_div(base, 2));
        const long hi = floor_div(remaining + slack[j], l[j]);
        for (long nj = lo; nj <= hi; ++nj) {
            n[j - 1] = nj;
            m[j - 1] = base + 2 * nj;
            if (j - 1 == 0 && m[0] != L) continue;
            self(self, j - 1, remaining - l[j] * nj);
        }
    };
    rec(rec, t, budget);
    return out;
}

std::vector<FermionicTerm> fermionic_terms(const FermionicSystem& sys, int L, FermionicForm form)
{
    std::vector<FermionicTerm> out;
    const int t = sys.t();
    const auto uf = flat_sharp(sys.tak, sys.u_L, Mask::Flat);
    const auto us = flat_sharp(sys.tak, sys.u_R, Mask::Sharp);
    for (auto& sol : mn_solutions(sys, L, form)) {
        const auto& mh = sol.m_hat;
        QuarterPoly prod = QuarterPoly::one();
        for (int j = 1; j < t && !prod.is_zero(); ++j) {
            long A = mh[j] + sol.n[j - 1];
            prod *= form == FermionicForm::Modified ? gaussian_modified(A, mh[j]) : gaussian(A, mh[j]);
        }
        if (prod.is_zero()) continue;
        long e4 = -static_cast<long>(L) * L + sys.gamma;
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j) e4 += mh[i] * sys.C[i][j] * mh[j];
        for (int j = 1; j < t; ++j) e4 -= 2 * (uf[j] + us[j]) * mh[j];
        if (e4 % 4 != 0) throw std::logic_error("fermionic term has a fractional exponent");
        out.push_back({std::move(sol), shift(prod, e4)});
    }
    return out;
}

TailBranch tail_branch(const TakahashiData& tak, int a, int b)
{
    const long yn = tak.y(tak.n);
    if (a < yn && b < yn) return TailBranch::Below;
    if (a > tak.pp - yn && b > tak.pp - yn) return TailBranch::Above;
    return TailBranch::None;
}

namespace {

QuarterPoly fermionic_sum(const FermionicSystem& sys, int L, FermionicForm form)
{
    QuarterPoly r;
    for (const auto& term : fermionic_terms(sys, L, form)) r += term.value;
    return r;
}

}  // namespace

QuarterPoly fermionic_classical(int p, int pp, int a, int b, int L, TakPreference pref)
{
    FermionicSystem sys = build_system(p, pp, a, b, pref);
    QuarterPoly r = fermionic_sum(sys, L, FermionicForm::Classical);
    const TakahashiData& tak = sys.tak;
    const int yn = static_cast<int>(tak.y(tak.n));
    const int zn = static_cast<int>(tak.z(tak.n));
    const CChoice cc = c_from_b(p, pp, b);
    // an ambiguous c may be swapped for b-1 (both give the same full-model value) to stay inside the submodel
    int c = cc.c;
    switch (tail_branch(tak, a, b)) {
    case TailBranch::Below:
        if (cc.ambiguous && c >= yn) c = b - 1;
        r += bosonic(zn, yn, a, b, c, L);
        break;
    case TailBranch::Above:
        if (cc.ambiguous && pp - c >= yn) c = b - 1;
        r += bosonic(zn, yn, pp - a, pp - b, pp - c, L);
        break;
    case TailBranch::None:
        break;
    }
    return r;
}

QuarterPoly fermionic_modified(int p, int pp, int a, int b, int L, TakPreference pref)
{
    return fermionic_sum(build_system(p, pp, a, b, pref), L, FermionicForm::Modified);
}

}  // namespace rsos
