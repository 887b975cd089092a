#include "rsos/model.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rsos {

ModelShape::ModelShape(int p_, int pp_) : p(p_), pp(pp_)
{
    if (!(0 < p && p < pp)) throw std::invalid_argument("model requires 0 < p < p'");
    if (std::gcd(p, pp) != 1) throw std::invalid_argument("model requires gcd(p, p') = 1");
}

namespace {

bool odd_by_floor(long p, long pp, long h) { return floor_div(h * p, pp) != floor_div((h + 1) * p, pp); }

}  // namespace

bool band_is_odd(const ModelShape& m, int h)
{
    if (h < 1 || h > m.pp - 2) throw std::out_of_range("band index " + std::to_string(h) + " outside 1..p'-2");
    return odd_by_floor(m.p, m.pp, h);
}

std::optional<bool> band_is_odd_or_none(const ModelShape& m, int h)
{
    if (h < 1 || h > m.pp - 2) return std::nullopt;
    return odd_by_floor(m.p, m.pp, h);
}

int odd_band_position(const ModelShape& m, int r)
{
    if (r < 1 || r >= m.p) throw std::out_of_range("odd band index outside 1..p-1");
    return static_cast<int>(floor_div(static_cast<long>(r) * m.pp, m.p));
}

bool is_interfacial(const ModelShape& m, int a)
{
    if (a < 2 || a > m.pp - 2) throw std::out_of_range("interfacial test needs 2 <= a <= p'-2");
    return floor_div(static_cast<long>(a + 1) * m.p, m.pp) == floor_div(static_cast<long>(a - 1) * m.p, m.pp) + 1;
}

std::vector<int> interfacial_heights(const ModelShape& m)
{
    std::vector<int> out;
    for (int a = 2; a <= m.pp - 2; ++a)
        if (is_interfacial(m, a)) out.push_back(a);
    return out;
}

int delta_ae(const ModelShape& m, int a, int e)
{
    long a2 = a + (e == 0 ? 1 : -1);
    return floor_div(a2 * m.p, m.pp) != floor_div(static_cast<long>(a) * m.p, m.pp) ? 1 : 0;
}

TakahashiData continued_fraction(int p, int pp)
{
    ModelShape shape(p, pp);
    TakahashiData d;
    d.p = p;
    d.pp = pp;
    long x = pp, yv = p;
    while (yv != 0) {
        d.cf.push_back(static_cast<int>(x / yv));
        long r = x % yv;
        x = yv;
        yv = r;
    }
    if (d.cf.size() > 1 && d.cf.back() == 1) {
        d.cf.pop_back();
        d.cf.back() += 1;
    }
    d.n = static_cast<int>(d.cf.size()) - 1;
    d.t = std::accumulate(d.cf.begin(), d.cf.end(), 0) - 2;

    d.tk.assign(static_cast<std::size_t>(d.n + 2), -1);
    for (int k = 1; k <= d.n + 1; ++k) d.tk[k] = d.tk[k - 1] + d.cf[k - 1];

    d.y_store.assign(static_cast<std::size_t>(d.n + 3), 0);
    d.z_store.assign(static_cast<std::size_t>(d.n + 3), 0);
    d.y_store[0] = 0;
    d.y_store[1] = 1;
    d.z_store[0] = 1;
    d.z_store[1] = 0;
    for (int k = 1; k <= d.n + 1; ++k) {
        d.y_store[k + 1] = d.cf[k - 1] * d.y_store[k] + d.y_store[k - 1];
        d.z_store[k + 1] = d.cf[k - 1] * d.z_store[k] + d.z_store[k - 1];
    }

    const int top = d.tk[d.n + 1];
    d.kappa.assign(static_cast<std::size_t>(top + 1), 0);
    d.kappa_tilde.assign(static_cast<std::size_t>(top + 1), 0);
    d.l.assign(static_cast<std::size_t>(top + 1), 0);
    for (int k = 0; k <= d.n; ++k) {
        for (int j = d.tk[k] + 1; j <= d.tk[k + 1]; ++j) {
            long s = j - d.tk[k];
            d.kappa[j] = d.y(k - 1) + s * d.y(k);
            d.kappa_tilde[j] = d.z(k - 1) + s * d.z(k);
            d.l[j] = d.y(k - 1) + (s - 1) * d.y(k);
        }
    }
    for (int j = 0; j < d.t; ++j) {
        d.T.push_back(static_cast<int>(d.kappa[j]));
        d.T_prime.push_back(pp - static_cast<int>(d.kappa[j]));
    }
    return d;
}

int zone_of(const TakahashiData& tak, int j)
{
    for (int k = 0; k <= tak.n; ++k)
        if (tak.tk[k] < j && j <= tak.tk[k + 1]) return k;
    throw std::out_of_range("index outside every zone");
}

TakMember takahashi_membership(const TakahashiData& tak, int a, TakPreference pref)
{
    auto index_of = [&](int v) -> int {
        for (int j = 0; j < tak.t; ++j)
            if (tak.kappa[j] == v) return j;
        return -1;
    };
    int in_t = index_of(a);
    int in_tp = index_of(tak.pp - a);
    TakMember r;
    r.ambiguous = in_t >= 0 && in_tp >= 0;
    bool use_t = in_t >= 0 && (in_tp < 0 || pref == TakPreference::PreferT);
    if (use_t) {
        r.which = Membership::InT;
        r.sigma = in_t;
    } else if (in_tp >= 0) {
        r.which = Membership::InTPrime;
        r.sigma = in_tp;
    }
    return r;
}

bool submodel_parity_check(const ModelShape& m)
{
    TakahashiData tak = continued_fraction(m.p, m.pp);
    long yn = tak.y(tak.n), zn = tak.z(tak.n);
    for (long s = 1; s <= yn - 2; ++s)
        if (odd_by_floor(m.p, m.pp, s) != odd_by_floor(zn, yn, s)) return false;
    return true;
}

}  // namespace rsos
