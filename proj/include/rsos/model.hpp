#pragma once

#include <optional>
#include <vector>

namespace rsos {

inline long floor_div(long a, long b)
{
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// 1 iff i and j have the same parity
inline int same_parity(long i, long j) { return ((i - j) % 2 == 0) ? 1 : 0; }

// Heights 1..pp-1, bands 1..pp-2; band h lies between heights h and h+1.
struct ModelShape {
    int p = 1;
    int pp = 3;

    ModelShape() = default;
    // throws std::invalid_argument unless 0 < p < pp and gcd(p, pp) = 1
    ModelShape(int p_, int pp_);

    int band_count() const { return pp - 2; }
    int odd_band_count() const { return p - 1; }
    int even_band_count() const { return pp - p - 1; }
    ModelShape dual() const { return ModelShape(pp - p, pp); }

    friend bool operator==(const ModelShape& a, const ModelShape& b) { return a.p == b.p && a.pp == b.pp; }
    friend bool operator!=(const ModelShape& a, const ModelShape& b) { return !(a == b); }
};

// throws std::out_of_range unless 1 <= h <= pp-2
bool band_is_odd(const ModelShape& m, int h);
// nullopt when h does not name a band of the grid
std::optional<bool> band_is_odd_or_none(const ModelShape& m, int h);
int odd_band_position(const ModelShape& m, int r);
// throws std::out_of_range unless 2 <= a <= pp-2
bool is_interfacial(const ModelShape& m, int a);
std::vector<int> interfacial_heights(const ModelShape& m);
// parity of the band entered by the segment from a towards a + (-1)^e
int delta_ae(const ModelShape& m, int a, int e);

struct TakahashiData {
    int p = 0;
    int pp = 0;
    std::vector<int> cf;  // c_0..c_n with c_n >= 2
    int n = 0;
    int t = 0;
    std::vector<int> tk;  // t_0..t_{n+1}; t_0 = -1
    std::vector<long> y_store;  // y_{-1}..y_{n+1}
    std::vector<long> z_store;
    // kappa, kappa_tilde, l indexed 0..t_{n+1} = t+1; l_0 is set but unused
    std::vector<long> kappa;
    std::vector<long> kappa_tilde;
    std::vector<long> l;
    std::vector<int> T;        // kappa_0..kappa_{t-1}
    std::vector<int> T_prime;  // pp - kappa_j

    long y(int k) const { return y_store.at(static_cast<std::size_t>(k + 1)); }
    long z(int k) const { return z_store.at(static_cast<std::size_t>(k + 1)); }
};

// throws std::invalid_argument for non-coprime or out-of-order input
TakahashiData continued_fraction(int p, int pp);
// the k with t_k < j <= t_{k+1}; throws std::out_of_range
int zone_of(const TakahashiData& tak, int j);

enum class Membership { InT, InTPrime, Neither };
enum class TakPreference { PreferT, PreferTPrime };

struct TakMember {
    Membership which = Membership::Neither;
    int sigma = -1;
    bool ambiguous = false;  // a lies in both T and T' (single-zone models)
};

TakMember takahashi_membership(const TakahashiData& tak, int a,
                               TakPreference pref = TakPreference::PreferT);

// bands 1..y_n-2 of (p,pp) against those of (z_n,y_n)
bool submodel_parity_check(const ModelShape& m);

}  // namespace rsos
