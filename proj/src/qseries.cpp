#include "rsos/qseries.hpp"

#include <numeric>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace rsos {

QuarterPoly QuarterPoly::one() { return monomial(0, 1); }

QuarterPoly QuarterPoly::monomial(long quarter_exp, const Int& c)
{
    QuarterPoly r;
    r.add_term(quarter_exp, c);
    return r;
}

QuarterPoly QuarterPoly::q_pow(long k, const Int& c) { return monomial(4 * k, c); }

bool QuarterPoly::has_integer_exponents() const
{
    for (const auto& [e, c] : terms_)
        if (e % 4 != 0) return false;
    return true;
}

void QuarterPoly::add_term(long quarter_exp, const Int& c)
{
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(quarter_exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Int QuarterPoly::coeff_quarter(long quarter_exp) const
{
    auto it = terms_.find(quarter_exp);
    return it == terms_.end() ? Int(0) : it->second;
}

std::map<long, Int> QuarterPoly::integer_terms() const
{
    std::map<long, Int> out;
    for (const auto& [e, c] : terms_) {
        if (e % 4 != 0) throw std::logic_error("polynomial has a fractional exponent");
        out.emplace_hint(out.end(), e / 4, c);
    }
    return out;
}

QuarterPoly& QuarterPoly::operator+=(const QuarterPoly& r)
{
    for (const auto& [e, c] : r.terms_) add_term(e, c);
    return *this;
}

QuarterPoly& QuarterPoly::operator-=(const QuarterPoly& r)
{
    for (const auto& [e, c] : r.terms_) add_term(e, -c);
    return *this;
}

QuarterPoly QuarterPoly::operator-() const
{
    QuarterPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

QuarterPoly operator*(const QuarterPoly& a, const QuarterPoly& b)
{
    QuarterPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

QuarterPoly& QuarterPoly::operator*=(const QuarterPoly& r) { return *this = *this * r; }

std::string QuarterPoly::to_string() const
{
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Int mag = abs(c);
        if (first) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string var;
        if (e != 0) {
            if (e % 4 == 0) {
                long k = e / 4;
                var = k == 1 ? "q" : "q^" + std::to_string(k);
            } else {
                long g = std::gcd(e < 0 ? -e : e, 4L);
                var = "q^(" + std::to_string(e / g) + "/" + std::to_string(4 / g) + ")";
            }
        }
        if (var.empty() || mag != 1) s += mag.get_str();
        s += var;
    }
    return s;
}

QuarterPoly add(const QuarterPoly& p, const QuarterPoly& r) { return p + r; }

QuarterPoly mul(const QuarterPoly& p, const QuarterPoly& r) { return p * r; }

QuarterPoly shift(const QuarterPoly& p, long quarter_exp)
{
    QuarterPoly r;
    for (const auto& [e, c] : p.terms()) r.add_term(e + quarter_exp, c);
    return r;
}

QuarterPoly invert_q(const QuarterPoly& p)
{
    QuarterPoly r;
    for (const auto& [e, c] : p.terms()) r.add_term(-e, c);
    return r;
}

QuarterPoly truncate(const QuarterPoly& p, long max_degree)
{
    QuarterPoly r;
    for (const auto& [e, c] : p.terms()) {
        if (e > 4 * max_degree) break;
        r.add_term(e, c);
    }
    return r;
}

QuarterPoly pochhammer(long z_power, long n)
{
    if (n < 0) throw std::invalid_argument("pochhammer: negative length");
    QuarterPoly r = QuarterPoly::one();
    for (long i = 0; i < n; ++i) {
        QuarterPoly f = QuarterPoly::one();
        f.add_term(4 * (z_power + i), -1);
        r *= f;
        if (r.is_zero()) break;
    }
    return r;
}

QuarterPoly exact_divide(const QuarterPoly& num, const QuarterPoly& den)
{
    if (den.is_zero()) throw std::domain_error("exact_divide: zero divisor");
    QuarterPoly rem = num;
    QuarterPoly quot;
    if (rem.is_zero()) return quot;
    const long dlo = den.min_quarter();
    const Int& dc = den.terms().begin()->second;
    const long qhi = num.max_quarter() - den.max_quarter();
    while (!rem.is_zero()) {
        long e = rem.min_quarter() - dlo;
        const Int& c = rem.terms().begin()->second;
        if (e > qhi || !mpz_divisible_p(c.get_mpz_t(), dc.get_mpz_t()))
            throw std::domain_error("exact_divide: divisor does not divide");
        Int t = c / dc;
        quot.add_term(e, t);
        for (const auto& [de, dcoef] : den.terms()) rem.add_term(de + e, -t * dcoef);
    }
    return quot;
}

namespace {

// dense coefficients of [A over B], 0 <= B <= A
std::vector<Int> gaussian_dense(long A, long B)
{
    if (2 * B > A) B = A - B;
    // intermediate products reach degree B(A-B+1) before the last division
    std::vector<Int> c(static_cast<std::size_t>(B * (A - B + 1) + 1));
    c[0] = 1;
    long deg = 0;
    for (long i = 0; i < B; ++i) {
        // multiply by (1 - q^{A-i})
        long s = A - i;
        for (long n = deg + s; n >= s; --n) c[n] -= c[n - s];
        deg += s;
        // divide by (1 - q^{i+1})
        long k = i + 1;
        for (long n = k; n <= deg; ++n) c[n] += c[n - k];
        deg -= k;
    }
    c.resize(static_cast<std::size_t>(deg + 1));
    return c;
}

}  // namespace

QuarterPoly gaussian(long A, long B)
{
    if (B < 0 || B > A) return {};
    static thread_local std::map<std::pair<long, long>, QuarterPoly> cache;
    auto key = std::make_pair(A, std::min(B, A - B));
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    QuarterPoly r;
    auto c = gaussian_dense(A, B);
    for (std::size_t n = 0; n < c.size(); ++n) r.add_term(4 * static_cast<long>(n), c[n]);
    if (cache.size() < 20000) cache.emplace(key, r);
    return r;
}

QuarterPoly gaussian_modified(long A, long B)
{
    if (B < 0) return {};
    if (A >= 0) return gaussian(A, B);
    static thread_local std::map<std::pair<long, long>, QuarterPoly> cache;
    auto key = std::make_pair(A, B);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    QuarterPoly r = exact_divide(pochhammer(A - B + 1, B), pochhammer(1, B));
    if (cache.size() < 20000) cache.emplace(key, r);
    return r;
}

QuarterPoly box_partition_oracle(int k, int m)
{
    if (k < 0 || m < 0) throw std::invalid_argument("box_partition_oracle: negative box");
    std::map<long, long long> counts;
    std::vector<int> parts;
    // parts are generated in non-increasing order, each bounded by the previous one
    auto rec = [&](auto&& self, int bound, long weight) -> void {
        ++counts[weight];
        if (static_cast<int>(parts.size()) == k) return;
        for (int x = 1; x <= bound; ++x) {
            parts.push_back(x);
            self(self, x, weight + x);
            parts.pop_back();
        }
    };
    rec(rec, m, 0);
    QuarterPoly r;
    for (const auto& [w, n] : counts) r.add_term(4 * w, Int(static_cast<long>(n)));
    return r;
}

}  // namespace rsos
