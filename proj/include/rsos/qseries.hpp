#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace rsos {

using Int = mpz_class;

// Laurent polynomial in q^(1/4) with exact integer coefficients.
// Exponents are stored in quarter units; no stored coefficient is zero.
class QuarterPoly {
public:
    using Terms = std::map<long, Int>;

    QuarterPoly() = default;

    static QuarterPoly one();
    static QuarterPoly monomial(long quarter_exp, const Int& c = 1);
    // c * q^k for an integer exponent k
    static QuarterPoly q_pow(long k, const Int& c = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    bool has_integer_exponents() const;

    void add_term(long quarter_exp, const Int& c);
    Int coeff_quarter(long quarter_exp) const;
    Int coeff(long k) const { return coeff_quarter(4 * k); }

    // precondition: nonzero
    long min_quarter() const { return terms_.begin()->first; }
    long max_quarter() const { return terms_.rbegin()->first; }

    // exponent -> coefficient in whole powers of q; throws if any exponent is fractional
    std::map<long, Int> integer_terms() const;

    QuarterPoly& operator+=(const QuarterPoly& r);
    QuarterPoly& operator-=(const QuarterPoly& r);
    QuarterPoly& operator*=(const QuarterPoly& r);
    QuarterPoly operator-() const;

    friend QuarterPoly operator+(QuarterPoly a, const QuarterPoly& b) { return a += b; }
    friend QuarterPoly operator-(QuarterPoly a, const QuarterPoly& b) { return a -= b; }
    friend QuarterPoly operator*(const QuarterPoly& a, const QuarterPoly& b);
    friend bool operator==(const QuarterPoly& a, const QuarterPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const QuarterPoly& a, const QuarterPoly& b) { return !(a == b); }

    std::string to_string() const;

private:
    Terms terms_;
};

QuarterPoly add(const QuarterPoly& p, const QuarterPoly& r);
QuarterPoly mul(const QuarterPoly& p, const QuarterPoly& r);
QuarterPoly shift(const QuarterPoly& p, long quarter_exp);
// q -> q^{-1}
QuarterPoly invert_q(const QuarterPoly& p);
// drops every term of degree > max_degree (degree in whole powers of q)
QuarterPoly truncate(const QuarterPoly& p, long max_degree);

// (q^z; q)_n = prod_{i<n} (1 - q^{z+i}); throws for n < 0
QuarterPoly pochhammer(long z_power, long n);
// exact quotient; throws std::domain_error when den does not divide num
QuarterPoly exact_divide(const QuarterPoly& num, const QuarterPoly& den);

// [A over B]_q, zero unless 0 <= B <= A
QuarterPoly gaussian(long A, long B);
// (q^{A-B+1})_B / (q)_B for B >= 0, zero for B < 0
QuarterPoly gaussian_modified(long A, long B);
// sum of q^{|lambda|} over partitions with at most k parts, each at most m
QuarterPoly box_partition_oracle(int k, int m);

}  // namespace rsos
