#include <doctest.h>

#include "criteria.hpp"
#include "oracle.hpp"
#include "rsos/qseries.hpp"

using namespace rsos;

namespace {

QuarterPoly poly(std::initializer_list<std::pair<long, long>> terms)
{
    QuarterPoly p;
    for (auto [k, c] : terms) p.add_term(4 * k, c);
    return p;
}

}  // namespace

TEST_SUITE("qseries") {

TEST_CASE("termwise sum cancels to the empty map")
{
    CHECK(add(poly({{0, 1}, {1, 1}}), poly({{1, 1}})) == poly({{0, 1}, {1, 2}}));
    CHECK(add(poly({{0, 1}, {1, 1}}), poly({{0, -1}, {1, -1}})).is_zero());
    CHECK(add(QuarterPoly::q_pow(3), QuarterPoly()) == QuarterPoly::q_pow(3));
}

TEST_CASE("product adds quarter exponents")
{
    CHECK(mul(poly({{0, 1}, {1, 1}}), poly({{0, 1}, {1, 1}})) == poly({{0, 1}, {1, 2}, {2, 1}}));
    CHECK(mul(QuarterPoly::monomial(1), QuarterPoly::monomial(3)) == QuarterPoly::q_pow(1));
    CHECK(mul(poly({{2, 5}}), QuarterPoly::one()) == poly({{2, 5}}));
}

TEST_CASE("shift and inversion")
{
    CHECK(shift(QuarterPoly::one(), 4) == QuarterPoly::q_pow(1));
    CHECK(shift(QuarterPoly::q_pow(1), -4) == QuarterPoly::one());
    QuarterPoly half = shift(poly({{0, 1}, {1, 1}}), 2);
    CHECK(half.coeff_quarter(2) == 1);
    CHECK(half.coeff_quarter(6) == 1);
    CHECK_FALSE(half.has_integer_exponents());
    CHECK_THROWS_AS(half.integer_terms(), std::logic_error);

    CHECK(invert_q(poly({{0, 1}, {1, 1}})) == poly({{0, 1}, {-1, 1}}));
    CHECK(invert_q(QuarterPoly::q_pow(2)) == QuarterPoly::q_pow(-2));
    QuarterPoly p = poly({{-3, 2}, {0, 1}, {5, -7}});
    CHECK(invert_q(invert_q(p)) == p);
}

TEST_CASE("gaussian small values")
{
    CHECK(gaussian(3, 1) == poly({{0, 1}, {1, 1}, {2, 1}}));
    CHECK(gaussian(3, 1) == box_partition_oracle(1, 2));
    for (int A = 0; A <= 6; ++A) CHECK(gaussian(A, 0) == QuarterPoly::one());
    CHECK(gaussian(2, 3).is_zero());
    CHECK(gaussian(4, -1).is_zero());
}

TEST_CASE("modified gaussian keeps the annihilation value")
{
    CHECK(gaussian_modified(-1, 0) == QuarterPoly::one());
    CHECK(gaussian(-1, 0).is_zero());
    CHECK(gaussian_modified(3, 1) == gaussian(3, 1));
    // (q^{-2})_1 / (q)_1 = (1 - q^{-2}) / (1 - q) = -q^{-2} - q^{-1}
    CHECK(gaussian_modified(-2, 1) == poly({{-2, -1}, {-1, -1}}));
    CHECK(gaussian_modified(5, -1).is_zero());
}

TEST_CASE("box partition oracle")
{
    for (int m = 0; m <= 4; ++m) CHECK(box_partition_oracle(0, m) == QuarterPoly::one());
    CHECK(box_partition_oracle(1, 2) == poly({{0, 1}, {1, 1}, {2, 1}}));
    CHECK(box_partition_oracle(2, 2) == poly({{0, 1}, {1, 1}, {2, 2}, {3, 1}, {4, 1}}));
    CHECK(box_partition_oracle(3, 3) == oracle::box(3, 3));
}

TEST_CASE("pochhammer expands the finite product")
{
    CHECK(pochhammer(1, 0) == QuarterPoly::one());
    CHECK(pochhammer(1, 1) == poly({{0, 1}, {1, -1}}));
    CHECK(pochhammer(1, 2) == poly({{0, 1}, {1, -1}, {2, -1}, {3, 1}}));
    CHECK_THROWS(pochhammer(1, -1));
}

TEST_CASE("exact division and its failure")
{
    QuarterPoly num = pochhammer(1, 4);
    CHECK(exact_divide(num, pochhammer(1, 2)) == pochhammer(3, 2));
    CHECK_THROWS_AS(exact_divide(QuarterPoly::one(), poly({{0, 1}, {1, -1}})), std::domain_error);
}

TEST_CASE("truncation")
{
    CHECK(truncate(poly({{0, 1}, {1, 1}, {5, 1}}), 2) == poly({{0, 1}, {1, 1}}));
    CHECK(truncate(QuarterPoly(), 3).is_zero());
    QuarterPoly g = gaussian(7, 3);
    CHECK(truncate(g, 100) == g);
}

TEST_CASE("gaussian laws against the box oracle up to A = 8")
{
    checks::Result r = checks::gaussian_laws(8);
    INFO(r.detail);
    CHECK(r.pass);
}

TEST_CASE("coefficients are exact beyond 64 bits")
{
    QuarterPoly g = gaussian(80, 40);
    Int mid = g.coeff(800);
    CHECK(mid > Int("18446744073709551615"));
}

}
