#include <doctest.h>

#include "criteria.hpp"
#include "fig1.hpp"
#include "oracle.hpp"
#include "rsos/paths.hpp"

using namespace rsos;

TEST_SUITE("paths") {

TEST_CASE("validation names the violated invariant")
{
    CHECK_THROWS_WITH_AS(make_path(ModelShape(3, 8), {1, 3}, PostSeg{2}), doctest::Contains("step size"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(make_path(ModelShape(3, 8), {1, 0}, PostSeg{1}), doctest::Contains("height range"), std::invalid_argument);
    CHECK_THROWS_AS(make_path(ModelShape(3, 8), {2, 3}, PostSeg{5}), std::invalid_argument);
    Path h = fig1_path();
    CHECK_THROWS_AS(h.e(), std::logic_error);
}

TEST_CASE("worked path: scoring vertices and weight")
{
    Path h = fig1_path();
    CHECK(scoring_vertices(h) == std::vector<int>{3, 4, 5, 7, 8, 13, 14});
    CHECK(weight_wt(h) == 24);
    CHECK_THROWS_AS(classify_vertex(h, 0), std::invalid_argument);
    CHECK(classify_vertex(h, 7).shape == Shape::PeakUp);
    CHECK(classify_vertex(h, 1).shape == Shape::StraightUp);
}

TEST_CASE("worked path: striking sequence and parameters")
{
    for (int e = 0; e < 2; ++e) {
        Path h = fig1_path(Wings{e, 1});
        StrikingSequence ss = striking_sequence(h);
        std::vector<Column> expect{{2, 1}, {0, 1}, {1, 2}, {1, 1}, {1, 0}, {2, 1}, {0, 1}};
        CHECK(ss.columns == expect);
        CHECK(ss.f == 1);
        CHECK(ss.d == 0);
        PathStats st = path_stats(h);
        CHECK(st.m == 8 - e);
        CHECK(st.alpha == 2);
        CHECK(st.beta == 2 - e);
        CHECK(weight_from_striking(ss) == weight_wtilde(h));
        CHECK(rebuild_heights(ss, h.a()) == h.heights);
    }
}

TEST_CASE("winged weight equals the post-segment weight when the post-segment band is even")
{
    // post-segment from 4 towards 3 lies in band 3, which is even in (3,8)
    CHECK(weight_wtilde(fig1_path(Wings{0, 1})) == weight_wt(fig1_path(PostSeg{3})));
}

TEST_CASE("the (1,3) zigzag")
{
    ModelShape m(1, 3);
    for (int L = 0; L <= 8; L += 2) {
        auto paths = enumerate(m, 1, 1, Wings{0, 0}, L);
        REQUIRE(paths.size() == 1);
        CHECK(weight_wtilde(paths[0]) == L * L / 4);
        CHECK(path_stats(paths[0]).m == 0);
        auto sv = scoring_vertices(paths[0]);
        for (int i = 1; i <= L; ++i) CHECK(std::find(sv.begin(), sv.end(), i) != sv.end());
        CHECK(chi(m, 1, 1, 2, L) == QuarterPoly::q_pow(L * L / 4));
    }
    for (int L = 1; L <= 7; L += 2) {
        auto paths = enumerate(m, 1, 2, Wings{0, 1}, L);
        REQUIRE(paths.size() == 1);
        CHECK(weight_wtilde(paths[0]) == (L * L - 1) / 4);
    }
}

TEST_CASE("empty path conventions")
{
    Path h = make_path(ModelShape(3, 8), {4}, Wings{1, 1});
    CHECK(weight_wtilde(h) == 0);
    PathStats st = path_stats(h);
    CHECK(st.m == 0);
    CHECK(st.beta == 0);
    Path g = make_path(ModelShape(3, 8), {4}, Wings{0, 1});
    CHECK(path_stats(g).m == 1);
    CHECK(path_stats(g).beta == 1);
    CHECK(chi(ModelShape(3, 8), 4, 4, 3, 0) == QuarterPoly::one());
}

TEST_CASE("enumeration counts against the step recursion")
{
    ModelShape m(3, 8);
    for (int L = 0; L <= 10; ++L) CHECK(Int(enumerate(m, 2, 4, PostSeg{3}, L).size()) == count_paths_oracle(m, 2, 4, L));
    CHECK(enumerate(m, 2, 4, PostSeg{3}, 3).empty());
}

TEST_CASE("generating functions against the independent scorer")
{
    for (auto [p, pp] : oracle::coprime_models(3, 6))
        for (int a = 1; a < pp; ++a)
            for (int b = 1; b < pp; ++b)
                for (int L = (a + b) % 2; L <= 8; L += 2) {
                    ModelShape m(p, pp);
                    for (int c : {b - 1, b + 1})
                        if (c >= 1 && c <= pp - 1) CHECK(chi(m, a, b, c, L) == oracle::chi(p, pp, a, b, c, L));
                    CHECK(chi_tilde(m, a, b, 0, 1, L) == oracle::chi_tilde(p, pp, a, b, 0, 1, L));
                }
}

TEST_CASE("chi contains the worked path")
{
    CHECK(chi(ModelShape(3, 8), 2, 4, 3, 14).coeff(24) >= 1);
}

TEST_CASE("restricted generating functions")
{
    ModelShape m(3, 8);
    CHECK(chi_tilde_restricted(m, 2, 4, 0, 0, 6, std::nullopt, {}) == chi_tilde(m, 2, 4, 0, 0, 6));
    // height 6 is unreachable from 2 to 2 in two steps
    CHECK(chi_tilde_restricted(m, 2, 2, 0, 0, 2, std::nullopt, {6}).is_zero());
    CHECK_THROWS_AS(chi_tilde_restricted(m, 2, 4, 0, 0, 6, std::nullopt, {4}), std::invalid_argument);
    for (int mm = 0; mm <= 9; ++mm)
        CHECK(chi_tilde_by_m(m, 2, 4, 1, 0, 8, {3})[mm] == oracle::chi_tilde(3, 8, 2, 4, 1, 0, 8, mm, {3}));
    CHECK(chi_tilde(m, 2, 4, 0, 0, 8, 10).is_zero());
}

TEST_CASE("path properties over p' <= 6, L <= 7")
{
    const checks::Sweep small{6, 7, 2, 4, 1};
    for (auto [name, fn] : std::vector<std::pair<const char*, checks::Result (*)(const checks::Sweep&)>>{
             {"weight vs striking", checks::weight_matches_striking},
             {"parameters", checks::path_parameters},
         }) {
        checks::Result r = fn(small);
        INFO(name << ": " << r.detail);
        CHECK(r.pass);
        CHECK(r.cases > 0);
    }
}

}
