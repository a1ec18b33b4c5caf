#include <random>

#include "doctest.h"
#include "graphs.hpp"

using namespace qtl;
using namespace qtl::plumbing;

namespace {
ErrorCode parse_error(const char* text)
{
    try {
        parse_plumbing(text);
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::internal;
}
}  // namespace

TEST_CASE("parse and validate plumbing graphs")
{
    auto s3 = parse_plumbing(R"({"vertices":[-1],"edges":[]})");
    CHECK(s3.size() == 1);
    auto e8 = parse_plumbing(to_json(testgraphs::e8()));
    CHECK(e8.size() == 8);
    CHECK(parse_error(R"({"vertices":[-1,-1],"edges":[[0,1],[0,1]]})") == ErrorCode::duplicate_edge);
    CHECK(parse_error(R"({"vertices":[-2,-2,-2],"edges":[[0,1],[1,2],[2,0]]})") == ErrorCode::cycle);
    CHECK(parse_error(R"({"vertices":[-2,-2,-2],"edges":[[0,1]]})") == ErrorCode::disconnected);
    CHECK(parse_error(R"({"vertices":[-2,"x"],"edges":[[0,1]]})") == ErrorCode::bad_weight);
    CHECK(parse_error(R"({"vertices":[-2,-1.5],"edges":[[0,1]]})") == ErrorCode::bad_weight);
    CHECK(parse_error(R"({"vertices":[-2],"edges":[[0,0]]})") == ErrorCode::self_loop);
    CHECK(parse_error(R"({"vertices":[-2],"edges":[[0,3]]})") == ErrorCode::invalid_input);
    CHECK(parse_error("/nonexistent/graph.json") == ErrorCode::invalid_input);
}

TEST_CASE("linking data")
{
    auto s3 = linking_data(testgraphs::single(-1));
    CHECK(s3.B().matrix() == IntMatrix{{-1}});
    CHECK(s3.delta() == std::vector<int>{0});
    CHECK(s3.trace() == -1);
    CHECK(s3.abs_det() == 1);

    auto p = linking_data(testgraphs::path({-2, -2}));
    CHECK(p.B().matrix() == IntMatrix{{-2, 1}, {1, -2}});
    CHECK(p.abs_det() == 3);
    CHECK(linking_data(testgraphs::e8()).abs_det() == 1);

    try {
        linking_data(testgraphs::path({-1, -1}));
        FAIL("expected a definiteness error");
    } catch (const DefinitenessError& e) {
        CHECK(e.minor_index() == 2);
        CHECK(e.code() == ErrorCode::not_negative_definite);
    }
}

TEST_CASE("spin^c classes and orbits")
{
    auto s3 = linking_data(testgraphs::single(-1));
    auto c = spinc_classes(s3);
    REQUIRE(c.size() == 1);
    CHECK(c[0].representative == std::vector<Integer>{0});
    CHECK(c[0].stabilizer_order == 2);
    CHECK(pm_orbit_representatives(s3, c).size() == 1);

    auto l3 = linking_data(testgraphs::single(-3));
    auto c3 = spinc_classes(l3);
    CHECK(c3.size() == 3);
    CHECK(pm_orbit_representatives(l3, c3).size() == 2);

    auto l4 = linking_data(testgraphs::single(-4));
    auto o4 = pm_orbit_representatives(l4, spinc_classes(l4));
    REQUIRE(o4.size() == 3);
    int fixed = 0;
    for (auto& o : o4) fixed += (o.size == 1);
    CHECK(fixed == 2);

    CHECK(spinc_classes(linking_data(testgraphs::e8())).size() == 1);
}

TEST_CASE("class count, negation bijectivity and representative independence")
{
    std::mt19937 rng(11);
    std::vector<PlumbingGraph> graphs = {testgraphs::single(-5), testgraphs::path({-2, -3}), testgraphs::path({-2, -2, -2}),
                                         testgraphs::path({-3, -2, -4}), testgraphs::e8(),
                                         make_graph({-2, -3, -2, -5}, {{0, 1}, {0, 2}, {0, 3}})};
    for (auto& g : graphs) {
        auto L = linking_data(g);
        auto classes = spinc_classes(L);
        CHECK(Integer(classes.size()) == L.abs_det());
        std::vector<int> hit(classes.size(), 0);
        for (size_t b = 0; b < classes.size(); ++b) ++hit[negation_index(L, classes, static_cast<int>(b))];
        for (int h : hit) CHECK(h == 1);

        std::uniform_int_distribution<int> shift(-3, 3);
        for (auto& c : classes) {
            std::vector<Integer> v(L.size());
            for (auto& x : v) x = shift(rng);
            auto moved = L.B().matrix().apply(v);
            auto l = c.representative;
            for (int i = 0; i < L.size(); ++i) l[i] += 2 * moved[i];
            CHECK(canonical_class(L, l).key == c.key);
            // a^T B^{-1} l mod 1 does not depend on the representative of l
            for (auto& a : L.homology_elements()) {
                std::vector<Rational> ar(a.begin(), a.end()), l0(c.representative.begin(), c.representative.end()),
                    l1(l.begin(), l.end());
                auto b0 = L.B().inverse().apply(l0);
                auto b1 = L.B().inverse().apply(l1);
                Rational x0 = 0, x1 = 0;
                for (int i = 0; i < L.size(); ++i) {
                    x0 += ar[i] * b0[i];
                    x1 += ar[i] * b1[i];
                }
                CHECK(frac(x0 - x1) == 0);
            }
        }
    }
}
