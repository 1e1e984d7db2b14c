#include <doctest.h>

#include "pmap/forest.hpp"
#include "pmap/oracle.hpp"
#include "pmap/rng.hpp"
#include "pmap/sampler.hpp"

using namespace pmap;

namespace {

// The 16-vertex, 4-tree example forest used across the suite:
// trees: {1}, {2}, {3:(4:(5:(6,7,8,9)),10)}, {11:(12:(13,14,15),16)}
Forest example_forest() {
    std::vector<std::uint32_t> parent = {0, 0, 0, 0, 3, 4, 5, 5, 5, 5, 3, 0, 11, 12, 12, 12, 11};
    std::vector<std::uint32_t> k = {0, 0, 0, 2, 1, 4, 0, 0, 0, 0, 0, 2, 3, 0, 0, 0, 0};
    return Forest(std::move(parent), std::move(k), 4);
}

}  // namespace

TEST_CASE("lukasiewicz path of the example forest") {
    const Forest f = example_forest();
    const LukasiewiczPath w = forest_to_lukasiewicz(f);
    const std::vector<std::int64_t> expected = {0,  -1, -2, -1, -1, 2,  1,  0, -1,
                                                -2, -3, -2, 0,  -1, -2, -3, -4};
    CHECK(w.values == expected);
    CHECK(w.values[16] == -4);
    CHECK(!check_lukasiewicz(w.values, 4).has_value());
}

TEST_CASE("simple encodings") {
    SUBCASE("root with two leaves") {
        Forest f({0, 0, 1, 1}, {0, 2, 0, 0}, 1);
        CHECK(forest_to_lukasiewicz(f).values == std::vector<std::int64_t>{0, 1, 0, -1});
        CHECK(height_process(f).values == std::vector<std::uint32_t>{0, 1, 1});
    }
    SUBCASE("two single-vertex trees") {
        Forest f({0, 0, 0}, {0, 0, 0}, 2);
        CHECK(forest_to_lukasiewicz(f).values == std::vector<std::int64_t>{0, -1, -2});
        CHECK(height_process(f).values == std::vector<std::uint32_t>{0, 0});
    }
}

TEST_CASE("decoding identifies malformed paths") {
    LukasiewiczPath w;
    w.rho = 1;
    w.values = {0, 1, -1, -1};  // jump -2 at index 2
    CHECK_THROWS_AS(lukasiewicz_to_forest(w), std::invalid_argument);
    auto defect = check_lukasiewicz(w.values, 1);
    REQUIRE(defect.has_value());
    CHECK(defect->index == 2);

    w.values = {0, -1, 0, -1};  // hits -rho early
    defect = check_lukasiewicz(w.values, 1);
    REQUIRE(defect.has_value());
    CHECK(defect->index == 1);

    w.values = {0, 1, 0, 0};  // wrong terminal value
    defect = check_lukasiewicz(w.values, 1);
    REQUIRE(defect.has_value());
    CHECK(defect->index == 3);
}

TEST_CASE("round trip on decoded paths and random forests") {
    SUBCASE("decode then encode") {
        LukasiewiczPath w;
        w.rho = 1;
        w.values = {0, 1, 0, -1};
        CHECK(forest_to_lukasiewicz(lukasiewicz_to_forest(w)).values == w.values);
        w.rho = 2;
        w.values = {0, -1, -2};
        CHECK(forest_to_lukasiewicz(lukasiewicz_to_forest(w)).values == w.values);
    }
    SUBCASE("random round trips") {
        Rng rng(12345);
        const DegreeSequence ds({{0, 7}, {1, 2}, {2, 2}, {3, 1}}, 2);
        for (int i = 0; i < 200; ++i) {
            const Forest f = sample_forest(ds, rng);
            const LukasiewiczPath w = forest_to_lukasiewicz(f);
            const Forest f2 = lukasiewicz_to_forest(w);
            CHECK(f.parents() == f2.parents());
            CHECK(f.child_counts() == f2.child_counts());
        }
    }
}

TEST_CASE("height process of the example forest") {
    const Forest f = example_forest();
    const std::vector<std::uint32_t> expected = {0, 0, 0, 1, 2, 3, 3, 3, 3, 1, 0, 1, 2, 2, 2, 1};
    CHECK(height_process(f).values == expected);
}

TEST_CASE("branching counts against the path formula and brute force") {
    const Forest f = example_forest();
    SUBCASE("the worked example: vertex 8 has R = 2") {
        CHECK(lr_counts(f, 8).right == 2);
    }
    SUBCASE("tree roots have no ancestral line") {
        for (std::uint32_t v : {1u, 2u, 3u, 11u}) {
            const LRCounts c = lr_counts(f, v);
            CHECK(c.left == 0);
            CHECK(c.right == 0);
            CHECK(c.lr == 0);
        }
    }
    SUBCASE("R equals the prefix-min formula on random forests") {
        Rng rng(99);
        const DegreeSequence ds({{0, 8}, {1, 1}, {2, 3}, {4, 1}}, 2);
        for (int rep = 0; rep < 50; ++rep) {
            const Forest g = sample_forest(ds, rng);
            const LukasiewiczPath w = forest_to_lukasiewicz(g);
            for (std::uint32_t x = 1; x <= g.size(); ++x) {
                std::int64_t prefix_min = 0;
                for (std::uint32_t i = 0; i < x; ++i)
                    prefix_min = std::min(prefix_min, w.values[i]);
                CHECK(static_cast<std::int64_t>(lr_counts(g, x).right) ==
                      w.values[x - 1] - prefix_min);
            }
        }
    }
    SUBCASE("L and R match a brute-force ancestral scan") {
        Rng rng(7);
        const DegreeSequence ds({{0, 6}, {2, 2}, {3, 1}}, 2);
        for (int rep = 0; rep < 40; ++rep) {
            const Forest g = sample_forest(ds, rng);
            for (std::uint32_t x = 1; x <= g.size(); ++x) {
                std::uint64_t left = 0, right = 0;
                // ancestors of x
                std::vector<bool> is_anc(g.size() + 1, false);
                for (std::uint32_t a = x; !g.is_root(a);) {
                    a = g.parent(a);
                    is_anc[a] = true;
                }
                for (std::uint32_t y = 1; y <= g.size(); ++y) {
                    if (y == x || is_anc[y] || g.is_root(y)) continue;
                    if (is_anc[g.parent(y)]) (y < x ? left : right)++;
                }
                const LRCounts c = lr_counts(g, x);
                CHECK(c.left == left);
                CHECK(c.right == right);
            }
        }
    }
}

TEST_CASE("jump counting and its inverse") {
    LukasiewiczPath w;
    w.rho = 1;
    w.values = {0, 1, 0, -1};
    SUBCASE("examples") {
        CHECK(lambda_jumps(w, {-1}, 3.0) == 2);
        CHECK(lambda_jumps(w, {}, 3.0) == 0);
        CHECK(lambda_jumps(w, {-1, 0, 1}, 3.0) == 3);
        CHECK(zeta_jumps(w, {-1}, 1.0) == 2);
        CHECK_THROWS_AS(zeta_jumps(w, {0}, 1.0), std::invalid_argument);
        CHECK_THROWS_AS(lambda_jumps(w, {-1}, 5.0), std::invalid_argument);
    }
    SUBCASE("inverse identity on random paths") {
        Rng rng(31);
        const DegreeSequence ds({{0, 9}, {1, 3}, {2, 2}, {5, 1}}, 5);
        const std::vector<std::int64_t> A = {-1, 1};
        const std::uint64_t total = ds.count(0) + ds.count(2);
        for (int rep = 0; rep < 30; ++rep) {
            const LukasiewiczPath w2 = forest_to_lukasiewicz(sample_forest(ds, rng));
            CHECK(lambda_jumps(w2, A, static_cast<double>(w2.size())) == total);
            for (std::uint64_t p = 1; p <= total; ++p) {
                const std::uint64_t r = zeta_jumps(w2, A, static_cast<double>(p));
                CHECK(lambda_jumps(w2, A, static_cast<double>(r)) == p);
                // inf property: one step earlier the count is below p
                CHECK(lambda_jumps(w2, A, static_cast<double>(r - 1)) == p - 1);
            }
        }
    }
}

TEST_CASE("lemma-1 identities hold on encoded forests") {
    CHECK(lemma1_check(example_forest()).ok());
    Forest tiny({0, 0, 1, 1}, {0, 2, 0, 0}, 1);
    CHECK(lemma1_check(tiny).ok());

    Rng rng(5);
    const DegreeSequence ds({{0, 8}, {2, 2}, {4, 1}}, 3);
    for (int rep = 0; rep < 50; ++rep) {
        const Lemma1Report r = lemma1_check(sample_forest(ds, rng));
        CHECK(r.ok());
        CHECK(r.pairs_checked > 0);
    }
}
