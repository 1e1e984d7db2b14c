#include <doctest.h>

#include <set>

#include "pmap/io.hpp"
#include "pmap/map.hpp"
#include "pmap/oracle.hpp"
#include "pmap/stats.hpp"

using namespace pmap;

namespace {

LabelledForest make_lf(Forest f, std::vector<std::int64_t> labels1based) {
    LabelledForest lf{std::move(f), {}};
    lf.labels.assign(lf.forest.size() + 1, 0);
    for (std::size_t i = 0; i < labels1based.size(); ++i) lf.labels[i + 1] = labels1based[i];
    REQUIRE(valid_labelling(lf));
    return lf;
}

}  // namespace

TEST_CASE("phi descends along last children") {
    // roots 1, 2; vertex 2 has children 3 and 5; vertex 3 has child 4
    Forest f({0, 0, 0, 2, 3, 2}, {0, 0, 2, 1, 0, 0}, 2);
    CHECK(phi_leaf(f, 1) == 1);
    CHECK(phi_leaf(f, 2) == 5);  // last child of 2 is 5, a leaf
    CHECK(phi_leaf(f, 3) == 4);
    CHECK(phi_leaf(f, 4) == 4);
    CHECK_THROWS_AS(phi_leaf(f, 9), std::invalid_argument);

    SUBCASE("matches brute-force descent") {
        Rng rng(77);
        const DegreeSequence ds({{0, 7}, {1, 1}, {2, 2}, {3, 1}}, 3);
        for (int rep = 0; rep < 30; ++rep) {
            const Forest g = sample_forest(ds, rng);
            for (std::uint32_t x = 1; x <= g.size(); ++x) {
                std::uint32_t v = x;
                while (!g.is_leaf(v)) v = g.child(v, g.child_count(v));
                CHECK(phi_leaf(g, x) == v);
            }
        }
    }
}

TEST_CASE("single-edge map") {
    const LabelledForest lf = make_lf(Forest({0, 0}, {0, 0}, 1), {0});
    const PointedMap pm = forest_to_map(lf);
    CHECK(pm.negative);
    CHECK(pm.map.edges() == 1);
    CHECK(pm.map.n_vertices == 2);
    CHECK(validate_map(pm.map, FaceDegreeSequence({}, 1)).empty());
    const auto dist = bfs_distances(pm.map, pm.map.star);
    CHECK(dist[pm.map.star] == 0);
    CHECK(dist[0] == 1);
    CHECK(verify_distance_law(lf, pm).ok());
}

TEST_CASE("one-quadrangle maps: all three labellings") {
    const Forest f({0, 0, 1, 1}, {0, 2, 0, 0}, 1);
    const FaceDegreeSequence fds({{2, 1}}, 1);
    std::set<std::string> codes;
    for (std::int64_t a : {-1, 0, 1}) {
        const LabelledForest lf = make_lf(f, {0, a, 0});
        const PointedMap pm = forest_to_map(lf);
        const auto bad = validate_map(pm.map, fds);
        for (const auto& msg : bad) FAIL_CHECK(msg);
        CHECK(verify_distance_law(lf, pm).ok());
        codes.insert(canonical_code(pm));
        // star is adjacent only to min-label vertices
        const auto dist = bfs_distances(pm.map, pm.map.star);
        for (std::uint32_t v = 0; v < pm.map.n_vertices; ++v) {
            if (v == pm.map.star) continue;
            CHECK(dist[v] >= 1);
        }
        // root orientation is negative: origin one step farther than target
        CHECK(dist[pm.map.origin[pm.map.root]] == dist[pm.map.target(pm.map.root)] + 1);
    }
    CHECK(codes.size() == 3);  // injective on this labelled set
}

TEST_CASE("bijection contract on small enumerated sets") {
    const std::vector<FaceDegreeSequence> cases = {
        FaceDegreeSequence({}, 1),        FaceDegreeSequence({}, 2),
        FaceDegreeSequence({{1, 1}}, 1),  FaceDegreeSequence({{2, 1}}, 1),
        FaceDegreeSequence({{1, 2}}, 1),  FaceDegreeSequence({{2, 1}}, 2),
        FaceDegreeSequence({{1, 1}, {2, 1}}, 1),
        FaceDegreeSequence({{3, 1}}, 3),
    };
    for (const auto& fds : cases) {
        const DegreeSequence ds = face_to_forest_degrees(fds);
        std::set<std::string> codes;
        std::uint64_t total = 0;
        enumerate_labelled_forests(ds, {}, [&](const LabelledForest& lf) {
            ++total;
            const PointedMap pm = forest_to_map(lf);
            const auto bad = validate_map(pm.map, fds);
            for (const auto& msg : bad) FAIL_CHECK(msg << " at labelled forest " << total);
            CHECK(verify_distance_law(lf, pm).ok());
            codes.insert(canonical_code(pm));
        });
        CHECK(total == count_labelled_forests(ds).get_ui());
        CHECK(codes.size() == total);  // injectivity
    }
}

TEST_CASE("rerooting yields exactly rho negative boundary darts") {
    Rng rng(101);
    const FaceDegreeSequence fds({{2, 3}, {3, 1}}, 3);
    const DegreeSequence ds = face_to_forest_degrees(fds);
    for (int rep = 0; rep < 25; ++rep) {
        const LabelledForest lf = sample_labelled_forest(ds, rng);
        const PointedMap pm = forest_to_map(lf);
        const FaceSet fs = face_orbits(pm.map);
        const std::uint32_t boundary = fs.face_of[pm.map.root];
        CHECK(fs.degree[boundary] == 2 * fds.rho());
        const auto dist = bfs_distances(pm.map, pm.map.star);
        std::uint64_t negative = 0, positive = 0;
        for (std::uint32_t h = 0; h < pm.map.darts(); ++h) {
            if (fs.face_of[h] != boundary) continue;
            if (dist[pm.map.origin[h]] == dist[pm.map.target(h)] + 1)
                ++negative;
            else
                ++positive;
        }
        CHECK(negative == fds.rho());
        CHECK(positive == fds.rho());

        const PointedMap rerooted = reroot_uniform_negative(pm.map, rng);
        CHECK(fs.face_of[rerooted.map.root] == boundary);
        CHECK(dist[rerooted.map.origin[rerooted.map.root]] ==
              dist[rerooted.map.target(rerooted.map.root)] + 1);
    }
    SUBCASE("fixed seed determinism") {
        Rng r1(5), r2(5);
        const LabelledForest lf = sample_labelled_forest(ds, r1);
        const LabelledForest lf2 = sample_labelled_forest(ds, r2);
        const PointedMap a = reroot_uniform_negative(forest_to_map(lf).map, r1);
        const PointedMap b = reroot_uniform_negative(forest_to_map(lf2).map, r2);
        CHECK(a.map.root == b.map.root);
    }
}

TEST_CASE("canonical codes are stable and discriminating") {
    Rng rng(55);
    const FaceDegreeSequence fds({{2, 2}}, 1);
    const DegreeSequence ds = face_to_forest_degrees(fds);
    const LabelledForest lf = sample_labelled_forest(ds, rng);
    const PointedMap pm = forest_to_map(lf);
    CHECK(canonical_code(pm) == canonical_code(pm));

    // serialization round trip preserves the code
    const PlanarMap back = map_from_json(to_json(pm.map));
    CHECK(canonical_code(PointedMap{back, true}) == canonical_code(pm));
}

TEST_CASE("triangle inequality on sampled maps") {
    Rng rng(202);
    const FaceDegreeSequence fds({{2, 20}}, 1);
    const DegreeSequence ds = face_to_forest_degrees(fds);
    const PointedMap pm = forest_to_map(sample_labelled_forest(ds, rng));
    const std::uint32_t n = pm.map.n_vertices;
    std::vector<std::vector<std::uint32_t>> d;
    for (std::uint32_t v = 0; v < n; ++v) d.push_back(bfs_distances(pm.map, v));
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint32_t a = static_cast<std::uint32_t>(rng.below(n));
        const std::uint32_t b = static_cast<std::uint32_t>(rng.below(n));
        const std::uint32_t c = static_cast<std::uint32_t>(rng.below(n));
        CHECK(d[a][c] <= d[a][b] + d[b][c]);
        CHECK(d[a][b] == d[b][a]);
    }
    // adjacent vertices differ by exactly one in star-distance (bipartite)
    const auto dist = bfs_distances(pm.map, pm.map.star);
    for (std::uint32_t h = 0; h < pm.map.darts(); ++h) {
        const std::int64_t diff = static_cast<std::int64_t>(dist[pm.map.origin[h]]) -
                                  static_cast<std::int64_t>(dist[pm.map.target(h)]);
        CHECK((diff == 1 || diff == -1));
    }
}
